#pragma once

#include <utility>
#include <vector>

#include "evospike/encoding.hpp"
#include "evospike/genome.hpp"
#include "evospike/izhikevich.hpp"
#include "evospike/plasticity.hpp"

namespace evospike::snn {

/// Everything the phenotype needs besides the genome: neuron model, input
/// encoders, substep scheme and decode/rate windows.
struct SnnConfig {
    IzhikevichParams neuron;
    EncoderConfig enc_ez{-5.0, 5.0, 15.0};
    EncoderConfig enc_vz{-3.0, 3.0, 15.0};
    double dt_substep_ms = 1.0;
    int substeps = 20;
    double dt_control_s = 0.02;
    double decode_window_s = 0.02;
    int decode_k_max = 10;
    double rate_window_s = 0.1;
    double r_max_hz = 100.0;  // notional rate scale for non-spiking endpoints
    HebbianRule base_rule;    // a± and tau±; k terms come from the genes
};

struct TopoNode {
    int id = 0;
    neat::NodeLayer layer = neat::NodeLayer::Hidden;
    neat::NodeKind kind = neat::NodeKind::Spiking;
};

struct TopoConn {
    int innovation = 0;
    int from = 0;  // dense node index
    int to = 0;    // dense node index
    double weight = 0.0;
    bool recurrent = false;
    HebbianRule rule;
};

/// Immutable phenotype structure; disabled genes are excluded.
struct NetworkTopology {
    std::vector<TopoNode> nodes;
    std::vector<TopoConn> conns;
    std::vector<int> hidden;                   // node indices of spiking neurons
    std::vector<std::vector<int>> incoming;    // conn indices per node index
    int ez_index = -1;
    int vz_index = -1;
    int bias_index = -1;
    int output_index = -1;

    int index_of(int node_id) const;
};

/// Mutable evaluation state: one owner per episode.
struct NetworkState {
    std::vector<NeuronState> neurons;   // parallel to topology.hidden
    std::vector<double> live_weights;   // parallel to topology.conns
    std::vector<double> activations;    // parallel to topology.nodes
    std::vector<double> currents;       // scratch, parallel to topology.hidden
    std::vector<double> rates;          // scratch, parallel to topology.nodes
    double thrust = 0.0;
};

std::pair<NetworkTopology, NetworkState> build_network(const neat::Genome& genome,
                                                       const SnnConfig& cfg);

/// One 0.02 s control step: encode inputs, run the spiking substeps, decode,
/// form the thrust command in [0, 1] and (optionally) apply the Hebbian rule
/// to every live connection.
double network_step(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg,
                    double e_z, double v_z, bool plastic);

/// Fresh-episode semantics: membranes to rest, spike windows cleared, live
/// weights re-initialized from the genome weights. Idempotent.
void reset_network(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg);

/// Clears neural dynamics but keeps live weights: used between consecutive
/// adaptation episodes where the learned weights carry over.
void reset_dynamics(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg);

} // namespace evospike::snn
