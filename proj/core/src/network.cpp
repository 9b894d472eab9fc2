#include "evospike/network.hpp"

#include <algorithm>
#include <cmath>

#include "evospike/errors.hpp"

namespace evospike::snn {

int NetworkTopology::index_of(int node_id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == node_id) return static_cast<int>(i);
    }
    return -1;
}

std::pair<NetworkTopology, NetworkState> build_network(const neat::Genome& genome,
                                                       const SnnConfig& cfg) {
    neat::validate(genome);

    NetworkTopology topo;
    topo.nodes.reserve(genome.nodes.size());
    int input_seen = 0;
    for (const auto& n : genome.nodes) {
        const int idx = static_cast<int>(topo.nodes.size());
        topo.nodes.push_back({n.id, n.layer, n.kind});
        switch (n.layer) {
            case neat::NodeLayer::Input:
                // Node-id order fixes the interface: first encoder takes e_z,
                // second takes v_z.
                (input_seen++ == 0 ? topo.ez_index : topo.vz_index) = idx;
                break;
            case neat::NodeLayer::Bias:
                topo.bias_index = idx;
                break;
            case neat::NodeLayer::Output:
                topo.output_index = idx;
                break;
            case neat::NodeLayer::Hidden:
                topo.hidden.push_back(idx);
                break;
        }
    }
    if (input_seen != 2 || topo.output_index < 0 || topo.bias_index < 0) {
        throw StructureError("network needs two encoder inputs, one bias and one output node");
    }

    topo.incoming.assign(topo.nodes.size(), {});
    for (const auto& gene : genome.conns) {
        if (!gene.enabled) continue;
        TopoConn c;
        c.innovation = gene.innovation;
        c.from = topo.index_of(gene.from);
        c.to = topo.index_of(gene.to);
        c.weight = gene.weight;
        c.recurrent = gene.recurrent;
        c.rule = cfg.base_rule;
        c.rule.k_m = gene.k_m;
        c.rule.k_c = gene.k_c;
        topo.incoming[c.to].push_back(static_cast<int>(topo.conns.size()));
        topo.conns.push_back(c);
    }

    NetworkState state;
    reset_network(state, topo, cfg);
    return {std::move(topo), std::move(state)};
}

void reset_network(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg) {
    reset_dynamics(state, topo, cfg);
    state.live_weights.resize(topo.conns.size());
    for (std::size_t i = 0; i < topo.conns.size(); ++i) {
        state.live_weights[i] = topo.conns[i].weight;
    }
}

void reset_dynamics(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg) {
    state.neurons.assign(topo.hidden.size(), NeuronState::resting(cfg.neuron));
    state.activations.assign(topo.nodes.size(), 0.0);
    state.activations[topo.bias_index] = 1.0;
    state.currents.assign(topo.hidden.size(), 0.0);
    state.rates.assign(topo.nodes.size(), 0.0);
    state.thrust = 0.0;
    if (state.live_weights.size() != topo.conns.size()) {
        state.live_weights.resize(topo.conns.size());
        for (std::size_t i = 0; i < topo.conns.size(); ++i) {
            state.live_weights[i] = topo.conns[i].weight;
        }
    }
}

double network_step(NetworkState& state, const NetworkTopology& topo, const SnnConfig& cfg,
                    double e_z, double v_z, bool plastic) {
    if (!std::isfinite(e_z) || !std::isfinite(v_z)) {
        throw NumericError("network_step: non-finite input");
    }

    const double i_ez = encode_current(e_z, cfg.enc_ez);
    const double i_vz = encode_current(v_z, cfg.enc_vz);
    state.activations[topo.ez_index] = i_ez / cfg.enc_ez.i_max;
    state.activations[topo.vz_index] = i_vz / cfg.enc_vz.i_max;
    state.activations[topo.bias_index] = 1.0;

    const double i_max = cfg.enc_ez.i_max;
    for (int sub = 0; sub < cfg.substeps; ++sub) {
        // Gather all synaptic currents before any neuron advances, so every
        // hidden-to-hidden link sees previous-substep activations.
        for (std::size_t h = 0; h < topo.hidden.size(); ++h) {
            double drive = 0.0;
            for (int ci : topo.incoming[topo.hidden[h]]) {
                drive += state.live_weights[ci] * state.activations[topo.conns[ci].from];
            }
            state.currents[h] = i_max * drive;
        }
        for (std::size_t h = 0; h < topo.hidden.size(); ++h) {
            neuron_step(state.neurons[h], cfg.neuron, state.currents[h], cfg.dt_substep_ms);
            state.activations[topo.hidden[h]] = decode_activation(
                state.neurons[h], cfg.neuron, cfg.decode_window_s, cfg.decode_k_max);
        }
    }

    double sum = 0.0;
    for (int ci : topo.incoming[topo.output_index]) {
        sum += state.live_weights[ci] * state.activations[topo.conns[ci].from];
    }
    const double thrust = std::clamp(sum, 0.0, 1.0);
    state.thrust = thrust;
    state.activations[topo.output_index] = thrust;

    if (plastic && !topo.conns.empty()) {
        // Notional rates for every endpoint: windowed firing rate for spiking
        // neurons, activation-scaled r_max for encoders/bias/output.
        state.rates.assign(topo.nodes.size(), 0.0);
        for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
            state.rates[i] = state.activations[i] * cfg.r_max_hz;
        }
        for (std::size_t h = 0; h < topo.hidden.size(); ++h) {
            state.neurons[h].window_rate = window_rate(state.neurons[h], cfg.rate_window_s);
            state.rates[topo.hidden[h]] = state.neurons[h].window_rate;
        }
        for (std::size_t ci = 0; ci < topo.conns.size(); ++ci) {
            const TopoConn& c = topo.conns[ci];
            state.live_weights[ci] = hebbian_update(state.live_weights[ci], state.rates[c.from],
                                                    state.rates[c.to], c.rule, cfg.dt_control_s);
        }
    }
    return thrust;
}

} // namespace evospike::snn
