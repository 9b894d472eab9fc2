#pragma once

#include <map>
#include <utility>

#include "evospike/genome.hpp"
#include "evospike/rng.hpp"

namespace evospike::neat {

/// Global innovation bookkeeping. The same structural change (keyed by its
/// endpoints) always maps to the same innovation id within a run, so equal
/// topologies carry equal historical markings.
class InnovationRegistry {
public:
    struct NodeSplit {
        int node_id = 0;
        int in_innovation = 0;
        int out_innovation = 0;
    };

    /// Innovation id for a (from, to) connection; allocates on first use.
    int connection(int from, int to);

    /// Node id and in/out connection innovations for splitting (from, to);
    /// allocates all three on first use.
    NodeSplit node_split(int from, int to);

    int peek_next_innovation() const { return next_innovation_; }
    int peek_next_node_id() const { return next_node_id_; }

    void reserve_node_ids(int first_free) {
        if (first_free > next_node_id_) next_node_id_ = first_free;
    }

private:
    std::map<std::pair<int, int>, int> conns_;
    std::map<std::pair<int, int>, NodeSplit> splits_;
    int next_innovation_ = 1;
    int next_node_id_ = 1;
};

/// Node ids of the fixed interface nodes. Inputs and the linear output are
/// never added or removed by evolution.
struct FixedNodeIds {
    static constexpr int ez_input = 1;
    static constexpr int vz_input = 2;
    static constexpr int bias = 3;
    static constexpr int output = 4;
    static constexpr int first_hidden = 5;
};

/// Fully feed-forward-connected 2-4-1 genome plus bias, with weights uniform
/// in [-1, 1] and Hebbian (k_m, k_c) uniform in their bounds. All callers
/// sharing one registry get identical innovation numbering.
Genome make_initial_genome(InnovationRegistry& registry, Rng& rng, std::uint64_t genome_id,
                           double km_bound = 2.0, double kc_bound = 50.0);

} // namespace evospike::neat
