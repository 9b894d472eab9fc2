#include "evospike/innovation.hpp"

namespace evospike::neat {

int InnovationRegistry::connection(int from, int to) {
    const auto key = std::make_pair(from, to);
    auto it = conns_.find(key);
    if (it != conns_.end()) return it->second;
    const int id = next_innovation_++;
    conns_.emplace(key, id);
    return id;
}

InnovationRegistry::NodeSplit InnovationRegistry::node_split(int from, int to) {
    const auto key = std::make_pair(from, to);
    auto it = splits_.find(key);
    if (it != splits_.end()) return it->second;
    NodeSplit split;
    split.node_id = next_node_id_++;
    split.in_innovation = connection(from, split.node_id);
    split.out_innovation = connection(split.node_id, to);
    splits_.emplace(key, split);
    return split;
}

Genome make_initial_genome(InnovationRegistry& registry, Rng& rng, std::uint64_t genome_id,
                           double km_bound, double kc_bound) {
    constexpr int n_hidden = 4;
    Genome g;
    g.id = genome_id;
    g.nodes.push_back({FixedNodeIds::ez_input, NodeLayer::Input, NodeKind::Encoder});
    g.nodes.push_back({FixedNodeIds::vz_input, NodeLayer::Input, NodeKind::Encoder});
    g.nodes.push_back({FixedNodeIds::bias, NodeLayer::Bias, NodeKind::Constant});
    g.nodes.push_back({FixedNodeIds::output, NodeLayer::Output, NodeKind::Linear});
    for (int h = 0; h < n_hidden; ++h) {
        g.nodes.push_back({FixedNodeIds::first_hidden + h, NodeLayer::Hidden, NodeKind::Spiking});
    }
    registry.reserve_node_ids(FixedNodeIds::first_hidden + n_hidden);

    auto add_conn = [&](int from, int to) {
        ConnGene c;
        c.innovation = registry.connection(from, to);
        c.from = from;
        c.to = to;
        c.weight = rng.uniform(-1.0, 1.0);
        c.enabled = true;
        c.recurrent = false;
        c.k_m = rng.uniform(-km_bound, km_bound);
        c.k_c = rng.uniform(-kc_bound, kc_bound);
        g.conns.push_back(c);
    };

    for (int input : {FixedNodeIds::ez_input, FixedNodeIds::vz_input}) {
        for (int h = 0; h < n_hidden; ++h) add_conn(input, FixedNodeIds::first_hidden + h);
    }
    for (int h = 0; h < n_hidden; ++h) add_conn(FixedNodeIds::first_hidden + h, FixedNodeIds::output);
    for (int h = 0; h < n_hidden; ++h) add_conn(FixedNodeIds::bias, FixedNodeIds::first_hidden + h);
    add_conn(FixedNodeIds::bias, FixedNodeIds::output);

    g.sort_genes();
    return g;
}

} // namespace evospike::neat
