#include "evospike/genome.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "evospike/errors.hpp"

namespace evospike::neat {

const char* to_string(NodeLayer layer) {
    switch (layer) {
        case NodeLayer::Input: return "input";
        case NodeLayer::Hidden: return "hidden";
        case NodeLayer::Output: return "output";
        case NodeLayer::Bias: return "bias";
    }
    return "?";
}

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Encoder: return "encoder";
        case NodeKind::Spiking: return "spiking";
        case NodeKind::Linear: return "linear";
        case NodeKind::Constant: return "constant";
    }
    return "?";
}

NodeLayer node_layer_from_string(const std::string& s) {
    if (s == "input") return NodeLayer::Input;
    if (s == "hidden") return NodeLayer::Hidden;
    if (s == "output") return NodeLayer::Output;
    if (s == "bias") return NodeLayer::Bias;
    throw ParseError("unknown node layer '" + s + "'", 0);
}

NodeKind node_kind_from_string(const std::string& s) {
    if (s == "encoder") return NodeKind::Encoder;
    if (s == "spiking") return NodeKind::Spiking;
    if (s == "linear") return NodeKind::Linear;
    if (s == "constant") return NodeKind::Constant;
    throw ParseError("unknown node kind '" + s + "'", 0);
}

const NodeGene* Genome::find_node(int node_id) const {
    for (const auto& n : nodes) {
        if (n.id == node_id) return &n;
    }
    return nullptr;
}

const ConnGene* Genome::find_conn(int from, int to) const {
    for (const auto& c : conns) {
        if (c.from == from && c.to == to) return &c;
    }
    return nullptr;
}

ConnGene* Genome::find_conn(int from, int to) {
    for (auto& c : conns) {
        if (c.from == from && c.to == to) return &c;
    }
    return nullptr;
}

bool Genome::has_innovation(int innovation) const {
    for (const auto& c : conns) {
        if (c.innovation == innovation) return true;
    }
    return false;
}

void Genome::sort_genes() {
    std::sort(nodes.begin(), nodes.end(),
              [](const NodeGene& a, const NodeGene& b) { return a.id < b.id; });
    std::sort(conns.begin(), conns.end(),
              [](const ConnGene& a, const ConnGene& b) { return a.innovation < b.innovation; });
}

void validate(const Genome& genome) {
    std::set<int> node_ids;
    int bias_count = 0;
    for (const auto& n : genome.nodes) {
        if (!node_ids.insert(n.id).second) {
            throw StructureError("duplicate node id " + std::to_string(n.id));
        }
        if (n.layer == NodeLayer::Bias) ++bias_count;
    }
    if (bias_count != 1) {
        throw StructureError("genome must have exactly one bias node");
    }

    std::set<int> innovations;
    std::set<std::pair<int, int>> enabled_pairs;
    for (const auto& c : genome.conns) {
        if (!innovations.insert(c.innovation).second) {
            throw StructureError("duplicate innovation id " + std::to_string(c.innovation));
        }
        const NodeGene* from = genome.find_node(c.from);
        const NodeGene* to = genome.find_node(c.to);
        if (from == nullptr || to == nullptr) {
            throw StructureError("connection " + std::to_string(c.innovation) +
                                 " references a missing node");
        }
        if (to->layer == NodeLayer::Input || to->layer == NodeLayer::Bias) {
            throw StructureError("input/bias nodes cannot have incoming connections");
        }
        const bool hidden_to_hidden =
            from->layer == NodeLayer::Hidden && to->layer == NodeLayer::Hidden;
        if (c.recurrent && !hidden_to_hidden) {
            throw StructureError("recurrent connections are only allowed between hidden nodes");
        }
        if (!std::isfinite(c.weight) || c.weight < -1.0 || c.weight > 1.0) {
            throw StructureError("connection weight out of [-1, 1]");
        }
        if (c.enabled && !enabled_pairs.insert({c.from, c.to}).second) {
            throw StructureError("duplicate enabled connection " + std::to_string(c.from) + "->" +
                                 std::to_string(c.to));
        }
    }
}

} // namespace evospike::neat
