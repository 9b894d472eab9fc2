#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evospike::neat {

enum class NodeLayer { Input, Hidden, Output, Bias };
enum class NodeKind { Encoder, Spiking, Linear, Constant };

const char* to_string(NodeLayer layer);
const char* to_string(NodeKind kind);
NodeLayer node_layer_from_string(const std::string& s);
NodeKind node_kind_from_string(const std::string& s);

struct NodeGene {
    int id = 0;
    NodeLayer layer = NodeLayer::Hidden;
    NodeKind kind = NodeKind::Spiking;

    bool operator==(const NodeGene&) const = default;
};

struct ConnGene {
    int innovation = 0;
    int from = 0;
    int to = 0;
    double weight = 0.0;
    bool enabled = true;
    bool recurrent = false;
    double k_m = 0.0;  // evolvable Hebbian magnitude term
    double k_c = 0.0;  // evolvable Hebbian correlation term (Hz)

    bool operator==(const ConnGene&) const = default;
};

/// Evolvable network description. Node genes are kept sorted by id and
/// connection genes by innovation number.
struct Genome {
    std::uint64_t id = 0;
    std::vector<NodeGene> nodes;
    std::vector<ConnGene> conns;
    double fitness = 0.0;
    bool feasible = false;

    bool operator==(const Genome&) const = default;

    const NodeGene* find_node(int node_id) const;
    const ConnGene* find_conn(int from, int to) const;
    ConnGene* find_conn(int from, int to);
    bool has_innovation(int innovation) const;

    /// Structural size used for ranking tie-breaks: number of connection genes.
    std::size_t size() const { return conns.size(); }

    void sort_genes();
};

/// Structural sanity checks; throws StructureError on violation.
void validate(const Genome& genome);

} // namespace evospike::neat
