#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dgl {

/// 0-based node index. Files and reports print node + 1.
using Node = std::size_t;

using Matrix = Eigen::MatrixXd;

/// Directed edge tail -> head. Stored in the graph as a_{head,tail} = weight,
/// i.e. the head node receives information from the tail node.
struct Edge {
    Node tail{};
    Node head{};
    double weight{};

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Construction record carried by graphs produced by the multilayer builders.
/// It survives file round trips so the classifier can recognise a DCID graph.
struct Provenance {
    enum class Kind { Dcid, Compose };
    Kind kind{Kind::Dcid};
    /// Layer count for Dcid, |V1| for Compose.
    std::size_t parameter{};

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Weighted digraph with self-loops and signed weights.
///
/// Weights are keyed by (receiver, sender): weight(i, j) is a_ij, nonzero iff
/// there is an edge from j to i. Absent pairs are zero. Immutable once built.
class Digraph {
public:
    using WeightMap = std::map<std::pair<Node, Node>, double>;

    /// Edgeless graph on n >= 1 nodes.
    explicit Digraph(std::size_t n);

    /// Throws ValidationError naming the offending triple on out-of-range
    /// nodes, zero or non-finite weights, and duplicate (tail, head) pairs.
    static Digraph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return n_; }
    double weight(Node i, Node j) const;
    const WeightMap& weights() const noexcept { return weights_; }
    std::size_t edge_count() const noexcept { return weights_.size(); }

    /// Edge list ordered by (tail, head).
    std::vector<Edge> edges() const;

    const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
    Digraph with_provenance(std::optional<Provenance> p) const;

    /// Same node count and identical weights; provenance is ignored.
    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    std::size_t n_;
    WeightMap weights_;
    std::optional<Provenance> provenance_;
};

enum class InteractionKind {
    None,
    Unidirectional,
    DigonSymmetric,
    DigonAsymmetric,
    DigonSignAsymmetric,
};

const char* to_string(InteractionKind kind);

/// L_ij = -a_ij off the diagonal, L_ii = sum_j a_ij including the self-loop a_ii.
Matrix laplacian(const Digraph& g);

/// Throws ValidationError when i == j or either index is out of range.
InteractionKind interaction_kind(const Digraph& g, Node i, Node j);

/// Digon whose two weights differ, sign-asymmetric digons included.
bool is_digon_asymmetric_broad(InteractionKind kind);

bool has_digon_sign_asymmetric(const Digraph& g);

/// First sign-asymmetric pair (i < j) in index order, if any.
std::optional<std::pair<Node, Node>> find_digon_sign_asymmetric(const Digraph& g);

/// a_ij == a_ji for every i != j. Self-loops are ignored.
bool is_undirected(const Digraph& g);

struct Subgraph {
    Digraph graph;
    /// labels[k] is the node of the parent graph that became node k.
    std::vector<Node> labels;
};

/// Induced subgraph on `nodes` (deduplicated, relabelled in ascending order).
/// Keeps self-loops of members. Throws ValidationError on an empty or
/// out-of-range set.
Subgraph induced_subgraph(const Digraph& g, std::span<const Node> nodes);

/// Entries L(i, j) for i in rows, j in cols, taken in ascending index order.
Matrix block_submatrix(const Matrix& l, std::span<const Node> rows, std::span<const Node> cols);

/// Undirected version: i ~ j iff a_ij != 0 or a_ji != 0 (i != j).
std::vector<std::vector<Node>> undirected_neighbours(const Digraph& g);

}  // namespace dgl
