#include "dgl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dgl/error.hpp"

namespace dgl {

namespace {

std::string describe(const Edge& e) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << e.tail + 1 << ", " << e.head + 1 << ", " << e.weight << ")";
    return os.str();
}

std::vector<Node> normalised(std::span<const Node> nodes, std::size_t n, const char* what) {
    if (nodes.empty()) {
        throw ValidationError(std::string(what) + ": node set is empty");
    }
    std::vector<Node> out(nodes.begin(), nodes.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.back() >= n) {
        throw ValidationError(std::string(what) + ": node " + std::to_string(out.back() + 1) +
                              " out of range 1.." + std::to_string(n));
    }
    return out;
}

}  // namespace

Digraph::Digraph(std::size_t n) : n_(n) {
    if (n == 0) {
        throw ValidationError("digraph needs at least one node");
    }
}

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Digraph g(n);
    for (const auto& e : edges) {
        if (e.tail >= n || e.head >= n) {
            throw ValidationError("edge " + describe(e) + ": node index out of range 1.." +
                                  std::to_string(n));
        }
        if (!std::isfinite(e.weight) || e.weight == 0.0) {
            throw ValidationError("edge " + describe(e) + ": weight must be finite and nonzero");
        }
        auto [it, inserted] = g.weights_.emplace(std::pair{e.head, e.tail}, e.weight);
        if (!inserted) {
            throw ValidationError("edge " + describe(e) + ": duplicate edge");
        }
    }
    return g;
}

double Digraph::weight(Node i, Node j) const {
    auto it = weights_.find({i, j});
    return it == weights_.end() ? 0.0 : it->second;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) {
        out.push_back({key.second, key.first, w});
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.tail, a.head} < std::pair{b.tail, b.head};
    });
    return out;
}

Digraph Digraph::with_provenance(std::optional<Provenance> p) const {
    Digraph copy = *this;
    copy.provenance_ = p;
    return copy;
}

const char* to_string(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::None: return "none";
        case InteractionKind::Unidirectional: return "unidirectional";
        case InteractionKind::DigonSymmetric: return "digon_symmetric";
        case InteractionKind::DigonAsymmetric: return "digon_asymmetric";
        case InteractionKind::DigonSignAsymmetric: return "digon_sign_asymmetric";
    }
    return "unknown";
}

Matrix laplacian(const Digraph& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Matrix l = Matrix::Zero(n, n);
    for (const auto& [key, w] : g.weights()) {
        const auto i = static_cast<Eigen::Index>(key.first);
        const auto j = static_cast<Eigen::Index>(key.second);
        if (i != j) {
            l(i, j) = -w;
        }
        l(i, i) += w;
    }
    return l;
}

InteractionKind interaction_kind(const Digraph& g, Node i, Node j) {
    if (i == j) {
        throw ValidationError("interaction_kind: self-loops are not pairwise interactions");
    }
    if (i >= g.size() || j >= g.size()) {
        throw ValidationError("interaction_kind: node index out of range");
    }
    const double aij = g.weight(i, j);
    const double aji = g.weight(j, i);
    if (aij == 0.0 && aji == 0.0) return InteractionKind::None;
    if (aij == 0.0 || aji == 0.0) return InteractionKind::Unidirectional;
    if (aij * aji < 0.0) return InteractionKind::DigonSignAsymmetric;
    if (aij == aji) return InteractionKind::DigonSymmetric;
    return InteractionKind::DigonAsymmetric;
}

bool is_digon_asymmetric_broad(InteractionKind kind) {
    return kind == InteractionKind::DigonAsymmetric || kind == InteractionKind::DigonSignAsymmetric;
}

std::optional<std::pair<Node, Node>> find_digon_sign_asymmetric(const Digraph& g) {
    for (const auto& [key, w] : g.weights()) {
        const auto [i, j] = key;
        if (i < j && w * g.weight(j, i) < 0.0) {
            return std::pair{i, j};
        }
    }
    return std::nullopt;
}

bool has_digon_sign_asymmetric(const Digraph& g) {
    return find_digon_sign_asymmetric(g).has_value();
}

bool is_undirected(const Digraph& g) {
    for (const auto& [key, w] : g.weights()) {
        if (key.first != key.second && g.weight(key.second, key.first) != w) {
            return false;
        }
    }
    return true;
}

Subgraph induced_subgraph(const Digraph& g, std::span<const Node> nodes) {
    auto labels = normalised(nodes, g.size(), "induced_subgraph");
    std::vector<std::ptrdiff_t> index(g.size(), -1);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        index[labels[k]] = static_cast<std::ptrdiff_t>(k);
    }
    std::vector<Edge> kept;
    for (const auto& [key, w] : g.weights()) {
        const auto hi = index[key.first];
        const auto ti = index[key.second];
        if (hi >= 0 && ti >= 0) {
            kept.push_back({static_cast<Node>(ti), static_cast<Node>(hi), w});
        }
    }
    return {Digraph::from_edges(labels.size(), kept), std::move(labels)};
}

Matrix block_submatrix(const Matrix& l, std::span<const Node> rows, std::span<const Node> cols) {
    const auto n = static_cast<std::size_t>(l.rows());
    const auto r = normalised(rows, n, "block_submatrix rows");
    const auto c = normalised(cols, n, "block_submatrix cols");
    Matrix out(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
    for (std::size_t a = 0; a < r.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                l(static_cast<Eigen::Index>(r[a]), static_cast<Eigen::Index>(c[b]));
        }
    }
    return out;
}

std::vector<std::vector<Node>> undirected_neighbours(const Digraph& g) {
    std::vector<std::vector<Node>> adj(g.size());
    for (const auto& [key, w] : g.weights()) {
        const auto [i, j] = key;
        if (i == j) continue;
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

}  // namespace dgl
