#include "dgl/multilayer.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "dgl/classifier.hpp"
#include "dgl/error.hpp"
#include "dgl/spectra.hpp"

namespace dgl {

namespace {

void check_cross(const std::vector<CrossEdge>& edges, std::size_t from_n, std::size_t to_n,
                 const char* name) {
    std::set<std::pair<Node, Node>> seen;
    for (const auto& e : edges) {
        const std::string where = std::string(name) + " edge (" + std::to_string(e.tail + 1) +
                                  ", " + std::to_string(e.head + 1) + ")";
        if (e.tail >= from_n || e.head >= to_n) {
            throw ValidationError(where + ": endpoint out of range");
        }
        if (!std::isfinite(e.weight) || e.weight == 0.0) {
            throw ValidationError(where + ": weight must be finite and nonzero");
        }
        if (!seen.emplace(e.tail, e.head).second) {
            throw ValidationError(where + ": duplicate edge");
        }
    }
}

}  // namespace

Composition compose(const Digraph& g1, const Digraph& g2, std::vector<CrossEdge> e12,
                    std::vector<CrossEdge> e21) {
    const std::size_t n1 = g1.size();
    const std::size_t n2 = g2.size();
    check_cross(e12, n1, n2, "e12");
    check_cross(e21, n2, n1, "e21");

    std::vector<Edge> edges;
    for (const auto& e : g1.edges()) edges.push_back(e);
    for (const auto& e : g2.edges()) edges.push_back({e.tail + n1, e.head + n1, e.weight});
    for (const auto& e : e12) edges.push_back({e.tail, e.head + n1, e.weight});
    for (const auto& e : e21) edges.push_back({e.tail + n1, e.head, e.weight});

    auto result = Digraph::from_edges(n1 + n2, edges)
                      .with_provenance(Provenance{Provenance::Kind::Compose, n1});
    return {g1, g2, std::move(e12), std::move(e21), std::move(result)};
}

Digraph augmented_v1_block(const Composition& c) {
    std::map<Node, double> loops;
    for (const auto& [key, w] : c.g1.weights()) {
        if (key.first == key.second) loops[key.first] += w;
    }
    for (const auto& e : c.e21) loops[e.head] += e.weight;

    std::vector<Edge> edges;
    for (const auto& e : c.g1.edges()) {
        if (e.tail != e.head) edges.push_back(e);
    }
    for (const auto& [v, w] : loops) {
        if (w != 0.0) edges.push_back({v, v, w});
    }
    return Digraph::from_edges(c.g1.size(), edges);
}

const char* to_string(Realness r) {
    switch (r) {
        case Realness::CertifiedReal: return "certified_real";
        case Realness::NumericallyReal: return "numerically_real";
        case Realness::Complex: return "complex";
    }
    return "unknown";
}

Realness g2_realness(const Composition& c) {
    if (check_theorem1(c.g2).holds) return Realness::CertifiedReal;
    return spectral_report(c.g2).is_real ? Realness::NumericallyReal : Realness::Complex;
}

bool corollary2_applies(const Composition& c) {
    if (!c.e12.empty()) return false;
    if (!check_theorem1(augmented_v1_block(c)).holds) return false;
    return g2_realness(c) != Realness::Complex;
}

bool corollary3_applies(const Composition& c) {
    if (!c.e12.empty()) return false;
    return g2_realness(c) == Realness::Complex;
}

Digraph build_udcec(std::size_t n, std::size_t m) {
    if (m < 3 || m > n) {
        throw ValidationError("build_udcec: requires 3 <= m <= n");
    }
    // Cycle pairs keep one direction: {k, k+1} only k+1 -> k, {m, 1} only 1 -> m.
    auto kept_one_way = [m](Node tail, Node head) {
        return tail < m && head < m && (tail == head + 1 || (tail == 0 && head == m - 1));
    };
    std::vector<Edge> edges;
    for (Node tail = 0; tail < n; ++tail) {
        for (Node head = 0; head < n; ++head) {
            if (tail != head && !kept_one_way(head, tail)) edges.push_back({tail, head, 1.0});
        }
    }
    return Digraph::from_edges(n, edges);
}

DcidGraph build_dcid(const Digraph& base, std::size_t m) {
    if (m < 3) {
        throw ValidationError("build_dcid: requires m >= 3 layers");
    }
    const std::size_t n = base.size();
    std::vector<Edge> edges;
    edges.reserve(m * (base.edge_count() + n));
    for (std::size_t layer = 0; layer < m; ++layer) {
        const std::size_t offset = layer * n;
        const std::size_t upstream = ((layer + 1) % m) * n;
        for (const auto& e : base.edges()) {
            edges.push_back({e.tail + offset, e.head + offset, e.weight});
        }
        for (Node i = 0; i < n; ++i) edges.push_back({upstream + i, offset + i, 1.0});
    }
    auto result = Digraph::from_edges(m * n, edges)
                      .with_provenance(Provenance{Provenance::Kind::Dcid, m});
    return {base, m, std::move(result)};
}

Digraph build_cycle(std::size_t n) {
    if (n < 3) {
        throw ValidationError("build_cycle: a directed cycle needs at least 3 nodes");
    }
    std::vector<Edge> edges;
    for (Node k = 0; k < n; ++k) edges.push_back({(k + 1) % n, k, 1.0});
    return Digraph::from_edges(n, edges);
}

}  // namespace dgl
