#include "dgl/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dgl/error.hpp"
#include "dgl/multilayer.hpp"

namespace dgl {

Theorem1Result check_theorem1(const Digraph& g) {
    Theorem1Result result;
    if (auto pair = find_digon_sign_asymmetric(g)) {
        result.violating_pair = pair;
        return result;
    }
    for (const auto& component : strongly_connected_components(g).components) {
        if (component.size() >= 3 && !is_undirected(induced_subgraph(g, component).graph)) {
            result.violating_set = component;
            return result;
        }
    }
    auto decomposition = block_decomposition(g);
    // Admissible SCCs always decompose; a failure here would be a logic error.
    if (!decomposition.ok()) {
        result.violating_set = decomposition.witness;
        return result;
    }
    result.holds = true;
    result.certificate = std::move(decomposition.decomposition);
    return result;
}

namespace {

using Mask = std::uint32_t;

// Nodes of `subset` reachable from `start` along edges inside `subset`.
Mask reach(const std::vector<Mask>& successors, Mask subset, std::size_t start) {
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for (std::size_t v = 0; v < successors.size(); ++v) {
            if (frontier & (Mask{1} << v)) next |= successors[v] & subset;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

bool check_theorem1_bruteforce(const Digraph& g) {
    const std::size_t n = g.size();
    if (n > kBruteForceLimit) {
        throw ValidationError("check_theorem1_bruteforce: graph has more than " +
                              std::to_string(kBruteForceLimit) + " nodes");
    }
    std::vector<Mask> succ(n, 0), pred(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || g.weight(i, j) == 0.0) continue;
            if (g.weight(i, j) * g.weight(j, i) < 0.0) return false;
            succ[j] |= Mask{1} << i;  // edge j -> i
            pred[i] |= Mask{1} << j;
        }
    }
    const Mask full = (Mask{1} << n) - 1;
    for (Mask subset = 1; subset <= full; ++subset) {
        if (std::popcount(subset) < 3) continue;
        const auto start = static_cast<std::size_t>(std::countr_zero(subset));
        const bool strongly_connected =
            reach(succ, subset, start) == subset && reach(pred, subset, start) == subset;
        if (!strongly_connected) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(subset & (Mask{1} << i))) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((subset & (Mask{1} << j)) && g.weight(i, j) != g.weight(j, i)) return false;
            }
        }
    }
    return true;
}

bool check_lemma2(const Digraph& g) {
    for (const auto& component : strongly_connected_components(g).components) {
        if (component.size() >= 2 && !is_undirected(induced_subgraph(g, component).graph)) {
            return false;
        }
    }
    return true;
}

bool check_corollary1(const Digraph& g) {
    const std::size_t n = g.size();
    std::size_t links = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto kind = interaction_kind(g, i, j);
            if (is_digon_asymmetric_broad(kind)) return false;
            if (kind != InteractionKind::None) ++links;
        }
    }
    if (links != n - 1) return false;

    // n - 1 links plus connectivity means a tree.
    const auto adj = undirected_neighbours(g);
    std::vector<bool> seen(n, false);
    std::vector<Node> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const Node v = stack.back();
        stack.pop_back();
        for (Node w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

namespace {

// Follows single successors from the smallest node; returns the cycle if the
// successor map is one cycle through exactly `members`.
std::optional<std::vector<Node>> single_cycle(const std::vector<std::optional<Node>>& next,
                                              const std::vector<Node>& members) {
    if (members.empty()) return std::nullopt;
    std::vector<Node> order{members.front()};
    Node v = members.front();
    while (true) {
        if (!next[v]) return std::nullopt;
        v = *next[v];
        if (v == members.front()) break;
        if (order.size() >= members.size()) return std::nullopt;
        order.push_back(v);
    }
    if (order.size() != members.size()) return std::nullopt;
    return order;
}

std::optional<std::vector<Node>> unweighted_cycle_order(const Digraph& g) {
    const std::size_t n = g.size();
    if (n < 3 || g.edge_count() != n) return std::nullopt;
    std::vector<std::optional<Node>> next(n);
    for (const auto& [key, w] : g.weights()) {
        const auto [head, tail] = key;
        if (head == tail || w != 1.0 || next[tail]) return std::nullopt;
        next[tail] = head;
    }
    std::vector<Node> all(n);
    for (Node v = 0; v < n; ++v) all[v] = v;
    return single_cycle(next, all);
}

}  // namespace

bool detect_cycle(const Digraph& g) {
    return unweighted_cycle_order(g).has_value();
}

std::optional<UdcecPattern> detect_udcec(const Digraph& g) {
    const std::size_t n = g.size();
    if (n < 3) return std::nullopt;
    for (const auto& [key, w] : g.weights()) {
        if (key.first == key.second || w != 1.0) return std::nullopt;
    }
    std::vector<std::optional<Node>> next(n);
    std::vector<std::size_t> in_degree(n, 0);
    std::vector<Node> members;
    for (Node i = 0; i < n; ++i) {
        for (Node j = i + 1; j < n; ++j) {
            const auto kind = interaction_kind(g, i, j);
            if (kind == InteractionKind::DigonSymmetric) continue;
            if (kind != InteractionKind::Unidirectional) return std::nullopt;
            const Node tail = g.weight(i, j) != 0.0 ? j : i;
            const Node head = tail == j ? i : j;
            if (next[tail]) return std::nullopt;
            next[tail] = head;
            if (++in_degree[head] > 1) return std::nullopt;
        }
    }
    for (Node v = 0; v < n; ++v) {
        if (next[v]) members.push_back(v);
    }
    if (members.size() < 3) return std::nullopt;
    auto order = single_cycle(next, members);
    if (!order) return std::nullopt;
    return UdcecPattern{n, members.size(), std::move(*order)};
}

std::optional<DcidPattern> detect_dcid(const Digraph& g) {
    const auto& tag = g.provenance();
    if (!tag || tag->kind != Provenance::Kind::Dcid) return std::nullopt;
    const std::size_t m = tag->parameter;
    if (m < 3 || g.size() % m != 0) return std::nullopt;
    const std::size_t base_size = g.size() / m;
    std::vector<Node> first_layer(base_size);
    for (Node v = 0; v < base_size; ++v) first_layer[v] = v;
    const auto rebuilt = build_dcid(induced_subgraph(g, first_layer).graph, m);
    if (!(rebuilt.result == g)) return std::nullopt;
    return DcidPattern{base_size, m};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::GuaranteedReal: return "GuaranteedReal";
        case Verdict::GuaranteedComplex: return "GuaranteedComplex";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "Unknown";
}

const char* to_string(Basis b) {
    switch (b) {
        case Basis::Theorem1: return "Theorem1";
        case Basis::Corollary1: return "Corollary1";
        case Basis::Theorem2: return "Theorem2";
        case Basis::Theorem3: return "Theorem3";
        case Basis::Corollary4Pattern: return "Corollary4Pattern";
        case Basis::None: return "None";
    }
    return "Unknown";
}

ClassificationVerdict classify(const Digraph& g, bool with_numerics, double tol) {
    ClassificationVerdict v;
    if (with_numerics) {
        v.numerical = spectral_report(g, tol);
    }

    auto real = check_theorem1(g);
    if (real.holds) {
        v.verdict = Verdict::GuaranteedReal;
        v.basis = Basis::Theorem1;
        v.blocks = std::move(real.certificate);
        return v;
    }
    v.violating_pair = real.violating_pair;
    v.violating_set = real.violating_set;

    if (check_corollary1(g)) {
        v.verdict = Verdict::GuaranteedReal;
        v.basis = Basis::Corollary1;
        return v;
    }
    if (auto order = unweighted_cycle_order(g)) {
        v.verdict = Verdict::GuaranteedComplex;
        v.basis = Basis::Theorem2;
        v.cycle = std::move(order);
        return v;
    }
    if (auto pattern = detect_udcec(g)) {
        v.verdict = Verdict::GuaranteedComplex;
        v.basis = Basis::Theorem3;
        v.udcec = std::move(pattern);
        return v;
    }
    if (auto pattern = detect_dcid(g)) {
        v.verdict = Verdict::GuaranteedComplex;
        v.basis = Basis::Corollary4Pattern;
        v.dcid = pattern;
        return v;
    }
    return v;
}

}  // namespace dgl
