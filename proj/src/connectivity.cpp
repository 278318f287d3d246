#include "dgl/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace dgl {

namespace {

// Sender -> receiver adjacency (edge j -> i for every a_ij != 0, i != j).
std::vector<std::vector<Node>> flow_adjacency(const Digraph& g) {
    std::vector<std::vector<Node>> out(g.size());
    for (const auto& [key, w] : g.weights()) {
        if (key.first != key.second) {
            out[key.second].push_back(key.first);
        }
    }
    return out;
}

// Iterative Tarjan. Returns the component id of every node.
std::vector<std::size_t> tarjan(const std::vector<std::vector<Node>>& adj, std::size_t& count) {
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = adj.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<Node> stack;
    std::vector<std::pair<Node, std::size_t>> frames;  // (node, next child)
    std::size_t next_index = 0;
    count = 0;

    for (Node root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[v].size()) {
                const Node w = adj[v][child++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Node done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const Node parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                Node w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != done);
                ++count;
            }
        }
    }
    return comp;
}

}  // namespace

SccPartition strongly_connected_components(const Digraph& g) {
    const auto adj = flow_adjacency(g);
    std::size_t count = 0;
    const auto comp = tarjan(adj, count);

    std::vector<std::vector<Node>> members(count);
    for (Node v = 0; v < g.size(); ++v) {
        members[comp[v]].push_back(v);
    }

    // A component may be placed once every component it sends to is placed.
    std::vector<std::set<std::size_t>> receivers(count);
    for (Node v = 0; v < g.size(); ++v) {
        for (Node w : adj[v]) {
            if (comp[w] != comp[v]) receivers[comp[v]].insert(comp[w]);
        }
    }
    std::vector<std::vector<std::size_t>> senders(count);
    std::vector<std::size_t> pending(count);
    for (std::size_t c = 0; c < count; ++c) {
        pending[c] = receivers[c].size();
        for (auto r : receivers[c]) senders[r].push_back(c);
    }

    using Entry = std::pair<Node, std::size_t>;  // (smallest member, component)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < count; ++c) {
        if (pending[c] == 0) ready.emplace(members[c].front(), c);
    }

    SccPartition out;
    out.components.reserve(count);
    while (!ready.empty()) {
        const auto c = ready.top().second;
        ready.pop();
        out.components.push_back(members[c]);
        for (auto s : senders[c]) {
            if (--pending[s] == 0) ready.emplace(members[s].front(), s);
        }
    }
    return out;
}

bool is_strongly_connected(const Digraph& g) {
    return strongly_connected_components(g).components.size() == 1;
}

const char* to_string(BlockTag tag) {
    switch (tag) {
        case BlockTag::Undirected: return "undirected";
        case BlockTag::SingleNode: return "single_node";
        case BlockTag::TwoNode: return "two_node";
    }
    return "unknown";
}

std::vector<Node> BlockDecomposition::order() const {
    std::vector<Node> out;
    for (const auto& b : blocks) out.insert(out.end(), b.nodes.begin(), b.nodes.end());
    return out;
}

namespace {

// Appends the terminal blocks of `nodes` (parent labels) to `out`; returns
// false and fills `witness` on an inadmissible strongly connected set.
bool decompose(const Digraph& g, const std::vector<Node>& nodes, std::vector<Block>& out,
               std::vector<Node>& witness) {
    if (nodes.size() == 1) {
        out.push_back({nodes, BlockTag::SingleNode});
        return true;
    }
    const auto sub = induced_subgraph(g, nodes);
    if (is_undirected(sub.graph)) {
        out.push_back({nodes, BlockTag::Undirected});
        return true;
    }
    if (nodes.size() == 2) {
        out.push_back({nodes, BlockTag::TwoNode});
        return true;
    }
    const auto scc = strongly_connected_components(sub.graph);
    if (scc.components.size() == 1) {
        witness = nodes;
        return false;
    }
    for (const auto& component : scc.components) {
        std::vector<Node> mapped;
        mapped.reserve(component.size());
        for (Node k : component) mapped.push_back(sub.labels[k]);
        if (!decompose(g, mapped, out, witness)) return false;
    }
    return true;
}

}  // namespace

DecompositionResult block_decomposition(const Digraph& g) {
    std::vector<Node> all(g.size());
    for (Node v = 0; v < g.size(); ++v) all[v] = v;

    DecompositionResult result;
    std::vector<Block> blocks;
    if (decompose(g, all, blocks, result.witness)) {
        result.decomposition = BlockDecomposition{std::move(blocks)};
    }
    return result;
}

Matrix permute(const Matrix& l, const std::vector<Node>& order) {
    const auto n = static_cast<Eigen::Index>(order.size());
    Matrix out(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            out(a, b) = l(static_cast<Eigen::Index>(order[static_cast<std::size_t>(a)]),
                          static_cast<Eigen::Index>(order[static_cast<std::size_t>(b)]));
        }
    }
    return out;
}

}  // namespace dgl
