#pragma once

#include <optional>
#include <vector>

#include "dgl/graph.hpp"

namespace dgl {

/// Strongly connected components, receivers first: after renumbering nodes
/// by concatenating the components, no edge runs from an earlier component
/// into a later one, so the permuted Laplacian is block upper triangular.
/// Each component is sorted; incomparable components are ordered by their
/// smallest node.
struct SccPartition {
    std::vector<std::vector<Node>> components;
};

SccPartition strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

enum class BlockTag { Undirected, SingleNode, TwoNode };

const char* to_string(BlockTag tag);

struct Block {
    std::vector<Node> nodes;
    BlockTag tag{BlockTag::SingleNode};
};

struct BlockDecomposition {
    std::vector<Block> blocks;

    /// Concatenated block order.
    std::vector<Node> order() const;
};

/// Either the terminal blocks, or the node set of a strongly connected
/// component with three or more nodes whose induced subgraph is directed.
struct DecompositionResult {
    std::optional<BlockDecomposition> decomposition;
    std::vector<Node> witness;

    bool ok() const noexcept { return decomposition.has_value(); }
};

/// Splits the node set recursively along the SCC condensation. A block is
/// terminal when it has one node, induces an undirected subgraph, or has two
/// nodes (checked in that order).
DecompositionResult block_decomposition(const Digraph& g);

/// Symmetric permutation P L P^T with rows/cols taken in `order`.
Matrix permute(const Matrix& l, const std::vector<Node>& order);

}  // namespace dgl
