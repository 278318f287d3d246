#pragma once

#include <cstddef>
#include <vector>

#include "dgl/graph.hpp"

namespace dgl {

/// Directed edge between two component graphs. `tail` indexes the source
/// graph and `head` the target graph, both 0-based in their own graph.
struct CrossEdge {
    Node tail{};
    Node head{};
    double weight{};

    friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// Two-graph multilayer digraph. V1 keeps labels 0..|V1|-1 in `result`,
/// V2 node k becomes |V1| + k.
struct Composition {
    Digraph g1;
    Digraph g2;
    std::vector<CrossEdge> e12;  ///< V1 -> V2
    std::vector<CrossEdge> e21;  ///< V2 -> V1
    Digraph result;
};

/// Throws ValidationError on out-of-range endpoints, zero or non-finite
/// weights and duplicated cross edges.
Composition compose(const Digraph& g1, const Digraph& g2, std::vector<CrossEdge> e12,
                    std::vector<CrossEdge> e21);

/// g1 with every edge arriving from V2 folded into a self-loop at its head.
/// Its Laplacian is exactly the V1 diagonal block of laplacian(c.result).
Digraph augmented_v1_block(const Composition& c);

enum class Realness { CertifiedReal, NumericallyReal, Complex };

const char* to_string(Realness r);

/// Realness of g2's Laplacian spectrum: certified when g2 itself passes the
/// structural real-spectrum check, otherwise decided numerically.
Realness g2_realness(const Composition& c);

/// e12 empty, the augmented V1 block passes check_theorem1, and g2 has a
/// real spectrum. True implies the composed spectrum is real.
bool corollary2_applies(const Composition& c);

/// e12 empty and g2 has a complex spectrum. True implies the composed
/// spectrum is complex.
bool corollary3_applies(const Composition& c);

/// Complete unweighted graph on n nodes in which the pairs {k, k+1}
/// (k = 1..m-1) keep only the edge k+1 -> k and the pair {m, 1} keeps only
/// 1 -> m, leaving the directed cycle 1 -> m -> m-1 -> ... -> 2 -> 1.
/// Requires 3 <= m <= n.
Digraph build_udcec(std::size_t n, std::size_t m);

/// m copies of a base graph joined by unit edges from node i of layer l+1
/// (mod m) to node i of layer l. Node i of layer l is l * n + i.
struct DcidGraph {
    Digraph base;
    std::size_t layers{};
    Digraph result;  ///< tagged with Provenance{Dcid, layers}
};

/// Throws ValidationError when m < 3.
DcidGraph build_dcid(const Digraph& base, std::size_t m);

/// Unweighted directed n-cycle with a_{k,k+1} = a_{n,1} = 1, i.e. the
/// edges k+1 -> k and 1 -> n. Requires n >= 3.
Digraph build_cycle(std::size_t n);

}  // namespace dgl
