#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dgl/connectivity.hpp"
#include "dgl/graph.hpp"
#include "dgl/spectra.hpp"

namespace dgl {

/// Outcome of the structural real-spectrum test: no sign-asymmetric digon,
/// and every strongly connected component with three or more nodes induces
/// an undirected subgraph. Exactly one of certificate / violating_pair /
/// violating_set is populated.
struct Theorem1Result {
    bool holds{};
    std::optional<BlockDecomposition> certificate;
    std::optional<std::pair<Node, Node>> violating_pair;
    std::optional<std::vector<Node>> violating_set;
};

/// Polynomial check. A strongly connected induced subgraph lies inside one
/// SCC and induced subgraphs of undirected graphs are undirected, so testing
/// the SCCs is equivalent to testing every node subset.
Theorem1Result check_theorem1(const Digraph& g);

inline constexpr std::size_t kBruteForceLimit = 14;

/// Literal subset enumeration of the same condition. Throws ValidationError
/// when g has more than kBruteForceLimit nodes.
bool check_theorem1_bruteforce(const Digraph& g);

/// Stricter variant: every SCC with two or more nodes induces an undirected
/// subgraph. Reporting only.
bool check_lemma2(const Digraph& g);

/// Only unidirectional or symmetric-digon pairs, and the undirected version
/// is a tree.
bool check_corollary1(const Digraph& g);

/// Exactly an unweighted loopless directed cycle through all n >= 3 nodes.
bool detect_cycle(const Digraph& g);

struct UdcecPattern {
    std::size_t n{};
    std::size_t m{};
    /// Cycle nodes in edge direction, starting from the smallest label.
    std::vector<Node> cycle;
};

std::optional<UdcecPattern> detect_udcec(const Digraph& g);

struct DcidPattern {
    std::size_t base_size{};
    std::size_t layers{};
};

/// Recognises graphs carrying a DCID provenance tag whose weights still
/// match build_dcid(first layer, layers) exactly.
std::optional<DcidPattern> detect_dcid(const Digraph& g);

enum class Verdict { GuaranteedReal, GuaranteedComplex, Undetermined };
enum class Basis { Theorem1, Corollary1, Theorem2, Theorem3, Corollary4Pattern, None };

const char* to_string(Verdict v);
const char* to_string(Basis b);

struct ClassificationVerdict {
    Verdict verdict{Verdict::Undetermined};
    Basis basis{Basis::None};
    std::optional<BlockDecomposition> blocks;
    std::optional<UdcecPattern> udcec;
    std::optional<DcidPattern> dcid;
    /// Directed cycle order for the plain-cycle basis.
    std::optional<std::vector<Node>> cycle;
    std::optional<std::pair<Node, Node>> violating_pair;
    std::optional<std::vector<Node>> violating_set;
    std::optional<SpectralReport> numerical;
};

/// Real certificates are tried before complex ones; within each side the
/// most specific basis wins.
ClassificationVerdict classify(const Digraph& g, bool with_numerics,
                               double tol = kDefaultRealnessTolerance);

}  // namespace dgl
