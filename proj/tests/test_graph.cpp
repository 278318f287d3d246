#include "doctest.h"

#include <random>

#include "dgl/error.hpp"
#include "dgl/graph.hpp"
#include "dgl/io.hpp"
#include "oracles.hpp"

using namespace dgl;

namespace {

Digraph six_node() { return io::load_graph(oracle::fixture("six_node.txt")); }

Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
    Matrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : r) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("build_digraph stores a_{head,tail}") {
    const Edge edges[] = {{1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}};
    const auto g = Digraph::from_edges(3, edges);
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(1, 2) == 1.0);
    CHECK(g.weight(2, 0) == 1.0);
    CHECK(g.weight(1, 0) == 0.0);
    CHECK(g.edge_count() == 3);

    const auto empty = Digraph::from_edges(2, {});
    CHECK(empty.edge_count() == 0);
    CHECK(laplacian(empty) == Matrix::Zero(2, 2));
}

TEST_CASE("build_digraph rejects bad triples") {
    const Edge out_of_range[] = {{0, 3, 1.0}};
    CHECK_THROWS_AS(Digraph::from_edges(3, out_of_range), ValidationError);
    const Edge zero[] = {{0, 1, 0.0}};
    CHECK_THROWS_AS(Digraph::from_edges(3, zero), ValidationError);
    const Edge nan[] = {{0, 1, std::nan("")}};
    CHECK_THROWS_AS(Digraph::from_edges(3, nan), ValidationError);
    const Edge dup[] = {{0, 1, 1.0}, {0, 1, 2.0}};
    CHECK_THROWS_WITH_AS(Digraph::from_edges(3, dup), doctest::Contains("(1, 2, 2)"),
                         ValidationError);
    CHECK_THROWS_AS(Digraph(0), ValidationError);
}

TEST_CASE("laplacian of the 3-cycle and the six-node graph") {
    const Edge edges[] = {{1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}};
    CHECK(laplacian(Digraph::from_edges(3, edges)) ==
          rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));

    const auto l = laplacian(six_node());
    CHECK(l(0, 0) == 3.0);  // self-loop 2 plus a_12 = 1
    const Node v2[] = {4, 5};
    CHECK(block_submatrix(l, v2, v2) == rows({{5, -1.4}, {-2.1, 2.1}}));
    const Node mid[] = {1, 2, 3};
    CHECK(block_submatrix(l, mid, mid) == rows({{5.5, -4, -1.5}, {-4, 7, -3}, {-1.5, -3, -2.5}}));
    const Node all[] = {0, 1, 2, 3, 4, 5};
    CHECK(block_submatrix(l, all, all) == l);
}

TEST_CASE("interaction kinds") {
    const auto g = six_node();
    CHECK(interaction_kind(g, 1, 2) == InteractionKind::DigonSymmetric);
    CHECK(interaction_kind(g, 3, 4) == InteractionKind::Unidirectional);
    CHECK(interaction_kind(g, 4, 3) == InteractionKind::Unidirectional);
    CHECK(interaction_kind(g, 4, 5) == InteractionKind::DigonAsymmetric);
    CHECK(interaction_kind(g, 0, 5) == InteractionKind::None);
    CHECK_THROWS_AS(interaction_kind(g, 2, 2), ValidationError);

    const Edge signs[] = {{1, 0, 2.0}, {0, 1, -3.0}};
    const auto s = Digraph::from_edges(2, signs);
    CHECK(interaction_kind(s, 0, 1) == InteractionKind::DigonSignAsymmetric);
    CHECK(is_digon_asymmetric_broad(interaction_kind(s, 0, 1)));
    CHECK_FALSE(is_digon_asymmetric_broad(InteractionKind::DigonSymmetric));
}

TEST_CASE("sign-asymmetric digon detection") {
    CHECK_FALSE(has_digon_sign_asymmetric(six_node()));
    const Edge pair[] = {{1, 0, 1.0}, {0, 1, -1.0}};
    CHECK(has_digon_sign_asymmetric(Digraph::from_edges(2, pair)));
    CHECK_FALSE(has_digon_sign_asymmetric(Digraph(4)));
}

TEST_CASE("induced subgraph and undirectedness") {
    const auto g = six_node();
    const Node tail[] = {5, 4};
    const auto sub = induced_subgraph(g, tail);
    CHECK(sub.labels == std::vector<Node>{4, 5});
    CHECK(sub.graph.weight(0, 1) == 1.4);
    CHECK(sub.graph.weight(1, 0) == 2.1);
    CHECK(sub.graph.weight(0, 0) == 3.6);
    CHECK(sub.graph.edge_count() == 3);

    const Node mid[] = {1, 2, 3};
    CHECK(is_undirected(induced_subgraph(g, mid).graph));
    CHECK_FALSE(is_undirected(g));

    const Edge cyc[] = {{1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}};
    const auto cycle = Digraph::from_edges(3, cyc);
    CHECK_FALSE(is_undirected(cycle));
    const Node first_two[] = {0, 1};
    const auto piece = induced_subgraph(cycle, first_two).graph;
    CHECK(piece.edge_count() == 1);
    CHECK(interaction_kind(piece, 0, 1) == InteractionKind::Unidirectional);

    const Edge loop[] = {{0, 0, 2.5}};
    CHECK(is_undirected(Digraph::from_edges(1, loop)));

    CHECK_THROWS_AS(induced_subgraph(g, std::span<const Node>{}), ValidationError);
    const Node bad[] = {6};
    CHECK_THROWS_AS(induced_subgraph(g, bad), ValidationError);
}

TEST_CASE("property: Laplacian row sums equal self-loop weights") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = oracle::random_digraph(rng, 1 + trial % 9, 0.4, true);
        const auto l = laplacian(g);
        for (Node i = 0; i < g.size(); ++i) {
            CHECK(std::abs(l.row(static_cast<Eigen::Index>(i)).sum() - g.weight(i, i)) <= 1e-12);
        }
    }
}

TEST_CASE("property: induced subgraphs and block submatrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto g = oracle::random_digraph(rng, n, 0.5, true);
        const auto l = laplacian(g);

        std::vector<Node> all(n);
        for (Node v = 0; v < n; ++v) all[v] = v;
        CHECK(laplacian(induced_subgraph(g, all).graph) == l);

        std::vector<Node> subset;
        for (Node v = 0; v < n; ++v) {
            if (rng() % 2) subset.push_back(v);
        }
        if (subset.empty()) subset.push_back(0);
        const auto sub = induced_subgraph(g, subset);
        const Matrix block = block_submatrix(l, subset, subset);
        const Matrix sub_l = laplacian(sub.graph);
        for (std::size_t a = 0; a < subset.size(); ++a) {
            double incoming = 0.0;
            for (Node j = 0; j < n; ++j) {
                if (std::find(subset.begin(), subset.end(), j) == subset.end()) {
                    incoming += g.weight(subset[a], j);
                }
            }
            for (std::size_t b = 0; b < subset.size(); ++b) {
                const auto ia = static_cast<Eigen::Index>(a);
                const auto ib = static_cast<Eigen::Index>(b);
                if (a == b) {
                    CHECK(std::abs(block(ia, ib) - sub_l(ia, ib) - incoming) <= 1e-12);
                } else {
                    CHECK(block(ia, ib) == sub_l(ia, ib));
                }
            }
        }
    }
}

TEST_CASE("interaction kind is symmetric in its pair") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_digraph(rng, 5, 0.5, false);
        for (Node i = 0; i < 5; ++i) {
            for (Node j = 0; j < 5; ++j) {
                if (i != j) CHECK(interaction_kind(g, i, j) == interaction_kind(g, j, i));
            }
        }
    }
}
