// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "dgl/classifier.hpp"
#include "dgl/cli.hpp"
#include "dgl/consensus.hpp"
#include "dgl/io.hpp"
#include "dgl/multilayer.hpp"
#include "dgl/spectra.hpp"
#include "oracles.hpp"

using namespace dgl;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

Digraph fixture(const std::string& name) { return io::load_graph(oracle::fixture(name)); }

Spectrum rounded(const Spectrum& s) {
    Spectrum out;
    for (const auto& z : s) out.emplace_back(std::round(z.real() * 100) / 100, std::round(z.imag() * 100) / 100);
    return out;
}

Digraph unweighted_from_mask(std::uint32_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Node i = 0; i < 4; ++i) {
        for (Node j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (mask & (1u << bit)) edges.push_back({j, i, 1.0});
            ++bit;
        }
    }
    return Digraph::from_edges(4, edges);
}

// Graphs shared by criteria 4 and 5, and 3 and 5.
std::vector<Digraph> theorem_instances;
std::vector<Digraph> pattern_instances;

void criterion1() {
    const auto start = Clock::now();
    const auto g = fixture("six_node.txt");
    const auto eigs = eigenvalues(laplacian(g));
    const Spectrum golden{{3, 0}, {10.47, 0}, {3.65, 0}, {-4.12, 0}, {5.80, 0}, {1.3, 0}};
    const double dist = matching_distance(rounded(eigs), golden);
    const auto t1 = check_theorem1(g);
    bool blocks_ok = t1.holds && t1.certificate && t1.certificate->blocks.size() == 3 &&
                     t1.certificate->blocks[0].nodes == std::vector<Node>{0} &&
                     t1.certificate->blocks[1].nodes == std::vector<Node>{1, 2, 3} &&
                     t1.certificate->blocks[2].nodes == std::vector<Node>{4, 5};
    const double elapsed = seconds_since(start);
    report(1, dist <= 5e-3 && blocks_ok && elapsed < 1.0,
           fmt("six-node spectrum distance %.2g after rounding, blocks {1},{2,3,4},{5,6} ", dist) +
               (blocks_ok ? "ok" : "wrong") + fmt(", %.3f s", elapsed));
}

void criterion2() {
    const double h = std::sqrt(3.0) / 2.0;
    const Spectrum cycle_golden{{0, 0}, {1.5, h}, {1.5, -h}};
    const double closed = matching_distance(cycle_spectrum(3), cycle_golden);
    const double numeric = matching_distance(eigenvalues(laplacian(fixture("cycle3.txt"))), cycle_golden);
    const auto w = fixture("weighted_cycle3.txt");
    const Spectrum weighted_golden{{0, 0}, {3, 0}, {3, 0}};
    const double weighted = matching_distance(eigenvalues(laplacian(w)), weighted_golden);
    const bool undetermined = classify(w, false).verdict == Verdict::Undetermined;
    report(2, closed <= 1e-8 && numeric <= 1e-8 && weighted <= 1e-8 && undetermined,
           fmt("3-cycle closed %.1e numeric %.1e; weighted 3-cycle %.1e, ", closed, numeric, weighted) +
               (undetermined ? "Undetermined" : "not Undetermined"));
}

void criterion3() {
    const auto start = Clock::now();
    double worst = 0.0;
    int instances = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto g = build_cycle(n);
        worst = std::max(worst, matching_distance(cycle_spectrum(n), eigenvalues(laplacian(g))));
        pattern_instances.push_back(g);
        ++instances;
    }
    for (std::size_t n = 3; n <= 10; ++n) {
        for (std::size_t m = 3; m <= n; ++m) {
            const auto g = build_udcec(n, m);
            worst = std::max(worst, matching_distance(udcec_spectrum(n, m), eigenvalues(laplacian(g))));
            pattern_instances.push_back(g);
            ++instances;
        }
    }
    std::mt19937_64 rng(2023);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 1 + rng() % 6, m = 3 + rng() % 4;
        const auto base = oracle::random_digraph(rng, n, 0.4, k % 2 == 0);
        const auto d = build_dcid(base, m);
        const auto closed = dcid_spectrum(eigenvalues(laplacian(base)), m);
        worst = std::max(worst, matching_distance(closed, eigenvalues(laplacian(d.result))));
        pattern_instances.push_back(d.result);
        ++instances;
    }
    const double elapsed = seconds_since(start);
    report(3, worst <= 1e-6 && elapsed < 30.0,
           fmt("%.0f cycle/UDC-EC/DCID instances, worst matching distance %.2e, %.2f s", instances, worst,
               elapsed));
}

void criterion4() {
    int disagreements = 0, total = 0;
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
        const auto g = unweighted_from_mask(mask);
        const bool fast = check_theorem1(g).holds;
        if (fast != check_theorem1_bruteforce(g)) ++disagreements;
        if (fast) theorem_instances.push_back(g);
        ++total;
    }
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 10000; ++k) {
        const std::size_t n = 1 + rng() % 8;
        const double density = 0.1 + 0.1 * static_cast<double>(rng() % 6);
        const bool loops = rng() % 2 == 0;
        const auto g = oracle::random_digraph(rng, n, density, loops);
        const bool fast = check_theorem1(g).holds;
        if (fast != check_theorem1_bruteforce(g)) ++disagreements;
        if (fast) theorem_instances.push_back(g);
        ++total;
    }
    report(4, disagreements == 0,
           fmt("%.0f graphs (4096 exhaustive + 10000 random), %.0f disagreements", total, disagreements));
}

void criterion5() {
    int real_failures = 0, complex_failures = 0;
    double worst_imag = 0.0;
    for (const auto& g : theorem_instances) {
        const auto eigs = eigenvalues(laplacian(g));
        double imag = 0.0;
        for (const auto& z : eigs) imag = std::max(imag, std::abs(z.imag()) / spectral_scale(eigs));
        worst_imag = std::max(worst_imag, imag);
        if (!is_real_spectrum(eigs, 1e-8)) ++real_failures;
    }
    for (const auto& g : pattern_instances) {
        if (is_real_spectrum(eigenvalues(laplacian(g)), 1e-8)) ++complex_failures;
    }
    report(5, real_failures == 0 && complex_failures == 0,
           fmt("%.0f certified-real spectra (worst relative |Im| %.1e), ", theorem_instances.size(), worst_imag) +
               fmt("%.0f pattern spectra; %.0f counterexamples", pattern_instances.size(),
                   real_failures + complex_failures));
}

void criterion6() {
    std::mt19937_64 rng(606);
    double worst = 0.0;
    int counterexamples = 0, cor2 = 0, cor3 = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n1 = 1 + rng() % 5, n2 = 1 + rng() % 5;
        const bool loops1 = rng() % 2 == 0, signed1 = rng() % 3 != 0;
        const auto g1 = oracle::random_digraph(rng, n1, 0.5, loops1, signed1);
        const bool loops2 = rng() % 2 == 0, signed2 = rng() % 3 != 0;
        const auto g2 = k % 5 == 0 ? build_cycle(3 + n2 % 3) : oracle::random_digraph(rng, n2, 0.5, loops2, signed2);
        std::vector<CrossEdge> e21;
        for (Node t = 0; t < g2.size(); ++t) {
            for (Node h = 0; h < n1; ++h) {
                if (rng() % 3 == 0) e21.push_back({t, h, 0.5 * static_cast<double>(1 + rng() % 6)});
            }
        }
        const auto c = compose(g1, g2, {}, e21);
        const auto whole = eigenvalues(laplacian(c.result));
        const auto parts =
            merge_spectra(eigenvalues(laplacian(augmented_v1_block(c))), eigenvalues(laplacian(g2)));
        worst = std::max(worst, matching_distance(whole, parts));
        if (corollary2_applies(c)) {
            ++cor2;
            if (!is_real_spectrum(whole)) ++counterexamples;
        }
        if (corollary3_applies(c)) {
            ++cor3;
            if (is_real_spectrum(whole)) ++counterexamples;
        }
    }
    report(6, worst <= 1e-8 && counterexamples == 0,
           fmt("1000 compositions, identity distance %.1e, ", worst) +
               fmt("%.0f real / %.0f complex corollary cases, %.0f counterexamples", cor2, cor3,
                   counterexamples));
}

void criterion7() {
    const auto g = fixture("one_way_g.txt");
    const auto cross = io::parse_cross_edges(io::read_file(oracle::fixture("one_way_cross.txt")));
    const auto c = compose(g, g, cross.e12, cross.e21);
    const bool components_real = is_real_spectrum(eigenvalues(laplacian(c.g1))) &&
                                 is_real_spectrum(eigenvalues(laplacian(c.g2)));
    const auto whole = eigenvalues(laplacian(c.result));
    const bool composed_complex = !is_real_spectrum(whole);
    const Spectrum golden{{0.16, 0}, {2.42, 0.61}, {2.42, -0.61}, {0, 0}, {2, 0}, {2, 0}};
    const double dist = matching_distance(rounded(whole), golden);
    report(7, c.e12.empty() && components_real && composed_complex && dist <= 5e-3,
           fmt("real g1, g2 with one-way cross edges give a complex composition; golden distance %.2g", dist));
}

struct ConsensusTimes {
    double c3{}, r3{}, r6{};
    bool ok{};
};

ConsensusTimes consensus_run(double step, std::string& detail) {
    const auto complex = fixture("consensus_complex.txt");
    const auto real = fixture("consensus_real.txt");
    const auto x0 = io::parse_vector(io::read_file(oracle::fixture("consensus_x0.txt")));
    auto sim = [&](const Digraph& g, double tau, double t_max) {
        SimConfig cfg;
        cfg.tau = tau;
        cfg.t_max = t_max;
        cfg.step = step;
        cfg.x0 = x0;
        return simulate(g, cfg).outcome;
    };
    using K = Outcome::Kind;
    const auto c3 = sim(complex, 0.3, 20.0), r3 = sim(real, 0.3, 20.0);
    // Growth past the divergence bound at tau = 0.6 takes about 44 s.
    const auto c6 = sim(complex, 0.6, 100.0), r6 = sim(real, 0.6, 100.0);
    ConsensusTimes t{c3.time, r3.time, r6.time, false};
    t.ok = c3.kind == K::Converged && r3.kind == K::Converged && r3.time < c3.time && c6.kind == K::Diverged &&
           r6.kind == K::Converged;
    detail = fmt("tau=0.3: t_c complex %.3f, real %.3f; ", c3.time, r3.time) +
             "tau=0.6: complex " + to_string(c6.kind) + fmt(" at %.2f, real ", c6.time) + to_string(r6.kind);
    return t;
}

ConsensusTimes criterion8() {
    const auto start = Clock::now();
    const auto complex_eigs = eigenvalues(laplacian(fixture("consensus_complex.txt")));
    const auto real_eigs = eigenvalues(laplacian(fixture("consensus_real.txt")));
    const Spectrum complex_golden{{0, 0}, {0.53, 0}, {2.23, 0.79}, {2.23, -0.79}};
    const Spectrum real_golden{{0, 0}, {1, 0}, {1, 0}, {2, 0}};
    const bool spectra_ok = matching_distance(rounded(complex_eigs), complex_golden) <= 5e-3 &&
                            matching_distance(rounded(real_eigs), real_golden) <= 5e-3;
    const double mc = delay_margin(complex_eigs), mr = delay_margin(real_eigs);
    const bool margins_ok = std::abs(mc - 0.52) <= 0.01 && std::abs(mr - 0.785) <= 0.01 && mc > 0.3 &&
                            mc < 0.6 && mr > 0.6;
    std::string detail;
    auto times = consensus_run(1e-3, detail);
    const double elapsed = seconds_since(start);
    report(8, spectra_ok && margins_ok && times.ok && elapsed < 10.0,
           detail + fmt("; margins %.3f / %.3f; %.2f s", mc, mr, elapsed));
    return times;
}

void criterion9(const ConsensusTimes& coarse) {
    std::string detail;
    const auto fine = consensus_run(5e-4, detail);
    auto rel = [](double a, double b) { return std::abs(a - b) / a; };
    const double worst = std::max({rel(coarse.c3, fine.c3), rel(coarse.r3, fine.r3), rel(coarse.r6, fine.r6)});
    report(9, fine.ok && worst < 0.01, fmt("halving the step moves t_c by at most %.3f%%", 100.0 * worst));
}

void criterion10() {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "dgl_acceptance_dcid.txt").string();
    std::ostringstream out, err;
    const int code = cli::run({"generate", "dcid", "-m", "5", "--base", oracle::fixture("six_node.txt"), "--out",
                               path},
                              out, err);
    bool dcid_exact = false;
    if (code == cli::kOk) {
        const auto base = fixture("six_node.txt");
        const auto g = io::load_graph(path);
        const Eigen::Index n = 6, m = 5;
        Matrix expected = Matrix::Zero(n * m, n * m);
        for (Eigen::Index l = 0; l < m; ++l) {
            expected.block(l * n, l * n, n, n) = laplacian(base) + Matrix::Identity(n, n);
            expected.block(l * n, ((l + 1) % m) * n, n, n) = -Matrix::Identity(n, n);
        }
        dcid_exact = laplacian(g) == expected;
    }
    std::filesystem::remove(path);

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    int mismatches = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<Edge> edges;
        for (Node i = 0; i < n; ++i) {
            for (Node j = 0; j < n; ++j) {
                if (rng() % 2) edges.push_back({j, i, u(rng)});
            }
        }
        const auto g = Digraph::from_edges(n, edges);
        for (const char* ext : {".txt", ".json"}) {
            const auto file = (dir / (std::string("dgl_acceptance_rt") + ext)).string();
            io::save_graph(g, file);
            if (!(io::load_graph(file) == g)) ++mismatches;
            std::filesystem::remove(file);
        }
    }
    report(10, dcid_exact && mismatches == 0,
           std::string("generate -> parse -> laplacian ") + (dcid_exact ? "exact" : "differs") +
               fmt(" for 5-layer DCID; %.0f weight mismatches over 400 file round trips", mismatches));
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        const auto times = criterion8();
        criterion9(times);
        criterion10();
    } catch (const std::exception& e) {
        std::printf("FAIL aborted: %s\n", e.what());
        return 1;
    }
    return failures;
}
