#include "dgl/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "dgl/connectivity.hpp"
#include "dgl/error.hpp"

namespace dgl {

namespace {

Complex unit_root(std::size_t k, std::size_t n) {
    if (k == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

// Kuhn's augmenting paths on the graph of pairs within `limit`.
bool perfect_matching(std::span<const Complex> a, std::span<const Complex> b, double limit) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(a[i] - b[j]) <= limit) adj[i].push_back(j);
        }
        if (adj[i].empty()) return false;
    }
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match_b(n, none);
    std::vector<char> seen;

    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (auto j : adj[i]) {
            if (seen[j]) continue;
            seen[j] = 1;
            if (match_b[j] == none || self(self, match_b[j])) {
                match_b[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, 0);
        if (!augment(augment, i)) return false;
    }
    return true;
}

}  // namespace

void sort_spectrum(Spectrum& s) {
    std::sort(s.begin(), s.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

Spectrum eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("eigenvalues: matrix is not square");
    }
    if (m.rows() == 0) {
        throw ValidationError("eigenvalues: matrix is empty");
    }
    if (!m.allFinite()) {
        throw ValidationError("eigenvalues: matrix has non-finite entries");
    }
    // Split along the irreducible diagonal blocks of the sparsity pattern,
    // then run extended-precision QR on each block.
    std::vector<Edge> pattern;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r != c && m(r, c) != 0.0) {
                pattern.push_back({static_cast<Node>(c), static_cast<Node>(r), 1.0});
            }
        }
    }
    const auto parts =
        strongly_connected_components(Digraph::from_edges(static_cast<std::size_t>(m.rows()), pattern));
    Spectrum out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (const auto& nodes : parts.components) {
        if (nodes.size() == 1) {
            const auto v = static_cast<Eigen::Index>(nodes[0]);
            out.emplace_back(m(v, v), 0.0);
            continue;
        }
        using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
        const Wide block = block_submatrix(m, nodes, nodes).cast<long double>();
        Eigen::EigenSolver<Wide> solver(block, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigenvalues: QR iteration did not converge");
        }
        for (const auto& z : solver.eigenvalues()) {
            out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        }
    }
    sort_spectrum(out);
    return out;
}

double spectral_scale(std::span<const Complex> eigs) {
    double scale = 1.0;
    for (const auto& z : eigs) scale = std::max(scale, std::abs(z));
    return scale;
}

bool is_real_spectrum(std::span<const Complex> eigs, double tol) {
    const double bound = tol * spectral_scale(eigs);
    return std::all_of(eigs.begin(), eigs.end(),
                       [bound](const Complex& z) { return std::abs(z.imag()) <= bound; });
}

SpectralReport make_report(Spectrum eigs, double tol) {
    if (!(tol >= 0.0)) {
        throw ValidationError("realness tolerance must be nonnegative");
    }
    SpectralReport r;
    r.is_real = is_real_spectrum(eigs, tol);
    r.scale = spectral_scale(eigs);
    r.tolerance = tol;
    r.eigenvalues = std::move(eigs);
    return r;
}

SpectralReport spectral_report(const Digraph& g, double tol) {
    return make_report(eigenvalues(laplacian(g)), tol);
}

std::pair<Complex, Complex> two_node_spectrum(double m11, double m12, double m21, double m22) {
    const double half_trace = 0.5 * (m11 + m22);
    // (m11 - m22)^2 + 4 m12 m21 is the discriminant of the characteristic
    // quadratic; written this way it is visibly >= 0 when m12 m21 >= 0.
    const double half_gap = 0.5 * (m11 - m22);
    const double disc = half_gap * half_gap + m12 * m21;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return {Complex{half_trace + root, 0.0}, Complex{half_trace - root, 0.0}};
    }
    const double root = std::sqrt(-disc);
    return {Complex{half_trace, root}, Complex{half_trace, -root}};
}

Spectrum cycle_spectrum(std::size_t n) {
    if (n < 3) {
        throw ValidationError("cycle_spectrum: a directed cycle needs at least 3 nodes");
    }
    Spectrum out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(1.0 - unit_root(k, n));
    sort_spectrum(out);
    return out;
}

Spectrum udcec_spectrum(std::size_t n, std::size_t m) {
    if (m < 3 || m > n) {
        throw ValidationError("udcec_spectrum: requires 3 <= m <= n");
    }
    const double nd = static_cast<double>(n);
    Spectrum out;
    out.reserve(n);
    out.emplace_back(0.0, 0.0);
    for (std::size_t k = 1; k < m; ++k) out.push_back(nd - 1.0 + unit_root(k, m));
    for (std::size_t k = m; k < n; ++k) out.emplace_back(nd, 0.0);
    sort_spectrum(out);
    return out;
}

Spectrum dcid_spectrum(std::span<const Complex> base, std::size_t m) {
    if (m < 3) {
        throw ValidationError("dcid_spectrum: requires m >= 3 layers");
    }
    if (base.empty()) {
        throw ValidationError("dcid_spectrum: base spectrum is empty");
    }
    Spectrum out;
    out.reserve(base.size() * m);
    for (const auto& mu : base) {
        for (std::size_t k = 0; k < m; ++k) out.push_back(mu + 1.0 - unit_root(k, m));
    }
    sort_spectrum(out);
    return out;
}

double matching_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    std::vector<double> candidates;
    candidates.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) candidates.push_back(std::abs(x - y));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Feasibility is monotone in the limit; the largest candidate always works.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (perfect_matching(a, b, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

bool same_spectrum(std::span<const Complex> a, std::span<const Complex> b, double tol) {
    return matching_distance(a, b) <= tol;
}

Spectrum merge_spectra(std::span<const Complex> a, std::span<const Complex> b) {
    Spectrum out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    sort_spectrum(out);
    return out;
}

}  // namespace dgl
