#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dgl/graph.hpp"

namespace dgl {

using Complex = std::complex<double>;
using Spectrum = std::vector<Complex>;

/// Relative imaginary-part tolerance used when no other is requested.
inline constexpr double kDefaultRealnessTolerance = 1e-8;

struct SpectralReport {
    Spectrum eigenvalues;
    bool is_real{};
    double tolerance{};
    /// max(1, max |lambda|)
    double scale{};
};

/// All eigenvalues of a real square matrix with multiplicity, sorted by
/// (Re, Im). The matrix is split into the irreducible diagonal blocks of its
/// sparsity pattern and each block goes through long double Hessenberg-QR.
/// Throws ValidationError on non-square,
/// empty or non-finite input and NumericalError if QR fails to converge.
Spectrum eigenvalues(const Matrix& m);

/// Sorts in place by (Re, Im).
void sort_spectrum(Spectrum& s);

double spectral_scale(std::span<const Complex> eigs);

/// max |Im| <= tol * max(1, max |lambda|)
bool is_real_spectrum(std::span<const Complex> eigs, double tol = kDefaultRealnessTolerance);

SpectralReport make_report(Spectrum eigs, double tol = kDefaultRealnessTolerance);

/// Eigenvalues of the Laplacian of g.
SpectralReport spectral_report(const Digraph& g, double tol = kDefaultRealnessTolerance);

/// Roots of x^2 - (m11 + m22) x + (m11 m22 - m12 m21). Both roots are real
/// whenever m12 * m21 >= 0. Real roots come out descending; a complex pair
/// comes out with the positive imaginary part first.
std::pair<Complex, Complex> two_node_spectrum(double m11, double m12, double m21, double m22);

/// {1 - exp(2 pi i k / n) : k = 0..n-1}; n >= 3.
Spectrum cycle_spectrum(std::size_t n);

/// Spectrum of the n-node complete graph with an m-node directed cycle
/// embedded: 0, n - 1 + exp(2 pi i k / m) for k = 1..m-1, and n repeated
/// n - m times. Requires 3 <= m <= n.
Spectrum udcec_spectrum(std::size_t n, std::size_t m);

/// {mu + 1 - exp(2 pi i k / m) : mu in base, k = 0..m-1}; m >= 3.
Spectrum dcid_spectrum(std::span<const Complex> base, std::size_t m);

/// Smallest d such that the two multisets can be paired one-to-one with
/// every pair at distance <= d (bottleneck matching). Infinity when the
/// sizes differ.
double matching_distance(std::span<const Complex> a, std::span<const Complex> b);

bool same_spectrum(std::span<const Complex> a, std::span<const Complex> b, double tol);

/// Multiset union, sorted.
Spectrum merge_spectra(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace dgl
