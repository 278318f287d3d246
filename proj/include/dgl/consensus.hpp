#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgl/graph.hpp"
#include "dgl/spectra.hpp"

namespace dgl {

/// Settings for x'(t) = -L x(t - tau) with constant history x0 on [-tau, 0].
struct SimConfig {
    double tau{0.0};
    double step{1e-3};
    double t_max{20.0};
    double threshold{1e-3};
    double divergence_bound{1e3};
    /// Record a sample every `stride` steps (the first and last are always kept).
    std::size_t stride{100};
    std::vector<double> x0;
};

/// Throws ValidationError unless tau >= 0, step > 0 (and <= tau / 10 when
/// tau > 0), t_max > 0, 0 < threshold < divergence_bound, stride >= 1 and
/// every entry of x0 is finite.
void validate(const SimConfig& cfg);

struct Sample {
    double t{};
    std::vector<double> x;
};

struct Outcome {
    enum class Kind { Converged, Diverged, Timeout };
    Kind kind{Kind::Timeout};
    /// First step time at which the event was observed; t_max for Timeout.
    double time{};
};

const char* to_string(Outcome::Kind kind);

struct SimulationResult {
    std::vector<Sample> samples;
    Outcome outcome;
    /// (t, max_i x_i - min_i x_i) at the sample times.
    std::vector<std::pair<double, double>> disagreement_trace;
};

/// Fixed-step RK4 on the delay equation; delayed states are linearly
/// interpolated from the stored step history. Stops at the first step whose
/// disagreement is below threshold (Converged), above divergence_bound or
/// non-finite (Diverged), or at t_max (Timeout).
SimulationResult simulate(const Digraph& g, const SimConfig& cfg);

/// max_{i,j} |x_i - x_j|
double disagreement(std::span<const double> x);

/// Smallest delay at which some scalar mode s' = -lambda s(t - tau) loses
/// stability: min over lambda = rho e^{i phi} with rho > 0 of
/// (pi/2 - |phi|) / rho. Zero when a nonzero eigenvalue has Re <= 0,
/// infinity when every eigenvalue is zero. Eigenvalues with
/// |lambda| <= zero_tol are treated as the consensus mode and skipped.
double delay_margin(std::span<const Complex> eigs, double zero_tol = 1e-9);

}  // namespace dgl
