#include "dgl/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dgl/error.hpp"

namespace dgl {

void validate(const SimConfig& cfg) {
    if (!(cfg.tau >= 0.0) || !std::isfinite(cfg.tau)) {
        throw ValidationError("simulate: tau must be finite and >= 0");
    }
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
        throw ValidationError("simulate: step must be > 0");
    }
    if (cfg.tau > 0.0 && cfg.step > cfg.tau / 10.0) {
        throw ValidationError("simulate: step must be <= tau / 10");
    }
    if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) {
        throw ValidationError("simulate: t_max must be finite and > 0");
    }
    if (!(cfg.threshold > 0.0)) {
        throw ValidationError("simulate: threshold must be > 0");
    }
    if (!(cfg.divergence_bound > cfg.threshold)) {
        throw ValidationError("simulate: divergence_bound must exceed threshold");
    }
    if (cfg.stride == 0) {
        throw ValidationError("simulate: stride must be >= 1");
    }
    if (!std::all_of(cfg.x0.begin(), cfg.x0.end(), [](double v) { return std::isfinite(v); })) {
        throw ValidationError("simulate: x0 must be finite");
    }
}

const char* to_string(Outcome::Kind kind) {
    switch (kind) {
        case Outcome::Kind::Converged: return "converged";
        case Outcome::Kind::Diverged: return "diverged";
        case Outcome::Kind::Timeout: return "timeout";
    }
    return "unknown";
}

double disagreement(std::span<const double> x) {
    if (x.empty()) {
        throw ValidationError("disagreement: empty state");
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

namespace {

using Vector = Eigen::VectorXd;

// States x(k h) for the most recent steps, enough to cover lag tau.
class History {
public:
    History(Vector x0, double lag_steps)
        : x0_(std::move(x0)),
          lag_(lag_steps),
          ring_(static_cast<std::size_t>(std::ceil(lag_steps)) + 3) {}

    void store(std::size_t k, const Vector& x) { ring_[k % ring_.size()] = x; }

    // x at time (position - lag) h, position measured in steps.
    Vector delayed(double position) const {
        const double p = position - lag_;
        if (p <= 0.0) return x0_;
        const double base = std::floor(p);
        const double frac = p - base;
        const auto k = static_cast<std::size_t>(base);
        const Vector& a = ring_[k % ring_.size()];
        if (frac == 0.0) return a;
        const Vector& b = ring_[(k + 1) % ring_.size()];
        return (1.0 - frac) * a + frac * b;
    }

private:
    Vector x0_;
    double lag_;
    std::vector<Vector> ring_;
};

std::vector<double> to_std(const Vector& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

SimulationResult simulate(const Digraph& g, const SimConfig& cfg) {
    validate(cfg);
    if (cfg.x0.size() != g.size()) {
        throw ValidationError("simulate: x0 has " + std::to_string(cfg.x0.size()) +
                              " entries, graph has " + std::to_string(g.size()) + " nodes");
    }
    const Matrix l = laplacian(g);
    const double h = cfg.step;
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / h - 1e-9));

    Vector x = Eigen::Map<const Vector>(cfg.x0.data(), static_cast<Eigen::Index>(cfg.x0.size()));
    const bool delayed = cfg.tau > 0.0;
    History history(x, cfg.tau / h);

    SimulationResult result;
    auto record = [&](double t, double spread) {
        result.samples.push_back({t, to_std(x)});
        result.disagreement_trace.emplace_back(t, spread);
    };

    for (std::size_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * h;
        const std::vector<double> state = to_std(x);
        const double spread = disagreement(state);

        const bool diverged = !std::isfinite(spread) || spread > cfg.divergence_bound;
        const bool converged = !diverged && spread < cfg.threshold;
        if (diverged || converged || k >= steps) {
            record(t, spread);
            result.outcome = {diverged    ? Outcome::Kind::Diverged
                              : converged ? Outcome::Kind::Converged
                                          : Outcome::Kind::Timeout,
                              t};
            return result;
        }
        if (k % cfg.stride == 0) record(t, spread);

        if (delayed) {
            history.store(k, x);
            const double pos = static_cast<double>(k);
            const Vector k1 = -l * history.delayed(pos);
            const Vector mid = -l * history.delayed(pos + 0.5);
            const Vector k4 = -l * history.delayed(pos + 1.0);
            // The delayed argument does not depend on the current stage, so
            // both midpoint stages coincide.
            x += h / 6.0 * (k1 + 4.0 * mid + k4);
        } else {
            const Vector k1 = -l * x;
            const Vector k2 = -l * (x + 0.5 * h * k1);
            const Vector k3 = -l * (x + 0.5 * h * k2);
            const Vector k4 = -l * (x + h * k3);
            x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
}

double delay_margin(std::span<const Complex> eigs, double zero_tol) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& lambda : eigs) {
        const double rho = std::abs(lambda);
        if (rho <= zero_tol) continue;
        if (lambda.real() <= 0.0) return 0.0;
        const double phi = std::abs(std::arg(lambda));
        margin = std::min(margin, (std::numbers::pi / 2.0 - phi) / rho);
    }
    return margin;
}

}  // namespace dgl
