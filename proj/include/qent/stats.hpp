// stats.hpp
// Ensemble aggregation over sweep profiles (mean / worst case / 95% CI),
// least-squares scaling fits, the critical-region fit pair, and the Page
// random-state entropy comparator.

#pragma once

#include <string>
#include <vector>

#include "qent/solver.hpp"

namespace qent::stats {

struct EnsembleStats {
    int n_qubits = 0;
    int count = 0;
    double mean_max_entropy = 0.0;
    double worst_max_entropy = 0.0;  // max over instances
    double ci95_entropy = 0.0;       // half-width, 1.96 * sd / sqrt(count)
    double mean_min_gap = 0.0;
    double worst_min_gap = 0.0;  // min over instances
    double ci95_gap = 0.0;
    double mean_s_min_gap = 0.0;
    double mean_s_max_entropy = 0.0;
};

// Reduces per-instance extremes; profiles must share one n.
EnsembleStats aggregate(const std::vector<solver::SweepProfile>& profiles);

enum class FitModel {
    kLinear,         // y vs x
    kInverseN,       // y vs 1/x
    kInverseNCubed,  // y vs 1/x^3
};

struct FitResult {
    FitModel model = FitModel::kLinear;
    double slope = 0.0;
    double intercept = 0.0;
    double residual_norm = 0.0;  // sqrt(sum of squared residuals)
    double correlation = 0.0;    // Pearson r of (transformed x, y)
};

// Least-squares line after the model's x transform. Needs >= 3 points and a
// non-degenerate transformed-x spread.
FitResult fit(const std::vector<double>& xs, const std::vector<double>& ys, FitModel model);

struct CriticalFit {
    // Growth side (s < s_c): E = a * log|log|s - s_c|| + c.
    double loglog_slope = 0.0;
    double loglog_intercept = 0.0;
    double loglog_residual = 0.0;
    // Falling side (s > s_c): E = b |s - s_c|^(-alpha), fit in log-log form.
    double power_alpha = 0.0;
    double power_log_coeff = 0.0;
    double power_residual = 0.0;
};

// Fits the two critical-region laws on a sampled curve (s, E). The windows
// [sc - window_hi, sc - window_lo] and [sc + window_lo, sc + window_hi]
// exclude the peak itself; each side needs >= 4 points.
CriticalFit fit_critical_region(const std::vector<double>& s, const std::vector<double>& entropy,
                                double s_c, double window_lo = 0.02, double window_hi = 0.15);

// Average half-cut entropy of a random pure state, (n/2) - 1/(2 ln 2);
// a large-n formula, used as a comparator line. n even >= 2.
double page_entropy(int n_qubits);

}  // namespace qent::stats
