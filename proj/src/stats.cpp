#include "qent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qent::stats {

namespace {

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

// 1.96 * sample standard deviation / sqrt(count); 0 for a single sample.
double ci95_of(const std::vector<double>& v) {
    const auto n = v.size();
    if (n < 2) return 0.0;
    const double mu = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return 1.96 * sd / std::sqrt(static_cast<double>(n));
}

struct LineFit {
    double slope, intercept, residual, correlation;
};

LineFit least_squares(const std::vector<double>& t, const std::vector<double>& y) {
    const auto n = static_cast<double>(t.size());
    const double mt = mean_of(t);
    const double my = mean_of(y);
    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (stt <= 0.0 || stt < 1e-14 * n * std::max(1.0, mt * mt))
        throw std::invalid_argument("fit: degenerate x spread after model transform");

    LineFit out{};
    out.slope = sty / stt;
    out.intercept = my - out.slope * mt;
    double rss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = y[i] - (out.slope * t[i] + out.intercept);
        rss += r * r;
    }
    out.residual = std::sqrt(rss);
    out.correlation = syy > 0.0 ? sty / std::sqrt(stt * syy) : 0.0;
    return out;
}

}  // namespace

EnsembleStats aggregate(const std::vector<solver::SweepProfile>& profiles) {
    if (profiles.empty()) throw std::invalid_argument("aggregate: no profiles");
    const int n = profiles.front().n_qubits;
    std::vector<double> max_ent, min_gap, s_gap, s_ent;
    for (const auto& p : profiles) {
        if (p.n_qubits != n)
            throw std::invalid_argument("aggregate: profiles mix different qubit counts");
        max_ent.push_back(p.max_entropy);
        min_gap.push_back(p.min_gap);
        s_gap.push_back(p.s_min_gap);
        s_ent.push_back(p.s_max_entropy);
    }

    EnsembleStats out;
    out.n_qubits = n;
    out.count = static_cast<int>(profiles.size());
    out.mean_max_entropy = mean_of(max_ent);
    out.worst_max_entropy = *std::max_element(max_ent.begin(), max_ent.end());
    out.ci95_entropy = ci95_of(max_ent);
    out.mean_min_gap = mean_of(min_gap);
    out.worst_min_gap = *std::min_element(min_gap.begin(), min_gap.end());
    out.ci95_gap = ci95_of(min_gap);
    out.mean_s_min_gap = mean_of(s_gap);
    out.mean_s_max_entropy = mean_of(s_ent);
    return out;
}

FitResult fit(const std::vector<double>& xs, const std::vector<double>& ys, FitModel model) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit: size mismatch");
    if (xs.size() < 3) throw std::invalid_argument("fit: need >= 3 points");
    std::vector<double> t(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        switch (model) {
            case FitModel::kLinear:
                t[i] = xs[i];
                break;
            case FitModel::kInverseN:
                t[i] = 1.0 / xs[i];
                break;
            case FitModel::kInverseNCubed:
                t[i] = 1.0 / (xs[i] * xs[i] * xs[i]);
                break;
        }
        if (!std::isfinite(t[i])) throw std::invalid_argument("fit: non-finite transformed x");
    }
    const LineFit lf = least_squares(t, ys);
    return FitResult{model, lf.slope, lf.intercept, lf.residual, lf.correlation};
}

CriticalFit fit_critical_region(const std::vector<double>& s, const std::vector<double>& entropy,
                                double s_c, double window_lo, double window_hi) {
    if (s.size() != entropy.size()) throw std::invalid_argument("fit_critical_region: size mismatch");
    if (s.size() < 2 || s_c <= s.front() || s_c >= s.back())
        throw std::invalid_argument("fit_critical_region: s_c must lie strictly inside the grid");
    if (!(window_lo > 0.0 && window_hi > window_lo))
        throw std::invalid_argument("fit_critical_region: bad window");

    std::vector<double> t_grow, y_grow, t_fall, y_fall;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = std::abs(s[i] - s_c);
        if (d < window_lo - 1e-12 || d > window_hi + 1e-12) continue;  // grid-fuzz tolerant
        if (s[i] < s_c) {
            // E = a log|log d| + c
            t_grow.push_back(std::log(std::abs(std::log(d))));
            y_grow.push_back(entropy[i]);
        } else if (entropy[i] > 0.0) {
            // log E = log b - alpha log d
            t_fall.push_back(std::log(d));
            y_fall.push_back(std::log(entropy[i]));
        }
    }
    if (t_grow.size() < 4 || t_fall.size() < 4)
        throw std::invalid_argument("fit_critical_region: window holds fewer than 4 points");

    CriticalFit out;
    const LineFit grow = least_squares(t_grow, y_grow);
    out.loglog_slope = grow.slope;
    out.loglog_intercept = grow.intercept;
    out.loglog_residual = grow.residual;
    const LineFit fall = least_squares(t_fall, y_fall);
    out.power_alpha = -fall.slope;
    out.power_log_coeff = fall.intercept;
    out.power_residual = fall.residual;
    return out;
}

double page_entropy(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("page_entropy: n must be even and >= 2");
    return 0.5 * n_qubits - 1.0 / (2.0 * std::log(2.0));
}

}  // namespace qent::stats
