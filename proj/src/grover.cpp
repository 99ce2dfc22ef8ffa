#include "qent/grover.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qent/errors.hpp"

namespace qent::grover {

namespace {

constexpr int kMaxAnalyticQubits = 1000;  // 2^n must stay inside double range

void check_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("grover: s must lie in [0, 1]");
}

double discriminant_sqrt(int n, double s) {
    const double lin = 1.0 - 2.0 * s;
    return std::sqrt(lin * lin + 4.0 * std::exp2(-n) * s * (1.0 - s));
}

// 1/alpha. alpha = (1 + sqrt(D)) / (1 - 2s + sqrt(D)); the denominator is
// rewritten as 4 s (1-s) 2^-n / (sqrt(D) + 2s - 1) for s > 0.5, which is
// exact and avoids the cancellation of sqrt(D) against 2s - 1. The
// denominator vanishes only at s = 1 (the pole); t = 0 there.
double inverse_alpha(int n, double s) {
    if (s == 0.5) return 1.0 / (std::exp2(0.5 * n) + 1.0);  // alpha = 2^(n/2) + 1 exactly
    const double root = discriminant_sqrt(n, s);
    double denom;
    if (s < 0.5) {
        denom = (1.0 - 2.0 * s) + root;
    } else {
        denom = 4.0 * std::exp2(-n) * s * (1.0 - s) / (root + (2.0 * s - 1.0));
    }
    return denom / (1.0 + root);
}

double entropy_of_pair(double lp, double lm) {
    double e = 0.0;
    if (lp > 0.0) e -= lp * std::log2(lp);
    if (lm > 0.0) e -= lm * std::log2(lm);
    return e;
}

}  // namespace

double ground_energy(int n_qubits, double s) {
    if (n_qubits < 1 || n_qubits > kMaxAnalyticQubits)
        throw std::invalid_argument("ground_energy: n out of range [1, 1000]");
    check_s(s);
    return 2.0 * s * (1.0 - s) * (1.0 - std::exp2(-n_qubits)) /
           (1.0 + discriminant_sqrt(n_qubits, s));
}

GroverPoint point(int n_qubits, double s) {
    if (n_qubits < 2 || n_qubits > kMaxAnalyticQubits)
        throw std::invalid_argument("point: n out of range [2, 1000]");
    if (n_qubits % 2 != 0)
        throw std::invalid_argument("point: the reduced-matrix chain needs even n");
    check_s(s);

    GroverPoint p;
    p.n_qubits = n_qubits;
    p.s = s;
    p.e_minus = ground_energy(n_qubits, s);

    // Everything downstream is a rational function of t = 1/alpha; this form
    // stays finite through the s = 1 pole (t -> 0) and for alpha ~ 2^n.
    const double t = inverse_alpha(n_qubits, s);
    const double big = std::exp2(n_qubits) - 1.0;       // 2^n - 1
    const double half = std::exp2(n_qubits / 2) - 1.0;  // 2^(n/2) - 1
    p.at_pole = (t == 0.0);
    p.alpha = p.at_pole ? std::numeric_limits<double>::infinity() : 1.0 / t;

    const double denom = 1.0 + big * t * t;
    p.b = t / std::sqrt(denom);  // b^2 = 1 / (2^n - 1 + alpha^2)
    p.A = (1.0 + half * t * t) / denom;
    p.B = (t + half * t * t) / denom;
    p.C = (half + 1.0) * t * t / denom;

    // 4 (2^(n/2)-1)(AC - B^2) == g^2 with g = 2 (2^(n/2)-1) t (1-t) / denom;
    // the identity AC - B^2 = (2^(n/2)-1) [t(1-t)]^2 / denom^2 removes the
    // subtraction. lambda_- is recovered from lambda_+ lambda_- = g^2 / 4.
    const double g = 2.0 * half * t * (1.0 - t) / denom;
    const double rad = std::max(0.0, 1.0 - g * g);
    p.lambda_plus = 0.5 * (1.0 + std::sqrt(rad));
    p.lambda_minus = 0.25 * g * g / p.lambda_plus;
    p.entropy_bits = entropy_of_pair(p.lambda_plus, p.lambda_minus);
    return p;
}

std::vector<double> entropy_curve(int n_qubits, const std::vector<double>& s_grid) {
    std::vector<double> curve;
    curve.reserve(s_grid.size());
    for (double s : s_grid) curve.push_back(point(n_qubits, s).entropy_bits);
    return curve;
}

double asymptotic_entropy(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("asymptotic_entropy: n must be even and >= 2");
    return 1.0 - (4.0 / std::log(2.0)) * std::exp2(-0.5 * n_qubits);
}

StateVector numeric_state(int n_qubits, double s, std::uint64_t marked) {
    if (n_qubits < 2) throw std::invalid_argument("numeric_state: n < 2");
    if (n_qubits > 20) throw ResourceLimitError("numeric_state: n <= 20 (2^n amplitudes)");
    check_s(s);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (marked >= dim) throw std::invalid_argument("numeric_state: marked index out of range");

    const double t = inverse_alpha(n_qubits, s);
    const double big = std::exp2(n_qubits) - 1.0;
    const double a = 1.0 / std::sqrt(1.0 + big * t * t);  // alpha * b
    const double b = t * a;

    std::vector<Complex> amps(dim, Complex{b, 0.0});
    amps[marked] = Complex{a, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

}  // namespace qent::grover
