#include "qent/shor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qent/errors.hpp"

namespace qent::shor {

namespace {

constexpr std::uint64_t kOrderGuard = std::uint64_t{1} << 20;

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

std::uint64_t order(std::uint64_t a, std::uint64_t N) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("order: N must be odd and >= 3");
    if (N > kOrderGuard) throw ResourceLimitError("order: brute-force guard is N <= 2^20");
    if (a < 1 || a >= N) throw std::invalid_argument("order: need 1 <= a < N");
    const std::uint64_t g = std::gcd(a, N);
    if (g != 1)
        throw NonCoprimeError("order: gcd(a, N) = " + std::to_string(g) +
                                  " is already a factor of N",
                              g);
    std::uint64_t r = 1;
    std::uint64_t x = a % N;
    while (x != 1) {
        x = mul_mod(x, a, N);
        ++r;
    }
    return r;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> factors_from_order(std::uint64_t a,
                                                                          std::uint64_t N) {
    const std::uint64_t r = order(a, N);
    if (r % 2 != 0) return std::nullopt;
    const std::uint64_t half_power = pow_mod(a, r / 2, N);
    if (half_power == N - 1) return std::nullopt;  // a^(r/2) = -1 (mod N)
    const std::uint64_t p = std::gcd(half_power - 1, N);
    const std::uint64_t q = std::gcd(half_power + 1, N);
    return std::make_pair(p, q);
}

ShorCase make_case(std::uint64_t N, std::uint64_t a) {
    ShorCase c;
    c.N = N;
    c.a = a;
    c.r = order(a, N);  // validates N and a
    while ((std::uint64_t{1} << c.k) < N * N) ++c.k;
    while ((std::uint64_t{1} << c.n_target) < N) ++c.n_target;
    return c;
}

StateVector pre_qft_state(const ShorCase& c) {
    if (c.N < 3 || c.r == 0) throw std::invalid_argument("pre_qft_state: invalid case");
    if (c.total_qubits() > 26)
        throw ResourceLimitError("pre_qft_state: k + n_target <= 26 (memory guard)");
    const std::uint64_t source_dim = std::uint64_t{1} << c.k;
    const std::uint64_t dim = std::uint64_t{1} << c.total_qubits();
    const double amp = std::exp2(-0.5 * c.k);

    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    std::uint64_t value = 1 % c.N;  // a^q mod N, advanced multiplicatively
    for (std::uint64_t q = 0; q < source_dim; ++q) {
        amps[(q << c.n_target) | value] = Complex{amp, 0.0};
        value = mul_mod(value, c.a, c.N);
    }
    return StateVector(c.total_qubits(), std::move(amps));
}

BiPartition register_split(const ShorCase& c) {
    // Subsystem A = target register (the low n_target qubits).
    return BiPartition(c.total_qubits(), (std::uint64_t{1} << c.n_target) - 1);
}

std::vector<double> exact_target_spectrum(const ShorCase& c) {
    if (c.r == 0) throw std::invalid_argument("exact_target_spectrum: invalid case");
    const std::uint64_t source_dim = std::uint64_t{1} << c.k;
    std::vector<double> spectrum;
    spectrum.reserve(c.r);
    for (std::uint64_t p = 0; p < c.r; ++p) {
        // #{q in [0, 2^k) : q = p (mod r)} = ceil((2^k - p) / r)
        const std::uint64_t count = (source_dim - p + c.r - 1) / c.r;
        spectrum.push_back(static_cast<double>(count) / static_cast<double>(source_dim));
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    return spectrum;
}

EntanglementReport target_spectrum(const ShorCase& c) {
    return entanglement_report(pre_qft_state(c), register_split(c));
}

EntropyPrediction entropy_prediction(const ShorCase& c) {
    EntropyPrediction out;
    out.prediction = std::log2(static_cast<double>(c.r));
    out.exact = entropy_from_spectrum(exact_target_spectrum(c));
    return out;
}

}  // namespace qent::shor
