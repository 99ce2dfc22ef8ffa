#include "qent/statevec.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qent/errors.hpp"
#include "qent/rng.hpp"

namespace qent {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kSpectrumFloor = 1e-14;  // squared singular values below this count as 0

double squared_norm(const std::vector<Complex>& amps) {
    const auto map = Eigen::Map<const Eigen::VectorXcd>(amps.data(),
                                                        static_cast<Eigen::Index>(amps.size()));
    return map.squaredNorm();
}

// Compresses the bits of `basis` selected by `mask` into a dense index,
// preserving qubit order.
std::uint64_t extract_bits(std::uint64_t basis, std::uint64_t mask) {
    std::uint64_t out = 0;
    int pos = 0;
    while (mask != 0) {
        const std::uint64_t low = mask & (~mask + 1);
        if (basis & low) out |= std::uint64_t{1} << pos;
        ++pos;
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits_ < 1 || n_qubits_ > 30)
        throw std::invalid_argument("StateVector: n_qubits out of range [1, 30]");
    if (amps_.size() != (std::uint64_t{1} << n_qubits_))
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    const double norm2 = squared_norm(amps_);
    if (std::abs(norm2 - 1.0) > kNormTol)
        throw InvalidStateError("StateVector: squared amplitudes sum to " + std::to_string(norm2) +
                                ", not 1 within 1e-12");
}

StateVector StateVector::basis(int n_qubits, std::uint64_t basis_index) {
    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    if (basis_index >= amps.size())
        throw std::invalid_argument("StateVector::basis: index out of range");
    amps[basis_index] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::uniform(int n_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    std::vector<Complex> amps(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::bell() {
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    amps[0b00] = amps[0b11] = Complex{1.0 / std::sqrt(2.0), 0.0};
    return StateVector(2, std::move(amps));
}

StateVector StateVector::ghz(int n_qubits) {
    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    amps.front() = amps.back() = Complex{1.0 / std::sqrt(2.0), 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::w(int n_qubits) {
    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    const Complex a{1.0 / std::sqrt(static_cast<double>(n_qubits)), 0.0};
    for (int i = 0; i < n_qubits; ++i) amps[std::uint64_t{1} << i] = a;
    return StateVector(n_qubits, std::move(amps));
}

BiPartition::BiPartition(int n_qubits, std::uint64_t mask_a)
    : n_qubits(n_qubits), mask_a(mask_a) {
    if (n_qubits < 2) throw std::invalid_argument("BiPartition: need at least 2 qubits");
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    if (mask_a == 0 || mask_a >= full)
        throw std::invalid_argument("BiPartition: mask must keep both subsystems non-empty");
}

int BiPartition::size_a() const { return std::popcount(mask_a); }

BiPartition BiPartition::complement() const {
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    return BiPartition(n_qubits, full & ~mask_a);
}

BiPartition BiPartition::half(int n_qubits) {
    return BiPartition(n_qubits, (std::uint64_t{1} << (n_qubits / 2)) - 1);
}

namespace {

// JacobiSVD, not BDCSVD: Eigen 3.4.0's divide-and-conquer path silently
// corrupts spectra of rank-deficient matrices with repeated singular values,
// which is exactly what these reshapes are.
template <typename Scalar, typename Fill>
std::vector<double> reshape_svd_spectrum(Eigen::Index rows, Eigen::Index cols, Fill&& fill) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
    fill(m);
    Eigen::JacobiSVD<decltype(m)> svd(m);
    std::vector<double> spectrum(static_cast<std::size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double lambda = svd.singularValues()(i) * svd.singularValues()(i);
        spectrum[static_cast<std::size_t>(i)] = lambda < kSpectrumFloor ? 0.0 : lambda;
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    return spectrum;
}

}  // namespace

std::vector<double> reduced_spectrum(const StateVector& state, const BiPartition& part) {
    if (part.n_qubits != state.n_qubits())
        throw std::invalid_argument("reduced_spectrum: partition qubit count mismatch");

    // Orient the reshape with the smaller subsystem on the rows; the nonzero
    // singular values are shared between rho_A and rho_B.
    const std::uint64_t full = (std::uint64_t{1} << state.n_qubits()) - 1;
    std::uint64_t row_mask = part.mask_a;
    std::uint64_t col_mask = full & ~part.mask_a;
    if (std::popcount(row_mask) > std::popcount(col_mask)) std::swap(row_mask, col_mask);

    const auto rows = Eigen::Index{1} << std::popcount(row_mask);
    const auto cols = Eigen::Index{1} << std::popcount(col_mask);
    const auto& amps = state.amplitudes();

    bool real_valued = true;
    for (const auto& a : amps) real_valued = real_valued && a.imag() == 0.0;

    if (real_valued)  // solver/Grover/Shor states are real; real rotations are ~4x cheaper
        return reshape_svd_spectrum<double>(rows, cols, [&](Eigen::MatrixXd& m) {
            for (std::uint64_t b = 0; b < amps.size(); ++b)
                m(static_cast<Eigen::Index>(extract_bits(b, row_mask)),
                  static_cast<Eigen::Index>(extract_bits(b, col_mask))) = amps[b].real();
        });
    return reshape_svd_spectrum<Complex>(rows, cols, [&](Eigen::MatrixXcd& m) {
        for (std::uint64_t b = 0; b < amps.size(); ++b)
            m(static_cast<Eigen::Index>(extract_bits(b, row_mask)),
              static_cast<Eigen::Index>(extract_bits(b, col_mask))) = amps[b];
    });
}

double entropy_from_spectrum(const std::vector<double>& spectrum) {
    double e = 0.0;
    for (double lambda : spectrum)
        if (lambda > 0.0) e -= lambda * std::log2(lambda);
    return std::max(e, 0.0);  // an eigenvalue rounding to 1+eps must not go negative
}

double entropy(const StateVector& state, const BiPartition& part) {
    return entropy_from_spectrum(reduced_spectrum(state, part));
}

int schmidt_rank(const StateVector& state, const BiPartition& part, double tol) {
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("schmidt_rank: tol must lie in (0, 1)");
    const auto spectrum = reduced_spectrum(state, part);
    int rank = 0;
    for (double lambda : spectrum)
        if (lambda > tol) ++rank;
    return std::max(rank, 1);
}

EntanglementReport entanglement_report(const StateVector& state, const BiPartition& part,
                                       double rank_tol) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0))
        throw std::invalid_argument("entanglement_report: tol must lie in (0, 1)");
    EntanglementReport report;
    report.spectrum = reduced_spectrum(state, part);
    report.entropy_bits = entropy_from_spectrum(report.spectrum);
    int rank = 0;
    for (double lambda : report.spectrum)
        if (lambda > rank_tol) ++rank;
    report.schmidt_rank = std::max(rank, 1);
    return report;
}

PartitionExtremes partition_extremes(const StateVector& state,
                                     const std::vector<BiPartition>& partitions) {
    if (partitions.empty())
        throw std::invalid_argument("partition_extremes: empty partition list");
    PartitionExtremes ext{};
    bool first = true;
    for (const auto& part : partitions) {
        const double e = entropy(state, part);
        if (first || e < ext.min_entropy) {
            ext.min_entropy = e;
            ext.min_mask = part.mask_a;
        }
        if (first || e > ext.max_entropy) {
            ext.max_entropy = e;
            ext.max_mask = part.mask_a;
        }
        first = false;
    }
    return ext;
}

std::vector<BiPartition> enumerate_bipartitions(int n_qubits) {
    if (n_qubits < 2) throw std::invalid_argument("enumerate_bipartitions: need >= 2 qubits");
    if (n_qubits > 20) throw ResourceLimitError("enumerate_bipartitions: n > 20");
    // Canonical representative: qubit 0 in A. Skips the all-ones mask.
    std::vector<BiPartition> parts;
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    parts.reserve((std::uint64_t{1} << (n_qubits - 1)) - 1);
    for (std::uint64_t m = 1; m < full; m += 2) parts.emplace_back(n_qubits, m);
    return parts;
}

std::vector<BiPartition> sample_bipartitions(int n_qubits, int count, std::uint64_t seed) {
    if (n_qubits < 2) throw std::invalid_argument("sample_bipartitions: need >= 2 qubits");
    if (n_qubits > 62) throw std::invalid_argument("sample_bipartitions: n too large");
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    const std::uint64_t distinct = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    if (count < 1 || static_cast<std::uint64_t>(count) > distinct)
        throw std::invalid_argument("sample_bipartitions: count out of range");

    Rng rng(seed);
    std::set<std::uint64_t> masks;
    while (masks.size() < static_cast<std::size_t>(count)) {
        // Canonicalize by complementing masks that exclude qubit 0.
        std::uint64_t m = 1 + uniform_below(rng, full - 1);  // in [1, full-1]
        if ((m & 1) == 0) m = full & ~m;
        masks.insert(m);
    }
    std::vector<BiPartition> parts;
    parts.reserve(masks.size());
    for (std::uint64_t m : masks) parts.emplace_back(n_qubits, m);
    return parts;
}

}  // namespace qent
