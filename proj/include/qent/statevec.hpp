// statevec.hpp
// Pure n-qubit state container and bipartition entanglement analysis:
// reduced spectra, von Neumann entropy (base 2) and Schmidt rank.
//
// Conventions, fixed globally:
//   * basis index bit i holds the value of qubit i (qubit 0 = least
//     significant bit);
//   * a bipartition is a bitmask over qubits selecting subsystem A.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace qent {

using Complex = std::complex<double>;

class StateVector {
public:
    // Validates dimension (2^n) and normalization (1e-12 on the squared sum).
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

    static StateVector basis(int n_qubits, std::uint64_t basis_index);
    static StateVector uniform(int n_qubits);
    static StateVector bell();             // (|00> + |11>)/sqrt(2)
    static StateVector ghz(int n_qubits);  // (|0..0> + |1..1>)/sqrt(2)
    static StateVector w(int n_qubits);    // sum of one-hot states / sqrt(n)

private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

struct BiPartition {
    // mask_a must be nonzero, not all-ones, and < 2^n (both subsystems
    // non-empty).
    BiPartition(int n_qubits, std::uint64_t mask_a);

    int n_qubits;
    std::uint64_t mask_a;

    int size_a() const;
    int size_b() const { return n_qubits - size_a(); }
    BiPartition complement() const;

    // First floor(n/2) qubits vs the rest (the default split in sweeps).
    static BiPartition half(int n_qubits);
};

struct EntanglementReport {
    std::vector<double> spectrum;  // descending, clamped nonnegative
    double entropy_bits = 0.0;
    int schmidt_rank = 1;
};

// Eigenvalues of rho_A = Tr_B |psi><psi|, descending. Computed from the
// singular values of the 2^|A| x 2^|B| amplitude reshape, oriented so the
// SVD runs on the smaller side; rho_A itself is never materialized. The
// returned list has min(2^|A|, 2^|B|) entries; values below 1e-14 are
// clamped to zero.
std::vector<double> reduced_spectrum(const StateVector& state, const BiPartition& part);

// Base-2 von Neumann entropy of the reduced state, with 0*log(0) := 0.
double entropy(const StateVector& state, const BiPartition& part);
double entropy_from_spectrum(const std::vector<double>& spectrum);

// Number of reduced eigenvalues above tol; tol must lie in (0, 1).
int schmidt_rank(const StateVector& state, const BiPartition& part, double tol = 1e-10);

EntanglementReport entanglement_report(const StateVector& state, const BiPartition& part,
                                       double rank_tol = 1e-10);

struct PartitionExtremes {
    double min_entropy;
    std::uint64_t min_mask;
    double max_entropy;
    std::uint64_t max_mask;
};

// Entropy extremes over a caller-supplied partition list (full enumeration
// for small n, a sampled subset for large n). Ties keep the earliest mask.
PartitionExtremes partition_extremes(const StateVector& state,
                                     const std::vector<BiPartition>& partitions);

// All 2^(n-1) - 1 canonical bipartitions (qubit 0 in A; the complementary
// mask gives the same entropy, so one representative per unordered split).
std::vector<BiPartition> enumerate_bipartitions(int n_qubits);

// Deterministic sample of `count` distinct canonical bipartitions.
std::vector<BiPartition> sample_bipartitions(int n_qubits, int count, std::uint64_t seed);

}  // namespace qent
