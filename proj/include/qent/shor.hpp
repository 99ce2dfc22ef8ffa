// shor.hpp
// Classical order finding, factor extraction from the order, and the
// entangled pre-QFT state (1/2^(k/2)) sum_q |q>|a^q mod N> whose reduced
// spectrum across the register split realizes rank = r, entropy ~ log2 r.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qent/statevec.hpp"

namespace qent::shor {

// Smallest r >= 1 with a^r = 1 (mod N). Requires N odd, 1 <= a < N and
// gcd(a, N) = 1 (throws NonCoprimeError carrying the gcd otherwise);
// brute-force guard N <= 2^20.
std::uint64_t order(std::uint64_t a, std::uint64_t N);

// (gcd(a^(r/2) - 1, N), gcd(a^(r/2) + 1, N)) when r is even and
// a^(r/2) != -1 (mod N); nullopt in the excluded cases.
std::optional<std::pair<std::uint64_t, std::uint64_t>> factors_from_order(std::uint64_t a,
                                                                          std::uint64_t N);

struct ShorCase {
    std::uint64_t N = 0;
    std::uint64_t a = 0;
    std::uint64_t r = 0;  // multiplicative order of a mod N
    int k = 0;            // source width: smallest k with 2^k >= N^2
    int n_target = 0;     // ceil(log2 N)

    int total_qubits() const { return k + n_target; }
};

// Validates N odd >= 3, coprimality, and computes r, k, n_target.
ShorCase make_case(std::uint64_t N, std::uint64_t a);

// Full k + n_target qubit state; source register in the high-order qubits,
// target in the low-order ones. Guard: k + n_target <= 26.
StateVector pre_qft_state(const ShorCase& c);

// The bipartition separating source from target registers.
BiPartition register_split(const ShorCase& c);

// Exact reduced spectrum across the register split from residue-class
// counting: the r distinct target values carry weights
// #{q < 2^k : q = p (mod r)} / 2^k. Descending.
std::vector<double> exact_target_spectrum(const ShorCase& c);

// Numeric reduced spectrum/entropy/rank of the pre-QFT state across the
// register split (subject to the pre_qft_state guard).
EntanglementReport target_spectrum(const ShorCase& c);

struct EntropyPrediction {
    double prediction = 0.0;  // log2 r, the leading scaling law
    double exact = 0.0;       // residue-class entropy, exact for the built k
};

EntropyPrediction entropy_prediction(const ShorCase& c);

}  // namespace qent::shor
