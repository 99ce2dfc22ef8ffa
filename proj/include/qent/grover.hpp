// grover.hpp
// Closed-form ground-state analysis of the adiabatic search Hamiltonian
// H(s) = (1-s)(I - |u><u|) + s(I - |x0><x0|), |u> the uniform superposition:
// ground energy, the rank-2 reduced density matrix across any n/2 cut, its
// eigenvalue pair and entropy, plus the exact state build for cross-checks.

#pragma once

#include <cstdint>
#include <vector>

#include "qent/statevec.hpp"

namespace qent::grover {

struct GroverPoint {
    int n_qubits = 0;
    double s = 0.0;
    double e_minus = 0.0;      // ground energy
    double alpha = 1.0;        // marked/unmarked amplitude ratio (inf at s=1)
    double b = 0.0;            // unmarked amplitude
    double A = 0.0, B = 0.0, C = 0.0;  // reduced-matrix entries
    double lambda_plus = 1.0;
    double lambda_minus = 0.0;
    double entropy_bits = 0.0;
    bool at_pole = false;      // alpha diverged (s = 1); limit values used
};

// Ground energy E_-(s) = (1 - sqrt((1-2s)^2 + 4 s(1-s)/2^n)) / 2, evaluated
// in the cancellation-free form 2 s (1-s) (1 - 2^-n) / (1 + sqrt(disc)).
// Any n >= 1 (the n/2-cut machinery below is what needs even n).
double ground_energy(int n_qubits, double s);

// Full evaluation chain alpha -> b -> A,B,C -> lambda -> entropy at one s.
// Requires even n in [2, 1000].
GroverPoint point(int n_qubits, double s);

std::vector<double> entropy_curve(int n_qubits, const std::vector<double>& s_grid);

// Large-n approximation of the s = 0.5 entropy, 1 - (4/ln 2) 2^(-n/2).
double asymptotic_entropy(int n_qubits);

// Exact ground state a|x0> + b sum_{x != x0} |x> (2^n amplitudes, n <= 20).
// The marked index is a bit relabeling and defaults to |0>.
StateVector numeric_state(int n_qubits, double s, std::uint64_t marked = 0);

}  // namespace qent::grover
