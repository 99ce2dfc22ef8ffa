// exactcover.hpp
// Exact Cover instances (each clause: exactly one of k designated bits is 1),
// random generation of unique-assignment instances, and the interpolated
// Hamiltonian H(s) = (1-s) H0 + s Hp built from them.
//
//   Hp: diagonal, counts violated clauses per computational basis state.
//   H0: sum_i (d_i / 2) (1 - sigma_i^x), d_i = number of clauses on qubit i;
//       ground state is the uniform superposition with energy 0.
//
// H(s) is only ever applied implicitly (O(n 2^n) per matvec); no 2^n x 2^n
// matrix is materialized outside of test oracles.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qent/statevec.hpp"

namespace qent::ec {

struct Clause {
    // Distinct ascending qubit indices; size k in {3, 4}.
    std::vector<int> qubits;

    std::uint64_t mask() const;
    bool operator==(const Clause&) const = default;
};

Clause make_clause(std::vector<int> qubits, int n_qubits);

// True iff exactly one of the clause's bits is set in `assignment`.
bool clause_satisfied(std::uint64_t assignment, const Clause& clause);

// Exact count of assignments over n qubits satisfying every clause.
// Brute-force enumeration; refuses n > 24.
std::uint64_t count_satisfying(const std::vector<Clause>& clauses, int n_qubits);

class ExactCoverInstance {
public:
    // Verifies (by enumeration) that exactly one assignment satisfies all
    // clauses and that `assignment` is that assignment.
    ExactCoverInstance(int n_qubits, int k, std::vector<Clause> clauses,
                       std::uint64_t assignment, std::uint64_t seed = 0);

    int n_qubits() const { return n_qubits_; }
    int k() const { return k_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::uint64_t satisfying_assignment() const { return assignment_; }
    std::uint64_t seed() const { return seed_; }

    // Assignment as a bitstring, qubit 0 first.
    std::string assignment_bits() const;

private:
    int n_qubits_;
    int k_;
    std::vector<Clause> clauses_;
    std::uint64_t assignment_;
    std::uint64_t seed_;
};

// Random instance with exactly one satisfying assignment: clauses are drawn
// uniformly over k-subsets (duplicates rejected) and appended until the
// satisfier count reaches 1; reaching 0 discards all clauses and restarts.
// Throws ResourceLimitError after `restart_cap` restarts.
ExactCoverInstance generate_instance(int n_qubits, int k, std::uint64_t seed,
                                     int restart_cap = 100000);

// Violated-clause count per basis state (the Hp diagonal).
std::vector<std::uint16_t> problem_diagonal(const std::vector<Clause>& clauses, int n_qubits);
std::vector<std::uint16_t> problem_diagonal(const ExactCoverInstance& instance);

// d_i = number of clauses containing qubit i; sum(d) = k * #clauses.
std::vector<int> degrees(const std::vector<Clause>& clauses, int n_qubits);
std::vector<int> degrees(const ExactCoverInstance& instance);

struct InterpolatedHamiltonian {
    int n_qubits = 0;
    double s = 0.0;
    std::shared_ptr<const std::vector<std::uint16_t>> diagonal;  // Hp diagonal
    std::shared_ptr<const std::vector<int>> degree;              // d_i
    double half_degree_sum = 0.0;                                // sum(d_i) / 2

    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
    InterpolatedHamiltonian at(double s_new) const;
};

InterpolatedHamiltonian hamiltonian(const ExactCoverInstance& instance, double s);

// y = H(s) x on raw real vectors (H is real symmetric).
void apply(const InterpolatedHamiltonian& h, const double* x, double* y);

// H(s) |v> for complex state vectors. Output is not normalized.
std::vector<Complex> apply_hamiltonian(const InterpolatedHamiltonian& h,
                                       const StateVector& v);

}  // namespace qent::ec
