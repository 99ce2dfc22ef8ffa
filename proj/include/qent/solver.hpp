// solver.hpp
// Lowest-two eigenpairs of H(s), s-grid sweeps (gap / entropy / H_{1,0}
// profiles) and on-grid critical-point location.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qent/exactcover.hpp"
#include "qent/statevec.hpp"

namespace qent::solver {

enum class Method {
    kAuto,     // dense for n <= 12, Lanczos above
    kDense,    // full symmetric diagonalization (n <= 12; the oracle path)
    kLanczos,  // thick-restart Lanczos over the implicit matvec
};

struct SolveOptions {
    double tol = 1e-10;  // residual tolerance, relative to max(1, |e|)
    std::uint64_t seed = 0;
    Method method = Method::kAuto;
    int max_basis = 0;  // 0 = choose from dimension / memory budget
    int max_restarts = 80;
};

struct LowestTwo {
    double e0 = 0.0;
    double e1 = 0.0;
    StateVector ground;
    StateVector excited;
    bool degenerate = false;  // e1 - e0 below 1e-9
    int matvecs = 0;
    double residual0 = 0.0;
    double residual1 = 0.0;
};

// Two smallest eigenvalues of H(s) with normalized eigenvectors. The ground
// vector is sign-fixed to nonnegative overall phase (its entries are
// nonnegative for s in (0,1) by Perron-Frobenius). Deterministic for a fixed
// seed. Throws ConvergenceError if the residual target is not met.
LowestTwo lowest_two(const ec::InterpolatedHamiltonian& h, const SolveOptions& opts = {});

// |<E1| (Hp - H0) |E0>|, the s-derivative matrix element of H(s). The two
// states must be orthonormal (checked to 1e-8).
double h10(const StateVector& ground, const StateVector& excited,
           const ec::InterpolatedHamiltonian& h);

struct SweepRecord {
    double s = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
    double entropy_bits = 0.0;
    double h10_abs = 0.0;
};

struct SweepProfile {
    std::string instance_id;
    int n_qubits = 0;
    std::vector<double> s_grid;
    std::vector<SweepRecord> records;
    double s_min_gap = 0.0;
    double min_gap = 0.0;
    double s_max_entropy = 0.0;
    double max_entropy = 0.0;
};

// Uniform grid 0, step, 2*step, ..., 1. step must divide 1 on the grid.
std::vector<double> uniform_grid(double step);

// Full profile over the grid: lowest_two + bipartition entropy + h10 at each
// s. Extrema are located on the grid; ties go to the smaller s.
SweepProfile sweep(const ec::ExactCoverInstance& instance, const std::vector<double>& s_grid,
                   const BiPartition& part, const SolveOptions& opts = {},
                   const std::string& instance_id = {});

// Grid arguments of the minimum gap and maximum entropy (ties: smaller s).
std::pair<double, double> critical_points(const SweepProfile& profile);

}  // namespace qent::solver
