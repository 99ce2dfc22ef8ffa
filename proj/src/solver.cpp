#include "qent/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qent/errors.hpp"
#include "qent/rng.hpp"

namespace qent::solver {

namespace {

constexpr double kDegeneracyTol = 1e-9;

StateVector to_state(int n_qubits, const Eigen::VectorXd& v) {
    Eigen::VectorXd u = v / v.norm();
    std::vector<Complex> amps(static_cast<std::size_t>(u.size()));
    for (Eigen::Index i = 0; i < u.size(); ++i) amps[static_cast<std::size_t>(i)] = Complex{u(i), 0.0};
    return StateVector(n_qubits, std::move(amps));
}

// Global sign conventions so results are reproducible: the ground vector is
// entrywise nonnegative for s in (0,1) (Perron-Frobenius; the off-diagonal
// couplings are nonpositive), so its entry sum fixes the sign. The excited
// vector gets its largest-magnitude entry made positive.
void fix_ground_sign(Eigen::VectorXd& v) {
    if (v.sum() < 0.0) v = -v;
}

void fix_excited_sign(Eigen::VectorXd& v) {
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
}

Eigen::MatrixXd dense_matrix(const ec::InterpolatedHamiltonian& h) {
    const auto dim = static_cast<Eigen::Index>(h.dim());
    const auto& diag = *h.diagonal;
    const auto& deg = *h.degree;
    const double off = 1.0 - h.s;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b)
        m(b, b) = h.s * diag[static_cast<std::size_t>(b)] + off * h.half_degree_sum;
    for (int i = 0; i < h.n_qubits; ++i) {
        const double w = -off * 0.5 * deg[static_cast<std::size_t>(i)];
        const Eigen::Index bit = Eigen::Index{1} << i;
        for (Eigen::Index b = 0; b < dim; ++b) m(b, b ^ bit) += w;
    }
    return m;
}

LowestTwo finish(const ec::InterpolatedHamiltonian& h, double e0, double e1,
                 Eigen::VectorXd v0, Eigen::VectorXd v1, int matvecs) {
    const auto dim = static_cast<Eigen::Index>(h.dim());
    fix_ground_sign(v0);
    fix_excited_sign(v1);
    v0.normalize();
    v1.normalize();

    Eigen::VectorXd hv(dim);
    ec::apply(h, v0.data(), hv.data());
    const double r0 = (hv - e0 * v0).norm();
    ec::apply(h, v1.data(), hv.data());
    const double r1 = (hv - e1 * v1).norm();

    LowestTwo out{e0, e1, to_state(h.n_qubits, v0), to_state(h.n_qubits, v1),
                  (e1 - e0) < kDegeneracyTol, matvecs + 2, r0, r1};
    return out;
}

LowestTwo lowest_two_dense(const ec::InterpolatedHamiltonian& h) {
    if (h.n_qubits > 12)
        throw ResourceLimitError("lowest_two: dense path is guarded at n <= 12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_matrix(h));
    if (es.info() != Eigen::Success)
        throw ConvergenceError("lowest_two: dense eigensolver failed", 0.0);
    return finish(h, es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvectors().col(0),
                  es.eigenvectors().col(1), 0);
}

// Thick-restart Lanczos with full (two-pass classical Gram-Schmidt)
// reorthogonalization. The projected operator is kept as a dense symmetric
// matrix: after a restart the kept Ritz columns couple to the carried
// residual vector, and the explicit projections pick those entries up
// without special-casing the arrow structure.
LowestTwo lowest_two_lanczos(const ec::InterpolatedHamiltonian& h, const SolveOptions& opts) {
    const auto dim = static_cast<Eigen::Index>(h.dim());
    int m = opts.max_basis;
    if (m <= 0) {
        const Eigen::Index budget = (Eigen::Index{640} << 20) / (8 * dim);
        m = static_cast<int>(std::clamp<Eigen::Index>(budget, 16, 192));
    }
    m = static_cast<int>(std::min<Eigen::Index>(m, dim));
    const int keep = std::min(12, std::max(4, m / 4));

    Rng rng(opts.seed);
    Eigen::MatrixXd basis(dim, m + 1);
    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd w(dim), coeffs, correction;

    for (Eigen::Index i = 0; i < dim; ++i) w(i) = 2.0 * uniform_unit(rng) - 1.0;
    basis.col(0) = w / w.norm();

    int matvecs = 0;
    int first_new = 0;  // columns below this hold kept Ritz vectors
    double last_beta = 0.0;
    double best_residual = std::numeric_limits<double>::infinity();

    const auto converged = [&](double theta, double res) {
        return res <= opts.tol * std::max(1.0, std::abs(theta));
    };

    for (int cycle = 0; cycle <= opts.max_restarts; ++cycle) {
        for (int j = first_new; j < m; ++j) {
            ec::apply(h, basis.col(j).data(), w.data());
            ++matvecs;

            const auto cur = basis.leftCols(j + 1);
            coeffs = cur.transpose() * w;
            w.noalias() -= cur * coeffs;
            correction = cur.transpose() * w;
            w.noalias() -= cur * correction;
            coeffs += correction;
            projected.col(j).head(j + 1) = coeffs;
            projected.row(j).head(j + 1) = coeffs.transpose();

            last_beta = w.norm();
            const int nb = j + 1;
            bool breakdown = false;
            if (last_beta < 1e-12 * std::max(1.0, projected.topLeftCorner(nb, nb).norm())) {
                // Invariant subspace: Ritz pairs in it are exact. Refill with
                // a fresh direction so the search can widen if needed.
                breakdown = true;
                for (Eigen::Index i = 0; i < dim; ++i) w(i) = 2.0 * uniform_unit(rng) - 1.0;
                w.noalias() -= cur * (cur.transpose() * w);
                w.noalias() -= cur * (cur.transpose() * w);
                last_beta = 0.0;
                const double wn = w.norm();
                if (wn < 1e-8 && nb >= 2) {
                    // The basis spans the whole space: Ritz pairs are exact.
                    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
                        projected.topLeftCorner(nb, nb));
                    Eigen::VectorXd v0 = basis.leftCols(nb) * es.eigenvectors().col(0);
                    Eigen::VectorXd v1 = basis.leftCols(nb) * es.eigenvectors().col(1);
                    return finish(h, es.eigenvalues()(0), es.eigenvalues()(1), std::move(v0),
                                  std::move(v1), matvecs);
                }
                basis.col(j + 1) = w / wn;
            } else {
                basis.col(j + 1) = w / last_beta;
            }

            if (nb >= 2 && (breakdown || nb % 4 == 0 || j == m - 1)) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
                    projected.topLeftCorner(nb, nb));
                const double res0 = last_beta * std::abs(es.eigenvectors()(nb - 1, 0));
                const double res1 = last_beta * std::abs(es.eigenvectors()(nb - 1, 1));
                best_residual = std::min(best_residual, std::max(res0, res1));
                if (converged(es.eigenvalues()(0), res0) && converged(es.eigenvalues()(1), res1)) {
                    Eigen::VectorXd v0 = basis.leftCols(nb) * es.eigenvectors().col(0);
                    Eigen::VectorXd v1 = basis.leftCols(nb) * es.eigenvectors().col(1);
                    return finish(h, es.eigenvalues()(0), es.eigenvalues()(1), std::move(v0),
                                  std::move(v1), matvecs);
                }
            }
        }

        // Restart: keep the lowest Ritz vectors plus the carried residual
        // vector (already orthonormal to them).
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected);
        const int k = std::min(keep, m - 1);
        Eigen::MatrixXd kept = basis.leftCols(m) * es.eigenvectors().leftCols(k);
        basis.leftCols(k) = kept;
        basis.col(k) = basis.col(m);
        projected.setZero();
        for (int i = 0; i < k; ++i) projected(i, i) = es.eigenvalues()(i);
        first_new = k;
    }
    throw ConvergenceError("lowest_two: Lanczos did not reach tolerance " +
                               std::to_string(opts.tol),
                           best_residual);
}

}  // namespace

LowestTwo lowest_two(const ec::InterpolatedHamiltonian& h, const SolveOptions& opts) {
    if (h.n_qubits > 24) throw ResourceLimitError("lowest_two: n <= 24");
    if (h.dim() < 2) throw std::invalid_argument("lowest_two: need at least 2 basis states");
    switch (opts.method) {
        case Method::kDense:
            return lowest_two_dense(h);
        case Method::kLanczos:
            return lowest_two_lanczos(h, opts);
        case Method::kAuto:
        default:
            return h.n_qubits <= 6 ? lowest_two_dense(h) : lowest_two_lanczos(h, opts);
    }
}

double h10(const StateVector& ground, const StateVector& excited,
           const ec::InterpolatedHamiltonian& h) {
    if (ground.n_qubits() != h.n_qubits || excited.n_qubits() != h.n_qubits)
        throw std::invalid_argument("h10: dimension mismatch");
    Complex overlap{0.0, 0.0};
    for (std::uint64_t b = 0; b < h.dim(); ++b)
        overlap += std::conj(excited[b]) * ground[b];
    if (std::abs(overlap) > 1e-8)
        throw std::invalid_argument("h10: states are not orthogonal");

    const auto hp_v = ec::apply_hamiltonian(h.at(1.0), ground);
    const auto h0_v = ec::apply_hamiltonian(h.at(0.0), ground);
    Complex elem{0.0, 0.0};
    for (std::uint64_t b = 0; b < h.dim(); ++b)
        elem += std::conj(excited[b]) * (hp_v[b] - h0_v[b]);
    return std::abs(elem);
}

std::vector<double> uniform_grid(double step) {
    if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("uniform_grid: bad step");
    const auto count = static_cast<int>(std::llround(1.0 / step));
    if (std::abs(count * step - 1.0) > 1e-9)
        throw std::invalid_argument("uniform_grid: step must divide 1");
    std::vector<double> grid(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i <= count; ++i) grid[static_cast<std::size_t>(i)] = i * step;
    grid.back() = 1.0;
    return grid;
}

SweepProfile sweep(const ec::ExactCoverInstance& instance, const std::vector<double>& s_grid,
                   const BiPartition& part, const SolveOptions& opts,
                   const std::string& instance_id) {
    if (s_grid.size() < 2) throw std::invalid_argument("sweep: grid needs >= 2 points");
    for (std::size_t i = 2; i < s_grid.size(); ++i)
        if (std::abs((s_grid[i] - s_grid[i - 1]) - (s_grid[1] - s_grid[0])) > 1e-9)
            throw std::invalid_argument("sweep: grid step must be uniform");
    if (part.n_qubits != instance.n_qubits())
        throw std::invalid_argument("sweep: partition does not match instance");

    SweepProfile profile;
    profile.instance_id = instance_id;
    profile.n_qubits = instance.n_qubits();
    profile.s_grid = s_grid;
    profile.records.reserve(s_grid.size());

    auto h = ec::hamiltonian(instance, 0.0);
    for (double s : s_grid) {
        const auto pair = lowest_two(h.at(s), opts);
        SweepRecord rec;
        rec.s = s;
        rec.e0 = pair.e0;
        rec.e1 = pair.e1;
        rec.gap = pair.e1 - pair.e0;
        rec.entropy_bits = entropy(pair.ground, part);
        rec.h10_abs = h10(pair.ground, pair.excited, h.at(s));
        profile.records.push_back(rec);
    }

    const auto [s_gap, s_ent] = critical_points(profile);
    profile.s_min_gap = s_gap;
    profile.s_max_entropy = s_ent;
    for (const auto& rec : profile.records) {
        if (rec.s == s_gap) profile.min_gap = rec.gap;
        if (rec.s == s_ent) profile.max_entropy = rec.entropy_bits;
    }
    return profile;
}

std::pair<double, double> critical_points(const SweepProfile& profile) {
    if (profile.records.empty()) throw std::invalid_argument("critical_points: empty profile");
    double s_gap = profile.records.front().s;
    double min_gap = profile.records.front().gap;
    double s_ent = profile.records.front().s;
    double max_ent = profile.records.front().entropy_bits;
    for (const auto& rec : profile.records) {
        if (rec.gap < min_gap) {
            min_gap = rec.gap;
            s_gap = rec.s;
        }
        if (rec.entropy_bits > max_ent) {
            max_ent = rec.entropy_bits;
            s_ent = rec.s;
        }
    }
    return {s_gap, s_ent};
}

}  // namespace qent::solver
