#include "qent/exactcover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "qent/errors.hpp"
#include "qent/rng.hpp"

namespace qent::ec {

namespace {

constexpr int kCountGuard = 24;  // enumeration ceiling for count_satisfying

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace

std::uint64_t Clause::mask() const {
    std::uint64_t m = 0;
    for (int q : qubits) m |= std::uint64_t{1} << q;
    return m;
}

Clause make_clause(std::vector<int> qubits, int n_qubits) {
    std::sort(qubits.begin(), qubits.end());
    const int k = static_cast<int>(qubits.size());
    if (k != 3 && k != 4) throw std::invalid_argument("Clause: arity must be 3 or 4");
    for (int i = 0; i < k; ++i) {
        if (qubits[i] < 0 || qubits[i] >= n_qubits)
            throw std::invalid_argument("Clause: qubit index out of range");
        if (i > 0 && qubits[i] == qubits[i - 1])
            throw std::invalid_argument("Clause: qubit indices must be distinct");
    }
    return Clause{std::move(qubits)};
}

bool clause_satisfied(std::uint64_t assignment, const Clause& clause) {
    return std::popcount(assignment & clause.mask()) == 1;
}

std::uint64_t count_satisfying(const std::vector<Clause>& clauses, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("count_satisfying: n_qubits < 1");
    if (n_qubits > kCountGuard)
        throw ResourceLimitError("count_satisfying: enumeration guard is n <= 24");
    std::vector<std::uint64_t> masks;
    masks.reserve(clauses.size());
    for (const auto& c : clauses) masks.push_back(c.mask());

    std::uint64_t count = 0;
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    for (std::uint64_t b = 0; b < dim; ++b) {
        bool ok = true;
        for (std::uint64_t m : masks) ok = ok && (std::popcount(b & m) == 1);
        count += ok ? 1 : 0;
    }
    return count;
}

ExactCoverInstance::ExactCoverInstance(int n_qubits, int k, std::vector<Clause> clauses,
                                       std::uint64_t assignment, std::uint64_t seed)
    : n_qubits_(n_qubits), k_(k), clauses_(std::move(clauses)), assignment_(assignment),
      seed_(seed) {
    if (k != 3 && k != 4) throw std::invalid_argument("ExactCoverInstance: k must be 3 or 4");
    if (n_qubits < k) throw std::invalid_argument("ExactCoverInstance: n_qubits < k");
    if (clauses_.empty()) throw std::invalid_argument("ExactCoverInstance: no clauses");
    if (clauses_.size() >= 0xffff)
        throw std::invalid_argument("ExactCoverInstance: too many clauses");
    for (const auto& c : clauses_) {
        if (static_cast<int>(c.qubits.size()) != k)
            throw std::invalid_argument("ExactCoverInstance: mixed clause arity");
        for (int q : c.qubits)
            if (q < 0 || q >= n_qubits)
                throw std::invalid_argument("ExactCoverInstance: clause index out of range");
    }
    if (count_satisfying(clauses_, n_qubits_) != 1)
        throw std::invalid_argument(
            "ExactCoverInstance: clause set does not have exactly one satisfying assignment");
    for (const auto& c : clauses_)
        if (!clause_satisfied(assignment_, c))
            throw std::invalid_argument(
                "ExactCoverInstance: stored assignment violates a clause");
}

std::string ExactCoverInstance::assignment_bits() const {
    std::string bits(static_cast<std::size_t>(n_qubits_), '0');
    for (int i = 0; i < n_qubits_; ++i)
        if (assignment_ >> i & 1) bits[static_cast<std::size_t>(i)] = '1';
    return bits;
}

ExactCoverInstance generate_instance(int n_qubits, int k, std::uint64_t seed, int restart_cap) {
    if (k != 3 && k != 4) throw std::invalid_argument("generate_instance: k must be 3 or 4");
    if (n_qubits < k) throw std::invalid_argument("generate_instance: n_qubits < k");
    if (n_qubits > kCountGuard)
        throw ResourceLimitError("generate_instance: enumeration guard is n <= 24");

    Rng rng(seed);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const std::uint64_t max_clauses = binomial(n_qubits, k);

    std::vector<std::uint64_t> all(dim);
    std::iota(all.begin(), all.end(), std::uint64_t{0});

    for (int restart = 0; restart < restart_cap; ++restart) {
        std::vector<Clause> clauses;
        std::vector<std::uint64_t> satisfiers = all;
        while (true) {
            if (clauses.size() == max_clauses) break;  // no fresh clause left: restart
            Clause c{sample_distinct(rng, n_qubits, k)};
            if (std::find(clauses.begin(), clauses.end(), c) != clauses.end()) continue;
            clauses.push_back(c);

            const std::uint64_t m = c.mask();
            std::erase_if(satisfiers,
                          [m](std::uint64_t b) { return std::popcount(b & m) != 1; });
            if (satisfiers.size() == 1)
                return ExactCoverInstance(n_qubits, k, std::move(clauses), satisfiers[0], seed);
            if (satisfiers.empty()) break;
        }
    }
    throw ResourceLimitError("generate_instance: restart cap reached without a unique-assignment "
                             "instance (n=" + std::to_string(n_qubits) +
                             ", k=" + std::to_string(k) + ")");
}

std::vector<std::uint16_t> problem_diagonal(const std::vector<Clause>& clauses, int n_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    std::vector<std::uint64_t> masks;
    masks.reserve(clauses.size());
    for (const auto& c : clauses) masks.push_back(c.mask());

    std::vector<std::uint16_t> diag(dim, 0);
    for (std::uint64_t b = 0; b < dim; ++b) {
        std::uint16_t violated = 0;
        for (std::uint64_t m : masks) violated += std::popcount(b & m) != 1 ? 1 : 0;
        diag[b] = violated;
    }
    return diag;
}

std::vector<std::uint16_t> problem_diagonal(const ExactCoverInstance& instance) {
    return problem_diagonal(instance.clauses(), instance.n_qubits());
}

std::vector<int> degrees(const std::vector<Clause>& clauses, int n_qubits) {
    std::vector<int> d(static_cast<std::size_t>(n_qubits), 0);
    for (const auto& c : clauses)
        for (int q : c.qubits) ++d[static_cast<std::size_t>(q)];
    return d;
}

std::vector<int> degrees(const ExactCoverInstance& instance) {
    return degrees(instance.clauses(), instance.n_qubits());
}

InterpolatedHamiltonian InterpolatedHamiltonian::at(double s_new) const {
    if (!(s_new >= 0.0 && s_new <= 1.0))
        throw std::invalid_argument("InterpolatedHamiltonian: s must lie in [0, 1]");
    InterpolatedHamiltonian h = *this;
    h.s = s_new;
    return h;
}

InterpolatedHamiltonian hamiltonian(const ExactCoverInstance& instance, double s) {
    InterpolatedHamiltonian h;
    h.n_qubits = instance.n_qubits();
    h.diagonal = std::make_shared<const std::vector<std::uint16_t>>(problem_diagonal(instance));
    auto d = degrees(instance);
    h.half_degree_sum = 0.5 * std::accumulate(d.begin(), d.end(), 0);
    h.degree = std::make_shared<const std::vector<int>>(std::move(d));
    return h.at(s);
}

void apply(const InterpolatedHamiltonian& h, const double* x, double* y) {
    const std::uint64_t dim = h.dim();
    const auto& diag = *h.diagonal;
    const auto& deg = *h.degree;
    const double s = h.s;
    const double off = 1.0 - s;

    // Diagonal: s * diag[b] + (1-s) * sum(d)/2.
    for (std::uint64_t b = 0; b < dim; ++b)
        y[b] = (s * diag[b] + off * h.half_degree_sum) * x[b];

    // Transverse part: -(1-s) * d_i/2 couples b and b ^ (1 << i).
    for (int i = 0; i < h.n_qubits; ++i) {
        const double w = -off * 0.5 * deg[static_cast<std::size_t>(i)];
        if (w == 0.0) continue;
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t b = 0; b < dim; ++b) y[b] += w * x[b ^ bit];
    }
}

std::vector<Complex> apply_hamiltonian(const InterpolatedHamiltonian& h, const StateVector& v) {
    if (v.n_qubits() != h.n_qubits)
        throw std::invalid_argument("apply_hamiltonian: dimension mismatch");
    const std::uint64_t dim = h.dim();
    std::vector<double> re(dim), im(dim), out_re(dim), out_im(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        re[b] = v[b].real();
        im[b] = v[b].imag();
    }
    apply(h, re.data(), out_re.data());
    apply(h, im.data(), out_im.data());
    std::vector<Complex> out(dim);
    for (std::uint64_t b = 0; b < dim; ++b) out[b] = Complex{out_re[b], out_im[b]};
    return out;
}

}  // namespace qent::ec
