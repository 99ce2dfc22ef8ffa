// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Heavy ensembles (criteria 1-5) are computed once up front and shared.
//
// Usage: acceptance [--cli <path-to-qent>] [--workdir <dir>] [--workers N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qent/errors.hpp"
#include "qent/exactcover.hpp"
#include "qent/grover.hpp"
#include "qent/io.hpp"
#include "qent/parallel.hpp"
#include "qent/rng.hpp"
#include "qent/shor.hpp"
#include "qent/solver.hpp"
#include "qent/statevec.hpp"
#include "qent/stats.hpp"

namespace fs = std::filesystem;
using namespace qent;

namespace {

struct Options {
    std::string cli_path;
    fs::path workdir = "acceptance_work";
    int workers = 0;
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::ostringstream detail;
    bool pass = true;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& what) {
        if (!detail.str().empty()) detail << "; ";
        detail << what;
    }
    Outcome done() const { return {pass, detail.str()}; }
};

std::string fmt(double v, int precision = 4) {
    std::ostringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

// ---------------------------------------------------------------------------
// Shared ensembles for criteria 1-5.

struct Ensemble {
    int n_qubits = 0;
    int k = 3;
    std::vector<solver::SweepProfile> profiles;
    stats::EnsembleStats aggregate;
    std::vector<double> mean_entropy_curve;
    std::vector<double> s_grid;
};

Ensemble run_ensemble(int n, int k, int count, std::uint64_t seed_tag, int workers) {
    Ensemble e;
    e.n_qubits = n;
    e.k = k;
    e.s_grid = solver::uniform_grid(0.01);
    e.profiles.resize(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
        const auto inst = ec::generate_instance(n, k, mix_seed(seed_tag, i));
        solver::SolveOptions opts;
        opts.seed = mix_seed(seed_tag ^ 0xf00d, i);
        e.profiles[i] = solver::sweep(inst, e.s_grid, BiPartition::half(n), opts,
                                      "n" + std::to_string(n) + "_i" + std::to_string(i));
    });
    e.aggregate = stats::aggregate(e.profiles);
    e.mean_entropy_curve.assign(e.s_grid.size(), 0.0);
    for (const auto& p : e.profiles)
        for (std::size_t i = 0; i < p.records.size(); ++i)
            e.mean_entropy_curve[i] += p.records[i].entropy_bits;
    for (auto& v : e.mean_entropy_curve) v /= static_cast<double>(count);
    return e;
}

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

// ---------------------------------------------------------------------------
// Criteria 1-4: k = 3 scaling study.

Outcome criterion1(const std::map<int, Ensemble>& k3) {
    Check c;
    const auto& e10 = k3.at(10);
    const double s_peak = e10.s_grid[argmax(e10.mean_entropy_curve)];
    c.note("n=10 mean-curve peak at s=" + fmt(s_peak) + " over " +
           std::to_string(e10.profiles.size()) + " instances");
    c.require(s_peak >= 0.6 && s_peak <= 0.8, "peak s in [0.6, 0.8]");
    return c.done();
}

Outcome criterion2(const std::map<int, Ensemble>& k3) {
    Check c;
    std::vector<double> ns, ents;
    for (const auto& [n, e] : k3) {
        ns.push_back(n);
        ents.push_back(e.aggregate.mean_max_entropy);
    }
    const auto fit = stats::fit(ns, ents, stats::FitModel::kLinear);
    c.note("entropy slope=" + fmt(fit.slope) + " corr=" + fmt(fit.correlation));
    c.require(fit.slope >= 0.05 && fit.slope <= 0.15, "slope in [0.05, 0.15]");
    c.require(fit.correlation >= 0.95, "correlation >= 0.95");
    return c.done();
}

Outcome criterion3(const std::map<int, Ensemble>& k3) {
    Check c;
    std::vector<double> ns, gaps;
    for (const auto& [n, e] : k3) {
        ns.push_back(n);
        gaps.push_back(e.aggregate.mean_min_gap);
    }
    const auto fit = stats::fit(ns, gaps, stats::FitModel::kInverseN);
    c.note("gap-vs-1/n corr=" + fmt(fit.correlation));
    c.require(fit.correlation >= 0.9, "correlation >= 0.9");
    return c.done();
}

Outcome criterion4(const std::map<int, Ensemble>& k3) {
    Check c;
    for (const auto& [n, e] : k3) {
        c.require(e.aggregate.mean_s_min_gap > e.aggregate.mean_s_max_entropy,
                  "mean s(min gap) > mean s(max entropy) at n=" + std::to_string(n));
    }
    const double d6 =
        k3.at(6).aggregate.mean_s_min_gap - k3.at(6).aggregate.mean_s_max_entropy;
    const double d12 =
        k3.at(12).aggregate.mean_s_min_gap - k3.at(12).aggregate.mean_s_max_entropy;
    c.note("diff n=6: " + fmt(d6) + ", n=12: " + fmt(d12));
    c.require(d12 < d6, "critical points approach with n");
    return c.done();
}

Outcome criterion5(const std::map<int, Ensemble>& k4) {
    Check c;
    std::vector<double> ns, gaps;
    double prev_entropy = -1.0;
    for (const auto& [n, e] : k4) {
        const std::size_t peak = argmax(e.mean_entropy_curve);
        c.require(peak > 0 && peak + 1 < e.s_grid.size(),
                  "interior entropy peak at n=" + std::to_string(n));
        c.require(e.aggregate.mean_max_entropy > prev_entropy,
                  "mean peak entropy increases at n=" + std::to_string(n));
        prev_entropy = e.aggregate.mean_max_entropy;
        ns.push_back(n);
        gaps.push_back(e.aggregate.mean_min_gap);
    }
    const auto fit = stats::fit(ns, gaps, stats::FitModel::kInverseNCubed);
    c.note("k=4 gap-vs-1/n^3 corr=" + fmt(fit.correlation));
    c.require(fit.correlation >= 0.8, "correlation >= 0.8");
    return c.done();
}

// ---------------------------------------------------------------------------
// Criterion 6: Grover analytic vs numeric state.

Outcome criterion6() {
    Check c;
    const auto grid = solver::uniform_grid(0.01);
    double worst = 0.0;
    for (int n = 2; n <= 14; n += 2) {
        const auto part = BiPartition::half(n);
        for (double s : grid) {
            const auto state = grover::numeric_state(n, s);
            const double dev =
                std::abs(entropy(state, part) - grover::point(n, s).entropy_bits);
            worst = std::max(worst, dev);
            if (s > 0.0 && s < 1.0 && schmidt_rank(state, part) != 2)
                c.require(false, "rank 2 at n=" + std::to_string(n) + " s=" + fmt(s));
        }
    }
    c.note("max |analytic - numeric| = " + fmt(worst, 3));
    c.require(worst <= 1e-9, "agreement <= 1e-9");
    return c.done();
}

// Criterion 7: s = 0.5 saturation law. The asserted ratio uses the 4/ln2
// coefficient; that is inconsistent with the lambda pair (which gives
// 2/ln2 — binary entropy near 1/2 is 1 - (2/ln2) d^2), so the
// 2/ln2-normalized value is printed alongside as a diagnostic.
Outcome criterion7() {
    Check c;
    const double one_minus_e = 1.0 - grover::point(40, 0.5).entropy_bits;
    const double ratio4 = one_minus_e / ((4.0 / std::log(2.0)) * std::exp2(-20));
    const double ratio2 = one_minus_e / ((2.0 / std::log(2.0)) * std::exp2(-20));
    c.note("n=40: (1-E)/((4/ln2)2^-n/2) = " + fmt(ratio4, 6) +
           " [vs (2/ln2): " + fmt(ratio2, 6) + "]");
    c.require(ratio4 >= 0.9 && ratio4 <= 1.1, "ratio in [0.9, 1.1]");

    double prev = -1.0;
    bool monotone = true, bounded = true;
    for (int n = 2; n <= 40; n += 2) {
        const double e = grover::point(n, 0.5).entropy_bits;
        monotone = monotone && e > prev;
        bounded = bounded && e <= 1.0;
        prev = e;
    }
    c.require(monotone, "entropy(n, 0.5) strictly increasing");
    c.require(bounded, "entropy <= 1");
    return c.done();
}

// ---------------------------------------------------------------------------
// Criterion 8: Shor rank law over all odd composite N <= 33.

Outcome criterion8() {
    Check c;
    int cases = 0;
    for (std::uint64_t N : {9ULL, 15ULL, 21ULL, 25ULL, 27ULL, 33ULL}) {
        for (std::uint64_t a = 2; a < N; ++a) {
            if (std::gcd(a, N) != 1) continue;
            const auto sc = shor::make_case(N, a);
            const auto report = shor::target_spectrum(sc);
            ++cases;
            if (report.schmidt_rank != static_cast<int>(sc.r))
                c.require(false, "rank != r at N=" + std::to_string(N) +
                                     " a=" + std::to_string(a));
            const double log2r = std::log2(static_cast<double>(sc.r));
            const bool divides = (std::uint64_t{1} << sc.k) % sc.r == 0;
            const double dev = std::abs(report.entropy_bits - log2r);
            if (divides) {
                if (dev > 1e-10)
                    c.require(false, "entropy != log2 r at N=" + std::to_string(N) +
                                         " a=" + std::to_string(a));
            } else if (dev > static_cast<double>(sc.r) / std::exp2(sc.k)) {
                c.require(false, "entropy correction bound at N=" + std::to_string(N) +
                                     " a=" + std::to_string(a));
            }
        }
    }
    c.note(std::to_string(cases) + " (N, a) cases checked");
    return c.done();
}

// ---------------------------------------------------------------------------
// Criterion 9: oracle equivalence (matvec, eigensolver, partial trace).

Outcome criterion9(int workers) {
    Check c;

    // (a) implicit matvec vs the dense Pauli-product oracle, n=4.
    double worst_matvec = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = ec::generate_instance(4, 3, mix_seed(0xa11, trial));
        const double s = (trial % 11) / 10.0;
        const auto dense = oracles::dense_interpolated(inst, s);
        const auto v = oracles::random_state(4, mix_seed(0xa12, trial));
        const auto fast = ec::apply_hamiltonian(ec::hamiltonian(inst, s), v);
        const Eigen::Map<const Eigen::VectorXcd> vv(v.amplitudes().data(), 16);
        const Eigen::VectorXcd slow = dense * vv;
        for (int i = 0; i < 16; ++i)
            worst_matvec =
                std::max(worst_matvec, std::abs(fast[static_cast<std::size_t>(i)] - slow(i)));
    }
    c.note("matvec dev=" + fmt(worst_matvec, 3));
    c.require(worst_matvec <= 1e-12, "matvec within 1e-12");

    // (b) dense vs Krylov eigenpairs. Grids thin out with n to keep the dense
    // oracle affordable: full 0.01 grid at n=6,8; 0.05 at n=10; two spot
    // checks at n=12.
    double worst_e = 0.0, worst_ent = 0.0;
    const std::map<int, std::vector<double>> grids = {
        {6, solver::uniform_grid(0.01)},
        {8, solver::uniform_grid(0.01)},
        {10, solver::uniform_grid(0.05)},
        {12, {0.5, 0.7}}};
    for (const auto& [n, grid] : grids) {
        const auto inst = ec::generate_instance(n, 3, mix_seed(0xa13, n));
        auto h = ec::hamiltonian(inst, 0.0);
        const auto part = BiPartition::half(n);
        std::vector<double> devs_e(grid.size()), devs_ent(grid.size());
        parallel_for(grid.size(), workers, [&, n = n](std::size_t i) {
            const auto dense =
                solver::lowest_two(h.at(grid[i]), {.seed = 1, .method = solver::Method::kDense});
            const auto krylov = solver::lowest_two(
                h.at(grid[i]), {.seed = 5, .method = solver::Method::kLanczos});
            devs_e[i] = std::max(std::abs(dense.e0 - krylov.e0), std::abs(dense.e1 - krylov.e1));
            devs_ent[i] =
                std::abs(entropy(dense.ground, part) - entropy(krylov.ground, part));
        });
        worst_e = std::max(worst_e, *std::max_element(devs_e.begin(), devs_e.end()));
        worst_ent = std::max(worst_ent, *std::max_element(devs_ent.begin(), devs_ent.end()));
    }
    c.note("eig dev=" + fmt(worst_e, 3) + " entropy dev=" + fmt(worst_ent, 3));
    c.require(worst_e <= 1e-9, "dense vs Krylov within 1e-9");
    c.require(worst_ent <= 1e-8, "entropy agreement within 1e-8");

    // (c) reshape-SVD spectra vs explicit partial trace, n <= 6.
    double worst_spec = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const auto state = oracles::random_state(n, mix_seed(0xa14, n));
        for (const auto& part : enumerate_bipartitions(n)) {
            const auto fast = reduced_spectrum(state, part);
            const auto slow = oracles::partial_trace_spectrum(state, part);
            for (std::size_t i = 0; i < fast.size(); ++i)
                worst_spec = std::max(worst_spec, std::abs(fast[i] - slow[i]));
        }
    }
    c.note("spectrum dev=" + fmt(worst_spec, 3));
    c.require(worst_spec <= 1e-10, "partial trace vs SVD within 1e-10");
    return c.done();
}

// ---------------------------------------------------------------------------
// Criterion 10: property suite.

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
}

bool tree_bytes_equal(const fs::path& a, const fs::path& b, std::string& mismatch) {
    std::vector<fs::path> rel;
    for (const auto& entry : fs::recursive_directory_iterator(a))
        if (entry.is_regular_file()) rel.push_back(fs::relative(entry.path(), a));
    std::sort(rel.begin(), rel.end());
    for (const auto& r : rel) {
        if (!fs::exists(b / r)) {
            mismatch = r.string() + " missing";
            return false;
        }
        if (io::read_text(a / r) != io::read_text(b / r)) {
            mismatch = r.string() + " differs";
            return false;
        }
    }
    return !rel.empty();
}

Outcome criterion10(const Options& opt) {
    Check c;

    // Entropy symmetry + Vidal bound over 1000 random states.
    int vidal_checked = 0;
    bool symmetry_ok = true, vidal_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 7;  // 2..8
        const auto state = oracles::random_state(n, mix_seed(0xb00, trial));
        const BiPartition part(n, 1 + (mix_seed(0xb01, trial) %
                                       ((std::uint64_t{1} << n) - 2)));
        const auto report = entanglement_report(state, part);
        symmetry_ok = symmetry_ok &&
                      std::abs(report.entropy_bits - entropy(state, part.complement())) <= 1e-10;
        vidal_ok = vidal_ok &&
                   std::exp2(report.entropy_bits) <= report.schmidt_rank * (1.0 + 1e-9);
        ++vidal_checked;
    }
    c.require(symmetry_ok, "entropy partition symmetry");
    c.require(vidal_ok, "chi >= 2^E");
    c.note(std::to_string(vidal_checked) + " random states");

    // Generator uniqueness, brute force, 100 instances.
    bool unique_ok = true;
    for (int i = 0; i < 100; ++i) {
        const auto inst = ec::generate_instance(8, 3, mix_seed(0xb02, i));
        unique_ok = unique_ok && ec::count_satisfying(inst.clauses(), 8) == 1;
    }
    c.require(unique_ok, "100 generated instances have unique satisfiers");

    // End-to-end byte determinism through the CLI.
    if (opt.cli_path.empty()) {
        c.require(false, "CLI path not provided (--cli)");
        return c.done();
    }
    const fs::path root = opt.workdir / "determinism";
    fs::remove_all(root);
    fs::create_directories(root);
    for (const char* run : {"r1", "r2"}) {
        const fs::path base = root / run;
        const std::string inst_dir = (base / "inst").string();
        const std::string sweep_dir = (base / "sweep").string();
        if (run_cli(opt.cli_path, "gen --n 8 --k 3 --count 4 --seed 99 --out " + inst_dir) != 0 ||
            run_cli(opt.cli_path, "sweep --in " + inst_dir + " --out " + sweep_dir +
                                      " --step 0.02 --seed 7 --workers 2") != 0 ||
            run_cli(opt.cli_path, "grover --n 6 --n 8 --step 0.05 --out " +
                                      (base / "grover").string()) != 0 ||
            run_cli(opt.cli_path, "shor --N 15 --N 21 --out " + (base / "shor").string()) != 0) {
            c.require(false, std::string("CLI run failed (") + run + ")");
            return c.done();
        }
    }
    std::string mismatch;
    c.require(tree_bytes_equal(root / "r1", root / "r2", mismatch),
              "identical bytes across reruns: " + mismatch);
    return c.done();
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc)
            opt.cli_path = argv[++i];
        else if (arg == "--workdir" && i + 1 < argc)
            opt.workdir = argv[++i];
        else if (arg == "--workers" && i + 1 < argc)
            opt.workers = std::atoi(argv[++i]);
    }
    fs::create_directories(opt.workdir);

    const auto t_start = std::chrono::steady_clock::now();
    std::cout << "computing k=3 ensembles (n=6, 8, 10, 12)..." << std::endl;
    std::map<int, Ensemble> k3;
    k3.emplace(6, run_ensemble(6, 3, 200, 0xe6, opt.workers));
    k3.emplace(8, run_ensemble(8, 3, 150, 0xe8, opt.workers));
    k3.emplace(10, run_ensemble(10, 3, 100, 0xe10, opt.workers));
    k3.emplace(12, run_ensemble(12, 3, 100, 0xe12, opt.workers));
    std::cout << "computing k=4 ensembles (n=8, 10, 12)..." << std::endl;
    std::map<int, Ensemble> k4;
    k4.emplace(8, run_ensemble(8, 4, 50, 0xf8, opt.workers));
    k4.emplace(10, run_ensemble(10, 4, 50, 0xf10, opt.workers));
    k4.emplace(12, run_ensemble(12, 4, 50, 0xf12, opt.workers));

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 Exact Cover peak location", [&] { return criterion1(k3); }},
        {"2 linear entropy scaling", [&] { return criterion2(k3); }},
        {"3 gap ~ 1/n scaling", [&] { return criterion3(k3); }},
        {"4 critical-point ordering/convergence", [&] { return criterion4(k3); }},
        {"5 k=4 universality", [&] { return criterion5(k4); }},
        {"6 Grover analytic/numeric agreement", [] { return criterion6(); }},
        {"7 Grover saturation law", [] { return criterion7(); }},
        {"8 Shor rank law", [] { return criterion8(); }},
        {"9 oracle equivalence suite", [&] { return criterion9(opt.workers); }},
        {"10 property suite", [&] { return criterion10(opt); }},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << name;
        if (!outcome.detail.empty()) std::cout << "  [" << outcome.detail << "]";
        std::cout << std::endl;
    }

    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - t_start)
                             .count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << " (" << seconds << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
