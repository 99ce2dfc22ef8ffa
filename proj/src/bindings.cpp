// Python bindings for the core operations: state/entanglement analysis,
// Exact Cover instances and sweeps, Grover closed forms, Shor cases and
// ensemble statistics.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qent/errors.hpp"
#include "qent/exactcover.hpp"
#include "qent/grover.hpp"
#include "qent/io.hpp"
#include "qent/shor.hpp"
#include "qent/solver.hpp"
#include "qent/statevec.hpp"
#include "qent/stats.hpp"

namespace py = pybind11;
using namespace qent;

namespace {

BiPartition make_partition(int n_qubits, const py::object& spec) {
    if (py::isinstance<py::str>(spec) && spec.cast<std::string>() == "half")
        return BiPartition::half(n_qubits);
    return BiPartition(n_qubits, spec.cast<std::uint64_t>());
}

solver::SolveOptions solve_options(double tol, std::uint64_t seed, const std::string& method) {
    solver::SolveOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    if (method == "auto")
        opts.method = solver::Method::kAuto;
    else if (method == "dense")
        opts.method = solver::Method::kDense;
    else if (method == "lanczos")
        opts.method = solver::Method::kLanczos;
    else
        throw std::invalid_argument("method must be auto | dense | lanczos");
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "entanglement scaling toolkit: exact diagonalization sweeps, Grover/Shor analysis";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int, std::vector<Complex>>(), py::arg("n_qubits"), py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) { return s.amplitudes(); })
        .def_static("basis", &StateVector::basis)
        .def_static("uniform", &StateVector::uniform)
        .def_static("bell", &StateVector::bell)
        .def_static("ghz", &StateVector::ghz)
        .def_static("w", &StateVector::w);

    m.def(
        "entropy",
        [](const StateVector& state, const py::object& partition) {
            return entropy(state, make_partition(state.n_qubits(), partition));
        },
        py::arg("state"), py::arg("partition") = py::str("half"),
        "base-2 entanglement entropy across a bipartition mask (or 'half')");
    m.def(
        "reduced_spectrum",
        [](const StateVector& state, const py::object& partition) {
            return reduced_spectrum(state, make_partition(state.n_qubits(), partition));
        },
        py::arg("state"), py::arg("partition") = py::str("half"));
    m.def(
        "schmidt_rank",
        [](const StateVector& state, const py::object& partition, double tol) {
            return schmidt_rank(state, make_partition(state.n_qubits(), partition), tol);
        },
        py::arg("state"), py::arg("partition") = py::str("half"), py::arg("tol") = 1e-10);
    m.def(
        "partition_extremes",
        [](const StateVector& state, const std::vector<std::uint64_t>& masks) {
            std::vector<BiPartition> parts;
            parts.reserve(masks.size());
            for (auto m : masks) parts.emplace_back(state.n_qubits(), m);
            const auto ext = partition_extremes(state, parts);
            py::dict out;
            out["min_entropy"] = ext.min_entropy;
            out["min_mask"] = ext.min_mask;
            out["max_entropy"] = ext.max_entropy;
            out["max_mask"] = ext.max_mask;
            return out;
        },
        py::arg("state"), py::arg("masks"),
        "entropy extremes (with witnessing masks) over a partition list");
    m.def(
        "enumerate_bipartitions",
        [](int n_qubits) {
            std::vector<std::uint64_t> masks;
            for (const auto& p : enumerate_bipartitions(n_qubits)) masks.push_back(p.mask_a);
            return masks;
        },
        py::arg("n_qubits"));
    m.def(
        "sample_bipartitions",
        [](int n_qubits, int count, std::uint64_t seed) {
            std::vector<std::uint64_t> masks;
            for (const auto& p : sample_bipartitions(n_qubits, count, seed))
                masks.push_back(p.mask_a);
            return masks;
        },
        py::arg("n_qubits"), py::arg("count"), py::arg("seed"));

    py::class_<ec::ExactCoverInstance>(m, "ExactCoverInstance")
        .def_property_readonly("n_qubits", &ec::ExactCoverInstance::n_qubits)
        .def_property_readonly("k", &ec::ExactCoverInstance::k)
        .def_property_readonly("seed", &ec::ExactCoverInstance::seed)
        .def_property_readonly("assignment", &ec::ExactCoverInstance::assignment_bits)
        .def_property_readonly("clauses",
                               [](const ec::ExactCoverInstance& inst) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& c : inst.clauses()) out.push_back(c.qubits);
                                   return out;
                               })
        .def("to_json", [](const ec::ExactCoverInstance& inst) {
            return io::instance_to_json(inst);
        });

    m.def("generate_instance", &ec::generate_instance, py::arg("n_qubits"), py::arg("k"),
          py::arg("seed"), py::arg("restart_cap") = 100000);
    m.def("instance_from_json", &io::instance_from_json);
    m.def(
        "count_satisfying",
        [](const std::vector<std::vector<int>>& clauses, int n_qubits) {
            std::vector<ec::Clause> cs;
            for (const auto& q : clauses) cs.push_back(ec::make_clause(q, n_qubits));
            return ec::count_satisfying(cs, n_qubits);
        },
        py::arg("clauses"), py::arg("n_qubits"));

    py::class_<solver::SweepRecord>(m, "SweepRecord")
        .def_readonly("s", &solver::SweepRecord::s)
        .def_readonly("e0", &solver::SweepRecord::e0)
        .def_readonly("e1", &solver::SweepRecord::e1)
        .def_readonly("gap", &solver::SweepRecord::gap)
        .def_readonly("entropy", &solver::SweepRecord::entropy_bits)
        .def_readonly("h10", &solver::SweepRecord::h10_abs);

    py::class_<solver::SweepProfile>(m, "SweepProfile")
        .def_readonly("n_qubits", &solver::SweepProfile::n_qubits)
        .def_readonly("records", &solver::SweepProfile::records)
        .def_readonly("s_min_gap", &solver::SweepProfile::s_min_gap)
        .def_readonly("min_gap", &solver::SweepProfile::min_gap)
        .def_readonly("s_max_entropy", &solver::SweepProfile::s_max_entropy)
        .def_readonly("max_entropy", &solver::SweepProfile::max_entropy);

    m.def(
        "lowest_two",
        [](const ec::ExactCoverInstance& inst, double s, double tol, std::uint64_t seed,
           const std::string& method) {
            const auto pair = solver::lowest_two(ec::hamiltonian(inst, s),
                                                 solve_options(tol, seed, method));
            return py::make_tuple(pair.e0, pair.ground, pair.e1);
        },
        py::arg("instance"), py::arg("s"), py::arg("tol") = 1e-10, py::arg("seed") = 0,
        py::arg("method") = "auto");
    m.def(
        "sweep",
        [](const ec::ExactCoverInstance& inst, double step, const py::object& partition,
           double tol, std::uint64_t seed, const std::string& method) {
            return solver::sweep(inst, solver::uniform_grid(step),
                                 make_partition(inst.n_qubits(), partition),
                                 solve_options(tol, seed, method));
        },
        py::arg("instance"), py::arg("step") = 0.01, py::arg("partition") = py::str("half"),
        py::arg("tol") = 1e-10, py::arg("seed") = 0, py::arg("method") = "auto");

    py::class_<grover::GroverPoint>(m, "GroverPoint")
        .def_readonly("n_qubits", &grover::GroverPoint::n_qubits)
        .def_readonly("s", &grover::GroverPoint::s)
        .def_readonly("e_minus", &grover::GroverPoint::e_minus)
        .def_readonly("alpha", &grover::GroverPoint::alpha)
        .def_readonly("b", &grover::GroverPoint::b)
        .def_readonly("A", &grover::GroverPoint::A)
        .def_readonly("B", &grover::GroverPoint::B)
        .def_readonly("C", &grover::GroverPoint::C)
        .def_readonly("lambda_plus", &grover::GroverPoint::lambda_plus)
        .def_readonly("lambda_minus", &grover::GroverPoint::lambda_minus)
        .def_readonly("entropy", &grover::GroverPoint::entropy_bits)
        .def_readonly("at_pole", &grover::GroverPoint::at_pole);

    m.def("grover_ground_energy", &grover::ground_energy, py::arg("n_qubits"), py::arg("s"));
    m.def("grover_point", &grover::point, py::arg("n_qubits"), py::arg("s"));
    m.def("grover_entropy_curve", &grover::entropy_curve, py::arg("n_qubits"), py::arg("s_grid"));
    m.def("grover_asymptotic_entropy", &grover::asymptotic_entropy, py::arg("n_qubits"));
    m.def("grover_numeric_state", &grover::numeric_state, py::arg("n_qubits"), py::arg("s"),
          py::arg("marked") = 0);

    py::class_<shor::ShorCase>(m, "ShorCase")
        .def_readonly("N", &shor::ShorCase::N)
        .def_readonly("a", &shor::ShorCase::a)
        .def_readonly("r", &shor::ShorCase::r)
        .def_readonly("k", &shor::ShorCase::k)
        .def_readonly("n_target", &shor::ShorCase::n_target);

    m.def("order", &shor::order, py::arg("a"), py::arg("N"));
    m.def(
        "factors_from_order",
        [](std::uint64_t a, std::uint64_t N) -> py::object {
            const auto f = shor::factors_from_order(a, N);
            if (!f) return py::none();
            return py::make_tuple(f->first, f->second);
        },
        py::arg("a"), py::arg("N"));
    m.def("shor_case", &shor::make_case, py::arg("N"), py::arg("a"));
    m.def("shor_pre_qft_state", &shor::pre_qft_state, py::arg("case"));
    m.def(
        "shor_target_report",
        [](const shor::ShorCase& c) {
            const auto report = shor::target_spectrum(c);
            const auto prediction = shor::entropy_prediction(c);
            py::dict out;
            out["rank"] = report.schmidt_rank;
            out["entropy"] = report.entropy_bits;
            out["entropy_prediction"] = prediction.prediction;
            out["spectrum"] = report.spectrum;
            return out;
        },
        py::arg("case"));

    py::class_<stats::EnsembleStats>(m, "EnsembleStats")
        .def_readonly("n_qubits", &stats::EnsembleStats::n_qubits)
        .def_readonly("count", &stats::EnsembleStats::count)
        .def_readonly("mean_max_entropy", &stats::EnsembleStats::mean_max_entropy)
        .def_readonly("worst_max_entropy", &stats::EnsembleStats::worst_max_entropy)
        .def_readonly("ci95_entropy", &stats::EnsembleStats::ci95_entropy)
        .def_readonly("mean_min_gap", &stats::EnsembleStats::mean_min_gap)
        .def_readonly("worst_min_gap", &stats::EnsembleStats::worst_min_gap)
        .def_readonly("ci95_gap", &stats::EnsembleStats::ci95_gap)
        .def_readonly("mean_s_min_gap", &stats::EnsembleStats::mean_s_min_gap)
        .def_readonly("mean_s_max_entropy", &stats::EnsembleStats::mean_s_max_entropy);

    m.def("aggregate", &stats::aggregate, py::arg("profiles"));
    m.def(
        "fit",
        [](const std::vector<double>& xs, const std::vector<double>& ys,
           const std::string& model) {
            stats::FitModel fm;
            if (model == "linear")
                fm = stats::FitModel::kLinear;
            else if (model == "inverse-n")
                fm = stats::FitModel::kInverseN;
            else if (model == "inverse-n-cubed")
                fm = stats::FitModel::kInverseNCubed;
            else
                throw std::invalid_argument("model must be linear | inverse-n | inverse-n-cubed");
            const auto result = stats::fit(xs, ys, fm);
            py::dict out;
            out["slope"] = result.slope;
            out["intercept"] = result.intercept;
            out["residual"] = result.residual_norm;
            out["correlation"] = result.correlation;
            return out;
        },
        py::arg("xs"), py::arg("ys"), py::arg("model") = "linear");
    m.def(
        "fit_critical_region",
        [](const std::vector<double>& s, const std::vector<double>& entropy, double s_c,
           double window_lo, double window_hi) {
            const auto fit = stats::fit_critical_region(s, entropy, s_c, window_lo, window_hi);
            py::dict out;
            out["loglog_slope"] = fit.loglog_slope;
            out["loglog_intercept"] = fit.loglog_intercept;
            out["loglog_residual"] = fit.loglog_residual;
            out["power_alpha"] = fit.power_alpha;
            out["power_log_coeff"] = fit.power_log_coeff;
            out["power_residual"] = fit.power_residual;
            return out;
        },
        py::arg("s"), py::arg("entropy"), py::arg("s_c"), py::arg("window_lo") = 0.02,
        py::arg("window_hi") = 0.15);
    m.def("page_entropy", &stats::page_entropy, py::arg("n_qubits"));
}
