// qent — command-line front end: instance generation, adiabatic sweeps,
// ensemble statistics, scaling fits, Grover curves and Shor case reports.
//
// Exit codes: 0 success, 2 invalid arguments, 3 resource cap,
// 4 convergence failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qent/errors.hpp"
#include "qent/io.hpp"
#include "qent/parallel.hpp"
#include "qent/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitInvalidArgs = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitConvergence = 4;

struct GenArgs {
    int n = 0;
    int k = 3;
    int count = 0;
    std::uint64_t seed = 0;
    std::string out;
    int max_qubits = 20;
    int workers = 0;
};

struct SweepArgs {
    std::string in;
    std::string out;
    double step = 0.01;
    std::string partition = "half";
    std::uint64_t seed = 0;
    int max_qubits = 20;
    int workers = 0;
};

struct GroverArgs {
    std::vector<int> n;
    double step = 0.01;
    std::string out;
    int max_qubits = 20;
};

struct ShorArgs {
    std::vector<std::uint64_t> N;
    std::uint64_t a = 0;  // 0 = every coprime a in (1, N)
    std::string out;
};

struct StatsArgs {
    std::vector<std::string> in;
    std::vector<int> n;
    std::string out;
};

struct FitArgs {
    std::string in;
    std::string out;
    std::string x = "n";
    std::string y = "mean_max_entropy";
    std::string model = "linear";
    bool critical = false;
    double sc = 0.0;
    double window_lo = 0.02;
    double window_hi = 0.15;
};

std::string instance_stem(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "instance_%03d", index);
    return buf;
}

// Expands `--config file` into trailing --key value pairs for every
// key=value line whose flag is absent from the command line, so explicit
// flags always win. CLI11 only honors config options on the root app, and
// this keeps the file format a flat mirror of the flags.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_file = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_file = args[i].substr(9);
    }
    if (config_file.empty()) return args;

    auto trim = [](std::string s) {
        const auto from = s.find_first_not_of(" \t\r");
        const auto to = s.find_last_not_of(" \t\r");
        return from == std::string::npos ? std::string{} : s.substr(from, to - from + 1);
    };
    const std::vector<std::string> given = args;  // flags beat file values
    std::istringstream in(qent::io::read_text(config_file));
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string flag = "--" + key;
        bool on_cli = false;
        for (const auto& a : given)
            on_cli = on_cli || a == flag || a.rfind(flag + "=", 0) == 0;
        if (!on_cli) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

qent::BiPartition parse_partition(const std::string& spec, int n_qubits) {
    if (spec == "half") return qent::BiPartition::half(n_qubits);
    const std::uint64_t mask = std::stoull(spec, nullptr, 0);
    return qent::BiPartition(n_qubits, mask);
}

std::vector<fs::path> sorted_instance_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::invalid_argument("no instance .json files in " + dir.string());
    return files;
}

// Parses a CSV with a header row into column vectors.
std::map<std::string, std::vector<double>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    std::vector<std::string> names;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) names.push_back(cell);
    }
    std::map<std::string, std::vector<double>> cols;
    for (const auto& name : names) cols[name] = {};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::size_t i = 0;
        while (std::getline(ls, cell, ',')) {
            if (i >= names.size()) throw std::invalid_argument("CSV row wider than header");
            cols[names[i]].push_back(std::stod(cell));
            ++i;
        }
        if (i != names.size()) throw std::invalid_argument("CSV row narrower than header");
    }
    return cols;
}

int run_gen(const GenArgs& args) {
    if (args.count < 1) throw std::invalid_argument("gen: --count must be >= 1");
    if (args.n > args.max_qubits)
        throw qent::ResourceLimitError("gen: n exceeds --max-qubits");
    fs::create_directories(args.out);
    std::vector<std::optional<qent::ec::ExactCoverInstance>> instances(
        static_cast<std::size_t>(args.count));
    qent::parallel_for(static_cast<std::size_t>(args.count), args.workers, [&](std::size_t i) {
        instances[i] = qent::ec::generate_instance(args.n, args.k,
                                                   qent::mix_seed(args.seed, i));
    });
    for (int i = 0; i < args.count; ++i)
        qent::io::save_instance(*instances[static_cast<std::size_t>(i)],
                                fs::path(args.out) / (instance_stem(i) + ".json"));
    std::cout << "wrote " << args.count << " instances to " << args.out << "\n";
    return 0;
}

int run_sweep(const SweepArgs& args) {
    const auto files = sorted_instance_files(args.in);
    fs::create_directories(args.out);
    const auto grid = qent::solver::uniform_grid(args.step);

    std::vector<qent::solver::SweepProfile> profiles(files.size());
    std::vector<std::string> failures(files.size());
    qent::parallel_for(files.size(), args.workers, [&](std::size_t i) {
        const auto instance = qent::io::load_instance(files[i]);
        if (instance.n_qubits() > args.max_qubits)
            throw qent::ResourceLimitError("sweep: instance exceeds --max-qubits");
        qent::solver::SolveOptions opts;
        opts.seed = qent::mix_seed(args.seed, i);
        try {
            profiles[i] = qent::solver::sweep(instance, grid,
                                              parse_partition(args.partition, instance.n_qubits()),
                                              opts, files[i].stem().string());
        } catch (const qent::ConvergenceError& e) {
            failures[i] = files[i].stem().string() + ": " + e.what();
        }
    });

    std::vector<qent::solver::SweepProfile> converged;
    std::vector<std::string> failed;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!failures[i].empty()) {
            failed.push_back(failures[i]);
            continue;
        }
        converged.push_back(profiles[i]);
        qent::io::write_text(fs::path(args.out) / (files[i].stem().string() + ".csv"),
                             qent::io::sweep_to_csv(profiles[i]));
    }
    if (!converged.empty()) {
        qent::io::write_text(fs::path(args.out) / "ensemble.csv",
                             qent::io::aggregate_csv_header() +
                                 qent::io::aggregate_csv_row(qent::stats::aggregate(converged)));
        qent::io::write_text(fs::path(args.out) / "mean_curve.csv",
                             qent::io::mean_curve_csv(converged));
    }
    if (!failed.empty()) {
        std::cerr << "convergence failures:\n";
        for (const auto& f : failed) std::cerr << "  " << f << "\n";
        return kExitConvergence;
    }
    std::cout << "swept " << converged.size() << " instances into " << args.out << "\n";
    return 0;
}

int run_grover(const GroverArgs& args) {
    fs::create_directories(args.out);
    const auto grid = qent::solver::uniform_grid(args.step);
    json checks = json::array();
    for (int n : args.n) {
        qent::io::write_text(fs::path(args.out) / ("grover_n" + std::to_string(n) + ".csv"),
                             qent::io::grover_curve_csv(n, grid));
        if (n % 2 == 0 && n <= 14 && n <= args.max_qubits) {
            double max_dev = 0.0;
            bool rank2_ok = true;
            const auto part = qent::BiPartition::half(n);
            for (double s : grid) {
                const auto state = qent::grover::numeric_state(n, s);
                max_dev = std::max(max_dev, std::abs(qent::entropy(state, part) -
                                                     qent::grover::point(n, s).entropy_bits));
                if (s > 0.0 && s < 1.0)
                    rank2_ok = rank2_ok && qent::schmidt_rank(state, part) == 2;
            }
            checks.push_back({{"n", n}, {"max_abs_dev", max_dev}, {"rank2_ok", rank2_ok}});
        }
    }
    qent::io::write_text(fs::path(args.out) / "grover_summary.csv",
                         qent::io::grover_summary_csv(args.n));
    qent::io::write_text(fs::path(args.out) / "grover_check.json", checks.dump(2) + "\n");
    std::cout << "wrote Grover curves for " << args.n.size() << " sizes to " << args.out << "\n";
    return 0;
}

int run_shor(const ShorArgs& args) {
    fs::create_directories(args.out);
    for (std::uint64_t N : args.N) {
        if (N < 3 || N % 2 == 0)
            throw std::invalid_argument("shor: N must be odd and >= 3");
        std::vector<std::uint64_t> bases;
        if (args.a != 0) {
            bases.push_back(args.a);
        } else {
            for (std::uint64_t a = 2; a < N; ++a)
                if (std::gcd(a, N) == 1) bases.push_back(a);
        }
        json out;
        out["N"] = N;
        json cases = json::array();
        std::map<std::uint64_t, int> r_counts;
        for (std::uint64_t a : bases) {
            const auto c = qent::shor::make_case(N, a);
            const bool numeric = N <= 33 && c.total_qubits() <= 26;
            cases.push_back(json::parse(qent::io::shor_case_json(c, numeric)));
            ++r_counts[c.r];
        }
        out["cases"] = std::move(cases);
        json dist = json::array();
        for (const auto& [r, count] : r_counts) dist.push_back({r, count});
        out["r_distribution"] = std::move(dist);
        qent::io::write_text(fs::path(args.out) / ("shor_N" + std::to_string(N) + ".json"),
                             out.dump(2) + "\n");
    }
    std::cout << "wrote " << args.N.size() << " Shor reports to " << args.out << "\n";
    return 0;
}

int run_stats(const StatsArgs& args) {
    if (args.in.size() != args.n.size())
        throw std::invalid_argument("stats: --in and --n must pair up");
    std::string table = qent::io::aggregate_csv_header();
    for (std::size_t d = 0; d < args.in.size(); ++d) {
        std::vector<fs::path> csv_files;
        for (const auto& entry : fs::directory_iterator(args.in[d])) {
            const auto& path = entry.path();
            if (path.extension() != ".csv") continue;
            if (path.filename() == "ensemble.csv" || path.filename() == "mean_curve.csv") continue;
            csv_files.push_back(path);
        }
        std::sort(csv_files.begin(), csv_files.end());
        std::vector<qent::solver::SweepProfile> profiles;
        for (const auto& path : csv_files) {
            const auto cols = parse_csv(qent::io::read_text(path));
            qent::solver::SweepProfile p;
            p.instance_id = path.stem().string();
            p.n_qubits = args.n[d];
            p.s_grid = cols.at("s");
            for (std::size_t i = 0; i < p.s_grid.size(); ++i) {
                qent::solver::SweepRecord rec;
                rec.s = cols.at("s")[i];
                rec.e0 = cols.at("e0")[i];
                rec.e1 = cols.at("e1")[i];
                rec.gap = cols.at("gap")[i];
                rec.entropy_bits = cols.at("entropy")[i];
                rec.h10_abs = cols.at("h10")[i];
                p.records.push_back(rec);
            }
            const auto [s_gap, s_ent] = qent::solver::critical_points(p);
            p.s_min_gap = s_gap;
            p.s_max_entropy = s_ent;
            for (const auto& rec : p.records) {
                if (rec.s == s_gap) p.min_gap = rec.gap;
                if (rec.s == s_ent) p.max_entropy = rec.entropy_bits;
            }
            profiles.push_back(std::move(p));
        }
        table += qent::io::aggregate_csv_row(qent::stats::aggregate(profiles));
    }
    qent::io::write_text(args.out, table);
    std::cout << "wrote aggregate table to " << args.out << "\n";
    return 0;
}

int run_fit(const FitArgs& args) {
    const auto cols = parse_csv(qent::io::read_text(args.in));
    json out;
    if (args.critical) {
        const auto fit = qent::stats::fit_critical_region(cols.at("s"), cols.at("mean_entropy"),
                                                          args.sc, args.window_lo, args.window_hi);
        out["loglog"] = {{"slope", fit.loglog_slope},
                         {"intercept", fit.loglog_intercept},
                         {"residual", fit.loglog_residual}};
        out["power"] = {{"alpha", fit.power_alpha},
                        {"log_coeff", fit.power_log_coeff},
                        {"residual", fit.power_residual}};
    } else {
        qent::stats::FitModel model;
        if (args.model == "linear")
            model = qent::stats::FitModel::kLinear;
        else if (args.model == "inverse-n")
            model = qent::stats::FitModel::kInverseN;
        else if (args.model == "inverse-n-cubed")
            model = qent::stats::FitModel::kInverseNCubed;
        else
            throw std::invalid_argument("fit: unknown model " + args.model);
        const auto fit = qent::stats::fit(cols.at(args.x), cols.at(args.y), model);
        out["model"] = args.model;
        out["x"] = args.x;
        out["y"] = args.y;
        out["slope"] = fit.slope;
        out["intercept"] = fit.intercept;
        out["residual"] = fit.residual_norm;
        out["correlation"] = fit.correlation;
    }
    qent::io::write_text(args.out, out.dump(2) + "\n");
    std::cout << "wrote fit to " << args.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement scaling studies for adiabatic and factoring algorithms"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate Exact Cover instances");
    std::string cfg_gen;
    cmd_gen->add_option("--config", cfg_gen, "flat key=value file; flags override");
    cmd_gen->add_option("--n", gen.n, "qubit count")->required();
    cmd_gen->add_option("--k", gen.k, "clause arity (3 or 4)");
    cmd_gen->add_option("--count", gen.count, "number of instances")->required();
    cmd_gen->add_option("--seed", gen.seed, "base seed")->required();
    cmd_gen->add_option("--out", gen.out, "output directory")->required();
    cmd_gen->add_option("--max-qubits", gen.max_qubits, "resource cap");
    cmd_gen->add_option("--workers", gen.workers, "worker threads (0 = hardware)");

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "sweep H(s) over instances");
    std::string cfg_sweep;
    cmd_sweep->add_option("--config", cfg_sweep, "flat key=value file; flags override");
    cmd_sweep->add_option("--in", sweep.in, "instance directory")->required();
    cmd_sweep->add_option("--out", sweep.out, "output directory")->required();
    cmd_sweep->add_option("--step", sweep.step, "s grid step");
    cmd_sweep->add_option("--partition", sweep.partition, "bipartition mask or 'half'");
    cmd_sweep->add_option("--seed", sweep.seed, "solver seed")->required();
    cmd_sweep->add_option("--max-qubits", sweep.max_qubits, "resource cap");
    cmd_sweep->add_option("--workers", sweep.workers, "worker threads (0 = hardware)");

    GroverArgs grover;
    auto* cmd_grover = app.add_subcommand("grover", "analytic Grover curves + numeric check");
    std::string cfg_grover;
    cmd_grover->add_option("--config", cfg_grover, "flat key=value file; flags override");
    cmd_grover->add_option("--n", grover.n, "qubit counts (even)")->required();
    cmd_grover->add_option("--step", grover.step, "s grid step");
    cmd_grover->add_option("--out", grover.out, "output directory")->required();
    cmd_grover->add_option("--max-qubits", grover.max_qubits, "numeric-check cap");

    ShorArgs shor;
    auto* cmd_shor = app.add_subcommand("shor", "pre-QFT entanglement case reports");
    std::string cfg_shor;
    cmd_shor->add_option("--config", cfg_shor, "flat key=value file; flags override");
    cmd_shor->add_option("--N", shor.N, "odd composites to factor")->required();
    cmd_shor->add_option("--a", shor.a, "specific base (default: all coprime)");
    cmd_shor->add_option("--out", shor.out, "output directory")->required();

    StatsArgs stats;
    auto* cmd_stats = app.add_subcommand("stats", "aggregate sweep CSVs into a table");
    std::string cfg_stats;
    cmd_stats->add_option("--config", cfg_stats, "flat key=value file; flags override");
    cmd_stats->add_option("--in", stats.in, "sweep output directories")->required();
    cmd_stats->add_option("--n", stats.n, "qubit count per directory")->required();
    cmd_stats->add_option("--out", stats.out, "output table file")->required();

    FitArgs fit;
    auto* cmd_fit = app.add_subcommand("fit", "least-squares scaling / critical fits");
    std::string cfg_fit;
    cmd_fit->add_option("--config", cfg_fit, "flat key=value file; flags override");
    cmd_fit->add_option("--in", fit.in, "input CSV (table or mean curve)")->required();
    cmd_fit->add_option("--out", fit.out, "output JSON")->required();
    cmd_fit->add_option("--x", fit.x, "x column (table mode)");
    cmd_fit->add_option("--y", fit.y, "y column (table mode)");
    cmd_fit->add_option("--model", fit.model, "linear | inverse-n | inverse-n-cubed");
    cmd_fit->add_flag("--critical", fit.critical, "fit the critical-region laws instead");
    cmd_fit->add_option("--sc", fit.sc, "critical point (critical mode)");
    cmd_fit->add_option("--window-lo", fit.window_lo, "inner window edge");
    cmd_fit->add_option("--window-hi", fit.window_hi, "outer window edge");

    try {
        auto args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 vector parse wants reverse order
        app.parse(std::move(args));
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_sweep->parsed()) return run_sweep(sweep);
        if (cmd_grover->parsed()) return run_grover(grover);
        if (cmd_shor->parsed()) return run_shor(shor);
        if (cmd_stats->parsed()) return run_stats(stats);
        if (cmd_fit->parsed()) return run_fit(fit);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidArgs;
    } catch (const qent::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const qent::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
