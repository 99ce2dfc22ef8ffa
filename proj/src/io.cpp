#include "qent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qent::io {

namespace {

using nlohmann::json;

std::string csv_row(const std::vector<double>& values) {
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) row += ',';
        row += format_number(values[i]);
    }
    row += '\n';
    return row;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string instance_to_json(const ec::ExactCoverInstance& instance) {
    json j;
    j["n"] = instance.n_qubits();
    j["k"] = instance.k();
    json clauses = json::array();
    for (const auto& c : instance.clauses()) clauses.push_back(c.qubits);
    j["clauses"] = std::move(clauses);
    j["assignment"] = instance.assignment_bits();
    j["seed"] = instance.seed();
    return j.dump(2) + "\n";
}

ec::ExactCoverInstance instance_from_json(const std::string& text) {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    std::vector<ec::Clause> clauses;
    for (const auto& c : j.at("clauses")) clauses.push_back(ec::make_clause(c.get<std::vector<int>>(), n));
    const auto bits = j.at("assignment").get<std::string>();
    if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("instance JSON: assignment length != n");
    std::uint64_t assignment = 0;
    for (int i = 0; i < n; ++i) {
        if (bits[static_cast<std::size_t>(i)] == '1')
            assignment |= std::uint64_t{1} << i;
        else if (bits[static_cast<std::size_t>(i)] != '0')
            throw std::invalid_argument("instance JSON: assignment must be a 0/1 string");
    }
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    return ec::ExactCoverInstance(n, k, std::move(clauses), assignment, seed);
}

void save_instance(const ec::ExactCoverInstance& instance, const std::filesystem::path& file) {
    write_text(file, instance_to_json(instance));
}

ec::ExactCoverInstance load_instance(const std::filesystem::path& file) {
    return instance_from_json(read_text(file));
}

std::string sweep_to_csv(const solver::SweepProfile& profile) {
    std::string out = "s,e0,e1,gap,entropy,h10\n";
    for (const auto& r : profile.records)
        out += csv_row({r.s, r.e0, r.e1, r.gap, r.entropy_bits, r.h10_abs});
    return out;
}

std::string aggregate_csv_header() {
    return "n,count,mean_max_entropy,ci_entropy,worst_max_entropy,mean_min_gap,ci_gap,"
           "worst_min_gap,mean_s_gap,mean_s_entropy\n";
}

std::string aggregate_csv_row(const stats::EnsembleStats& s) {
    return csv_row({static_cast<double>(s.n_qubits), static_cast<double>(s.count),
                    s.mean_max_entropy, s.ci95_entropy, s.worst_max_entropy, s.mean_min_gap,
                    s.ci95_gap, s.worst_min_gap, s.mean_s_min_gap, s.mean_s_max_entropy});
}

std::string mean_curve_csv(const std::vector<solver::SweepProfile>& profiles) {
    if (profiles.empty()) throw std::invalid_argument("mean_curve_csv: no profiles");
    const auto points = profiles.front().records.size();
    for (const auto& p : profiles)
        if (p.records.size() != points)
            throw std::invalid_argument("mean_curve_csv: profiles use different grids");

    std::string out = "s,mean_entropy,mean_gap\n";
    for (std::size_t i = 0; i < points; ++i) {
        double ent = 0.0, gap = 0.0;
        for (const auto& p : profiles) {
            ent += p.records[i].entropy_bits;
            gap += p.records[i].gap;
        }
        const auto count = static_cast<double>(profiles.size());
        out += csv_row({profiles.front().records[i].s, ent / count, gap / count});
    }
    return out;
}

std::string grover_curve_csv(int n_qubits, const std::vector<double>& s_grid) {
    std::string out = "s,e_minus,lambda_plus,lambda_minus,entropy\n";
    for (double s : s_grid) {
        const auto p = grover::point(n_qubits, s);
        out += csv_row({p.s, p.e_minus, p.lambda_plus, p.lambda_minus, p.entropy_bits});
    }
    return out;
}

std::string grover_summary_csv(const std::vector<int>& n_values) {
    std::string out = "n,entropy_at_half,asymptote\n";
    for (int n : n_values) {
        const auto p = grover::point(n, 0.5);
        out += csv_row({static_cast<double>(n), p.entropy_bits, grover::asymptotic_entropy(n)});
    }
    return out;
}

std::string shor_case_json(const shor::ShorCase& c, bool numeric_rank) {
    json j;
    j["N"] = c.N;
    j["a"] = c.a;
    j["r"] = c.r;
    j["k"] = c.k;
    const auto prediction = shor::entropy_prediction(c);
    if (numeric_rank) {
        const auto report = shor::target_spectrum(c);
        j["rank"] = report.schmidt_rank;
        j["entropy"] = report.entropy_bits;
    } else {
        j["rank"] = c.r;
        j["entropy"] = prediction.exact;
    }
    j["entropy_prediction"] = prediction.prediction;
    const auto factors = shor::factors_from_order(c.a, c.N);
    if (factors)
        j["factors"] = {factors->first, factors->second};
    else
        j["factors"] = nullptr;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

std::string read_text(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qent::io
