// io.hpp
// File formats: instance JSON, sweep / aggregate / Grover CSV tables, Shor
// case reports. All emitters are byte-deterministic for fixed inputs
// (sorted JSON keys, %.12g numbers, '\n' line ends).

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qent/exactcover.hpp"
#include "qent/grover.hpp"
#include "qent/shor.hpp"
#include "qent/solver.hpp"
#include "qent/stats.hpp"

namespace qent::io {

// Numbers formatted with 12 significant digits ("%.12g").
std::string format_number(double v);

// Instance JSON: {"n", "k", "clauses", "assignment", "seed"}; the assignment
// bitstring is written qubit 0 first. Round-trips byte-stably.
std::string instance_to_json(const ec::ExactCoverInstance& instance);
ec::ExactCoverInstance instance_from_json(const std::string& text);

void save_instance(const ec::ExactCoverInstance& instance, const std::filesystem::path& file);
ec::ExactCoverInstance load_instance(const std::filesystem::path& file);

// Sweep CSV: header s,e0,e1,gap,entropy,h10; one row per grid point.
std::string sweep_to_csv(const solver::SweepProfile& profile);

// Aggregate table CSV, one row per ensemble.
std::string aggregate_csv_header();
std::string aggregate_csv_row(const stats::EnsembleStats& stats);

// Mean curve over an ensemble: s,mean_entropy,mean_gap.
std::string mean_curve_csv(const std::vector<solver::SweepProfile>& profiles);

// Grover per-n curve: s,e_minus,lambda_plus,lambda_minus,entropy.
std::string grover_curve_csv(int n_qubits, const std::vector<double>& s_grid);

// Grover saturation table: n,entropy_at_half,asymptote.
std::string grover_summary_csv(const std::vector<int>& n_values);

// Shor case report JSON object (one case).
std::string shor_case_json(const shor::ShorCase& c, bool numeric_rank);

void write_text(const std::filesystem::path& file, const std::string& text);
std::string read_text(const std::filesystem::path& file);

}  // namespace qent::io
