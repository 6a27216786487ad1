#pragma once

#include "unav/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace unav {

enum class SweepMode { Oracle, Extractor, Both };

const char* sweep_mode_name(SweepMode m);

// Grid of sweep cells (the cross product n x eps x t, in that nesting
// order) plus per-cell trial count and generator choice. Parsed from JSON
// by sweep_config_from_json; validate() enforces the invariants.
struct SweepConfig {
    std::string generator;  // p-pattern | tightness | random | random-mindeg
    std::vector<std::size_t> n_values;
    std::vector<Rat> eps_values;
    std::vector<std::size_t> t_values;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    SweepMode mode = SweepMode::Oracle;
    std::string out;  // default CSV path; the CLI may override

    // Generator knobs (ignored by generators that do not use them).
    Rat uniform_p = Rat(1, 2);       // random
    Rat min_degree = Rat(35, 100);   // random-mindeg
    Rat recolor_p = Rat(1, 10);      // tightness

    // When false (the default), the millis column is written as 0 so equal
    // configs produce byte-identical CSV.
    bool record_timing = false;

    void validate() const;
};

// One row per (cell, trial), ordered by (cell index, trial index). The
// trial seed is derive_seed(base_seed, cell_index, trial_index).
struct SweepRecord {
    std::string generator;
    std::size_t n = 0;  // actual vertex count of the generated coloring
    Rat eps;
    std::size_t t = 0;
    std::uint64_t seed = 0;
    SweepMode mode = SweepMode::Oracle;
    std::string found_kind;  // induced_biclique | p_pattern | none | unknown
    std::size_t rounds = 0;  // extractor refinement rounds (0 in oracle mode)
    std::uint64_t millis = 0;
};

// Field-by-field parse with FormatError on unknown generator or mode names;
// unmentioned knobs keep their defaults.
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// Runs every cell sequentially, trials in order. Per-record search outcomes
// (including unknown) are data; only config-level problems throw.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

extern const char* kSweepCsvHeader;

// Header plus one line per record, '\n' separated, trailing newline.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

}  // namespace unav
