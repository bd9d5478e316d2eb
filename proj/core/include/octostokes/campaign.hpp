#pragma once

#include "octostokes/field_io.hpp"
#include "octostokes/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace octostokes {

enum class OutputFormat { text, json, csv };

/// Everything a run depends on. Identical configs produce byte-identical
/// reports in every format.
struct RunConfig {
    std::string command = "verify";
    std::uint64_t seed = 1;
    int trials = 100;
    std::int32_t radius = 1;
    std::int32_t coeff_bound = 3;
    double h = 1.0;
    ScalarMode mode = ScalarMode::exact;
    double tolerance = 1e-10;
    OutputFormat format = OutputFormat::text;
    std::string field_g_path;
    std::string field_f_path;
};

/// Throws ConfigError on invariant violations (exact mode with h != 1,
/// non-positive trials/tolerance, only one field path, ...).
void validate_config(const RunConfig& config);

struct TrialSummary {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string lhs_norm_sq;        // decimal string (exact) or shortest double
    std::string max_abs_residual;   // largest |component| of the residual
    bool oracle_match = false;      // exact equality, or within tolerance in float mode
    bool pass = false;
};

struct CensusBlock {
    int total = 0;
    int associative = 0;
    int anti_associative = 0;
    int grouped_sums = 0;
    int fano_lines = 0;
    bool match = false;  // equals the expected 512/344/168/42/7 and the reference lines
};

struct CampaignReport {
    RunConfig config;
    std::string table_certificate;  // "fnv1a:<16 hex digits>"
    CensusBlock census;
    std::vector<TrialSummary> trials;
    bool pass = false;
};

/// Runs `trials` independent seeded field pairs through the Stokes residual,
/// or a single pair loaded from the configured field paths. Trials may run
/// concurrently (OCTO_STOKES_THREADS caps the worker count); the report is
/// assembled in trial order and is deterministic for a given config.
CampaignReport run_campaign(const RunConfig& config);

/// Census block plus the match verdict against the expected constants.
CensusBlock census_block();

/// Certificate hash of the active table, formatted for reports.
std::string table_certificate_string();

std::string render_report(const CampaignReport& report);
std::string render_table(OutputFormat format);
std::string render_classify(OutputFormat format);
std::string render_fano(OutputFormat format);

const char* to_string(OutputFormat format);

} // namespace octostokes
