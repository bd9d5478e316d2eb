#include "octostokes/campaign.hpp"

#include "octostokes/errors.hpp"
#include "octostokes/random_field.hpp"
#include "octostokes/stokes.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

namespace octostokes {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<FanoLine, 7> kReferenceFanoLines{{
    {1, 2, 4}, {1, 3, 5}, {1, 6, 7}, {2, 3, 6}, {2, 5, 7}, {3, 4, 7}, {4, 5, 6},
}};

// Sub-seeds for the two fields of one trial.
std::uint64_t g_seed(std::uint64_t seed_t) { return splitmix64(seed_t + 1); }
std::uint64_t f_seed(std::uint64_t seed_t) { return splitmix64(seed_t + 2); }

unsigned effective_thread_count(unsigned trials) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OCTO_STOKES_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || cap == 0) {
            throw ConfigError("OCTO_STOKES_THREADS must be a positive integer");
        }
        n = std::min<unsigned long>(n, cap);
    }
    return std::max(1u, std::min(n, trials));
}

template <ScalarRing S>
std::string max_abs_component(const Octonion<S>& o) {
    S best(0);
    for (std::size_t k = 0; k < 8; ++k) {
        S mag = o[k] < S(0) ? S(-o[k]) : o[k];
        if (best < mag) best = mag;
    }
    return scalar_to_string(best);
}

TrialSummary summarize_exact(int trial, std::uint64_t seed,
                             const StokesResult<ExactInt>& r) {
    TrialSummary s;
    s.trial = trial;
    s.seed = seed;
    s.lhs_norm_sq = scalar_to_string(r.lhs.norm_sq());
    s.max_abs_residual = max_abs_component(r.residual);
    s.oracle_match = r.oracle_match;
    s.pass = r.residual.is_zero() && r.oracle_match;
    return s;
}

TrialSummary summarize_float(int trial, std::uint64_t seed, const StokesResult<double>& r,
                             double tolerance) {
    TrialSummary s;
    s.trial = trial;
    s.seed = seed;
    s.lhs_norm_sq = scalar_to_string(r.lhs.norm_sq());
    s.max_abs_residual = max_abs_component(r.residual);
    const double scale = 1.0 + std::sqrt(r.lhs.norm_sq());
    double max_res = 0.0, max_gap = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        max_res = std::max(max_res, std::abs(r.residual[k]));
        max_gap = std::max(max_gap, std::abs(r.correction[k] - r.correction_oracle[k]));
    }
    s.oracle_match = max_gap <= tolerance * scale;
    s.pass = max_res <= tolerance * scale && s.oracle_match;
    return s;
}

TrialSummary run_trial(const RunConfig& config, int trial) {
    const std::uint64_t seed_t = trial_seed(config.seed, static_cast<std::uint64_t>(trial));
    if (config.mode == ScalarMode::exact) {
        const auto g = random_field<ExactInt>(g_seed(seed_t), config.radius,
                                              config.coeff_bound, ExactInt(1));
        const auto f = random_field<ExactInt>(f_seed(seed_t), config.radius,
                                              config.coeff_bound, ExactInt(1));
        return summarize_exact(trial, seed_t, stokes_residual(g, f));
    }
    const auto g =
        random_field<double>(g_seed(seed_t), config.radius, config.coeff_bound, config.h);
    const auto f =
        random_field<double>(f_seed(seed_t), config.radius, config.coeff_bound, config.h);
    return summarize_float(trial, seed_t, stokes_residual(g, f), config.tolerance);
}

TrialSummary run_loaded_trial(const RunConfig& config) {
    const AnyField g = load_field(config.field_g_path);
    const AnyField f = load_field(config.field_f_path);
    if (g.mode() != f.mode()) {
        throw ModeMismatchError("field files carry different scalar modes");
    }
    if (g.mode() != config.mode) {
        throw ConfigError("configured mode disagrees with the field files");
    }
    if (config.mode == ScalarMode::exact) {
        const auto& gf = std::get<Field<ExactInt>>(g.value);
        const auto& ff = std::get<Field<ExactInt>>(f.value);
        return summarize_exact(0, config.seed, stokes_residual(gf, ff));
    }
    const auto& gf = std::get<Field<double>>(g.value);
    const auto& ff = std::get<Field<double>>(f.value);
    if (gf.lattice_constant() != config.h || ff.lattice_constant() != config.h) {
        throw ConfigError("configured h disagrees with the field files");
    }
    return summarize_float(0, config.seed, stokes_residual(gf, ff), config.tolerance);
}

} // namespace

void validate_config(const RunConfig& config) {
    if (config.trials < 1) throw ConfigError("trials must be positive");
    if (config.radius < 0) throw ConfigError("radius must be non-negative");
    if (config.coeff_bound < 1) throw ConfigError("coeff-bound must be at least 1");
    if (config.mode == ScalarMode::exact && config.h != 1.0) {
        throw ConfigError("exact mode requires h = 1");
    }
    if (!(config.h > 0.0) || !std::isfinite(config.h)) {
        throw ConfigError("h must be positive and finite");
    }
    if (config.mode == ScalarMode::floating &&
        (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))) {
        throw ConfigError("float mode requires a positive tolerance");
    }
    if (config.field_g_path.empty() != config.field_f_path.empty()) {
        throw ConfigError("either both or neither of --field-g/--field-f must be given");
    }
}

CensusBlock census_block() {
    const Census census = classification_census();
    CensusBlock block;
    block.total = census.associative + census.anti_associative;
    block.associative = census.associative;
    block.anti_associative = census.anti_associative;
    block.grouped_sums = grouped_pair_count();
    block.fano_lines = static_cast<int>(enumerate_fano_lines().size());
    block.match = block.total == 512 && block.associative == 344 &&
                  block.anti_associative == 168 && block.grouped_sums == 42 &&
                  enumerate_fano_lines() == kReferenceFanoLines;
    return block;
}

std::string table_certificate_string() {
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0')
       << CayleyTable::instance().certificate_hash();
    return os.str();
}

CampaignReport run_campaign(const RunConfig& config) {
    validate_config(config);

    CampaignReport report;
    report.config = config;
    report.table_certificate = table_certificate_string();
    report.census = census_block();

    if (!config.field_g_path.empty()) {
        // A loaded pair is a single trial regardless of --trials.
        report.config.trials = 1;
        report.trials.push_back(run_loaded_trial(config));
    } else {
        report.trials.resize(static_cast<std::size_t>(config.trials));
        const unsigned workers =
            effective_thread_count(static_cast<unsigned>(config.trials));
        std::atomic<int> next{0};
        auto work = [&] {
            for (int t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1)) {
                report.trials[static_cast<std::size_t>(t)] = run_trial(config, t);
            }
        };
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
            for (std::thread& th : pool) th.join();
        }
    }

    report.pass = report.census.match &&
                  std::all_of(report.trials.begin(), report.trials.end(),
                              [](const TrialSummary& t) { return t.pass; });
    return report;
}

namespace {

std::string render_double(double v) { return scalar_to_string(v); }

json config_to_json(const RunConfig& config) {
    json j;
    j["command"] = config.command;
    j["seed"] = config.seed;
    j["trials"] = config.trials;
    j["radius"] = config.radius;
    j["coeff_bound"] = config.coeff_bound;
    j["h"] = config.h;
    j["mode"] = to_string(config.mode);
    if (config.mode == ScalarMode::floating) j["tolerance"] = config.tolerance;
    j["format"] = to_string(config.format);
    if (!config.field_g_path.empty()) {
        j["field_g"] = config.field_g_path;
        j["field_f"] = config.field_f_path;
    }
    return j;
}

json census_to_json(const CensusBlock& census) {
    json j;
    j["triples"] = census.total;
    j["associative"] = census.associative;
    j["anti_associative"] = census.anti_associative;
    j["grouped_sums"] = census.grouped_sums;
    j["fano_lines"] = census.fano_lines;
    j["match"] = census.match;
    return j;
}

json lines_to_json() {
    json lines = json::array();
    for (const FanoLine& line : enumerate_fano_lines()) {
        lines.push_back(json::array({line[0], line[1], line[2]}));
    }
    return lines;
}

std::string line_set_text(const FanoLine& line) {
    std::ostringstream os;
    os << '{' << int(line[0]) << ',' << int(line[1]) << ',' << int(line[2]) << '}';
    return os.str();
}

std::string render_report_text(const CampaignReport& r) {
    std::ostringstream os;
    const RunConfig& c = r.config;
    os << "octo-stokes " << c.command << '\n';
    os << "mode=" << to_string(c.mode) << " h=" << render_double(c.h) << " seed=" << c.seed
       << " trials=" << c.trials << " radius=" << c.radius
       << " coeff-bound=" << c.coeff_bound;
    if (c.mode == ScalarMode::floating) os << " tol=" << render_double(c.tolerance);
    if (!c.field_g_path.empty()) {
        os << " field-g=" << c.field_g_path << " field-f=" << c.field_f_path;
    }
    os << '\n';
    os << "table-certificate: " << r.table_certificate << '\n';
    os << "census: triples=" << r.census.total << " associative=" << r.census.associative
       << " anti=" << r.census.anti_associative << " grouped-sums=" << r.census.grouped_sums
       << " fano-lines=" << r.census.fano_lines
       << " match=" << (r.census.match ? "yes" : "no") << '\n';
    for (const TrialSummary& t : r.trials) {
        os << "trial " << t.trial << ": seed=" << t.seed
           << " max|residual|=" << t.max_abs_residual << " lhs-norm-sq=" << t.lhs_norm_sq
           << " oracle=" << (t.oracle_match ? "match" : "MISMATCH")
           << (t.pass ? " pass" : " FAIL") << '\n';
    }
    os << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
    return os.str();
}

std::string render_report_json(const CampaignReport& r) {
    json j;
    j["config"] = config_to_json(r.config);
    j["table_certificate"] = r.table_certificate;
    j["census"] = census_to_json(r.census);
    json trials = json::array();
    for (const TrialSummary& t : r.trials) {
        json tj;
        tj["trial"] = t.trial;
        tj["seed"] = t.seed;
        tj["lhs_norm_sq"] = t.lhs_norm_sq;
        tj["max_abs_residual"] = t.max_abs_residual;
        tj["oracle_match"] = t.oracle_match;
        tj["pass"] = t.pass;
        trials.push_back(std::move(tj));
    }
    j["trials"] = std::move(trials);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string render_report_csv(const CampaignReport& r) {
    std::ostringstream os;
    os << "trial,seed,lhs_norm_sq,max_abs_residual,oracle_match,pass\n";
    for (const TrialSummary& t : r.trials) {
        os << t.trial << ',' << t.seed << ',' << t.lhs_norm_sq << ',' << t.max_abs_residual
           << ',' << (t.oracle_match ? "true" : "false") << ','
           << (t.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

} // namespace

std::string render_report(const CampaignReport& report) {
    switch (report.config.format) {
        case OutputFormat::text: return render_report_text(report);
        case OutputFormat::json: return render_report_json(report);
        case OutputFormat::csv: return render_report_csv(report);
    }
    throw ConfigError("unknown output format");
}

std::string render_table(OutputFormat format) {
    const CayleyTable& table = CayleyTable::instance();
    switch (format) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    const SignedBasis p = table.product(BasisIndex(i), BasisIndex(j));
                    os << 'e' << i << "*e" << j << " = " << (p.sign > 0 ? '+' : '-') << 'e'
                       << int(p.index) << (j == 7 ? "\n" : "  ");
                }
            }
            os << "certificate: " << table_certificate_string() << '\n';
            return os.str();
        }
        case OutputFormat::json: {
            json rows = json::array();
            for (int i = 0; i < 8; ++i) {
                json row = json::array();
                for (int j = 0; j < 8; ++j) {
                    const SignedBasis p = table.product(BasisIndex(i), BasisIndex(j));
                    json cell;
                    cell["sign"] = int(p.sign);
                    cell["index"] = int(p.index);
                    row.push_back(std::move(cell));
                }
                rows.push_back(std::move(row));
            }
            json j;
            j["table"] = std::move(rows);
            j["certificate"] = table_certificate_string();
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "i,j,sign,index\n";
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    const SignedBasis p = table.product(BasisIndex(i), BasisIndex(j));
                    os << i << ',' << j << ',' << int(p.sign) << ',' << int(p.index) << '\n';
                }
            }
            return os.str();
        }
    }
    throw ConfigError("unknown output format");
}

std::string render_classify(OutputFormat format) {
    const CensusBlock census = census_block();
    switch (format) {
        case OutputFormat::text: {
            std::ostringstream os;
            os << "associative=" << census.associative << " anti=" << census.anti_associative
               << " total=" << census.total << '\n';
            os << "grouped-pairs: " << census.grouped_sums << '\n';
            os << "lines:";
            for (const FanoLine& line : enumerate_fano_lines()) {
                os << ' ' << line_set_text(line);
            }
            os << '\n';
            os << "match: " << (census.match ? "yes" : "no") << '\n';
            return os.str();
        }
        case OutputFormat::json: {
            json j;
            j["census"] = census_to_json(census);
            j["lines"] = lines_to_json();
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            // Per-triple classification, one row per ordered triple.
            std::ostringstream os;
            os << "i,j,k,classification\n";
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    for (int k = 0; k < 8; ++k) {
                        const bool anti =
                            classify_basis_triple(BasisIndex(i), BasisIndex(j),
                                                  BasisIndex(k)) ==
                            Associativity::AntiAssociative;
                        os << i << ',' << j << ',' << k << ','
                           << (anti ? "anti" : "associative") << '\n';
                    }
                }
            }
            return os.str();
        }
    }
    throw ConfigError("unknown output format");
}

std::string render_fano(OutputFormat format) {
    const auto& lines = enumerate_fano_lines();
    int matched = 0;
    for (std::size_t s = 0; s < lines.size(); ++s) {
        if (lines[s] == kReferenceFanoLines[s]) ++matched;
    }
    switch (format) {
        case OutputFormat::text: {
            std::ostringstream os;
            for (std::size_t s = 0; s < lines.size(); ++s) {
                os << 'I' << s + 1 << " = " << line_set_text(lines[s]) << '\n';
            }
            os << "match: " << matched << "/7\n";
            return os.str();
        }
        case OutputFormat::json: {
            json j;
            j["lines"] = lines_to_json();
            j["matched"] = matched;
            j["expected"] = 7;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "s,a,b,c\n";
            for (std::size_t s = 0; s < lines.size(); ++s) {
                os << s + 1 << ',' << int(lines[s][0]) << ',' << int(lines[s][1]) << ','
                   << int(lines[s][2]) << '\n';
            }
            return os.str();
        }
    }
    throw ConfigError("unknown output format");
}

const char* to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

} // namespace octostokes
