#include "ghsimplex/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghsimplex/correspondence.hpp"
#include "ghsimplex/error.hpp"
#include "ghsimplex/format.hpp"
#include "ghsimplex/generators.hpp"
#include "ghsimplex/metric_io.hpp"
#include "ghsimplex/simplex_distance.hpp"

namespace ghs::cli {

namespace {

enum class OutputFormat { Pretty, Csv, Json };

struct RunConfig {
    std::string input;
    std::string preset;
    std::optional<std::size_t> m;
    std::optional<double> lambda;
    std::optional<double> lambda_min;
    std::optional<double> lambda_max;
    std::optional<double> lambda_step;
    OutputFormat format = OutputFormat::Pretty;
    double tolerance = 1e-9;
    std::optional<std::uint64_t> cap;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    bool no_triangle_check = false;

    // generate
    std::string kind;
    std::size_t n = 0;
    std::size_t dim = 2;
    std::string p = "2";
    double max_weight = 10;
    bool real_weights = false;
    bool geodesic = false;
    std::string output;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tolerance tolerance_of(const RunConfig& cfg) { return Tolerance{cfg.tolerance, cfg.tolerance}; }

std::uint64_t resolve_cap(const RunConfig& cfg, const Environment& env) {
    if (cfg.cap) return *cfg.cap;
    if (env.cap) {
        std::uint64_t v = 0;
        const auto& s = *env.cap;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
            throw UsageError("GH_SIMPLEX_CAP must be a positive integer, got '" + s + "'");
        return v;
    }
    return kDefaultEnumerationCap;
}

/// Numbers in JSON output carry the same 12 significant digits as the text forms.
nlohmann::json jnum(double v) { return std::stod(format_number(v)); }
nlohmann::json jspacing(const Spacing& s) {
    if (s.is_unbounded()) return "inf";
    return jnum(s.value());
}

FiniteMetricSpace load_space(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("--input is required");
    ValidationOptions opts;
    opts.check_triangle = !cfg.no_triangle_check;
    opts.tolerance = tolerance_of(cfg);
    return validate(read_matrix_file(cfg.input), opts);
}

std::size_t require_m(const RunConfig& cfg) {
    if (!cfg.m) throw UsageError("--m is required");
    if (*cfg.m < 1) throw UsageError("--m must be at least 1");
    return *cfg.m;
}

double require_lambda(const RunConfig& cfg) {
    if (!cfg.lambda) throw UsageError("--lambda is required");
    return *cfg.lambda;
}

/// A preset name, or a characteristics JSON file via --input when it parses as one.
std::optional<Characteristics> load_characteristics(const RunConfig& cfg) {
    if (!cfg.preset.empty()) {
        if (!cfg.input.empty()) throw UsageError("give either --input or --preset, not both");
        return preset_characteristics(cfg.preset, cfg.m);
    }
    if (cfg.input.size() > 5 && cfg.input.ends_with(".json")) {
        std::ifstream in(cfg.input);
        if (!in) throw Error(ErrorCode::IoError, "cannot open " + cfg.input);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        if (doc.is_object() && doc.contains("alpha_plus")) {
            auto c = characteristics_from_json(doc);
            if (cfg.m && *cfg.m != c.m) throw UsageError("--m disagrees with the characteristics file");
            return c;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input.empty()) throw UsageError("--input is required");
    RawMatrix raw = read_matrix_file(cfg.input);
    ValidationOptions opts;
    opts.check_triangle = !cfg.no_triangle_check;
    opts.tolerance = tolerance_of(cfg);
    try {
        const auto x = validate(std::move(raw), opts);
        switch (cfg.format) {
            case OutputFormat::Pretty:
                out << "n=" << x.size() << " diam=" << format_number(x.diam()) << " eps=" << format_number(x.eps())
                    << " OK\n";
                break;
            case OutputFormat::Csv:
                out << "n,diam,eps,valid\n"
                    << x.size() << ',' << format_number(x.diam()) << ',' << format_number(x.eps()) << ",true\n";
                break;
            case OutputFormat::Json: {
                nlohmann::ordered_json j;
                j["n"] = x.size();
                j["diam"] = jnum(x.diam());
                j["eps"] = jnum(x.eps());
                j["valid"] = true;
                out << j.dump() << '\n';
                break;
            }
        }
        return kOk;
    } catch (const Error& e) {
        if (!is_metric_violation(e.code())) throw;
        switch (cfg.format) {
            case OutputFormat::Json: {
                nlohmann::ordered_json j;
                j["valid"] = false;
                j["error"] = std::string(to_string(e.code()));
                j["detail"] = e.what();
                out << j.dump() << '\n';
                break;
            }
            default: out << "INVALID " << e.what() << '\n'; break;
        }
        return kInvalidMetric;
    }
}

int cmd_distance(const RunConfig& cfg, const Environment& env, std::ostream& out) {
    const auto x = load_space(cfg);
    const auto m = require_m(cfg);
    const auto lambda = require_lambda(cfg);
    const auto r = solve_gh_to_simplex(x, m, lambda, resolve_cap(cfg, env));
    switch (cfg.format) {
        case OutputFormat::Pretty:
            out << "2dGH=" << format_number(r.twice_gh) << " dGH=" << format_number(r.gh())
                << " branch=" << to_string(r.branch);
            if (r.argmin) out << " argmin=" << r.argmin->to_string(x);
            out << '\n';
            break;
        case OutputFormat::Csv:
            out << "m,lambda,twice_gh,gh,branch,argmin\n"
                << m << ',' << format_number(lambda) << ',' << format_number(r.twice_gh) << ','
                << format_number(r.gh()) << ',' << to_string(r.branch) << ','
                << (r.argmin ? "\"" + r.argmin->to_string(x) + "\"" : std::string()) << '\n';
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["m"] = m;
            j["lambda"] = jnum(lambda);
            j["twice_gh"] = jnum(r.twice_gh);
            j["gh"] = jnum(r.gh());
            j["branch"] = std::string(to_string(r.branch));
            j["argmin"] = r.argmin ? r.argmin->to_json(x) : nlohmann::json();
            out << j.dump() << '\n';
            break;
        }
    }
    return kOk;
}

int cmd_characteristics(const RunConfig& cfg, const Environment& env, std::ostream& out) {
    const Tolerance tol = tolerance_of(cfg);
    Characteristics c;
    std::string mst_check = "n/a";
    if (auto given = load_characteristics(cfg)) {
        c = *given;
    } else {
        const auto x = load_space(cfg);
        const auto m = require_m(cfg);
        c = characteristics(x, m, resolve_cap(cfg, env));
        mst_check = alpha_plus_via_mst(x, m) == c.alpha_plus ? "OK" : "MISMATCH";
    }
    const CaseTag tag = classify_case(c, tol);
    switch (cfg.format) {
        case OutputFormat::Pretty:
            out << "m=" << c.m << " diam=" << format_number(c.diam) << " eps=" << format_number(c.eps)
                << " alpha-=" << c.alpha_minus.to_string() << " alpha+=" << c.alpha_plus.to_string()
                << " d-=" << format_number(c.d_minus) << " d+=" << format_number(c.d_plus) << " case=" << to_string(tag)
                << " mst-check=" << mst_check << '\n';
            break;
        case OutputFormat::Csv:
            out << "m,diam,eps,alpha_minus,alpha_plus,d_minus,d_plus,case,mst_check\n"
                << c.m << ',' << format_number(c.diam) << ',' << format_number(c.eps) << ','
                << c.alpha_minus.to_string() << ',' << c.alpha_plus.to_string() << ',' << format_number(c.d_minus)
                << ',' << format_number(c.d_plus) << ',' << to_string(tag) << ',' << mst_check << '\n';
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["m"] = c.m;
            j["diam"] = jnum(c.diam);
            j["eps"] = jnum(c.eps);
            j["alpha_minus"] = jspacing(c.alpha_minus);
            j["alpha_plus"] = jspacing(c.alpha_plus);
            j["d_minus"] = jnum(c.d_minus);
            j["d_plus"] = jnum(c.d_plus);
            j["case"] = std::string(to_string(tag));
            j["mst_check"] = mst_check;
            out << j.dump() << '\n';
            break;
        }
    }
    return mst_check == "MISMATCH" ? kOracleMismatch : kOk;
}

std::vector<double> grid_of(const RunConfig& cfg) {
    const bool ranged = cfg.lambda_min || cfg.lambda_max || cfg.lambda_step;
    if (ranged && cfg.lambda) throw UsageError("give either --lambda or a --lambda-min/--lambda-max/--lambda-step grid");
    if (cfg.lambda) return {*cfg.lambda};
    if (!(cfg.lambda_min && cfg.lambda_max && cfg.lambda_step))
        throw UsageError("sweep needs --lambda-min, --lambda-max and --lambda-step");
    try {
        return make_grid(*cfg.lambda_min, *cfg.lambda_max, *cfg.lambda_step);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int cmd_sweep(const RunConfig& cfg, const Environment& env, std::ostream& out) {
    const auto grid = grid_of(cfg);
    SweepOptions opts;
    opts.tolerance = tolerance_of(cfg);
    opts.cap = resolve_cap(cfg, env);
    opts.threads = cfg.threads;
    std::vector<SweepRow> rows;
    std::size_t m = 0;
    if (auto c = load_characteristics(cfg)) {
        m = c->m;
        rows = sweep(*c, grid, opts);
    } else {
        m = require_m(cfg);
        rows = sweep(load_space(cfg), m, grid, opts);
    }

    switch (cfg.format) {
        case OutputFormat::Csv:
            out << "lambda,lo,hi,exact,case,region\n";
            for (const auto& r : rows) {
                out << format_number(r.lambda) << ',' << format_number(r.bound.lo()) << ','
                    << format_number(r.bound.hi()) << ',' << (r.bound.is_exact() ? "true" : "false") << ','
                    << to_string(r.bound.case_tag()) << ',' << to_string(r.bound.region()) << '\n';
            }
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["m"] = m;
            j["rows"] = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json row;
                row["lambda"] = jnum(r.lambda);
                row["lo"] = jnum(r.bound.lo());
                row["hi"] = jnum(r.bound.hi());
                row["exact"] = r.bound.is_exact();
                row["case"] = std::string(to_string(r.bound.case_tag()));
                row["region"] = std::string(to_string(r.bound.region()));
                if (r.value) row["value"] = jnum(*r.value);
                j["rows"].push_back(row);
            }
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Pretty: {
            out << "lambda        lo            hi            exact  case              region  value\n";
            for (const auto& r : rows) {
                char line[160];
                std::snprintf(line, sizeof line, "%-13s %-13s %-13s %-6s %-17s %-7s %s\n", format_number(r.lambda).c_str(),
                              format_number(r.bound.lo()).c_str(), format_number(r.bound.hi()).c_str(),
                              r.bound.is_exact() ? "yes" : "no", std::string(to_string(r.bound.case_tag())).c_str(),
                              std::string(to_string(r.bound.region())).c_str(),
                              r.value ? format_number(*r.value).c_str() : "-");
                out << line;
            }
            break;
        }
    }
    return kOk;
}

int cmd_oracle_check(const RunConfig& cfg, const Environment& env, std::ostream& out) {
    const auto x = load_space(cfg);
    const auto m = require_m(cfg);
    const auto lambda = require_lambda(cfg);
    const auto cap = resolve_cap(cfg, env);
    const auto formula = solve_gh_to_simplex(x, m, lambda, cap);
    const auto oracle = gh_bruteforce_detailed(simplex(m, lambda), x, cap);
    const double delta = std::fabs(formula.twice_gh - oracle.min_distortion);
    const Tolerance tol = tolerance_of(cfg);
    const bool pass = tol.eq(formula.twice_gh, oracle.min_distortion);
    switch (cfg.format) {
        case OutputFormat::Pretty:
            out << "formula=" << format_number(formula.twice_gh) << " oracle=" << format_number(oracle.min_distortion)
                << " delta=" << format_number(delta) << " branch=" << to_string(formula.branch) << ' '
                << (pass ? "PASS" : "FAIL") << '\n';
            break;
        case OutputFormat::Csv:
            out << "m,lambda,formula,oracle,delta,branch,verdict\n"
                << m << ',' << format_number(lambda) << ',' << format_number(formula.twice_gh) << ','
                << format_number(oracle.min_distortion) << ',' << format_number(delta) << ','
                << to_string(formula.branch) << ',' << (pass ? "PASS" : "FAIL") << '\n';
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["m"] = m;
            j["lambda"] = jnum(lambda);
            j["formula"] = jnum(formula.twice_gh);
            j["oracle"] = jnum(oracle.min_distortion);
            j["delta"] = jnum(delta);
            j["branch"] = std::string(to_string(formula.branch));
            j["verdict"] = pass ? "PASS" : "FAIL";
            out << j.dump() << '\n';
            break;
        }
    }
    return pass ? kOk : kOracleMismatch;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    std::optional<FiniteMetricSpace> x;
    bool circle = false;
    if (cfg.kind == "simplex") {
        if (!cfg.lambda) throw UsageError("simplex needs --lambda");
        x = simplex(cfg.n, *cfg.lambda);
    } else if (cfg.kind == "random-metric") {
        x = random_metric(cfg.n, cfg.seed, RandomMetricOptions{cfg.max_weight, !cfg.real_weights});
    } else if (cfg.kind == "lp-points") {
        double p = 0;
        if (cfg.p == "inf") {
            p = std::numeric_limits<double>::infinity();
        } else {
            auto [ptr, ec] = std::from_chars(cfg.p.data(), cfg.p.data() + cfg.p.size(), p);
            if (ec != std::errc{} || ptr != cfg.p.data() + cfg.p.size()) throw UsageError("--p must be a number or inf");
        }
        x = lp_points(cfg.n, cfg.dim, p, cfg.seed);
    } else if (cfg.kind == "circle-sample") {
        x = circle_sample(cfg.n, cfg.geodesic);
        circle = true;
    } else {
        throw UsageError("unknown --kind '" + cfg.kind + "'");
    }

    const bool json = cfg.format == OutputFormat::Json || (cfg.format == OutputFormat::Pretty && cfg.output.ends_with(".json"));
    const std::string text = json ? to_json(*x) : to_csv(*x);
    if (cfg.output.empty()) {
        out << text;
    } else {
        write_text_file(cfg.output, text);
        out << "wrote " << x->size() << "-point " << cfg.kind << " to " << cfg.output << '\n';
    }
    if (circle) {
        err << "note: circle-sample is a finite sample, not the continuum circle (sample != continuum); "
               "its partition characteristics differ from the circle's (e.g. d_2 < 2)\n";
    }
    return kOk;
}

int exit_code_for(ErrorCode code) {
    if (is_metric_violation(code)) return kInvalidMetric;
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::IoError: return kIoError;
        case ErrorCode::EnumerationTooLarge:
        case ErrorCode::SizeThresholdExceeded:
        case ErrorCode::Overflow: return kTooLarge;
        case ErrorCode::InvalidCharacteristics: return kInvalidMetric;
        default: return kUsage;
    }
}

void add_input_options(CLI::App* sub, RunConfig& cfg, bool with_preset) {
    sub->add_option("--input,-i", cfg.input, "distance matrix (.csv or .json)");
    if (with_preset) sub->add_option("--preset", cfg.preset, "characteristics preset: circle-m2 or simplex-<n>-<lambda>");
    sub->add_flag("--no-triangle-check", cfg.no_triangle_check, "accept semimetrics");
    sub->add_option("--tolerance", cfg.tolerance, "comparison tolerance (absolute and relative)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{
                {"pretty", OutputFormat::Pretty}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}},
            CLI::ignore_case));
}

void add_compute_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--m", cfg.m, "number of simplex points / partition blocks");
    sub->add_option("--cap", cfg.cap, "enumeration cap (overrides GH_SIMPLEX_CAP)")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Gromov-Hausdorff distances from finite metric spaces to simplexes", "ghsimplex"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* validate_cmd = app.add_subcommand("validate", "check a distance matrix against the metric axioms");
    add_input_options(validate_cmd, cfg, false);

    auto* distance_cmd = app.add_subcommand("distance", "exact 2 d_GH(lambda Delta_m, X)");
    add_input_options(distance_cmd, cfg, false);
    add_compute_options(distance_cmd, cfg);
    distance_cmd->add_option("--lambda", cfg.lambda, "simplex edge length");

    auto* chars_cmd = app.add_subcommand("characteristics", "alpha-/alpha+/d-/d+ for m blocks and the case tag");
    add_input_options(chars_cmd, cfg, true);
    add_compute_options(chars_cmd, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "bounds on g(lambda) over a lambda grid");
    add_input_options(sweep_cmd, cfg, true);
    add_compute_options(sweep_cmd, cfg);
    sweep_cmd->add_option("--lambda", cfg.lambda, "single lambda");
    sweep_cmd->add_option("--lambda-min", cfg.lambda_min, "grid start");
    sweep_cmd->add_option("--lambda-max", cfg.lambda_max, "grid end (inclusive)");
    sweep_cmd->add_option("--lambda-step", cfg.lambda_step, "grid step");

    auto* oracle_cmd = app.add_subcommand("oracle-check", "compare the formula with brute-force correspondences");
    add_input_options(oracle_cmd, cfg, false);
    add_compute_options(oracle_cmd, cfg);
    oracle_cmd->add_option("--lambda", cfg.lambda, "simplex edge length");

    auto* gen_cmd = app.add_subcommand("generate", "write a distance-matrix file");
    gen_cmd->add_option("--kind", cfg.kind, "simplex | random-metric | lp-points | circle-sample")->required();
    gen_cmd->add_option("--n", cfg.n, "number of points")->required();
    gen_cmd->add_option("--lambda", cfg.lambda, "edge length (simplex)");
    gen_cmd->add_option("--seed", cfg.seed, "random seed");
    gen_cmd->add_option("--dim", cfg.dim, "dimension (lp-points)");
    gen_cmd->add_option("--p", cfg.p, "norm exponent or inf (lp-points)");
    gen_cmd->add_option("--max-weight", cfg.max_weight, "largest edge weight (random-metric)");
    gen_cmd->add_flag("--real", cfg.real_weights, "real instead of integer weights (random-metric)");
    gen_cmd->add_flag("--geodesic", cfg.geodesic, "arc lengths instead of chords (circle-sample)");
    gen_cmd->add_option("--output,-o", cfg.output, "output path; stdout when omitted");
    gen_cmd->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}},
            CLI::ignore_case));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(cfg, out);
        if (distance_cmd->parsed()) return cmd_distance(cfg, env, out);
        if (chars_cmd->parsed()) return cmd_characteristics(cfg, env, out);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, env, out);
        if (oracle_cmd->parsed()) return cmd_oracle_check(cfg, env, out);
        if (gen_cmd->parsed()) return cmd_generate(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

}  // namespace ghs::cli
