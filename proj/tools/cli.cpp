#include "cli.hpp"

#include "quantplan/error.hpp"
#include "quantplan/filter_model.hpp"
#include "quantplan/plan_optimizer.hpp"
#include "quantplan/price_quality.hpp"
#include "quantplan/serialize.hpp"
#include "quantplan/sim_verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace quantplan::cli {

namespace {

// Published worked example: 2 kHz signal band, two-link RC filter,
// 500 kHz ADC, first-order derivative.
namespace example {
constexpr double kSignalBandHz = 2000.0;
constexpr int kOrder = 1;
constexpr int kLinks = 2;
constexpr double kLevel = 0.1;
constexpr double kAdcHz = 500000.0;

constexpr double kTimeConstantS = 5.12e-5;
constexpr double kCutoffHz = 4560.0;
constexpr double kStatedLevel = 0.01;
constexpr double kBaseRateHz = 2.0 * kCutoffHz;
constexpr int kOptimalN = 5;
constexpr double kOptimalRateHz = 45600.0;
constexpr double kRelativeError = 0.048;
constexpr int kDecimation = 5;
constexpr double kCoordinateRateHz = 36550.0;
constexpr int kCoordinateDecimation = 8;
} // namespace example

class UsageError : public Error {
public:
    using Error::Error;
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string num(double v) { return format_number(v); }

std::string percent(double fraction) { return format_number(100.0 * fraction) + "%"; }

std::string relative_delta(double computed, double reference) {
    return percent((computed - reference) / reference);
}

struct Output {
    std::string format = "json";
    std::string path;
};

void add_output_options(CLI::App& cmd, Output& o) {
    cmd.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    cmd.add_option("--out", o.path, "Write the document to PATH instead of standard output");
}

void emit(const Output& o, const std::string& document, std::ostream& out) {
    if (o.path.empty()) {
        out << document;
        return;
    }
    std::ofstream file(o.path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + o.path + "'");
    file << document;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- plan

struct PlanArgs {
    std::string f_v = "";
    int order = 1;
    int links = 2;
    double tau = 0.0;
    std::string f_half;
    double level = 0.1;
    std::string domain = "power";
    std::string adc;
    double margin = 1.0;
    bool paper_example = false;
    Output output;
};

std::vector<std::string> example_plan_notes(const PlanRequest& req, const SamplingPlan& plan) {
    using namespace example;
    std::vector<std::string> notes;
    const double t = req.filter.time_constant_s();
    notes.push_back("time constant: published " + num(kTimeConstantS) + " s, computed " +
                    num(t) + " s (delta " + relative_delta(t, kTimeConstantS) + ")");

    const double f_stated = solve_cutoff(req.filter, kStatedLevel, LevelDomain::power);
    notes.push_back("suppression cutoff: published " + num(kCutoffHz) + " Hz with the level stated as " +
                    num(kStatedLevel) + " of power; level " + num(req.suppression_level) + "/" +
                    std::string(to_string(req.suppression_domain)) + " gives " + num(plan.f_s_hz) +
                    " Hz (delta " + relative_delta(plan.f_s_hz, kCutoffHz) + "), level " +
                    num(kStatedLevel) + "/power gives " + num(f_stated) + " Hz");

    std::string n_note = "optimal multiplier: published N_o = " + std::to_string(kOptimalN) +
                         "; literal minimizer of J over [1, " +
                         std::to_string(plan.sweep.size()) + "] is N = " +
                         std::to_string(plan.n_opt) + " with J = " + num(plan.j_at_opt);
    if (static_cast<std::size_t>(kOptimalN) <= plan.sweep.size()) {
        const double j5 = plan.sweep[kOptimalN - 1].j;
        n_note += "; J(" + std::to_string(kOptimalN) + ") = " + num(j5) + " (delta J = " +
                  num(j5 - plan.j_at_opt) + ")";
    }
    notes.push_back(n_note);

    notes.push_back("optimal rate: published F_o = " + num(kOptimalRateHz) +
                    " Hz, computed as N*2*f_s; this plan uses F_o = 2*N_o*F_p = " +
                    num(plan.f_o_hz) + " Hz");
    notes.push_back("relative error: published " + percent(kRelativeError) + "; 1 - cos(pi/5) = " +
                    percent(quality_error(5)) + ", 1 - cos(pi/10) = " + percent(quality_error(10)) +
                    "; the published figure matches N = 10 (phase step pi/10), not N = 5");
    notes.push_back("output rate: published " + num(kBaseRateHz) + " Hz with decimation " +
                    std::to_string(kDecimation) + "; this plan delivers F_p = " + num(plan.f_p_hz) +
                    " Hz with K_d = 2*N_o = " + std::to_string(plan.k_d));
    notes.push_back("coordinate plan: published " + num(kCoordinateRateHz) + " Hz with decimation " +
                    std::to_string(kCoordinateDecimation) + " for k = 0; nearest closed form 2*4*f_s = " +
                    num(8.0 * kCutoffHz) + " Hz, not reproduced exactly");
    return notes;
}

Json plan_inputs(const PlanRequest& req) {
    return Json{{"f_v_hz", req.f_v_hz},
                {"order_k", req.order_k},
                {"links", req.filter.links()},
                {"time_constant_s", req.filter.time_constant_s()},
                {"suppression_level", req.suppression_level},
                {"suppression_domain", std::string(to_string(req.suppression_domain))},
                {"f_adc_hz", req.f_adc_hz},
                {"fp_margin", req.fp_margin}};
}

std::string plan_human(const PlanRequest& req, const SamplingPlan& plan,
                       const std::vector<std::string>& notes) {
    std::ostringstream s;
    s << "sampling plan (order k = " << plan.order_k << ")\n"
      << "  filter:            " << req.filter.links() << "-link RC, T = "
      << num(req.filter.time_constant_s()) << " s\n"
      << "  suppression f_s:   " << num(plan.f_s_hz) << " Hz\n"
      << "  base rate F_p:     " << num(plan.f_p_hz) << " Hz\n"
      << "  minimum rate F2:   " << num(plan.f2_min_hz) << " Hz\n"
      << "  optimal N_o:       " << plan.n_opt << " of " << plan.sweep.size() << "\n"
      << "  optimal rate F_o:  " << num(plan.f_o_hz) << " Hz\n"
      << "  decimation K_d:    " << plan.k_d << "\n"
      << "  r at optimum:      " << num(plan.r_at_opt) << "\n"
      << "  J at optimum:      " << num(plan.j_at_opt) << "\n";
    if (!notes.empty()) {
        s << "notes:\n";
        for (const auto& n : notes)
            s << "  - " << n << "\n";
    }
    return s.str();
}

void register_plan(CLI::App& app, PlanArgs& a) {
    auto* cmd = app.add_subcommand("plan", "Compute the optimal sampling plan for one derivative order");
    cmd->add_option("--fv", a.f_v, "Signal band edge F_v (e.g. 2khz)");
    cmd->add_option("--order", a.order, "Derivative order k")->check(CLI::NonNegativeNumber);
    cmd->add_option("--links", a.links, "Number of RC links")->check(CLI::PositiveNumber);
    auto* tau = cmd->add_option("--tau", a.tau, "RC time constant in seconds");
    cmd->add_option("--fhalf", a.f_half, "Filter half-power frequency (default: F_v)")->excludes(tau);
    cmd->add_option("--level", a.level, "Suppression level in (0,1)");
    cmd->add_option("--level-domain", a.domain, "power or amplitude");
    cmd->add_option("--adc", a.adc, "Maximum ADC rate F_s (e.g. 500khz)");
    cmd->add_option("--fp-margin", a.margin, "F_p = margin * 2 * f_s, margin >= 1");
    cmd->add_flag("--paper-example", a.paper_example,
                  "Load the published worked example inputs and annotate the deltas");
    add_output_options(*cmd, a.output);
}

std::string run_plan(const CLI::App& cmd, const PlanArgs& a) {
    const auto given = [&](const char* name) { return cmd.count(name) > 0; };

    PlanRequest req;
    if (a.paper_example) {
        req.f_v_hz = given("--fv") ? parse_frequency(a.f_v) : example::kSignalBandHz;
        req.order_k = given("--order") ? a.order : example::kOrder;
        req.f_adc_hz = given("--adc") ? parse_frequency(a.adc) : example::kAdcHz;
        req.suppression_level = given("--level") ? a.level : example::kLevel;
    } else {
        if (a.f_v.empty())
            throw UsageError("plan: --fv is required");
        if (a.adc.empty())
            throw UsageError("plan: --adc is required");
        req.f_v_hz = parse_frequency(a.f_v);
        req.order_k = a.order;
        req.f_adc_hz = parse_frequency(a.adc);
        req.suppression_level = a.level;
    }
    const int links = (a.paper_example && !given("--links")) ? example::kLinks : a.links;
    req.suppression_domain = parse_level_domain(a.domain);
    req.fp_margin = a.margin;

    double tau = a.tau;
    if (!given("--tau")) {
        const double f_half = a.f_half.empty() ? req.f_v_hz : parse_frequency(a.f_half);
        tau = solve_time_constant(links, f_half);
    }
    req.filter = RcCascade(links, tau);

    const SamplingPlan plan = build_plan(req);
    const std::vector<std::string> notes =
        a.paper_example ? example_plan_notes(req, plan) : std::vector<std::string>{};

    if (a.output.format == "csv")
        return sweep_csv(plan.sweep);
    if (a.output.format == "human")
        return plan_human(req, plan, notes);
    return dump(Json{{"inputs", plan_inputs(req)}, {"plan", to_json(plan)}, {"notes", notes}});
}

// --------------------------------------------------------------- sweep

struct SweepArgs {
    std::string f_p;
    std::string adc;
    std::string range;
    int order = 1;
    bool paper_example = false;
    Output output;
};

void register_sweep(CLI::App& app, SweepArgs& a) {
    auto* cmd = app.add_subcommand("sweep", "Tabulate quality, price and their sum over N");
    cmd->add_option("--fp", a.f_p, "Base rate F_p (e.g. 9.12khz)");
    cmd->add_option("--adc", a.adc, "Maximum ADC rate F_s");
    cmd->add_option("--n", a.range, "Inclusive range LO..HI (default: all feasible N)");
    cmd->add_option("--order", a.order, "Derivative order k (reported only)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--paper-example", a.paper_example,
                  "Use the published example F_p = 9.12 kHz, F_s = 500 kHz");
    add_output_options(*cmd, a.output);
}

std::string run_sweep(const CLI::App& cmd, const SweepArgs& a) {
    PricingParams params;
    params.order_k = a.order;
    if (a.paper_example) {
        params.f_p_hz = cmd.count("--fp") ? parse_frequency(a.f_p) : example::kBaseRateHz;
        params.f_adc_hz = cmd.count("--adc") ? parse_frequency(a.adc) : example::kAdcHz;
    } else {
        if (a.f_p.empty() || a.adc.empty())
            throw UsageError("sweep: --fp and --adc are required");
        params.f_p_hz = parse_frequency(a.f_p);
        params.f_adc_hz = parse_frequency(a.adc);
    }
    validate(params);

    auto [lo, hi] = a.range.empty() ? std::pair{1, n_upper(params)} : parse_range(a.range);
    const std::vector<FunctionalPoint> points = sweep(params, lo, hi);
    const auto best = std::min_element(points.begin(), points.end(),
                                       [](const auto& x, const auto& y) { return x.j < y.j; });

    std::vector<std::string> notes;
    if (a.paper_example) {
        std::string note = "published N_o = " + std::to_string(example::kOptimalN) +
                           "; argmin over the sweep is N = " + std::to_string(best->n) +
                           " with J = " + num(best->j);
        if (example::kOptimalN >= lo && example::kOptimalN <= hi) {
            const double j5 = points[static_cast<std::size_t>(example::kOptimalN - lo)].j;
            note += "; J(" + std::to_string(example::kOptimalN) + ") = " + num(j5) +
                    " (delta J = " + num(j5 - best->j) + ")";
        }
        notes.push_back(note);
    }

    if (a.output.format == "csv")
        return sweep_csv(points);

    const ContinuousOptimum cont = refine_continuous(params);
    if (a.output.format == "human") {
        std::ostringstream s;
        s << "F_p = " << num(params.f_p_hz) << " Hz, F_s = " << num(params.f_adc_hz)
          << " Hz, N_m = " << num(n_max(params)) << "\n";
        s << "   N            r           J2            J\n";
        for (const auto& p : points) {
            char line[128];
            std::snprintf(line, sizeof line, "%4d %12.6f %12.6f %12.6f%s\n", p.n, p.r, p.j2, p.j,
                          p.n == best->n ? "  <- min" : "");
            s << line;
        }
        s << "continuous optimum: N* = " << num(cont.n) << ", J = " << num(cont.j) << "\n";
        for (const auto& n : notes)
            s << "note: " << n << "\n";
        return s.str();
    }

    Json arr = Json::array();
    for (const auto& p : points)
        arr.push_back(to_json(p));
    return dump(Json{{"inputs",
                      {{"order_k", params.order_k},
                       {"f_p_hz", params.f_p_hz},
                       {"f_adc_hz", params.f_adc_hz},
                       {"n_lo", lo},
                       {"n_hi", hi}}},
                     {"sweep", std::move(arr)},
                     {"argmin", best->n},
                     {"continuous_optimum", {{"n", cont.n}, {"j", cont.j}}},
                     {"notes", notes}});
}

// -------------------------------------------------------------- filter

struct FilterArgs {
    int links = 2;
    double tau = 0.0;
    std::string f_half;
    double level = 0.1;
    std::string domain = "power";
    std::string f_min;
    std::string f_max;
    int points = 41;
    Output output;
};

void register_filter(CLI::App& app, FilterArgs& a) {
    auto* cmd = app.add_subcommand("filter", "Characterize an RC cascade and tabulate its response");
    cmd->add_option("--links", a.links, "Number of RC links")->check(CLI::PositiveNumber);
    auto* tau = cmd->add_option("--tau", a.tau, "RC time constant in seconds");
    cmd->add_option("--fhalf", a.f_half, "Half-power frequency")->excludes(tau);
    cmd->add_option("--level", a.level, "Suppression level in (0,1)");
    cmd->add_option("--level-domain", a.domain, "power or amplitude");
    cmd->add_option("--fmin", a.f_min, "Lowest table frequency (default f_half/100)");
    cmd->add_option("--fmax", a.f_max, "Highest table frequency (default f_half*100)");
    cmd->add_option("--points", a.points, "Number of log-spaced table rows")
        ->check(CLI::Range(2, 100000));
    add_output_options(*cmd, a.output);
}

std::string run_filter(const CLI::App& cmd, const FilterArgs& a) {
    double tau = a.tau;
    if (cmd.count("--tau") == 0) {
        if (a.f_half.empty())
            throw UsageError("filter: one of --tau or --fhalf is required");
        tau = solve_time_constant(a.links, parse_frequency(a.f_half));
    }
    const RcCascade filter(a.links, tau);
    const LevelDomain domain = parse_level_domain(a.domain);
    const double f_half = filter.half_power_hz();
    const double f_s = solve_cutoff(filter, a.level, domain);

    const double lo = a.f_min.empty() ? f_half / 100.0 : parse_frequency(a.f_min);
    const double hi = a.f_max.empty() ? f_half * 100.0 : parse_frequency(a.f_max);
    if (!(lo > 0.0 && hi > lo))
        throw UsageError("filter: need 0 < fmin < fmax");

    struct Row {
        double f, power, amplitude;
    };
    std::vector<Row> rows;
    const double ratio = std::log(hi / lo) / (a.points - 1);
    for (int i = 0; i < a.points; ++i) {
        const double f = (i + 1 == a.points) ? hi : lo * std::exp(ratio * i);
        const double p = power_response(filter, f);
        rows.push_back({f, p, std::sqrt(p)});
    }

    if (a.output.format == "csv") {
        std::string s = "f_hz,power,amplitude\n";
        for (const auto& r : rows)
            s += num(r.f) + ',' + num(r.power) + ',' + num(r.amplitude) + '\n';
        return s;
    }
    if (a.output.format == "human") {
        std::ostringstream s;
        s << a.links << "-link RC, T = " << num(tau) << " s\n"
          << "  half-power frequency: " << num(f_half) << " Hz\n"
          << "  cutoff at level " << num(a.level) << " (" << to_string(domain)
          << "): " << num(f_s) << " Hz\n";
        return s.str();
    }
    Json table = Json::array();
    for (const auto& r : rows)
        table.push_back({{"f_hz", r.f}, {"power", r.power}, {"amplitude", r.amplitude}});
    return dump(Json{{"inputs",
                      {{"links", a.links},
                       {"time_constant_s", tau},
                       {"level", a.level},
                       {"level_domain", std::string(to_string(domain))}}},
                     {"half_power_hz", f_half},
                     {"cutoff_hz", f_s},
                     {"table", std::move(table)}});
}

// ------------------------------------------------------------ simulate

struct SimulateArgs {
    int order = 1;
    int n = 5;
    std::string f_p;
    std::string probe;
    double phase = 0.0;
    double alpha = 0.5;
    bool paper_alpha = false;
    int periods = 4;
    int grid = 256;
    std::string residuals_path;
    Output output;
};

void register_simulate(CLI::App& app, SimulateArgs& a) {
    auto* cmd = app.add_subcommand(
        "simulate", "Measure finite-difference derivative error against the closed-form model");
    cmd->add_option("--order", a.order, "Derivative order k >= 1");
    cmd->add_option("--n", a.n, "Oversampling multiplier N");
    cmd->add_option("--fp", a.f_p, "Base rate F_p")->required();
    cmd->add_option("--probe", a.probe, "Probe harmonic frequency (default F_p)");
    cmd->add_option("--phase", a.phase, "Probe phase in radians");
    auto* alpha = cmd->add_option("--alpha", a.alpha, "Comparison offset alpha in [0,1]");
    cmd->add_flag("--paper-alpha", a.paper_alpha, "Use alpha = 1/k")->excludes(alpha);
    cmd->add_option("--periods", a.periods, "Averaging window in probe periods");
    cmd->add_option("--grid", a.grid, "Quadrature points per probe period (>= 64)");
    cmd->add_option("--residuals", a.residuals_path, "Also write t,v_est,exact,residual CSV");
    add_output_options(*cmd, a.output);
}

std::string run_simulate(const SimulateArgs& a) {
    SimConfig c = default_config(a.order, a.n, parse_frequency(a.f_p));
    if (!a.probe.empty())
        c.probe_freq_hz = parse_frequency(a.probe);
    c.probe_phase_rad = a.phase;
    c.alpha = a.paper_alpha ? 1.0 / a.order : a.alpha;
    c.periods = a.periods;
    c.grid = a.grid;
    validate(c);

    if (!a.residuals_path.empty()) {
        std::ofstream f(a.residuals_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open residual file '" + a.residuals_path + "'");
        f << residual_csv(residual_trace(c));
    }
    if (a.output.format == "csv")
        return residual_csv(residual_trace(c));

    const SimReport report = empirical_error(c);
    if (a.output.format == "human") {
        std::ostringstream s;
        s << "k = " << c.order_k << ", N = " << c.n << ", alpha = " << num(c.alpha)
          << ", phase step x = " << num(report.x) << " rad\n"
          << "  empirical relative error: " << num(report.r_empirical) << "\n"
          << "  model 1 - cos(pi/N):      " << num(report.r_model) << "\n"
          << "  gap:                      " << num(report.gap) << "\n";
        return s.str();
    }
    return dump(Json{{"inputs",
                      {{"order_k", c.order_k},
                       {"n", c.n},
                       {"f_p_hz", c.f_p_hz},
                       {"probe_freq_hz", c.probe_freq_hz},
                       {"probe_phase_rad", c.probe_phase_rad},
                       {"alpha", c.alpha},
                       {"periods", c.periods},
                       {"grid", c.grid}}},
                     {"report", to_json(report)}});
}

// ------------------------------------------------------------- combine

struct CombineArgs {
    std::vector<std::string> files;
    Output output;
};

void register_combine(CLI::App& app, CombineArgs& a) {
    auto* cmd = app.add_subcommand(
        "combine", "Merge plans for several orders: largest F_o, smallest K_d");
    cmd->add_option("plans", a.files, "Plan JSON files written by `plan`")->required();
    add_output_options(*cmd, a.output);
}

std::string run_combine(const CombineArgs& a) {
    std::vector<SamplingPlan> plans;
    for (const auto& path : a.files) {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw UsageError("cannot read plan file '" + path + "'");
        Json doc;
        try {
            doc = Json::parse(f);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError("plan file '" + path + "' is not valid JSON: " + e.what());
        }
        plans.push_back(plan_from_json(doc));
    }
    const CombinedPlan c = combine_plans(plans);

    if (a.output.format == "csv")
        return "f_o_hz,k_d\n" + num(c.f_o_hz) + "," + std::to_string(c.k_d) + "\n";
    if (a.output.format == "human")
        return "combined: F_o = " + num(c.f_o_hz) + " Hz, K_d = " + std::to_string(c.k_d) + "\n";
    return dump(Json{{"inputs", {{"files", a.files}}}, {"combined", to_json(c)}});
}

} // namespace

double parse_frequency(std::string_view text) {
    const std::string s = lower(text);
    double scale = 1.0;
    std::string_view digits = s;
    for (const auto& [suffix, factor] :
         {std::pair{"mhz", 1e6}, std::pair{"khz", 1e3}, std::pair{"hz", 1.0}}) {
        const std::string_view sv(suffix);
        if (digits.size() > sv.size() && digits.ends_with(sv)) {
            digits.remove_suffix(sv.size());
            scale = factor;
            break;
        }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw InvalidArgument("cannot parse frequency '" + std::string(text) +
                              "' (expected a number with optional hz|khz|mhz suffix)");
    value *= scale;
    if (!std::isfinite(value) || value < 0.0)
        throw InvalidArgument("frequency '" + std::string(text) + "' must be finite and non-negative");
    return value;
}

std::pair<int, int> parse_range(std::string_view text) {
    const auto sep = text.find("..");
    const auto to_int = [&](std::string_view part) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw InvalidArgument("cannot parse range '" + std::string(text) + "' (expected LO..HI)");
        return v;
    };
    if (sep == std::string_view::npos)
        throw InvalidArgument("cannot parse range '" + std::string(text) + "' (expected LO..HI)");
    return {to_int(text.substr(0, sep)), to_int(text.substr(sep + 2))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampling-frequency planner for finite-difference derivative estimation",
                 "quantplan"};
    app.require_subcommand(1);

    PlanArgs plan_args;
    SweepArgs sweep_args;
    FilterArgs filter_args;
    SimulateArgs sim_args;
    CombineArgs combine_args;
    register_plan(app, plan_args);
    register_sweep(app, sweep_args);
    register_filter(app, filter_args);
    register_simulate(app, sim_args);
    register_combine(app, combine_args);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        std::string doc;
        const Output* output = nullptr;
        if (name == "plan") {
            doc = run_plan(*cmd, plan_args);
            output = &plan_args.output;
        } else if (name == "sweep") {
            doc = run_sweep(*cmd, sweep_args);
            output = &sweep_args.output;
        } else if (name == "filter") {
            doc = run_filter(*cmd, filter_args);
            output = &filter_args.output;
        } else if (name == "simulate") {
            doc = run_simulate(sim_args);
            output = &sim_args.output;
        } else {
            doc = run_combine(combine_args);
            output = &combine_args.output;
        }
        emit(*output, doc, out);
        return 0;
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace quantplan::cli
