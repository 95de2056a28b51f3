#include "itea/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "itea/algorithms.hpp"
#include "itea/harness.hpp"
#include "itea/problems.hpp"

namespace itea {

namespace {

constexpr double unset = std::numeric_limits<double>::quiet_NaN();

struct CliConfig {
    std::string algorithm = "eit";
    std::string function;
    std::uint64_t n = 0;
    long lambda = 0; // 0 means n/10
    long mu = 1;
    double p0 = unset;
    double alpha = 0.2;
    double p_min = unset;
    double p_max = unset;
    std::uint64_t runs = 100;
    std::uint64_t budget = 0; // 0 means the problem default
    std::uint64_t seed = 1;
    std::uint64_t trace_every = 1;
    long long initial_weight = -1; // -1 means n/2
    std::uint64_t iterations = 10000;
    int jobs = 1;
    std::string out_path;
    std::string format;
};

void add_common_options(CLI::App* cmd, CliConfig& cfg, bool is_static,
                        const char* default_format) {
    cmd->add_option("--algorithm", cfg.algorithm,
                    "Algorithm variant: it, it1, eit, neit, opl, two_rate")
        ->capture_default_str();
    cmd->add_option("--function", cfg.function, "Problem: onemax, leadingones")
        ->required();
    cmd->add_option("--n", cfg.n, "Problem dimension")->required();
    cmd->add_option("--lambda", cfg.lambda, "Offspring per iteration")
        ->default_str("n/10");
    cmd->add_option("--mu", cfg.mu, "Selection cutoff")->capture_default_str();
    cmd->add_option("--p0", cfg.p0, "Initial mutation rate")->default_str("1/n");
    cmd->add_option("--alpha", cfg.alpha, "Rate learning speed")
        ->capture_default_str();
    cmd->add_option("--p-min", cfg.p_min, "Lower rate bound")
        ->default_str(is_static ? "0" : "p0");
    cmd->add_option("--p-max", cfg.p_max, "Upper rate bound")
        ->default_str(is_static ? "1" : "0.5");
    cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    cmd->add_option("--out", cfg.out_path,
                    "Output file (written atomically); stdout when absent");
    cmd->add_option("--format", cfg.format, "Output format: csv, json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str(default_format);
}

struct Resolved {
    Hyperparameters hp;
    Variant variant = Variant::eit;
    Problem problem;
    std::uint64_t budget = 0;
    std::size_t initial_weight = 0;
};

// Fills defaults and validates; returns nonzero exit code after printing a
// diagnostic that names the offending flag.
int resolve(CliConfig& cfg, bool is_static, std::ostream& err, Resolved& out) {
    const auto variant = parse_variant(cfg.algorithm);
    if (!variant) {
        err << "error: unknown value '" << cfg.algorithm
            << "' for --algorithm (expected it, it1, eit, neit, opl, two_rate)\n";
        return 2;
    }
    bool known_function = false;
    for (const std::string& name : problem_names())
        if (name == cfg.function) known_function = true;
    if (!known_function) {
        err << "error: unknown value '" << cfg.function
            << "' for --function (expected onemax, leadingones)\n";
        return 2;
    }
    if (cfg.n == 0) {
        err << "error: --n must be positive\n";
        return 2;
    }

    Hyperparameters hp;
    hp.variant = *variant;
    hp.lambda = cfg.lambda != 0 ? cfg.lambda
                                : std::max<long>(1, static_cast<long>(cfg.n / 10));
    hp.mu = cfg.mu;
    hp.p0 = std::isnan(cfg.p0) ? 1.0 / static_cast<double>(cfg.n) : cfg.p0;
    hp.alpha = cfg.alpha;
    hp.p_min = std::isnan(cfg.p_min) ? (is_static ? 0.0 : hp.p0) : cfg.p_min;
    hp.p_max = std::isnan(cfg.p_max) ? (is_static ? 1.0 : 0.5) : cfg.p_max;

    if (hp.lambda < 1) {
        err << "error: --lambda must be at least 1\n";
        return 2;
    }
    if (hp.mu < 1) {
        err << "error: --mu must be at least 1\n";
        return 2;
    }
    if (hp.mu > hp.lambda) {
        err << "error: --mu must not exceed --lambda\n";
        return 2;
    }
    if (!(hp.p_min <= hp.p0 && hp.p0 <= hp.p_max)) {
        err << "error: --p0 must lie between --p-min and --p-max\n";
        return 2;
    }
    if (hp.variant == Variant::two_rate && hp.lambda % 2 != 0) {
        err << "error: --lambda must be even for --algorithm two_rate\n";
        return 2;
    }

    out.hp = hp;
    out.variant = *variant;
    try {
        out.problem = make_problem(cfg.function, cfg.n);
        out.hp.validate(out.problem.n);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    out.budget = cfg.budget != 0 ? cfg.budget : default_budget(out.problem);

    if (is_static) {
        if (cfg.initial_weight < 0) {
            out.initial_weight = cfg.n / 2;
        } else if (static_cast<std::uint64_t>(cfg.initial_weight) > cfg.n) {
            err << "error: --initial-weight must not exceed --n\n";
            return 2;
        } else {
            out.initial_weight = static_cast<std::size_t>(cfg.initial_weight);
        }
    }
    return 0;
}

int emit(const std::string& payload, const std::string& out_path,
         std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << payload;
        return 0;
    }
    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << payload;
        if (!f) {
            err << "error: cannot write " << tmp << '\n';
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return 1;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out_path, ec);
    if (ec) {
        err << "error: cannot rename " << tmp << " to " << out_path << '\n';
        std::filesystem::remove(tmp, ec);
        return 1;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Information-theoretic evolutionary algorithms on bit vectors"};
    app.name("itea");
    app.require_subcommand(1);

    CliConfig cfg;

    CLI::App* cmd_run = app.add_subcommand("run", "Single seeded run with a trace");
    add_common_options(cmd_run, cfg, false, "csv");
    cmd_run->add_option("--budget", cfg.budget, "Evaluation budget")
        ->default_str("per-problem default");
    cmd_run->add_option("--trace-every", cfg.trace_every,
                        "Trace row every k iterations (0 = no trace)")
        ->capture_default_str();

    CLI::App* cmd_bench = app.add_subcommand("bench", "Fixed-target campaign");
    add_common_options(cmd_bench, cfg, false, "json");
    cmd_bench->add_option("--budget", cfg.budget, "Evaluation budget per run")
        ->default_str("per-problem default");
    cmd_bench->add_option("--runs", cfg.runs, "Independent runs")
        ->capture_default_str();
    cmd_bench->add_option("--jobs", cfg.jobs, "Concurrent runs")
        ->capture_default_str();

    CLI::App* cmd_static = app.add_subcommand(
        "static", "Rate adaptation with a frozen center");
    add_common_options(cmd_static, cfg, true, "csv");
    cmd_static->add_option("--initial-weight", cfg.initial_weight,
                           "Hamming weight of the frozen center")
        ->default_str("n/2");
    cmd_static->add_option("--iterations", cfg.iterations, "Iterations to run")
        ->capture_default_str();
    cmd_static->add_option("--trace-every", cfg.trace_every,
                           "Trace row every k iterations")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("itea");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const bool is_run = cmd_run->parsed();
    const bool is_bench = cmd_bench->parsed();
    const bool is_static = cmd_static->parsed();

    // Per-subcommand format defaults; run/static trace as CSV, bench
    // summarizes as JSON.
    if (cfg.format.empty())
        cfg.format = is_bench ? "json" : "csv";

    Resolved r;
    if (int rc = resolve(cfg, is_static, err, r); rc != 0)
        return rc;

    std::ostringstream payload;
    try {
        if (is_run) {
            TraceOptions topt;
            topt.every = cfg.trace_every;
            const RunRecord rec = run(r.hp, r.problem, r.budget, cfg.seed, topt);
            if (cfg.format == "csv")
                write_trace_csv(payload, rec.trace);
            else
                write_run_json(payload, rec);
        } else if (is_bench) {
            const CampaignSummary summary =
                campaign(r.hp, r.problem, cfg.runs, r.budget, cfg.seed, cfg.jobs);
            CampaignConfig cc{r.hp, cfg.function, r.problem.n, cfg.runs, r.budget,
                              cfg.seed};
            if (cfg.format == "json")
                write_summary_json(payload, cc, summary);
            else
                write_runs_csv(payload, summary);
        } else if (is_static) {
            const StaticSearchResult result =
                static_search(r.hp, r.problem, r.initial_weight, cfg.iterations,
                              cfg.seed, std::max<std::uint64_t>(1, cfg.trace_every));
            CampaignConfig cc{r.hp, cfg.function, r.problem.n, 0, 0, cfg.seed};
            if (cfg.format == "csv")
                write_trace_csv(payload, result.trace);
            else
                write_static_json(payload, cc, r.initial_weight, cfg.iterations,
                                  result);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return emit(payload.str(), cfg.out_path, out, err);
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace itea
