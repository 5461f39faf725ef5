// svtail: evaluate non-asymptotic tail bounds for the largest singular value
// of sub-Gaussian random matrices and verify them against seeded Monte Carlo
// tail estimates.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svtail/bounds.hpp"
#include "svtail/errors.hpp"
#include "svtail/harness.hpp"
#include "svtail/io.hpp"
#include "svtail/models.hpp"
#include "svtail/ensembles.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfigError = 2;

struct CommonConfig {
    int m = 0;
    int n = 0;
    int d = 0;
    std::string model_key = "gaussian";
    std::string t_grid_spec;
    std::optional<double> t_single;
    long trials = 0;  // 0 = use the documented default for the command
    std::uint64_t seed = 0;
    double confidence = 0.99;
    std::string bounds_csv;
    int threads = 1;
    std::string out_path;
    std::string format = "csv";
    std::string report_path;
    bool crossover = false;
    bool show_rho = false;
};

std::vector<svtail::BoundTag> parse_tags(const std::string& csv) {
    std::vector<svtail::BoundTag> tags;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto tag = svtail::bound_tag_from_string(item);
        if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
    }
    if (tags.empty()) throw svtail::UnknownTagError("--bounds: no tags given");
    return tags;
}

void echo_config(const std::string& command, const CommonConfig& cfg,
                 const std::vector<double>& grid, long effective_trials) {
    std::ostream& os = std::cerr;
    os << "# svtail " << command << '\n';
    if (cfg.m > 0) os << "# m = " << cfg.m << '\n';
    if (cfg.n > 0) os << "# n = " << cfg.n << '\n';
    if (cfg.d > 0) os << "# d = " << cfg.d << '\n';
    if (command != "toeplitz") os << "# model = " << cfg.model_key << '\n';
    if (!grid.empty()) {
        os << "# t_grid =";
        for (double t : grid) os << ' ' << svtail::format_g17(t);
        os << '\n';
    }
    if (effective_trials > 0) os << "# trials = " << effective_trials << '\n';
    os << "# seed = " << cfg.seed << '\n';
    os << "# confidence = " << svtail::format_g17(cfg.confidence) << '\n';
    os << "# threads = " << cfg.threads << '\n';
    if (!cfg.bounds_csv.empty()) os << "# bounds = " << cfg.bounds_csv << '\n';
    os << "# format = " << cfg.format << '\n';
    os << "# out = " << (cfg.out_path.empty() ? "(stdout)" : cfg.out_path) << '\n';
    if (!cfg.report_path.empty()) os << "# report = " << cfg.report_path << '\n';
}

class FileOrStdout {
public:
    explicit FileOrStdout(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw svtail::InvalidParamError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_curve(const CommonConfig& cfg, const svtail::TailCurve& curve) {
    FileOrStdout out(cfg.out_path);
    if (cfg.format == "json") {
        svtail::write_tail_curve_json(out.stream(), curve);
    } else {
        svtail::write_tail_curve_csv(out.stream(), curve);
    }
}

void write_report_file(const CommonConfig& cfg, const svtail::VerificationReport& report) {
    if (cfg.report_path.empty()) return;
    std::ofstream file(cfg.report_path, std::ios::binary);
    if (!file) {
        throw svtail::InvalidParamError("cannot open report file '" + cfg.report_path + "'");
    }
    svtail::write_report_json(file, report);
}

std::vector<double> grid_or_default(const CommonConfig& cfg, const char* fallback) {
    return svtail::parse_t_grid(cfg.t_grid_spec.empty() ? fallback : cfg.t_grid_spec);
}

int run_bound(const CommonConfig& cfg) {
    const auto model = svtail::model_from_key(cfg.model_key);
    const auto tags =
        parse_tags(cfg.bounds_csv.empty() ? "net,entrywise,refined" : cfg.bounds_csv);

    std::vector<double> grid;
    if (cfg.t_single.has_value()) {
        grid.push_back(*cfg.t_single);
    } else if (!cfg.t_grid_spec.empty()) {
        grid = svtail::parse_t_grid(cfg.t_grid_spec);
    } else if (!cfg.crossover) {
        throw svtail::InvalidParamError("bound: need --t, --t-grid, or --crossover");
    }
    echo_config("bound", cfg, grid, 0);

    FileOrStdout out(cfg.out_path);
    std::ostream& os = out.stream();

    if (const auto tstar =
            svtail::refined_crossover(cfg.m, cfg.n, model.mgf_b(), model.tail_c())) {
        os << "# crossover_t_star = " << svtail::format_g17(*tstar) << '\n';
    } else {
        os << "# crossover_t_star = none\n";
    }
    if (grid.empty()) return kExitOk;

    os << "t";
    for (const auto tag : tags)
        os << ',' << svtail::to_string(tag) << "_log10," << svtail::to_string(tag) << "_prob";
    os << '\n';
    for (const double t : grid) {
        os << svtail::format_g17(t);
        for (const auto tag : tags) {
            svtail::LogProbBound bound;
            switch (tag) {
                case svtail::BoundTag::Net31:
                    bound = svtail::net_bound(cfg.m, cfg.n, model.tail_c(), t);
                    break;
                case svtail::BoundTag::Entrywise35:
                    bound = svtail::entrywise_bound(cfg.m, cfg.n, model.mgf_b(), t);
                    break;
                case svtail::BoundTag::Refined36:
                    bound = svtail::refined_bound(cfg.m, cfg.n, model.mgf_b(), model.tail_c(), t);
                    break;
                case svtail::BoundTag::Toeplitz43:
                    if (cfg.d < 1) {
                        throw svtail::InvalidParamError("bound: --d is required for the toeplitz tag");
                    }
                    bound = svtail::toeplitz_bound(cfg.d, t);
                    break;
                default:
                    throw svtail::UnknownTagError(
                        "bound: tag '" + std::string(svtail::to_string(tag)) +
                        "' needs explicit series terms and is not available here");
            }
            os << ',' << svtail::format_g17(bound.log10_value()) << ','
               << svtail::format_g17(bound.probability());
        }
        os << '\n';
    }
    return kExitOk;
}

long effective_trials(const CommonConfig& cfg, bool toeplitz) {
    if (cfg.trials > 0) return cfg.trials;
    if (toeplitz && cfg.d >= 64) return 10000;
    return 100000;
}

int run_simulate(const CommonConfig& cfg) {
    const auto model = svtail::model_from_key(cfg.model_key);
    const auto tags =
        parse_tags(cfg.bounds_csv.empty() ? "net,entrywise,refined" : cfg.bounds_csv);
    const auto grid = grid_or_default(cfg, "0:12:0.5");
    const long trials = effective_trials(cfg, false);
    echo_config("simulate", cfg, grid, trials);

    svtail::HarnessOptions options;
    options.threads = cfg.threads;
    auto curve = svtail::estimate_tail(svtail::EnsembleSpec::iid(cfg.m, cfg.n, model), grid,
                                       trials, cfg.seed, cfg.confidence, options);
    svtail::attach_bounds(curve, tags);
    write_curve(cfg, curve);
    return kExitOk;
}

int run_verify(const CommonConfig& cfg) {
    const auto model = svtail::model_from_key(cfg.model_key);
    const auto tags =
        parse_tags(cfg.bounds_csv.empty() ? "net,entrywise,refined" : cfg.bounds_csv);
    const auto grid = grid_or_default(cfg, "0:12:0.5");
    const long trials = effective_trials(cfg, false);
    echo_config("verify", cfg, grid, trials);

    svtail::HarnessOptions options;
    options.threads = cfg.threads;
    auto curve = svtail::estimate_tail(svtail::EnsembleSpec::iid(cfg.m, cfg.n, model), grid,
                                       trials, cfg.seed, cfg.confidence, options);
    svtail::attach_bounds(curve, tags);
    const auto report = svtail::verify_domination(curve, tags);

    if (!cfg.out_path.empty()) write_curve(cfg, curve);
    write_report_file(cfg, report);
    svtail::write_report_text(std::cout, report);
    return report.all_pass ? kExitOk : kExitVerificationFailed;
}

int run_toeplitz(const CommonConfig& cfg) {
    const auto grid = grid_or_default(cfg, "0:20:1");
    const long trials = effective_trials(cfg, true);
    echo_config("toeplitz", cfg, grid, trials);

    if (cfg.show_rho) {
        const auto series = svtail::toeplitz_series_terms(cfg.d);
        const auto rho = svtail::variance_param_rect(series.terms);
        std::cout << "rho = " << svtail::format_g17(rho.rho) << '\n';
    }

    svtail::HarnessOptions options;
    options.threads = cfg.threads;
    const auto result =
        svtail::toeplitz_experiment(cfg.d, grid, trials, cfg.seed, cfg.confidence, options);

    write_curve(cfg, result.curve);
    write_report_file(cfg, result.report);
    svtail::write_report_text(std::cerr, result.report);
    return result.report.all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
    CLI::App app{"tail bounds for the largest singular value of sub-Gaussian random matrices"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonConfig cfg;

    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--m", cfg.m, "matrix rows")->check(CLI::Range(1, 1000000))->required();
        cmd->add_option("--n", cfg.n, "matrix cols")->check(CLI::Range(1, 1000000))->required();
        cmd->add_option("--model", cfg.model_key,
                        "entry distribution: gaussian, rademacher, uniform:<a>")
            ->capture_default_str();
    };
    auto add_sim = [&](CLI::App* cmd) {
        cmd->add_option("--t-grid", cfg.t_grid_spec, "t grid: start:stop:step or comma list");
        cmd->add_option("--trials", cfg.trials, "Monte Carlo trials")
            ->check(CLI::Range(static_cast<long>(1), static_cast<long>(1000000000)));
        cmd->add_option("--seed", cfg.seed, "master seed")->envname("SVTAIL_SEED");
        cmd->add_option("--confidence", cfg.confidence, "binomial CI confidence level")
            ->check(CLI::Range(1e-6, 0.999999))
            ->capture_default_str();
        cmd->add_option("--threads", cfg.threads, "worker-count hint (never changes results)")
            ->check(CLI::Range(1, 4096))
            ->capture_default_str();
        cmd->add_option("--out", cfg.out_path, "output path for the curve (default stdout)");
        cmd->add_option("--format", cfg.format, "curve format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    CLI::App* bound = app.add_subcommand("bound", "evaluate bounds on a t grid");
    add_shape(bound);
    bound->add_option("--d", cfg.d, "Toeplitz dimension (for the toeplitz tag)")
        ->check(CLI::Range(1, 100000));
    bound->add_option("--t", cfg.t_single, "single t value");
    bound->add_option("--t-grid", cfg.t_grid_spec, "t grid: start:stop:step or comma list");
    bound->add_option("--bounds", cfg.bounds_csv, "comma list of bound tags");
    bound->add_flag("--crossover", cfg.crossover, "print the refined-bound crossover t*");
    bound->add_option("--out", cfg.out_path, "output path (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "estimate the empirical tail curve");
    add_shape(simulate);
    add_sim(simulate);
    simulate->add_option("--bounds", cfg.bounds_csv, "comma list of bound tags to attach");

    CLI::App* verify =
        app.add_subcommand("verify", "simulate and check bound >= ci_low at every grid t");
    add_shape(verify);
    add_sim(verify);
    verify->add_option("--bounds", cfg.bounds_csv, "comma list of bound tags to verify");
    verify->add_option("--report", cfg.report_path, "write the verification report as JSON");

    CLI::App* toeplitz = app.add_subcommand("toeplitz", "Gaussian Toeplitz tail experiment");
    toeplitz->add_option("--d", cfg.d, "Toeplitz dimension")->check(CLI::Range(1, 100000))->required();
    add_sim(toeplitz);
    toeplitz->add_flag("--show-rho", cfg.show_rho,
                       "print the series variance parameter computed from the shift powers");
    toeplitz->add_option("--report", cfg.report_path, "write the verification report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    if (bound->parsed()) return run_bound(cfg);
    if (simulate->parsed()) return run_simulate(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (toeplitz->parsed()) return run_toeplitz(cfg);
    return kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "svtail: " << e.what() << '\n';
        return kExitConfigError;
    }
}
