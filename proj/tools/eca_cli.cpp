// Command-line front end: synthetic-data experiments and real-data fits for
// sparse principal orientation estimation on heavy-tailed elliptical data.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eca/errors.hpp"
#include "eca/experiment.hpp"
#include "eca/fantope.hpp"
#include "eca/scatter.hpp"

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
    return json::parse(f);
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed) ok = ok || (it.key() == key);
        if (!ok) {
            throw std::invalid_argument(std::string(what) + ": unknown key '" + it.key() + "'");
        }
    }
}

eca::CovarianceSpec cov_from_json(const json& j) {
    check_keys(j, {"d", "baseline", "components"}, "custom_cov");
    eca::CovarianceSpec spec;
    spec.d = j.at("d").get<int>();
    if (j.contains("baseline")) spec.baseline = j.at("baseline").get<double>();
    for (const auto& c : j.at("components")) {
        check_keys(c, {"omega", "support"}, "custom_cov component");
        spec.components.push_back({c.at("omega").get<double>(), c.at("support").get<int>()});
    }
    eca::validate(spec);
    return spec;
}

eca::ExperimentConfig experiment_config_from_json(const std::string& path) {
    const json j = load_json(path);
    check_keys(j,
               {"scheme", "custom_cov", "distribution", "method", "n", "d", "m", "k", "k_grid",
                "replications", "base_seed", "output_dir", "threads", "lambda_override"},
               "config");
    eca::ExperimentConfig cfg;
    if (j.contains("scheme")) cfg.scheme = j.at("scheme").get<int>();
    if (j.contains("custom_cov")) cfg.custom_cov = cov_from_json(j.at("custom_cov"));
    if (j.contains("distribution")) {
        cfg.distribution = eca::parse_distribution(j.at("distribution").get<std::string>());
    }
    if (j.contains("method")) cfg.method = eca::parse_method(j.at("method").get<std::string>());
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("d")) cfg.d = j.at("d").get<int>();
    if (j.contains("m")) cfg.m = j.at("m").get<int>();
    if (j.contains("k")) cfg.k = j.at("k").get<int>();
    if (j.contains("k_grid")) cfg.k_grid = j.at("k_grid").get<std::vector<int>>();
    if (j.contains("replications")) cfg.replications = j.at("replications").get<int>();
    if (j.contains("base_seed")) cfg.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("lambda_override")) {
        cfg.lambda_override = j.at("lambda_override").get<double>();
    }
    return cfg;
}

eca::SweepConfig sweep_config_from_json(const std::string& path) {
    const json j = load_json(path);
    check_keys(j,
               {"d_list", "n_list", "distribution", "method", "k", "replications", "base_seed",
                "threads", "lambda_override"},
               "config");
    eca::SweepConfig cfg;
    if (j.contains("d_list")) cfg.d_list = j.at("d_list").get<std::vector<int>>();
    if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<int>>();
    if (j.contains("distribution")) {
        cfg.distribution = eca::parse_distribution(j.at("distribution").get<std::string>());
    }
    if (j.contains("method")) cfg.method = eca::parse_method(j.at("method").get<std::string>());
    if (j.contains("k")) cfg.k = j.at("k").get<int>();
    if (j.contains("replications")) cfg.replications = j.at("replications").get<int>();
    if (j.contains("base_seed")) cfg.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("lambda_override")) {
        cfg.lambda_override = j.at("lambda_override").get<double>();
    }
    return cfg;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        const auto dt = std::chrono::steady_clock::now() - start;
        std::fprintf(stderr, "elapsed: %.1f s\n",
                     std::chrono::duration<double>(dt).count());
    }
};

// Options shared by the experiment-driven subcommands (run, roc, simulate).
struct ExperimentArgs {
    std::string config_path;
    int scheme = 1;
    std::string distribution = "normal";
    std::string method = "eca";
    int n = 0;
    int d = 0;
    int m = 1;
    int k = 0;
    std::vector<int> k_grid;
    int replications = 200;
    std::uint64_t base_seed = 1;
    std::string output_dir = ".";
    int threads = 1;
    double lambda = 0.0;

    CLI::Option* o_scheme = nullptr;
    CLI::Option* o_distribution = nullptr;
    CLI::Option* o_method = nullptr;
    CLI::Option* o_n = nullptr;
    CLI::Option* o_d = nullptr;
    CLI::Option* o_m = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_k_grid = nullptr;
    CLI::Option* o_replications = nullptr;
    CLI::Option* o_base_seed = nullptr;
    CLI::Option* o_output_dir = nullptr;
    CLI::Option* o_threads = nullptr;
    CLI::Option* o_lambda = nullptr;

    void attach(CLI::App* sub, bool with_grid, bool with_outputs) {
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        o_scheme = sub->add_option("--scheme", scheme, "synthetic design 1-6");
        o_distribution =
            sub->add_option("--distribution,--dist", distribution, "normal|t3|ec1|ec2|cauchy");
        o_method = sub->add_option("--method", method, "input statistic: eca|tca|tp");
        o_n = sub->add_option("-n,--n", n, "sample size (0 = scheme default)");
        o_d = sub->add_option("-d,--d", d, "dimension (0 = scheme default)");
        o_base_seed = sub->add_option("--seed", base_seed, "base seed");
        if (with_grid) {
            o_m = sub->add_option("-m,--components", m, "number of components");
            o_k = sub->add_option("-k,--cardinality", k, "fixed cardinality (0 = grid)");
            o_k_grid = sub->add_option("--k-grid", k_grid, "cardinality grid")
                           ->delimiter(',');
            o_replications = sub->add_option("--replications,--reps", replications,
                                             "Monte-Carlo replications");
            o_threads = sub->add_option("--threads", threads,
                                        "worker threads (never changes results)");
            o_lambda = sub->add_option("--lambda", lambda,
                                       "penalty override (default max|input| sqrt(log d / n))");
        }
        if (with_outputs) {
            o_output_dir = sub->add_option("--output-dir,--out", output_dir, "output directory");
        }
    }

    eca::ExperimentConfig to_config() const {
        eca::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = experiment_config_from_json(config_path);
        if (o_scheme && o_scheme->count()) cfg.scheme = scheme;
        if (o_distribution && o_distribution->count()) {
            cfg.distribution = eca::parse_distribution(distribution);
        }
        if (o_method && o_method->count()) cfg.method = eca::parse_method(method);
        if (o_n && o_n->count()) cfg.n = n;
        if (o_d && o_d->count()) cfg.d = d;
        if (o_m && o_m->count()) cfg.m = m;
        if (o_k && o_k->count()) cfg.k = k;
        if (o_k_grid && o_k_grid->count()) cfg.k_grid = k_grid;
        if (o_replications && o_replications->count()) cfg.replications = replications;
        if (o_base_seed && o_base_seed->count()) cfg.base_seed = base_seed;
        if (o_output_dir && o_output_dir->count()) cfg.output_dir = output_dir;
        if (o_threads && o_threads->count()) cfg.threads = threads;
        if (o_lambda && o_lambda->count()) cfg.lambda_override = lambda;
        return cfg;
    }
};

int do_gen_cov(const ExperimentArgs& args, const std::string& out_path) {
    eca::ExperimentConfig cfg = args.to_config();
    eca::CovarianceSpec spec;
    if (cfg.custom_cov && !args.o_scheme->count()) {
        spec = *cfg.custom_cov;
        eca::validate(spec);
    } else {
        const int d = cfg.d > 0 ? cfg.d : eca::scheme_default_d(cfg.scheme);
        spec = eca::scheme_spec(cfg.scheme, d);
    }
    const eca::SymMatrix sigma = eca::build_spike_covariance(spec);
    eca::write_csv(out_path, {}, sigma.values());
    std::printf("wrote %ld x %ld covariance to %s\n", static_cast<long>(sigma.dim()),
                static_cast<long>(sigma.dim()), out_path.c_str());
    return 0;
}

int do_simulate(const ExperimentArgs& args, const std::string& out_path) {
    eca::ExperimentConfig cfg = args.to_config();
    cfg.replications = 1;
    const eca::ResolvedConfig rc = eca::resolve(cfg);
    const eca::Matrix x = eca::simulate_data(rc, cfg.base_seed);
    eca::write_csv(out_path, {}, x);
    std::printf("wrote %ld x %ld dataset (%s, scheme %d, seed %llu) to %s\n",
                static_cast<long>(x.rows()), static_cast<long>(x.cols()),
                eca::to_string(rc.config.distribution), rc.config.scheme,
                static_cast<unsigned long long>(cfg.base_seed), out_path.c_str());
    return 0;
}

int do_run(const ExperimentArgs& args) {
    Timer timer;
    const eca::ExperimentConfig cfg = args.to_config();
    const eca::RunResult res = eca::run_experiment(cfg, true);
    std::printf("wrote %zu records to %s\n", res.records.size(), res.records_path.c_str());
    if (!res.errors.empty()) {
        std::printf("%zu replications failed; details in %s\n", res.errors.size(),
                    res.errors_path.c_str());
    }
    // Per-cardinality summary of the leading component.
    std::map<int, std::pair<double, long>> by_k;
    for (const auto& r : res.records) {
        auto& [sum, count] = by_k[r.k];
        sum += r.angles.front();
        ++count;
    }
    for (const auto& [k, agg] : by_k) {
        std::printf("  k=%d: mean leading angle %.4f over %ld replications\n", k,
                    agg.first / static_cast<double>(agg.second), agg.second);
    }
    return 0;
}

int do_roc(const ExperimentArgs& args, const std::string& out_path,
           const std::string& plot_path) {
    Timer timer;
    const eca::ExperimentConfig cfg = args.to_config();
    const std::vector<eca::RocPoint> points = eca::roc_sweep(cfg, out_path);
    std::printf("wrote %zu operating points to %s\n", points.size(), out_path.c_str());
    for (const auto& p : points) {
        std::printf("  k=%d: fpr %.4f, tpr %.4f\n", p.k, p.fpr, p.tpr);
    }
    if (!plot_path.empty()) {
        eca::PlotSeries series;
        series.label = eca::to_string(cfg.method);
        for (const auto& p : points) series.points.emplace_back(p.fpr, p.tpr);
        eca::write_svg_plot(plot_path, "Support recovery", "false positive rate",
                            "true positive rate", {series});
        std::printf("wrote plot to %s\n", plot_path.c_str());
    }
    return 0;
}

struct SweepArgs {
    std::string config_path;
    std::vector<int> d_list;
    std::vector<int> n_list;
    std::string distribution = "normal";
    std::string method = "eca";
    int k = 10;
    int replications = 200;
    std::uint64_t base_seed = 1;
    int threads = 1;
    double lambda = 0.0;

    CLI::Option* o_d_list = nullptr;
    CLI::Option* o_n_list = nullptr;
    CLI::Option* o_distribution = nullptr;
    CLI::Option* o_method = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_replications = nullptr;
    CLI::Option* o_base_seed = nullptr;
    CLI::Option* o_threads = nullptr;
    CLI::Option* o_lambda = nullptr;

    void attach(CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        o_d_list = sub->add_option("--d-list", d_list, "dimensions")->delimiter(',');
        o_n_list = sub->add_option("--n-list", n_list, "sample sizes")->delimiter(',');
        o_distribution =
            sub->add_option("--distribution,--dist", distribution, "normal|t3|ec1|ec2|cauchy");
        o_method = sub->add_option("--method", method, "input statistic: eca|tca|tp");
        o_k = sub->add_option("-k,--cardinality", k, "cardinality of the fitted component");
        o_replications =
            sub->add_option("--replications,--reps", replications, "Monte-Carlo replications");
        o_base_seed = sub->add_option("--seed", base_seed, "base seed");
        o_threads = sub->add_option("--threads", threads, "worker threads");
        o_lambda = sub->add_option("--lambda", lambda, "penalty override");
    }

    eca::SweepConfig to_config() const {
        eca::SweepConfig cfg;
        if (!config_path.empty()) cfg = sweep_config_from_json(config_path);
        if (o_d_list->count()) cfg.d_list = d_list;
        if (o_n_list->count()) cfg.n_list = n_list;
        if (o_distribution->count()) cfg.distribution = eca::parse_distribution(distribution);
        if (o_method->count()) cfg.method = eca::parse_method(method);
        if (o_k->count()) cfg.k = k;
        if (o_replications->count()) cfg.replications = replications;
        if (o_base_seed->count()) cfg.base_seed = base_seed;
        if (o_threads->count()) cfg.threads = threads;
        if (o_lambda->count()) cfg.lambda_override = lambda;
        return cfg;
    }
};

int do_sweep(const SweepArgs& args, const std::string& out_path,
             const std::string& plot_path) {
    Timer timer;
    const eca::SweepConfig cfg = args.to_config();
    const std::vector<eca::SweepPoint> points = eca::sweep_effective_sample(cfg, out_path);
    std::printf("wrote %zu sweep points to %s\n", points.size(), out_path.c_str());
    for (const auto& p : points) {
        std::printf("  d=%d n=%d: log(d)/n %.5f, mean angle %.4f\n", p.d, p.n, p.log_d_over_n,
                    p.mean_angle);
    }
    if (!plot_path.empty()) {
        std::map<int, eca::PlotSeries> by_d;
        for (const auto& p : points) {
            auto& series = by_d[p.d];
            series.label = "d=" + std::to_string(p.d);
            series.points.emplace_back(p.log_d_over_n, p.mean_angle);
        }
        std::vector<eca::PlotSeries> series;
        for (auto& [d, s] : by_d) series.push_back(std::move(s));
        eca::write_svg_plot(plot_path, "Estimation error vs effective sample size", "log(d)/n",
                            "mean sin angle", series);
        std::printf("wrote plot to %s\n", plot_path.c_str());
    }
    return 0;
}

struct AnalyzeArgs {
    std::string data_path;
    bool has_header = false;
    std::string method = "eca";
    int m = 1;
    int k = 0;
    double lambda = 0.0;
    std::string output_dir = ".";
    CLI::Option* o_lambda = nullptr;

    void attach(CLI::App* sub) {
        sub->add_option("--data", data_path, "CSV dataset, rows = observations")->required();
        sub->add_flag("--header", has_header, "first row holds column names");
        sub->add_option("--method", method, "input statistic: eca|tca|tp");
        sub->add_option("-m,--components", m, "number of components");
        sub->add_option("-k,--cardinality", k, "per-component cardinality (0 = 2d/5)");
        o_lambda = sub->add_option("--lambda", lambda, "penalty override");
        sub->add_option("--output-dir,--out", output_dir, "output directory");
    }
};

int do_analyze(const AnalyzeArgs& args) {
    eca::AnalyzeConfig cfg;
    cfg.data_path = args.data_path;
    cfg.has_header = args.has_header;
    cfg.method = eca::parse_method(args.method);
    cfg.m = args.m;
    cfg.k = args.k;
    if (args.o_lambda->count()) cfg.lambda_override = args.lambda;
    cfg.output_dir = args.output_dir;
    const eca::AnalyzeResult res = eca::analyze(cfg);
    for (std::size_t j = 0; j < res.outcomes.size(); ++j) {
        const auto& est = res.outcomes[j].estimate;
        std::printf("component %zu: %zu nonzero loadings, objective %.6f, %s in %d iterations\n",
                    j + 1, est.support.size(), est.objective,
                    est.converged ? "converged" : "not converged", est.iterations);
    }
    std::printf("wrote %s and %s\n", res.loadings_path.c_str(), res.scores_path.c_str());
    return 0;
}

struct SelectKArgs {
    std::string data_path;
    std::string train_path;
    std::string val_path;
    double train_frac = 0.5;
    bool has_header = false;
    std::vector<int> k_grid;
    double lambda = 0.0;
    CLI::Option* o_lambda = nullptr;

    void attach(CLI::App* sub) {
        sub->add_option("--data", data_path, "CSV dataset to split by rows");
        sub->add_option("--train", train_path, "training CSV (with --val)");
        sub->add_option("--val", val_path, "validation CSV (with --train)");
        sub->add_option("--train-frac", train_frac, "leading fraction used for training")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_flag("--header", has_header, "first row holds column names");
        sub->add_option("--k-grid", k_grid, "cardinality grid")->delimiter(',');
        o_lambda = sub->add_option("--lambda", lambda, "penalty override");
    }
};

int do_select_k(const SelectKArgs& args) {
    eca::Matrix train, val;
    if (!args.train_path.empty() || !args.val_path.empty()) {
        if (args.train_path.empty() || args.val_path.empty()) {
            throw std::invalid_argument("--train and --val must be given together");
        }
        train = eca::load_csv(args.train_path, args.has_header).values;
        val = eca::load_csv(args.val_path, args.has_header).values;
    } else {
        if (args.data_path.empty()) {
            throw std::invalid_argument("give either --data or --train/--val");
        }
        const eca::Matrix x = eca::load_csv(args.data_path, args.has_header).values;
        const long n = x.rows();
        const long n_train = std::lround(args.train_frac * static_cast<double>(n));
        if (n_train < 2 || n - n_train < 2) {
            throw std::invalid_argument("the split leaves fewer than 2 rows on one side");
        }
        train = x.topRows(n_train);
        val = x.bottomRows(n - n_train);
    }
    std::vector<int> grid = args.k_grid;
    if (grid.empty()) grid = eca::default_k_grid(static_cast<int>(train.cols()));

    eca::FtpmParams params;
    params.fantope.lambda = args.o_lambda->count()
                                ? args.lambda
                                : eca::default_lambda(eca::multivariate_kendall(train),
                                                      train.rows());
    const eca::SelectKResult res = eca::select_k(train, val, grid, params);
    for (const auto& [k, score] : res.table) {
        std::printf("  k=%d: validation score %.6f\n", k, score);
    }
    std::printf("selected k = %d (validation score %.6f)\n", res.k, res.score);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse principal orientation estimation for heavy-tailed elliptical data"};
    app.require_subcommand(1);

    ExperimentArgs gen_args;
    std::string gen_out = "covariance.csv";
    CLI::App* gen = app.add_subcommand("gen-cov", "write a synthetic covariance matrix as CSV");
    gen_args.attach(gen, false, false);
    gen->add_option("-o,--output,--out", gen_out, "output CSV path");

    ExperimentArgs sim_args;
    std::string sim_out = "data.csv";
    CLI::App* sim = app.add_subcommand("simulate", "sample one synthetic dataset as CSV");
    sim_args.attach(sim, false, false);
    sim->add_option("-o,--output,--out", sim_out, "output CSV path");

    ExperimentArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Monte-Carlo experiment; writes records.csv");
    run_args.attach(run, true, true);

    ExperimentArgs roc_args;
    std::string roc_out = "roc.csv";
    std::string roc_plot;
    CLI::App* roc = app.add_subcommand("roc", "support-recovery operating points over k");
    roc_args.attach(roc, true, false);
    roc->add_option("-o,--output,--out", roc_out, "output CSV path");
    roc->add_option("--plot", roc_plot, "also write an SVG plot");

    SweepArgs sweep_args;
    std::string sweep_out = "sweep.csv";
    std::string sweep_plot;
    CLI::App* sweep = app.add_subcommand("sweep", "error against log(d)/n over a (d, n) grid");
    sweep_args.attach(sweep);
    sweep->add_option("-o,--output,--out", sweep_out, "output CSV path");
    sweep->add_option("--plot", sweep_plot, "also write an SVG plot");

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "fit sparse components to a CSV dataset");
    analyze_args.attach(analyze);

    SelectKArgs select_args;
    CLI::App* select =
        app.add_subcommand("select-k", "pick a cardinality by validation score");
    select_args.attach(select);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return do_gen_cov(gen_args, gen_out);
        if (sim->parsed()) return do_simulate(sim_args, sim_out);
        if (run->parsed()) return do_run(run_args);
        if (roc->parsed()) return do_roc(roc_args, roc_out, roc_plot);
        if (sweep->parsed()) return do_sweep(sweep_args, sweep_out, sweep_plot);
        if (analyze->parsed()) return do_analyze(analyze_args);
        if (select->parsed()) return do_select_k(select_args);
        std::fprintf(stderr, "no subcommand selected\n");
        return 1;
    } catch (const eca::CsvParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const eca::DegenerateDataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const eca::CombinatorialBudgetError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const eca::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 3;
    }
}
