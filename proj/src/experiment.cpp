#include "eca/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "eca/errors.hpp"
#include "eca/rng.hpp"
#include "eca/scatter.hpp"
#include "eca/spectral.hpp"

namespace eca {

namespace {

// Runs body(0..count-1) on up to `threads` workers pulling indices from a
// shared counter.  Results must be written to per-index slots; the first
// escaping exception (by index) is rethrown after all workers join.
void run_parallel(int count, int threads, const std::function<void(int)>& body) {
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> failures(count);
    std::atomic<int> next{0};
    auto drain = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= count) break;
            try {
                body(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
    for (int i = 0; i < count; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
    }
}

std::string quote_csv(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

std::uint64_t mix_point_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = base ^ (a << 32) ^ b;
    splitmix64(state);
    return splitmix64(state);
}

}  // namespace

Method parse_method(const std::string& tag) {
    if (tag == "eca") return Method::Eca;
    if (tag == "tca") return Method::Tca;
    if (tag == "tp") return Method::Tp;
    throw std::invalid_argument("unknown method '" + tag + "' (expected eca, tca, or tp)");
}

DistributionTag parse_distribution(const std::string& tag) {
    if (tag == "normal") return DistributionTag::Normal;
    if (tag == "t3") return DistributionTag::T3;
    if (tag == "ec1") return DistributionTag::Ec1;
    if (tag == "ec2") return DistributionTag::Ec2;
    if (tag == "cauchy") return DistributionTag::Cauchy;
    throw std::invalid_argument("unknown distribution '" + tag +
                                "' (expected normal, t3, ec1, ec2, or cauchy)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Eca: return "eca";
        case Method::Tca: return "tca";
        case Method::Tp: return "tp";
    }
    return "eca";
}

const char* to_string(DistributionTag t) {
    switch (t) {
        case DistributionTag::Normal: return "normal";
        case DistributionTag::T3: return "t3";
        case DistributionTag::Ec1: return "ec1";
        case DistributionTag::Ec2: return "ec2";
        case DistributionTag::Cauchy: return "cauchy";
    }
    return "normal";
}

Generator make_generator(DistributionTag tag) {
    switch (tag) {
        case DistributionTag::Normal: return Generator::gaussian_chi();
        case DistributionTag::T3: return Generator::multivariate_t(3.0);
        case DistributionTag::Ec1: return Generator::f_ratio();
        case DistributionTag::Ec2: return Generator::exp1();
        case DistributionTag::Cauchy: return Generator::cauchy();
    }
    return Generator::gaussian_chi();
}

bool distribution_normalized(DistributionTag tag) {
    switch (tag) {
        case DistributionTag::Normal:
        case DistributionTag::T3:
        case DistributionTag::Ec2:
            return true;
        case DistributionTag::Ec1:
        case DistributionTag::Cauchy:
            return false;
    }
    return false;
}

CovarianceSpec scheme_spec(int scheme, int d) {
    CovarianceSpec spec;
    spec.d = d;
    if (scheme >= 1 && scheme <= 3) {
        spec.components = {{6.0, 10}, {3.0, 10}};
        spec.baseline = 1.0;
    } else if (scheme >= 4 && scheme <= 6) {
        spec.components = {{8.0, 10}, {4.0, 8}, {2.0, 6}, {1.0, 5}};
        spec.baseline = 0.01;
    } else {
        throw std::invalid_argument("scheme must be 1..6, got " + std::to_string(scheme));
    }
    validate(spec);
    return spec;
}

int scheme_default_n(int scheme) {
    switch (scheme) {
        case 1: return 50;
        case 2: return 100;
        case 3: return 100;
        case 4: return 50;
        case 5: return 100;
        case 6: return 100;
    }
    throw std::invalid_argument("scheme must be 1..6, got " + std::to_string(scheme));
}

int scheme_default_d(int scheme) {
    switch (scheme) {
        case 1: return 100;
        case 2: return 100;
        case 3: return 200;
        case 4: return 100;
        case 5: return 100;
        case 6: return 200;
    }
    throw std::invalid_argument("scheme must be 1..6, got " + std::to_string(scheme));
}

SymMatrix build_input_matrix(Method method, const Matrix& x) {
    switch (method) {
        case Method::Eca: return multivariate_kendall(x);
        case Method::Tca: return tca_covariance(x);
        case Method::Tp: return pearson_cov(x);
    }
    throw std::invalid_argument("build_input_matrix: unknown method");
}

std::vector<int> default_k_grid(int d) {
    if (d < 1) throw std::invalid_argument("default_k_grid: dimension must be >= 1");
    std::vector<int> grid;
    for (int k = 2; k <= 2 * d / 5; k += 2) grid.push_back(k);
    if (grid.empty()) grid.push_back(std::min(d, 2));
    return grid;
}

ResolvedConfig resolve(const ExperimentConfig& config) {
    ResolvedConfig rc;
    rc.config = config;
    if (config.custom_cov.has_value()) {
        rc.cov = *config.custom_cov;
        validate(rc.cov);
        if (rc.config.d == 0) rc.config.d = rc.cov.d;
        if (rc.config.d != rc.cov.d) {
            throw std::invalid_argument("config dimension disagrees with the custom covariance");
        }
        if (rc.config.n == 0) {
            throw std::invalid_argument("custom covariance runs must set n explicitly");
        }
    } else {
        if (rc.config.d == 0) rc.config.d = scheme_default_d(config.scheme);
        if (rc.config.n == 0) rc.config.n = scheme_default_n(config.scheme);
        rc.cov = scheme_spec(config.scheme, rc.config.d);
    }
    if (rc.config.n < 2) throw std::invalid_argument("need n >= 2 observations");
    if (rc.config.m < 1 || rc.config.m > static_cast<int>(rc.cov.components.size())) {
        throw std::invalid_argument("m must be between 1 and the number of spiked components (" +
                                    std::to_string(rc.cov.components.size()) + ")");
    }
    if (rc.config.replications < 1) throw std::invalid_argument("need at least 1 replication");
    if (rc.config.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (rc.config.lambda_override && !(*rc.config.lambda_override >= 0.0)) {
        throw std::invalid_argument("the penalty override must be >= 0");
    }

    if (rc.config.k > 0) {
        rc.ks = {rc.config.k};
    } else if (!rc.config.k_grid.empty()) {
        rc.ks = rc.config.k_grid;
    } else {
        rc.ks = default_k_grid(rc.config.d);
    }
    std::sort(rc.ks.begin(), rc.ks.end());
    rc.ks.erase(std::unique(rc.ks.begin(), rc.ks.end()), rc.ks.end());
    for (int k : rc.ks) {
        if (k < 1 || k > rc.config.d) {
            throw std::invalid_argument("cardinality " + std::to_string(k) +
                                        " out of range for dimension " +
                                        std::to_string(rc.config.d));
        }
    }
    return rc;
}

Matrix simulate_data(const ResolvedConfig& rc, std::uint64_t seed) {
    const SymMatrix sigma = build_spike_covariance(rc.cov);
    const EllipticalModel model =
        model_from_covariance(Vector::Zero(rc.config.d), sigma,
                              make_generator(rc.config.distribution),
                              distribution_normalized(rc.config.distribution));
    return sample(model, rc.config.n, seed);
}

namespace {

void write_records_csv(const std::string& path, const std::vector<ExperimentRecord>& records,
                       int m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "scheme,distribution,method,n,d,k,replication";
    for (int j = 1; j <= m; ++j) out << ",angle_" << j;
    out << ",support_tpr,support_fpr,wall_time_ms,seed\n";
    for (const auto& r : records) {
        out << r.scheme << ',' << r.distribution << ',' << r.method << ',' << r.n << ',' << r.d
            << ',' << r.k << ',' << r.replication;
        for (double a : r.angles) out << ',' << format_double(a);
        out << ',' << format_double(r.support_tpr) << ',' << format_double(r.support_fpr) << ','
            << format_double(r.wall_time_ms) << ',' << r.seed << '\n';
    }
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

void write_errors_csv(const std::string& path, const std::vector<ReplicationError>& errors) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "replication,seed,error\n";
    for (const auto& e : errors) {
        out << e.replication << ',' << e.seed << ',' << quote_csv(e.message) << '\n';
    }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, bool write_files) {
    const ResolvedConfig rc = resolve(config);
    const int n = rc.config.n;
    const int d = rc.config.d;
    const int m = rc.config.m;
    const int reps = rc.config.replications;
    const int scheme_label = rc.config.custom_cov.has_value() ? 0 : rc.config.scheme;

    const SymMatrix sigma = build_spike_covariance(rc.cov);
    const EllipticalModel model =
        model_from_covariance(Vector::Zero(d), sigma, make_generator(rc.config.distribution),
                              distribution_normalized(rc.config.distribution));

    std::vector<Vector> truth;
    std::vector<char> in_truth(d, 0);
    for (int j = 0; j < m; ++j) {
        truth.push_back(spike_eigenvector(rc.cov, j));
        for (Index i : spike_support(rc.cov, j)) in_truth[static_cast<std::size_t>(i)] = 1;
    }
    long truth_count = 0;
    for (char c : in_truth) truth_count += c;

    std::vector<std::vector<ExperimentRecord>> per_rep(reps);
    std::vector<std::optional<ReplicationError>> rep_error(reps);

    auto body = [&](int r) {
        const std::uint64_t seed = replication_seed(rc.config.base_seed, r);
        try {
            const Matrix x = sample(model, n, seed);
            const SymMatrix input = build_input_matrix(rc.config.method, x);
            const double lambda =
                rc.config.lambda_override.value_or(default_lambda(input, n));

            FantopeParams fparams;
            fparams.lambda = lambda;
            fparams.m = 1;

            // The rank-1 relaxation of the undeflated input is shared across
            // the cardinality grid (it does not involve k).
            const FantopeSolution first = solve_fantope_pca(input, fparams);
            const SymMatrix x1(first.x_m);

            std::vector<Matrix> warm_z(m), warm_u(m);
            std::vector<char> warm(m, 0);

            for (int k : rc.ks) {
                FtpmParams tparams;
                tparams.k = k;
                tparams.init_sparsity = k;
                tparams.fantope = fparams;

                std::vector<Vector> comps;
                comps.reserve(m);
                std::vector<std::vector<Index>> comp_supports;

                SparseEigenResult est =
                    truncated_power(input, init_from_fantope_topk(x1, k), tparams);
                comps.push_back(est.vector);
                comp_supports.push_back(est.support);

                SymMatrix work = input;
                for (int j = 1; j < m; ++j) {
                    work = deflate(work, comps.back());
                    const FantopeSolution sol =
                        warm[j] ? solve_fantope_pca(work, fparams, &warm_z[j], &warm_u[j])
                                : solve_fantope_pca(work, fparams);
                    warm_z[j] = sol.z;
                    warm_u[j] = sol.u;
                    warm[j] = 1;
                    const SymMatrix xj(sol.x_m);
                    SparseEigenResult estj =
                        truncated_power(work, init_from_fantope_topk(xj, k), tparams);
                    comps.push_back(estj.vector);
                    comp_supports.push_back(estj.support);
                }

                ExperimentRecord rec;
                rec.scheme = scheme_label;
                rec.distribution = to_string(rc.config.distribution);
                rec.method = to_string(rc.config.method);
                rec.n = n;
                rec.d = d;
                rec.k = k;
                rec.replication = r;
                rec.seed = seed;
                for (int j = 0; j < m; ++j) rec.angles.push_back(sin_angle(comps[j], truth[j]));
                std::vector<char> in_est(d, 0);
                for (const auto& sup : comp_supports) {
                    for (Index i : sup) in_est[static_cast<std::size_t>(i)] = 1;
                }
                long tp = 0, fp = 0;
                for (int i = 0; i < d; ++i) {
                    if (in_est[i] && in_truth[i]) ++tp;
                    if (in_est[i] && !in_truth[i]) ++fp;
                }
                rec.support_tpr = static_cast<double>(tp) / static_cast<double>(truth_count);
                const long fpr_den = d - truth_count;
                rec.support_fpr =
                    fpr_den > 0 ? static_cast<double>(fp) / static_cast<double>(fpr_den) : 0.0;
                rec.wall_time_ms = 0.0;  // reserved; see README on reproducible output
                per_rep[r].push_back(std::move(rec));
            }
        } catch (const std::exception& e) {
            rep_error[r] = ReplicationError{r, seed, e.what()};
        }
    };
    run_parallel(reps, rc.config.threads, body);

    RunResult out;
    for (int r = 0; r < reps; ++r) {
        if (rep_error[r]) out.errors.push_back(*rep_error[r]);
        for (auto& rec : per_rep[r]) out.records.push_back(std::move(rec));
    }
    if (10 * static_cast<long>(out.errors.size()) > static_cast<long>(reps)) {
        throw NumericError("run_experiment: " + std::to_string(out.errors.size()) + " of " +
                           std::to_string(reps) +
                           " replications failed (more than 10%); first failure: " +
                           out.errors.front().message);
    }
    if (write_files) {
        std::filesystem::create_directories(rc.config.output_dir);
        out.records_path =
            (std::filesystem::path(rc.config.output_dir) / "records.csv").string();
        write_records_csv(out.records_path, out.records, m);
        if (!out.errors.empty()) {
            out.errors_path =
                (std::filesystem::path(rc.config.output_dir) / "errors.csv").string();
            write_errors_csv(out.errors_path, out.errors);
        }
    }
    return out;
}

std::vector<RocPoint> roc_from_records(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("roc_from_records: no records to aggregate");
    }
    std::vector<int> ks;
    for (const auto& r : records) ks.push_back(r.k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::vector<RocPoint> out;
    for (int k : ks) {
        RocPoint p;
        p.k = k;
        long count = 0;
        for (const auto& r : records) {
            if (r.k == k) {
                p.fpr += r.support_fpr;
                p.tpr += r.support_tpr;
                ++count;
            }
        }
        if (count == 0) continue;
        p.fpr /= static_cast<double>(count);
        p.tpr /= static_cast<double>(count);
        out.push_back(p);
    }
    return out;
}

std::vector<RocPoint> roc_sweep(const ExperimentConfig& config, const std::string& out_path) {
    ExperimentConfig cfg = config;
    cfg.m = 1;
    if (cfg.k > 0) {
        cfg.k_grid = {cfg.k};
        cfg.k = 0;
    }
    const RunResult run = run_experiment(cfg, false);
    const std::vector<RocPoint> points = roc_from_records(run.records);
    if (!out_path.empty()) {
        Matrix table(static_cast<Index>(points.size()), 3);
        for (std::size_t i = 0; i < points.size(); ++i) {
            table(static_cast<Index>(i), 0) = points[i].k;
            table(static_cast<Index>(i), 1) = points[i].fpr;
            table(static_cast<Index>(i), 2) = points[i].tpr;
        }
        write_csv(out_path, {"k", "fpr", "tpr"}, table);
    }
    return points;
}

std::vector<SweepPoint> sweep_effective_sample(const SweepConfig& config,
                                               const std::string& out_path) {
    if (config.d_list.empty() || config.n_list.empty()) {
        throw std::invalid_argument("sweep_effective_sample: empty grid");
    }
    if (config.replications < 1 || config.k < 1) {
        throw std::invalid_argument("sweep_effective_sample: invalid settings");
    }
    std::vector<int> ds = config.d_list;
    std::vector<int> ns = config.n_list;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    std::vector<SweepPoint> out;
    for (int d : ds) {
        const CovarianceSpec cov = scheme_spec(1, d);
        const SymMatrix sigma = build_spike_covariance(cov);
        const EllipticalModel model =
            model_from_covariance(Vector::Zero(d), sigma, make_generator(config.distribution),
                                  distribution_normalized(config.distribution));
        const Vector v1 = spike_eigenvector(cov, 0);
        for (int n : ns) {
            if (n < 2) throw std::invalid_argument("sweep_effective_sample: need n >= 2");
            const std::uint64_t point_base =
                mix_point_seed(config.base_seed, static_cast<std::uint64_t>(d),
                               static_cast<std::uint64_t>(n));
            const int reps = config.replications;
            std::vector<double> angle(reps, -1.0);
            std::vector<char> failed(reps, 0);
            auto body = [&](int r) {
                const std::uint64_t seed = replication_seed(point_base, r);
                try {
                    const Matrix x = sample(model, n, seed);
                    const SymMatrix input = build_input_matrix(config.method, x);
                    FtpmParams params;
                    params.k = config.k;
                    params.init_sparsity = config.k;
                    params.fantope.lambda =
                        config.lambda_override.value_or(default_lambda(input, n));
                    const FtpmOutcome fit = ftpm_leading(input, params);
                    angle[r] = sin_angle(fit.estimate.vector, v1);
                } catch (const std::exception&) {
                    failed[r] = 1;
                }
            };
            run_parallel(reps, config.threads, body);
            long failures = 0;
            double sum = 0.0;
            long kept = 0;
            for (int r = 0; r < reps; ++r) {
                if (failed[r]) {
                    ++failures;
                } else {
                    sum += angle[r];
                    ++kept;
                }
            }
            if (10 * failures > reps || kept == 0) {
                throw NumericError("sweep_effective_sample: too many failed replications at d=" +
                                   std::to_string(d) + ", n=" + std::to_string(n));
            }
            SweepPoint p;
            p.d = d;
            p.n = n;
            p.log_d_over_n = std::log(static_cast<double>(d)) / static_cast<double>(n);
            p.mean_angle = sum / static_cast<double>(kept);
            out.push_back(p);
        }
    }
    if (!out_path.empty()) {
        Matrix table(static_cast<Index>(out.size()), 4);
        for (std::size_t i = 0; i < out.size(); ++i) {
            table(static_cast<Index>(i), 0) = out[i].d;
            table(static_cast<Index>(i), 1) = out[i].n;
            table(static_cast<Index>(i), 2) = out[i].log_d_over_n;
            table(static_cast<Index>(i), 3) = out[i].mean_angle;
        }
        write_csv(out_path, {"d", "n", "log_d_over_n", "mean_angle"}, table);
    }
    return out;
}

AnalyzeResult analyze(const AnalyzeConfig& config) {
    const CsvTable table = load_csv(config.data_path, config.has_header);
    const Matrix& x = table.values;
    const int d = static_cast<int>(x.cols());
    if (x.rows() < 2) {
        throw DegenerateDataError("analyze: need at least 2 observations");
    }
    if (config.m < 1 || config.m > d) {
        throw std::invalid_argument("analyze: component count out of range");
    }
    int k = config.k;
    if (k == 0) k = std::max(1, std::min(d, 2 * d / 5));
    if (k < 1 || k > d) {
        throw std::invalid_argument("analyze: cardinality out of range");
    }

    const SymMatrix input = build_input_matrix(config.method, x);
    FtpmParams params;
    params.k = k;
    params.init_sparsity = k;
    params.fantope.lambda =
        config.lambda_override.value_or(default_lambda(input, x.rows()));

    AnalyzeResult out;
    out.names = table.column_names;
    out.outcomes = ftpm_top_m(input, config.m, params);
    out.loadings.resize(d, config.m);
    for (int j = 0; j < config.m; ++j) out.loadings.col(j) = out.outcomes[j].estimate.vector;
    out.scores = x * out.loadings;

    std::filesystem::create_directories(config.output_dir);
    out.loadings_path = (std::filesystem::path(config.output_dir) / "loadings.csv").string();
    out.scores_path = (std::filesystem::path(config.output_dir) / "scores.csv").string();

    // Loadings: optional variable-name column, then one column per component.
    {
        std::ofstream f(out.loadings_path);
        if (!f) throw std::runtime_error("cannot open '" + out.loadings_path + "'");
        if (!out.names.empty()) f << "variable,";
        for (int j = 1; j <= config.m; ++j) f << "component_" << j << (j < config.m ? "," : "");
        f << '\n';
        for (int i = 0; i < d; ++i) {
            if (!out.names.empty()) f << out.names[static_cast<std::size_t>(i)] << ',';
            for (int j = 0; j < config.m; ++j) {
                f << format_double(out.loadings(i, j)) << (j + 1 < config.m ? "," : "");
            }
            f << '\n';
        }
    }
    {
        std::vector<std::string> header;
        for (int j = 1; j <= config.m; ++j) header.push_back("component_" + std::to_string(j));
        write_csv(out.scores_path, header, out.scores);
    }
    return out;
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
    if (series.empty()) throw std::invalid_argument("write_svg_plot: no series");
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [px, py] : s.points) {
            xmin = std::min(xmin, px);
            xmax = std::max(xmax, px);
            ymin = std::min(ymin, py);
            ymax = std::max(ymax, py);
        }
    }
    if (!(xmin <= xmax) || !(ymin <= ymax)) {
        throw std::invalid_argument("write_svg_plot: series contain no finite points");
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double w = 640, h = 440, ml = 70, mr = 20, mt = 40, mb = 55;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

    char buf[128];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_svg_plot: cannot open '" + path + "'");
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
      << "</text>\n";
    // Axes with 5 ticks each.
    f << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
      << h - mb << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
      << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double fx = xmin + (xmax - xmin) * t / 4.0;
        const double fy = ymin + (ymax - ymin) * t / 4.0;
        f << "<text x=\"" << sx(fx) << "\" y=\"" << h - mb + 18
          << "\" text-anchor=\"middle\" font-size=\"11\">" << num(fx) << "</text>\n"
          << "<text x=\"" << ml - 8 << "\" y=\"" << sy(fy) + 4
          << "\" text-anchor=\"end\" font-size=\"11\">" << num(fy) << "</text>\n";
    }
    f << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n"
      << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << (mt + h - mb) / 2 << ")\">" << y_label << "</text>\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = colors[s % 6];
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [px, py] : series[s].points) f << sx(px) << ',' << sy(py) << ' ';
        f << "\"/>\n";
        for (const auto& [px, py] : series[s].points) {
            f << "<circle cx=\"" << sx(px) << "\" cy=\"" << sy(py) << "\" r=\"2.5\" fill=\""
              << color << "\"/>\n";
        }
        f << "<text x=\"" << w - mr - 8 << "\" y=\"" << mt + 16 + 16 * s
          << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
          << series[s].label << "</text>\n";
    }
    f << "</svg>\n";
}

}  // namespace eca
