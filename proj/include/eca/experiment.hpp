#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eca/covariance.hpp"
#include "eca/csv.hpp"
#include "eca/ftpm.hpp"
#include "eca/sampling.hpp"
#include "eca/types.hpp"

namespace eca {

// Which scatter statistic feeds the sparse-eigenvector pipeline.
enum class Method {
    Eca,  // pairwise sign-kernel scatter
    Tca,  // sin-transformed pairwise-sign correlation, sd-rescaled
    Tp,   // ordinary sample covariance
};

enum class DistributionTag { Normal, T3, Ec1, Ec2, Cauchy };

Method parse_method(const std::string& tag);          // "eca" | "tca" | "tp"
DistributionTag parse_distribution(const std::string& tag);
// "normal" | "t3" | "ec1" | "ec2" | "cauchy"
const char* to_string(Method m);
const char* to_string(DistributionTag t);

// Radius law for a tag, plus whether samples are rescaled to make the
// population covariance equal the scatter matrix (only laws with a finite
// second moment can be).
Generator make_generator(DistributionTag tag);
bool distribution_normalized(DistributionTag tag);

// Built-in synthetic designs: two spiked blocks (6, 3 on 10+10 coordinates,
// baseline 1) for schemes 1-3 and four spiked blocks (8, 4, 2, 1 on
// 10/8/6/5, baseline 0.01) for schemes 4-6, at dimension d.
CovarianceSpec scheme_spec(int scheme, int d);
int scheme_default_n(int scheme);  // 50, 100, 100, 50, 100, 100
int scheme_default_d(int scheme);  // 100, 100, 200, 100, 100, 200

// The method's input statistic for a data matrix.
SymMatrix build_input_matrix(Method method, const Matrix& x);

// Even cardinalities 2, 4, ..., floor(2d/5).
std::vector<int> default_k_grid(int d);

struct ExperimentConfig {
    int scheme = 1;                          // 1..6; ignored when custom_cov is set
    std::optional<CovarianceSpec> custom_cov;
    DistributionTag distribution = DistributionTag::Normal;
    Method method = Method::Eca;
    int n = 0;                               // 0 -> scheme default
    int d = 0;                               // 0 -> scheme default
    int m = 1;                               // components to estimate
    int k = 0;                               // fixed cardinality; 0 -> use k_grid
    std::vector<int> k_grid;                 // empty and k == 0 -> default_k_grid(d)
    int replications = 200;
    std::uint64_t base_seed = 1;
    std::string output_dir = ".";
    int threads = 1;                         // never affects the results
    std::optional<double> lambda_override;   // else max|input| sqrt(log d / n)
};

// Fully resolved copy: n/d filled from the scheme, covariance made explicit,
// cardinality grid materialized.  Throws on inconsistent settings.
struct ResolvedConfig {
    ExperimentConfig config;
    CovarianceSpec cov;
    std::vector<int> ks;
};
ResolvedConfig resolve(const ExperimentConfig& config);

// Sampled synthetic dataset for one replication of a resolved config.
Matrix simulate_data(const ResolvedConfig& rc, std::uint64_t seed);

struct ExperimentRecord {
    int scheme = 0;
    std::string distribution;
    std::string method;
    int n = 0;
    int d = 0;
    int k = 0;
    int replication = 0;
    std::vector<double> angles;  // sin of the principal angle per component
    double support_tpr = 0.0;    // union of estimated vs union of true supports
    double support_fpr = 0.0;
    double wall_time_ms = 0.0;   // reserved: written as 0 to keep output reproducible
    std::uint64_t seed = 0;
};

struct ReplicationError {
    int replication = 0;
    std::uint64_t seed = 0;
    std::string message;
};

struct RunResult {
    std::vector<ExperimentRecord> records;  // sorted by (replication, k)
    std::vector<ReplicationError> errors;
    std::string records_path;  // empty when no file was requested
    std::string errors_path;   // empty when there were no failures
};

// Monte-Carlo estimation run.  Per replication r (seed = base_seed XOR r):
// sample, build the method's input statistic, estimate m sparse components
// at every cardinality in the grid (the rank-1 relaxation stage is shared
// across the grid; deflated stages warm-start from the neighboring grid
// point), and score angles and support recovery against the known truth.
// Failed replications become error rows; more than 10% of them aborts.
// Output is bitwise independent of `threads`.  When `write_files` is set the
// records go to <output_dir>/records.csv (and failures, if any, to
// <output_dir>/errors.csv).
RunResult run_experiment(const ExperimentConfig& config, bool write_files = true);

// Per-cardinality means of (fpr, tpr) over an m=1 run, for ROC-style
// comparisons; rows ordered by k.
struct RocPoint {
    int k = 0;
    double fpr = 0.0;
    double tpr = 0.0;
};
std::vector<RocPoint> roc_from_records(const std::vector<ExperimentRecord>& records);
std::vector<RocPoint> roc_sweep(const ExperimentConfig& config, const std::string& out_path);

struct SweepConfig {
    std::vector<int> d_list;
    std::vector<int> n_list;
    DistributionTag distribution = DistributionTag::Normal;
    Method method = Method::Eca;
    int k = 10;  // spike support of the leading component
    int replications = 200;
    std::uint64_t base_seed = 1;
    int threads = 1;
    std::optional<double> lambda_override;
};

struct SweepPoint {
    int d = 0;
    int n = 0;
    double log_d_over_n = 0.0;
    double mean_angle = 0.0;
};

// Leading-component error against the effective sample size: for every
// (d, n) in the grid, the two-spike design at dimension d is sampled
// `replications` times and the mean leading angle recorded.  Rows ordered
// by (d, n).
std::vector<SweepPoint> sweep_effective_sample(const SweepConfig& config,
                                               const std::string& out_path);

struct AnalyzeConfig {
    std::string data_path;
    bool has_header = false;
    Method method = Method::Eca;
    int m = 1;
    int k = 0;  // 0 -> floor(2d/5), capped at d
    std::optional<double> lambda_override;
    std::string output_dir = ".";
};

struct AnalyzeResult {
    std::vector<std::string> names;     // column names when the file had a header
    Matrix loadings;                    // d x m sparse loadings
    Matrix scores;                      // n x m projections of the data
    std::vector<FtpmOutcome> outcomes;  // per-component fit diagnostics
    std::string loadings_path;
    std::string scores_path;
};

// Fits m sparse components to a real dataset and writes
// <output_dir>/loadings.csv and <output_dir>/scores.csv.
AnalyzeResult analyze(const AnalyzeConfig& config);

// Minimal static line plot (self-contained SVG) of one or more series.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

}  // namespace eca
