#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svtail/bounds.hpp"
#include "svtail/models.hpp"

namespace svtail {

/// What to draw per trial: an iid sub-Gaussian matrix or a Gaussian
/// Toeplitz matrix.
struct EnsembleSpec {
    enum class Kind { IidMatrix, GaussianToeplitz };

    Kind kind = Kind::IidMatrix;
    int m = 0;
    int n = 0;
    int d = 0;
    SubGaussianModel model;

    static EnsembleSpec iid(int m, int n, SubGaussianModel model);
    static EnsembleSpec toeplitz(int d);
    std::string label() const;
};

/// Empirical exceedance counts of |B| over a t grid, with exact binomial
/// confidence intervals, plus any attached bound curves. A TailCurve is a
/// pure function of (spec, t_grid, n_trials, master_seed, confidence):
/// trial i draws from a generator seeded by derive_trial_seed(master_seed, i),
/// so the result does not depend on the thread count.
struct TailCurve {
    EnsembleSpec spec;
    std::vector<double> t_grid;
    std::vector<long> exceed_counts;  // # trials with sigma_max > t_j
    long n_trials = 0;
    double confidence = 0.0;
    std::uint64_t master_seed = 0;
    std::vector<double> ci_low;
    std::vector<double> ci_high;
    double wall_seconds = 0.0;
    // bound log-values per attached tag, in attachment order
    std::vector<std::pair<BoundTag, std::vector<double>>> bound_logs;

    double empirical_p(size_t j) const {
        return static_cast<double>(exceed_counts[j]) / static_cast<double>(n_trials);
    }
    const std::vector<double>* logs_for(BoundTag tag) const;
};

struct HarnessOptions {
    int threads = 1;          // worker-count hint; never changes results
    double sigma_tol = 1e-10;
};

/// Runs n_trials independent draws, computing sigma_max once per trial and
/// counting exceedances for every grid t below it. Clopper-Pearson intervals
/// at the given confidence.
TailCurve estimate_tail(const EnsembleSpec& spec, std::vector<double> t_grid, long n_trials,
                        std::uint64_t master_seed, double confidence,
                        const HarnessOptions& options = {});

/// Evaluates the requested bounds on the curve's grid from the ensemble's
/// own parameters (model constants, shape). Applicable tags: net, entrywise,
/// refined for iid ensembles; toeplitz for Toeplitz ensembles.
void attach_bounds(TailCurve& curve, std::span<const BoundTag> tags);

struct CellVerdict {
    BoundTag tag;
    double t;
    double bound_probability;  // clamped to 1
    double ci_low;
    bool pass;                 // bound_probability >= ci_low
};

struct VerificationReport {
    bool all_pass = true;
    std::vector<CellVerdict> cells;
    std::vector<std::string> notes;
    std::string ensemble_label;
    std::uint64_t master_seed = 0;
    long n_trials = 0;
    double confidence = 0.0;
    double wall_seconds = 0.0;
    double tightest_margin = 0.0;  // min over cells of bound - ci_low
    BoundTag tightest_tag = BoundTag::Net31;
    double tightest_t = 0.0;
};

/// PASS per cell iff min(exp(bound log), 1) >= ci_low: a bound is flagged
/// only when the data statistically contradicts it.
VerificationReport verify_domination(const TailCurve& curve, std::span<const BoundTag> tags);

struct ToeplitzExperimentResult {
    TailCurve curve;
    VerificationReport report;
};

/// estimate_tail over sample_toeplitz(d) with the toeplitz bound attached
/// and verified.
ToeplitzExperimentResult toeplitz_experiment(int d, std::vector<double> t_grid, long n_trials,
                                             std::uint64_t master_seed, double confidence,
                                             const HarnessOptions& options = {});

}  // namespace svtail
