#pragma once

#include <string>
#include <vector>

#include "csdeconv/grid.hpp"
#include "csdeconv/metrics.hpp"

namespace csdeconv {

// Iteration variants exposed by the driver and the CLI --algo flag.
//   rl          multiplicative Richardson-Lucy baseline on the image iterate
//   von-neumann additive operator-series partial sums
//   cauchy20    pure weight-space step (Laplacian correction only)
//   cauchy25    accelerated step (ratio times Laplacian-corrected bracket)
//   cauchy31    noise-suppressed two-step production iteration
enum class Algorithm { rl, von_neumann, cauchy20, cauchy25, cauchy31 };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm a);

// Candidate grid for the constant-alpha residual search.
struct AlphaSearchConfig {
    std::vector<double> candidates;  // sorted ascending, distinct, nonnegative
    int probe_iterations = 16;       // iterations run per candidate
    int score_at = 16;               // trace row whose residual is the score

    void validate() const;
};

// How the per-iteration alpha is chosen. Grid-search mode is resolved to a
// constant before the main loop starts.
struct AlphaPolicy {
    enum class Mode { constant, schedule, grid_search };

    Mode mode = Mode::constant;
    double alpha = 0.5;
    std::vector<double> schedule;
    AlphaSearchConfig search;

    static AlphaPolicy constant(double a);
    static AlphaPolicy from_schedule(std::vector<double> values);
    static AlphaPolicy from_grid_search(AlphaSearchConfig cfg);

    // alpha for formula index n >= 1; grid_search must be resolved first.
    double value_at(int n) const;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::cauchy31;
    int iterations = 64;
    AlphaPolicy alpha_policy;
    double p = 1.0;
    double eps = 1e-12;
    bool collapse_indices = false;  // treat both history slots as the current iterate

    void validate() const;
};

// Two entries of iteration history plus the immutable problem data. The step
// functions below read (rho_prev, rho_curr, n) = (previous iterate, current
// iterate, formula index) and return the next iterate.
struct IterationState {
    WeightField rho_prev;
    WeightField rho_curr;
    int n = 1;
    Image h;
    Kernel k;
};

// Initial weight: h / (k * h) with guarded division.
WeightField initial_weight(const Image& h, const Kernel& k, double eps);

// Symmetric-kernel Richardson-Lucy image update:
//   g' = g . (k * (h / (k * g)))
Image rl_standard_step(const Image& g_n, const Image& h, const Kernel& k, double eps);

// Weight-space Richardson-Lucy with the trailing kernel convolution:
//   rho_{n+1} = [ (h / (k * (h rho_{n-1}))) * k ] . rho_n
WeightField rl_weight_step(const IterationState& state, double eps);

// Pure weight step, no convolution:
//   rho_n = rho_{n-1} - (alpha_n^2 / n) lap(rho_{n-1})
// Consumes rho_prev with divisor state.n and returns the iterate of index n.
WeightField cauchy_pure_step(const IterationState& state, double alpha_n);

// Accelerated step:
//   rho_{n+1} = (h / (k * (h rho_{n-1}))) . [ rho_{n-1} - (alpha_n^2 / n) lap(rho_{n-1}) ]
WeightField cauchy_accel_step(const IterationState& state, double alpha_n, double eps);

// Noise-suppressed production step. The ratio uses the current iterate, the
// bracket the previous one, and the Laplacian correction is scaled by its RMS
// norm to the power p instead of 1/n:
//   rho_{n+1} = [ (h / (k * (h rho_n))) * k ] . [ rho_{n-1} - (alpha_n^2 / max(||L||^p, eps)) L ]
// with L = lap(rho_{n-1}).
WeightField cauchy_noise_suppressed_step(const IterationState& state, double alpha_n, double p,
                                         double eps);

struct RunResult {
    std::vector<IterationTrace> trace;
    Image reconstruction;
    double resolved_alpha = 0.0;  // constant in effect (NaN for schedules)
    double search_score = 0.0;    // residual score of the search winner (NaN if no search)
    bool finite = true;
};

// Multi-iteration driver.
//
// The weight sequence starts at rho_0 = h / (k * h). One-step variants
// (cauchy20) produce trace row n by applying their update with formula index
// n; two-step variants (cauchy25, cauchy31) record row 1 as the bootstrap
// rho_1 = rho_0 and produce row m >= 2 with formula index m-1, so row n always
// holds the iterate of index n. Image-space variants (rl, von-neumann) start
// from g_0 = h rho_0 and update once per row. With zero iterations the
// reconstruction is h rho_0.
//
// Each row records the alpha actually consumed by its update (0 when none),
// metrics of the post-update iterate, and the update's wall time. rel_err and
// ftr are NaN unless g_truth is supplied.
RunResult run(const RunConfig& config, const Image& h, const Kernel& k,
              const Image* g_truth = nullptr);

}  // namespace csdeconv
