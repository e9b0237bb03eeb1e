#include "csdeconv/deconv.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "csdeconv/alpha_search.hpp"
#include "csdeconv/operators.hpp"

namespace csdeconv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "rl") return Algorithm::rl;
    if (name == "von-neumann") return Algorithm::von_neumann;
    if (name == "cauchy20") return Algorithm::cauchy20;
    if (name == "cauchy25") return Algorithm::cauchy25;
    if (name == "cauchy31") return Algorithm::cauchy31;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::rl: return "rl";
        case Algorithm::von_neumann: return "von-neumann";
        case Algorithm::cauchy20: return "cauchy20";
        case Algorithm::cauchy25: return "cauchy25";
        case Algorithm::cauchy31: return "cauchy31";
    }
    throw std::logic_error("unhandled algorithm");
}

void AlphaSearchConfig::validate() const {
    if (candidates.empty()) {
        throw std::invalid_argument("alpha search requires at least one candidate");
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!std::isfinite(candidates[i]) || candidates[i] < 0.0) {
            throw std::invalid_argument("alpha candidates must be finite and nonnegative");
        }
        if (i > 0 && candidates[i] <= candidates[i - 1]) {
            throw std::invalid_argument("alpha candidates must be sorted and distinct");
        }
    }
    if (probe_iterations < 1) {
        throw std::invalid_argument("probe_iterations must be positive");
    }
    if (score_at < 1 || score_at > probe_iterations) {
        throw std::invalid_argument("score_at must lie in [1, probe_iterations]");
    }
}

AlphaPolicy AlphaPolicy::constant(double a) {
    AlphaPolicy policy;
    policy.mode = Mode::constant;
    policy.alpha = a;
    return policy;
}

AlphaPolicy AlphaPolicy::from_schedule(std::vector<double> values) {
    AlphaPolicy policy;
    policy.mode = Mode::schedule;
    policy.schedule = std::move(values);
    return policy;
}

AlphaPolicy AlphaPolicy::from_grid_search(AlphaSearchConfig cfg) {
    AlphaPolicy policy;
    policy.mode = Mode::grid_search;
    policy.search = std::move(cfg);
    return policy;
}

double AlphaPolicy::value_at(int n) const {
    switch (mode) {
        case Mode::constant:
            return alpha;
        case Mode::schedule:
            if (n < 1 || static_cast<std::size_t>(n) > schedule.size()) {
                throw std::out_of_range("alpha schedule exhausted at iteration " +
                                        std::to_string(n));
            }
            return schedule[static_cast<std::size_t>(n) - 1];
        case Mode::grid_search:
            throw std::logic_error("grid-search alpha policy must be resolved before use");
    }
    throw std::logic_error("unhandled alpha policy mode");
}

void RunConfig::validate() const {
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("guard epsilon must be positive");
    }
    if (!std::isfinite(p)) {
        throw std::invalid_argument("exponent p must be finite");
    }
    switch (alpha_policy.mode) {
        case AlphaPolicy::Mode::constant:
            if (!std::isfinite(alpha_policy.alpha) || alpha_policy.alpha < 0.0) {
                throw std::invalid_argument("constant alpha must be finite and nonnegative");
            }
            break;
        case AlphaPolicy::Mode::schedule:
            if (alpha_policy.schedule.size() < static_cast<std::size_t>(iterations)) {
                throw std::invalid_argument("alpha schedule shorter than the planned iterations");
            }
            break;
        case AlphaPolicy::Mode::grid_search:
            alpha_policy.search.validate();
            break;
    }
}

WeightField initial_weight(const Image& h, const Kernel& k, double eps) {
    return guarded_divide(h, convolve(h, k), eps);
}

Image rl_standard_step(const Image& g_n, const Image& h, const Kernel& k, double eps) {
    if (!g_n.same_shape(h)) {
        throw std::invalid_argument("shape mismatch between iterate and observed image");
    }
    const Image ratio = guarded_divide(h, convolve(g_n, k), eps);
    return mul(g_n, convolve(ratio, k));
}

WeightField rl_weight_step(const IterationState& state, double eps) {
    const Image ratio = guarded_divide(state.h, convolve(mul(state.h, state.rho_prev), state.k), eps);
    return mul(convolve(ratio, state.k), state.rho_curr);
}

WeightField cauchy_pure_step(const IterationState& state, double alpha_n) {
    if (state.n < 1) {
        throw std::invalid_argument("iteration index must be >= 1");
    }
    const double factor = alpha_n * alpha_n / static_cast<double>(state.n);
    return sub(state.rho_prev, scale(laplacian(state.rho_prev), factor));
}

WeightField cauchy_accel_step(const IterationState& state, double alpha_n, double eps) {
    if (state.n < 1) {
        throw std::invalid_argument("iteration index must be >= 1");
    }
    const Image ratio = guarded_divide(state.h, convolve(mul(state.h, state.rho_prev), state.k), eps);
    const double factor = alpha_n * alpha_n / static_cast<double>(state.n);
    const WeightField bracket = sub(state.rho_prev, scale(laplacian(state.rho_prev), factor));
    return mul(ratio, bracket);
}

WeightField cauchy_noise_suppressed_step(const IterationState& state, double alpha_n, double p,
                                         double eps) {
    if (state.n < 1) {
        throw std::invalid_argument("iteration index must be >= 1");
    }
    const Image ratio = guarded_divide(state.h, convolve(mul(state.h, state.rho_curr), state.k), eps);
    const LaplacianTerm term = normalized_laplacian_term(state.rho_prev, p);
    const double denom = std::max(std::pow(term.norm, p), eps);
    const WeightField bracket = sub(state.rho_prev, scale(term.field, alpha_n * alpha_n / denom));
    return mul(convolve(ratio, state.k), bracket);
}

namespace {

// Fills one trace row from the post-update reconstruction.
IterationTrace make_row(int n, double alpha_used, double wall_ms, const Image& g_row,
                        const Image& h, const Kernel& k, double eps, const Image* g_truth) {
    IterationTrace row;
    row.n = n;
    row.alpha_n = alpha_used;
    row.wall_ms = wall_ms;
    if (g_truth != nullptr) {
        row.rel_err = relative_error(*g_truth, g_row);
        row.ftr = ftr(*g_truth, g_row);
    } else {
        row.rel_err = kNaN;
        row.ftr = kNaN;
    }
    row.residual_rms = rms_norm(residual_field_from_reconstruction(h, k, g_row, eps).value);
    return row;
}

}  // namespace

RunResult run(const RunConfig& config, const Image& h, const Kernel& k, const Image* g_truth) {
    config.validate();
    if (g_truth != nullptr && !g_truth->same_shape(h)) {
        throw std::invalid_argument("shape mismatch between observed image and truth");
    }

    RunConfig cfg = config;
    RunResult result;
    result.resolved_alpha = kNaN;
    result.search_score = kNaN;

    if (cfg.alpha_policy.mode == AlphaPolicy::Mode::grid_search) {
        const AlphaSearchResult found =
            search_alpha(h, k, cfg.alpha_policy.search, cfg.algorithm, cfg.p, cfg.eps);
        cfg.alpha_policy = AlphaPolicy::constant(found.alpha);
        result.resolved_alpha = found.alpha;
        result.search_score = found.score;
    } else if (cfg.alpha_policy.mode == AlphaPolicy::Mode::constant) {
        result.resolved_alpha = cfg.alpha_policy.alpha;
    }

    const WeightField rho0 = initial_weight(h, k, cfg.eps);
    result.trace.reserve(static_cast<std::size_t>(cfg.iterations));

    const bool image_space =
        cfg.algorithm == Algorithm::rl || cfg.algorithm == Algorithm::von_neumann;

    if (image_space) {
        Image g = mul(h, rho0);
        for (int n = 1; n <= cfg.iterations; ++n) {
            const auto start = std::chrono::steady_clock::now();
            g = (cfg.algorithm == Algorithm::rl) ? rl_standard_step(g, h, k, cfg.eps)
                                                 : von_neumann_step(g, h, k);
            const double ms = elapsed_ms(start);
            result.trace.push_back(make_row(n, 0.0, ms, g, h, k, cfg.eps, g_truth));
        }
        result.finite = is_finite(g);
        result.reconstruction = std::move(g);
        return result;
    }

    if (cfg.algorithm == Algorithm::cauchy20) {
        IterationState state{rho0, rho0, 1, h, k};
        for (int n = 1; n <= cfg.iterations; ++n) {
            state.n = n;
            const double alpha_n = cfg.alpha_policy.value_at(n);
            const auto start = std::chrono::steady_clock::now();
            WeightField next = cauchy_pure_step(state, alpha_n);
            const double ms = elapsed_ms(start);
            state.rho_prev = std::move(next);
            const Image g_row = mul(h, state.rho_prev);
            result.trace.push_back(make_row(n, alpha_n, ms, g_row, h, k, cfg.eps, g_truth));
        }
        result.finite = is_finite(state.rho_prev);
        result.reconstruction = mul(h, state.rho_prev);
        return result;
    }

    // Two-step variants: row 1 is the bootstrap rho_1 = rho_0, row m >= 2 is
    // produced with formula index m-1.
    IterationState state{rho0, rho0, 1, h, k};
    for (int m = 1; m <= cfg.iterations; ++m) {
        if (m == 1) {
            result.trace.push_back(
                make_row(1, 0.0, 0.0, mul(h, state.rho_curr), h, k, cfg.eps, g_truth));
            continue;
        }
        state.n = m - 1;
        if (cfg.collapse_indices) {
            state.rho_prev = state.rho_curr;
        }
        const double alpha_n = cfg.alpha_policy.value_at(state.n);
        const auto start = std::chrono::steady_clock::now();
        WeightField next =
            (cfg.algorithm == Algorithm::cauchy25)
                ? cauchy_accel_step(state, alpha_n, cfg.eps)
                : cauchy_noise_suppressed_step(state, alpha_n, cfg.p, cfg.eps);
        const double ms = elapsed_ms(start);
        state.rho_prev = std::move(state.rho_curr);
        state.rho_curr = std::move(next);
        const Image g_row = mul(h, state.rho_curr);
        result.trace.push_back(make_row(m, alpha_n, ms, g_row, h, k, cfg.eps, g_truth));
    }
    result.finite = is_finite(state.rho_curr);
    result.reconstruction = mul(h, state.rho_curr);
    return result;
}

}  // namespace csdeconv
