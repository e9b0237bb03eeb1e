#include "csdeconv/alpha_search.hpp"

#include <cmath>
#include <limits>

namespace csdeconv {

AlphaSearchResult search_alpha(const Image& h, const Kernel& k, const AlphaSearchConfig& cfg,
                               Algorithm algo, double p, double eps) {
    cfg.validate();

    AlphaSearchResult best;
    best.alpha = cfg.candidates.front();
    best.score = std::numeric_limits<double>::infinity();

    for (double candidate : cfg.candidates) {
        RunConfig probe;
        probe.algorithm = algo;
        probe.iterations = cfg.probe_iterations;
        probe.alpha_policy = AlphaPolicy::constant(candidate);
        probe.p = p;
        probe.eps = eps;

        const RunResult r = run(probe, h, k);
        double score = r.trace[static_cast<std::size_t>(cfg.score_at) - 1].residual_rms;
        if (!std::isfinite(score)) {
            score = std::numeric_limits<double>::infinity();
        }
        // Candidates are scanned in ascending order with a strict comparison,
        // so ties resolve to the smallest alpha.
        if (score < best.score) {
            best.alpha = candidate;
            best.score = score;
        }
    }
    return best;
}

}  // namespace csdeconv
