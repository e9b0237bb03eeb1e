#pragma once

#include "csdeconv/deconv.hpp"
#include "csdeconv/grid.hpp"

namespace csdeconv {

struct AlphaSearchResult {
    double alpha = 0.0;
    double score = 0.0;  // residual RMS at the scoring iteration
};

// Runs the selected algorithm for cfg.probe_iterations with each candidate as
// a constant alpha and scores it by the truth-free residual RMS at row
// cfg.score_at. Probes that go non-finite score +infinity, so the search is
// total. Ties resolve to the smallest alpha.
AlphaSearchResult search_alpha(const Image& h, const Kernel& k, const AlphaSearchConfig& cfg,
                               Algorithm algo, double p, double eps = 1e-12);

}  // namespace csdeconv
