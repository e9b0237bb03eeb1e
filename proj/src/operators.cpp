#include "csdeconv/operators.hpp"

#include <stdexcept>

namespace csdeconv {

WeightField laplacian(const WeightField& f) {
    if (f.width < 3 || f.height < 3) {
        throw std::invalid_argument("laplacian requires a field of at least 3x3");
    }
    WeightField out(f.width, f.height);
    const int w = f.width;
    const int h = f.height;
    for (int y = 0; y < h; ++y) {
        const int ym = (y == 0) ? h - 1 : y - 1;
        const int yp = (y == h - 1) ? 0 : y + 1;
        for (int x = 0; x < w; ++x) {
            const int xm = (x == 0) ? w - 1 : x - 1;
            const int xp = (x == w - 1) ? 0 : x + 1;
            out.at(x, y) =
                f.at(xp, y) + f.at(xm, y) + f.at(x, yp) + f.at(x, ym) - 4.0 * f.at(x, y);
        }
    }
    return out;
}

LaplacianTerm normalized_laplacian_term(const WeightField& f, double p) {
    LaplacianTerm term;
    term.field = laplacian(f);
    term.norm = rms_norm(term.field);
    term.p = p;
    return term;
}

WeightField exp_limit_apply(const WeightField& f, double alpha, int n_steps) {
    if (n_steps < 1) {
        throw std::invalid_argument("exp_limit_apply requires n_steps >= 1");
    }
    const double a2 = alpha * alpha;
    WeightField rho = f;
    for (int m = 1; m <= n_steps; ++m) {
        rho = sub(rho, scale(laplacian(rho), a2 / static_cast<double>(m)));
    }
    return rho;
}

WeightField exp_limit_apply_uniform(const WeightField& f, double alpha, int n_steps) {
    if (n_steps < 1) {
        throw std::invalid_argument("exp_limit_apply_uniform requires n_steps >= 1");
    }
    const double factor = alpha * alpha / static_cast<double>(n_steps);
    WeightField rho = f;
    for (int m = 0; m < n_steps; ++m) {
        rho = sub(rho, scale(laplacian(rho), factor));
    }
    return rho;
}

Image von_neumann_step(const Image& g_n, const Image& h, const Kernel& k) {
    if (!g_n.same_shape(h)) {
        throw std::invalid_argument("shape mismatch between iterate and observed image");
    }
    return add(h, sub(g_n, convolve(g_n, k)));
}

}  // namespace csdeconv
