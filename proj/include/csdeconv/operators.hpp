#pragma once

#include "csdeconv/fourier.hpp"
#include "csdeconv/grid.hpp"

namespace csdeconv {

// Raw Laplacian of a field together with the RMS norm used to scale it.
// Consumers divide the field by max(norm^p, eps) so the near-zero-norm case
// is handled in exactly one place.
struct LaplacianTerm {
    WeightField field;  // laplacian(f)
    double norm = 0.0;  // rms_norm(field)
    double p = 1.0;     // normalization exponent
};

// 5-point stencil with periodic wrap:
//   L(x,y) = f(x+1,y) + f(x-1,y) + f(x,y+1) + f(x,y-1) - 4 f(x,y)
// Requires a field of at least 3x3.
WeightField laplacian(const WeightField& f);

LaplacianTerm normalized_laplacian_term(const WeightField& f, double p);

// Applies rho <- rho - (alpha^2 / m) * laplacian(rho) for step indices
// m = 1..n_steps. This is the factored form of the exponential-limit
// operator; on a Laplacian eigenmode with L f = -lambda f the accumulated
// multiplier is the product over m of (1 + alpha^2 lambda / m).
WeightField exp_limit_apply(const WeightField& f, double alpha, int n_steps);

// Uniform-step variant: applies (I - (alpha^2 / n_steps) L) n_steps times,
// realizing the (1 + alpha^2 lambda / n)^n -> exp(alpha^2 lambda) limit
// per eigenmode.
WeightField exp_limit_apply_uniform(const WeightField& f, double alpha, int n_steps);

// Partial-sum recurrence of the operator series: g' = h + g - k*g.
Image von_neumann_step(const Image& g_n, const Image& h, const Kernel& k);

}  // namespace csdeconv
