#pragma once

#include "qam/generator.hpp"
#include "qam/interval.hpp"
#include "qam/numeric.hpp"

namespace qam {

// Result of a *-norm computation: sup over x, y of |integral of u from x
// to y|, equivalently the oscillation (max - min) of any antiderivative.
struct StarNormResult {
    enum class Method { Oscillation, Grid };

    double value = 0.0;
    double arg_x = 0.0;  // the pair achieving the sup
    double arg_y = 0.0;
    Method method = Method::Grid;
};

// *-norm of a continuous integrand on V. The antiderivative W is tabulated
// by composite Simpson quadrature on a refining grid until successive
// oscillation values agree to 1e-10 relative.
StarNormResult star_norm(const Fn1& u, const Interval& V);

// *-norm of the Arrow-Pratt index of f over V. Quadrature-free: the
// antiderivative of f''/f' is ln|f'|, so the norm is the oscillation of
// t -> ln|f'(t)|. V is intersected with the generator's scan domain.
StarNormResult star_norm_ap(const Generator& f, const Interval& V);

// *-norm of A f - A g over V: oscillation of ln|f'| - ln|g'|.
StarNormResult star_norm_ap_diff(const Generator& f, const Generator& g,
                                 const Interval& V);

// One of the n equal-length partition cells V of U with
// star_norm(u, V) >= star_norm(u, U) / n; the cell with the largest norm
// is returned, lowest index winning ties.
Interval partition_subinterval(const Fn1& u, const Interval& U, int n);

}  // namespace qam
