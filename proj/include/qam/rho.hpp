#pragma once

#include "qam/generator.hpp"
#include "qam/interval.hpp"

namespace qam {

struct OptimizerConfig {
    int grid_n = 64;            // x and z resolution
    int grid_m = 64;            // theta resolution
    double tol = 0.0;           // refinement step tolerance; 0 -> 1e-9 * |U|
    int max_refine_iters = 200; // cap on coordinate refinement passes
};

// Numerically measured distance between two quasi-arithmetic means. The
// value is a certified lower estimate of the true sup: every reported value
// is an actually attained |A[f]_theta(z,x) - A[g]_theta(z,x)|.
struct RhoEstimate {
    double value = 0.0;
    double x = 0.0;
    double z = 0.0;
    double theta = 0.5;
    double refinement_gap = 0.0;  // |last - previous refinement cycle|
    long long evaluations = 0;
    bool boundary_argmax = false;  // (x, z) argmax on the closure boundary
};

// Maximizes |A[f]_theta(z,x) - A[g]_theta(z,x)| over closure(U)^2 x
// [1e-6, 1-1e-6]: full grid scan, then coordinate-wise golden-section
// refinement from the best grid points. Deterministic for a fixed config;
// ties on the grid resolve to the lowest linear index.
RhoEstimate estimate_rho(const Generator& f, const Generator& g,
                         const Interval& U, const OptimizerConfig& cfg = {});

// Distance never increases under restriction: checks
// estimate_rho on V <= estimate_rho on U plus twice the refinement slack.
bool rho_restricted_monotone(const Generator& f, const Generator& g,
                             const Interval& U, const Interval& V,
                             const OptimizerConfig& cfg = {});

// The theta clip shared by the estimator and by every slice scan that must
// stay comparable with it.
inline constexpr double kThetaMin = 1e-6;

}  // namespace qam
