#pragma once

#include <map>
#include <string>
#include <vector>

#include "qam/generator.hpp"
#include "qam/interval.hpp"
#include "qam/rho.hpp"
#include "qam/star_norm.hpp"

namespace qam {

// Constants of the cubic lower bound, derived by maximizing
// C -> C^3 / (3072 e^C (e^C - 1)). The literature prints them only as
// unresolved placeholders; the anchoring check is that y0 reproduces the
// worked value 5.71442e-8 for (eps, K, |U|) = (5, 20, 1).
struct EstimConstants {
    double C0 = 0.0;
    double y0 = 0.0;  // maximal value of the map, at C0
    double y1 = 0.0;  // 1 / (384 e^{C0/2} (e^{C0/2} - 1))
};

EstimConstants compute_estim_constants();

// A verified (phi, K, delta)-separation witness: a closed subinterval V of
// length phi on which |A f| <= K, |A g| <= K and |A f - A g| >= delta, with
// the worst-case margins of the three inequalities on a verification grid.
struct SeparationCertificate {
    Interval V{0.0, 1.0};
    double phi = 0.0;
    double K = 0.0;
    double delta = 0.0;
    double margin_K_f = 0.0;
    double margin_K_g = 0.0;
    double margin_delta = 0.0;
    bool separated = false;
};

// One bound evaluation inside a report.
struct BoundEntry {
    std::string name;
    double value = 0.0;
    bool lower = false;
    bool applicable = true;
    std::string reason;  // filled when not applicable
    std::map<std::string, double> params;
};

struct BoundReport {
    std::string label_f;
    std::string label_g;
    Interval U{0.0, 1.0};
    double K = 0.0;        // grid-sup of max(|A f|, |A g|)
    double epsilon = 0.0;  // ||A f - A g||_*
    RhoEstimate rho;
    std::vector<BoundEntry> bounds;
    double lower_max = 0.0;
    double upper_min = 0.0;
    bool sandwich_ok = true;
};

struct PalesCheck {
    bool satisfied = false;
    bool vacuous = false;         // no admissible triples on the grid
    double max_deviation = 0.0;   // largest sampled ratio difference
    long long triples = 0;
};

// Closed-form bound formulas as pure functions of their parameters. The
// generator-facing operations below measure the parameters and delegate
// here; tests exercise both layers.
namespace formulas {

// min of the two sup operands at a given (c, delta).
double main_operand_min(double eps, double K, double lenU, double star_f,
                        double c, double delta);

// sup over c in [0,1], delta in (0, eps/(4K)) of main_operand_min.
double main_sup_lower(double eps, double K, double lenU, double star_f);

// eps (e^{eps/4}-1)(e^{eps/6}-1) / (16 K e^{star_f} (e^{K|U|}-1)).
double main_lower(double eps, double K, double lenU, double star_f);

// Case split at K|U| = C0/2: y1 eps^3 / K below, y0 eps^3/(|U|^3 K^4) above.
double estim_lower(double eps, double K, double lenU, const EstimConstants& c);

// alpha = (e^{-K phi/2}-1)/K - (e^{(delta-K) phi/2}-1)/(K-delta), with the
// removable singularity at delta = K replaced by its limit.
double box_alpha(double phi, double K, double delta);

// (1/K) ln(1 + K alpha).
double box_lower(double phi, double K, double delta);

// (1/K) ln(1 + (delta/K) Theta(K phi / 2)), Theta(x) = 1 - e^-x - x e^-x.
double box_lower_simplified(double phi, double K, double delta);

// The two universal upper bounds for generators with |A f| <= K:
// (1/K) ln((e^{K|U|}+1)/2) and (3+7e)/6 K |U|^2.
std::pair<double, double> universal_upper(double K, double lenU);

// |U| e^{star_f} (e^{eps} - 1), one direction of the *-norm upper bound.
double star_norm_upper(double lenU, double star_f, double eps);

}  // namespace formulas

// Grid-sup of max(|A f|, |A g|) over U (clipped to the scan domains).
double measure_K(const Generator& f, const Generator& g, const Interval& U);

// sup-norm of f^{-1} - g^{-1} after normalizing both generators to
// increasing bijections of [0, 1]; scaled back by |U|. The scan uses the
// same theta window [1e-6, 1-1e-6] as the distance estimator, keeping the
// two measurements comparable point-for-point.
double cargo_shisha_lower(const Generator& f, const Generator& g);

struct CargoShishaUpper {
    double value = 0.0;
    bool applicable = true;
    std::string reason;
    double inv_d1_sup = 0.0;  // sup |(f^{-1})'| on the normalized square
    double diff_sup = 0.0;    // sup |f - g| there
};

// 2 ||(f^{-1})'||_inf ||f - g||_inf on normalized generators, scaled by
// |U|. Flagged not applicable when the derivative sup does not stabilize
// under grid refinement or the generators do not extend to the closure.
CargoShishaUpper cargo_shisha_upper(const Generator& f, const Generator& g);

// Grid evidence for the three-point-ratio sufficient condition: samples
// |ratio_f - ratio_g| over triples with |x - z| >= alpha and reports
// whether every sample stayed below C. Advisory only - never part of the
// sandwich assertion.
PalesCheck pales_sufficient_check(const Generator& f, const Generator& g,
                                  const Interval& U, double alpha, double C,
                                  int grid = 48);

struct DirectionalBound {
    double value = 0.0;  // the sharper direction
    double forward = 0.0;
    double swapped = 0.0;
};

// |U| e^{||A f||_*} (e^{||A g - A f||_*} - 1), both orientations, min.
DirectionalBound upper_star_norm(const Generator& f, const Generator& g,
                                 const Interval& U);

// Both universal upper bounds evaluated at the measured K.
std::pair<double, double> upper_universal(double K, double lenU);

// Lower bounds from the *-norm of A f - A g, symmetrized over f <-> g.
double lower_main(const Generator& f, const Generator& g, const Interval& U);
double lower_main_sup(const Generator& f, const Generator& g, const Interval& U);
double lower_estim(const Generator& f, const Generator& g, const Interval& U);

// Scans subintervals with endpoints on a phi_grid lattice and returns the
// certificate maximizing the simplified box bound; no-separation (all
// delta = 0) yields certificate.separated = false and bound 0.
SeparationCertificate find_separation(const Generator& f, const Generator& g,
                                      const Interval& U, int phi_grid = 64);

double box_lower(const SeparationCertificate& cert);
double box_lower_simplified(const SeparationCertificate& cert);

// Measures K, epsilon and rho, evaluates every applicable bound, and
// checks the sandwich max(lower) <= rho <= min(upper).
BoundReport full_report(const Generator& f, const Generator& g,
                        const Interval& U, const OptimizerConfig& cfg = {});

}  // namespace qam
