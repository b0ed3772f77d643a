#pragma once

#include <vector>

#include "qam/generator.hpp"

namespace qam {

// An n-tuple of sample values with positive weights summing to one.
// Weight vectors off by at most 1e-9 are renormalized; anything worse is
// rejected as bad input rather than silently fixed.
struct WeightedSample {
    std::vector<double> values;
    std::vector<double> weights;

    WeightedSample(std::vector<double> values_, std::vector<double> weights_);

    // Uniform weights 1/n.
    explicit WeightedSample(std::vector<double> values_);

    std::size_t size() const { return values.size(); }
};

// The quasi-arithmetic mean g^{-1}(sum_i w_i g(a_i)).
double qa_mean(const Generator& g, const WeightedSample& sample);

// The log-exp mean E^s: (1/s) ln(sum_i w_i e^{s a_i}), the weighted
// arithmetic mean when s = 0. Max-shifted so K|U| up to ~700 cannot
// overflow.
double exp_mean(double s, const WeightedSample& sample);

// The power mean (sum_i w_i a_i^s)^{1/s}, geometric mean when s = 0.
// Requires strictly positive values.
double power_mean(double s, const WeightedSample& sample);

// Two-point parametrized mean g^{-1}(theta*g(z) + (1-theta)*g(x)); the
// search space of the distance estimator.
double two_point_mean(const Generator& g, double z, double x, double theta);

}  // namespace qam
