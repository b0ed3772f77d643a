#include "qam/mean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qam/errors.hpp"

namespace qam {

namespace {

void check_in_domain(const Generator& g, double x) {
    if (!g.domain.contains_closure(x) || !g.evaluable_at(x))
        throw DomainError("sample value " + std::to_string(x) +
                          " outside the domain of '" + g.label + "'");
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> values_, std::vector<double> weights_)
    : values(std::move(values_)), weights(std::move(weights_)) {
    if (values.empty() || values.size() != weights.size())
        throw DomainError("sample needs n >= 1 values with matching weights");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw DomainError("weights must be strictly positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DomainError("weights must sum to 1 (got " + std::to_string(sum) + ")");
    for (double& w : weights) w /= sum;
}

WeightedSample::WeightedSample(std::vector<double> values_)
    : WeightedSample(values_, std::vector<double>(values_.size(),
                                                  1.0 / values_.size())) {}

double qa_mean(const Generator& g, const WeightedSample& sample) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        check_in_domain(g, sample.values[i]);
        acc += sample.weights[i] * g.eval(sample.values[i]);
    }
    const double m = g.inverse(acc);
    // Internality can be violated only by rounding; clamp it back.
    const auto [lo, hi] =
        std::minmax_element(sample.values.begin(), sample.values.end());
    return std::clamp(m, *lo, *hi);
}

double exp_mean(double s, const WeightedSample& sample) {
    if (s == 0.0)
        return std::inner_product(sample.values.begin(), sample.values.end(),
                                  sample.weights.begin(), 0.0);
    double shift = -std::numeric_limits<double>::infinity();
    for (double a : sample.values) shift = std::max(shift, s * a);
    double acc = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i)
        acc += sample.weights[i] * std::exp(s * sample.values[i] - shift);
    return (shift + std::log(acc)) / s;
}

double power_mean(double s, const WeightedSample& sample) {
    for (double a : sample.values)
        if (!(a > 0.0))
            throw DomainError("power mean requires strictly positive values");
    if (s == 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i)
            acc += sample.weights[i] * std::log(sample.values[i]);
        return std::exp(acc);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i)
        acc += sample.weights[i] * std::pow(sample.values[i], s);
    return std::pow(acc, 1.0 / s);
}

double two_point_mean(const Generator& g, double z, double x, double theta) {
    check_in_domain(g, z);
    check_in_domain(g, x);
    if (theta < 0.0 || theta > 1.0)
        throw DomainError("theta must lie in [0, 1]");
    if (theta == 0.0) return x;
    if (theta == 1.0) return z;
    const double m = g.inverse(theta * g.eval(z) + (1.0 - theta) * g.eval(x));
    return std::clamp(m, std::min(x, z), std::max(x, z));
}

}  // namespace qam
