#include "qam/generator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qam/dual.hpp"
#include "qam/numeric.hpp"

namespace qam {

namespace {

constexpr int kValidationGrid = 1024;

bool finite_triplet(const Generator& g, double x) {
    return std::isfinite(g.eval(x)) && std::isfinite(g.d1(x)) &&
           std::isfinite(g.d2(x));
}

// Establishes scan_domain and the endpoint-extension flags, then verifies
// strict monotonicity on the validation grid and fixes the sign.
void finalize(Generator& g) {
    const double margin = 1e-9 * g.domain.length();
    g.extends_lo = finite_triplet(g, g.domain.lo) && g.d1(g.domain.lo) != 0.0;
    g.extends_hi = finite_triplet(g, g.domain.hi) && g.d1(g.domain.hi) != 0.0;
    const double slo = g.extends_lo ? g.domain.lo : g.domain.lo + margin;
    const double shi = g.extends_hi ? g.domain.hi : g.domain.hi - margin;
    g.scan_domain = Interval(slo, shi, true, true);

    const int n = kValidationGrid;
    const double h = (shi - slo) / (n - 1);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) {
        const double x = slo + i * h;
        d[i] = g.d1(x);
        if (!std::isfinite(d[i]) || !std::isfinite(g.eval(x)))
            throw NotAGeneratorError("'" + g.label +
                                     "': non-finite value on the domain interior");
        if (d[i] == 0.0)
            throw NotAGeneratorError("'" + g.label +
                                     "': derivative vanishes on the domain");
    }
    for (int i = 1; i < n; ++i)
        if ((d[i] > 0.0) != (d[0] > 0.0))
            throw NotAGeneratorError("'" + g.label +
                                     "': derivative changes sign on the domain");
    // A smooth derivative can dip through zero, or a pole can slip between
    // grid points leaving finite samples of one sign. Refine every interior
    // local extremum of |d1| and compare against the local magnitude.
    for (int i = 1; i + 1 < n; ++i) {
        const double lo_mag = std::abs(d[i - 1]);
        const double hi_mag = std::abs(d[i + 1]);
        if (std::abs(d[i]) <= lo_mag && std::abs(d[i]) <= hi_mag) {
            auto [_, m] = golden_min([&](double x) { return std::abs(g.d1(x)); },
                                     slo + (i - 1) * h, slo + (i + 1) * h, h * 1e-12);
            if (m < 1e-9 * std::max(lo_mag, hi_mag))
                throw NotAGeneratorError("'" + g.label +
                                         "': derivative vanishes on the domain");
        }
        if (std::abs(d[i]) >= lo_mag && std::abs(d[i]) >= hi_mag) {
            auto [_, m] = golden_max([&](double x) { return std::abs(g.d1(x)); },
                                     slo + (i - 1) * h, slo + (i + 1) * h, h * 1e-12);
            if (!std::isfinite(m) || m > 1e6 * std::max(lo_mag, hi_mag))
                throw NotAGeneratorError("'" + g.label +
                                         "': derivative blows up inside the domain");
        }
    }
    g.sign = d[0] > 0.0 ? +1 : -1;
}

Generator make_power(double s, const Interval& domain) {
    if (domain.lo < 0.0 || (domain.lo == 0.0 && domain.lo_closed))
        throw DomainError("power generator requires a domain inside (0, inf)");
    Generator g;
    g.domain = domain;
    if (s == 0.0) {
        g.eval = [](double x) { return std::log(x); };
        g.d1 = [](double x) { return 1.0 / x; };
        g.d2 = [](double x) { return -1.0 / (x * x); };
        g.inverse = [](double y) { return std::exp(y); };
    } else {
        g.eval = [s](double x) { return std::pow(x, s); };
        g.d1 = [s](double x) { return s * std::pow(x, s - 1.0); };
        g.d2 = [s](double x) { return s * (s - 1.0) * std::pow(x, s - 2.0); };
        g.inverse = [s](double y) { return std::pow(y, 1.0 / s); };
    }
    return g;
}

Generator make_exp(double s, const Interval& domain) {
    Generator g;
    g.domain = domain;
    if (s == 0.0) {
        g.eval = [](double x) { return x; };
        g.d1 = [](double) { return 1.0; };
        g.d2 = [](double) { return 0.0; };
        g.inverse = [](double y) { return y; };
    } else {
        g.eval = [s](double x) { return std::exp(s * x); };
        g.d1 = [s](double x) { return s * std::exp(s * x); };
        g.d2 = [s](double x) { return s * s * std::exp(s * x); };
        g.inverse = [s](double y) { return std::log(y) / s; };
    }
    return g;
}

std::string trim_number(double v) {
    std::string s = std::to_string(v);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

}  // namespace

Generator make_builtin(const BuiltinFamily& family, const Interval& domain) {
    Generator g;
    switch (family.kind) {
        case BuiltinFamily::Kind::Power:
            g = make_power(family.s, domain);
            g.label = "pow:" + trim_number(family.s);
            break;
        case BuiltinFamily::Kind::Exp:
            g = make_exp(family.s, domain);
            g.label = "exp:" + trim_number(family.s);
            break;
        case BuiltinFamily::Kind::Identity:
            g = make_exp(0.0, domain);
            g.label = "id";
            break;
        case BuiltinFamily::Kind::Log:
            g = make_power(0.0, domain);
            g.label = "log";
            break;
        case BuiltinFamily::Kind::Expression:
            return parse_generator(family.expression, domain);
    }
    finalize(g);
    return g;
}

Generator parse_generator(const std::string& expression, const Interval& domain) {
    const Expr::Ptr ast = parse_expression(expression);
    if (!ast->depends_on_x())
        throw NotAGeneratorError("'" + expression + "': constant expression");

    Generator g;
    g.domain = domain;
    g.label = "expr:" + expression;
    g.eval = [ast](double x) { return ast->eval<double>(x); };
    g.d1 = [ast](double x) { return ast->eval(Dual2::variable(x)).d1; };
    g.d2 = [ast](double x) { return ast->eval(Dual2::variable(x)).d2; };
    finalize(g);

    // Bisection inverse over the scan bracket. Values a hair outside the
    // sampled range (quadrature round-off) are clamped back to an endpoint.
    const double a = g.scan_domain.lo;
    const double b = g.scan_domain.hi;
    const double fa = g.eval(a);
    const double fb = g.eval(b);
    const double xtol = 1e-13 * domain.length();
    const double ytol = 1e-9 * std::abs(fb - fa);
    const auto eval = g.eval;
    const int sign = g.sign;
    g.inverse = [=](double y) {
        const double ylo = sign > 0 ? fa : fb;
        const double yhi = sign > 0 ? fb : fa;
        if (y < ylo || y > yhi) {
            if (y >= ylo - ytol && y <= yhi + ytol)
                return y < ylo ? (sign > 0 ? a : b) : (sign > 0 ? b : a);
            throw DomainError("inverse target outside the generator range");
        }
        return bisect_root([&](double x) { return eval(x) - y; }, a, b, xtol);
    };
    return g;
}

Generator make_from_spec(const std::string& spec, const Interval& domain) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail =
        colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    auto param = [&]() {
        try {
            std::size_t used = 0;
            const double v = std::stod(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
            return v;
        } catch (const std::exception&) {
            throw DomainError("bad parameter in generator spec '" + spec + "'");
        }
    };
    if (head == "exp") return make_builtin(BuiltinFamily::exp(param()), domain);
    if (head == "pow") return make_builtin(BuiltinFamily::power(param()), domain);
    if (head == "id") return make_builtin(BuiltinFamily::identity(), domain);
    if (head == "log") return make_builtin(BuiltinFamily::log(), domain);
    if (head == "expr") return parse_generator(tail, domain);
    throw DomainError("unknown generator spec '" + spec + "'");
}

double arrow_pratt(const Generator& g, double x) {
    const double d = g.d1(x);
    if (d == 0.0)
        throw NotAGeneratorError("'" + g.label + "': derivative vanishes at x = " +
                                 std::to_string(x));
    return g.d2(x) / d;
}

Generator affine_transform(const Generator& g, double alpha, double beta) {
    if (alpha == 0.0) throw DomainError("affine transform requires alpha != 0");
    Generator out;
    out.domain = g.domain;
    out.label = "affine(" + g.label + ")";
    const auto eval = g.eval;
    const auto d1 = g.d1;
    const auto d2 = g.d2;
    const auto inv = g.inverse;
    out.eval = [=](double x) { return alpha * eval(x) + beta; };
    out.d1 = [=](double x) { return alpha * d1(x); };
    out.d2 = [=](double x) { return alpha * d2(x); };
    out.inverse = [=](double y) { return inv((y - beta) / alpha); };
    finalize(out);
    return out;
}

Generator restrict_to(const Generator& g, const Interval& sub) {
    if (!sub.subset_of(g.domain))
        throw DomainError("restriction interval not contained in the domain of '" +
                          g.label + "'");
    Generator out = g;
    out.domain = sub;
    finalize(out);
    return out;
}

Generator affine_normalize(const Generator& g, const Interval& target) {
    const double fa = g.eval(g.scan_domain.lo);
    const double fb = g.eval(g.scan_domain.hi);
    const double alpha = target.length() / (fb - fa);
    const double beta = target.lo - alpha * fa;
    return affine_transform(g, alpha, beta);
}

bool validate_monotone(const Generator& g, int n) {
    const double a = g.scan_domain.lo;
    const double h = g.scan_domain.length() / (n - 1);
    for (int i = 0; i < n; ++i)
        if (!(g.sign * g.d1(a + i * h) > 0.0)) return false;
    return true;
}

}  // namespace qam
