#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace qcf {
namespace realeval {

/* Numeric continued fraction b0 + a1/(b1 + a2/(b2 + ...)); the generator
 * yields (a_k, b_k) for k >= 1. */
struct RealCF {
    double b0 = 0.0;
    std::function<std::pair<double, double>(int)> term;
    int depth = 0;
};

/* Forward three-term recurrence. Partial numerators such as (2k-1)^2 drive
 * P and Q polynomially-factorially large, so both are rescaled whenever they
 * pass 1e150; the ratio is unaffected. */
inline double eval_cf_real(const RealCF& cf, int depth, bool rescale = true)
{
    if (depth < 1) throw std::invalid_argument("eval_cf_real: depth must be >= 1");
    if (depth > cf.depth) throw std::invalid_argument("eval_cf_real: depth exceeds generator depth");
    double Pprev = 1.0, P = cf.b0;
    double Qprev = 0.0, Q = 1.0;
    for (int k = 1; k <= depth; ++k) {
        const auto [a, b] = cf.term(k);
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::domain_error("eval_cf_real: non-finite partial at depth " + std::to_string(k));
        const double Pn = b * P + a * Pprev;
        const double Qn = b * Q + a * Qprev;
        Pprev = P;
        P = Pn;
        Qprev = Q;
        Q = Qn;
        if (rescale) {
            const double m = std::max(std::fabs(P), std::fabs(Q));
            if (m > 1e150) {
                P /= m;
                Q /= m;
                Pprev /= m;
                Qprev /= m;
            }
        }
    }
    if (Q == 0.0) throw std::domain_error("eval_cf_real: zero denominator at requested depth");
    return P / Q;
}

/* pi = 4/(1 + 1^2/(2 + 3^2/(2 + 5^2/(2 + ...)))); the depth-D convergent is
 * the D-term Leibniz partial sum 4 * sum (-1)^k/(2k+1). */
inline RealCF pi_cf(int depth = 1 << 24)
{
    return RealCF{0.0,
                  [](int k) -> std::pair<double, double> {
                      if (k == 1) return {4.0, 1.0};
                      const double m = 2.0 * k - 3.0;
                      return {m * m, 2.0};
                  },
                  depth};
}

/* exp(z) = 1/(1 - z/(1+z - z/(2+z - 2z/(3+z - ...)))), the cleared form of
 * Euler's fraction for sum z^k/k!. */
inline RealCF exp_cf(double z, int depth = 1 << 24)
{
    return RealCF{0.0,
                  [z](int k) -> std::pair<double, double> {
                      if (k == 1) return {1.0, 1.0};
                      if (k == 2) return {-z, 1.0 + z};
                      return {-(k - 2) * z, (k - 1) + z};
                  },
                  depth};
}

/* log((1+z)/(1-z)) = 2z/(1 - z^2/(z^2+3 - (3z)^2/(3z^2+5 - ...))). */
inline RealCF log_cf(double z, int depth = 1 << 24)
{
    return RealCF{0.0,
                  [z](int k) -> std::pair<double, double> {
                      if (k == 1) return {2.0 * z, 1.0};
                      const double m = 2.0 * k - 3.0;
                      return {-(m * z) * (m * z), m * z * z + (2.0 * k - 1.0)};
                  },
                  depth};
}

/* K(q) = 1 + q/(1 + q^2/(1 + q^3/...)), the tail of the Rogers-Ramanujan
 * fraction R(q) = q^{1/5}/K(q). */
inline RealCF rr_tail_cf(double q, int depth = 1 << 24)
{
    return RealCF{1.0,
                  [q](int k) -> std::pair<double, double> {
                      return {std::pow(q, k), 1.0};
                  },
                  depth};
}

struct RRValue {
    double cf_value = 0.0;
    double product_value = 0.0;
};

/* R(q) both ways: through the fraction and through the modular product
 * q^{1/5} prod (1-q^{5n-4})(1-q^{5n-1}) / ((1-q^{5n-3})(1-q^{5n-2})),
 * multiplying factors until they are within 1e-17 of 1. */
inline RRValue rr_value(double q, int depth = 400)
{
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("rr_value: need 0 < q < 1");
    const double prefactor = std::pow(q, 0.2);
    RRValue out;
    out.cf_value = prefactor / eval_cf_real(rr_tail_cf(q, depth), depth);
    double prod = 1.0;
    for (int n = 1;; ++n) {
        const double f = (1.0 - std::pow(q, 5 * n - 4)) * (1.0 - std::pow(q, 5 * n - 1))
                         / ((1.0 - std::pow(q, 5 * n - 3)) * (1.0 - std::pow(q, 5 * n - 2)));
        prod *= f;
        if (std::fabs(f - 1.0) < 1e-17) break;
    }
    out.product_value = prefactor * prod;
    return out;
}

/* The three singular values with golden-ratio closed forms. */
enum class SingularCase { e_pi, e_2pi, e_4pi };

inline const char* singular_case_name(SingularCase c)
{
    switch (c) {
        case SingularCase::e_pi: return "e^-pi";
        case SingularCase::e_2pi: return "e^-2pi";
        case SingularCase::e_4pi: return "e^-4pi";
    }
    return "?";
}

struct SingularValueCase {
    SingularCase which;
    double q;
    double closed_form;
};

inline SingularValueCase singular_value_case(SingularCase which)
{
    const double pi = 3.14159265358979323846;
    const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
    const double phi32 = std::pow(phi, 1.5);
    const double root45 = std::pow(5.0, 0.25);
    switch (which) {
        case SingularCase::e_pi:
            return {which, std::exp(-pi), 0.5 * phi * (std::sqrt(5.0) - phi32) * (root45 + phi32)};
        case SingularCase::e_2pi:
            return {which, std::exp(-2.0 * pi), root45 * std::sqrt(phi) - phi};
        case SingularCase::e_4pi:
            return {which, std::exp(-4.0 * pi), 0.5 * phi * (std::sqrt(5.0) - phi32) * (-root45 + phi32)};
    }
    throw std::invalid_argument("singular_value_case: bad case");
}

struct SingularCheck {
    double cf_value = 0.0;
    double product_value = 0.0;
    double closed_form_value = 0.0;
    double max_delta = 0.0;
};

inline SingularCheck singular_value_check(SingularCase which, int depth = 200)
{
    const SingularValueCase c = singular_value_case(which);
    const RRValue rr = rr_value(c.q, depth);
    SingularCheck out{rr.cf_value, rr.product_value, c.closed_form, 0.0};
    out.max_delta = std::max({std::fabs(out.cf_value - out.product_value),
                              std::fabs(out.cf_value - out.closed_form_value),
                              std::fabs(out.product_value - out.closed_form_value)});
    return out;
}

} // namespace realeval
} // namespace qcf
