#pragma once

#include "qcf/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcf {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Finite continued fraction b0 + a1/(b1 + a2/(b2 + ...)) over the series
 * ring. All component series share one truncation order. */
struct CFSpec {
    QSeries b0;
    std::vector<std::pair<QSeries, QSeries>> partials; // (a_k, b_k), k = 1..depth

    explicit CFSpec(QSeries lead) : b0(std::move(lead)) {}

    int order() const { return b0.order(); }
    int depth() const { return static_cast<int>(partials.size()); }

    void push(QSeries a, QSeries b)
    {
        if (a.order() != order() || b.order() != order())
            throw std::invalid_argument("CFSpec: partials must share the leading term's order");
        partials.emplace_back(std::move(a), std::move(b));
    }
};

struct ConvergentPair {
    QSeries P, Q;
    int depth = 0;
};

/* Iterative three-term recurrence
 *   P_k = b_k P_{k-1} + a_k P_{k-2},  Q_k = b_k Q_{k-1} + a_k Q_{k-2}
 * seeded P_{-1} = 1, P_0 = b0, Q_{-1} = 0, Q_0 = 1. Memory stays linear in
 * the order, independent of depth. */
class ConvergentWalker {
public:
    explicit ConvergentWalker(const CFSpec& cf)
        : cf_(cf),
          Pprev_(QSeries::one(cf.order())),
          P_(cf.b0),
          Qprev_(QSeries::zero(cf.order())),
          Q_(QSeries::one(cf.order()))
    {
    }

    int depth() const { return k_; }
    const QSeries& P() const { return P_; }
    const QSeries& Q() const { return Q_; }
    const QSeries& P_prev() const { return Pprev_; }
    const QSeries& Q_prev() const { return Qprev_; }

    bool step()
    {
        if (k_ >= cf_.depth()) return false;
        const auto& [a, b] = cf_.partials[static_cast<std::size_t>(k_)];
        QSeries Pn = b * P_;
        Pn += a * Pprev_;
        QSeries Qn = b * Q_;
        Qn += a * Qprev_;
        Pprev_ = std::move(P_);
        P_ = std::move(Pn);
        Qprev_ = std::move(Q_);
        Q_ = std::move(Qn);
        ++k_;
        return true;
    }

private:
    const CFSpec& cf_;
    QSeries Pprev_, P_, Qprev_, Q_;
    int k_ = 0;
};

inline ConvergentPair convergent(const CFSpec& cf, int n)
{
    if (n < 0 || n > cf.depth())
        throw std::invalid_argument("convergent: depth " + std::to_string(n)
                                    + " out of range (cf depth " + std::to_string(cf.depth()) + ")");
    ConvergentWalker w(cf);
    for (int k = 0; k < n; ++k) w.step();
    return {w.P(), w.Q(), n};
}

/* Euler's continued fraction for the sum of running products: the returned
 * fraction's depth-k convergent equals sum_{j<=k} prod_{i<=j} t_i. With
 * b0 = t_0, a_1 = t_0 t_1, b_1 = 1 and a_k = -t_k, b_k = 1 + t_k the
 * recurrence keeps Q identically 1 and P equal to the partial sums. */
inline CFSpec euler_cf_from_terms(const std::vector<QSeries>& terms)
{
    if (terms.empty()) throw std::invalid_argument("euler_cf_from_terms: no terms");
    CFSpec cf(terms[0]);
    const int N = cf.order();
    if (terms.size() > 1) cf.push(terms[0] * terms[1], QSeries::one(N));
    for (std::size_t k = 2; k < terms.size(); ++k)
        cf.push(-terms[k], QSeries::one(N) + terms[k]);
    return cf;
}

inline CFSpec euler_cf_from_terms(const std::vector<Rational>& terms)
{
    std::vector<QSeries> series;
    series.reserve(terms.size());
    for (const Rational& t : terms) series.push_back(QSeries::constant(0, t));
    return euler_cf_from_terms(series);
}

/* Equivalence transformation: a_k -> c_k c_{k-1} a_k, b_k -> c_k b_k with
 * c_0 = 1. Every convergent ratio P_n/Q_n is unchanged. Scales must be
 * invertible, i.e. carry a nonzero rational constant term. */
inline CFSpec equivalence_transform(const CFSpec& cf, const std::vector<QSeries>& scales)
{
    if (static_cast<int>(scales.size()) != cf.depth())
        throw std::invalid_argument("equivalence_transform: need one scale per partial");
    for (const QSeries& c : scales)
        if (c[0].is_zero() || !c[0].is_constant())
            throw std::domain_error("equivalence_transform: scale with non-invertible constant term");
    CFSpec out(cf.b0);
    const QSeries one = QSeries::one(cf.order());
    for (int k = 1; k <= cf.depth(); ++k) {
        const QSeries& ck = scales[static_cast<std::size_t>(k - 1)];
        const QSeries& ckm1 = k >= 2 ? scales[static_cast<std::size_t>(k - 2)] : one;
        const auto& [a, b] = cf.partials[static_cast<std::size_t>(k - 1)];
        out.push(ck * ckm1 * a, ck * b);
    }
    return out;
}

inline CFSpec equivalence_transform(const CFSpec& cf, const std::vector<Rational>& scales)
{
    std::vector<QSeries> s;
    s.reserve(scales.size());
    for (const Rational& c : scales) s.push_back(QSeries::constant(cf.order(), c));
    return equivalence_transform(cf, s);
}

inline int default_depth_guard(int order) { return order + 8; }

/* Truncated-series value of the fraction. Successive convergents satisfy
 *   P_n Q_{n-1} - P_{n-1} Q_n = (-1)^{n-1} prod_{k<=n} a_k,
 * so with unit-constant Q's the convergents at depths n and n+1 agree on
 * every coefficient <= N exactly when the accumulated q-valuation of the
 * partial numerators a_1..a_{n+1} exceeds N. The first such n is returned
 * as P_n * Q_n^{-1}. */
inline QSeries eval_series(const CFSpec& cf, int depth_guard = -1, int* depth_used = nullptr)
{
    const int N = cf.order();
    if (depth_guard < 0) depth_guard = default_depth_guard(N);
    if (cf.depth() == 0) {
        if (depth_used) *depth_used = 0;
        return cf.b0;
    }
    long cumval = 0;
    int stable_at = -1;
    for (int k = 1; k <= cf.depth(); ++k) {
        const int v = cf.partials[static_cast<std::size_t>(k - 1)].first.valuation();
        cumval += v;
        if (cumval > N) {
            stable_at = k - 1;
            break;
        }
        if (k - 1 > depth_guard) break;
    }
    if (stable_at < 0 || stable_at > depth_guard)
        throw convergence_error("eval_series: no stabilization within depth guard "
                                + std::to_string(depth_guard));
    ConvergentWalker w(cf);
    for (int k = 0; k < stable_at; ++k) w.step();
    if (depth_used) *depth_used = stable_at;
    return w.P() * inverse(w.Q());
}

/* Stabilized convergent numerator and denominator: walks until one step
 * leaves both P and Q unchanged, which for fractions whose a_k and b_k - 1
 * have q-valuation >= k is the truncated limit pair. */
inline ConvergentPair stable_convergent(const CFSpec& cf, int depth_guard = -1)
{
    const int N = cf.order();
    if (depth_guard < 0) depth_guard = default_depth_guard(N);
    ConvergentWalker w(cf);
    while (w.depth() < depth_guard) {
        if (!w.step())
            throw convergence_error("stable_convergent: fraction exhausted before stabilizing");
        if (w.P() == w.P_prev() && w.Q() == w.Q_prev())
            return {w.P(), w.Q(), w.depth() - 1};
    }
    throw convergence_error("stable_convergent: no stabilization within depth guard "
                            + std::to_string(depth_guard));
}

/* --- the displayed fractions ------------------------------------------ */

struct CFParams {
    std::optional<QSeries> a, b, c;
    std::vector<QSeries> terms; // substitution sequence a_1..a_n for the telescoping theorems
};

namespace detail {

inline QSeries param_or(const std::optional<QSeries>& v, Param p, int order)
{
    if (v) {
        if (v->order() != order)
            throw std::invalid_argument("build_catalog_cf: parameter series order mismatch");
        return *v;
    }
    return QSeries::parameter(order, p);
}

inline QSeries qpow(int order, int e) { return QSeries::monomial(order, Monomial{Rational(1), {}, e}); }

} // namespace detail

/* Construct a cataloged fraction with exactly the partial numerators and
 * denominators of its display (after the documented corrections), at the
 * requested depth and truncation order.
 *
 *   R_AB        1 + bq/(1+aq + bq^2/(1+aq^2 + ...))
 *   F_AC        1+a + acq/(1+aq + acq^2/(1+aq^2 + ...))
 *   RR_K        1 + q/(1 + q^2/(1 + q^3/...))
 *   R1B         R_AB at a = 1
 *   R1B_Q2      1 + bq/(1+q^2 + bq^3/(1+q^4 + ...))
 *   CF_37A      R1B_Q2 at b = 1
 *   GG_38       1+q + q^2/(1+q^3 + q^4/(1+q^5 + ...))
 *   THREE_PARAM 1-ab + (a-bq)(b-aq)/((1-ab)(1+q^2) + (a-bq^3)(b-aq^3)/(...))
 *   THM_2_1     1/(1 - a1/(1 - (1-a1)a2/(a1+a2-a1a2 - a1(1-a2)a3/(...))))
 *   THM_2_2     1/(1 - a1/(1+a1 - (1+a1)a2/(a1+a2+a1a2 - a1(1+a2)a3/(...))))
 */
inline CFSpec build_catalog_cf(const std::string& id, const CFParams& params, int depth, int order)
{
    using detail::qpow;
    if (depth < 0 || order < 0) throw std::invalid_argument("build_catalog_cf: negative depth/order");
    const QSeries one = QSeries::one(order);

    if (id == "R_AB" || id == "R1B") {
        const QSeries a = id == "R1B" ? one : detail::param_or(params.a, Param::a, order);
        const QSeries b = detail::param_or(params.b, Param::b, order);
        CFSpec cf(one);
        for (int k = 1; k <= depth; ++k)
            cf.push(b * qpow(order, k), one + a * qpow(order, k));
        return cf;
    }
    if (id == "F_AC") {
        const QSeries a = detail::param_or(params.a, Param::a, order);
        const QSeries c = detail::param_or(params.c, Param::c, order);
        CFSpec cf(one + a);
        for (int k = 1; k <= depth; ++k)
            cf.push(a * c * qpow(order, k), one + a * qpow(order, k));
        return cf;
    }
    if (id == "RR_K") {
        CFSpec cf(one);
        for (int k = 1; k <= depth; ++k) cf.push(qpow(order, k), one);
        return cf;
    }
    if (id == "R1B_Q2" || id == "CF_37A") {
        const QSeries b = id == "CF_37A" ? one : detail::param_or(params.b, Param::b, order);
        CFSpec cf(one);
        for (int k = 1; k <= depth; ++k)
            cf.push(b * qpow(order, 2 * k - 1), one + qpow(order, 2 * k));
        return cf;
    }
    if (id == "GG_38") {
        CFSpec cf(one + qpow(order, 1));
        for (int k = 1; k <= depth; ++k)
            cf.push(qpow(order, 2 * k), one + qpow(order, 2 * k + 1));
        return cf;
    }
    if (id == "THREE_PARAM") {
        const QSeries a = detail::param_or(params.a, Param::a, order);
        const QSeries b = detail::param_or(params.b, Param::b, order);
        const QSeries lead = one - a * b;
        CFSpec cf(lead);
        for (int k = 1; k <= depth; ++k) {
            const QSeries num =
                (a - b * qpow(order, 2 * k - 1)) * (b - a * qpow(order, 2 * k - 1));
            cf.push(num, lead * (one + qpow(order, 2 * k)));
        }
        return cf;
    }
    if (id == "THM_2_1" || id == "THM_2_2") {
        /* Substitution of the sequence a_1..a_n into the telescoping
         * theorems, in the fraction's cleared (denominator-free) shape. */
        const auto& t = params.terms;
        if (t.empty()) throw std::invalid_argument("build_catalog_cf: " + id + " needs terms");
        for (const QSeries& s : t)
            if (s.order() != order) throw std::invalid_argument("build_catalog_cf: term order mismatch");
        const bool plus = id == "THM_2_2";
        const int n = static_cast<int>(t.size());
        CFSpec cf(QSeries::zero(order));
        auto term = [&](int i) -> const QSeries& { return t[static_cast<std::size_t>(i - 1)]; };
        cf.push(one, one);
        if (n >= 1) cf.push(-term(1), plus ? one + term(1) : one);
        for (int k = 3; k <= n + 1; ++k) {
            /* numerator -a_{k-3} (1 -+ a_{k-2}) a_{k-1} with a_0 = 1 */
            const QSeries mid = plus ? one + term(k - 2) : one - term(k - 2);
            QSeries num = mid * term(k - 1);
            if (k >= 4) num *= term(k - 3);
            num = -num;
            /* denominator a_{k-2} + a_{k-1} -+ a_{k-2} a_{k-1} */
            QSeries den = term(k - 2) + term(k - 1);
            if (plus)
                den += term(k - 2) * term(k - 1);
            else
                den -= term(k - 2) * term(k - 1);
            cf.push(std::move(num), std::move(den));
        }
        return cf;
    }
    throw std::invalid_argument("build_catalog_cf: unknown id '" + id + "'");
}

inline const std::vector<std::string>& catalog_cf_ids()
{
    static const std::vector<std::string> ids = {
        "CF_37A", "F_AC", "GG_38", "R1B", "R1B_Q2", "RR_K", "R_AB",
        "THM_2_1", "THM_2_2", "THREE_PARAM",
    };
    return ids;
}

} // namespace qcf
