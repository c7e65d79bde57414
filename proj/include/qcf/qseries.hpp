#pragma once

#include "qcf/parampoly.hpp"

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcf {

/* Single monomial coeff * a^ea b^eb c^ec * q^qpow; the building block for
 * Pochhammer bases and product factors. */
struct Monomial {
    Rational coeff = 1;
    ExpVec exps{};
    int qpow = 0;
};

/* Truncated power series in q of fixed order N: coefficients of q^0..q^N
 * are tracked, everything above is discarded by every operation. The
 * coefficients are Laurent polynomials in the parameters a, b, c. */
class QSeries {
public:
    explicit QSeries(int order) : coeffs_(check_order(order) + 1) {}

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries constant(int order, Rational v)
    {
        QSeries s(order);
        s.coeffs_[0] = ParamPoly::constant(std::move(v));
        return s;
    }
    static QSeries one(int order) { return constant(order, Rational(1)); }
    static QSeries monomial(int order, const Monomial& m)
    {
        QSeries s(order);
        if (m.qpow < 0) throw std::domain_error("QSeries::monomial: negative q power");
        if (m.qpow <= order) s.coeffs_[m.qpow] = ParamPoly::monomial(m.coeff, m.exps);
        return s;
    }
    /* The bare parameter a, b or c as a series. */
    static QSeries parameter(int order, Param p)
    {
        return monomial(order, Monomial{Rational(1), ExpVec::unit(p), 0});
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const ParamPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    ParamPoly& at(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    bool is_zero() const
    {
        for (const ParamPoly& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /* q-valuation: index of the first nonzero coefficient, order+1 if none. */
    int valuation() const
    {
        for (int n = 0; n <= order(); ++n)
            if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) return n;
        return order() + 1;
    }

    QSeries& operator+=(const QSeries& o)
    {
        check_same_order(o);
        for (int n = 0; n <= order(); ++n) at(n) += o[n];
        return *this;
    }
    QSeries& operator-=(const QSeries& o)
    {
        check_same_order(o);
        for (int n = 0; n <= order(); ++n) at(n) -= o[n];
        return *this;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries& operator*=(const Rational& s)
    {
        for (ParamPoly& c : coeffs_) c *= s;
        return *this;
    }

    friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
    friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
    friend QSeries operator*(const QSeries& x, const QSeries& y)
    {
        x.check_same_order(y);
        const int N = x.order();
        QSeries r(N);
        for (int i = 0; i <= N; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j + i <= N; ++j) {
                if (y[j].is_zero()) continue;
                r.at(i + j).add_product(x[i], y[j]);
            }
        }
        return r;
    }
    friend QSeries operator*(QSeries x, const Rational& s) { return x *= s; }
    friend QSeries operator*(const Rational& s, QSeries x) { return x *= s; }
    QSeries operator-() const
    {
        QSeries r = *this;
        for (ParamPoly& c : r.coeffs_) c.negate();
        return r;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

    /* In-place multiplication by (1 + m). Walking q powers downward lets the
     * update read each source cell before it is written, except for qpow = 0
     * where the scaled copy is taken first. */
    void mul_one_plus(const Monomial& m)
    {
        if (m.qpow < 0) throw std::domain_error("mul_one_plus: negative q power");
        const int N = order();
        if (m.qpow > N) return;
        if (m.qpow == 0) {
            for (ParamPoly& c : coeffs_) {
                ParamPoly orig = c;
                c.add_scaled(orig, m.coeff, m.exps);
            }
            return;
        }
        for (int n = N; n >= m.qpow; --n)
            at(n).add_scaled(coeffs_[static_cast<std::size_t>(n - m.qpow)], m.coeff, m.exps);
    }
    void mul_one_minus(Monomial m)
    {
        m.coeff = -m.coeff;
        mul_one_plus(m);
    }

    /* In-place division by (1 - m), requiring the q power of m to be >= 1:
     * if u = v/(1-m) then u_n = v_n + m u_{n-qpow}, solved upward. */
    void div_one_minus(const Monomial& m)
    {
        if (m.qpow < 1) throw std::domain_error("div_one_minus: q power must be >= 1");
        const int N = order();
        for (int n = m.qpow; n <= N; ++n)
            at(n).add_scaled(coeffs_[static_cast<std::size_t>(n - m.qpow)], m.coeff, m.exps);
    }

    void cap_param_degree(int maxdeg)
    {
        for (ParamPoly& c : coeffs_) c.cap_degree(maxdeg);
    }

    bool exponents_nonnegative() const
    {
        for (const ParamPoly& c : coeffs_)
            if (!c.exponents_nonnegative()) return false;
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) throw std::invalid_argument("QSeries: order must be >= 0");
        return order;
    }
    void check_same_order(const QSeries& o) const
    {
        if (order() != o.order())
            throw std::invalid_argument("QSeries: operands have different truncation orders ("
                                        + std::to_string(order()) + " vs "
                                        + std::to_string(o.order()) + ")");
    }

    std::vector<ParamPoly> coeffs_;
};

/* Reciprocal series. The constant term must be a nonzero parameter-free
 * rational; with 1/(sum a_n q^n) = sum b_n q^n the coefficients satisfy
 * b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}. */
inline QSeries inverse(const QSeries& s)
{
    const ParamPoly& c0 = s[0];
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("inverse: constant term must be a nonzero rational");
    const Rational inv0 = Rational(1) / c0.constant_value();
    const int N = s.order();
    QSeries r(N);
    r.at(0) = ParamPoly::constant(inv0);
    for (int n = 1; n <= N; ++n) {
        ParamPoly acc;
        for (int k = 1; k <= n; ++k) acc.add_product(s[k], r[n - k]);
        acc *= -inv0;
        r.at(n) = std::move(acc);
    }
    return r;
}

/* q -> q^m. Terms pushed beyond the order are dropped. */
inline QSeries subst_q_power(const QSeries& s, int m)
{
    if (m < 1) throw std::invalid_argument("subst_q_power: exponent must be >= 1");
    const int N = s.order();
    QSeries r(N);
    for (int n = 0; n <= N && n * m <= N; ++n) r.at(n * m) = s[n];
    return r;
}

/* p -> p*q^m on one parameter: a^i q^n -> a^i q^{n+m*i}. A monomial whose
 * shifted q power would become negative is a domain error; powers pushed
 * beyond the order are dropped. */
inline QSeries subst_param_qshift(const QSeries& s, Param p, int m)
{
    const int N = s.order();
    QSeries r(N);
    for (int n = 0; n <= N; ++n) {
        for (const ParamPoly::Term& t : s[n].terms()) {
            const int nq = n + m * t.first.get(p);
            if (nq < 0)
                throw std::domain_error("subst_param_qshift: negative q power on "
                                        + std::string(1, param_name(p)) + "-shift");
            if (nq <= N) r.at(nq) += ParamPoly::monomial(t.second, t.first);
        }
    }
    return r;
}

/* Assign rational values to parameters. Every parameter that actually occurs
 * must be assigned; a negative exponent on a parameter assigned zero is a
 * domain error. */
inline QSeries specialize(const QSeries& s, const std::map<Param, Rational>& assignments)
{
    const int N = s.order();
    QSeries r(N);
    for (int n = 0; n <= N; ++n) {
        for (const ParamPoly::Term& t : s[n].terms()) {
            Rational v = t.second;
            for (Param p : {Param::a, Param::b, Param::c}) {
                const int e = t.first.get(p);
                if (e == 0) continue;
                auto it = assignments.find(p);
                if (it == assignments.end())
                    throw std::invalid_argument("specialize: parameter "
                                                + std::string(1, param_name(p))
                                                + " occurs but is not assigned");
                if (it->second == 0 && e < 0)
                    throw std::domain_error("specialize: negative exponent on parameter "
                                            + std::string(1, param_name(p)) + " assigned 0");
                v *= rational_pow(it->second, e);
            }
            r.at(n) += ParamPoly::constant(v);
        }
    }
    return r;
}

/* Multiply by q^m, dropping whatever leaves the window. */
inline QSeries q_shift(const QSeries& s, int m)
{
    if (m < 0) throw std::invalid_argument("q_shift: negative shift");
    const int N = s.order();
    QSeries r(N);
    for (int n = 0; n + m <= N; ++n) r.at(n + m) = s[n];
    return r;
}

/* Coefficient of a^ea b^eb c^ec q^n. */
inline Rational coeff_extract(const QSeries& s, int n, int ea, int eb, int ec = 0)
{
    if (n < 0 || n > s.order())
        throw std::invalid_argument("coeff_extract: q power out of range");
    return s[n].coeff(ExpVec{ea, eb, ec});
}

inline constexpr int pochhammer_infinite = -1;

/* Finite q-Pochhammer (z; q^step)_k = prod_{j=0}^{k-1} (1 - z q^{step j})
 * with z a monomial, truncated at the series order. k = pochhammer_infinite
 * multiplies factors until they no longer touch coefficients <= order, which
 * requires the q power of z to be >= 1. */
inline QSeries pochhammer(const Monomial& z, int k, int order, int step = 1)
{
    if (step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    if (z.qpow < 0) throw std::invalid_argument("pochhammer: base q power must be >= 0");
    if (k < 0 && k != pochhammer_infinite)
        throw std::invalid_argument("pochhammer: negative subscript");
    if (k == pochhammer_infinite && z.qpow < 1)
        throw std::domain_error("pochhammer: infinite product needs base q power >= 1");
    QSeries r = QSeries::one(order);
    for (int j = 0; k == pochhammer_infinite || j < k; ++j) {
        /* Factor q powers grow with j, so once past the order we are done. */
        const long e = static_cast<long>(z.qpow) + static_cast<long>(step) * j;
        if (e > order) break;
        r.mul_one_minus(Monomial{z.coeff, z.exps, static_cast<int>(e)});
    }
    return r;
}

/* Gaussian binomial C(k, j)_q, computed by the Pascal-style recurrence
 * C(k,j) = C(k-1,j-1) + q^j C(k-1,j); exact polynomial of degree j(k-j)
 * truncated at the series order. j > k yields the zero series. */
inline QSeries qbinomial(int k, int j, int order)
{
    if (k < 0 || j < 0) throw std::invalid_argument("qbinomial: negative argument");
    if (j > k) return QSeries::zero(order);
    j = std::min(j, k - j);
    std::vector<QSeries> row(static_cast<std::size_t>(j) + 1, QSeries::zero(order));
    row[0] = QSeries::one(order);
    for (int r = 1; r <= k; ++r) {
        /* Update in place, highest column first, so row[jj-1] still holds
         * the previous Pascal row when column jj is formed. */
        for (int jj = std::min(j, r); jj >= 1; --jj) {
            QSeries& cell = row[static_cast<std::size_t>(jj)];
            QSeries shifted(order);
            for (int n = 0; n + jj <= order; ++n) shifted.at(n + jj) = cell[n];
            cell = row[static_cast<std::size_t>(jj - 1)] + shifted;
        }
    }
    return row[static_cast<std::size_t>(j)];
}

/* prod over the exponent list of (1 + sign * x * q^e), with an optional
 * parameter multiplier x shared by all factors. Exponents beyond the order
 * contribute nothing and are skipped. */
inline QSeries product_build(const std::vector<int>& exponents, int sign,
                             std::optional<Param> x, int order)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("product_build: sign must be +-1");
    QSeries r = QSeries::one(order);
    for (int e : exponents) {
        if (e < 1) throw std::invalid_argument("product_build: exponents must be positive");
        if (e > order) continue;
        Monomial m{Rational(sign), x ? ExpVec::unit(*x) : ExpVec{}, e};
        r.mul_one_plus(m);
    }
    return r;
}

/* Exponent list helpers for the infinite products: every member of the
 * sequence that can touch coefficients <= order, plus the first one past it
 * (harmless for products, and it lets continued fractions built from these
 * lists prove their stabilization bound). */
inline std::vector<int> exps_arithmetic(int first, int step, int order)
{
    std::vector<int> v;
    for (long e = first;; e += step) {
        v.push_back(static_cast<int>(e));
        if (e > order) break;
    }
    return v;
}
inline std::vector<int> exps_range(int order) { return exps_arithmetic(1, 1, order); }
inline std::vector<int> exps_odd(int order) { return exps_arithmetic(1, 2, order); }
inline std::vector<int> exps_powers(int base, int order)
{
    std::vector<int> v;
    for (long e = 1;; e *= base) {
        v.push_back(static_cast<int>(e));
        if (e > order) break;
    }
    return v;
}
inline std::vector<int> exps_mod(int modulus, std::initializer_list<int> residues, int order)
{
    std::vector<int> v;
    for (int e = 1; e <= order; ++e) {
        for (int r : residues) {
            if (e % modulus == ((r % modulus) + modulus) % modulus) {
                v.push_back(e);
                break;
            }
        }
    }
    return v;
}

} // namespace qcf
