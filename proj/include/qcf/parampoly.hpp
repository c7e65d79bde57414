#pragma once

#include "qcf/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcf {

/* The parameter set is fixed: a, b, c. No dynamic symbol table. */
enum class Param { a = 0, b = 1, c = 2 };

inline char param_name(Param p)
{
    switch (p) {
        case Param::a: return 'a';
        case Param::b: return 'b';
        case Param::c: return 'c';
    }
    return '?';
}

/* Exponent vector of a monomial a^ea b^eb c^ec. Exponents are signed:
 * Laurent intermediates such as (-a^{-1}b)_k are legal, but any reported
 * result must have cleared its negative powers. Ordering is lexicographic
 * in (ea, eb, ec), which is also the mismatch-reporting order. */
struct ExpVec {
    int ea = 0;
    int eb = 0;
    int ec = 0;

    friend constexpr auto operator<=>(const ExpVec&, const ExpVec&) = default;

    constexpr ExpVec operator+(const ExpVec& o) const
    {
        return {ea + o.ea, eb + o.eb, ec + o.ec};
    }
    constexpr int degree() const { return ea + eb + ec; }
    constexpr bool nonnegative() const { return ea >= 0 && eb >= 0 && ec >= 0; }

    constexpr int get(Param p) const
    {
        return p == Param::a ? ea : p == Param::b ? eb : ec;
    }
    constexpr void set(Param p, int v)
    {
        (p == Param::a ? ea : p == Param::b ? eb : ec) = v;
    }
    static constexpr ExpVec unit(Param p, int e = 1)
    {
        ExpVec v;
        v.set(p, e);
        return v;
    }
};

/* Laurent polynomial in {a,b,c} over Rational. Terms are kept sorted by
 * exponent vector with no zero coefficients, so equality is structural. */
class ParamPoly {
public:
    using Term = std::pair<ExpVec, Rational>;

    ParamPoly() = default;

    static ParamPoly constant(Rational v)
    {
        ParamPoly p;
        if (v != 0) p.terms_.emplace_back(ExpVec{}, std::move(v));
        return p;
    }
    static ParamPoly monomial(Rational v, ExpVec e)
    {
        ParamPoly p;
        if (v != 0) p.terms_.emplace_back(e, std::move(v));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == ExpVec{});
    }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational constant_value() const { return coeff(ExpVec{}); }

    Rational coeff(ExpVec e) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const ExpVec& k) { return t.first < k; });
        if (it != terms_.end() && it->first == e) return it->second;
        return Rational(0);
    }

    bool exponents_nonnegative() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.first.nonnegative(); });
    }

    int max_degree() const
    {
        int d = 0;
        for (const Term& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }

    /* *this += s * x^shift * o, as one sorted merge. */
    void add_scaled(const ParamPoly& o, const Rational& s, ExpVec shift = {})
    {
        if (o.terms_.empty() || s == 0) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                merged.emplace_back(std::move(terms_[i++]));
                continue;
            }
            ExpVec ko = o.terms_[j].first + shift;
            if (i == terms_.size() || ko < terms_[i].first) {
                Rational v = o.terms_[j].second * s;
                if (v != 0) merged.emplace_back(ko, std::move(v));
                ++j;
            } else if (terms_[i].first < ko) {
                merged.emplace_back(std::move(terms_[i++]));
            } else {
                Rational v = terms_[i].second + o.terms_[j].second * s;
                if (v != 0) merged.emplace_back(ko, std::move(v));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
    }

    /* *this += x * y. Iterates the smaller factor. */
    void add_product(const ParamPoly& x, const ParamPoly& y)
    {
        if (x.terms_.empty() || y.terms_.empty()) return;
        const ParamPoly& small = x.size() <= y.size() ? x : y;
        const ParamPoly& large = x.size() <= y.size() ? y : x;
        for (const Term& t : small.terms_) add_scaled(large, t.second, t.first);
    }

    ParamPoly& operator+=(const ParamPoly& o)
    {
        add_scaled(o, Rational(1));
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o)
    {
        add_scaled(o, Rational(-1));
        return *this;
    }
    ParamPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
        } else {
            for (Term& t : terms_) t.second *= s;
        }
        return *this;
    }

    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y)
    {
        ParamPoly r;
        r.add_product(x, y);
        return r;
    }

    void negate()
    {
        for (Term& t : terms_) t.second = -t.second;
    }
    ParamPoly operator-() const
    {
        ParamPoly p = *this;
        p.negate();
        return p;
    }

    /* Quotient-ring truncation: drop every term of total degree > maxdeg. */
    void cap_degree(int maxdeg)
    {
        std::erase_if(terms_, [maxdeg](const Term& t) { return t.first.degree() > maxdeg; });
    }

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const Term& t : terms_) {
            if (!out.empty()) out += " + ";
            out += fraction_string(t.second);
            for (Param p : {Param::a, Param::b, Param::c}) {
                int e = t.first.get(p);
                if (e != 0) {
                    out += '*';
                    out += param_name(p);
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

private:
    std::vector<Term> terms_;
};

} // namespace qcf
