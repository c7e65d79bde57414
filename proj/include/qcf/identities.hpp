#pragma once

#include "qcf/contfrac.hpp"
#include "qcf/partitions.hpp"
#include "qcf/qseries.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qcf {
namespace identities {

enum class Status { pass, fail, error };

inline const char* status_name(Status s)
{
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "?";
}

/* Location and exact values of the first disagreeing coefficient, ordered by
 * q power first and then lexicographically by (a, b, c) exponents. */
struct Mismatch {
    int q = 0;
    ExpVec exps{};
    Rational lhs, rhs;
};

struct IdentityReport {
    std::string id;
    Status status = Status::error;
    int order = 0;
    int depth = 0;
    std::optional<Mismatch> first_mismatch;
    std::int64_t elapsed_ms = 0;
    std::optional<std::uint64_t> seed; // recorded for randomized entries
    std::string message;               // cause when status == error
};

struct VerifyOptions {
    int order = 40;
    std::uint64_t seed = 1;
    int instances = 0;  // randomized entries; 0 = entry default
    bool corrupt = false; // harness self-test: perturb the RHS lane
};

enum class ParamMode { none, generic, randomized };

inline const char* param_mode_name(ParamMode m)
{
    switch (m) {
        case ParamMode::none: return "none";
        case ParamMode::generic: return "generic a,b";
        case ParamMode::randomized: return "randomized rationals";
    }
    return "?";
}

struct BuildCtx {
    int order = 0;
    int* depth = nullptr; // builders report the deepest convergent they used

    void note_depth(int d) const
    {
        if (depth && d > *depth) *depth = d;
    }
};

using SeriesBuilder = std::function<QSeries(const BuildCtx&)>;
/* Randomized entries draw one instance and return the first disagreeing
 * exact value pair, or nothing when the instance checks out. */
using RandomInstance = std::function<std::optional<std::pair<Rational, Rational>>(
    std::mt19937_64&, bool corrupt, const BuildCtx&)>;
using TableCheck = std::function<std::optional<Mismatch>(const BuildCtx&, bool corrupt)>;

struct IdentityCase {
    std::string id;
    std::string description;
    std::string reference; // the classical name of the result, not a citation
    ParamMode mode = ParamMode::none;
    int default_instances = 20;

    std::vector<std::pair<SeriesBuilder, SeriesBuilder>> pairs; // series comparisons
    RandomInstance instance;                                    // randomized comparisons
    TableCheck table;                                           // count-table comparisons
};

/* ---- randomized drawing ------------------------------------------------ */

namespace detail {

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline int draw_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/* Rationals with numerator and denominator magnitudes <= 9; values listed in
 * `reject` are redrawn (the "no denominator is zero" preconditions). */
inline Rational draw_rational(std::mt19937_64& rng, const std::vector<Rational>& reject)
{
    for (;;) {
        const int num = draw_int(rng, -9, 9);
        const int den = draw_int(rng, 1, 9);
        Rational r(num, den);
        if (std::find(reject.begin(), reject.end(), r) == reject.end()) return r;
    }
}

inline Rational series0_value(const QSeries& s)
{
    if (!s[0].is_constant()) throw std::logic_error("series0_value: parameter content");
    return s[0].constant_value();
}

/* Exact value of an order-0 fraction at full depth; nullopt when some Q
 * vanishes (the draw is then rejected). */
inline std::optional<Rational> cf_value_rational(const CFSpec& cf)
{
    ConvergentWalker w(cf);
    while (w.step()) {}
    const Rational q = series0_value(w.Q());
    if (q == 0) return std::nullopt;
    return series0_value(w.P()) / q;
}

} // namespace detail

/* ---- shared series builders -------------------------------------------- */

namespace builders {

inline QSeries qmono(int order, int e) { return QSeries::monomial(order, {Rational(1), {}, e}); }

/* 1/(q;q)_0 .. 1/(q;q)_kmax as an incrementally extended list. */
inline std::vector<QSeries> inv_qpoch_list(int kmax, int order)
{
    std::vector<QSeries> v;
    v.push_back(QSeries::one(order));
    for (int k = 1; k <= kmax; ++k) {
        QSeries next = v.back();
        if (k <= order) next.div_one_minus({Rational(1), {}, k});
        v.push_back(std::move(next));
    }
    return v;
}

/* sum_n q^{n^2 (+ n)} / (q;q)_n — the Rogers-Ramanujan sums. */
inline QSeries rr_sum(bool second, int order)
{
    QSeries total = QSeries::one(order);
    QSeries term = QSeries::one(order);
    for (int n = 1;; ++n) {
        const long e = static_cast<long>(n) * n + (second ? n : 0);
        if (e > order) break;
        const int delta = second ? 2 * n : 2 * n - 1;
        term = q_shift(term, delta);
        term.div_one_minus({Rational(1), {}, n});
        total += term;
    }
    return total;
}

/* sum_k a^k q^{k(k+1)/2} (-a^{-1} b q^{shift})_k / (q)_k  -- the convergent
 * numerator (shift = 0) and denominator (shift = 1) expansions. Built through
 * the Laurent intermediate: the Pochhammer factor alone carries negative
 * a-exponents which the a^k prefactor must clear. */
inline QSeries lemma_sum(int shift, int order)
{
    QSeries total = QSeries::zero(order);
    const auto ipoch = inv_qpoch_list(static_cast<int>(std::sqrt(2.0 * order)) + 2, order);
    for (int k = 0;; ++k) {
        const long e = static_cast<long>(k) * (k + 1) / 2;
        if (e > order) break;
        QSeries t = pochhammer(Monomial{Rational(-1), ExpVec{-1, 1, 0}, shift}, k, order);
        t *= QSeries::monomial(order, {Rational(1), ExpVec{k, 0, 0}, static_cast<int>(e)});
        t *= ipoch[static_cast<std::size_t>(k)];
        total += t;
    }
    if (!total.exponents_nonnegative())
        throw std::domain_error("lemma_sum: negative parameter exponents survived");
    return total;
}

/* sum_{i,j} a^i b^j q^{(i^2+i)/2 + ij + j^2 (+ j)} / ((q)_i (q)_j). */
inline QSeries double_sum(int extra_j, int order)
{
    QSeries total = QSeries::zero(order);
    const int cap = 2 * static_cast<int>(std::sqrt(static_cast<double>(order))) + 3;
    const auto ipoch = inv_qpoch_list(cap, order);
    for (int i = 0;; ++i) {
        const long base = static_cast<long>(i) * (i + 1) / 2;
        if (base > order) break;
        for (int j = 0;; ++j) {
            const long e = base + static_cast<long>(i) * j + static_cast<long>(j) * j
                           + static_cast<long>(extra_j) * j;
            if (e > order) break;
            QSeries t = ipoch[static_cast<std::size_t>(i)] * ipoch[static_cast<std::size_t>(j)];
            t *= QSeries::monomial(order, {Rational(1), ExpVec{i, j, 0}, static_cast<int>(e)});
            total += t;
        }
    }
    return total;
}

/* f(a q^ashift, c) = sum_k a^k q^{k(k-1)/2 + ashift*k} (-cq)_k / (q)_k. */
inline QSeries f_sum(int ashift, int order)
{
    QSeries total = QSeries::zero(order);
    const auto ipoch = inv_qpoch_list(static_cast<int>(std::sqrt(2.0 * order)) + ashift + 2, order);
    for (int k = 0;; ++k) {
        const long e = static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(ashift) * k;
        if (e > order) break;
        QSeries t = pochhammer(Monomial{Rational(-1), ExpVec{0, 0, 1}, 1}, k, order);
        t *= QSeries::monomial(order, {Rational(1), ExpVec{k, 0, 0}, static_cast<int>(e)});
        t *= ipoch[static_cast<std::size_t>(k)];
        total += t;
    }
    return total;
}

/* Value series of a telescoping-corollary fraction: Euler terms of the
 * telescoped sum for the given ascending part exponents (the list carries
 * one exponent past the order, which is what proves stabilization). */
inline QSeries corollary_cf_series(const std::vector<int>& exps, bool distinct, const BuildCtx& ctx)
{
    const int N = ctx.order;
    std::vector<QSeries> terms;
    terms.reserve(exps.size() + 1);
    terms.push_back(QSeries::one(N));
    int prev = 0;
    for (int e : exps) {
        QSeries t = e - prev > N ? QSeries::zero(N) : qmono(N, e - prev);
        if (distinct) {
            if (prev >= 1 && prev <= N) t.mul_one_plus({Rational(1), {}, prev});
        } else {
            if (e <= N) t.div_one_minus({Rational(1), {}, e});
        }
        terms.push_back(std::move(t));
        prev = e;
    }
    int depth = 0;
    QSeries v = eval_series(euler_cf_from_terms(terms), static_cast<int>(exps.size()) + 8, &depth);
    ctx.note_depth(depth);
    return v;
}

/* Stabilized convergent parts of a cataloged fraction with generic params. */
inline ConvergentPair stable_parts(const std::string& id, const BuildCtx& ctx)
{
    const int guard = default_depth_guard(ctx.order);
    CFSpec cf = build_catalog_cf(id, {}, guard + 1, ctx.order);
    ConvergentPair p = stable_convergent(cf, guard);
    ctx.note_depth(p.depth);
    return p;
}

inline QSeries catalog_cf_series(const std::string& id, CFParams params, const BuildCtx& ctx)
{
    const int guard = default_depth_guard(ctx.order);
    CFSpec cf = build_catalog_cf(id, std::move(params), guard + 1, ctx.order);
    int depth = 0;
    QSeries v = eval_series(cf, guard, &depth);
    ctx.note_depth(depth);
    return v;
}

/* b^2 -> -b on a series whose b-exponents are all even. */
inline QSeries halve_b_exponents(const QSeries& s)
{
    const int N = s.order();
    QSeries r(N);
    for (int n = 0; n <= N; ++n) {
        for (const auto& [e, c] : s[n].terms()) {
            if (e.eb % 2 != 0)
                throw std::domain_error("halve_b_exponents: odd b-exponent at q^"
                                        + std::to_string(n));
            ExpVec ne = e;
            ne.eb = e.eb / 2;
            r.at(n) += ParamPoly::monomial(ne.eb % 2 == 0 ? c : -c, ne);
        }
    }
    return r;
}

/* The three-parameter fraction needs the doubly truncated ring: its partial
 * numerators carry the (a,b)-degree, not a q power, so convergents converge
 * in total parameter degree. Working mod q^{N+1} and mod degree T = 2N+2,
 * the depth-(T/2+1) convergent is final: successive-convergent differences
 * are homogeneous of degree 2 per level. Both cross products P*D and Q*N'
 * against the corrected product forms live in the same quotient ring. */
struct ThreeParamSides {
    int order = -1;
    QSeries lhs = QSeries(0), rhs = QSeries(0);
    int depth = 0;
};

inline const ThreeParamSides& three_param_sides(int order)
{
    thread_local ThreeParamSides memo;
    if (memo.order == order) return memo;
    const int N = order;
    const int T = 2 * N + 2;
    const int depth = T / 2 + 1;
    CFSpec cf = build_catalog_cf("THREE_PARAM", {}, depth, N);

    QSeries Pprev = QSeries::one(N), P = cf.b0;
    QSeries Qprev = QSeries::zero(N), Q = QSeries::one(N);
    for (int k = 1; k <= depth; ++k) {
        const auto& [a, b] = cf.partials[static_cast<std::size_t>(k - 1)];
        QSeries Pn = b * P;
        Pn += a * Pprev;
        Pn.cap_param_degree(T);
        QSeries Qn = b * Q;
        Qn += a * Qprev;
        Qn.cap_param_degree(T);
        Pprev = std::move(P);
        P = std::move(Pn);
        Qprev = std::move(Q);
        Q = std::move(Qn);
    }
    auto apply_products = [&](QSeries s, int residue) {
        for (int m = 1; 4 * m - residue <= N; ++m) {
            const int e = 4 * m - residue;
            s.mul_one_minus({Rational(1), ExpVec{2, 0, 0}, e});
            s.cap_param_degree(T);
            s.mul_one_minus({Rational(1), ExpVec{0, 2, 0}, e});
            s.cap_param_degree(T);
        }
        return s;
    };
    memo.lhs = apply_products(std::move(P), 1); // P * prod(1 - a^2 q^{4m-1})(1 - b^2 q^{4m-1})
    memo.rhs = apply_products(std::move(Q), 3); // Q * prod(1 - a^2 q^{4m-3})(1 - b^2 q^{4m-3})
    memo.depth = depth;
    memo.order = order;
    return memo;
}

} // namespace builders

/* ---- verification engine ------------------------------------------------ */

namespace detail {

inline std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs)
{
    const int N = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= N; ++n) {
        if (lhs[n] == rhs[n]) continue;
        const auto& lt = lhs[n].terms();
        const auto& rt = rhs[n].terms();
        std::size_t i = 0, j = 0;
        while (i < lt.size() || j < rt.size()) {
            if (j == rt.size() || (i < lt.size() && lt[i].first < rt[j].first)) {
                return Mismatch{n, lt[i].first, lt[i].second, Rational(0)};
            }
            if (i == lt.size() || rt[j].first < lt[i].first) {
                return Mismatch{n, rt[j].first, Rational(0), rt[j].second};
            }
            if (lt[i].second != rt[j].second)
                return Mismatch{n, lt[i].first, lt[i].second, rt[j].second};
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

inline void corrupt_series(QSeries& s)
{
    const int n = s.order() >= 1 ? 1 : 0;
    s.at(n) += ParamPoly::constant(Rational(1));
}

inline IdentityReport run_case(const IdentityCase& c, const VerifyOptions& opt)
{
    IdentityReport rep;
    rep.id = c.id;
    rep.order = opt.order;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (!c.pairs.empty()) {
            BuildCtx ctx{opt.order, &rep.depth};
            rep.status = Status::pass;
            for (const auto& [lhs_b, rhs_b] : c.pairs) {
                QSeries lhs = lhs_b(ctx);
                QSeries rhs = rhs_b(ctx);
                if (opt.corrupt) corrupt_series(rhs);
                if (auto mm = first_mismatch(lhs, rhs)) {
                    rep.status = Status::fail;
                    rep.first_mismatch = std::move(mm);
                    break;
                }
            }
        } else if (c.instance) {
            rep.seed = opt.seed;
            const int count = opt.instances > 0 ? opt.instances : c.default_instances;
            BuildCtx ctx{opt.order, &rep.depth};
            rep.status = Status::pass;
            for (int i = 0; i < count; ++i) {
                std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL
                                    ^ detail::fnv1a(c.id) ^ static_cast<std::uint64_t>(i));
                if (auto bad = c.instance(rng, opt.corrupt, ctx)) {
                    rep.status = Status::fail;
                    rep.first_mismatch = Mismatch{0, {}, bad->first, bad->second};
                    break;
                }
            }
        } else if (c.table) {
            BuildCtx ctx{opt.order, &rep.depth};
            if (auto mm = c.table(ctx, opt.corrupt)) {
                rep.status = Status::fail;
                rep.first_mismatch = std::move(mm);
            } else {
                rep.status = Status::pass;
            }
        } else {
            throw std::logic_error("identity case has no checker");
        }
    } catch (const std::exception& e) {
        rep.status = Status::error;
        rep.message = e.what();
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace detail

const std::vector<IdentityCase>& catalog();

inline const IdentityCase& find_case(const std::string& id)
{
    for (const IdentityCase& c : catalog())
        if (c.id == id) return c;
    std::string valid;
    for (const IdentityCase& c : catalog()) {
        if (!valid.empty()) valid += ", ";
        valid += c.id;
    }
    throw std::invalid_argument("unknown identity id '" + id + "'; valid ids: " + valid);
}

inline IdentityReport verify_identity(const std::string& id, const VerifyOptions& opt = {})
{
    if (opt.order < 0) throw std::invalid_argument("verify_identity: negative order");
    return detail::run_case(find_case(id), opt);
}

inline std::vector<IdentityReport> verify_all(const VerifyOptions& opt = {}, bool parallel = false,
                                              const std::set<std::string>& corrupt_ids = {})
{
    const auto& cases = catalog();
    std::vector<IdentityReport> reports(cases.size());
    auto run_one = [&](std::size_t i) {
        VerifyOptions o = opt;
        o.corrupt = opt.corrupt || corrupt_ids.count(cases[i].id) > 0;
        reports[i] = detail::run_case(cases[i], o);
    };
    if (parallel) {
        std::vector<std::future<void>> futs;
        futs.reserve(cases.size());
        for (std::size_t i = 0; i < cases.size(); ++i)
            futs.push_back(std::async(std::launch::async, run_one, i));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    }
    /* catalog() is kept id-sorted; keep the output deterministic anyway */
    std::sort(reports.begin(), reports.end(),
              [](const IdentityReport& x, const IdentityReport& y) { return x.id < y.id; });
    return reports;
}

inline std::vector<std::tuple<std::string, std::string, std::string>> list_identities()
{
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const IdentityCase& c : catalog()) out.emplace_back(c.id, c.description, c.reference);
    return out;
}

} // namespace identities
} // namespace qcf

#include "qcf/identity_catalog.hpp"
