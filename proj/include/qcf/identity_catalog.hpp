#pragma once

#include "qcf/identities.hpp"

namespace qcf {
namespace identities {

namespace detail {

using builders::qmono;

/* --- randomized instances ------------------------------------------------ */

inline RandomInstance euler_finite_instance()
{
    return [](std::mt19937_64& rng, bool corrupt,
              const BuildCtx& ctx) -> std::optional<std::pair<Rational, Rational>> {
        const int n = draw_int(rng, 0, 10);
        std::vector<Rational> a;
        a.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) a.push_back(draw_rational(rng, {Rational(-1)}));
        std::vector<QSeries> terms;
        terms.reserve(a.size());
        for (const Rational& x : a) terms.push_back(QSeries::constant(0, x));
        const CFSpec cf = euler_cf_from_terms(terms);
        ctx.note_depth(cf.depth());
        ConvergentWalker w(cf);
        Rational partial(0), running(1);
        for (int k = 0; k <= n; ++k) {
            if (k > 0) w.step();
            running *= a[static_cast<std::size_t>(k)];
            partial += running;
            const Rational q = series0_value(w.Q());
            if (q == 0) return std::make_pair(Rational(0), partial);
            Rational got = series0_value(w.P()) / q;
            Rational expect = partial;
            if (corrupt && k == n) expect += 1;
            if (got != expect) return std::make_pair(got, expect);
        }
        return std::nullopt;
    };
}

inline RandomInstance telescope_instance(bool plus)
{
    return [plus](std::mt19937_64& rng, bool corrupt,
                  const BuildCtx&) -> std::optional<std::pair<Rational, Rational>> {
        const int n = draw_int(rng, 1, 8);
        const std::vector<Rational> reject =
            plus ? std::vector<Rational>{} : std::vector<Rational>{Rational(1)};
        std::vector<Rational> a;
        for (int i = 0; i < n; ++i) a.push_back(draw_rational(rng, reject));
        Rational lhs(1), rhs(1);
        if (plus) {
            /* 1 + a1 + a2(1+a1) + ... + an(1+a1)...(1+a_{n-1}) == prod (1+a_i) */
            Rational prefix(1);
            for (int k = 1; k <= n; ++k) {
                lhs += a[static_cast<std::size_t>(k - 1)] * prefix;
                prefix *= 1 + a[static_cast<std::size_t>(k - 1)];
            }
            rhs = prefix;
        } else {
            /* 1 + sum a_k/prod_{j<=k}(1-a_j) == 1/prod (1-a_j) */
            Rational denom(1);
            for (int k = 1; k <= n; ++k) {
                denom *= 1 - a[static_cast<std::size_t>(k - 1)];
                lhs += a[static_cast<std::size_t>(k - 1)] / denom;
            }
            rhs = Rational(1) / denom;
        }
        if (corrupt) rhs += 1;
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    };
}

inline RandomInstance telescoping_theorem_instance(bool plus)
{
    return [plus](std::mt19937_64& rng, bool corrupt,
                  const BuildCtx& ctx) -> std::optional<std::pair<Rational, Rational>> {
        const std::vector<Rational> reject =
            plus ? std::vector<Rational>{Rational(0), Rational(-1)}
                 : std::vector<Rational>{Rational(0), Rational(1)};
        for (int attempt = 0; attempt < 200; ++attempt) {
            const int n = draw_int(rng, 1, 8);
            std::vector<Rational> a;
            for (int i = 0; i < n; ++i) a.push_back(draw_rational(rng, reject));

            Rational prod(1);
            for (const Rational& x : a) prod *= plus ? Rational(1) + x : Rational(1) - x;
            Rational target = plus ? prod : Rational(1) / prod;
            if (corrupt) target += 1;

            /* route 1: the theorem's cleared fraction */
            CFParams params;
            for (const Rational& x : a) params.terms.push_back(QSeries::constant(0, x));
            const CFSpec cleared = build_catalog_cf(plus ? "THM_2_2" : "THM_2_1", params, 0, 0);
            const auto v1 = cf_value_rational(cleared);
            if (!v1) continue; // zero denominator: rejected draw
            ctx.note_depth(cleared.depth());

            /* route 2: Euler fraction of the telescoped sum, pushed through a
             * random equivalence transformation */
            std::vector<Rational> terms{Rational(1)};
            for (int k = 1; k <= n; ++k) {
                const Rational& ak = a[static_cast<std::size_t>(k - 1)];
                if (k == 1) {
                    terms.push_back(plus ? ak : Rational(ak / (1 - ak)));
                    continue;
                }
                const Rational& prev = a[static_cast<std::size_t>(k - 2)];
                terms.push_back(plus ? Rational(ak * (1 + prev) / prev)
                                     : Rational(ak / (prev * (1 - ak))));
            }
            const CFSpec euler = euler_cf_from_terms(terms);
            std::vector<Rational> scales;
            for (int k = 0; k < euler.depth(); ++k)
                scales.push_back(draw_rational(rng, {Rational(0)}));
            const auto v2 = cf_value_rational(equivalence_transform(euler, scales));
            if (!v2) continue;

            if (*v1 != target) return std::make_pair(*v1, target);
            if (*v2 != target) return std::make_pair(*v2, target);
            return std::nullopt;
        }
        throw std::runtime_error("telescoping theorem: no admissible draw in 200 attempts");
    };
}

/* --- colored partition tables -------------------------------------------- */

inline TableCheck colored_table(bool denominator)
{
    return [denominator](const BuildCtx& ctx, bool corrupt) -> std::optional<Mismatch> {
        using partitions::ColoredVariant;
        using partitions::count_colored;
        const int nmax = std::min(ctx.order, 25);
        const ColoredVariant A = denominator ? ColoredVariant::AD : ColoredVariant::AN;
        const ColoredVariant B = denominator ? ColoredVariant::BD : ColoredVariant::BN;
        const ColoredVariant C = denominator ? ColoredVariant::CD : ColoredVariant::CN;
        bool corrupted = false;
        for (int n = 0; n <= nmax; ++n) {
            for (int i = 0; i <= 4; ++i) {
                for (int j = 0; j <= 4; ++j) {
                    const auto av = count_colored(A, n, i, j);
                    auto bv = count_colored(B, n, i, j);
                    const auto cv = count_colored(C, n, i, j);
                    if (corrupt && !corrupted) {
                        ++bv;
                        corrupted = true;
                    }
                    if (av != bv || bv != cv)
                        return Mismatch{n, ExpVec{i, j, 0}, Rational(av),
                                        Rational(av != bv ? bv : cv)};
                }
            }
        }
        /* generating-function tie against the double-sum expansion */
        const QSeries ds = builders::double_sum(denominator ? 1 : 0, nmax);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int n = 0; n <= nmax; ++n) {
                    const Rational coeff = coeff_extract(ds, n, i, j);
                    const Rational cnt(count_colored(B, n, i, j));
                    if (coeff != cnt) return Mismatch{n, ExpVec{i, j, 0}, cnt, coeff};
                }
        return std::nullopt;
    };
}

/* --- corollary entries ----------------------------------------------------
 * The fraction side substitutes the part exponents into the telescoping
 * theorems (as the Euler fraction of the telescoped sum); the product side
 * is built directly. */
inline IdentityCase corollary_case(std::string id, std::string description, std::string reference,
                                   std::function<std::vector<int>(int)> exps, bool distinct)
{
    IdentityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.reference = std::move(reference);
    c.mode = ParamMode::none;
    SeriesBuilder lhs = [exps, distinct](const BuildCtx& ctx) {
        return builders::corollary_cf_series(exps(ctx.order), distinct, ctx);
    };
    SeriesBuilder rhs = [exps, distinct](const BuildCtx& ctx) {
        const QSeries prod = product_build(exps(ctx.order), distinct ? +1 : -1, std::nullopt, ctx.order);
        return distinct ? prod : inverse(prod);
    };
    c.pairs.emplace_back(std::move(lhs), std::move(rhs));
    return c;
}

inline IdentityCase series_case(std::string id, std::string description, std::string reference,
                                ParamMode mode, SeriesBuilder lhs, SeriesBuilder rhs)
{
    IdentityCase c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.reference = std::move(reference);
    c.mode = mode;
    c.pairs.emplace_back(std::move(lhs), std::move(rhs));
    return c;
}

inline std::vector<IdentityCase> make_catalog()
{
    using builders::catalog_cf_series;
    using builders::corollary_cf_series;
    using builders::double_sum;
    using builders::f_sum;
    using builders::lemma_sum;
    using builders::rr_sum;
    using builders::stable_parts;

    std::vector<IdentityCase> cat;

    cat.push_back(series_case(
        "CF_37A", "fraction with partials q^{2k-1}, 1+q^{2k} equals a mod-8 product ratio",
        "Gollnitz-style mod-8 product", ParamMode::none,
        [](const BuildCtx& ctx) { return catalog_cf_series("CF_37A", {}, ctx); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_mod(8, {2, 3, 7}, N), -1, std::nullopt, N)
                   * inverse(product_build(exps_mod(8, {1, 5, 6}, N), -1, std::nullopt, N));
        }));

    {
        IdentityCase c;
        c.id = "COLORED_DEN";
        c.description = "denominator statistics: AD = BD = CD and their generating function";
        c.reference = "Alladi-Gordon two-color partition theorem";
        c.mode = ParamMode::none;
        c.table = colored_table(true);
        cat.push_back(std::move(c));
    }
    {
        IdentityCase c;
        c.id = "COLORED_NUM";
        c.description = "numerator statistics: AN = BN = CN and their generating function";
        c.reference = "Alladi-Gordon two-color partition theorem";
        c.mode = ParamMode::none;
        c.table = colored_table(false);
        cat.push_back(std::move(c));
    }

    cat.push_back(corollary_case("COR_16", "unrestricted partitions: fraction vs 1/prod(1-q^i)",
                                 "Euler fraction, unrestricted parts",
                                 [](int N) { return exps_range(N); }, false));
    cat.push_back(corollary_case("COR_18", "distinct partitions: fraction vs prod(1+q^i)",
                                 "Euler fraction, distinct parts",
                                 [](int N) { return exps_range(N); }, true));
    cat.push_back(corollary_case("COR_20", "partitions into odd parts: fraction vs 1/prod(1-q^{2i-1})",
                                 "Euler fraction, odd parts",
                                 [](int N) { return exps_odd(N); }, false));
    cat.push_back(corollary_case("COR_22", "distinct odd parts: fraction vs prod(1+q^{2i-1})",
                                 "Euler fraction, distinct odd parts",
                                 [](int N) { return exps_odd(N); }, true));
    cat.push_back(corollary_case("COR_24", "binary partitions: fraction vs 1/prod(1-q^{2^i})",
                                 "Euler fraction, binary parts",
                                 [](int N) { return exps_powers(2, N); }, false));
    cat.push_back(corollary_case("COR_26", "distinct binary partitions: fraction vs prod(1+q^{2^i})",
                                 "Euler fraction, distinct powers of two",
                                 [](int N) { return exps_powers(2, N); }, true));
    cat.push_back(corollary_case("COR_26B", "distinct ternary partitions: fraction vs prod(1+q^{3^i})",
                                 "Euler fraction, distinct powers of three",
                                 [](int N) { return exps_powers(3, N); }, true));

    {
        IdentityCase c;
        c.id = "EULER_CF_FINITE";
        c.description = "depth-k convergents equal the partial sums of sum prod a_i";
        c.reference = "Euler's continued fraction";
        c.mode = ParamMode::randomized;
        c.default_instances = 20;
        c.instance = euler_finite_instance();
        cat.push_back(std::move(c));
    }

    cat.push_back(series_case(
        "EULER_ODD_EQ_DISTINCT", "partitions into odd parts equal partitions into distinct parts",
        "Euler's odd = distinct theorem", ParamMode::none,
        [](const BuildCtx& ctx) {
            return inverse(product_build(exps_odd(ctx.order), -1, std::nullopt, ctx.order));
        },
        [](const BuildCtx& ctx) {
            return product_build(exps_range(ctx.order), +1, std::nullopt, ctx.order);
        }));

    {
        IdentityCase c;
        c.id = "EXPANSIONS_IJ";
        c.description = "double sums in a, b match the single-sum numerator/denominator expansions";
        c.reference = "q-binomial rearrangement of the convergent limits";
        c.mode = ParamMode::generic;
        c.pairs.emplace_back([](const BuildCtx& ctx) { return double_sum(0, ctx.order); },
                             [](const BuildCtx& ctx) { return lemma_sum(0, ctx.order); });
        c.pairs.emplace_back([](const BuildCtx& ctx) { return double_sum(1, ctx.order); },
                             [](const BuildCtx& ctx) { return lemma_sum(1, ctx.order); });
        cat.push_back(std::move(c));
    }

    {
        IdentityCase c;
        c.id = "F_ITERATION";
        c.description = "stabilized convergent parts of F(a,c) equal f(a,c) and f(aq,c)";
        c.reference = "iterated coefficient recurrence for f(a,c)";
        c.mode = ParamMode::generic;
        c.pairs.emplace_back([](const BuildCtx& ctx) { return stable_parts("F_AC", ctx).P; },
                             [](const BuildCtx& ctx) { return f_sum(0, ctx.order); });
        c.pairs.emplace_back([](const BuildCtx& ctx) { return stable_parts("F_AC", ctx).Q; },
                             [](const BuildCtx& ctx) { return f_sum(1, ctx.order); });
        cat.push_back(std::move(c));
    }

    cat.push_back(series_case(
        "F_RECURRENCE", "f(a,c) = (1+a) f(aq,c) + acq f(aq^2,c)",
        "three-term functional recurrence", ParamMode::generic,
        [](const BuildCtx& ctx) { return f_sum(0, ctx.order); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            const QSeries f = f_sum(0, N);
            const QSeries a = QSeries::parameter(N, Param::a);
            const QSeries acq = QSeries::monomial(N, {Rational(1), ExpVec{1, 0, 1}, 1});
            return (QSeries::one(N) + a) * subst_param_qshift(f, Param::a, 1)
                   + acq * subst_param_qshift(f, Param::a, 2);
        }));

    cat.push_back(series_case(
        "GOLLNITZ_DEN", "denominator sum of the q^2-shifted fraction equals its triple product",
        "Gollnitz cancellation, denominator side", ParamMode::generic,
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            QSeries total = QSeries::one(N);
            QSeries term = QSeries::one(N);
            for (int k = 1; static_cast<long>(k) * (k + 1) <= N; ++k) {
                term = q_shift(term, 2 * k);
                term.mul_one_plus({Rational(1), ExpVec{0, 1, 0}, 2 * k - 1});
                term.div_one_minus({Rational(1), {}, 2 * k});
                total += term;
            }
            return total;
        },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_arithmetic(3, 4, N), +1, Param::b, N)
                   * product_build(exps_arithmetic(2, 4, N), +1, std::nullopt, N)
                   * product_build(exps_arithmetic(4, 4, N), +1, std::nullopt, N);
        }));

    cat.push_back(series_case(
        "GOLLNITZ_NUM", "numerator sum of the q^2-shifted fraction equals its product form",
        "Gollnitz cancellation, numerator side", ParamMode::generic,
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            QSeries total = QSeries::one(N);
            QSeries term = QSeries::one(N);
            for (int k = 1; static_cast<long>(k) * k <= N; ++k) {
                /* q^{k(k+1)} (-b/q; q^2)_k with the prefactor folded in:
                 * q^{k^2} prod_{j<k} (q + b q^{2j}) */
                term = q_shift(term, 2 * k - 1);
                QSeries factor = qmono(N, 1);
                if (2 * k - 2 <= N)
                    factor += QSeries::monomial(N, {Rational(1), ExpVec{0, 1, 0}, 2 * k - 2});
                term *= factor;
                term.div_one_minus({Rational(1), {}, 2 * k});
                total += term;
            }
            return total;
        },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_arithmetic(1, 4, N), +1, Param::b, N)
                   * product_build(exps_arithmetic(2, 2, N), +1, std::nullopt, N);
        }));

    cat.push_back(series_case(
        "GORDON_GOLLNITZ_38", "fraction with partials q^{2k}, 1+q^{2k+1} equals its mod-8 product",
        "Gordon-Gollnitz fraction (corrected partials)", ParamMode::none,
        [](const BuildCtx& ctx) { return catalog_cf_series("GG_38", {}, ctx); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_mod(8, {3, 4, 5}, N), -1, std::nullopt, N)
                   * inverse(product_build(exps_mod(8, {1, 4, 7}, N), -1, std::nullopt, N));
        }));

    cat.push_back(series_case(
        "LEBESGUE", "sum_k q^{k(k+1)/2} (-bq)_k/(q)_k equals prod (1+bq^{2m})(1+q^m)",
        "Lebesgue's identity", ParamMode::generic,
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            QSeries total = QSeries::one(N);
            QSeries term = QSeries::one(N);
            for (int k = 1; static_cast<long>(k) * (k + 1) / 2 <= N; ++k) {
                term = q_shift(term, k);
                term.mul_one_plus({Rational(1), ExpVec{0, 1, 0}, k});
                term.div_one_minus({Rational(1), {}, k});
                total += term;
            }
            return total;
        },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_arithmetic(2, 2, N), +1, Param::b, N)
                   * product_build(exps_range(N), +1, std::nullopt, N);
        }));

    cat.push_back(series_case(
        "LEMMA_DEN", "stabilized convergent denominator of R(a,b) equals its Pochhammer sum",
        "denominator expansion lemma", ParamMode::generic,
        [](const BuildCtx& ctx) { return stable_parts("R_AB", ctx).Q; },
        [](const BuildCtx& ctx) { return lemma_sum(1, ctx.order); }));

    cat.push_back(series_case(
        "LEMMA_NUM", "stabilized convergent numerator of R(a,b) equals its Pochhammer sum",
        "numerator expansion lemma", ParamMode::generic,
        [](const BuildCtx& ctx) { return stable_parts("R_AB", ctx).P; },
        [](const BuildCtx& ctx) { return lemma_sum(0, ctx.order); }));

    cat.push_back(series_case(
        "NUM_DEN_SHIFT", "denominator expansion is the numerator expansion at b -> bq",
        "numerator/denominator shift relation", ParamMode::generic,
        [](const BuildCtx& ctx) { return subst_param_qshift(double_sum(0, ctx.order), Param::b, 1); },
        [](const BuildCtx& ctx) { return double_sum(1, ctx.order); }));

    cat.push_back(series_case(
        "R1B_PRODUCT", "R(1,b) equals prod (1+bq^{2m-1})/(1+bq^{2m})",
        "product form at a = 1 via Lebesgue's identity", ParamMode::generic,
        [](const BuildCtx& ctx) { return catalog_cf_series("R1B", {}, ctx); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_arithmetic(1, 2, N), +1, Param::b, N)
                   * inverse(product_build(exps_arithmetic(2, 2, N), +1, Param::b, N));
        }));

    cat.push_back(series_case(
        "R1B_Q2", "the q -> q^2, b -> b/q case: fraction vs prod (1+bq^{4m-3})/(1+bq^{4m-1})",
        "shifted product form", ParamMode::generic,
        [](const BuildCtx& ctx) { return catalog_cf_series("R1B_Q2", {}, ctx); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_arithmetic(1, 4, N), +1, Param::b, N)
                   * inverse(product_build(exps_arithmetic(3, 4, N), +1, Param::b, N));
        }));

    cat.push_back(series_case(
        "RR_CF_PRODUCT", "1 + q/(1 + q^2/(1 + ...)) equals the mod-5 product ratio G/H",
        "Rogers-Ramanujan fraction, integer-power part", ParamMode::none,
        [](const BuildCtx& ctx) { return catalog_cf_series("RR_K", {}, ctx); },
        [](const BuildCtx& ctx) {
            const int N = ctx.order;
            return product_build(exps_mod(5, {2, 3}, N), -1, std::nullopt, N)
                   * inverse(product_build(exps_mod(5, {1, 4}, N), -1, std::nullopt, N));
        }));

    cat.push_back(series_case(
        "RR_G", "sum q^{n^2}/(q)_n equals 1/prod (1-q^{5n-4})(1-q^{5n-1})",
        "first Rogers-Ramanujan identity", ParamMode::none,
        [](const BuildCtx& ctx) { return rr_sum(false, ctx.order); },
        [](const BuildCtx& ctx) {
            return inverse(product_build(exps_mod(5, {1, 4}, ctx.order), -1, std::nullopt, ctx.order));
        }));

    cat.push_back(series_case(
        "RR_H", "sum q^{n^2+n}/(q)_n equals 1/prod (1-q^{5n-3})(1-q^{5n-2})",
        "second Rogers-Ramanujan identity", ParamMode::none,
        [](const BuildCtx& ctx) { return rr_sum(true, ctx.order); },
        [](const BuildCtx& ctx) {
            return inverse(product_build(exps_mod(5, {2, 3}, ctx.order), -1, std::nullopt, ctx.order));
        }));

    {
        IdentityCase c;
        c.id = "TELESCOPE_1";
        c.description = "1 + sum a_k/prod_{j<=k}(1-a_j) telescopes to 1/prod (1-a_j)";
        c.reference = "telescoping identity, unrestricted form";
        c.mode = ParamMode::randomized;
        c.instance = telescope_instance(false);
        cat.push_back(std::move(c));
    }
    {
        IdentityCase c;
        c.id = "TELESCOPE_2";
        c.description = "1 + sum a_k prod_{j<k}(1+a_j) telescopes to prod (1+a_j)";
        c.reference = "telescoping identity, distinct form";
        c.mode = ParamMode::randomized;
        c.instance = telescope_instance(true);
        cat.push_back(std::move(c));
    }
    {
        IdentityCase c;
        c.id = "THM_2_1";
        c.description = "cleared telescoping fraction equals 1/prod (1-a_i) (corrected partials)";
        c.reference = "telescoping theorem, unrestricted form";
        c.mode = ParamMode::randomized;
        c.instance = telescoping_theorem_instance(false);
        cat.push_back(std::move(c));
    }
    {
        IdentityCase c;
        c.id = "THM_2_2";
        c.description = "cleared telescoping fraction equals prod (1+a_i) (corrected partials)";
        c.reference = "telescoping theorem, distinct form";
        c.mode = ParamMode::randomized;
        c.instance = telescoping_theorem_instance(true);
        cat.push_back(std::move(c));
    }

    {
        IdentityCase c;
        c.id = "THREE_PARAM_39";
        c.description = "three-parameter fraction equals its mod-4 product in a^2, b^2 "
                        "(corrected signs), checked in the degree-capped ring";
        c.reference = "Ramanujan's three-parameter fraction";
        c.mode = ParamMode::generic;
        c.pairs.emplace_back(
            [](const BuildCtx& ctx) {
                const auto& sides = builders::three_param_sides(ctx.order);
                ctx.note_depth(sides.depth);
                return sides.lhs;
            },
            [](const BuildCtx& ctx) { return builders::three_param_sides(ctx.order).rhs; });
        cat.push_back(std::move(c));
    }

    cat.push_back(series_case(
        "THREE_PARAM_SPEC", "a = 0 and b^2 -> -b reduce the three-parameter fraction to R1B_Q2",
        "specialization of the three-parameter fraction", ParamMode::generic,
        [](const BuildCtx& ctx) {
            CFParams p;
            p.a = QSeries::zero(ctx.order);
            const QSeries v = catalog_cf_series("THREE_PARAM", std::move(p), ctx);
            return builders::halve_b_exponents(v);
        },
        [](const BuildCtx& ctx) { return catalog_cf_series("R1B_Q2", {}, ctx); }));

    /* kept sorted by id for deterministic reporting */
    std::sort(cat.begin(), cat.end(),
              [](const IdentityCase& x, const IdentityCase& y) { return x.id < y.id; });
    return cat;
}

} // namespace detail

inline const std::vector<IdentityCase>& catalog()
{
    static const std::vector<IdentityCase> cat = detail::make_catalog();
    return cat;
}

} // namespace identities
} // namespace qcf
