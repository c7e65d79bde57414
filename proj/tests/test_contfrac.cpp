#include "qcf/contfrac.hpp"
#include "qcf/partitions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qcf;

namespace {

QSeries qmono(int order, int e, Rational c = Rational(1))
{
    return QSeries::monomial(order, {std::move(c), {}, e});
}

Rational value0(const QSeries& s) { return s[0].constant_value(); }

Rational ratio0(const ConvergentPair& cp) { return value0(cp.P) / value0(cp.Q); }

/* pi = 4/(1 + 1/(2 + 9/(2 + 25/(2 + ...)))) over exact rationals */
CFSpec pi_cf_exact(int depth)
{
    CFSpec cf(QSeries::zero(0));
    cf.push(QSeries::constant(0, Rational(4)), QSeries::one(0));
    for (int k = 2; k <= depth; ++k) {
        const int m = 2 * k - 3;
        cf.push(QSeries::constant(0, Rational(m) * m), QSeries::constant(0, Rational(2)));
    }
    return cf;
}

Rational draw_rational(std::mt19937_64& rng, const std::vector<Rational>& reject)
{
    for (;;) {
        const int num = -9 + static_cast<int>(rng() % 19);
        const int den = 1 + static_cast<int>(rng() % 9);
        Rational r(num, den);
        if (std::find(reject.begin(), reject.end(), r) == reject.end()) return r;
    }
}

} // namespace

TEST_CASE("convergents of the exact pi fraction")
{
    const CFSpec cf = pi_cf_exact(12);
    SECTION("depth 0 is the leading term") { REQUIRE(ratio0(convergent(cf, 0)) == 0); }
    SECTION("depth 2 gives 8/3")
    {
        REQUIRE(ratio0(convergent(cf, 2)) == Rational(8, 3));
    }
    SECTION("every depth matches the Leibniz partial sum")
    {
        Rational sum(0);
        for (int d = 1; d <= 12; ++d) {
            sum += Rational((d - 1) % 2 == 0 ? 4 : -4, 2 * d - 1);
            REQUIRE(ratio0(convergent(cf, d)) == sum);
        }
    }
    SECTION("depth beyond the fraction is a usage error")
    {
        REQUIRE_THROWS_AS(convergent(cf, 13), std::invalid_argument);
    }
}

TEST_CASE("euler fraction partial-sum law")
{
    SECTION("single term")
    {
        const CFSpec cf = euler_cf_from_terms(std::vector<Rational>{Rational(5, 3)});
        REQUIRE(cf.depth() == 0);
        REQUIRE(ratio0(convergent(cf, 0)) == Rational(5, 3));
    }
    SECTION("two terms give a0 + a0 a1")
    {
        const Rational a0(3, 2), a1(-2, 5);
        const CFSpec cf = euler_cf_from_terms(std::vector<Rational>{a0, a1});
        REQUIRE(ratio0(convergent(cf, 1)) == a0 + a0 * a1);
    }
    SECTION("random rational terms, every depth")
    {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = static_cast<int>(rng() % 11);
            std::vector<Rational> a;
            for (int i = 0; i <= n; ++i) a.push_back(draw_rational(rng, {Rational(-1)}));
            const CFSpec cf = euler_cf_from_terms(a);
            Rational partial(0), running(1);
            for (int k = 0; k <= n; ++k) {
                running *= a[static_cast<std::size_t>(k)];
                partial += running;
                REQUIRE(ratio0(convergent(cf, k)) == partial);
            }
        }
    }
}

TEST_CASE("exponential fraction at rational arguments")
{
    const Rational z(3, 7);
    const int n = 9;
    std::vector<Rational> terms{Rational(1)};
    for (int k = 1; k <= n; ++k) terms.push_back(z / k);
    const CFSpec euler = euler_cf_from_terms(terms);

    SECTION("depth-k convergents are the factorial partial sums")
    {
        Rational sum(0), term(1);
        for (int k = 0; k <= n; ++k) {
            if (k > 0) term *= z / k;
            sum += term;
            REQUIRE(ratio0(convergent(euler, k)) == sum);
        }
    }
    SECTION("the cleared form is an equivalence transform of the raw form")
    {
        /* raw: 1/(1 - z/(1+z - (z/2)/(1+z/2 - ...))) */
        CFSpec raw(QSeries::zero(0));
        raw.push(QSeries::one(0), QSeries::one(0));
        for (int k = 1; k <= n; ++k) {
            const Rational t = z / k;
            raw.push(QSeries::constant(0, -t), QSeries::constant(0, 1 + t));
        }
        /* clearing scales 1, 1, 2, 3, ..., giving 1/(1 - z/(1+z - z/(2+z - 2z/(3+z - ...)))) */
        std::vector<Rational> scales{Rational(1), Rational(1)};
        for (int k = 3; k <= raw.depth(); ++k) scales.push_back(Rational(k - 1));
        const CFSpec cleared = equivalence_transform(raw, scales);
        REQUIRE(value0(cleared.partials[2].first) == -z);
        REQUIRE(value0(cleared.partials[2].second) == 2 + z);
        for (int d = 0; d <= raw.depth(); ++d)
            REQUIRE(ratio0(convergent(raw, d)) == ratio0(convergent(cleared, d)));
        /* and the raw fraction's depth-(k+1) convergent is the k-th partial sum */
        REQUIRE(ratio0(convergent(cleared, n + 1)) == ratio0(convergent(euler, n)));
    }
}

TEST_CASE("logarithmic fraction at rational arguments")
{
    /* log((1+z)/(1-z)) = 2z (1 + z^2/3 + (z^2/3)(3z^2/5) + ...) */
    const Rational z(1, 3);
    const int n = 8;
    std::vector<Rational> terms{2 * z};
    for (int k = 1; k <= n; ++k) terms.push_back(z * z * (2 * k - 1) / (2 * k + 1));
    const CFSpec euler = euler_cf_from_terms(terms);

    /* cleared: 2z/(1 - z^2/(z^2+3 - (3z)^2/(3z^2+5 - ...))) */
    CFSpec cleared(QSeries::zero(0));
    cleared.push(QSeries::constant(0, 2 * z), QSeries::one(0));
    for (int k = 2; k <= n + 1; ++k) {
        const Rational m(2 * k - 3);
        cleared.push(QSeries::constant(0, -(m * z) * (m * z)),
                     QSeries::constant(0, m * z * z + (2 * k - 1)));
    }
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        sum += 2 * z * rational_pow(z, 2 * k) / (2 * k + 1);
        REQUIRE(ratio0(convergent(euler, k)) == sum);
        REQUIRE(ratio0(convergent(cleared, k + 1)) == sum);
    }
}

TEST_CASE("equivalence transformation properties")
{
    std::mt19937_64 rng(77);
    SECTION("all-ones scales leave the fraction unchanged")
    {
        std::vector<Rational> a{Rational(1), Rational(1, 2), Rational(3)};
        const CFSpec cf = euler_cf_from_terms(a);
        const CFSpec same = equivalence_transform(cf, std::vector<Rational>(2, Rational(1)));
        REQUIRE(same.b0 == cf.b0);
        REQUIRE(same.partials == cf.partials);
    }
    SECTION("ratios are preserved under random scales")
    {
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            std::vector<Rational> a;
            for (int i = 0; i <= n; ++i) a.push_back(draw_rational(rng, {Rational(-1)}));
            const CFSpec cf = euler_cf_from_terms(a);
            std::vector<Rational> scales;
            for (int k = 0; k < cf.depth(); ++k) scales.push_back(draw_rational(rng, {Rational(0)}));
            const CFSpec scaled = equivalence_transform(cf, scales);
            for (int d = 0; d <= cf.depth(); ++d) {
                const ConvergentPair x = convergent(cf, d);
                const ConvergentPair y = convergent(scaled, d);
                /* cross-multiplied ratio equality */
                REQUIRE(x.P * y.Q == y.P * x.Q);
            }
        }
    }
    SECTION("non-invertible scales are domain errors")
    {
        const CFSpec cf = euler_cf_from_terms(std::vector<Rational>{Rational(1), Rational(2)});
        REQUIRE_THROWS_AS(equivalence_transform(cf, std::vector<Rational>{Rational(0)}),
                          std::domain_error);
    }
}

TEST_CASE("series evaluation of cataloged fractions")
{
    SECTION("R(0,0) collapses to 1")
    {
        const int N = 12;
        CFParams p;
        p.a = QSeries::zero(N);
        p.b = QSeries::zero(N);
        const CFSpec cf = build_catalog_cf("R_AB", p, N + 8, N);
        int depth = -1;
        REQUIRE(eval_series(cf, -1, &depth) == QSeries::one(N));
        REQUIRE(depth == 0);
    }
    SECTION("telescoping fraction with a_i = q^i matches the reciprocal product")
    {
        const int N = 10;
        /* Euler form of the telescoped sum: terms 1, q^{e_k - e_{k-1}}/(1 - q^{e_k}) */
        std::vector<QSeries> terms{QSeries::one(N)};
        for (int e = 1; e <= N + 1; ++e) {
            QSeries t = qmono(N, 1);
            if (e <= N) t.div_one_minus({Rational(1), {}, e});
            terms.push_back(t);
        }
        const QSeries got = eval_series(euler_cf_from_terms(terms));
        const QSeries expect = inverse(product_build(exps_range(N), -1, std::nullopt, N));
        REQUIRE(got == expect);
    }
    SECTION("mod-8 fraction at order 20 matches its product ratio")
    {
        const int N = 20;
        const CFSpec cf = build_catalog_cf("CF_37A", {}, N + 8, N);
        const QSeries got = eval_series(cf);
        const QSeries num = product_build(exps_mod(8, {2, 3, 7}, N), -1, std::nullopt, N);
        const QSeries den = product_build(exps_mod(8, {1, 5, 6}, N), -1, std::nullopt, N);
        REQUIRE(got * den == num);
    }
    SECTION("stability: the stabilized value is unchanged two levels deeper")
    {
        const int N = 16;
        const CFSpec cf = build_catalog_cf("RR_K", {}, N + 8, N);
        int depth = -1;
        const QSeries v = eval_series(cf, -1, &depth);
        const ConvergentPair deeper = convergent(cf, depth + 2);
        REQUIRE(deeper.P * inverse(deeper.Q) == v);
    }
    SECTION("non-unit denominators are domain errors")
    {
        CFSpec cf(QSeries::one(1));
        cf.push(qmono(1, 1), qmono(1, 1));
        cf.push(qmono(1, 1), QSeries::one(1));
        REQUIRE_THROWS_AS(eval_series(cf), std::domain_error);
    }
    SECTION("fractions that never stabilize raise convergence errors")
    {
        const int N = 6;
        const CFSpec cf = build_catalog_cf("THREE_PARAM", {}, N + 10, N);
        REQUIRE_THROWS_AS(eval_series(cf), convergence_error);
    }
}

TEST_CASE("catalog fraction construction")
{
    const int N = 8;
    SECTION("R_AB at a=0, b=1 has partials q^k over 1")
    {
        CFParams p;
        p.a = QSeries::zero(N);
        p.b = QSeries::one(N);
        const CFSpec cf = build_catalog_cf("R_AB", p, 5, N);
        for (int k = 1; k <= 5; ++k) {
            REQUIRE(cf.partials[static_cast<std::size_t>(k - 1)].first == qmono(N, k));
            REQUIRE(cf.partials[static_cast<std::size_t>(k - 1)].second == QSeries::one(N));
        }
    }
    SECTION("the odd-part corollary arises by substitution into the telescoping theorem")
    {
        const int N2 = 12;
        CFParams p;
        for (int e = 1; e <= N2 + 1; e += 2) p.terms.push_back(qmono(N2, e));
        const CFSpec cf = build_catalog_cf("THM_2_1", p, 0, N2);
        ConvergentWalker w(cf);
        while (w.step()) {}
        const QSeries prod = product_build(exps_odd(N2), -1, std::nullopt, N2);
        /* P/Q = 1/prod, compared cross-multiplied */
        REQUIRE(w.P() * prod == w.Q());
    }
    SECTION("three-parameter fraction at a=0 degenerates to -b^2 numerators")
    {
        CFParams p;
        p.a = QSeries::zero(N);
        const CFSpec cf = build_catalog_cf("THREE_PARAM", p, 3, N);
        REQUIRE(cf.b0 == QSeries::one(N));
        REQUIRE(cf.partials[0].first
                == QSeries::monomial(N, {Rational(-1), ExpVec{0, 2, 0}, 1}));
        REQUIRE(cf.partials[1].first
                == QSeries::monomial(N, {Rational(-1), ExpVec{0, 2, 0}, 3}));
        REQUIRE(cf.partials[0].second == QSeries::one(N) + qmono(N, 2));
    }
    SECTION("unknown ids are usage errors")
    {
        REQUIRE_THROWS_AS(build_catalog_cf("NOPE", {}, 1, 4), std::invalid_argument);
    }
}

TEST_CASE("determinant identity for catalog fractions")
{
    const int N = 16;
    std::vector<CFSpec> cfs;
    cfs.push_back(build_catalog_cf("R_AB", {}, 12, N));
    cfs.push_back(build_catalog_cf("F_AC", {}, 12, N));
    cfs.push_back(build_catalog_cf("RR_K", {}, 12, N));
    cfs.push_back(build_catalog_cf("R1B", {}, 12, N));
    cfs.push_back(build_catalog_cf("R1B_Q2", {}, 12, N));
    cfs.push_back(build_catalog_cf("CF_37A", {}, 12, N));
    cfs.push_back(build_catalog_cf("GG_38", {}, 12, N));
    cfs.push_back(build_catalog_cf("THREE_PARAM", {}, 12, N));
    {
        CFParams p;
        for (int e = 1; e <= 12; ++e) p.terms.push_back(qmono(N, e));
        cfs.push_back(build_catalog_cf("THM_2_1", p, 0, N));
        cfs.push_back(build_catalog_cf("THM_2_2", p, 0, N));
    }
    for (const CFSpec& cf : cfs) {
        ConvergentWalker w(cf);
        QSeries anum = QSeries::one(N); // prod_{k<=n} a_k
        int sign = 1;                   // (-1)^{n-1}
        for (int n = 1; n <= std::min(12, cf.depth()); ++n) {
            w.step();
            anum *= cf.partials[static_cast<std::size_t>(n - 1)].first;
            sign = n == 1 ? 1 : -sign;
            const QSeries det = w.P() * w.Q_prev() - w.P_prev() * w.Q();
            REQUIRE(det == (sign == 1 ? anum : -anum));
        }
    }
}

TEST_CASE("stabilized convergent parts")
{
    const int N = 10;
    const CFSpec cf = build_catalog_cf("R_AB", {}, N + 9, N);
    const ConvergentPair stable = stable_convergent(cf);
    SECTION("stabilization happens right past the order")
    {
        REQUIRE(stable.depth == N);
    }
    SECTION("monotone coverage: depth-D parts are final through order D")
    {
        for (int D = 1; D <= N; ++D) {
            const ConvergentPair cp = convergent(cf, D);
            for (int n = 0; n <= D; ++n) {
                REQUIRE(cp.P[n] == stable.P[n]);
                REQUIRE(cp.Q[n] == stable.Q[n]);
            }
        }
    }
    SECTION("guard exhaustion raises a convergence error")
    {
        REQUIRE_THROWS_AS(stable_convergent(build_catalog_cf("R_AB", {}, 4, N), 4),
                          convergence_error);
    }
}
