#include <doctest.h>

#include <random>

#include "orbizeta/models.hpp"
#include "orbizeta/symprod.hpp"
#include "orbizeta/zeta.hpp"

using namespace orbizeta;

namespace {

PowerSeries series_of(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return PowerSeries(r);
}

BigInt ipow(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

Rational frac(const BigInt& n, long d)
{
    Rational x(n, BigInt(d));
    x.canonicalize();
    return x;
}

UPoly roots_poly(std::vector<std::pair<BigInt, unsigned>> r) { return RationalFunction::from_reciprocal_roots(r); }

}  // namespace

TEST_SUITE("zeta")
{
    TEST_CASE("series arithmetic")
    {
        const int R = 8;
        std::vector<Rational> geo;
        for (int i = 0; i <= R; ++i) geo.emplace_back(ipow(5, static_cast<unsigned long>(i)));
        CHECK(PowerSeries::from_poly({1, -5}, R) * PowerSeries(geo) == PowerSeries::one(R));
        CHECK(PowerSeries(geo) * PowerSeries::one(R) == PowerSeries(geo));
        const auto prod = PowerSeries::one(4) / PowerSeries::from_poly({1, -1}, 4) / PowerSeries::from_poly({1, -2}, 4);
        CHECK(prod == series_of({1, 3, 7, 15, 31}));
        CHECK((series_of({1, 2, 3}) + series_of({1, 1})).order() == 1);
        CHECK_THROWS_AS(PowerSeries::one(3) / series_of({0, 1, 0, 0}), std::domain_error);
    }

    TEST_CASE("exp and log")
    {
        const int R = 7;
        std::vector<Rational> c{0};
        for (int r = 1; r <= R; ++r) c.push_back(frac(ipow(3, static_cast<unsigned long>(r)), r));
        const auto geo = RationalFunction{{1}, {1, -3}}.expand(R);
        CHECK(series_exp(PowerSeries(c)) == geo);
        CHECK(series_exp(PowerSeries::zero(5)) == PowerSeries::one(5));
        std::vector<Rational> l{0};
        for (int r = 1; r <= R; ++r) l.push_back(frac(1 + ipow(3, static_cast<unsigned long>(r)), r));
        CHECK(series_log(RationalFunction{{1}, roots_poly({{1, 1}, {3, 1}})}.expand(R)) == PowerSeries(l));
        CHECK_THROWS(series_exp(series_of({1, 1})));
        CHECK_THROWS(series_log(series_of({2, 1})));
    }

    TEST_CASE("exp/log round trips on 100 random series")
    {
        std::mt19937_64 rng(20261015);
        std::uniform_int_distribution<long> num(-50, 50), den(1, 12), ord(1, 12);
        for (int trial = 0; trial < 100; ++trial) {
            const int R = static_cast<int>(ord(rng));
            std::vector<Rational> s{0};
            for (int i = 1; i <= R; ++i) {
                Rational x(num(rng), den(rng));
                x.canonicalize();
                s.push_back(x);
            }
            const PowerSeries a(s);
            CHECK(series_log(series_exp(a)) == a);
            auto b = s;
            b[0] = 1;
            CHECK(series_exp(series_log(PowerSeries(b))) == PowerSeries(b));
        }
    }

    TEST_CASE("zeta_from_counts")
    {
        CHECK(zeta_from_counts({3, 1, {3, 9, 27, 81}}) == RationalFunction{{1}, {1, -3}}.expand(4));
        CHECK(zeta_from_counts({3, 1, {4, 10, 28}}) == series_of({1, 4, 13, 40}));
        CountSequence k{7, 1, {}};
        for (unsigned r = 1; r <= 8; ++r) k.values.push_back(ipow(7, 2 * r) + 2 * ipow(7, r));
        CHECK(zeta_from_counts(k) == RationalFunction{{1}, roots_poly({{49, 1}, {7, 2}})}.expand(8));
    }

    TEST_CASE("counts_from_zeta")
    {
        CHECK(counts_from_zeta({{1}, roots_poly({{1, 1}, {4, 1}})}, 2).values[1] == 17);
        CHECK(counts_from_zeta({{1}, roots_poly({{25, 1}, {5, 8}})}, 1).values[0] == 65);
        CHECK(counts_from_zeta({{1}, roots_poly({{1, 1}, {2, 1}, {4, 1}})}, 3).values[2] == 73);
        CHECK_THROWS(counts_from_zeta({{1}, {2, 1}}, 3));
        // inverse of zeta_from_counts on catalog forms
        for (const auto* name : {"P2", "P1xP1", "Hirz3"})
            for (int q : {2, 3, 5}) {
                const auto z = std::get<RationalFunction>(surface_catalog(name, q).data);
                const auto c = counts_from_zeta(z, 9);
                CHECK(zeta_from_counts(c) == z.expand(9));
            }
    }

    TEST_CASE("integrality of zeta coefficients through order 10")
    {
        // actual hypersurface counts over F_{2^r}, r <= 10
        for (const auto& fam : kleinian_suite()) {
            const auto seq = count_sequence(AffineModel({fam.equation}), 2, 1, 10);
            REQUIRE_FALSE(seq.error);
            const auto z = zeta_from_counts(seq.counts);
            INFO(fam.name());
            REQUIRE(z.is_integral());
            for (const auto& c : z.integer_coeffs()) CHECK(c >= 0);
        }
        // orbifold counts of the threefold models and of the Kleinian models
        for (auto kind : {ThreefoldKind::Mu3, ThreefoldKind::Mu5})
            for (std::uint64_t q : {2u, 4u, 7u}) {
                const auto z = orbifold_zeta(threefold_orbifold_model(threefold_catalog(kind)), make_field(q == 4 ? 2 : q, q == 4 ? 2 : 1), 10);
                REQUIRE(z.is_integral());
                for (const auto& c : z.integer_coeffs()) CHECK(c >= 0);
            }
        for (const auto& fam : kleinian_suite()) {
            const auto z = orbifold_zeta(kleinian_orbifold_model(fam, CoarseSource::Conjectured), make_field(7, 1), 10);
            if (fam.group_order % 7 == 0) continue;
            REQUIRE(z.is_integral());
        }
    }

    TEST_CASE("recognize_rational")
    {
        auto rec = recognize_rational(series_of({1, 3, 7, 15, 31, 63}), 2, BigInt(2));
        REQUIRE(rec.recognized);
        CHECK(rec.form == RationalFunction{{1}, {1, -3, 2}});
        CHECK(rec.factored_string() == "1/((1 - t)(1 - 2t))");

        auto one = recognize_rational(series_of({1, 0, 0, 0}), 1);
        REQUIRE(one.recognized);
        CHECK(one.form == RationalFunction{{1}, {1}});

        const auto target = RationalFunction{{1}, roots_poly({{49, 1}, {7, 2}})};
        auto k = recognize_rational(target.expand(7), 3, BigInt(7));
        REQUIRE(k.recognized);
        CHECK(k.form == target);
        REQUIRE(k.denominator_factors);
        CHECK(k.denominator_factors->complete());
        CHECK(k.factored_string() == "1/((1 - 7t)^2(1 - 49t))");

        // numerator with a nontrivial factor and re-expansion of the output
        const RationalFunction ell{{1, -2, 5}, roots_poly({{1, 1}, {5, 1}})};
        auto e = recognize_rational(ell.expand(9), 3, BigInt(5));
        REQUIRE(e.recognized);
        CHECK(e.form == ell);
        CHECK(e.form.expand(9) == ell.expand(9));

        // too few coefficients or too large a denominator
        CHECK_FALSE(recognize_rational(target.expand(4), 3).recognized);
        CHECK_FALSE(recognize_rational(target.expand(9), 2).recognized);
    }

    TEST_CASE("trial_factor")
    {
        auto tf = trial_factor(roots_poly({{1, 1}, {3, 2}, {-9, 1}}), 3);
        CHECK(tf.complete());
        CHECK(tf.factors.size() == 3);
        auto partial = trial_factor({1, -2, 5}, 5);
        CHECK_FALSE(partial.complete());
    }

    TEST_CASE("weil_check")
    {
        auto p2 = weil_check({{1}, roots_poly({{1, 1}, {3, 1}, {9, 1}})}, 2, 3);
        CHECK(p2.rationality_ok);
        CHECK(p2.euler_characteristic == 3);
        REQUIRE(p2.functional_equation_sign);
        // Z(1/(9t)) = -27 t^3 Z(t) for 1/((1-t)(1-3t)(1-9t))
        CHECK(*p2.functional_equation_sign == -1);
        CHECK(p2.riemann_ok);
        CHECK(p2.max_deviation == 0);
        for (const auto& r : p2.roots) CHECK(r.exact);

        auto pp = weil_check({{1}, roots_poly({{1, 1}, {2, 2}, {4, 1}})}, 2, 2);
        CHECK(pp.euler_characteristic == 4);
        CHECK(pp.betti == std::map<int, int>{{0, 1}, {2, 2}, {4, 1}});
        CHECK(pp.functional_equation_sign == 1);

        auto pt = weil_check({{1}, {1, -1}}, 0, 7);
        CHECK(pt.euler_characteristic == 1);
        CHECK(pt.functional_equation_sign.has_value());
        CHECK(pt.rationality_ok);

        // elliptic curve over F_5 with trace 2: complex roots of modulus sqrt(5)
        auto ell = weil_check({{1, -2, 5}, roots_poly({{1, 1}, {5, 1}})}, 1, 5);
        CHECK(ell.rationality_ok);
        CHECK(ell.betti == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
        CHECK(ell.euler_characteristic == 0);
        CHECK(ell.functional_equation_sign == 1);
        CHECK(ell.riemann_ok);
        CHECK(ell.max_deviation < kRiemannTolerance);

        // real roots of the wrong size violate the Riemann hypothesis
        auto bad = weil_check({{1, -5, 5}, roots_poly({{1, 1}, {5, 1}})}, 1, 5);
        CHECK_FALSE(bad.riemann_ok);
    }
}
