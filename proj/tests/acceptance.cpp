// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "orbizeta/models.hpp"
#include "orbizeta/symprod.hpp"

using namespace orbizeta;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) detail = what;  // first failure is the one reported
        ok = ok && cond;
    }
};

BigInt ipow(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q)
        if (prime_power_decompose(q).first) out.push_back(q);
    return out;
}

FieldDesc field(std::uint64_t q)
{
    auto [p, e] = prime_power_decompose(q);
    return make_field(p, e);
}

std::string str(const BigInt& v) { return v.get_str(); }

Outcome kleinian_coarse()
{
    Outcome o;
    std::size_t cases = 0;
    for (const auto& fam : kleinian_suite())
        for (auto q : prime_powers_upto(49)) {
            if (std::gcd(q, fam.group_order) != 1) continue;
            const BigInt n = count_affine_bruteforce(AffineModel({fam.equation}), field(q));
            o.require(n == BigInt(static_cast<unsigned long>(q * q)), fam.name() + " q=" + std::to_string(q) + ": " + str(n));
            ++cases;
        }
    if (o.ok) o.detail = std::to_string(cases) + " (family, q) cases equal q^2";
    return o;
}

Outcome kleinian_mckay()
{
    Outcome o;
    std::size_t cases = 0;
    for (const auto& fam : kleinian_suite())
        for (auto q : prime_powers_upto(49)) {
            if (std::gcd(q, fam.group_order) != 1) continue;
            const auto f = field(q);
            const BigInt expected(static_cast<unsigned long>(q * q + fam.k * q));
            const BigInt orb = orbifold_count(kleinian_orbifold_model(fam), f, 1);
            const BigInt res = kleinian_resolution_count(fam, f, 1);
            o.require(orb == expected && res == expected,
                      fam.name() + " q=" + std::to_string(q) + ": orb " + str(orb) + ", res " + str(res));
            ++cases;
        }
    if (o.ok) o.detail = std::to_string(cases) + " cases with N_orb = N_res = q^2 + kq";
    return o;
}

Outcome kleinian_zeta()
{
    Outcome o;
    const std::uint64_t q = 7;
    for (auto fam : {kleinian_catalog(KleinianKind::Cyclic, 3), kleinian_catalog(KleinianKind::BinaryTetrahedral)}) {
        for (int r = 1; r <= 3; ++r) {
            const BigInt n = count_affine_bruteforce(AffineModel({fam.equation}), make_field(q, r));
            o.require(n == ipow(q, 2 * r), fam.name() + " r=" + std::to_string(r) + ": " + str(n));
        }
        const int coefficients = 2 * static_cast<int>(fam.k + 1) + 2;
        CountSequence cs{q, 1, {}};
        for (int r = 1; r < coefficients; ++r)
            cs.values.push_back(ipow(q, 2 * r) + fam.k * ipow(q, static_cast<unsigned long>(r)));
        const auto rec = recognize_rational(zeta_from_counts(cs), static_cast<int>(fam.k + 1), BigInt(q));
        const RationalFunction expected{{1}, RationalFunction::from_reciprocal_roots({{q * q, 1}, {q, fam.k}})};
        o.require(rec.recognized && rec.form == expected, fam.name() + ": recognized " + rec.form.to_string());
        if (o.ok) o.detail += fam.name() + " -> " + rec.factored_string() + "  ";
    }
    return o;
}

Outcome threefolds()
{
    Outcome o;
    const std::vector<std::pair<ThreefoldKind, std::vector<std::uint64_t>>> grid{
        {ThreefoldKind::Mu3, {4, 7, 13}}, {ThreefoldKind::Mu5, {11, 31}}};
    for (const auto& [kind, qs] : grid) {
        const auto tm = threefold_catalog(kind);
        const auto model = threefold_orbifold_model(tm);
        for (auto q : qs) {
            const auto f = field(q);
            const BigInt Q(static_cast<unsigned long>(q));
            o.require(burnside_coarse_count(tm.action, f) == Q * Q * Q, tm.name() + " q=" + std::to_string(q) + ": Burnside");
            const BigInt expected = kind == ThreefoldKind::Mu3 ? BigInt(Q * Q * Q + Q + Q * Q) : BigInt(Q * Q * Q + 2 * Q + 2 * Q * Q);
            const auto c = orbifold_count_detail(model, f, 1);
            const BigInt res = tm.resolution(c.coarse, Q);
            o.require(c.total == expected && res == expected,
                      tm.name() + " q=" + std::to_string(q) + ": orb " + str(c.total) + ", res " + str(res));
        }
    }
    const BigInt oracle = coarse_orbit_oracle({{1, 1, 1}, 3}, make_field(2, 2), 3);
    o.require(oracle == 64, "orbit oracle for mu3 at q=4 over F_64 gave " + str(oracle));
    if (o.ok) o.detail = "Burnside = q^3, orbit oracle = 64, N_orb = N_res";
    return o;
}

Outcome goettsche()
{
    Outcome o;
    for (const auto* name : {"P2", "P1xP1"})
        for (int q : {2, 3, 5}) {
            const auto z = surface_catalog(name, q);
            const auto orb = orbifold_symprod_series(z, q, 8).series;
            const auto prod = goettsche_product(z, q, 8);
            for (int n = 0; n <= 8; ++n)
                o.require(orb[n] == prod[n], std::string(name) + " q=" + std::to_string(q) + " n=" + std::to_string(n));
            // independent n = 2 value from the point counts N1, N2
            const auto& rf = std::get<RationalFunction>(z.data);
            const auto N = counts_from_zeta(rf, 2).values;
            const BigInt oracle = (N[0] * N[0] + N[1]) / 2 + q * N[0];
            o.require(orb[2] == oracle && prod[2] == oracle,
                      std::string(name) + " q=" + std::to_string(q) + ": n=2 oracle " + str(oracle));
        }
    if (o.ok) o.detail = "P2, P1xP1 at q = 2, 3, 5 through n = 8";
    return o;
}

Outcome weil()
{
    Outcome o;
    struct Case {
        const char* name;
        int dim;
        int chi;
        std::map<int, int> betti;
        std::function<BigInt(const BigInt&)> count;
    };
    auto line = [](const BigInt& qr) { return count_projective_space(1, qr); };
    const std::vector<Case> cases{
        {"P1", 1, 2, {{0, 1}, {2, 1}}, line},
        {"P2", 2, 3, {{0, 1}, {2, 1}, {4, 1}}, [](const BigInt& qr) { return count_projective_space(2, qr); }},
        {"P1xP1", 2, 4, {{0, 1}, {2, 2}, {4, 1}}, [&](const BigInt& qr) { return count_bundle(line(qr), line(qr)); }},
        {"Hirzebruch", 2, 4, {{0, 1}, {2, 2}, {4, 1}}, [&](const BigInt& qr) { return count_bundle(line(qr), line(qr)); }},
    };
    for (const auto& c : cases)
        for (int q : {2, 3, 4, 5}) {
            auto [p, e] = prime_power_decompose(static_cast<std::uint64_t>(q));
            CountSequence cs{p, e, {}};
            for (unsigned r = 1; r < 12; ++r) cs.values.push_back(c.count(ipow(q, r)));
            const auto series = zeta_from_counts(cs);  // 12 coefficients
            const auto rec = recognize_rational(series, 5, BigInt(q));
            const std::string where = std::string(c.name) + " q=" + std::to_string(q);
            o.require(rec.recognized, where + ": not recognized");
            if (!rec.recognized) continue;
            const auto w = weil_check(rec.form, c.dim, q);
            o.require(w.rationality_ok, where + ": weight structure");
            o.require(w.functional_equation_sign.has_value(), where + ": functional equation");
            o.require(w.euler_characteristic == c.chi, where + ": chi " + std::to_string(w.euler_characteristic));
            o.require(w.betti == c.betti, where + ": Betti numbers");
            o.require(w.riemann_ok && w.max_deviation <= kRiemannTolerance, where + ": root moduli");
        }
    if (o.ok) o.detail = "chi = 2, 3, 4, 4 at q = 2, 3, 4, 5";
    return o;
}

Outcome properties()
{
    Outcome o;
    // field axioms, exhaustive on pairs for fields up to 256 elements
    for (auto q : prime_powers_upto(256)) {
        const auto f = field(q);
        std::vector<FieldElement> all;
        for (const auto& x : enumerate_field(f)) all.push_back(x);
        bool ok = true;
        for (const auto& a : all) {
            ok = ok && pow(a, BigInt(static_cast<unsigned long>(q))) == a;
            if (!a.is_zero()) ok = ok && (a * inv(a)).is_one();
            for (const auto& b : all) {
                ok = ok && a * b == b * a && a + b == b + a;
                ok = ok && a * (b + all[q - 1]) == a * b + a * all[q - 1];
                ok = ok && (a * b) * all[q / 2] == a * (b * all[q / 2]);
            }
        }
        o.require(ok, "field axioms for q=" + std::to_string(q));
    }
    // x -> x^d partitions F_q
    for (auto q : prime_powers_upto(25))
        for (std::uint64_t d = 1; d <= 12; ++d) {
            const auto f = field(q);
            BigInt total = 0;
            for (const auto& a : enumerate_field(f)) total += count_power_roots(d, a, f);
            o.require(total == BigInt(static_cast<unsigned long>(q)), "power roots q=" + std::to_string(q));
        }
    // exp/log round trips
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> s{0};
        for (int i = 1; i <= 10; ++i) s.emplace_back(num(rng), den(rng));
        const PowerSeries a(s);
        o.require(series_log(series_exp(a)) == a, "log(exp(s)) != s");
        s[0] = 1;
        o.require(series_exp(series_log(PowerSeries(s))) == PowerSeries(s), "exp(log(s)) != s");
    }
    // zeta integrality through order 10
    for (const auto& fam : kleinian_suite()) {
        const auto seq = count_sequence(AffineModel({fam.equation}), 2, 1, 10);
        o.require(!seq.error && zeta_from_counts(seq.counts).is_integral(), "zeta integrality " + fam.name());
        const auto orb = orbifold_zeta(kleinian_orbifold_model(fam, CoarseSource::Conjectured), make_field(11, 1), 10);
        if (fam.group_order % 11) o.require(orb.is_integral(), "orbifold zeta integrality " + fam.name());
    }
    for (auto kind : {ThreefoldKind::Mu3, ThreefoldKind::Mu5})
        o.require(orbifold_zeta(threefold_orbifold_model(threefold_catalog(kind)), make_field(7, 1), 10).is_integral(),
                  "threefold zeta integrality");
    for (const auto* s : {"P2", "P1xP1", "Hirz3"})
        o.require(surface_catalog(s, 3).series(10).is_integral(), std::string("surface zeta integrality ") + s);
    // age pairing and Gorenstein equivalence
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned w1 = 0; w1 < n; ++w1)
            for (unsigned w2 = 0; w2 < n; ++w2)
                for (unsigned w3 = 0; w3 < n; ++w3) {
                    const DiagonalAction act{{w1, w2, w3}, n};
                    const auto ages = ages_cyclic(act);
                    for (unsigned a = 1; a < n; ++a) {
                        unsigned moving = 0;
                        for (unsigned w : act.weights) moving += a * w % n != 0;
                        o.require(ages[a - 1] + ages[n - a - 1] == Rational(moving), "age pairing");
                    }
                    if (std::gcd(std::gcd(w1, w2), std::gcd(w3, n)) == 1)
                        o.require(gorenstein_check(act) == ((w1 + w2 + w3) % n == 0), "Gorenstein criteria");
                }
    if (o.ok) o.detail = "fields, power roots, exp/log, integrality, ages";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limit_seconds;  // 0: no limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Kleinian coarse counts = q^2", 10, kleinian_coarse},
        {2, "Kleinian McKay identity", 0, kleinian_mckay},
        {3, "Kleinian zeta 1/((1-q^2t)(1-qt)^k)", 0, kleinian_zeta},
        {4, "threefold quotients mu3, mu5", 5, threefolds},
        {5, "Goettsche identity", 5, goettsche},
        {6, "Weil properties", 0, weil},
        {7, "property suites", 60, properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) out.require(false, "over the time limit");
        failed += !out.ok;
        std::printf("%s criterion %d: %s [%.2fs] %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs, out.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
