#include "orbizeta/zeta.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace orbizeta {

// ---------------------------------------------------------------------------
// integer polynomials

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p)
{
    UPoly t = p;
    trim(t);
    return static_cast<int>(t.size()) - 1;
}

UPoly poly_mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::string poly_to_string(const UPoly& p, char var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt mag = abs(p[i]);
        if (first)
            os << (p[i] < 0 ? "-" : "");
        else
            os << (p[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

namespace {

BigInt ipow(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

// Exact division of p by (1 - beta t); nullopt if it does not divide.
std::optional<UPoly> divide_linear(const UPoly& p, const BigInt& beta)
{
    // p = (1 - beta t) s  =>  s_0 = p_0, s_k = p_k + beta s_{k-1}
    if (p.size() < 2) return std::nullopt;
    UPoly s(p.size() - 1);
    s[0] = p[0];
    for (std::size_t k = 1; k < s.size(); ++k) s[k] = p[k] + beta * s[k - 1];
    if (p.back() + beta * s.back() != 0) return std::nullopt;
    return s;
}

std::optional<BigInt> exact_sqrt(const BigInt& q)
{
    if (q < 0) return std::nullopt;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    if (s * s == q) return s;
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// power series

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

PowerSeries PowerSeries::zero(int order) { return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, 0)); }

PowerSeries PowerSeries::one(int order)
{
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_poly(const UPoly& p, int order)
{
    auto s = zero(order);
    for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(order); ++i) s.coeffs_[i] = p[i];
    return s;
}

PowerSeries PowerSeries::truncated(int order) const
{
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool PowerSeries::is_integral() const
{
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<BigInt> PowerSeries::integer_coeffs() const
{
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) throw std::domain_error("series coefficient " + c.get_str() + " is not an integer");
        out.push_back(c.get_num());
    }
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const int R = std::min(a.order(), b.order());
    auto r = PowerSeries::zero(R);
    for (int i = 0; i <= R; ++i) r.coeffs_[i] = a[i] + b[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    const int R = std::min(a.order(), b.order());
    auto r = PowerSeries::zero(R);
    for (int i = 0; i <= R; ++i) r.coeffs_[i] = a[i] - b[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const int R = std::min(a.order(), b.order());
    auto r = PowerSeries::zero(R);
    for (int i = 0; i <= R; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= R; ++j) r.coeffs_[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b)
{
    if (b[0] == 0) throw std::domain_error("division by a series with zero constant term");
    const int R = std::min(a.order(), b.order());
    auto r = PowerSeries::zero(R);
    for (int n = 0; n <= R; ++n) {
        Rational acc = a[n];
        for (int k = 1; k <= n; ++k) acc -= b[k] * r.coeffs_[n - k];
        r.coeffs_[n] = acc / b[0];
    }
    return r;
}

std::string PowerSeries::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i].get_str();
    }
    os << " + O(t^" << coeffs_.size() << ')';
    return os.str();
}

PowerSeries series_exp(const PowerSeries& s)
{
    if (s[0] != 0) throw std::domain_error("exp needs a series with zero constant term");
    // E' = s' E  =>  n E_n = sum_{k=1..n} k s_k E_{n-k}
    const int R = s.order();
    std::vector<Rational> e(static_cast<std::size_t>(R) + 1, 0);
    e[0] = 1;
    for (int n = 1; n <= R; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            if (s[k] != 0) acc += k * s[k] * e[n - k];
        e[n] = acc / n;
    }
    return PowerSeries(std::move(e));
}

PowerSeries series_log(const PowerSeries& s)
{
    if (s[0] != 1) throw std::domain_error("log needs a series with constant term 1");
    // s L' = s'  =>  n L_n = n s_n - sum_{k=1..n-1} k L_k s_{n-k}
    const int R = s.order();
    std::vector<Rational> l(static_cast<std::size_t>(R) + 1, 0);
    for (int n = 1; n <= R; ++n) {
        Rational acc = n * s[n];
        for (int k = 1; k < n; ++k) acc -= k * l[k] * s[n - k];
        l[n] = acc / n;
    }
    return PowerSeries(std::move(l));
}

// ---------------------------------------------------------------------------
// rational functions and zeta functions

PowerSeries RationalFunction::expand(int order) const
{
    if (denominator.empty() || denominator[0] == 0)
        throw std::domain_error("rational function has no expansion at t = 0");
    return PowerSeries::from_poly(numerator, order) / PowerSeries::from_poly(denominator, order);
}

std::string RationalFunction::to_string() const
{
    return "(" + poly_to_string(numerator) + ")/(" + poly_to_string(denominator) + ")";
}

UPoly RationalFunction::from_reciprocal_roots(const std::vector<std::pair<BigInt, unsigned>>& roots)
{
    UPoly p{1};
    for (const auto& [beta, mult] : roots)
        for (unsigned i = 0; i < mult; ++i) p = poly_mul(p, UPoly{1, -beta});
    return p;
}

PowerSeries zeta_from_counts(const CountSequence& counts)
{
    const int R = static_cast<int>(counts.values.size());
    if (R < 1) throw std::invalid_argument("zeta needs at least one count");
    auto s = PowerSeries::zero(R).coeffs();
    for (int r = 1; r <= R; ++r) s[r] = Rational(counts.values[r - 1], BigInt(r));
    for (auto& c : s) c.canonicalize();
    return series_exp(PowerSeries(std::move(s)));
}

CountSequence counts_from_zeta(const RationalFunction& z, int R, std::uint64_t p, int e)
{
    if (R < 1) throw std::invalid_argument("R must be positive");
    if (z.numerator.empty() || z.denominator.empty() || z.numerator[0] != z.denominator[0])
        throw std::domain_error("zeta function must satisfy z(0) = 1");
    const PowerSeries l = series_log(z.expand(R));
    CountSequence out{p, e, {}};
    for (int r = 1; r <= R; ++r) {
        Rational n = r * l[r];
        if (n.get_den() != 1) throw std::domain_error("count N_" + std::to_string(r) + " = " + n.get_str()
                                                      + " is not an integer");
        out.values.push_back(n.get_num());
    }
    return out;
}

// ---------------------------------------------------------------------------
// recognition

TrialFactorization trial_factor(const UPoly& p, const BigInt& base)
{
    TrialFactorization out;
    out.remainder = p;
    trim(out.remainder);
    if (base < 1 || out.remainder.empty()) return out;
    for (unsigned i = 0; out.remainder.size() >= 2; ++i) {
        const BigInt b = ipow(base, i);
        // every integer reciprocal root divides the leading coefficient
        if (out.remainder.back() % b != 0) break;
        for (int sign : {1, -1}) {
            const BigInt beta = sign * b;
            unsigned mult = 0;
            while (auto s = divide_linear(out.remainder, beta)) {
                out.remainder = std::move(*s);
                ++mult;
            }
            if (mult) out.factors.push_back({beta, sign, i, mult});
        }
        if (base == 1) break;
    }
    return out;
}

namespace {

// Berlekamp-Massey over Q: returns the connection polynomial C (C_0 = 1) and
// the recurrence length L with sum_{i=0..L} C_i s_{n-i} = 0 for n >= L.
std::pair<std::vector<Rational>, int> berlekamp_massey(const std::vector<Rational>& s)
{
    std::vector<Rational> C{1}, B{1};
    int L = 0;
    int m = 1;
    Rational b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational d = s[n];
        for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i) d += C[i] * s[n - i];
        if (d == 0) {
            ++m;
            continue;
        }
        std::vector<Rational> T = C;
        const Rational coef = d / b;
        if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
        for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
        if (2 * L <= static_cast<int>(n)) {
            L = static_cast<int>(n) + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }
    while (C.size() > 1 && C.back() == 0) C.pop_back();
    return {C, L};
}

// Scales a pair of rational polynomials to coprime-content integer ones with
// positive denominator constant term.
RationalFunction integerize(std::vector<Rational> num, std::vector<Rational> den)
{
    BigInt l = 1;
    for (const auto* v : {&num, &den})
        for (const auto& c : *v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    UPoly n, d;
    for (const auto& c : num) n.push_back(Rational(c * l).get_num());
    for (const auto& c : den) d.push_back(Rational(c * l).get_num());
    trim(n);
    trim(d);
    BigInt g = 0;
    for (const auto* v : {&n, &d})
        for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        for (auto& c : n) c /= g;
        for (auto& c : d) c /= g;
    }
    if (!d.empty() && d[0] < 0) {
        for (auto& c : n) c = -c;
        for (auto& c : d) c = -c;
    }
    return {n, d};
}

}  // namespace

std::string Recognition::factored_string() const
{
    if (!recognized) return "not recognized";
    auto render = [](const TrialFactorization& tf) {
        std::string s;
        for (const auto& f : tf.factors) {
            s += "(" + poly_to_string(UPoly{1, -f.root}) + ")";
            if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
        }
        return s.empty() ? std::string("1") : s;
    };
    if (denominator_factors && denominator_factors->complete() && numerator_factors && numerator_factors->complete()) {
        std::string den = render(*denominator_factors);
        if (denominator_factors->factors.size() > 1 || (denominator_factors->factors.size() == 1
                                                        && denominator_factors->factors[0].multiplicity > 1))
            den = "(" + den + ")";
        return render(*numerator_factors) + "/" + den;
    }
    return form.to_string();
}

Recognition recognize_rational(const PowerSeries& s, int max_den_deg, std::optional<BigInt> trial_base)
{
    Recognition out;
    const auto& c = s.coeffs();
    auto [C, L] = berlekamp_massey(c);
    out.recurrence_length = L;
    const int den_deg = static_cast<int>(C.size()) - 1;
    if (den_deg > max_den_deg) {
        out.reason = "shortest recurrence needs a denominator of degree " + std::to_string(den_deg) + " > "
                     + std::to_string(max_den_deg);
        return out;
    }
    if (2 * L > static_cast<int>(c.size())) {
        out.reason = "recurrence of length " + std::to_string(L) + " is not determined by " + std::to_string(c.size())
                     + " coefficients";
        return out;
    }
    // numerator = (s * C) mod t^L
    std::vector<Rational> num(static_cast<std::size_t>(std::max(L, 1)), 0);
    for (int n = 0; n < static_cast<int>(num.size()) && n < static_cast<int>(c.size()); ++n)
        for (int i = 0; i <= n && i < static_cast<int>(C.size()); ++i) num[n] += C[i] * c[n - i];
    out.form = integerize(std::move(num), C);
    if (out.form.denominator.empty() || out.form.denominator[0] == 0)
        throw std::logic_error("recognized denominator vanishes at t = 0");

    const PowerSeries re = out.form.expand(s.order());
    if (!(re == s)) throw std::logic_error("recognized rational function does not reproduce the series");
    out.recognized = true;

    if (trial_base) {
        out.denominator_factors = trial_factor(out.form.denominator, *trial_base);
        out.numerator_factors = trial_factor(out.form.numerator, *trial_base);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weil properties

namespace {

using cld = std::complex<long double>;

cld eval_reversed(const UPoly& p, cld x)
{
    // x^d p(1/x) = sum_j p_j x^{d-j}
    cld acc = 0;
    for (const auto& c : p) acc = acc * x + static_cast<long double>(c.get_d());
    return acc;
}

cld eval_reversed_derivative(const UPoly& p, cld x)
{
    const std::size_t d = p.size() - 1;
    cld acc = 0;
    for (std::size_t j = 0; j < d; ++j)
        acc = acc * x + static_cast<long double>(p[j].get_d()) * static_cast<long double>(d - j);
    return acc;
}

// Reciprocal roots of p (p(0) != 0): roots of the reversed polynomial.
std::vector<cld> numeric_reciprocal_roots(const UPoly& p)
{
    const int d = static_cast<int>(p.size()) - 1;
    if (d < 1) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    const double lead = p[0].get_d();
    for (int j = 0; j < d; ++j) comp(0, j) = -p[static_cast<std::size_t>(j) + 1].get_d() / lead;
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    std::vector<cld> roots;
    for (int i = 0; i < d; ++i) {
        cld x(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        for (int it = 0; it < 8; ++it) {
            cld fp = eval_reversed_derivative(p, x);
            if (std::abs(fp) == 0) break;
            cld step = eval_reversed(p, x) / fp;
            x -= step;
            if (std::abs(step) <= 1e-18L * std::abs(x)) break;
        }
        roots.push_back(x);
    }
    return roots;
}

// Functional-equation sign: compares c * Ntilde * D with +-N * Dtilde, where
// Ptilde(t) = t^{deg P} P(1/(q^n t)) * q^{n deg P}.
std::optional<int> functional_equation_sign(const RationalFunction& z, int n, const BigInt& q, int chi)
{
    auto tilde = [&](const UPoly& p) {
        const int d = static_cast<int>(p.size()) - 1;
        UPoly out(p.size());
        const BigInt qn = ipow(q, static_cast<unsigned long>(n));
        for (int k = 0; k <= d; ++k) out[k] = p[d - k] * ipow(qn, static_cast<unsigned long>(k));
        trim(out);
        return out;
    };
    UPoly A = poly_mul(tilde(z.numerator), z.denominator);
    UPoly B = poly_mul(z.numerator, tilde(z.denominator));
    const long long nchi = static_cast<long long>(n) * chi;
    BigInt c;
    if (nchi % 2 == 0) {
        c = ipow(q, static_cast<unsigned long>(std::llabs(nchi) / 2));
    } else {
        auto s = exact_sqrt(q);
        if (!s) return std::nullopt;
        c = ipow(*s, static_cast<unsigned long>(std::llabs(nchi)));
    }
    UPoly& scaled = nchi >= 0 ? A : B;
    for (auto& x : scaled) x *= c;
    if (A == B) return 1;
    UPoly negB = B;
    for (auto& x : negB) x = -x;
    if (A == negB) return -1;
    return std::nullopt;
}

}  // namespace

WeilReport weil_check(const RationalFunction& z, int n, const BigInt& q)
{
    WeilReport rep;
    rep.rational_form = z;
    UPoly num = z.numerator, den = z.denominator;
    trim(num);
    trim(den);
    if (num.empty() || den.empty() || num[0] != den[0] || num[0] == 0) {
        rep.notes.push_back("z(0) != 1");
        return rep;
    }
    rep.euler_characteristic = static_cast<int>(den.size()) - static_cast<int>(num.size());
    rep.functional_equation_sign = functional_equation_sign({num, den}, n, q, rep.euler_characteristic);

    // exact reciprocal roots first, then numeric ones for what is left
    const auto sqrt_q = exact_sqrt(q);
    const BigInt base = sqrt_q ? *sqrt_q : q;
    const unsigned weight_per_power = sqrt_q ? 1 : 2;
    const double logq = std::log(q.get_d());
    double max_coeff = 0;
    for (const auto* v : {&num, &den})
        for (const auto& c : *v) max_coeff = std::max(max_coeff, std::abs(c.get_d()));

    for (bool in_num : {false, true}) {
        const UPoly& p = in_num ? num : den;
        TrialFactorization tf = trial_factor(p, base);
        for (const auto& f : tf.factors) {
            for (unsigned k = 0; k < f.multiplicity; ++k) {
                ReciprocalRoot r;
                r.re = f.root.get_d();
                r.modulus = std::abs(r.re);
                r.weight = static_cast<int>(f.power * weight_per_power);
                r.in_numerator = in_num;
                r.exact = true;
                r.deviation = 0;
                rep.roots.push_back(r);
            }
        }
        if (tf.remainder.size() > 1) {
            for (const cld& a : numeric_reciprocal_roots(tf.remainder)) {
                ReciprocalRoot r;
                r.re = static_cast<double>(a.real());
                r.im = static_cast<double>(a.imag());
                r.modulus = static_cast<double>(std::abs(a));
                r.weight = static_cast<int>(std::lround(2.0 * std::log(r.modulus) / logq));
                r.in_numerator = in_num;
                r.deviation = std::abs(r.modulus / std::pow(q.get_d(), r.weight / 2.0) - 1.0);
                // residual of p at the root 1/alpha
                cld t = 1.0L / a;
                cld acc = 0;
                for (std::size_t j = p.size(); j-- > 0;) acc = acc * t + static_cast<long double>(p[j].get_d());
                rep.max_residual = std::max(rep.max_residual, static_cast<double>(std::abs(acc)));
                rep.roots.push_back(r);
            }
        }
    }
    if (rep.max_residual > 1e-8 * (1 + max_coeff)) rep.notes.push_back("numeric root residual above tolerance");

    bool parity_ok = true, range_ok = true;
    for (const auto& r : rep.roots) {
        rep.betti[r.weight] += 1;
        rep.max_deviation = std::max(rep.max_deviation, r.deviation);
        if ((r.weight % 2 == 1) != r.in_numerator) parity_ok = false;
        if (r.weight < 0 || r.weight > 2 * n) range_ok = false;
    }
    const BigInt qn = ipow(q, static_cast<unsigned long>(n));
    auto has_root = [&](const BigInt& beta) {
        for (const auto& r : rep.roots)
            if (r.exact && !r.in_numerator && r.im == 0 && BigInt(r.re) == beta) return true;
        return false;
    };
    const bool ends_ok = has_root(1) && has_root(qn) && rep.betti[0] == 1 && rep.betti[2 * n] == 1;
    if (!parity_ok) rep.notes.push_back("a reciprocal root has a weight of the wrong parity");
    if (!range_ok) rep.notes.push_back("a reciprocal root has weight outside [0, 2n]");
    if (!ends_ok) rep.notes.push_back("P_0 = 1 - t or P_2n = 1 - q^n t is missing");
    rep.rationality_ok = parity_ok && range_ok && ends_ok;
    // drop empty betti entries created by the lookups above
    for (auto it = rep.betti.begin(); it != rep.betti.end();) it = it->second == 0 ? rep.betti.erase(it) : std::next(it);
    rep.riemann_ok = rep.max_deviation <= kRiemannTolerance && rep.max_residual <= 1e-8 * (1 + max_coeff);
    if (!rep.functional_equation_sign) rep.notes.push_back("functional equation does not hold");
    return rep;
}

}  // namespace orbizeta
