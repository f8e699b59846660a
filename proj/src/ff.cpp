#include "orbizeta/ff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbizeta {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // low degree first, over F_p

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return (s >= p || s < a) ? s - p : s; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 n, u64 p)
{
    u64 r = 1 % p;
    while (n) {
        if (n & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        n >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_rem(Poly f, const Poly& g, u64 p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        u64 lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead) {
            for (std::size_t i = 0; i < dg; ++i)
                f[shift + i] = submod(f[shift + i], mulmod(lead, g[i], p), p);
        }
        f.pop_back();
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    return poly_rem(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 n, const Poly& m, u64 p)
{
    Poly r{1};
    r = poly_rem(r, m, p);
    while (n) {
        if (n & 1) r = poly_mulmod(r, base, m, p);
        n >>= 1;
        if (n) base = poly_mulmod(base, base, m, p);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a := a mod b
        u64 li = invmod(b.back(), p);
        for (auto& c : b) c = mulmod(c, li, p);
        a = poly_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// x^{p^k} mod m, by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& m, u64 p, int k)
{
    Poly x = poly_rem(Poly{0, 1}, m, p);
    for (int i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
    return x;
}

Poly sub_x(Poly f, u64 p)
{
    if (f.size() < 2) f.resize(2, 0);
    f[1] = submod(f[1], 1, p);
    trim(f);
    return f;
}

u64 checked_power(u64 p, int e)
{
    u128 q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize) return 0;
    }
    return static_cast<u64>(q);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(b.get_mpz_t(), 30) > 0;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint64_t, int> prime_power_decompose(std::uint64_t q)
{
    if (q < 2) return {0, 0};
    auto f = prime_factors(q);
    if (f.size() != 1) return {0, 0};
    int e = 0;
    while (q > 1) {
        q /= f[0];
        ++e;
    }
    return {f[0], e};
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p)
{
    Poly m(monic.begin(), monic.end());
    trim(m);
    if (m.size() < 2 || m.back() != 1) return false;
    const int e = static_cast<int>(m.size()) - 1;
    if (e == 1) return true;
    if (m[0] == 0) return false;
    // x^{p^e} = x mod m
    if (sub_x(frobenius_power_of_x(m, p, e), p) != Poly{}) return false;
    for (u64 l : prime_factors(static_cast<u64>(e))) {
        Poly g = poly_gcd(m, sub_x(frobenius_power_of_x(m, p, e / static_cast<int>(l)), p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool operator==(const FieldDesc& a, const FieldDesc& b)
{
    if (a.impl_ == b.impl_) return true;
    if (!a.impl_ || !b.impl_) return false;
    return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

std::string FieldDesc::to_string() const
{
    if (!impl_) return "F_?";
    std::ostringstream os;
    os << "F_" << impl_->p;
    if (impl_->e > 1) os << '^' << impl_->e;
    return os.str();
}

FieldDesc make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    trim(modulus);
    const int e = static_cast<int>(modulus.size()) - 1;
    if (e < 1 || e > kMaxExtensionDegree)
        throw std::invalid_argument("extension degree out of range [1, 20]");
    const u64 q = checked_power(p, e);
    if (q == 0) throw std::invalid_argument("field size exceeds the configured bound");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("modulus is not monic irreducible");
    return FieldDesc(std::make_shared<const FieldDesc::Impl>(FieldDesc::Impl{p, e, q, std::move(modulus)}));
}

FieldDesc make_field(std::uint64_t p, int e)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxExtensionDegree) throw std::invalid_argument("extension degree out of range [1, 20]");
    if (checked_power(p, e) == 0) throw std::invalid_argument("field size exceeds the configured bound");

    // Candidates x^e + c_{e-1} x^{e-1} + ... + c_0 in lexicographic order of
    // (c_0, c_1, ..., c_{e-1}): odometer with c_{e-1} varying fastest.
    Poly cand(static_cast<std::size_t>(e) + 1, 0);
    cand[static_cast<std::size_t>(e)] = 1;
    while (true) {
        if (is_irreducible_mod_p(cand, p)) break;
        int i = e - 1;
        while (i >= 0) {
            if (++cand[static_cast<std::size_t>(i)] < p) break;
            cand[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
    }
    return FieldDesc(std::make_shared<const FieldDesc::Impl>(
        FieldDesc::Impl{p, e, checked_power(p, e), std::move(cand)}));
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldDesc field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    const auto e = static_cast<std::size_t>(field_.e());
    for (auto& c : coeffs_) c %= field_.p();
    if (coeffs_.size() > e)
        coeffs_ = poly_rem(std::move(coeffs_), Poly(field_.modulus().begin(), field_.modulus().end()), field_.p());
    coeffs_.resize(e, 0);
}

bool FieldElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

bool FieldElement::is_one() const
{
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](u64 c) { return c == 0; });
}

std::string FieldElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (!coeffs_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

static void require_same_field(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field() == b.field()))
        throw std::invalid_argument("operands belong to different fields: " + a.field().to_string() + " vs "
                                    + b.field().to_string());
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    require_same_field(*this, o);
    const u64 p = field_.p();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = addmod(coeffs_[i], o.coeffs_[i], p);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    require_same_field(*this, o);
    const u64 p = field_.p();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = submod(coeffs_[i], o.coeffs_[i], p);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    require_same_field(*this, o);
    const Poly m(field_.modulus().begin(), field_.modulus().end());
    Poly r = poly_mulmod(coeffs_, o.coeffs_, m, field_.p());
    r.resize(coeffs_.size(), 0);
    coeffs_ = std::move(r);
    return *this;
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = submod(0, c, field_.p());
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.field() == b.field() && a.coeffs_ == b.coeffs_;
}

FieldElement zero(const FieldDesc& f) { return FieldElement(f, {}); }
FieldElement one(const FieldDesc& f) { return FieldElement(f, {1}); }

FieldElement pow(const FieldElement& a, const BigInt& n)
{
    if (sgn(n) < 0) throw std::invalid_argument("negative exponent");
    FieldElement r = one(a.field());
    FieldElement base = a;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) r *= base;
        if (i + 1 < bits) base *= base;
    }
    return r;
}

FieldElement inv(const FieldElement& a)
{
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    return pow(a, BigInt(a.field().size()) - 2);
}

FieldElement frobenius_map(const FieldElement& a, const FieldDesc& f, const BigInt& base_power)
{
    if (!(a.field() == f)) throw std::invalid_argument("element does not belong to the given field");
    if (base_power < 2) throw std::invalid_argument("frobenius base power must be a power of p");
    BigInt b = base_power;
    int e0 = 0;
    while (b > 1) {
        if (b % f.p() != 0) throw std::invalid_argument("frobenius base power is not a power of p");
        b /= f.p();
        ++e0;
    }
    if (f.e() % e0 != 0) throw std::invalid_argument("frobenius base power is not a subfield size");
    return pow(a, base_power);
}

FieldElement lift_integer(const BigInt& n, const FieldDesc& f)
{
    BigInt r = n % BigInt(f.p());
    if (r < 0) r += f.p();
    return FieldElement(f, {r.get_ui()});
}

std::uint64_t element_index(const FieldElement& a)
{
    u64 idx = 0;
    for (u64 c : a.coeffs()) idx = idx * a.field().p() + c;
    return idx;
}

FieldElement element_at(const FieldDesc& f, std::uint64_t index)
{
    const auto e = static_cast<std::size_t>(f.e());
    std::vector<u64> c(e, 0);
    for (std::size_t i = e; i-- > 0;) {
        c[i] = index % f.p();
        index /= f.p();
    }
    return FieldElement(f, std::move(c));
}

// ---------------------------------------------------------------------------

LogTable::LogTable(FieldDesc f) : field_(std::move(f)), q_(field_.size())
{
    if (q_ > kMaxEnumerableField)
        throw std::length_error("field " + field_.to_string() + " is too large to tabulate");
    order_ = static_cast<std::uint32_t>(q_ - 1);
    const auto factors = prime_factors(order_);

    // first primitive element in enumeration order
    FieldElement g;
    for (u64 i = 1; i < q_; ++i) {
        FieldElement cand = element_at(field_, i);
        bool primitive = true;
        for (u64 l : factors) {
            if (orbizeta::pow(cand, BigInt(static_cast<unsigned long>(order_ / l))).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }

    log_of_index_.assign(q_, order_);
    index_of_log_.assign(order_, 0);
    FieldElement x = orbizeta::one(field_);
    for (std::uint32_t k = 0; k < order_; ++k) {
        auto idx = static_cast<std::uint32_t>(element_index(x));
        index_of_log_[k] = idx;
        log_of_index_[idx] = k;
        x *= g;
    }

    // Adding 1 increments coeffs[0], the most significant digit of the index.
    const u64 p = field_.p();
    u64 top = 1;
    for (int i = 1; i < field_.e(); ++i) top *= p;
    zech_.assign(order_, order_);
    for (std::uint32_t k = 0; k < order_; ++k) {
        u64 idx = index_of_log_[k];
        u64 digit = idx / top;
        u64 plus_one = digit + 1 == p ? idx - digit * top : idx + top;
        zech_[k] = log_of_index_[plus_one];
    }
    minus_one_ = p == 2 ? 0 : order_ / 2;
}

LogTable::Log LogTable::pow(Log a, std::uint64_t n) const
{
    if (a == order_) return n == 0 ? 0 : order_;
    return static_cast<Log>(static_cast<u128>(a) * (n % order_) % order_);
}

LogTable::Log LogTable::inv(Log a) const
{
    if (a == order_) throw std::domain_error("inversion of zero");
    return a == 0 ? 0 : order_ - a;
}

LogTable::Log LogTable::from_element(const FieldElement& a) const
{
    if (!(a.field() == field_)) throw std::invalid_argument("element does not belong to the tabulated field");
    return log_of_index_[element_index(a)];
}

LogTable::Log LogTable::lift(const BigInt& n) const
{
    return from_element(lift_integer(n, field_));
}

LogTable::Log LogTable::element_of_order(std::uint64_t n, std::size_t skip) const
{
    if (n == 0 || order_ % n != 0)
        throw std::domain_error("no element of order " + std::to_string(n) + " in " + field_.to_string());
    for (u64 idx = 1; idx < q_; ++idx) {
        Log l = log_of_index_[idx];
        u64 ord = order_ / std::gcd(static_cast<u64>(l), static_cast<u64>(order_));
        if (ord == n) {
            if (skip == 0) return l;
            --skip;
        }
    }
    throw std::domain_error("not enough elements of order " + std::to_string(n));
}

}  // namespace orbizeta
