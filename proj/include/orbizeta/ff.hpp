#ifndef ORBIZETA_FF_HPP
#define ORBIZETA_FF_HPP

#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbizeta {

using BigInt = mpz_class;
using Rational = mpq_class;

// Largest p^e accepted by make_field, and largest field that may be
// enumerated element by element (or tabulated, see LogTable).
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kMaxEnumerableField = std::uint64_t{1} << 22;
inline constexpr int kMaxExtensionDegree = 20;

/// A finite field F_{p^e} presented as F_p[x]/(modulus).
///
/// Cheap to copy: the descriptor is an immutable shared block.  Two
/// descriptors compare equal when p, e and the modulus agree.
class FieldDesc {
public:
    FieldDesc() = default;

    std::uint64_t p() const { return impl_->p; }
    int e() const { return impl_->e; }
    /// q = p^e.
    std::uint64_t size() const { return impl_->q; }
    /// e+1 coefficients, low degree first, monic.
    std::span<const std::uint64_t> modulus() const { return impl_->modulus; }
    bool valid() const { return impl_ != nullptr; }

    std::string to_string() const;

    friend bool operator==(const FieldDesc& a, const FieldDesc& b);

private:
    struct Impl {
        std::uint64_t p;
        int e;
        std::uint64_t q;
        std::vector<std::uint64_t> modulus;
    };
    explicit FieldDesc(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend FieldDesc make_field(std::uint64_t p, int e);
    friend FieldDesc make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
};

/// Builds F_{p^e} using the lexicographically smallest monic irreducible
/// polynomial of degree e (coefficients compared low degree first).
/// Throws std::invalid_argument for non-prime p, e outside [1, 20], or
/// p^e above kMaxFieldSize.
FieldDesc make_field(std::uint64_t p, int e);

/// Builds a field from an explicit modulus; the modulus must be monic and
/// irreducible over F_p.
FieldDesc make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

/// Rabin's irreducibility test for a monic polynomial over F_p.
bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// If q = p^e for a prime p, returns {p, e}; otherwise {0, 0}.
std::pair<std::uint64_t, int> prime_power_decompose(std::uint64_t q);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldDesc field, std::vector<std::uint64_t> coeffs);

    const FieldDesc& field() const { return field_; }
    std::span<const std::uint64_t> coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldDesc field_;
    std::vector<std::uint64_t> coeffs_;
};

FieldElement zero(const FieldDesc& f);
FieldElement one(const FieldDesc& f);

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inv(const FieldElement& a);

/// a^n by square-and-multiply.  Throws std::invalid_argument for n < 0.
FieldElement pow(const FieldElement& a, const BigInt& n);

/// a^{base_power}, where base_power = p^{e0} with e0 | e.  The map is an
/// automorphism whose fixed field has base_power elements.
FieldElement frobenius_map(const FieldElement& a, const FieldDesc& f, const BigInt& base_power);

/// Image of n in the prime subfield.
FieldElement lift_integer(const BigInt& n, const FieldDesc& f);

/// Position of an element in enumeration order, and its inverse.  The order
/// is lexicographic on the coefficient sequence, coeffs[0] compared first.
std::uint64_t element_index(const FieldElement& a);
FieldElement element_at(const FieldDesc& f, std::uint64_t index);

/// All q elements in enumeration order.  Throws std::length_error when
/// q > kMaxEnumerableField.
inline auto enumerate_field(const FieldDesc& f)
{
    if (f.size() > kMaxEnumerableField)
        throw std::length_error("field " + f.to_string() + " is too large to enumerate");
    return std::views::iota(std::uint64_t{0}, f.size())
        | std::views::transform([f](std::uint64_t i) { return element_at(f, i); });
}

/// Discrete-log tables for an enumerable field.
///
/// Nonzero elements are represented by their logarithm to a fixed primitive
/// element g (the first primitive element in enumeration order); zero is the
/// sentinel value zero().  Addition goes through the Zech table
/// zech[k] = log(1 + g^k).
class LogTable {
public:
    using Log = std::uint32_t;

    explicit LogTable(FieldDesc f);

    const FieldDesc& field() const { return field_; }
    std::uint64_t size() const { return q_; }
    /// q - 1, the order of the multiplicative group.
    std::uint32_t group_order() const { return order_; }

    Log zero() const { return order_; }
    Log one() const { return 0; }
    bool is_zero(Log a) const { return a == order_; }

    Log mul(Log a, Log b) const
    {
        if (a == order_ || b == order_) return order_;
        std::uint32_t s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    Log add(Log a, Log b) const
    {
        if (a == order_) return b;
        if (b == order_) return a;
        std::uint32_t d = b >= a ? b - a : b + order_ - a;
        Log z = zech_[d];
        if (z == order_) return order_;
        std::uint32_t s = a + z;
        return s >= order_ ? s - order_ : s;
    }
    Log neg(Log a) const { return a == order_ ? a : mul(a, minus_one_); }
    Log pow(Log a, std::uint64_t n) const;
    Log inv(Log a) const;

    Log from_index(std::uint64_t index) const { return log_of_index_[index]; }
    std::uint64_t to_index(Log a) const { return a == order_ ? 0 : index_of_log_[a]; }
    Log from_element(const FieldElement& a) const;
    FieldElement to_element(Log a) const { return element_at(field_, to_index(a)); }
    Log lift(const BigInt& n) const;

    /// Smallest element in enumeration order with exact multiplicative
    /// order n, skipping the first `skip` such elements.  Throws
    /// std::domain_error when n does not divide q - 1.
    Log element_of_order(std::uint64_t n, std::size_t skip = 0) const;

private:
    FieldDesc field_;
    std::uint64_t q_;
    std::uint32_t order_;
    Log minus_one_;
    std::vector<Log> log_of_index_;
    std::vector<std::uint32_t> index_of_log_;
    std::vector<Log> zech_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace orbizeta

#endif
