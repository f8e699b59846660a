#ifndef ORBIZETA_ZETA_HPP
#define ORBIZETA_ZETA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbizeta/counting.hpp"
#include "orbizeta/ff.hpp"

namespace orbizeta {

/// Univariate integer polynomial, low degree first.  Trailing zeros are
/// trimmed by every operation below; the zero polynomial is empty.
using UPoly = std::vector<BigInt>;

void trim(UPoly& p);
UPoly poly_mul(const UPoly& a, const UPoly& b);
int degree(const UPoly& p);
std::string poly_to_string(const UPoly& p, char var = 't');

/// Truncated power series c_0 + c_1 t + ... + c_R t^R with exact rational
/// coefficients.  Binary operations truncate to the smaller order.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rational> coeffs);
    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    static PowerSeries from_poly(const UPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    PowerSeries truncated(int order) const;

    /// Coefficients as integers; throws std::domain_error if any is not.
    std::vector<BigInt> integer_coeffs() const;
    bool is_integral() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    /// Throws std::domain_error when b has zero constant term.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// Formal exponential; requires a zero constant term.
PowerSeries series_exp(const PowerSeries& s);
/// Formal logarithm; requires constant term 1.
PowerSeries series_log(const PowerSeries& s);

/// numerator / denominator with integer coefficients.
struct RationalFunction {
    UPoly numerator{1};
    UPoly denominator{1};

    /// Taylor expansion through t^order; requires denominator(0) != 0.
    PowerSeries expand(int order) const;
    std::string to_string() const;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// prod_j (1 - roots[j] t) with the given multiplicities.
    static UPoly from_reciprocal_roots(const std::vector<std::pair<BigInt, unsigned>>& roots);
};

/// exp(sum_{r=1..R} N_r t^r / r), truncated at t^R.
PowerSeries zeta_from_counts(const CountSequence& counts);

/// Inverse of zeta_from_counts: N_r = r * [t^r] log z.  Requires z(0) = 1;
/// throws std::domain_error if some N_r is not an integer.
CountSequence counts_from_zeta(const RationalFunction& z, int R, std::uint64_t p = 0, int e = 0);

/// One factor (1 - root*t)^multiplicity of a trial factorization, with
/// root = sign * base^power.
struct TrialFactor {
    BigInt root;
    int sign = 1;
    unsigned power = 0;
    unsigned multiplicity = 0;
    friend bool operator==(const TrialFactor&, const TrialFactor&) = default;
};

struct TrialFactorization {
    std::vector<TrialFactor> factors;
    UPoly remainder;  // what is left after dividing out every factor
    bool complete() const { return remainder == UPoly{1}; }
};

/// Divides out (1 - s*base^i t) for s = +-1 and every i for which base^i can
/// still divide the leading coefficient.
TrialFactorization trial_factor(const UPoly& p, const BigInt& base);

struct Recognition {
    bool recognized = false;
    std::string reason;  // why recognition failed
    RationalFunction form;
    int recurrence_length = 0;
    std::optional<TrialFactorization> denominator_factors;
    std::optional<TrialFactorization> numerator_factors;

    /// "1/((1 - 49t)(1 - 7t)^2)" when the trial factorization is complete,
    /// otherwise form.to_string().
    std::string factored_string() const;
};

/// Finds the shortest linear recurrence of the coefficients with
/// Berlekamp-Massey over Q and returns the matching rational function.
/// Recognition fails (without throwing) if the recurrence needs a
/// denominator of degree above max_den_deg, or if there are fewer than
/// twice as many coefficients as the recurrence length.  With a trial base,
/// numerator and denominator are also factored over roots +-base^i.
Recognition recognize_rational(const PowerSeries& s, int max_den_deg, std::optional<BigInt> trial_base = {});

struct ReciprocalRoot {
    double re = 0;
    double im = 0;
    double modulus = 0;
    int weight = 0;  // i with |alpha| ~ q^{i/2}
    bool in_numerator = false;
    bool exact = false;  // integer root found by trial division
    double deviation = 0;  // | |alpha| / q^{i/2} - 1 |
};

struct WeilReport {
    RationalFunction rational_form;
    std::vector<ReciprocalRoot> roots;
    /// weight i -> number of reciprocal roots of that weight (= deg P_i).
    std::map<int, int> betti;
    /// P_0 = 1 - t, P_2n = 1 - q^n t, odd weights in the numerator and even
    /// weights in the denominator, all weights in [0, 2n].
    bool rationality_ok = false;
    std::optional<int> functional_equation_sign;
    int euler_characteristic = 0;
    bool riemann_ok = false;
    double max_deviation = 0;
    double max_residual = 0;
    std::vector<std::string> notes;
};

inline constexpr double kRiemannTolerance = 1e-6;

/// Diagnostic report on the Weil properties of z, taken as the zeta function
/// of an n-dimensional variety over F_q.  Never throws on mathematical
/// failures; they are recorded in the report.
WeilReport weil_check(const RationalFunction& z, int n, const BigInt& q);

}  // namespace orbizeta

#endif
