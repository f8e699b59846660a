#ifndef ORBIZETA_COUNTING_HPP
#define ORBIZETA_COUNTING_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbizeta/ff.hpp"
#include "orbizeta/polynomial.hpp"

namespace orbizeta {

/// Raised when a count would need more work than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by count_affine_charsum when no variable can be solved for.
class NotSolvable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct CountOptions {
    /// Maximum number of candidate tuples evaluated by one count call.
    std::uint64_t budget = kDefaultBudget;
    /// Worker threads for chunked enumeration; 0 picks hardware concurrency.
    unsigned threads = 0;
};

/// Simultaneous vanishing locus of integer polynomials in num_vars()
/// variables.  One model defines a point set over every finite field.
class AffineModel {
public:
    AffineModel() = default;
    /// Equations may use any subset of `variables`; they are rebased onto it.
    AffineModel(std::vector<std::string> variables, const std::vector<IntPolynomial>& equations);
    /// Model whose variables are the sorted union of the equations' variables.
    explicit AffineModel(const std::vector<IntPolynomial>& equations);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t num_vars() const { return variables_.size(); }
    const std::vector<IntPolynomial>& equations() const { return equations_; }

private:
    std::vector<std::string> variables_;
    std::vector<IntPolynomial> equations_;
};

/// N_r = #X(F_{q^r}) for r = 1..R, q = p^e.
struct CountSequence {
    std::uint64_t p = 0;
    int e = 0;
    std::vector<BigInt> values;

    BigInt q() const;
    friend bool operator==(const CountSequence&, const CountSequence&) = default;
};

enum class Engine { BruteForce, PowerRoots };
std::string to_string(Engine e);

/// Shape u^d = g(other variables), detected syntactically: the variable
/// occurs in exactly one term, alone, with coefficient +1 or -1.
struct PowerShape {
    std::size_t variable;
    unsigned degree;
    int sign;  // coefficient of u^d
};
std::optional<PowerShape> detect_power_shape(const AffineModel& m);

/// #{x in F_q^n : every equation vanishes}, by exhaustive enumeration split
/// into chunks on the leading variable.  Throws BudgetExceeded when
/// q^n > options.budget.
BigInt count_affine_bruteforce(const AffineModel& m, const FieldDesc& f, const CountOptions& options = {});

/// Same count for a single equation u^d = g(rest): sums the number of d-th
/// roots of g over all assignments of the remaining variables.  Throws
/// NotSolvable when the equation has no such shape.
BigInt count_affine_charsum(const AffineModel& m, const FieldDesc& f, const CountOptions& options = {});

struct CountResult {
    BigInt value;
    Engine engine;
};

/// Fastest applicable engine: power-roots when the shape is detected,
/// brute force otherwise.
CountResult count_affine(const AffineModel& m, const FieldDesc& f, const CountOptions& options = {});

struct CountSequenceResult {
    CountSequence counts;
    std::vector<Engine> engines;  // one per computed value
    std::optional<std::string> error;  // set when the sequence stopped early
};

/// Counts over F_{q^r}, r = 1..R, with F_{q^r} built directly as
/// F_{p^{e r}}.  The power-roots engine is used whenever applicable.  A
/// budget or field-size failure at some r stops the sequence and is
/// reported in `error`; the computed prefix is kept.
CountSequenceResult count_sequence(const AffineModel& m, std::uint64_t p, int e, int R,
                                   const CountOptions& options = {});

/// #{x in F_q : x^d = a}.
BigInt count_power_roots(std::uint64_t d, const FieldElement& a, const FieldDesc& f);

/// #P^n(F_q) = 1 + q + ... + q^n.
BigInt count_projective_space(unsigned n, const BigInt& q);

/// Point count of a Zariski-locally-trivial fibre bundle.
BigInt count_bundle(const BigInt& base, const BigInt& fiber);

/// Diagonal action of mu_n on A^k with the given weights.
struct DiagonalAction {
    std::vector<unsigned> weights;
    unsigned order;
};

/// #{x in Fbar^k : zeta^{a w_i} x_i^q = x_i for all i} for zeta of exact
/// order `order`.  Every coordinate contributes 1 + (q - 1), so the value is
/// q^k whenever gcd(q, order) = 1.
BigInt count_twisted_diagonal(const DiagonalAction& action, const FieldDesc& f, unsigned a);
BigInt count_twisted_diagonal(const DiagonalAction& action, const BigInt& q, unsigned a);

/// Verification path for count_twisted_diagonal: counts each coordinate's
/// solutions by enumerating F_{q^m} for the least m with
/// order*(q-1) | q^m - 1, using the `zeta_choice`-th element of exact order
/// `order` (in enumeration order) as zeta.
BigInt count_twisted_diagonal_enumerated(const DiagonalAction& action, const FieldDesc& f, unsigned a,
                                         std::size_t zeta_choice = 0, const CountOptions& options = {});

/// Least m >= 1 with n | q^m - 1.
unsigned splitting_degree(const BigInt& q, const BigInt& n);

/// #|A^k / mu_n|(F_q) = (1/n) sum_a count_twisted_diagonal(a).
BigInt burnside_coarse_count(const DiagonalAction& action, const FieldDesc& f);
BigInt burnside_coarse_count(const DiagonalAction& action, const BigInt& q);

/// Independent oracle for burnside_coarse_count: enumerates A^k(F_{q^m}),
/// groups points into mu_n-orbits and counts the orbits mapped to
/// themselves by x -> x^q.  Only orbits with points in F_{q^m} are seen;
/// the count is complete once order*(q-1) | q^m - 1, see
/// complete_oracle_degree.
BigInt coarse_orbit_oracle(const DiagonalAction& action, const FieldDesc& f, unsigned m,
                           std::size_t zeta_choice = 0, const CountOptions& options = {});

/// Least m for which coarse_orbit_oracle sees every Frobenius-stable orbit.
unsigned complete_oracle_degree(const DiagonalAction& action, const FieldDesc& f);

void check_coprime(const BigInt& q, std::uint64_t group_order);

}  // namespace orbizeta

#endif
