#ifndef ORBIZETA_ORBIFOLD_HPP
#define ORBIZETA_ORBIFOLD_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbizeta/counting.hpp"
#include "orbizeta/zeta.hpp"

namespace orbizeta {

/// Count of a coarse space over F_{q^r}, given F_q and r.
using CoarseCount = std::function<BigInt(const FieldDesc& base, int r)>;

/// One twisted sector I_i X of the inertia stack.
struct InertiaComponent {
    std::string label;
    Rational age;
    /// #|I_i X|(F_{q^r}) as a function of q^r.
    std::function<BigInt(const BigInt& qr)> count;
};

struct OrbifoldModel {
    std::string name;
    /// Coarse space of the untwisted sector: an affine model counted by the
    /// engines, or a closed-form count.
    std::variant<AffineModel, CoarseCount> untwisted;
    std::vector<InertiaComponent> twisted;
    std::uint64_t group_order = 1;
    CountOptions options;
};

/// age(a) = sum_i frac(a w_i / n) for the sector of zeta^a, a = 1..n-1.
std::vector<Rational> ages_cyclic(const DiagonalAction& action);

/// True iff every sector age is an integer.  Also evaluates the criterion
/// sum w_i = 0 mod n and throws std::logic_error if the two disagree.
bool gorenstein_check(const DiagonalAction& action);

struct OrbifoldCount {
    BigInt coarse;
    BigInt total;
    std::optional<Engine> engine;  // unset for closed-form coarse counts
};

/// N_orb(X(F_{q^r})) = N(|X|) + sum_i (q^r)^{age_i} N(|I_i X|).  Throws
/// std::domain_error if q shares a factor with the group order or some age
/// is not an integer; counting failures propagate (BudgetExceeded).
OrbifoldCount orbifold_count_detail(const OrbifoldModel& m, const FieldDesc& f, int r);
BigInt orbifold_count(const OrbifoldModel& m, const FieldDesc& f, int r);

/// exp(sum_{r<=R} N_orb(X(F_{q^r})) t^r / r).
PowerSeries orbifold_zeta(const OrbifoldModel& m, const FieldDesc& f, int R);

/// Crepant resolution Y -> |X| whose exceptional locus over the singular
/// point has `exceptional(q^r)` points: N(Y) = N(|X|) - 1 + exceptional.
struct ResolutionCount {
    std::string description;
    std::function<BigInt(const BigInt& qr)> exceptional;

    BigInt operator()(const BigInt& coarse, const BigInt& qr) const { return coarse - 1 + exceptional(qr); }
};

struct McKayRow {
    int r = 0;
    BigInt n_coarse;
    BigInt n_orb;
    BigInt n_resolution;
    bool match = false;
    std::optional<Engine> engine;
};

struct McKayReport {
    std::vector<McKayRow> rows;
    bool all_match = false;
    /// Set when all rows match: equality of both zeta series through t^R.
    std::optional<bool> zeta_equal;
    /// Set when counting stopped early (rows holds the computed prefix).
    std::optional<std::string> error;
};

/// Compares N_orb with the resolution count for r = 1..R.
McKayReport mckay_verify(const OrbifoldModel& m, const ResolutionCount& resolution, const FieldDesc& f, int R);

}  // namespace orbizeta

#endif
