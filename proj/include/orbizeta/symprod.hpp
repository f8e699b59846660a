#ifndef ORBIZETA_SYMPROD_HPP
#define ORBIZETA_SYMPROD_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbizeta/zeta.hpp"

namespace orbizeta {

/// mu = 1^{m_1} 2^{m_2} ... n^{m_n}; multiplicities[i-1] = m_i.
struct Partition {
    std::vector<unsigned> multiplicities;

    unsigned weight() const;
    unsigned num_parts() const;
    /// Parts in non-increasing order.
    std::vector<unsigned> parts() const;
    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr unsigned kMaxPartitionWeight = 30;

/// Every partition of n once, in reverse lexicographic order of the part
/// lists ([n] first, [1,...,1] last).  Throws std::invalid_argument for
/// n > kMaxPartitionWeight.
std::vector<Partition> partitions(unsigned n);

/// a_mu = sum_i m_i (i - 1).
unsigned age_partition(const Partition& mu);

/// Zeta function of a surface over F_q, either in closed form or as a raw
/// count sequence N_1, N_2, ...
struct SurfaceZeta {
    std::string name;
    std::variant<RationalFunction, CountSequence> data;

    /// Z(t) through t^order; for raw counts the order is capped by the
    /// number of counts supplied (std::invalid_argument otherwise).
    PowerSeries series(int order) const;
};

/// P1, P2, P1xP1, Hirz3 specialized at q, or counts=N1,N2,...
SurfaceZeta surface_catalog(const std::string& name, const BigInt& q);

/// N(X^{(n)}(F_q)) for n = 0..nmax: the coefficients of Z^X(t).
std::vector<BigInt> symprod_counts(const SurfaceZeta& z, const BigInt& q, unsigned nmax);

struct SymprodTerm {
    Partition mu;
    unsigned age = 0;
    BigInt contribution;  // q^{a_mu} prod_i N(X^{(m_i)})
};

struct OrbifoldSymprodSeries {
    PowerSeries series;
    std::vector<std::vector<SymprodTerm>> breakdown;  // per n
};

/// sum_n Q^n sum_{mu |- n} q^{a_mu} prod_i N(X^{(m_i)}(F_q)).
OrbifoldSymprodSeries orbifold_symprod_series(const SurfaceZeta& z, const BigInt& q, unsigned nmax);

/// prod_{i=1..nmax} Z^X(q^{i-1} Q^i) through Q^nmax.
PowerSeries goettsche_product(const SurfaceZeta& z, const BigInt& q, unsigned nmax);

struct SymprodReport {
    std::vector<BigInt> symmetric;  // N(X^{(n)})
    std::vector<BigInt> orbifold;   // N_orb(X^{(n)})
    std::vector<BigInt> hilbert;    // N(X^{[n]}) from the product formula
    bool equal = false;
    std::optional<unsigned> first_mismatch;
};

SymprodReport verify_symprod_mckay(const SurfaceZeta& z, const BigInt& q, unsigned nmax);

}  // namespace orbizeta

#endif
