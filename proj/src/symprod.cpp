#include "orbizeta/symprod.hpp"

#include <sstream>
#include <stdexcept>

namespace orbizeta {

namespace {

BigInt power(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

Partition from_parts(const std::vector<unsigned>& parts, unsigned n)
{
    Partition mu{std::vector<unsigned>(n, 0)};
    for (unsigned p : parts) ++mu.multiplicities[p - 1];
    return mu;
}

}  // namespace

unsigned Partition::weight() const
{
    unsigned n = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) n += static_cast<unsigned>(i + 1) * multiplicities[i];
    return n;
}

unsigned Partition::num_parts() const
{
    unsigned k = 0;
    for (auto m : multiplicities) k += m;
    return k;
}

std::vector<unsigned> Partition::parts() const
{
    std::vector<unsigned> out;
    for (std::size_t i = multiplicities.size(); i-- > 0;)
        out.insert(out.end(), multiplicities[i], static_cast<unsigned>(i + 1));
    return out;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (!multiplicities[i]) continue;
        if (!first) os << ' ';
        first = false;
        os << i + 1 << '^' << multiplicities[i];
    }
    if (first) os << "()";
    return os.str();
}

std::vector<Partition> partitions(unsigned n)
{
    if (n > kMaxPartitionWeight) throw std::invalid_argument("partition weight above " + std::to_string(kMaxPartitionWeight));
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    // descending part lists in reverse lexicographic order
    std::vector<unsigned> a{n};
    while (true) {
        out.push_back(from_parts(a, n));
        // strip trailing ones, decrement the last part > 1, refill greedily
        unsigned rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) break;
        unsigned v = --a.back();
        ++rem;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem) a.push_back(rem);
    }
    return out;
}

unsigned age_partition(const Partition& mu)
{
    unsigned a = 0;
    for (std::size_t i = 0; i < mu.multiplicities.size(); ++i) a += mu.multiplicities[i] * static_cast<unsigned>(i);
    return a;
}

PowerSeries SurfaceZeta::series(int order) const
{
    if (const auto* rf = std::get_if<RationalFunction>(&data)) return rf->expand(order);
    const auto& counts = std::get<CountSequence>(data);
    if (static_cast<int>(counts.values.size()) < order)
        throw std::invalid_argument("surface '" + name + "' has " + std::to_string(counts.values.size())
                                    + " counts, order " + std::to_string(order) + " needed");
    CountSequence head = counts;
    head.values.resize(static_cast<std::size_t>(order));
    if (order == 0) return PowerSeries::one(0);
    return zeta_from_counts(head);
}

SurfaceZeta surface_catalog(const std::string& name, const BigInt& q)
{
    auto closed = [&](std::vector<std::pair<BigInt, unsigned>> roots) {
        return SurfaceZeta{name, RationalFunction{{1}, RationalFunction::from_reciprocal_roots(roots)}};
    };
    if (name == "P1") return closed({{1, 1}, {q, 1}});
    if (name == "P2") return closed({{1, 1}, {q, 1}, {q * q, 1}});
    // P^1 x P^1 and the Hirzebruch surface P(O + O(3)) are both P^1-bundles
    // over P^1 and have the same counts
    if (name == "P1xP1" || name == "Hirz3") return closed({{1, 1}, {q, 2}, {q * q, 1}});
    if (name.rfind("counts=", 0) == 0) {
        CountSequence cs;
        std::stringstream ss(name.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad count '" + item + "' in surface description");
            cs.values.emplace_back(item);
        }
        if (cs.values.empty()) throw std::invalid_argument("surface description counts= needs at least one count");
        return SurfaceZeta{name, cs};
    }
    throw std::invalid_argument("unknown surface '" + name + "'");
}

std::vector<BigInt> symprod_counts(const SurfaceZeta& z, const BigInt&, unsigned nmax)
{
    return z.series(static_cast<int>(nmax)).integer_coeffs();
}

OrbifoldSymprodSeries orbifold_symprod_series(const SurfaceZeta& z, const BigInt& q, unsigned nmax)
{
    const auto sym = symprod_counts(z, q, nmax);
    OrbifoldSymprodSeries out{PowerSeries::zero(static_cast<int>(nmax)), {}};
    std::vector<Rational> coeffs(nmax + 1, 0);
    for (unsigned n = 0; n <= nmax; ++n) {
        std::vector<SymprodTerm> terms;
        BigInt total = 0;
        for (auto& mu : partitions(n)) {
            SymprodTerm t{mu, age_partition(mu), power(q, age_partition(mu))};
            for (unsigned m : mu.multiplicities) t.contribution *= sym[m];
            total += t.contribution;
            terms.push_back(std::move(t));
        }
        coeffs[n] = total;
        out.breakdown.push_back(std::move(terms));
    }
    out.series = PowerSeries(std::move(coeffs));
    return out;
}

PowerSeries goettsche_product(const SurfaceZeta& z, const BigInt& q, unsigned nmax)
{
    const auto c = symprod_counts(z, q, nmax);
    const int order = static_cast<int>(nmax);
    PowerSeries prod = PowerSeries::one(order);
    for (unsigned i = 1; i <= nmax; ++i) {
        // Z(q^{i-1} Q^i) = sum_m c_m q^{(i-1)m} Q^{im}
        std::vector<Rational> f(nmax + 1, 0);
        for (unsigned m = 0; i * m <= nmax; ++m) f[i * m] = c[m] * power(q, static_cast<unsigned long>(i - 1) * m);
        prod = prod * PowerSeries(std::move(f));
    }
    return prod;
}

SymprodReport verify_symprod_mckay(const SurfaceZeta& z, const BigInt& q, unsigned nmax)
{
    SymprodReport rep;
    rep.symmetric = symprod_counts(z, q, nmax);
    rep.orbifold = orbifold_symprod_series(z, q, nmax).series.integer_coeffs();
    rep.hilbert = goettsche_product(z, q, nmax).integer_coeffs();
    rep.equal = true;
    for (unsigned n = 0; n <= nmax; ++n) {
        if (rep.orbifold[n] != rep.hilbert[n]) {
            rep.equal = false;
            rep.first_mismatch = n;
            break;
        }
    }
    return rep;
}

}  // namespace orbizeta
