#include "orbizeta/counting.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbizeta/parallel.hpp"

namespace orbizeta {

namespace {

using Log = LogTable::Log;
using u64 = std::uint64_t;

std::vector<std::string> sorted_union(const std::vector<IntPolynomial>& eqs)
{
    std::set<std::string> names;
    for (const auto& eq : eqs) {
        for (const auto& [exps, c] : eq.terms())
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i]) names.insert(eq.variables()[i]);
    }
    return {names.begin(), names.end()};
}

BigInt power(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

void require_budget(const BigInt& work, const CountOptions& options, const std::string& what)
{
    if (work > BigInt(static_cast<unsigned long>(options.budget)))
        throw BudgetExceeded(what + " needs " + work.get_str() + " evaluations, budget is "
                             + std::to_string(options.budget));
}

// Integer polynomials with coefficients reduced into a tabulated field,
// evaluated over every point of F_q^n by nested loops.  The outermost
// variable is split into q chunks.
class PointEnumerator {
public:
    PointEnumerator(const LogTable& table, const std::vector<IntPolynomial>& polys, std::size_t nvars)
        : table_(table), nvars_(nvars), npolys_(polys.size())
    {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (const auto& [exps, c] : polys[i].terms()) {
                Log lc = table.lift(c);
                if (table.is_zero(lc)) continue;
                coeff_.push_back(lc);
                owner_.push_back(i);
                exps_.insert(exps_.end(), exps.begin(), exps.end());
            }
        }
    }

    // leaf(values) receives the value of every polynomial at one point and
    // returns that point's contribution.
    template <class Leaf>
    u64 run(const Leaf& leaf, unsigned threads) const
    {
        const std::size_t nt = coeff_.size();
        if (nvars_ == 0) {
            std::vector<Log> vals(npolys_, table_.zero());
            for (std::size_t j = 0; j < nt; ++j) vals[owner_[j]] = table_.add(vals[owner_[j]], coeff_[j]);
            return leaf(std::span<const Log>(vals));
        }
        return chunked_sum(table_.size(), threads, [&](u64 chunk) {
            std::vector<std::vector<Log>> partial(nvars_ + 1, std::vector<Log>(nt));
            std::vector<Log> vals(npolys_);
            partial[0] = coeff_;
            apply(partial[0], partial[1], 0, table_.from_index(chunk));
            return descend(1, partial, vals, leaf);
        });
    }

private:
    void apply(const std::vector<Log>& in, std::vector<Log>& out, std::size_t var, Log x) const
    {
        for (std::size_t j = 0; j < in.size(); ++j) {
            unsigned e = exps_[j * nvars_ + var];
            out[j] = e == 0 ? in[j] : table_.mul(in[j], table_.pow(x, e));
        }
    }

    template <class Leaf>
    u64 descend(std::size_t level, std::vector<std::vector<Log>>& partial, std::vector<Log>& vals,
                const Leaf& leaf) const
    {
        if (level == nvars_) {
            std::fill(vals.begin(), vals.end(), table_.zero());
            const auto& row = partial[level];
            for (std::size_t j = 0; j < row.size(); ++j) vals[owner_[j]] = table_.add(vals[owner_[j]], row[j]);
            return leaf(std::span<const Log>(vals));
        }
        u64 total = 0;
        for (u64 i = 0; i < table_.size(); ++i) {
            apply(partial[level], partial[level + 1], level, table_.from_index(i));
            total += descend(level + 1, partial, vals, leaf);
        }
        return total;
    }

    const LogTable& table_;
    std::size_t nvars_;
    std::size_t npolys_;
    std::vector<Log> coeff_;
    std::vector<std::size_t> owner_;
    std::vector<unsigned> exps_;  // row-major, nvars_ per term
};

LogTable make_table(const FieldDesc& f)
{
    if (f.size() > kMaxEnumerableField)
        throw BudgetExceeded("field " + f.to_string() + " is too large to enumerate");
    return LogTable(f);
}

}  // namespace

// ---------------------------------------------------------------------------

AffineModel::AffineModel(std::vector<std::string> variables, const std::vector<IntPolynomial>& equations)
    : variables_(std::move(variables))
{
    for (const auto& eq : equations) equations_.push_back(eq.rebased(variables_));
}

AffineModel::AffineModel(const std::vector<IntPolynomial>& equations)
    : AffineModel(sorted_union(equations), equations)
{
}

BigInt CountSequence::q() const { return power(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(e)); }

std::string to_string(Engine e)
{
    switch (e) {
    case Engine::BruteForce: return "bruteforce";
    case Engine::PowerRoots: return "power-roots";
    }
    return "?";
}

std::optional<PowerShape> detect_power_shape(const AffineModel& m)
{
    if (m.equations().size() != 1) return std::nullopt;
    const auto& terms = m.equations().front().terms();
    for (std::size_t v = 0; v < m.num_vars(); ++v) {
        std::optional<PowerShape> found;
        bool ok = true;
        for (const auto& [exps, c] : terms) {
            if (exps[v] == 0) continue;
            bool alone = true;
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (i != v && exps[i]) alone = false;
            if (found || !alone || (c != 1 && c != -1)) {
                ok = false;
                break;
            }
            found = PowerShape{v, exps[v], c > 0 ? 1 : -1};
        }
        if (ok && found) return found;
    }
    return std::nullopt;
}

BigInt count_affine_bruteforce(const AffineModel& m, const FieldDesc& f, const CountOptions& options)
{
    const BigInt q(static_cast<unsigned long>(f.size()));
    require_budget(power(q, m.num_vars()), options, "brute-force count over " + f.to_string());
    if (m.num_vars() == 0) {
        for (const auto& eq : m.equations())
            for (const auto& [e, c] : eq.terms())
                if (c % BigInt(static_cast<unsigned long>(f.p())) != 0) return 0;
        return 1;
    }
    const LogTable table = make_table(f);
    PointEnumerator en(table, m.equations(), m.num_vars());
    u64 n = en.run(
        [&](std::span<const Log> vals) -> u64 {
            for (Log v : vals)
                if (!table.is_zero(v)) return 0;
            return 1;
        },
        options.threads);
    return BigInt(static_cast<unsigned long>(n));
}

BigInt count_affine_charsum(const AffineModel& m, const FieldDesc& f, const CountOptions& options)
{
    auto shape = detect_power_shape(m);
    if (!shape) throw NotSolvable("equation is not of the form u^d = g(other variables)");

    const BigInt q(static_cast<unsigned long>(f.size()));
    require_budget(power(q, m.num_vars() - 1), options, "power-roots count over " + f.to_string());

    std::vector<std::string> rest;
    for (std::size_t i = 0; i < m.num_vars(); ++i)
        if (i != shape->variable) rest.push_back(m.variables()[i]);

    // c u^d + g = 0  =>  u^d = -g/c, with c = +-1
    IntPolynomial g(m.variables());
    for (const auto& [exps, c] : m.equations().front().terms())
        if (exps[shape->variable] == 0) g.add_term(c, exps);
    IntPolynomial target = (shape->sign > 0 ? -g : g).rebased(rest);

    const LogTable table = make_table(f);
    const u64 roots = std::gcd(static_cast<u64>(shape->degree), f.size() - 1);
    PointEnumerator en(table, {target}, rest.size());
    u64 n = en.run(
        [&](std::span<const Log> vals) -> u64 {
            Log v = vals[0];
            if (table.is_zero(v)) return 1;
            return v % roots == 0 ? roots : 0;
        },
        options.threads);
    return BigInt(static_cast<unsigned long>(n));
}

CountResult count_affine(const AffineModel& m, const FieldDesc& f, const CountOptions& options)
{
    if (detect_power_shape(m)) return {count_affine_charsum(m, f, options), Engine::PowerRoots};
    return {count_affine_bruteforce(m, f, options), Engine::BruteForce};
}

CountSequenceResult count_sequence(const AffineModel& m, std::uint64_t p, int e, int R, const CountOptions& options)
{
    if (R < 1) throw std::invalid_argument("count sequence needs R >= 1");
    CountSequenceResult out;
    out.counts.p = p;
    out.counts.e = e;
    for (int r = 1; r <= R; ++r) {
        try {
            if (e * r > kMaxExtensionDegree)
                throw BudgetExceeded("extension degree " + std::to_string(e * r) + " exceeds the field bound");
            auto [value, engine] = count_affine(m, make_field(p, e * r), options);
            out.counts.values.push_back(std::move(value));
            out.engines.push_back(engine);
        } catch (const BudgetExceeded& ex) {
            out.error = "r=" + std::to_string(r) + ": " + ex.what();
            break;
        } catch (const std::invalid_argument& ex) {
            out.error = "r=" + std::to_string(r) + ": " + ex.what();
            break;
        }
    }
    return out;
}

BigInt count_power_roots(std::uint64_t d, const FieldElement& a, const FieldDesc& f)
{
    if (d == 0) throw std::invalid_argument("root degree must be positive");
    if (!(a.field() == f)) throw std::invalid_argument("element does not belong to the given field");
    if (a.is_zero()) return 1;
    const u64 g = std::gcd(d, f.size() - 1);
    if (pow(a, BigInt(static_cast<unsigned long>((f.size() - 1) / g))).is_one())
        return BigInt(static_cast<unsigned long>(g));
    return 0;
}

BigInt count_projective_space(unsigned n, const BigInt& q)
{
    BigInt total = 0, term = 1;
    for (unsigned i = 0; i <= n; ++i) {
        total += term;
        term *= q;
    }
    return total;
}

BigInt count_bundle(const BigInt& base, const BigInt& fiber)
{
    if (base < 0 || fiber < 0) throw std::invalid_argument("point counts are nonnegative");
    return base * fiber;
}

void check_coprime(const BigInt& q, std::uint64_t group_order)
{
    BigInt g;
    BigInt n(static_cast<unsigned long>(group_order));
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    if (g != 1)
        throw std::domain_error("q = " + q.get_str() + " is not coprime to the group order "
                                + std::to_string(group_order));
}

static void check_action(const DiagonalAction& action)
{
    if (action.order == 0) throw std::invalid_argument("group order must be positive");
    for (auto w : action.weights)
        if (w >= action.order) throw std::invalid_argument("weights must lie in [0, order)");
}

BigInt count_twisted_diagonal(const DiagonalAction& action, const BigInt& q, unsigned a)
{
    check_action(action);
    if (a >= action.order) throw std::invalid_argument("group element out of range");
    check_coprime(q, action.order);
    // x_i = 0, or x_i^{q-1} = zeta^{-a w_i}: q - 1 distinct roots in Fbar
    BigInt total = 1;
    for (std::size_t i = 0; i < action.weights.size(); ++i) total *= 1 + (q - 1);
    return total;
}

BigInt count_twisted_diagonal(const DiagonalAction& action, const FieldDesc& f, unsigned a)
{
    return count_twisted_diagonal(action, BigInt(static_cast<unsigned long>(f.size())), a);
}

unsigned splitting_degree(const BigInt& q, const BigInt& n)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw std::domain_error("q is not coprime to " + n.get_str());
    if (n == 1) return 1;
    BigInt x = q % n;
    BigInt qm = x;
    for (unsigned m = 1;; ++m) {
        if (qm == 1) return m;
        qm = (qm * x) % n;
    }
}

BigInt count_twisted_diagonal_enumerated(const DiagonalAction& action, const FieldDesc& f, unsigned a,
                                         std::size_t zeta_choice, const CountOptions& options)
{
    check_action(action);
    if (a >= action.order) throw std::invalid_argument("group element out of range");
    const BigInt q(static_cast<unsigned long>(f.size()));
    check_coprime(q, action.order);
    const unsigned m = splitting_degree(q, BigInt(action.order) * (q - 1));
    if (f.e() * static_cast<int>(m) > kMaxExtensionDegree)
        throw BudgetExceeded("verification field degree exceeds the field bound");
    const FieldDesc big = make_field(f.p(), f.e() * static_cast<int>(m));
    require_budget(BigInt(static_cast<unsigned long>(big.size())) * action.weights.size(), options,
                   "twisted verification in " + big.to_string());
    const LogTable table = make_table(big);
    const Log zeta = table.element_of_order(action.order, zeta_choice);

    BigInt total = 1;
    for (unsigned w : action.weights) {
        const Log c = table.pow(zeta, static_cast<u64>(a) * w % action.order);
        u64 solutions = 1;  // x = 0
        for (Log x = 0; x < table.group_order(); ++x)
            if (table.mul(c, table.pow(x, f.size())) == x) ++solutions;
        total *= BigInt(static_cast<unsigned long>(solutions));
    }
    return total;
}

BigInt burnside_coarse_count(const DiagonalAction& action, const BigInt& q)
{
    BigInt sum = 0;
    for (unsigned a = 0; a < action.order; ++a) sum += count_twisted_diagonal(action, q, a);
    if (sum % action.order != 0) throw std::logic_error("Burnside sum is not divisible by the group order");
    return sum / action.order;
}

BigInt burnside_coarse_count(const DiagonalAction& action, const FieldDesc& f)
{
    return burnside_coarse_count(action, BigInt(static_cast<unsigned long>(f.size())));
}

unsigned complete_oracle_degree(const DiagonalAction& action, const FieldDesc& f)
{
    const BigInt q(static_cast<unsigned long>(f.size()));
    return splitting_degree(q, BigInt(action.order) * (q - 1));
}

BigInt coarse_orbit_oracle(const DiagonalAction& action, const FieldDesc& f, unsigned m, std::size_t zeta_choice,
                           const CountOptions& options)
{
    check_action(action);
    const BigInt q(static_cast<unsigned long>(f.size()));
    check_coprime(q, action.order);
    if (m == 0 || f.e() * static_cast<int>(m) > kMaxExtensionDegree)
        throw BudgetExceeded("oracle field degree out of range");
    const FieldDesc big = make_field(f.p(), f.e() * static_cast<int>(m));
    if ((big.size() - 1) % action.order != 0)
        throw std::domain_error(std::to_string(action.order) + " does not divide " + std::to_string(big.size())
                                + " - 1");
    const std::size_t k = action.weights.size();
    require_budget(power(BigInt(static_cast<unsigned long>(big.size())), k), options,
                   "orbit oracle over " + big.to_string());
    const LogTable table = make_table(big);
    const Log zeta = table.element_of_order(action.order, zeta_choice);

    // rot[j][i] = zeta^{j w_i}
    std::vector<std::vector<Log>> rot(action.order, std::vector<Log>(k));
    for (unsigned j = 0; j < action.order; ++j)
        for (std::size_t i = 0; i < k; ++i) rot[j][i] = table.pow(zeta, static_cast<u64>(j) * action.weights[i]);

    if (k == 0) return 1;
    const u64 Q = big.size();
    const u64 qbase = f.size();
    auto count = chunked_sum(Q, options.threads, [&](u64 chunk) -> u64 {
        std::vector<u64> idx(k, 0);
        idx[0] = chunk;
        std::vector<Log> x(k), y(k), fx(k);
        u64 stable = 0;
        while (true) {
            for (std::size_t i = 0; i < k; ++i) {
                x[i] = table.from_index(idx[i]);
                fx[i] = table.pow(x[i], qbase);
            }
            bool canonical = true;
            bool fixed = false;
            for (unsigned j = 0; j < action.order; ++j) {
                bool same = true;
                for (std::size_t i = 0; i < k; ++i) {
                    y[i] = table.mul(x[i], rot[j][i]);
                    if (y[i] != fx[i]) same = false;
                }
                if (same) fixed = true;
                if (j > 0 && std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end())) {
                    canonical = false;
                    break;
                }
            }
            if (canonical && fixed) ++stable;
            bool done = true;
            for (std::size_t pos = k; pos > 1;) {
                --pos;
                if (++idx[pos] < Q) {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
            if (done) break;
        }
        return stable;
    });
    return BigInt(static_cast<unsigned long>(count));
}

}  // namespace orbizeta
