#include "orbizeta/orbifold.hpp"

#include <stdexcept>

namespace orbizeta {

std::vector<Rational> ages_cyclic(const DiagonalAction& action)
{
    if (action.order == 0) throw std::invalid_argument("group order must be positive");
    std::vector<Rational> ages;
    for (unsigned a = 1; a < action.order; ++a) {
        Rational age = 0;
        for (unsigned w : action.weights) {
            if (w >= action.order) throw std::invalid_argument("weights must lie in [0, order)");
            age += Rational(static_cast<unsigned long>(a) * w % action.order, action.order);
        }
        age.canonicalize();
        ages.push_back(age);
    }
    return ages;
}

bool gorenstein_check(const DiagonalAction& action)
{
    bool integral = true;
    for (const auto& age : ages_cyclic(action))
        if (age.get_den() != 1) integral = false;
    unsigned long sum = 0;
    for (unsigned w : action.weights) sum += w;
    const bool weight_sum = sum % action.order == 0;
    if (integral != weight_sum) throw std::logic_error("age criterion and weight-sum criterion disagree");
    return integral;
}

OrbifoldCount orbifold_count_detail(const OrbifoldModel& m, const FieldDesc& f, int r)
{
    if (r < 1) throw std::invalid_argument("extension degree must be positive");
    const BigInt q(static_cast<unsigned long>(f.size()));
    check_coprime(q, m.group_order);
    for (const auto& c : m.twisted)
        if (c.age.get_den() != 1)
            throw std::domain_error("sector " + c.label + " has non-integral age " + c.age.get_str()
                                    + "; orbifold counts need a Gorenstein model");

    BigInt qr;
    mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(r));

    OrbifoldCount out;
    if (const auto* model = std::get_if<AffineModel>(&m.untwisted)) {
        if (f.e() * r > kMaxExtensionDegree) throw BudgetExceeded("extension degree exceeds the field bound");
        auto res = count_affine(*model, make_field(f.p(), f.e() * r), m.options);
        out.coarse = res.value;
        out.engine = res.engine;
    } else {
        out.coarse = std::get<CoarseCount>(m.untwisted)(f, r);
    }
    out.total = out.coarse;
    for (const auto& c : m.twisted) {
        BigInt weight;
        mpz_pow_ui(weight.get_mpz_t(), qr.get_mpz_t(), c.age.get_num().get_ui());
        out.total += weight * c.count(qr);
    }
    return out;
}

BigInt orbifold_count(const OrbifoldModel& m, const FieldDesc& f, int r)
{
    return orbifold_count_detail(m, f, r).total;
}

PowerSeries orbifold_zeta(const OrbifoldModel& m, const FieldDesc& f, int R)
{
    CountSequence counts{f.p(), f.e(), {}};
    for (int r = 1; r <= R; ++r) counts.values.push_back(orbifold_count(m, f, r));
    return zeta_from_counts(counts);
}

McKayReport mckay_verify(const OrbifoldModel& m, const ResolutionCount& resolution, const FieldDesc& f, int R)
{
    McKayReport rep;
    const BigInt q(static_cast<unsigned long>(f.size()));
    CountSequence orb{f.p(), f.e(), {}}, res{f.p(), f.e(), {}};
    for (int r = 1; r <= R; ++r) {
        McKayRow row;
        row.r = r;
        try {
            auto c = orbifold_count_detail(m, f, r);
            BigInt qr;
            mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(r));
            row.n_coarse = c.coarse;
            row.n_orb = c.total;
            row.n_resolution = resolution(c.coarse, qr);
            row.engine = c.engine;
        } catch (const BudgetExceeded& ex) {
            rep.error = "r=" + std::to_string(r) + ": " + ex.what();
            break;
        }
        row.match = row.n_orb == row.n_resolution;
        orb.values.push_back(row.n_orb);
        res.values.push_back(row.n_resolution);
        rep.rows.push_back(std::move(row));
    }
    rep.all_match = !rep.rows.empty() && !rep.error;
    for (const auto& row : rep.rows) rep.all_match = rep.all_match && row.match;
    if (rep.all_match) rep.zeta_equal = zeta_from_counts(orb) == zeta_from_counts(res);
    return rep;
}

}  // namespace orbizeta
