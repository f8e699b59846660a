#include "orbizeta/models.hpp"

#include <stdexcept>

namespace orbizeta {

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

IntPolynomial monomial(unsigned ex, unsigned ey, unsigned ez, long c = 1)
{
    IntPolynomial p(kXYZ);
    p.add_term(c, {ex, ey, ez});
    return p;
}

BigInt power(const BigInt& b, unsigned long n)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), n);
    return r;
}

}  // namespace

std::string KleinianFamily::name() const
{
    switch (kind) {
    case KleinianKind::Cyclic: return "cyclic:" + std::to_string(n);
    case KleinianKind::BinaryDihedral: return "dihedral:" + std::to_string(n);
    case KleinianKind::BinaryTetrahedral: return "tetra";
    case KleinianKind::BinaryOctahedral: return "octa";
    case KleinianKind::BinaryIcosahedral: return "icosa";
    }
    return "?";
}

KleinianFamily kleinian_catalog(KleinianKind kind, unsigned n)
{
    KleinianFamily fam{kind, 0, IntPolynomial(kXYZ), "", 0, 0, ""};
    switch (kind) {
    case KleinianKind::Cyclic:
        if (n < 2) throw std::invalid_argument("cyclic family needs n >= 2");
        fam.n = n;
        fam.equation = monomial(1, 1, 0) - monomial(0, 0, n);
        fam.equation_text = "x*y - z^" + std::to_string(n);
        fam.k = n - 1;
        fam.group_order = n;
        fam.dynkin = "A" + std::to_string(n - 1);
        break;
    case KleinianKind::BinaryDihedral:
        if (n < 1) throw std::invalid_argument("binary dihedral family needs n >= 1");
        fam.n = n;
        fam.equation = monomial(2, 0, 0) + monomial(0, 2, 1) + monomial(0, 0, n + 1);
        fam.equation_text = "x^2 + y^2*z + z^" + std::to_string(n + 1);
        fam.k = n + 2;
        fam.group_order = 4ull * n;
        fam.dynkin = "D" + std::to_string(n + 2);
        break;
    case KleinianKind::BinaryTetrahedral:
        fam.equation = monomial(2, 0, 0) + monomial(0, 3, 0) + monomial(0, 0, 4);
        fam.equation_text = "x^2 + y^3 + z^4";
        fam.k = 6;
        fam.group_order = 24;
        fam.dynkin = "E6";
        break;
    case KleinianKind::BinaryOctahedral:
        fam.equation = monomial(2, 0, 0) + monomial(0, 3, 1) + monomial(0, 0, 3);
        fam.equation_text = "x^2 + y^3*z + z^3";
        fam.k = 7;
        fam.group_order = 48;
        fam.dynkin = "E7";
        break;
    case KleinianKind::BinaryIcosahedral:
        fam.equation = monomial(2, 0, 0) + monomial(0, 3, 0) + monomial(0, 0, 5);
        fam.equation_text = "x^2 + y^3 + z^5";
        fam.k = 8;
        fam.group_order = 120;
        fam.dynkin = "E8";
        break;
    }
    return fam;
}

std::vector<KleinianFamily> kleinian_suite()
{
    std::vector<KleinianFamily> out;
    for (unsigned n = 2; n <= 6; ++n) out.push_back(kleinian_catalog(KleinianKind::Cyclic, n));
    for (unsigned n = 1; n <= 4; ++n) out.push_back(kleinian_catalog(KleinianKind::BinaryDihedral, n));
    out.push_back(kleinian_catalog(KleinianKind::BinaryTetrahedral));
    out.push_back(kleinian_catalog(KleinianKind::BinaryOctahedral));
    out.push_back(kleinian_catalog(KleinianKind::BinaryIcosahedral));
    return out;
}

OrbifoldModel kleinian_orbifold_model(const KleinianFamily& fam, CoarseSource source, const CountOptions& options)
{
    OrbifoldModel m;
    m.name = fam.name();
    m.group_order = fam.group_order;
    m.options = options;
    if (source == CoarseSource::Counted)
        m.untwisted = AffineModel({fam.equation});
    else
        m.untwisted = CoarseCount([](const FieldDesc& f, int r) {
            return conjectured_coarse_count(2, BigInt(static_cast<unsigned long>(f.size())), r);
        });
    for (unsigned i = 1; i <= fam.k; ++i)
        m.twisted.push_back({"class " + std::to_string(i), Rational(1), [](const BigInt&) { return BigInt(1); }});
    return m;
}

ResolutionCount kleinian_resolution(const KleinianFamily& fam)
{
    const unsigned k = fam.k;
    return {"chain of " + std::to_string(k) + " P^1 (" + fam.dynkin + ")",
            [k](const BigInt& qr) -> BigInt { return k * count_projective_space(1, qr) - (k - 1); }};
}

BigInt kleinian_resolution_count(const KleinianFamily& fam, const FieldDesc& f, int r, const CountOptions& options)
{
    if (r < 1) throw std::invalid_argument("extension degree must be positive");
    const BigInt q(static_cast<unsigned long>(f.size()));
    check_coprime(q, fam.group_order);
    if (f.e() * r > kMaxExtensionDegree) throw BudgetExceeded("extension degree exceeds the field bound");
    const BigInt n_sing = count_affine(AffineModel({fam.equation}), make_field(f.p(), f.e() * r), options).value;
    return kleinian_resolution(fam)(n_sing, power(q, static_cast<unsigned long>(r)));
}

std::string ThreefoldModel::name() const { return kind == ThreefoldKind::Mu3 ? "mu3" : "mu5"; }

ThreefoldModel threefold_catalog(ThreefoldKind which)
{
    if (which == ThreefoldKind::Mu3)
        return {which, {{1, 1, 1}, 3},
                {"P^2", [](const BigInt& qr) -> BigInt { return count_projective_space(2, qr); }}};
    // P^2 and the Hirzebruch surface P(O + O(3)) glued along a P^1
    return {which, {{1, 2, 2}, 5},
            {"P^2 + F_3 - P^1", [](const BigInt& qr) -> BigInt {
                 const BigInt line = count_projective_space(1, qr);
                 return count_projective_space(2, qr) + count_bundle(line, line) - line;
             }}};
}

OrbifoldModel threefold_orbifold_model(const ThreefoldModel& model)
{
    OrbifoldModel m;
    m.name = model.name();
    m.group_order = model.action.order;
    const DiagonalAction action = model.action;
    m.untwisted = CoarseCount([action](const FieldDesc& f, int r) {
        return burnside_coarse_count(action, power(BigInt(static_cast<unsigned long>(f.size())),
                                                   static_cast<unsigned long>(r)));
    });
    const auto ages = ages_cyclic(action);
    for (unsigned a = 1; a < action.order; ++a) {
        // the sector's coarse space is |F / mu_n| for the fixed subspace F of
        // zeta^a; Burnside gives (q^r)^{dim F}
        unsigned long dim = 0;
        for (unsigned w : action.weights)
            if (static_cast<unsigned long>(a) * w % action.order == 0) ++dim;
        m.twisted.push_back({"g^" + std::to_string(a), ages[a - 1],
                             [dim](const BigInt& qr) -> BigInt { return power(qr, dim); }});
    }
    return m;
}

BigInt conjectured_coarse_count(unsigned dim, const BigInt& q, int r)
{
    return power(q, static_cast<unsigned long>(dim) * static_cast<unsigned long>(r));
}

CatalogModel parse_model_name(const std::string& name)
{
    auto param = [&](const std::string& prefix) -> unsigned {
        const std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad model parameter in '" + name + "'");
        return static_cast<unsigned>(std::stoul(rest));
    };
    if (name.rfind("cyclic:", 0) == 0) return kleinian_catalog(KleinianKind::Cyclic, param("cyclic:"));
    if (name.rfind("dihedral:", 0) == 0) return kleinian_catalog(KleinianKind::BinaryDihedral, param("dihedral:"));
    if (name == "tetra") return kleinian_catalog(KleinianKind::BinaryTetrahedral);
    if (name == "octa") return kleinian_catalog(KleinianKind::BinaryOctahedral);
    if (name == "icosa") return kleinian_catalog(KleinianKind::BinaryIcosahedral);
    if (name == "mu3") return threefold_catalog(ThreefoldKind::Mu3);
    if (name == "mu5") return threefold_catalog(ThreefoldKind::Mu5);
    throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace orbizeta
