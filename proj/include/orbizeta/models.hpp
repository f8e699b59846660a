#ifndef ORBIZETA_MODELS_HPP
#define ORBIZETA_MODELS_HPP

#include <string>
#include <variant>
#include <vector>

#include "orbizeta/orbifold.hpp"

namespace orbizeta {

enum class KleinianKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// A^2/G for a binary polyhedral (or cyclic) G in SL(2), presented by the
/// hypersurface equation of its quotient singularity.
struct KleinianFamily {
    KleinianKind kind;
    unsigned n = 0;  // parameter of the cyclic and binary dihedral families
    IntPolynomial equation;
    std::string equation_text;
    unsigned k = 0;  // nontrivial conjugacy classes = exceptional curves
    std::uint64_t group_order = 0;
    std::string dynkin;

    /// CLI name: cyclic:N, dihedral:N, tetra, octa, icosa.
    std::string name() const;
};

/// Catalog entry.  Cyclic needs n >= 2 and BinaryDihedral n >= 1; throws
/// std::invalid_argument otherwise.
KleinianFamily kleinian_catalog(KleinianKind kind, unsigned n = 0);

/// The families exercised by the verification suite: Cyclic(2..6),
/// BinaryDihedral(1..4), Tetra, Octa, Icosa.
std::vector<KleinianFamily> kleinian_suite();

enum class CoarseSource {
    Counted,      // count the hypersurface with the engines
    Conjectured,  // use q^{2r}
};

/// Coarse hypersurface plus k point-sectors of age 1.
OrbifoldModel kleinian_orbifold_model(const KleinianFamily& fam, CoarseSource source = CoarseSource::Counted,
                                      const CountOptions& options = {});

/// Exceptional curve of the minimal resolution: k lines meeting in k-1 nodes.
ResolutionCount kleinian_resolution(const KleinianFamily& fam);

/// N(Y(F_{q^r})) = N_sing - 1 + k(q^r + 1) - (k - 1), with N_sing counted.
BigInt kleinian_resolution_count(const KleinianFamily& fam, const FieldDesc& f, int r,
                                 const CountOptions& options = {});

enum class ThreefoldKind { Mu3, Mu5 };

/// [A^3/mu_n] for a Gorenstein diagonal action, with the point count of the
/// exceptional divisor of its crepant resolution.
struct ThreefoldModel {
    ThreefoldKind kind;
    DiagonalAction action;
    ResolutionCount resolution;

    std::string name() const;
};

ThreefoldModel threefold_catalog(ThreefoldKind which);

/// Coarse space counted by Burnside over twisted Frobenius; sector a has the
/// age from ages_cyclic and coarse space |(A^3)^{zeta^a} / mu_n|.
OrbifoldModel threefold_orbifold_model(const ThreefoldModel& model);

/// q^{r dim}, the conjectured count of |A^dim / G|(F_{q^r}).
BigInt conjectured_coarse_count(unsigned dim, const BigInt& q, int r);

using CatalogModel = std::variant<KleinianFamily, ThreefoldModel>;

/// Parses cyclic:N, dihedral:N, tetra, octa, icosa, mu3, mu5.
CatalogModel parse_model_name(const std::string& name);

}  // namespace orbizeta

#endif
