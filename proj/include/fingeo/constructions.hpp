#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fingeo/linset.hpp"
#include "fingeo/pointset.hpp"

namespace fingeo {

/// A construction whose output failed its own exhaustive re-check.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// U = sum of r/(h+1) blocks {(x, x^q, ..., x^{q^h}) : x in GF(q^n)} on
/// consecutive coordinate groups. Re-verified as properly maximum
/// h-scattered; throws VerificationFailure otherwise.
LinearSet moore_h_scattered(std::uint64_t q, unsigned n, unsigned r, unsigned h);
/// The same subspace without the verification pass.
LinearSet moore_blocks(const TowerPtr& tower, unsigned r, unsigned h);

/// Cone over a properly maximum h-scattered base living on the first d
/// coordinates, with vertex S2 = {x_0 = ... = x_{d-1} = 0}.
struct ConeSpec {
    LinearSet base; // U_1 in GF(q^n)^d
    unsigned r;
    unsigned d;
    unsigned h;
    LinearSet cone; // U = U_1 + GF(q^n)^{r-d}
    Subspace vertex;

    unsigned n() const { return base.tower().n(); }
    std::uint64_t q() const { return base.tower().q(); }
    /// dn/(h+1), the rank of the base.
    unsigned D() const { return base.rank(); }
    /// gamma_i = D - n + i; may be negative for small D.
    long gamma(unsigned i) const { return static_cast<long>(D()) - n() + i; }
};

/// Throws std::invalid_argument unless base is properly maximum h-scattered
/// (checked here by enumeration) and base.r() <= r.
ConeSpec cone(const LinearSet& base, unsigned r, unsigned h);

/// Predicted |L_U| of the cone: q^{n(r-d)}[D]_q + [r-d]_{q^n}.
mpz_class cone_size(const ConeSpec& c);

struct ConeCase {
    std::uint64_t hyperplanes = 0;
    std::uint64_t mismatches = 0; // size or weight differing from the formula
};

/// Hyperplane census of the cone split by whether the hyperplane contains
/// the vertex. through_vertex[i] collects hyperplanes of weight
/// gamma_i + n(r-d); off_vertex those of weight n(r-d-1) + D.
struct ConeProfileCheck {
    std::map<unsigned, ConeCase> through_vertex;
    ConeCase off_vertex;
    std::uint64_t unexpected = 0; // hyperplanes fitting neither case
    bool ok(bool require_all_realized) const;
};

ConeProfileCheck check_cone_profile(const ConeSpec& c);

enum class ExtensionKind { One, Two };

/// The cone embedded as pi_inf = {x_r = 0} of PG(r, q^n), extended by the
/// affine point y = e_r. Kind One yields B = L_{U'}; kind Two yields
/// K = (L_{U'} \ L_U) u (pi_inf \ L_U).
struct AffineExtension {
    ConeSpec cone;
    ExtensionKind kind;
    LinearSet at_infinity; // U inside GF(q^n)^{r+1}
    LinearSet extended;    // U' = U + <y>_{F_q}
    Point y;
    PointSet points;
};

AffineExtension construction_one(const ConeSpec& c);
AffineExtension construction_two(const ConeSpec& c);

/// |B| = q^{n(r-d)}[D+1]_q + [r-d]_{q^n}.
mpz_class construction_one_size(const ConeSpec& c);
/// |K| = q^{n(r-d)}([d]_{q^n} - [D]_q + q^D).
mpz_class construction_two_size(const ConeSpec& c);

/// Hyperplane families of an affine extension. For pi != pi_inf let
/// tau = pi cap pi_inf: Through* when tau contains S2 (indexed by i with
/// w(tau) = n(r-d) + gamma_i), Off* otherwise; *Empty when pi has no affine
/// point of B.
enum class Family { AtInfinity, OffEmpty, OffMeeting, ThroughEmpty, ThroughMeeting };

struct FamilyKey {
    Family family;
    int i = -1; // only for Through*
    auto operator<=>(const FamilyKey&) const = default;
};

std::string family_name(const FamilyKey& k);

struct FamilyStats {
    std::uint64_t hyperplanes = 0;
    std::set<std::uint64_t> sizes;   // realized |pi cap points|
    std::set<unsigned> weights;      // realized w_{L_{U'}}(pi)
};

struct ExtensionAnalysis {
    std::map<FamilyKey, FamilyStats> realized;
    std::map<std::uint64_t, std::uint64_t> size_histogram;
    std::map<FamilyKey, mpz_class> predicted_size;
    std::map<FamilyKey, unsigned> predicted_weight;
    /// Families claimed to occur: AtInfinity, OffMeeting (r > d),
    /// ThroughEmpty for i >= 1, ThroughMeeting for all i.
    std::vector<FamilyKey> listed;
    /// OffEmpty and ThroughEmpty with i = 0, which the counting argument rules out.
    std::vector<FamilyKey> excluded;

    bool sizes_match() const;
    bool weights_match() const;
    bool listed_realized() const;
    bool excluded_absent() const;
    /// Size values predicted for listed families.
    std::set<mpz_class> predicted_type() const;
};

ExtensionAnalysis analyze_extension(const AffineExtension& ext);

/// {(1:t:t^2)} u {(0:0:1), (0:1:0)} in PG(2, q), q even.
PointSet hyperoval_conic_nucleus(std::uint64_t q);

/// The cone over a set of PG(d-1, Q) (first d coordinates) with vertex the
/// last r-d coordinates, as a set of PG(r-1, Q). The vertex is included.
PointSet cone_point_set(const PointSet& base, unsigned r);

/// Cone over a plane hyperoval (first three coordinates) with vertex the
/// (r-3)-space on the remaining coordinates, vertex removed; lives in PG(r, q).
PointSet hypercylinder(unsigned r, const PointSet& hyperoval);
PointSet hypercylinder(std::uint64_t q, unsigned r);
/// The vertex used by hypercylinder(): x_0 = x_1 = x_2 = 0.
Subspace hypercylinder_vertex(const FieldPtr& F, unsigned r);

/// Checks the two-case hyperplane split of a cone over an arbitrary base:
/// [r-d]_Q + m Q^{r-d} through the vertex, [r-d-1]_Q + |B| Q^{r-d-1} otherwise.
/// Returns the number of hyperplanes violating it.
std::uint64_t cone_split_violations(const PointSet& base, const PointSet& cone_set);

} // namespace fingeo
