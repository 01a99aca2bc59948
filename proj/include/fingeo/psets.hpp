#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fingeo/pointset.hpp"

namespace fingeo {

/// Raised when a verifier's input does not satisfy the theorem's hypotheses.
class HypothesisViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false; // not evaluated: enumeration guard exceeded
    std::string detail;
    std::optional<Matrix> witness; // canonical basis of an offending subspace
};

struct Report {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckItem> items;

    bool all_pass() const;
    bool any_fail() const;
    bool any_skipped() const;
    CheckItem& add(std::string name, bool pass, std::string detail = {});
    CheckItem& skip(std::string name, std::string detail);
};

/// Size histogram of S over all k-spaces of the ambient.
struct IntersectionProfile {
    int k = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t total() const;
    /// Every realized size is in the list.
    bool is_type_subset(const std::vector<std::uint64_t>& sizes) const;
    /// Subset, and every listed size occurs.
    bool is_type_exact(const std::vector<std::uint64_t>& sizes) const;
};

IntersectionProfile profile(const PointSet& S, int k);

/// Every k-space with its intersection size, in enumeration order.
std::vector<std::pair<Subspace, std::uint64_t>> census(const PointSet& S, int k);

struct EvenSetCheck {
    bool even = false;
    /// False only when S is a nonempty even set, Q even, and
    /// |S| < Q^{N-1} + 2Q^{N-2}: a counterexample to the lower bound.
    bool bound_holds = true;
    mpz_class bound;
};

EvenSetCheck is_even_set(const PointSet& S);

struct KmArc {
    std::uint64_t t;
    /// For 1 < t < q: t | q and q even. Always true otherwise.
    bool divisibility_holds;
};

/// t when |S| = q + t and the line type is exactly (0, 2, t).
std::optional<KmArc> recognize_km_arc(const PointSet& S);

bool is_hyperoval(const PointSet& S);

struct HypercylinderMatch {
    Subspace vertex;
    Subspace plane;   // skew to the vertex
    PointSet basis;   // hyperoval, in the coordinates of plane
};

/// Throws HypothesisViolation unless Q is even, N >= 3 and
/// |S| = Q^{N-1} + 2Q^{N-2}. Returns nullopt when S is not a hypercylinder.
std::optional<HypercylinderMatch> recognize_hypercylinder(const PointSet& S);

/// Whether S is cone(vertex, hyperoval) minus the vertex, the hyperoval
/// obtained by projecting S from the vertex onto plane.
std::optional<HypercylinderMatch> match_hypercylinder(const PointSet& S, const Subspace& vertex, const Subspace& plane);

/// The nine properties of sets of PG(3, q) of size q^2+q+t with plane
/// type within {0, q+2, q+t}, 2 < t <= q+1.
Report verify_plane_km_theorem(const PointSet& S, std::uint64_t t);

/// The eight properties of sets of PG(r, q) (r >= 4, q > 2) of size
/// q^{r-1}+q^{r-2}+t with hyperplane type within {0, q^{r-2}+2q^{r-3},
/// q^{r-2}+t}, followed by the (r-i)-space size predicate and line type (0,2,q).
Report verify_space_theorem(const PointSet& S, std::uint64_t t);

/// S with one point swapped for a point outside S, both chosen by a
/// generator seeded with seed. Throws when S is empty or the whole space.
PointSet perturb_one_point(const PointSet& S, std::uint64_t seed);

/// No three points collinear.
bool is_arc(const PointSet& S);
/// Some nonzero quadratic form of PG(2, q) vanishes on every point of S.
bool on_conic(const PointSet& S);

struct OvalSweep {
    std::uint64_t ovals = 0;   // (q+1)-arcs
    std::uint64_t conics = 0;  // of which lie on a conic
};

/// Every (q+1)-arc of PG(2, q), q odd, by a depth-first search over arcs
/// in ascending point order.
OvalSweep oval_conic_sweep(std::uint64_t q);

} // namespace fingeo
