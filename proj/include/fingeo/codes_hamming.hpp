#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fingeo/pointset.hpp"
#include "fingeo/psets.hpp"

namespace fingeo {

/// A multiset of points of PG(k-1, Q) spanning the space.
class ProjectiveSystem {
public:
    /// Points are (code, multiplicity) pairs; throws unless every
    /// multiplicity is positive, codes are distinct and the points span.
    ProjectiveSystem(ProjectiveSpace space, std::vector<std::pair<std::uint64_t, std::uint64_t>> points);
    static ProjectiveSystem from_set(const PointSet& S);

    const ProjectiveSpace& space() const noexcept { return space_; }
    /// Ascending by code.
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points() const noexcept { return points_; }
    std::uint64_t length() const noexcept { return length_; }
    unsigned dimension() const noexcept { return space_.dim() + 1; }
    bool operator==(const ProjectiveSystem& o) const { return space_ == o.space_ && points_ == o.points_; }

private:
    ProjectiveSpace space_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> points_;
    std::uint64_t length_ = 0;
};

class HammingCode {
public:
    /// Throws std::invalid_argument unless the rows are independent.
    HammingCode(FieldPtr field, Matrix generator);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Matrix& generator() const noexcept { return g_; }
    std::size_t length() const noexcept { return g_.cols(); }
    std::size_t dimension() const noexcept { return g_.rows(); }

    bool is_nondegenerate() const;
    /// No zero column and no two proportional columns.
    bool is_projective() const;

private:
    FieldPtr field_;
    Matrix g_;
};

/// Columns are the point representatives in ascending code order, each
/// repeated by its multiplicity.
HammingCode code_from_system(const ProjectiveSystem& S);
/// Throws std::invalid_argument for degenerate codes.
ProjectiveSystem system_from_code(const HammingCode& C);

/// A_0..A_n by enumerating all Q^k codewords; guarded at 10^7 codewords.
std::vector<std::uint64_t> weight_distribution_codewords(const HammingCode& C);
/// A_0..A_n from hyperplane intersections of the associated system: each
/// hyperplane holding s points gives Q-1 codewords of weight n - s.
std::vector<std::uint64_t> weight_distribution_hyperplanes(const HammingCode& C);
std::vector<std::uint64_t> weight_distribution(const HammingCode& C);

/// Least i > 0 with A_i > 0; 0 for the zero code.
std::size_t minimum_distance(const std::vector<std::uint64_t>& dist);
std::vector<std::size_t> nonzero_weights(const std::vector<std::uint64_t>& dist);

/// Code of the hypercylinder of PG(r, q) built on the conic-plus-nucleus
/// hyperoval: [q^{r-1}+2q^{r-2}, r+1, q^{r-1}]_q.
HammingCode hypercylinder_code(std::uint64_t q, unsigned r);

struct StabilityVerdict {
    bool hypercylinder = false;
    std::optional<HypercylinderMatch> match;
    std::uint64_t t = 0;
    mpz_class t_resolved;        // q^{r-2}
    bool t_is_resolved = false;  // t == q^{r-2}
    std::string note;            // the printed conclusion t = 2q^{r-2} is flagged here
    Report geometry;             // verify_plane_km_theorem / verify_space_theorem
};

/// Checks the hypotheses (q >= 4, projective, length q^{r-1}+q^{r-2}+t,
/// dimension r+1, nonzero weights within {q^{r-1}, q^{r-1}+t-2q^{r-3},
/// q^{r-1}+q^{r-2}+t}, 2q^{r-3} < t <= q^{r-2}+q-1), throwing
/// HypothesisViolation when one fails, then decides whether the associated
/// set is a hypercylinder.
StabilityVerdict stability_decide(const HammingCode& C, std::uint64_t q, unsigned r, std::uint64_t t);

/// Length, dimension and weight distribution compared item by item.
Report equivalence_invariants(const HammingCode& C1, const HammingCode& C2);

/// Exact PGL(3, q) equivalence of two point sets of PG(2, q), q <= 8, by
/// mapping an ordered frame of the first set onto every ordered frame of
/// the second. Sets without a frame fall back to sweeping the whole group
/// when |PGL(3,q)| <= 10^7.
bool hyperoval_pgl_equivalent(const PointSet& H1, const PointSet& H2);

} // namespace fingeo
