#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <span>
#include <stdexcept>
#include <vector>

#include "fingeo/galois.hpp"
#include "fingeo/linalg.hpp"

namespace fingeo {

/// Raised when an enumeration would exceed a desk-scale limit.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxEnumeratedPoints = 10'000'000;
inline constexpr std::uint64_t kMaxEnumeratedSubspaces = 1'000'000;

/// [k]_Q = (Q^k - 1)/(Q - 1), the number of points of a (k-1)-space.
mpz_class space_size(unsigned k, std::uint64_t Q);

/// Number of b-dimensional subspaces of a vectors space of dimension a over GF(Q).
mpz_class gaussian_binomial(unsigned a, unsigned b, std::uint64_t Q);

/// Throws std::overflow_error if the value does not fit.
std::uint64_t to_u64(const mpz_class& v);

using Point = std::vector<Elem>;

/// A projective subspace, stored as the unique reduced row echelon basis of
/// the underlying vector space. Zero rows encode the empty subspace.
class Subspace {
public:
    Subspace(FieldPtr field, unsigned ambient_dim, Matrix rows);

    const FieldPtr& field() const noexcept { return field_; }
    unsigned ambient_dim() const noexcept { return ambient_dim_; }
    /// Projective dimension; -1 for the empty subspace.
    int dim() const noexcept { return static_cast<int>(basis_.rows()) - 1; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of a vector of this subspace with respect to basis().
    std::vector<Elem> coordinates_of(std::span<const Elem> v) const;
    /// Vector with the given coordinates with respect to basis().
    std::vector<Elem> combine(std::span<const Elem> coords) const;

    bool operator==(const Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && field_.get() == o.field_.get() && basis_ == o.basis_;
    }
    bool operator<(const Subspace& o) const;

private:
    FieldPtr field_;
    unsigned ambient_dim_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// PG(N, Q). Points are identified by the base-Q integer of their normalized
/// coordinate vector (coordinate 0 most significant), so ascending codes are
/// the lexicographic order on normalized vectors.
class ProjectiveSpace {
public:
    ProjectiveSpace(FieldPtr field, unsigned dim);

    unsigned dim() const noexcept { return dim_; }
    unsigned coords() const noexcept { return dim_ + 1; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::uint64_t order() const noexcept { return field_->order(); }

    std::uint64_t num_points() const;

    std::uint64_t encode(std::span<const Elem> normalized) const;
    Point decode(std::uint64_t code) const;
    /// Normalizes then encodes; throws on the zero vector.
    std::uint64_t code_of(std::span<const Elem> v) const;
    Point normalized(std::span<const Elem> v) const;

    /// All points in ascending code order.
    std::vector<std::uint64_t> point_codes() const;
    void for_each_point(const std::function<void(std::span<const Elem>)>& fn) const;

    /// Dual coordinates of all hyperplanes, in ascending order; hyperplane a
    /// is {x : a.x = 0}.
    std::vector<Point> hyperplane_duals() const;
    Subspace hyperplane(std::span<const Elem> dual) const;
    std::vector<Subspace> hyperplanes() const;

    /// All k-dimensional subspaces, -1 <= k <= N.
    std::vector<Subspace> subspaces(int k) const;
    void for_each_subspace(int k, const std::function<void(const Subspace&)>& fn) const;
    /// All k-dimensional subspaces containing F.
    std::vector<Subspace> subspaces_through(const Subspace& F, int k) const;

    Subspace full() const;
    Subspace empty() const;
    Subspace point(std::span<const Elem> v) const;
    Subspace span_of(const std::vector<Point>& vectors) const;

    /// Codes of the points of A, ascending.
    std::vector<std::uint64_t> points_of(const Subspace& A) const;

    bool operator==(const ProjectiveSpace& o) const { return dim_ == o.dim_ && field_.get() == o.field_.get(); }

private:
    void check(const Subspace& A) const;

    FieldPtr field_;
    unsigned dim_;
    std::vector<std::uint64_t> place_; // Q^{N-i}
};

Subspace span(const Subspace& A, const Subspace& B);
Subspace meet(const Subspace& A, const Subspace& B);
bool incident(std::span<const Elem> point, const Subspace& A);
/// The annihilator of A in the dual space, as a subspace of the same ambient.
Subspace annihilator(const Subspace& A);

} // namespace fingeo
