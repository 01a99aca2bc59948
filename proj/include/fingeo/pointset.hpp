#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fingeo/pg.hpp"

namespace fingeo {

/// A set of points of PG(N, Q), stored as sorted point codes.
class PointSet {
public:
    /// Throws std::invalid_argument on duplicates or codes that are not
    /// normalized points of the space.
    PointSet(ProjectiveSpace space, std::vector<std::uint64_t> codes);
    /// Normalizes each vector; duplicates are rejected.
    static PointSet from_vectors(ProjectiveSpace space, const std::vector<Point>& vectors);

    const ProjectiveSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }
    const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
    std::vector<Point> points() const;

    bool contains(std::uint64_t code) const;
    bool contains_vector(std::span<const Elem> v) const { return contains(space_.code_of(v)); }

    /// Number of points of the set on the subspace.
    std::uint64_t count_in(const Subspace& s) const;
    /// Points of the set lying on the subspace.
    std::vector<std::uint64_t> intersection(const Subspace& s) const;

    PointSet complement() const;
    PointSet without(const std::vector<std::uint64_t>& codes) const;

    bool operator==(const PointSet& o) const { return space_ == o.space_ && codes_ == o.codes_; }

private:
    ProjectiveSpace space_;
    std::vector<std::uint64_t> codes_;
};

/// Restricts S to the subspace A and expresses the result in the coordinates
/// of A's canonical basis, as a point set of PG(dim A, Q).
PointSet restrict_to(const PointSet& S, const Subspace& A);

} // namespace fingeo
