#include "fingeo/pointset.hpp"

#include <algorithm>

namespace fingeo {

PointSet::PointSet(ProjectiveSpace space, std::vector<std::uint64_t> codes)
    : space_(std::move(space)), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
        throw std::invalid_argument("point set contains duplicate points");
    }
    for (auto c : codes_) {
        const Point v = space_.decode(c);
        if (space_.encode(v) != c) throw std::invalid_argument("point code outside the ambient space");
        Point w = v;
        if (!normalize(space_.field(), w) || w != v) throw std::invalid_argument("point is not normalized");
    }
}

PointSet PointSet::from_vectors(ProjectiveSpace space, const std::vector<Point>& vectors) {
    std::vector<std::uint64_t> codes;
    codes.reserve(vectors.size());
    for (const auto& v : vectors) codes.push_back(space.code_of(v));
    return PointSet(std::move(space), std::move(codes));
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back(space_.decode(c));
    return out;
}

bool PointSet::contains(std::uint64_t code) const { return std::binary_search(codes_.begin(), codes_.end(), code); }

std::uint64_t PointSet::count_in(const Subspace& s) const {
    if (s.dim() == static_cast<int>(space_.dim()) - 1 && s.dim() >= 0) {
        // hyperplane: one dot product per point
        const Matrix dual = null_space(space_.field(), s.basis());
        std::uint64_t n = 0;
        for (auto c : codes_) n += dot(space_.field(), dual.row(0), space_.decode(c)) == 0;
        return n;
    }
    std::uint64_t n = 0;
    if (static_cast<std::uint64_t>(s.dim() + 1) * 8 < codes_.size() || s.dim() < 3) {
        for (auto c : space_.points_of(s)) n += contains(c);
    } else {
        for (auto c : codes_) n += s.contains(space_.decode(c));
    }
    return n;
}

std::vector<std::uint64_t> PointSet::intersection(const Subspace& s) const {
    std::vector<std::uint64_t> out;
    for (auto c : codes_) {
        if (s.contains(space_.decode(c))) out.push_back(c);
    }
    return out;
}

PointSet PointSet::complement() const {
    std::vector<std::uint64_t> out;
    space_.for_each_point([&](std::span<const Elem> v) {
        const auto c = space_.encode(v);
        if (!contains(c)) out.push_back(c);
    });
    return PointSet(space_, std::move(out));
}

PointSet PointSet::without(const std::vector<std::uint64_t>& codes) const {
    std::vector<std::uint64_t> out;
    for (auto c : codes_) {
        if (std::find(codes.begin(), codes.end(), c) == codes.end()) out.push_back(c);
    }
    return PointSet(space_, std::move(out));
}

PointSet restrict_to(const PointSet& S, const Subspace& A) {
    if (A.dim() < 0) throw std::invalid_argument("cannot restrict to the empty subspace");
    ProjectiveSpace sub(S.space().field_ptr(), static_cast<unsigned>(A.dim()));
    std::vector<std::uint64_t> codes;
    for (auto c : S.intersection(A)) codes.push_back(sub.code_of(A.coordinates_of(S.space().decode(c))));
    return PointSet(std::move(sub), std::move(codes));
}

} // namespace fingeo
