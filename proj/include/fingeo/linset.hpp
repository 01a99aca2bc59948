#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fingeo/galois.hpp"
#include "fingeo/pg.hpp"

namespace fingeo {

struct WeightedPoint {
    std::uint64_t code;
    unsigned weight;
};

/// An F_q-subspace U of GF(q^n)^r and the point set L_U it determines in
/// PG(r-1, q^n).
class LinearSet {
public:
    /// Throws std::invalid_argument when the basis is not F_q-independent.
    LinearSet(TowerPtr tower, unsigned r, std::vector<std::vector<Elem>> basis);

    const Tower& tower() const noexcept { return *tower_; }
    const TowerPtr& tower_ptr() const noexcept { return tower_; }
    unsigned r() const noexcept { return r_; }
    /// dim_{F_q} U.
    unsigned rank() const noexcept { return static_cast<unsigned>(basis_.size()); }
    const std::vector<std::vector<Elem>>& basis() const noexcept { return basis_; }

    /// PG(r-1, q^n).
    const ProjectiveSpace& ambient() const noexcept { return ambient_; }

    /// Points of L_U with their weights, ascending by code. The weight of a
    /// point is read off from how many vectors of U it carries: q^w - 1.
    const std::vector<WeightedPoint>& points() const;
    std::size_t size() const { return points().size(); }
    /// Weight of the point with the given code; 0 when not in L_U.
    unsigned weight_of(std::uint64_t code) const;

    /// dim of the GF(q^n)-span of U.
    unsigned span_rank() const;

    /// U + <v>_{F_q}; throws if v already lies in U.
    LinearSet extended(std::span<const Elem> v) const;
    /// U embedded in GF(q^n)^{r+extra} with zero trailing coordinates.
    LinearSet padded(unsigned extra) const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<WeightedPoint> points;
    };

    TowerPtr tower_;
    unsigned r_;
    std::vector<std::vector<Elem>> basis_;
    ProjectiveSpace ambient_;
    std::shared_ptr<Cache> cache_;
};

/// Every nonzero F_q-combination of basis rows, evaluated. Guarded at 2^24.
void for_each_vector(const LinearSet& L, const std::function<void(std::span<const Elem>)>& fn);

/// dim_{F_q}(U cap <v>_{q^n}).
unsigned point_weight(std::span<const Elem> v, const LinearSet& L);
/// dim_{F_q}(U cap W) for the GF(q^n)-space W underlying omega.
unsigned subspace_weight(const Subspace& omega, const LinearSet& L);
/// dim_{F_q}(U cap a^perp) computed from the rank of u -> a.u.
unsigned hyperplane_weight(std::span<const Elem> dual, const LinearSet& L);

/// Entry i is N_i, the number of points of PG(r-1, q^n) of weight i (i = 0..k).
std::vector<std::uint64_t> weight_spectrum(const LinearSet& L);

/// Pointwise test of omega being contained in L_U.
bool contains_subspace(const Subspace& omega, const LinearSet& L);

/// <L_U> is the whole space and every (h-1)-space has weight <= h.
/// Throws GuardExceeded when there are more than 10^6 (h-1)-spaces.
bool is_h_scattered(const LinearSet& L, unsigned h);
bool is_properly_maximum(const LinearSet& L, unsigned h);

struct HyperplaneProfile {
    /// (weight, |H cap L_U|) -> number of hyperplanes H.
    std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> joint;

    std::map<unsigned, std::uint64_t> by_weight() const;
    std::map<std::uint64_t, std::uint64_t> by_size() const;
    std::uint64_t total() const;
};

HyperplaneProfile hyperplane_profile(const LinearSet& L);

/// Predicted number t_i of hyperplanes of weight rn/(h+1) - n + i for a
/// properly maximum h-scattered set, i = 0..h. Exact; throws
/// std::invalid_argument unless (h+1) | rn and 1 <= h, and std::logic_error
/// if the closed form fails to divide exactly.
std::vector<mpz_class> predicted_t(std::uint64_t q, unsigned n, unsigned r, unsigned h);

/// [k]_q = (q^k - 1)/(q - 1); throws std::invalid_argument for k < 0.
mpz_class qnum(long k, std::uint64_t q);
mpz_class mpz_pow(std::uint64_t base, unsigned long exp);

} // namespace fingeo
