#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fingeo/linset.hpp"

namespace fingeo {

/// dim_{F_q} of the span of the entries of v in GF(q^n).
unsigned rank_weight(const Tower& T, std::span<const Elem> v);

/// An F_q-subspace U of GF(q^n)^k spanning GF(q^n)^k over GF(q^n).
using RankSystem = LinearSet;

/// A GF(q^n)-linear code in GF(q^n)^l with the rank metric.
class RankCode {
public:
    /// Throws std::invalid_argument unless the rows are GF(q^n)-independent.
    RankCode(TowerPtr tower, Matrix generator);

    const Tower& tower() const noexcept { return *tower_; }
    const TowerPtr& tower_ptr() const noexcept { return tower_; }
    const Matrix& generator() const noexcept { return g_; }
    std::size_t length() const noexcept { return g_.cols(); }
    std::size_t dimension() const noexcept { return g_.rows(); }

    /// The columns are F_q-independent.
    bool is_nondegenerate() const;
    /// xG.
    std::vector<Elem> encode(std::span<const Elem> x) const;

private:
    TowerPtr tower_;
    Matrix g_;
};

/// U = F_q-span of the columns; throws for degenerate codes.
RankSystem system_from_rank_code(const RankCode& C);
/// Generator whose columns are the basis of U; throws unless U spans.
RankCode rank_code_from_system(const RankSystem& U);

/// Entry w is the number of codewords of rank weight w (w = 0..n), from a
/// sweep over one representative per projective point of PG(k-1, q^n).
std::vector<std::uint64_t> rank_weight_distribution(const RankCode& C);

/// l - max dim_{F_q}(U cap H) over the hyperplanes H of GF(q^n)^k.
unsigned rank_distance_by_hyperplanes(const RankCode& C);

struct DualityCheck {
    bool exhaustive = false;
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    bool ok() const { return failures == 0 && tested > 0; }
};

/// w(xG) against l - dim_{F_q}(U cap x^perp), where x^perp is taken over
/// GF(q^n) and intersected with U after flattening. Every nonzero x when
/// q^{nk} <= 10^7, otherwise `samples` x drawn from a generator seeded with seed.
DualityCheck check_rank_duality(const RankCode& C, std::uint64_t seed = 0, std::uint64_t samples = 10'000);

/// Code of the cone over moore_h_scattered(q, n, d, h): an
/// [dn/(h+1) + n(r-d), r, n-h]_{q^n/q} code.
RankCode cone_rank_code(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h);
/// Code of U' = U + <e_r>_{F_q} from construction one:
/// [dn/(h+1) + n(r-d) + 1, r+1, 1]_{q^n/q}.
RankCode construction_one_rank_code(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h);

struct LabeledRankCode {
    std::string label; // e.g. "cone(q=2,n=3,r=2,d=2,h=1)"
    unsigned h = 0;
    bool construction_one = false;
    RankCode code;
};

/// Every cone code with r = k and every construction-one code with r = k-1
/// over GF(q^n)/GF(q) whose Moore base exists ((h+1) | d, d <= r, h < n).
std::vector<LabeledRankCode> rank_code_suite(std::uint64_t q, unsigned n, unsigned k);

} // namespace fingeo
