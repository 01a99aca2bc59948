#include "fingeo/codes_rank.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <stdexcept>

#include "fingeo/constructions.hpp"
#include "fingeo/parallel.hpp"

namespace fingeo {

unsigned rank_weight(const Tower& T, std::span<const Elem> v) {
    Matrix m(v.size(), T.n());
    for (std::size_t j = 0; j < v.size(); ++j) T.coordinates(v[j], m.row(j));
    return static_cast<unsigned>(rank(T.base(), std::move(m)));
}

RankCode::RankCode(TowerPtr tower, Matrix generator) : tower_(std::move(tower)), g_(std::move(generator)) {
    if (g_.rows() == 0) throw std::invalid_argument("generator matrix has no rows");
    for (Elem e : g_.data())
        if (!tower_->ext().contains(e)) throw std::invalid_argument("entry outside GF(q^n)");
    if (rank(tower_->ext(), g_) != g_.rows()) throw std::invalid_argument("generator rows are dependent");
}

namespace {

std::vector<std::vector<Elem>> columns(const Matrix& G) {
    std::vector<std::vector<Elem>> out(G.cols(), std::vector<Elem>(G.rows()));
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) out[j][i] = G(i, j);
    return out;
}

} // namespace

bool RankCode::is_nondegenerate() const {
    Matrix m(0, dimension() * tower_->n());
    for (const auto& c : columns(g_)) m.append_row(tower_->flatten(c));
    return rank(tower_->base(), std::move(m)) == length();
}

std::vector<Elem> RankCode::encode(std::span<const Elem> x) const {
    if (x.size() != dimension()) throw std::invalid_argument("message length differs from k");
    const Field& E = tower_->ext();
    std::vector<Elem> word(length(), 0);
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (x[i] == 0) continue;
        const auto row = g_.row(i);
        for (std::size_t j = 0; j < length(); ++j) word[j] = E.add(word[j], E.mul(x[i], row[j]));
    }
    return word;
}

RankSystem system_from_rank_code(const RankCode& C) {
    if (!C.is_nondegenerate()) throw std::invalid_argument("degenerate rank code: columns are F_q-dependent");
    return RankSystem(C.tower_ptr(), static_cast<unsigned>(C.dimension()), columns(C.generator()));
}

RankCode rank_code_from_system(const RankSystem& U) {
    if (U.span_rank() != U.r()) throw std::invalid_argument("system does not span GF(q^n)^k");
    Matrix G(U.r(), U.rank());
    for (std::size_t j = 0; j < U.rank(); ++j)
        for (std::size_t i = 0; i < U.r(); ++i) G(i, j) = U.basis()[j][i];
    return RankCode(U.tower_ptr(), std::move(G));
}

std::vector<std::uint64_t> rank_weight_distribution(const RankCode& C) {
    const Tower& T = C.tower();
    const ProjectiveSpace P(T.ext_ptr(), static_cast<unsigned>(C.dimension() - 1));
    if (space_size(static_cast<unsigned>(C.dimension()), T.ext().order()) > kMaxEnumeratedPoints)
        throw GuardExceeded("rank weight sweep exceeds 10^7 codeword classes");
    const std::vector<Point> xs = P.hyperplane_duals();
    const std::uint64_t scalars = T.ext().order() - 1;
    using Dist = std::vector<std::uint64_t>;
    Dist dist = parallel_reduce(
        xs.size(), Dist(T.n() + 1, 0),
        [&](std::size_t begin, std::size_t end, Dist& acc) {
            for (std::size_t i = begin; i < end; ++i) acc[rank_weight(T, C.encode(xs[i]))] += scalars;
        },
        [](Dist& total, const Dist& part) {
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
        });
    dist[0] += 1;
    return dist;
}

unsigned rank_distance_by_hyperplanes(const RankCode& C) {
    const RankSystem U = system_from_rank_code(C);
    const ProjectiveSpace& P = U.ambient();
    if (space_size(P.coords(), P.order()) > kMaxEnumeratedSubspaces)
        throw GuardExceeded("hyperplane enumeration exceeds 10^6");
    unsigned best = 0;
    for (const auto& a : P.hyperplane_duals()) best = std::max(best, subspace_weight(P.hyperplane(a), U));
    return U.rank() - best;
}

DualityCheck check_rank_duality(const RankCode& C, std::uint64_t seed, std::uint64_t samples) {
    const RankSystem U = system_from_rank_code(C);
    const Tower& T = C.tower();
    const ProjectiveSpace& P = U.ambient();
    const std::uint64_t Qn = T.ext().order();
    const std::size_t k = C.dimension();
    const unsigned l = static_cast<unsigned>(C.length());
    auto agrees = [&](std::span<const Elem> x) {
        const unsigned direct = rank_weight(T, C.encode(x));
        const unsigned dual = l - subspace_weight(P.hyperplane(x), U);
        return direct == dual;
    };

    DualityCheck out;
    out.seed = seed;
    mpz_class total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<unsigned long>(Qn);
    using Tally = std::pair<std::uint64_t, std::uint64_t>; // tested, failures
    auto merge = [](Tally& a, const Tally& b) {
        a.first += b.first;
        a.second += b.second;
    };
    Tally t;
    if (total <= kMaxEnumeratedPoints) {
        out.exhaustive = true;
        const std::uint64_t N = to_u64(total);
        t = parallel_reduce(
            static_cast<std::size_t>(N - 1), Tally{0, 0},
            [&](std::size_t begin, std::size_t end, Tally& acc) {
                std::vector<Elem> x(k);
                for (std::size_t idx = begin; idx < end; ++idx) {
                    std::uint64_t rest = idx + 1;
                    for (std::size_t i = k; i-- > 0;) {
                        x[i] = static_cast<Elem>(rest % Qn);
                        rest /= Qn;
                    }
                    ++acc.first;
                    if (!agrees(x)) ++acc.second;
                }
            },
            merge);
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::vector<Elem>> xs;
        while (xs.size() < samples) {
            std::vector<Elem> x(k);
            for (auto& e : x) e = static_cast<Elem>(rng() % Qn);
            if (std::any_of(x.begin(), x.end(), [](Elem e) { return e != 0; })) xs.push_back(std::move(x));
        }
        t = parallel_reduce(
            xs.size(), Tally{0, 0},
            [&](std::size_t begin, std::size_t end, Tally& acc) {
                for (std::size_t i = begin; i < end; ++i) {
                    ++acc.first;
                    if (!agrees(xs[i])) ++acc.second;
                }
            },
            merge);
    }
    out.tested = t.first;
    out.failures = t.second;
    return out;
}

RankCode cone_rank_code(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h) {
    const ConeSpec c = cone(moore_h_scattered(q, n, d, h), r, h);
    return rank_code_from_system(c.cone);
}

RankCode construction_one_rank_code(std::uint64_t q, unsigned n, unsigned r, unsigned d, unsigned h) {
    const ConeSpec c = cone(moore_h_scattered(q, n, d, h), r, h);
    return rank_code_from_system(construction_one(c).extended);
}

std::vector<LabeledRankCode> rank_code_suite(std::uint64_t q, unsigned n, unsigned k) {
    std::vector<LabeledRankCode> out;
    auto label = [&](const char* kind, unsigned r, unsigned d, unsigned h) {
        return std::string(kind) + "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ",r=" + std::to_string(r) +
               ",d=" + std::to_string(d) + ",h=" + std::to_string(h) + ")";
    };
    for (int pass = 0; pass < 2; ++pass) {
        const bool one = pass == 1;
        if (one && k < 2) break;
        const unsigned r = one ? k - 1 : k;
        for (unsigned d = 1; d <= r; ++d)
            for (unsigned h = 1; h < n; ++h) {
                if (d % (h + 1) != 0) continue;
                out.push_back({label(one ? "construction1" : "cone", r, d, h), h, one,
                               one ? construction_one_rank_code(q, n, r, d, h) : cone_rank_code(q, n, r, d, h)});
            }
    }
    return out;
}

} // namespace fingeo
