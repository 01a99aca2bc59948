#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fingeo/codes_hamming.hpp"
#include "fingeo/constructions.hpp"

using namespace fingeo;

namespace {

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng() % F.order();
    return m;
}

HammingCode random_code(const FieldPtr& F, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        try {
            return HammingCode(F, random_matrix(*F, k, n, rng));
        } catch (const std::invalid_argument&) {
        }
    }
}

// Image of a plane set under a random invertible matrix.
PointSet random_image(const PointSet& S, std::mt19937_64& rng) {
    const ProjectiveSpace& P = S.space();
    const Field& F = P.field();
    Matrix m;
    while (true) {
        m = random_matrix(F, 3, 3, rng);
        if (Subspace(P.field_ptr(), 2, m).rank() == 3) break;
    }
    std::vector<Point> out;
    for (const auto& v : S.points()) {
        Point w(3, 0);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) w[i] = F.add(w[i], F.mul(m(i, j), v[j]));
        out.push_back(w);
    }
    return PointSet::from_vectors(P, out);
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }

} // namespace

TEST_CASE("frame of PG(1, 2)") {
    const ProjectiveSpace P(Field::of_order(2), 1);
    const ProjectiveSystem S = ProjectiveSystem::from_set(PointSet(P, P.point_codes()));
    const HammingCode C = code_from_system(S);
    CHECK(C.length() == 3);
    CHECK(C.dimension() == 2);
    CHECK(weight_distribution(C) == std::vector<std::uint64_t>{1, 0, 3, 0});
    CHECK(minimum_distance(weight_distribution(C)) == 2);
    CHECK(C.is_projective());
}

TEST_CASE("systems and codes round-trip") {
    std::mt19937_64 rng(21);
    for (auto [Q, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
        const ProjectiveSpace P(Field::of_order(Q), k - 1);
        const auto all = P.point_codes();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
            for (auto c : all)
                if (rng() % 2) pts.emplace_back(c, 1 + rng() % 3);
            try {
                const ProjectiveSystem S(P, pts);
                const HammingCode C = code_from_system(S);
                CHECK(C.length() == S.length());
                CHECK(C.is_nondegenerate());
                CHECK(system_from_code(C) == S);
            } catch (const std::invalid_argument&) {
                // the random selection did not span
            }
        }
    }
    const auto F = Field::of_order(3);
    const HammingCode zero_col(F, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3));
    CHECK_FALSE(zero_col.is_nondegenerate());
    CHECK_THROWS_AS(system_from_code(zero_col), std::invalid_argument);
    CHECK_THROWS_AS(HammingCode(F, Matrix::from_rows({{1, 2, 0}, {2, 1, 0}}, 3)), std::invalid_argument);
}

TEST_CASE("weight distribution: hyperplanes against codewords") {
    std::mt19937_64 rng(22);
    for (auto [Q, k, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 3, 7}, {2, 4, 10}, {3, 3, 8}, {4, 3, 9}, {5, 2, 7}, {8, 3, 12}}) {
        const auto F = Field::of_order(Q);
        for (int trial = 0; trial < 5; ++trial) {
            HammingCode C = random_code(F, k, n, rng);
            if (!C.is_nondegenerate()) continue;
            const auto a = weight_distribution_codewords(C);
            const auto b = weight_distribution_hyperplanes(C);
            CHECK(a == b);
            CHECK(sum(a) == ipow(Q, k));
            CHECK(a[0] == 1);
        }
    }
}

TEST_CASE("hypercylinder codes") {
    struct Expect {
        std::uint64_t q;
        unsigned r;
        std::vector<std::pair<std::size_t, std::uint64_t>> weights;
    };
    for (const Expect& e : std::vector<Expect>{{2, 3, {{4, 14}, {8, 1}}},
                                               {4, 3, {{16, 45}, {18, 192}, {24, 18}}},
                                               {8, 3, {{64, 315}, {70, 3584}, {80, 196}}},
                                               {4, 4, {{64, 45}, {72, 960}, {96, 18}}}}) {
        CAPTURE(e.q);
        CAPTURE(e.r);
        const HammingCode C = hypercylinder_code(e.q, e.r);
        CHECK(C.length() == ipow(e.q, e.r - 1) + 2 * ipow(e.q, e.r - 2));
        CHECK(C.dimension() == e.r + 1);
        CHECK(C.is_projective());
        const auto dist = weight_distribution(C);
        CHECK(dist == weight_distribution_codewords(C));
        CHECK(minimum_distance(dist) == ipow(e.q, e.r - 1));
        std::vector<std::pair<std::size_t, std::uint64_t>> got;
        for (std::size_t w : nonzero_weights(dist)) got.emplace_back(w, dist[w]);
        CHECK(got == e.weights);
        // full-weight codewords come from hyperplanes missing the set
        const PointSet S = hypercylinder(e.q, e.r);
        const auto prof = profile(S, static_cast<int>(e.r) - 1);
        CHECK(dist[C.length()] == prof.counts.at(0) * (e.q - 1));
    }
}

TEST_CASE("stability decision") {
    for (auto [q, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{4, 3}, {8, 3}, {4, 4}}) {
        const HammingCode C = hypercylinder_code(q, r);
        const StabilityVerdict v = stability_decide(C, q, r, ipow(q, r - 2));
        CHECK(v.hypercylinder);
        CHECK(v.t_is_resolved);
        CHECK(v.match.has_value());
        CHECK(v.geometry.all_pass());
    }
    // wrong length for the given t
    CHECK_THROWS_AS(stability_decide(hypercylinder_code(4, 3), 4, 3, 3), HypothesisViolation);
    // q = 2 is outside the hypotheses
    CHECK_THROWS_AS(stability_decide(hypercylinder_code(2, 3), 2, 3, 2), HypothesisViolation);
    std::mt19937_64 rng(23);
    const auto F = Field::of_order(4);
    for (int trial = 0; trial < 10; ++trial) CHECK_THROWS_AS(stability_decide(random_code(F, 4, 24, rng), 4, 3, 4), HypothesisViolation);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PointSet P = perturb_one_point(hypercylinder(4, 3), seed);
        bool rejected = false;
        try {
            rejected = !stability_decide(code_from_system(ProjectiveSystem::from_set(P)), 4, 3, 4).hypercylinder;
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        CHECK(rejected);
    }
}

TEST_CASE("equivalence") {
    const Report same = equivalence_invariants(hypercylinder_code(4, 3), hypercylinder_code(4, 3));
    CHECK(same.all_pass());
    std::mt19937_64 rng(24);
    const HammingCode R = random_code(Field::of_order(4), 4, 24, rng);
    CHECK_FALSE(equivalence_invariants(hypercylinder_code(4, 3), R).all_pass());

    for (std::uint64_t q : {4, 8}) {
        const PointSet H = hyperoval_conic_nucleus(q);
        for (int trial = 0; trial < 5; ++trial) CHECK(hyperoval_pgl_equivalent(H, random_image(H, rng)));
        // a conic plus an exterior point is not projectively a conic plus its nucleus
        const PointSet C = H.without({H.space().code_of(std::vector<Elem>{0, 1, 0})});
        std::uint64_t extra = 0;
        for (auto code : H.space().point_codes())
            if (!H.contains(code)) {
                extra = code;
                break;
            }
        std::vector<std::uint64_t> codes = C.codes();
        codes.push_back(extra);
        std::sort(codes.begin(), codes.end());
        const PointSet other(H.space(), codes);
        CHECK_FALSE(is_hyperoval(other));
        CHECK_FALSE(hyperoval_pgl_equivalent(H, other));
    }
}
