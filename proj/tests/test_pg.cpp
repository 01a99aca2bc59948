#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fingeo/pg.hpp"

using namespace fingeo;

namespace {

// All vectors of GF(Q)^a, indexed base Q.
std::vector<std::vector<Elem>> all_vectors(unsigned a, Elem Q) {
    std::vector<std::vector<Elem>> out;
    std::uint64_t total = ipow(Q, a);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<Elem> v(a);
        std::uint64_t x = c;
        for (unsigned i = a; i-- > 0; x /= Q) v[i] = static_cast<Elem>(x % Q);
        out.push_back(v);
    }
    return out;
}

// Number of b-dimensional subspaces of GF(Q)^a, by collecting element sets of
// spans of b-tuples of vectors.
std::uint64_t brute_subspaces(unsigned a, unsigned b, const FieldPtr& F) {
    const Elem Q = F->order();
    const auto vecs = all_vectors(a, Q);
    const auto coeffs = all_vectors(b, Q);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::size_t> idx(b, 0);
    while (true) {
        std::set<std::uint64_t> elems;
        for (const auto& c : coeffs) {
            std::uint64_t code = 0;
            for (unsigned j = 0; j < a; ++j) {
                Elem s = 0;
                for (unsigned i = 0; i < b; ++i) s = F->add(s, F->mul(c[i], vecs[idx[i]][j]));
                code = code * Q + s;
            }
            elems.insert(code);
        }
        if (elems.size() == ipow(Q, b)) seen.insert(std::vector<std::uint64_t>(elems.begin(), elems.end()));
        std::size_t k = 0;
        while (k < b && ++idx[k] == vecs.size()) idx[k++] = 0;
        if (k == b) break;
    }
    return seen.size();
}

Subspace random_subspace(const ProjectiveSpace& P, unsigned rows, std::mt19937_64& rng) {
    Matrix m(rows, P.coords());
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < P.coords(); ++j) m(i, j) = rng() % P.order();
    return Subspace(P.field_ptr(), P.dim(), m);
}

} // namespace

TEST_CASE("space_size") {
    CHECK(space_size(0, 7) == 0);
    CHECK(space_size(3, 2) == 7);
    CHECK(space_size(2, 4) == 5);
    CHECK(space_size(4, 4) == 85);
}

TEST_CASE("gaussian_binomial against brute force") {
    CHECK(gaussian_binomial(5, 0, 3) == 1);
    CHECK(gaussian_binomial(2, 3, 3) == 0);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> cases = {
        {4, 2, 2}, {4, 1, 2}, {4, 3, 2}, {5, 2, 2}, {3, 1, 3}, {3, 2, 3}, {4, 2, 3}, {3, 1, 4}, {2, 1, 5}};
    for (auto [a, b, Q] : cases) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(Q);
        CHECK(gaussian_binomial(a, b, Q) == static_cast<unsigned long>(brute_subspaces(a, b, Field::of_order(Q))));
    }
}

TEST_CASE("point and hyperplane enumeration") {
    for (auto [N, Q, expect] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{1, 2, 3}, {2, 4, 21}, {3, 4, 85}, {2, 3, 13}}) {
        const ProjectiveSpace P(Field::of_order(Q), N);
        const auto codes = P.point_codes();
        CHECK(codes.size() == expect);
        CHECK(P.num_points() == expect);
        CHECK(std::is_sorted(codes.begin(), codes.end()));
        CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
        CHECK(P.hyperplanes().size() == expect);
        for (auto c : codes) {
            const Point v = P.decode(c);
            CHECK(P.encode(v) == c);
            // the first nonzero entry is 1, and every multiple normalizes back
            CHECK(*std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; }) == 1);
            for (Elem lambda = 1; lambda < Q; ++lambda) {
                Point w = v;
                for (auto& e : w) e = P.field().mul(lambda, e);
                CHECK(P.code_of(w) == c);
            }
        }
    }
}

TEST_CASE("hyperplanes through a point") {
    for (auto [N, Q] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 4}}) {
        const ProjectiveSpace P(Field::of_order(Q), N);
        const Point v = P.decode(P.point_codes()[5]);
        std::size_t through = 0;
        for (const auto& H : P.hyperplanes()) through += H.contains(v);
        CHECK(mpz_class(static_cast<unsigned long>(through)) == gaussian_binomial(N, N - 1, Q));
    }
}

TEST_CASE("span, meet, incidence") {
    const ProjectiveSpace P(Field::of_order(4), 3);
    const Subspace A = P.point(P.decode(7));
    CHECK(span(A, A) == A);
    const auto hs = P.hyperplanes();
    CHECK(meet(hs[0], hs[1]).dim() == 1);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Subspace X = random_subspace(P, 1 + rng() % 3, rng);
        const Subspace Y = random_subspace(P, 1 + rng() % 3, rng);
        const Subspace S = span(X, Y), M = meet(X, Y);
        CHECK(S.rank() + M.rank() == X.rank() + Y.rank());
        // the meet's points are exactly the common points
        const auto px = P.points_of(X), py = P.points_of(Y);
        std::vector<std::uint64_t> common;
        std::set_intersection(px.begin(), px.end(), py.begin(), py.end(), std::back_inserter(common));
        CHECK(P.points_of(M) == common);
        CHECK(S.contains(X));
        CHECK(S.contains(Y));
        for (auto c : px) CHECK(incident(P.decode(c), X));
    }
}

TEST_CASE("subspaces are canonical") {
    const ProjectiveSpace P(Field::of_order(3), 3);
    std::mt19937_64 rng(11);
    for (int k = -1; k <= 3; ++k) {
        const auto all = P.subspaces(k);
        CHECK(mpz_class(static_cast<unsigned long>(all.size())) == gaussian_binomial(4, k + 1, 3));
        std::set<std::vector<Elem>> bases;
        for (const auto& S : all) bases.insert(S.basis().data());
        CHECK(bases.size() == all.size());
    }
    // a random basis of a stored subspace reduces to the stored matrix
    for (const auto& S : P.subspaces(1)) {
        Matrix m(2, 4);
        Elem a, b, c, d;
        do {
            a = rng() % 3, b = rng() % 3, c = rng() % 3, d = rng() % 3;
        } while ((a * d + 9 - b * c) % 3 == 0); // GF(3) encodes as integers mod 3
        const Field& F = P.field();
        for (unsigned j = 0; j < 4; ++j) {
            m(0, j) = F.add(F.mul(a, S.basis()(0, j)), F.mul(b, S.basis()(1, j)));
            m(1, j) = F.add(F.mul(c, S.basis()(0, j)), F.mul(d, S.basis()(1, j)));
        }
        CHECK(Subspace(P.field_ptr(), 3, m) == S);
    }
}

TEST_CASE("subspaces through a fixed subspace") {
    const ProjectiveSpace P34(Field::of_order(4), 3);
    const Subspace line = P34.subspaces(1)[17];
    const auto planes = P34.subspaces_through(line, 2);
    CHECK(planes.size() == 5);
    for (const auto& p : planes) CHECK(p.contains(line));

    const ProjectiveSpace P22(Field::of_order(2), 2);
    CHECK(P22.subspaces_through(P22.empty(), 1).size() == 7);

    const ProjectiveSpace P42(Field::of_order(2), 4);
    const Subspace plane = P42.subspaces(2)[40];
    const auto solids = P42.subspaces_through(plane, 3);
    CHECK(solids.size() == 3);
    for (const auto& s : solids) CHECK(s.contains(plane));
}

TEST_CASE("annihilator and coordinates") {
    const ProjectiveSpace P(Field::of_order(5), 3);
    for (const auto& L : P.subspaces(1)) {
        const Subspace A = annihilator(L);
        CHECK(A.rank() == 2);
        CHECK(annihilator(A) == L);
        for (std::size_t i = 0; i < A.rank(); ++i)
            for (std::size_t j = 0; j < L.rank(); ++j) CHECK(dot(P.field(), A.basis().row(i), L.basis().row(j)) == 0);
        const std::vector<Elem> coords = {2, 3};
        CHECK(L.coordinates_of(L.combine(coords)) == coords);
    }
}

TEST_CASE("guards are hard errors") {
    const ProjectiveSpace big(Field::of_order(16), 4);
    CHECK_THROWS_AS(big.subspaces(1), GuardExceeded);
    const ProjectiveSpace huge(Field::of_order(64), 4);
    CHECK_THROWS_AS(huge.point_codes(), GuardExceeded);
}
