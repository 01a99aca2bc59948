#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fingeo/galois.hpp"

using namespace fingeo;

namespace {

using Poly = std::vector<unsigned>; // c_0..c_d over GF(p)

// Schoolbook product of two encoded elements reduced by the monic modulus.
Elem slow_mul(const Field& F, Elem a, Elem b) {
    const unsigned p = F.characteristic(), m = F.degree();
    const auto x = F.digits(a), y = F.digits(b);
    Poly prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    const auto& mod = F.modulus();
    for (unsigned k = 2 * m - 1; k >= m; --k) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
    prod.resize(m);
    return F.from_digits(prod);
}

// Remainder of a modulo the monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        a.pop_back();
    }
    return a;
}

bool irreducible_by_trial_division(const Poly& f, unsigned p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i, c /= p) g[i] = static_cast<unsigned>(c % p);
            g[d] = 1;
            const Poly r = poly_mod(f, g, p);
            bool zero = true;
            for (unsigned v : r) zero = zero && v == 0;
            if (zero) return false;
        }
    }
    return true;
}

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                                                  {3, 3}, {5, 1}, {5, 2}, {7, 1}, {2, 6}, {13, 1}};

} // namespace

TEST_CASE("field_make examples") {
    const auto F2 = Field::make(2, 1);
    CHECK(F2->order() == 2);
    CHECK(F2->modulus() == std::vector<unsigned>{0, 1});

    const auto F4 = Field::make(2, 2);
    CHECK(F4->order() == 4);
    Elem g = F4->generator();
    CHECK(F4->mul(g, g) != 1);
    CHECK(F4->pow(g, 3) == 1);

    const auto F16 = Field::make(2, 4);
    for (Elem x = 1; x < 16; ++x) CHECK(F16->pow(x, 15) == 1);
}

TEST_CASE("field_make rejects bad input") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 13), std::invalid_argument); // 3^13 > 2^20
    CHECK_THROWS_AS(Field::of_order(12), std::invalid_argument);
}

TEST_CASE("fields are interned and deterministic") {
    CHECK(Field::make(3, 2).get() == Field::make(3, 2).get());
    CHECK(Field::of_order(9).get() == Field::make(3, 2).get());
    CHECK(Field::make(2, 4)->spec() == Field::make(2, 4)->spec());
}

TEST_CASE("defining polynomials are monic and irreducible") {
    for (auto [p, m] : kSmallFields) {
        const auto F = Field::make(p, m);
        CAPTURE(F->name());
        REQUIRE(F->modulus().size() == m + 1);
        CHECK(F->modulus().back() == 1);
        CHECK(irreducible_by_trial_division(F->modulus(), p));
    }
}

TEST_CASE("table multiplication equals polynomial multiplication") {
    for (auto [p, m] : kSmallFields) {
        const auto F = Field::make(p, m);
        CAPTURE(F->name());
        for (Elem a = 0; a < F->order(); ++a)
            for (Elem b = 0; b < F->order(); ++b) REQUIRE(F->mul(a, b) == slow_mul(*F, a, b));
    }
}

TEST_CASE("addition is digitwise mod p") {
    for (auto [p, m] : kSmallFields) {
        const auto F = Field::make(p, m);
        for (Elem a = 0; a < F->order(); ++a)
            for (Elem b = 0; b < F->order(); ++b) {
                auto x = F->digits(a);
                const auto y = F->digits(b);
                for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
                REQUIRE(F->add(a, b) == F->from_digits(x));
                REQUIRE(F->sub(F->add(a, b), b) == a);
            }
    }
}

TEST_CASE("field axioms") {
    std::mt19937_64 rng(1);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 8}, {3, 5}, {2, 12}, {5, 3}, {31, 2}}) {
        const auto F = Field::make(p, m);
        CAPTURE(F->name());
        for (Elem a = 1; a < F->order(); ++a) REQUIRE(F->mul(a, F->inv(a)) == 1);
        CHECK_THROWS_AS(F->inv(0), std::domain_error);
        std::set<Elem> powers;
        for (std::uint64_t e = 0; e + 1 < F->order(); ++e) powers.insert(F->exp(e));
        CHECK(powers.size() == F->order() - 1); // the generator has full order
        for (int trial = 0; trial < 2000; ++trial) {
            const Elem a = rng() % F->order(), b = rng() % F->order(), c = rng() % F->order();
            REQUIRE(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
            REQUIRE(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
            REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            REQUIRE(F->add(a, F->neg(a)) == 0);
        }
    }
}

TEST_CASE("field elements refuse to mix fields") {
    const auto F4 = Field::make(2, 2), F8 = Field::make(2, 3);
    const FieldElement a(F4, 2), b(F8, 2), c(F4, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK((a * c).value() == F4->mul(2, 3));
    CHECK((a / a).value() == 1);
    CHECK_THROWS_AS(FieldElement(F4, 4), std::invalid_argument);
}

TEST_CASE("tower examples") {
    const auto T24 = Tower::make(Field::make(2, 1), 2);
    CHECK(T24->coordinates(1) == std::vector<Elem>{1, 0});

    const auto T28 = Tower::make(Field::make(2, 1), 3);
    std::set<Elem> fixed;
    for (Elem z = 0; z < 8; ++z)
        if (T28->frobenius(z) == z) fixed.insert(z);
    CHECK(fixed == std::set<Elem>{0, 1});

    const auto T416 = Tower::make(Field::make(2, 2), 2);
    std::set<Elem> fixed16, embedded;
    for (Elem z = 0; z < 16; ++z)
        if (T416->frobenius(z) == z) fixed16.insert(z);
    for (Elem a = 0; a < 4; ++a) embedded.insert(T416->embed(a));
    CHECK(fixed16 == embedded);
}

TEST_CASE("tower maps") {
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {4, 3}, {9, 2}, {2, 5}}) {
        const auto T = Tower::of_order(q, n);
        const Field& B = T->base();
        const Field& E = T->ext();
        CAPTURE(q);
        CAPTURE(n);
        // embed is a field homomorphism and restrict inverts it
        for (Elem a = 0; a < B.order(); ++a) {
            CHECK(T->restrict_to_base(T->embed(a)) == a);
            for (Elem b = 0; b < B.order(); ++b) {
                CHECK(T->embed(B.add(a, b)) == E.add(T->embed(a), T->embed(b)));
                CHECK(T->embed(B.mul(a, b)) == E.mul(T->embed(a), T->embed(b)));
            }
        }
        // coordinates: bijective and F_q-linear; frobenius F_q-linear
        std::set<std::vector<Elem>> seen;
        for (Elem z = 0; z < E.order(); ++z) {
            const auto c = T->coordinates(z);
            seen.insert(c);
            CHECK(T->from_coordinates(c) == z);
            for (Elem lambda = 0; lambda < B.order(); ++lambda) {
                const Elem lz = E.mul(T->embed(lambda), z);
                auto expect = c;
                for (auto& v : expect) v = B.mul(lambda, v);
                CHECK(T->coordinates(lz) == expect);
                CHECK(T->frobenius(lz) == E.mul(T->embed(lambda), T->frobenius(z)));
            }
        }
        CHECK(seen.size() == E.order());
        for (Elem x = 0; x < std::min<Elem>(E.order(), 64); ++x)
            for (Elem y = 0; y < E.order(); ++y) CHECK(T->frobenius(E.add(x, y)) == E.add(T->frobenius(x), T->frobenius(y)));
        std::size_t in_base = 0;
        for (Elem z = 0; z < E.order(); ++z) in_base += T->in_base(z);
        CHECK(in_base == B.order());
        CHECK_THROWS_AS(T->restrict_to_base(T->basis().size() > 1 ? T->basis()[1] : 0), std::domain_error);
    }
}

TEST_CASE("flatten") {
    const auto T = Tower::of_order(2, 2);
    CHECK(T->flatten(std::vector<Elem>{0, 0, 0}) == std::vector<Elem>(6, 0));
    const Elem alpha = T->basis()[1];
    CHECK(T->flatten(std::vector<Elem>{alpha}) == std::vector<Elem>{0, 1});

    std::mt19937_64 rng(7);
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
        const auto U = Tower::of_order(q, n);
        const Field& E = U->ext();
        for (int s = 0; s < 1000; ++s) {
            std::vector<Elem> v(1 + rng() % 4), w;
            for (auto& e : v) e = rng() % E.order();
            w = v;
            for (auto& e : w) e = rng() % E.order();
            const auto fv = U->flatten(v);
            REQUIRE(U->unflatten(fv) == v);
            std::vector<Elem> sum(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) sum[i] = E.add(v[i], w[i]);
            const auto fw = U->flatten(w), fs = U->flatten(sum);
            for (std::size_t i = 0; i < fs.size(); ++i) REQUIRE(fs[i] == U->base().add(fv[i], fw[i]));
        }
    }
}

TEST_CASE("ipow and prime_power") {
    CHECK(ipow(3, 4) == 81);
    CHECK_THROWS_AS(ipow(2, 64), std::overflow_error);
    CHECK(prime_power(64) == std::pair<unsigned, unsigned>{2, 6});
    CHECK(prime_power(49) == std::pair<unsigned, unsigned>{7, 2});
    CHECK_THROWS_AS(prime_power(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_power(10), std::invalid_argument);
}
