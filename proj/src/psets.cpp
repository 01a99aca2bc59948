#include "fingeo/psets.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fingeo/linset.hpp"
#include "fingeo/parallel.hpp"

namespace fingeo {

bool Report::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

bool Report::any_fail() const {
    return std::any_of(items.begin(), items.end(), [](const CheckItem& c) { return !c.pass && !c.skipped; });
}

bool Report::any_skipped() const {
    return std::any_of(items.begin(), items.end(), [](const CheckItem& c) { return c.skipped; });
}

CheckItem& Report::add(std::string name, bool pass, std::string detail) {
    items.push_back({std::move(name), pass, false, std::move(detail), std::nullopt});
    return items.back();
}

CheckItem& Report::skip(std::string name, std::string detail) {
    items.push_back({std::move(name), false, true, std::move(detail), std::nullopt});
    return items.back();
}

std::uint64_t IntersectionProfile::total() const {
    std::uint64_t t = 0;
    for (const auto& [s, c] : counts) t += c;
    return t;
}

bool IntersectionProfile::is_type_subset(const std::vector<std::uint64_t>& sizes) const {
    return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) {
        return std::find(sizes.begin(), sizes.end(), kv.first) != sizes.end();
    });
}

bool IntersectionProfile::is_type_exact(const std::vector<std::uint64_t>& sizes) const {
    return is_type_subset(sizes) &&
           std::all_of(sizes.begin(), sizes.end(), [&](std::uint64_t s) { return counts.contains(s); });
}

std::vector<std::pair<Subspace, std::uint64_t>> census(const PointSet& S, int k) {
    std::vector<Subspace> spaces = S.space().subspaces(k);
    std::vector<std::uint64_t> sizes(spaces.size());
    parallel_reduce(
        spaces.size(), 0,
        [&](std::size_t begin, std::size_t end, int&) {
            for (std::size_t i = begin; i < end; ++i) sizes[i] = S.count_in(spaces[i]);
        },
        [](int&, int) {});
    std::vector<std::pair<Subspace, std::uint64_t>> out;
    out.reserve(spaces.size());
    for (std::size_t i = 0; i < spaces.size(); ++i) out.emplace_back(std::move(spaces[i]), sizes[i]);
    return out;
}

IntersectionProfile profile(const PointSet& S, int k) {
    IntersectionProfile p;
    p.k = k;
    for (const auto& [s, size] : census(S, k)) ++p.counts[size];
    return p;
}

EvenSetCheck is_even_set(const PointSet& S) {
    EvenSetCheck out;
    const unsigned N = S.space().dim();
    const std::uint64_t Q = S.space().order();
    const auto prof = profile(S, 1);
    out.even = std::all_of(prof.counts.begin(), prof.counts.end(), [](const auto& kv) { return kv.first % 2 == 0; });
    out.bound = N >= 2 ? mpz_pow(Q, N - 1) + 2 * mpz_pow(Q, N - 2) : mpz_class(0);
    if (out.even && !S.empty() && Q % 2 == 0 && N >= 2) {
        out.bound_holds = mpz_class(static_cast<unsigned long>(S.size())) >= out.bound;
    }
    return out;
}

std::optional<KmArc> recognize_km_arc(const PointSet& S) {
    if (S.space().dim() != 2) return std::nullopt;
    const std::uint64_t q = S.space().order();
    if (S.size() <= q) return std::nullopt;
    const std::uint64_t t = S.size() - q;
    if (t > q) return std::nullopt; // no line holds more than q+1 points; t = q+1 would be the plane minus a point
    const auto prof = profile(S, 1);
    std::vector<std::uint64_t> type{0, 2, t};
    std::sort(type.begin(), type.end());
    type.erase(std::unique(type.begin(), type.end()), type.end());
    if (!prof.is_type_exact(type)) return std::nullopt;
    KmArc arc{t, true};
    if (t > 1 && t < q) arc.divisibility_holds = q % t == 0 && q % 2 == 0;
    return arc;
}

bool is_hyperoval(const PointSet& S) {
    const auto arc = recognize_km_arc(S);
    return arc && arc->t == 2;
}

// ---------------------------------------------------------------------------

namespace {

// Unit vectors on the non-pivot columns: a complement of A.
Subspace complement_of(const Subspace& A) {
    const unsigned cols = A.ambient_dim() + 1;
    Matrix m(0, cols);
    std::vector<Elem> e(cols, 0);
    for (unsigned j = 0; j < cols; ++j) {
        if (std::find(A.pivots().begin(), A.pivots().end(), j) != A.pivots().end()) continue;
        e[j] = 1;
        m.append_row(e);
        e[j] = 0;
    }
    return Subspace(A.field(), A.ambient_dim(), std::move(m));
}

std::optional<HypercylinderMatch> recognize_solid(const PointSet& S) {
    const ProjectiveSpace& P = S.space();
    const std::uint64_t Q = P.order();
    if (Q == 2) {
        const PointSet C = S.complement();
        const Subspace H = P.span_of(C.points());
        if (H.dim() != 2 || C.size() != 7) return std::nullopt;
        Matrix row(0, 4);
        row.append_row(H.basis().row(0));
        const Subspace V(P.field_ptr(), 3, std::move(row));
        return match_hypercylinder(S, V, complement_of(V));
    }
    const auto lines = census(S, 1);
    IntersectionProfile lp;
    for (const auto& [l, s] : lines) ++lp.counts[s];
    if (!lp.is_type_exact({0, 2, Q})) return std::nullopt;
    const Subspace* secant = nullptr;
    for (const auto& [l, s] : lines) {
        if (s == Q) {
            secant = &l;
            break;
        }
    }
    std::optional<Point> vertex;
    for (auto code : P.points_of(*secant)) {
        if (!S.contains(code)) vertex = P.decode(code);
    }
    for (const auto& [l, s] : lines) {
        if (s == Q && !l.contains(*vertex)) return std::nullopt;
    }
    const Subspace V = P.point(*vertex);
    return match_hypercylinder(S, V, complement_of(V));
}

} // namespace

std::optional<HypercylinderMatch> match_hypercylinder(const PointSet& S, const Subspace& vertex, const Subspace& plane) {
    const ProjectiveSpace& P = S.space();
    const unsigned N = P.dim();
    const std::uint64_t Q = P.order();
    if (vertex.dim() != static_cast<int>(N) - 3 || plane.dim() != 2 || meet(vertex, plane).dim() != -1) {
        return std::nullopt;
    }
    if (mpz_class(static_cast<unsigned long>(S.size())) != (Q + 2) * mpz_pow(Q, N - 2)) return std::nullopt;
    ProjectiveSpace sigma(P.field_ptr(), 2);
    std::set<std::uint64_t> image;
    for (const auto& v : S.points()) {
        if (vertex.contains(v)) return std::nullopt;
        const Subspace x = meet(span(vertex, P.point(v)), plane);
        if (x.dim() != 0) return std::nullopt;
        image.insert(sigma.code_of(plane.coordinates_of(x.basis().row(0))));
        if (image.size() > Q + 2) return std::nullopt;
    }
    PointSet basis(sigma, {image.begin(), image.end()});
    if (!is_hyperoval(basis)) return std::nullopt;
    return HypercylinderMatch{vertex, plane, std::move(basis)};
}

std::optional<HypercylinderMatch> recognize_hypercylinder(const PointSet& S) {
    const ProjectiveSpace& P = S.space();
    const unsigned N = P.dim();
    const std::uint64_t Q = P.order();
    if (Q % 2 != 0) throw HypothesisViolation("hypercylinder recognition needs Q even");
    if (N < 3) throw HypothesisViolation("hypercylinder recognition needs N >= 3");
    if (mpz_class(static_cast<unsigned long>(S.size())) != mpz_pow(Q, N - 1) + 2 * mpz_pow(Q, N - 2)) {
        throw HypothesisViolation("|S| differs from Q^{N-1} + 2Q^{N-2}");
    }
    if (N == 3) return recognize_solid(S);
    if (Q == 2) {
        // every hypercylinder of PG(N,2) is the complement of a hyperplane;
        // any (N-3)-space of that hyperplane serves as vertex
        const PointSet C = S.complement();
        const Subspace H = P.span_of(C.points());
        if (H.dim() != static_cast<int>(N) - 1 || C.size() != to_u64(space_size(N, 2))) return std::nullopt;
        Matrix rows(0, N + 1);
        for (unsigned i = 0; i + 2 < N; ++i) rows.append_row(H.basis().row(i));
        const Subspace V(P.field_ptr(), N, std::move(rows));
        return match_hypercylinder(S, V, complement_of(V));
    }
    // a (Q+2)-secant plane, then one vertex per solid through it
    std::optional<Subspace> pi;
    P.for_each_subspace(2, [&](const Subspace& s) {
        if (!pi && S.count_in(s) == Q + 2) pi = s;
    });
    if (!pi) return std::nullopt;
    std::vector<Point> vertices;
    for (const auto& solid : P.subspaces_through(*pi, 3)) {
        const PointSet local = restrict_to(S, solid);
        if (mpz_class(static_cast<unsigned long>(local.size())) != mpz_pow(Q, 2) + 2 * Q) return std::nullopt;
        const auto m = recognize_solid(local);
        if (!m) return std::nullopt;
        vertices.push_back(P.normalized(solid.combine(m->vertex.basis().row(0))));
    }
    const Subspace tau = P.span_of(vertices);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (tau.dim() != static_cast<int>(N) - 3 || mpz_class(static_cast<unsigned long>(vertices.size())) != space_size(N - 2, Q)) {
        return std::nullopt;
    }
    return match_hypercylinder(S, tau, *pi);
}

// ---------------------------------------------------------------------------

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

using SizeTable = std::map<Subspace, std::uint64_t>;

SizeTable table_of(const std::vector<std::pair<Subspace, std::uint64_t>>& c) {
    SizeTable t;
    for (const auto& [s, n] : c) t.emplace(s, n);
    return t;
}

void fail_with(CheckItem& item, const Subspace& witness, std::string why) {
    item.pass = false;
    item.witness = witness.basis();
    item.detail = std::move(why);
}

} // namespace

Report verify_plane_km_theorem(const PointSet& S, std::uint64_t t) {
    const ProjectiveSpace& P = S.space();
    const std::uint64_t q = P.order();
    if (P.dim() != 3) throw HypothesisViolation("ambient must be PG(3,q)");
    if (t <= 2 || t > q + 1) throw HypothesisViolation("need 2 < t <= q+1");
    if (S.size() != q * q + q + t) throw HypothesisViolation("|S| != q^2+q+t");
    const auto planes = census(S, 2);
    for (const auto& [pl, s] : planes) {
        if (s != 0 && s != q + 2 && s != q + t) throw HypothesisViolation("plane type not within {0, q+2, q+t}");
    }
    const auto lines = census(S, 1);
    const SizeTable plane_size = table_of(planes);

    Report rep;
    rep.theorem = "plane-km";
    rep.params = {{"q", str(q)}, {"t", str(t)}, {"size", str(S.size())}};

    {
        auto& it = rep.add("(i) no tangent lines", true);
        for (const auto& [l, s] : lines) {
            if (s == 1) {
                fail_with(it, l, "tangent line");
                break;
            }
        }
    }
    {
        // per point: number of 2-secant and t-secant lines through it
        std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> per_point;
        for (auto c : S.codes()) per_point[c];
        for (const auto& [l, s] : lines) {
            if (s != 2 && s != t) continue;
            for (auto c : S.intersection(l)) (s == 2 ? per_point[c].first : per_point[c].second) += 1;
        }
        auto& it = rep.add("(ii) q^2+q 2-secants and one t-secant per point", true);
        for (const auto& [c, cnt] : per_point) {
            if (cnt.first != q * q + q || cnt.second != 1) {
                fail_with(it, P.point(P.decode(c)),
                          "point lies on " + str(cnt.first) + " 2-secants and " + str(cnt.second) + " t-secants");
                break;
            }
        }
    }
    {
        auto& it = rep.add("(iii) planes through a t-secant line are (q+t)-secant", true);
        for (const auto& [l, s] : lines) {
            if (s != t) continue;
            for (const auto& pl : P.subspaces_through(l, 2)) {
                if (plane_size.at(pl) != q + t) fail_with(it, pl, "plane through a t-secant line");
            }
            if (!it.pass) break;
        }
    }
    {
        auto& it = rep.add("(iv) one (q+t)-plane and q (q+2)-planes through each 2-secant line", true);
        for (const auto& [l, s] : lines) {
            if (s != 2) continue;
            std::uint64_t big = 0, small = 0;
            for (const auto& pl : P.subspaces_through(l, 2)) {
                const auto n = plane_size.at(pl);
                big += n == q + t;
                small += n == q + 2;
            }
            if (big != 1 || small != q) {
                fail_with(it, l, str(big) + " (q+t)-planes and " + str(small) + " (q+2)-planes");
                break;
            }
        }
    }
    {
        auto& it = rep.add("(v) (q+2)-planes meet S in a hyperoval", true);
        for (const auto& [pl, s] : planes) {
            if (s == q + 2 && !is_hyperoval(restrict_to(S, pl))) {
                fail_with(it, pl, "not a hyperoval");
                break;
            }
        }
    }
    rep.add("(vi) q is a power of 2", is_power_of_two(q));
    {
        IntersectionProfile lp;
        for (const auto& [l, s] : lines) ++lp.counts[s];
        rep.add("(vii) line type (0,2,t)", lp.is_type_exact({0, 2, t}));
    }
    {
        auto& it = rep.add("(viii) (q+t)-planes meet S in a KM-arc of type t", true);
        for (const auto& [pl, s] : planes) {
            if (s != q + t) continue;
            const auto arc = recognize_km_arc(restrict_to(S, pl));
            if (!arc || arc->t != t) {
                fail_with(it, pl, "not a KM-arc of type t");
                break;
            }
        }
    }
    rep.add("(ix) t is a power of 2 not exceeding q", is_power_of_two(t) && t <= q);
    return rep;
}

Report verify_space_theorem(const PointSet& S, std::uint64_t t) {
    const ProjectiveSpace& P = S.space();
    const unsigned r = P.dim();
    const std::uint64_t q = P.order();
    if (r < 4) throw HypothesisViolation("need r >= 4");
    if (q <= 2) throw HypothesisViolation("need q > 2");
    auto qp = [&](long e) -> mpz_class { return e < 0 ? mpz_class(0) : mpz_pow(q, static_cast<unsigned long>(e)); };
    // q^{k-1} + 2q^{k-2}, the size of a hypercylinder of PG(k, q)
    auto hc = [&](long k) -> mpz_class { return qp(k - 1) + 2 * qp(k - 2); };
    const mpz_class T(static_cast<unsigned long>(t));
    if (mpz_class(static_cast<unsigned long>(S.size())) != qp(r - 1) + qp(r - 2) + T) {
        throw HypothesisViolation("|S| != q^{r-1}+q^{r-2}+t");
    }
    if (!(2 * qp(r - 3) < T && T <= qp(r - 2) + q - 1)) throw HypothesisViolation("t out of range");
    const auto hyper = census(S, static_cast<int>(r) - 1);
    for (const auto& [h, s] : hyper) {
        const mpz_class z(static_cast<unsigned long>(s));
        if (s != 0 && z != hc(r - 1) && z != qp(r - 2) + T) {
            throw HypothesisViolation("hyperplane type not within {0, q^{r-2}+2q^{r-3}, q^{r-2}+t}");
        }
    }

    Report rep;
    rep.theorem = "space-km";
    rep.params = {{"q", str(q)}, {"r", str(r)}, {"t", str(t)}, {"size", str(S.size())}};

    // census of every k-space, 1 <= k <= r-1, when within guards
    std::map<unsigned, std::vector<std::pair<Subspace, std::uint64_t>>> by_dim;
    by_dim[r - 1] = hyper;
    for (unsigned k = 1; k + 1 < r; ++k) {
        try {
            by_dim[k] = census(S, static_cast<int>(k));
        } catch (const GuardExceeded&) {
        }
    }
    auto have = [&](unsigned k) { return by_dim.contains(k); };
    auto sz = [](std::uint64_t s) -> mpz_class { return mpz_class(static_cast<unsigned long>(s)); };

    {
        bool skipped = false;
        std::optional<std::pair<Subspace, std::string>> bad;
        for (unsigned k = 2; k < r && !bad; ++k) {
            if (!have(k)) {
                skipped = true;
                continue;
            }
            for (const auto& [s, n] : by_dim[k]) {
                if (n != 0 && sz(n) < hc(k)) {
                    bad = {s, std::to_string(k) + "-space with " + str(n) + " points"};
                    break;
                }
            }
        }
        const std::string name = "(i) secant k-spaces hold >= q^{k-1}+2q^{k-2} points";
        if (bad) {
            fail_with(rep.add(name, false), bad->first, bad->second);
        } else if (skipped) {
            rep.skip(name, "some k-space enumeration exceeds the guard");
        } else {
            rep.add(name, true);
        }
    }
    if (have(1)) {
        auto& it = rep.add("(ii) no tangent lines", true);
        for (const auto& [l, s] : by_dim[1]) {
            if (s == 1) {
                fail_with(it, l, "tangent line");
                break;
            }
        }
    } else {
        rep.skip("(ii) no tangent lines", "line enumeration exceeds the guard");
    }
    {
        bool ok = true, skipped = false;
        std::string detail;
        for (unsigned k = 2; k < r; ++k) {
            if (!have(k)) {
                skipped = true;
                continue;
            }
            const bool found = std::any_of(by_dim[k].begin(), by_dim[k].end(),
                                           [&](const auto& e) { return sz(e.second) == hc(k); });
            if (!found) {
                ok = false;
                detail = "no " + str(hc(k)) + "-secant " + std::to_string(k) + "-space";
            }
        }
        if (have(1)) {
            if (std::none_of(by_dim[1].begin(), by_dim[1].end(), [](const auto& e) { return e.second == 2; })) {
                ok = false;
                detail = "no 2-secant line";
            }
        } else {
            skipped = true;
        }
        const std::string name = "(iii) hypercylinder-sized k-spaces and a 2-secant line exist";
        if (!ok) {
            rep.add(name, false, detail);
        } else if (skipped) {
            rep.skip(name, "some enumeration exceeds the guard");
        } else {
            rep.add(name, true);
        }
    }
    if (have(2)) {
        auto& it = rep.add("(iv) (q+2)-planes meet S in a hyperoval", true);
        for (const auto& [pl, s] : by_dim[2]) {
            if (s == q + 2 && !is_hyperoval(restrict_to(S, pl))) {
                fail_with(it, pl, "not a hyperoval");
                break;
            }
        }
    } else {
        rep.skip("(iv) (q+2)-planes meet S in a hyperoval", "plane enumeration exceeds the guard");
    }
    rep.add("(v) q is even", q % 2 == 0);

    // every (k+1)-space through a hc(k)-secant k-space is hc(k+1)-secant
    auto through_check = [&](unsigned k, CheckItem& it) {
        const SizeTable upper = k + 1 == r ? SizeTable{{P.full(), S.size()}} : table_of(by_dim[k + 1]);
        for (const auto& [s, n] : by_dim[k]) {
            if (sz(n) != hc(k)) continue;
            for (const auto& up : P.subspaces_through(s, static_cast<int>(k) + 1)) {
                if (sz(upper.at(up)) != hc(k + 1)) {
                    fail_with(it, up, "contains a " + str(hc(k)) + "-secant " + std::to_string(k) + "-space but holds " +
                                          str(upper.at(up)) + " points");
                    return;
                }
            }
        }
    };
    {
        const std::string name = "(vi) hyperplanes through a hc(r-2)-secant (r-2)-space are hc(r-1)-secant";
        if (have(r - 2)) {
            through_check(r - 2, rep.add(name, true));
        } else {
            rep.skip(name, "(r-2)-space enumeration exceeds the guard");
        }
    }
    rep.add("(vii) t = q^{r-2}", T == qp(r - 2), "t = " + str(t));
    for (unsigned i = 1; i + 2 <= r; ++i) {
        const unsigned k = r - i;
        const std::string name = "(viii) i=" + std::to_string(i) + ": (r-i+1)-spaces through a hc(r-i)-secant (r-i)-space";
        if (have(k) && (k + 1 == r || have(k + 1))) {
            through_check(k, rep.add(name, true));
        } else {
            rep.skip(name, "enumeration exceeds the guard");
        }
    }
    for (unsigned i = 1; i + 2 <= r; ++i) {
        const unsigned k = r - i;
        const std::string name = "sizes of (r-i)-spaces, i=" + std::to_string(i);
        if (!have(k)) {
            rep.skip(name, "enumeration exceeds the guard");
            continue;
        }
        std::set<mpz_class> allowed{0};
        for (long c = -static_cast<long>(q); c <= 1; ++c) {
            allowed.insert(2 * qp(k - 1) + c * (-qp(k - 1) + 2 * qp(k - 2)));
        }
        auto& it = rep.add(name, true);
        for (const auto& [s, n] : by_dim[k]) {
            if (!allowed.contains(sz(n))) {
                fail_with(it, s, str(n) + " points");
                break;
            }
        }
    }
    if (have(1)) {
        IntersectionProfile lp;
        for (const auto& [l, s] : by_dim[1]) ++lp.counts[s];
        rep.add("line type (0,2,q)", lp.is_type_exact({0, 2, q}));
    } else {
        rep.skip("line type (0,2,q)", "line enumeration exceeds the guard");
    }
    return rep;
}

PointSet perturb_one_point(const PointSet& S, std::uint64_t seed) {
    const auto& P = S.space();
    const std::uint64_t total = P.num_points();
    if (S.empty() || S.size() == total) throw std::invalid_argument("no one-point swap exists");
    std::mt19937_64 rng(seed);
    const std::uint64_t out = S.codes()[rng() % S.size()];
    const PointSet rest = S.complement();
    const std::uint64_t in = rest.codes()[rng() % rest.size()];
    std::vector<std::uint64_t> codes = S.without({out}).codes();
    codes.push_back(in);
    return PointSet(P, std::move(codes));
}

bool is_arc(const PointSet& S) {
    const Field& F = S.space().field();
    const auto pts = S.points();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                Matrix m(0, S.space().coords());
                m.append_row(pts[a]);
                m.append_row(pts[b]);
                m.append_row(pts[c]);
                if (rank(F, std::move(m)) < 3) return false;
            }
    return true;
}

bool on_conic(const PointSet& S) {
    if (S.space().dim() != 2) throw std::invalid_argument("conics live in PG(2,q)");
    const Field& F = S.space().field();
    Matrix m(0, 6);
    for (const auto& v : S.points()) {
        const Elem x = v[0], y = v[1], z = v[2];
        const Elem row[6] = {F.mul(x, x), F.mul(y, y), F.mul(z, z), F.mul(x, y), F.mul(x, z), F.mul(y, z)};
        m.append_row(row);
    }
    return rank(F, std::move(m)) < 6;
}

OvalSweep oval_conic_sweep(std::uint64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("ovals are swept for odd q");
    const ProjectiveSpace P(Field::of_order(q), 2);
    const std::vector<std::uint64_t> codes = P.point_codes();
    const std::size_t m = codes.size();
    std::vector<Point> pts;
    for (auto c : codes) pts.push_back(P.decode(c));
    auto index_of = [&](std::uint64_t c) {
        return static_cast<std::size_t>(std::lower_bound(codes.begin(), codes.end(), c) - codes.begin());
    };
    std::vector<std::vector<std::vector<std::size_t>>> line(m, std::vector<std::vector<std::size_t>>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            for (auto c : P.points_of(P.span_of({pts[a], pts[b]}))) line[a][b].push_back(index_of(c));
            line[b][a] = line[a][b];
        }

    OvalSweep out;
    std::vector<std::size_t> arc;
    std::vector<unsigned> blocked(m, 0);
    const std::size_t target = q + 1;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        if (arc.size() == target) {
            ++out.ovals;
            std::vector<std::uint64_t> cs;
            for (auto i : arc) cs.push_back(codes[i]);
            if (on_conic(PointSet(P, std::move(cs)))) ++out.conics;
            return;
        }
        for (std::size_t c = from; c + (target - arc.size()) <= m; ++c) {
            if (blocked[c] > 0) continue;
            for (auto p : arc)
                for (auto x : line[p][c]) ++blocked[x];
            arc.push_back(c);
            self(self, c + 1);
            arc.pop_back();
            for (auto p : arc)
                for (auto x : line[p][c]) --blocked[x];
        }
    };
    dfs(dfs, 0);
    return out;
}

} // namespace fingeo
