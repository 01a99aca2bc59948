#include "fingeo/constructions.hpp"

#include <algorithm>

#include "fingeo/parallel.hpp"

namespace fingeo {

namespace {

mpz_class qn_num(long k, std::uint64_t q, unsigned n) {
    if (k <= 0) return 0; // [r-d]_{q^n} with r = d
    return qnum(k, ipow(q, n));
}

// q^{e} for a possibly negative exponent that is only used when e >= 0
mpz_class qpow(std::uint64_t q, long e) {
    if (e < 0) throw std::logic_error("negative exponent");
    return mpz_pow(q, static_cast<unsigned long>(e));
}

bool is_zero(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

} // namespace

LinearSet moore_blocks(const TowerPtr& tower, unsigned r, unsigned h) {
    if (r % (h + 1) != 0) throw std::invalid_argument("(h+1) must divide r");
    if (tower->n() < h + 1) throw std::invalid_argument("need n >= h+1");
    const Field& E = tower->ext();
    std::vector<std::vector<Elem>> basis;
    for (unsigned block = 0; block < r / (h + 1); ++block) {
        for (Elem w : tower->basis()) {
            std::vector<Elem> v(r, 0);
            Elem x = w;
            for (unsigned j = 0; j <= h; ++j) {
                v[block * (h + 1) + j] = x;
                x = E.pow(x, tower->q());
            }
            basis.push_back(std::move(v));
        }
    }
    return LinearSet(tower, r, std::move(basis));
}

LinearSet moore_h_scattered(std::uint64_t q, unsigned n, unsigned r, unsigned h) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    LinearSet L = moore_blocks(Tower::of_order(q, n), r, h);
    if (h + 1 > r || !is_properly_maximum(L, h)) {
        throw VerificationFailure("Moore block subspace is not properly maximum h-scattered");
    }
    return L;
}

// ---------------------------------------------------------------------------

ConeSpec cone(const LinearSet& base, unsigned r, unsigned h) {
    const unsigned d = base.r();
    if (d > r) throw std::invalid_argument("base lives in more than r coordinates");
    if (h < 1 || h + 1 > d || !is_properly_maximum(base, h)) {
        throw std::invalid_argument("cone base is not properly maximum h-scattered");
    }
    const Tower& T = base.tower();
    std::vector<std::vector<Elem>> basis = base.padded(r - d).basis();
    for (unsigned j = d; j < r; ++j) {
        for (Elem lambda : T.basis()) {
            std::vector<Elem> v(r, 0);
            v[j] = lambda;
            basis.push_back(std::move(v));
        }
    }
    Matrix s2(r - d, r);
    for (unsigned j = d; j < r; ++j) s2(j - d, j) = 1;
    return ConeSpec{base, r, d, h, LinearSet(base.tower_ptr(), r, std::move(basis)),
                    Subspace(T.ext_ptr(), r - 1, std::move(s2))};
}

mpz_class cone_size(const ConeSpec& c) {
    return mpz_pow(c.q(), c.n() * (c.r - c.d)) * qnum(c.D(), c.q()) + qn_num(c.r - c.d, c.q(), c.n());
}

bool ConeProfileCheck::ok(bool require_all_realized) const {
    if (unexpected != 0 || off_vertex.mismatches != 0) return false;
    for (const auto& [i, cs] : through_vertex) {
        if (cs.mismatches != 0) return false;
    }
    if (!require_all_realized) return true;
    for (const auto& [i, cs] : through_vertex) {
        if (cs.hyperplanes == 0) return false;
    }
    return true;
}

ConeProfileCheck check_cone_profile(const ConeSpec& c) {
    const LinearSet& U = c.cone;
    const unsigned n = c.n();
    const std::uint64_t q = c.q();
    const auto duals = U.ambient().hyperplane_duals();
    std::vector<Point> pts;
    for (const auto& p : U.points()) pts.push_back(U.ambient().decode(p.code));
    const Field& E = U.tower().ext();

    ConeProfileCheck out;
    for (unsigned i = 0; i <= c.h; ++i) out.through_vertex[i];
    const unsigned off_weight = n * (c.r - c.d) + c.D() - n; // n(r-d-1) + D, r > d only
    const mpz_class off_size = c.r > c.d ? mpz_pow(q, n * (c.r - c.d - 1)) * qnum(c.D(), q) +
                                               qn_num(static_cast<long>(c.r) - c.d - 1, q, n)
                                         : mpz_class(0);
    for (const auto& a : duals) {
        std::uint64_t size = 0;
        for (const auto& p : pts) size += dot(E, a, p) == 0;
        const unsigned w = hyperplane_weight(a, U);
        const bool through = is_zero(std::span<const Elem>(a).subspan(c.d));
        if (through) {
            const long i = static_cast<long>(w) - static_cast<long>(n * (c.r - c.d)) - c.gamma(0);
            if (i < 0 || i > static_cast<long>(c.h)) {
                ++out.unexpected;
                continue;
            }
            auto& cs = out.through_vertex[static_cast<unsigned>(i)];
            ++cs.hyperplanes;
            const mpz_class expect =
                mpz_pow(q, n * (c.r - c.d)) * qnum(c.gamma(i), q) + qn_num(c.r - c.d, q, n);
            if (expect != size) ++cs.mismatches;
        } else {
            ++out.off_vertex.hyperplanes;
            if (w != off_weight || off_size != size) ++out.off_vertex.mismatches;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

AffineExtension extend(const ConeSpec& c, ExtensionKind kind) {
    LinearSet at_inf = c.cone.padded(1);
    Point y(c.r + 1, 0);
    y[c.r] = 1;
    LinearSet ext = at_inf.extended(y);
    const ProjectiveSpace& space = ext.ambient();
    std::vector<std::uint64_t> codes;
    if (kind == ExtensionKind::One) {
        for (const auto& p : ext.points()) codes.push_back(p.code);
    } else {
        for (const auto& p : ext.points()) {
            if (space.decode(p.code)[c.r] != 0) codes.push_back(p.code);
        }
        std::vector<std::uint64_t> inf;
        for (const auto& p : at_inf.points()) inf.push_back(p.code);
        space.for_each_point([&](std::span<const Elem> v) {
            if (v[c.r] != 0) return;
            const auto code = space.encode(v);
            if (!std::binary_search(inf.begin(), inf.end(), code)) codes.push_back(code);
        });
    }
    PointSet pts(space, std::move(codes));
    return AffineExtension{c, kind, std::move(at_inf), std::move(ext), std::move(y), std::move(pts)};
}

} // namespace

AffineExtension construction_one(const ConeSpec& c) { return extend(c, ExtensionKind::One); }
AffineExtension construction_two(const ConeSpec& c) { return extend(c, ExtensionKind::Two); }

mpz_class construction_one_size(const ConeSpec& c) {
    return mpz_pow(c.q(), c.n() * (c.r - c.d)) * qnum(c.D() + 1, c.q()) + qn_num(c.r - c.d, c.q(), c.n());
}

mpz_class construction_two_size(const ConeSpec& c) {
    return mpz_pow(c.q(), c.n() * (c.r - c.d)) *
           (qn_num(c.d, c.q(), c.n()) - qnum(c.D(), c.q()) + mpz_pow(c.q(), c.D()));
}

std::string family_name(const FamilyKey& k) {
    switch (k.family) {
    case Family::AtInfinity: return "a";
    case Family::OffEmpty: return "b";
    case Family::OffMeeting: return "c";
    case Family::ThroughEmpty: return "d" + std::to_string(k.i);
    case Family::ThroughMeeting: return "e" + std::to_string(k.i);
    }
    return "?";
}

bool ExtensionAnalysis::sizes_match() const {
    for (const auto& [key, st] : realized) {
        auto it = predicted_size.find(key);
        if (it == predicted_size.end() || st.sizes.size() != 1 || mpz_class(static_cast<unsigned long>(*st.sizes.begin())) != it->second) {
            return false;
        }
    }
    return true;
}

bool ExtensionAnalysis::weights_match() const {
    for (const auto& [key, st] : realized) {
        auto it = predicted_weight.find(key);
        if (it == predicted_weight.end() || st.weights != std::set<unsigned>{it->second}) return false;
    }
    return true;
}

bool ExtensionAnalysis::listed_realized() const {
    return std::all_of(listed.begin(), listed.end(), [&](const FamilyKey& k) { return realized.contains(k); });
}

bool ExtensionAnalysis::excluded_absent() const {
    return std::none_of(excluded.begin(), excluded.end(), [&](const FamilyKey& k) { return realized.contains(k); });
}

std::set<mpz_class> ExtensionAnalysis::predicted_type() const {
    std::set<mpz_class> out;
    for (const auto& k : listed) out.insert(predicted_size.at(k));
    return out;
}

ExtensionAnalysis analyze_extension(const AffineExtension& ext) {
    const ConeSpec& c = ext.cone;
    const unsigned n = c.n(), r = c.r, d = c.d, D = c.D();
    const std::uint64_t q = c.q();
    const mpz_class Qrd = mpz_pow(q, n * (r - d));
    const bool one = ext.kind == ExtensionKind::One;

    ExtensionAnalysis out;
    // sizes for B and for K; K shares B's affine part
    auto predict = [&](FamilyKey k, const mpz_class& size_b, const mpz_class& size_k, unsigned weight) {
        out.predicted_size[k] = one ? size_b : size_k;
        out.predicted_weight[k] = weight;
    };
    predict({Family::AtInfinity},
            Qrd * qnum(D, q) + qn_num(r - d, q, n), Qrd * (qn_num(d, q, n) - qnum(D, q)),
            n * (r - d) + D);
    if (r > d) {
        const mpz_class Qrd1 = mpz_pow(q, n * (r - d - 1));
        const long rd1 = static_cast<long>(r) - d - 1;
        predict({Family::OffEmpty},
                Qrd1 * qnum(D, q) + qn_num(rd1, q, n), Qrd1 * (qn_num(d, q, n) - qnum(D, q)),
                n * (r - d - 1) + D);
        predict({Family::OffMeeting},
                Qrd1 * qnum(D + 1, q) + qn_num(rd1, q, n),
                Qrd1 * (qn_num(d, q, n) - qnum(D, q) + mpz_pow(q, D)),
                n * (r - d - 1) + D + 1);
    }
    for (unsigned i = 0; i <= c.h; ++i) {
        const long g = c.gamma(i);
        const auto wi = static_cast<unsigned>(static_cast<long>(n * (r - d)) + g);
        predict({Family::ThroughEmpty, static_cast<int>(i)},
                Qrd * qnum(g, q) + qn_num(r - d, q, n), Qrd * (qn_num(d - 1, q, n) - qnum(g, q)), wi);
        predict({Family::ThroughMeeting, static_cast<int>(i)},
                Qrd * (qnum(g, q) + qpow(q, g)) + qn_num(r - d, q, n),
                Qrd * (qn_num(d - 1, q, n) - qnum(g, q) + qpow(q, g)),
                wi + 1);
    }

    out.listed.push_back({Family::AtInfinity});
    if (r > d) out.listed.push_back({Family::OffMeeting});
    for (unsigned i = 1; i <= c.h; ++i) out.listed.push_back({Family::ThroughEmpty, static_cast<int>(i)});
    for (unsigned i = 0; i <= c.h; ++i) out.listed.push_back({Family::ThroughMeeting, static_cast<int>(i)});
    if (r > d) out.excluded.push_back({Family::OffEmpty});
    out.excluded.push_back({Family::ThroughEmpty, 0});

    const ProjectiveSpace& space = ext.extended.ambient();
    const Field& E = space.field();
    const std::vector<Point> pts = ext.points.points();
    std::vector<Point> affine_b;
    for (const auto& p : ext.extended.points()) {
        Point v = space.decode(p.code);
        if (v[r] != 0) affine_b.push_back(std::move(v));
    }
    const auto duals = space.hyperplane_duals();

    struct Acc {
        std::map<FamilyKey, FamilyStats> realized;
        std::map<std::uint64_t, std::uint64_t> sizes;
    };
    Acc acc = parallel_reduce(
        duals.size(), Acc{},
        [&](std::size_t begin, std::size_t end, Acc& a) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                const Point& dual = duals[idx];
                std::uint64_t size = 0;
                for (const auto& p : pts) size += dot(E, dual, p) == 0;
                const std::span<const Elem> tau(dual.data(), r);
                FamilyKey key{Family::AtInfinity};
                if (!is_zero(tau)) {
                    std::uint64_t aff = 0;
                    for (const auto& p : affine_b) aff += dot(E, dual, p) == 0;
                    if (is_zero(tau.subspan(d))) {
                        const long w = hyperplane_weight(tau, c.cone);
                        key = {aff ? Family::ThroughMeeting : Family::ThroughEmpty,
                               static_cast<int>(w - static_cast<long>(n * (r - d)) - c.gamma(0))};
                    } else {
                        key = {aff ? Family::OffMeeting : Family::OffEmpty};
                    }
                }
                auto& st = a.realized[key];
                ++st.hyperplanes;
                st.sizes.insert(size);
                st.weights.insert(hyperplane_weight(dual, ext.extended));
                ++a.sizes[size];
            }
        },
        [](Acc& total, const Acc& part) {
            for (const auto& [k, st] : part.realized) {
                auto& t = total.realized[k];
                t.hyperplanes += st.hyperplanes;
                t.sizes.insert(st.sizes.begin(), st.sizes.end());
                t.weights.insert(st.weights.begin(), st.weights.end());
            }
            for (const auto& [s, cnt] : part.sizes) total.sizes[s] += cnt;
        });
    out.realized = std::move(acc.realized);
    out.size_histogram = std::move(acc.sizes);
    return out;
}

// ---------------------------------------------------------------------------

PointSet hyperoval_conic_nucleus(std::uint64_t q) {
    auto F = Field::of_order(q);
    if (F->characteristic() != 2) throw std::invalid_argument("hyperovals need q even");
    std::vector<Point> pts;
    for (Elem t = 0; t < q; ++t) pts.push_back({1, t, F->mul(t, t)});
    pts.push_back({0, 0, 1});
    pts.push_back({0, 1, 0});
    return PointSet::from_vectors(ProjectiveSpace(F, 2), pts);
}

namespace {

// every vector of GF(Q)^len, in odometer order
template <class Fn>
void for_each_tail(std::uint64_t Q, unsigned len, Fn fn) {
    std::vector<Elem> v(len, 0);
    const std::uint64_t total = ipow(Q, len);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        fn(std::span<const Elem>(v));
        for (unsigned pos = len; pos-- > 0;) {
            if (++v[pos] < Q) break;
            v[pos] = 0;
        }
    }
}

} // namespace

PointSet cone_point_set(const PointSet& base, unsigned r) {
    const unsigned d = base.space().dim() + 1;
    if (r < d) throw std::invalid_argument("cone ambient smaller than the base");
    ProjectiveSpace space(base.space().field_ptr(), r - 1);
    const std::uint64_t Q = space.order();
    std::vector<std::uint64_t> codes;
    Point v(r, 0);
    for (const auto& b : base.points()) {
        std::copy(b.begin(), b.end(), v.begin());
        for_each_tail(Q, r - d, [&](std::span<const Elem> tail) {
            std::copy(tail.begin(), tail.end(), v.begin() + d);
            codes.push_back(space.encode(v));
        });
    }
    std::fill(v.begin(), v.begin() + d, 0);
    for_each_tail(Q, r - d, [&](std::span<const Elem> tail) {
        std::copy(tail.begin(), tail.end(), v.begin() + d);
        if (!is_zero(v)) codes.push_back(space.code_of(v));
    });
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return PointSet(std::move(space), std::move(codes));
}

PointSet hypercylinder(unsigned r, const PointSet& hyperoval) {
    if (r < 3) throw std::invalid_argument("hypercylinders need r >= 3");
    if (hyperoval.space().dim() != 2) throw std::invalid_argument("basis must be a plane point set");
    const std::uint64_t q = hyperoval.space().order();
    if (q % 2 != 0 || hyperoval.size() != q + 2) throw std::invalid_argument("basis is not a hyperoval");
    const PointSet full = cone_point_set(hyperoval, r + 1);
    const auto vertex = full.space().points_of(hypercylinder_vertex(hyperoval.space().field_ptr(), r));
    return full.without(vertex);
}

PointSet hypercylinder(std::uint64_t q, unsigned r) { return hypercylinder(r, hyperoval_conic_nucleus(q)); }

Subspace hypercylinder_vertex(const FieldPtr& F, unsigned r) {
    Matrix m(r - 2, r + 1);
    for (unsigned j = 3; j <= r; ++j) m(j - 3, j) = 1;
    return Subspace(F, r, std::move(m));
}

std::uint64_t cone_split_violations(const PointSet& base, const PointSet& cone_set) {
    const unsigned d = base.space().dim() + 1;
    const unsigned r = cone_set.space().dim() + 1;
    const Field& F = cone_set.space().field();
    const std::uint64_t Q = cone_set.space().order();
    const auto base_pts = base.points();
    const auto pts = cone_set.points();
    std::uint64_t bad = 0;
    for (const auto& a : cone_set.space().hyperplane_duals()) {
        std::uint64_t size = 0;
        for (const auto& p : pts) size += dot(F, a, p) == 0;
        mpz_class expect;
        const std::span<const Elem> head(a.data(), d);
        if (is_zero(std::span<const Elem>(a).subspan(d))) {
            std::uint64_t m = 0;
            for (const auto& b : base_pts) m += dot(F, head, b) == 0;
            expect = qn_num(r - d, Q, 1) + mpz_class(static_cast<unsigned long>(m)) * mpz_pow(Q, r - d);
        } else {
            expect = qn_num(static_cast<long>(r) - d - 1, Q, 1) +
                     mpz_class(static_cast<unsigned long>(base.size())) * mpz_pow(Q, r - d - 1);
        }
        bad += expect != size;
    }
    return bad;
}

} // namespace fingeo
