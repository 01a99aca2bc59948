#include "fingeo/codes_hamming.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "fingeo/constructions.hpp"
#include "fingeo/parallel.hpp"

namespace fingeo {

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }

using Dist = std::vector<std::uint64_t>;

void add_into(Dist& total, const Dist& part) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
}

// Column i of G, or the normalized column code with its multiplicity.
struct Columns {
    std::vector<Point> reps;       // distinct normalized nonzero columns
    std::vector<std::uint64_t> mult;
    std::uint64_t zero = 0;
};

Columns group_columns(const HammingCode& C) {
    const ProjectiveSpace P(C.field_ptr(), static_cast<unsigned>(C.dimension() - 1));
    std::map<std::uint64_t, std::uint64_t> count;
    std::uint64_t zero = 0;
    Point col(C.dimension());
    for (std::size_t j = 0; j < C.length(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < C.dimension(); ++i) {
            col[i] = C.generator()(i, j);
            nonzero |= col[i] != 0;
        }
        if (nonzero) {
            ++count[P.code_of(col)];
        } else {
            ++zero;
        }
    }
    Columns out;
    out.zero = zero;
    for (const auto& [code, m] : count) {
        out.reps.push_back(P.decode(code));
        out.mult.push_back(m);
    }
    return out;
}

} // namespace

ProjectiveSystem::ProjectiveSystem(ProjectiveSpace space, std::vector<std::pair<std::uint64_t, std::uint64_t>> points)
    : space_(std::move(space)), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    Matrix m(0, space_.coords());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& [code, mult] = points_[i];
        if (mult == 0) throw std::invalid_argument("multiplicities must be positive");
        if (i > 0 && points_[i - 1].first == code) throw std::invalid_argument("repeated point in projective system");
        const Point v = space_.decode(code);
        if (code >= ipow(space_.order(), space_.coords()) || space_.encode(space_.normalized(v)) != code)
            throw std::invalid_argument("not a normalized point code");
        m.append_row(v);
        length_ += mult;
    }
    if (rank(space_.field(), m) != space_.coords()) throw std::invalid_argument("projective system does not span");
}

ProjectiveSystem ProjectiveSystem::from_set(const PointSet& S) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (auto c : S.codes()) pts.emplace_back(c, 1);
    return ProjectiveSystem(S.space(), std::move(pts));
}

HammingCode::HammingCode(FieldPtr field, Matrix generator) : field_(std::move(field)), g_(std::move(generator)) {
    if (g_.rows() == 0) throw std::invalid_argument("generator matrix has no rows");
    for (Elem e : g_.data())
        if (!field_->contains(e)) throw std::invalid_argument("entry outside the field");
    if (rank(*field_, g_) != g_.rows()) throw std::invalid_argument("generator rows are dependent");
}

bool HammingCode::is_nondegenerate() const {
    for (std::size_t j = 0; j < length(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < dimension(); ++i) nonzero |= g_(i, j) != 0;
        if (!nonzero) return false;
    }
    return true;
}

bool HammingCode::is_projective() const {
    const Columns cols = group_columns(*this);
    if (cols.zero > 0) return false;
    return std::all_of(cols.mult.begin(), cols.mult.end(), [](std::uint64_t m) { return m == 1; });
}

HammingCode code_from_system(const ProjectiveSystem& S) {
    const auto& P = S.space();
    Matrix G(P.coords(), S.length());
    std::size_t j = 0;
    for (const auto& [code, mult] : S.points()) {
        const Point v = P.decode(code);
        for (std::uint64_t c = 0; c < mult; ++c, ++j)
            for (std::size_t i = 0; i < v.size(); ++i) G(i, j) = v[i];
    }
    return HammingCode(P.field_ptr(), std::move(G));
}

ProjectiveSystem system_from_code(const HammingCode& C) {
    const Columns cols = group_columns(C);
    if (cols.zero > 0) throw std::invalid_argument("degenerate code: zero column");
    const ProjectiveSpace P(C.field_ptr(), static_cast<unsigned>(C.dimension() - 1));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::size_t i = 0; i < cols.reps.size(); ++i) pts.emplace_back(P.encode(cols.reps[i]), cols.mult[i]);
    return ProjectiveSystem(P, std::move(pts));
}

Dist weight_distribution_codewords(const HammingCode& C) {
    const Field& F = C.field();
    const std::uint64_t Q = F.order();
    const std::size_t k = C.dimension(), n = C.length();
    mpz_class count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<unsigned long>(Q);
    if (count > kMaxEnumeratedPoints)
        throw GuardExceeded("codeword enumeration: " + str(count) + " codewords exceeds 10^7");
    const std::uint64_t N = to_u64(count);
    const Matrix& G = C.generator();
    return parallel_reduce(
        static_cast<std::size_t>(N), Dist(n + 1, 0),
        [&](std::size_t begin, std::size_t end, Dist& acc) {
            std::vector<Elem> x(k), word(n);
            for (std::size_t idx = begin; idx < end; ++idx) {
                std::uint64_t rest = idx;
                for (std::size_t i = k; i-- > 0;) {
                    x[i] = static_cast<Elem>(rest % Q);
                    rest /= Q;
                }
                std::fill(word.begin(), word.end(), 0);
                for (std::size_t i = 0; i < k; ++i) {
                    if (x[i] == 0) continue;
                    const auto row = G.row(i);
                    for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(x[i], row[j]));
                }
                std::size_t w = 0;
                for (Elem e : word) w += e != 0;
                ++acc[w];
            }
        },
        add_into);
}

Dist weight_distribution_hyperplanes(const HammingCode& C) {
    const Field& F = C.field();
    const std::uint64_t Q = F.order();
    const std::size_t k = C.dimension(), n = C.length();
    const mpz_class hyperplanes = space_size(static_cast<unsigned>(k), Q);
    if (hyperplanes > kMaxEnumeratedSubspaces)
        throw GuardExceeded("hyperplane enumeration: " + str(hyperplanes) + " hyperplanes exceeds 10^6");
    const Columns cols = group_columns(C);
    const ProjectiveSpace P(C.field_ptr(), static_cast<unsigned>(k - 1));
    const std::vector<Point> duals = P.hyperplane_duals();
    Dist dist = parallel_reduce(
        duals.size(), Dist(n + 1, 0),
        [&](std::size_t begin, std::size_t end, Dist& acc) {
            for (std::size_t h = begin; h < end; ++h) {
                std::uint64_t on = cols.zero;
                for (std::size_t i = 0; i < cols.reps.size(); ++i)
                    if (dot(F, duals[h], cols.reps[i]) == 0) on += cols.mult[i];
                acc[n - on] += Q - 1;
            }
        },
        add_into);
    dist[0] += 1;
    return dist;
}

Dist weight_distribution(const HammingCode& C) { return weight_distribution_hyperplanes(C); }

std::size_t minimum_distance(const Dist& dist) {
    for (std::size_t i = 1; i < dist.size(); ++i)
        if (dist[i] > 0) return i;
    return 0;
}

std::vector<std::size_t> nonzero_weights(const Dist& dist) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < dist.size(); ++i)
        if (dist[i] > 0) out.push_back(i);
    return out;
}

HammingCode hypercylinder_code(std::uint64_t q, unsigned r) {
    return code_from_system(ProjectiveSystem::from_set(hypercylinder(q, r)));
}

StabilityVerdict stability_decide(const HammingCode& C, std::uint64_t q, unsigned r, std::uint64_t t) {
    const mpz_class Q = static_cast<unsigned long>(q);
    auto qp = [&](int e) -> mpz_class {
        mpz_class v = 1;
        for (int i = 0; i < e; ++i) v *= Q;
        return v;
    };
    const mpz_class T = static_cast<unsigned long>(t);
    if (C.field().order() != q) throw HypothesisViolation("code is not over GF(q)");
    if (q < 4) throw HypothesisViolation("need q >= 4");
    if (r < 3) throw HypothesisViolation("need r >= 3");
    if (!(2 * qp(static_cast<int>(r) - 3) < T && T <= qp(static_cast<int>(r) - 2) + Q - 1))
        throw HypothesisViolation("need 2q^{r-3} < t <= q^{r-2}+q-1");
    if (C.dimension() != r + 1) throw HypothesisViolation("dimension differs from r+1");
    const mpz_class len = qp(static_cast<int>(r) - 1) + qp(static_cast<int>(r) - 2) + T;
    if (mpz_class(static_cast<unsigned long>(C.length())) != len)
        throw HypothesisViolation("length differs from q^{r-1}+q^{r-2}+t");
    if (!C.is_projective()) throw HypothesisViolation("code is not projective");
    const mpz_class w1 = qp(static_cast<int>(r) - 1);
    const mpz_class w2 = w1 + T - 2 * qp(static_cast<int>(r) - 3);
    const mpz_class w3 = w1 + qp(static_cast<int>(r) - 2) + T;
    for (std::size_t w : nonzero_weights(weight_distribution(C))) {
        const mpz_class W = static_cast<unsigned long>(w);
        if (W != w1 && W != w2 && W != w3)
            throw HypothesisViolation("weight " + std::to_string(w) + " outside {" + str(w1) + ", " + str(w2) + ", " +
                                      str(w3) + "}");
    }

    StabilityVerdict v;
    v.t = t;
    v.t_resolved = qp(static_cast<int>(r) - 2);
    v.t_is_resolved = T == v.t_resolved;
    v.note = "the printed conclusion reads t = 2q^{r-2}; the hypercylinder code has length q^{r-1}+2q^{r-2}, "
             "so the conclusion is checked with t = q^{r-2}";

    const PointSet S = [&] {
        const ProjectiveSystem sys = system_from_code(C);
        std::vector<std::uint64_t> codes;
        for (const auto& [code, mult] : sys.points()) codes.push_back(code);
        return PointSet(sys.space(), std::move(codes));
    }();
    if (r == 3) {
        if (t <= q + 1) {
            v.geometry = verify_plane_km_theorem(S, t);
        } else {
            v.geometry.theorem = "plane-km";
            v.geometry.skip("hypotheses", "t > q+1 lies outside the plane theorem's range");
        }
    } else {
        v.geometry = verify_space_theorem(S, t);
    }
    if (v.t_is_resolved) {
        v.match = recognize_hypercylinder(S);
        v.hypercylinder = v.match.has_value();
    }
    return v;
}

Report equivalence_invariants(const HammingCode& C1, const HammingCode& C2) {
    Report rep;
    rep.theorem = "equivalence-invariants";
    const bool same_field = &C1.field() == &C2.field();
    rep.add("field", same_field, C1.field().name() + " vs " + C2.field().name());
    rep.add("length", C1.length() == C2.length(), std::to_string(C1.length()) + " vs " + std::to_string(C2.length()));
    rep.add("dimension", C1.dimension() == C2.dimension(),
            std::to_string(C1.dimension()) + " vs " + std::to_string(C2.dimension()));
    if (same_field && C1.length() == C2.length()) {
        rep.add("weight distribution", weight_distribution(C1) == weight_distribution(C2));
    } else {
        rep.add("weight distribution", false, "not comparable");
    }
    return rep;
}

namespace {

using Mat3 = std::array<std::array<Elem, 3>, 3>;

// The projectivity sending e0, e1, e2, e0+e1+e2 to the four points (as
// columns), or nullopt when they are not in general position.
std::optional<Mat3> frame_matrix(const Field& F, const std::array<Point, 4>& p) {
    Matrix m(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = p[j][i];
    const auto piv = row_reduce(F, m);
    if (piv.size() != 3 || piv[2] != 2) return std::nullopt;
    Mat3 A{};
    for (int j = 0; j < 3; ++j) {
        const Elem lambda = m(j, 3);
        if (lambda == 0) return std::nullopt;
        for (int i = 0; i < 3; ++i) A[i][j] = F.mul(lambda, p[j][i]);
    }
    return A;
}

std::optional<Mat3> inverse(const Field& F, const Mat3& A) {
    Matrix m(3, 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = A[i][j];
        m(i, 3 + i) = 1;
    }
    const auto piv = row_reduce(F, m);
    if (piv.size() != 3 || piv[2] != 2) return std::nullopt;
    Mat3 B{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) B[i][j] = m(i, 3 + j);
    return B;
}

Mat3 product(const Field& F, const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = 0;
            for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(A[i][k], B[k][j]));
            C[i][j] = s;
        }
    return C;
}

bool maps_onto(const ProjectiveSpace& P, const Mat3& A, const std::vector<Point>& src, const PointSet& dst) {
    const Field& F = P.field();
    Point w(3);
    for (const auto& v : src) {
        for (int i = 0; i < 3; ++i) {
            Elem s = 0;
            for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(A[i][k], v[k]));
            w[i] = s;
        }
        if (!dst.contains_vector(w)) return false;
    }
    return true;
}

template <class Fn>
void for_each_ordered_frame(const Field& F, const std::vector<Point>& pts, Fn fn) {
    const std::size_t m = pts.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a) continue;
            for (std::size_t c = 0; c < m; ++c) {
                if (c == a || c == b) continue;
                for (std::size_t d = 0; d < m; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (auto A = frame_matrix(F, {pts[a], pts[b], pts[c], pts[d]})) {
                        if (fn(*A)) return;
                    }
                }
            }
        }
}

} // namespace

bool hyperoval_pgl_equivalent(const PointSet& H1, const PointSet& H2) {
    const ProjectiveSpace& P = H1.space();
    if (!(P == H2.space()) || P.dim() != 2) throw std::invalid_argument("both sets must lie in the same PG(2,q)");
    if (P.order() > 8) throw std::invalid_argument("PGL(3,q) equivalence is limited to q <= 8");
    if (H1.size() != H2.size()) return false;
    if (H1.empty()) return true;
    const Field& F = P.field();
    const std::vector<Point> src = H1.points();

    // An ordered frame inside H1; every projectivity H1 -> H2 sends it to an
    // ordered frame inside H2, and a frame determines the projectivity.
    std::optional<Mat3> src_frame;
    for_each_ordered_frame(F, src, [&](const Mat3& A) {
        src_frame = A;
        return true;
    });
    bool found = false;
    if (src_frame) {
        const Mat3 inv = *inverse(F, *src_frame);
        for_each_ordered_frame(F, H2.points(), [&](const Mat3& B) {
            found = maps_onto(P, product(F, B, inv), src, H2);
            return found;
        });
        return found;
    }
    const mpz_class order = mpz_class(static_cast<unsigned long>(P.num_points())) *
                            (P.num_points() - 1) * (P.num_points() - P.order() - 1) *
                            (P.order() - 1) * (P.order() - 1);
    if (order > kMaxEnumeratedPoints)
        throw GuardExceeded("PGL(3," + std::to_string(P.order()) + ") sweep exceeds 10^7 elements");
    std::vector<Point> all;
    P.for_each_point([&](std::span<const Elem> v) { all.emplace_back(v.begin(), v.end()); });
    for_each_ordered_frame(F, all, [&](const Mat3& B) {
        found = maps_onto(P, B, src, H2);
        return found;
    });
    return found;
}

} // namespace fingeo
