#include "fingeo/linset.hpp"

#include <algorithm>

#include "fingeo/parallel.hpp"

namespace fingeo {

namespace {

Matrix flattened_rows(const Tower& T, const std::vector<std::vector<Elem>>& vectors, std::size_t width) {
    Matrix m(0, width * T.n());
    for (const auto& v : vectors) m.append_row(T.flatten(v));
    return m;
}

void append_scalar_multiples(const Tower& T, std::span<const Elem> w, Matrix& m) {
    const Field& E = T.ext();
    std::vector<Elem> scaled(w.size());
    for (Elem lambda : T.basis()) {
        for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = E.mul(lambda, w[i]);
        m.append_row(T.flatten(scaled));
    }
}

} // namespace

mpz_class mpz_pow(std::uint64_t base, unsigned long exp) {
    mpz_class b(static_cast<unsigned long>(base)), out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

mpz_class qnum(long k, std::uint64_t q) {
    if (k < 0) throw std::invalid_argument("[k]_q with negative k");
    return space_size(static_cast<unsigned>(k), q);
}

// ---------------------------------------------------------------------------

LinearSet::LinearSet(TowerPtr tower, unsigned r, std::vector<std::vector<Elem>> basis)
    : tower_(std::move(tower)), r_(r), basis_(std::move(basis)),
      ambient_((r == 0 ? throw std::invalid_argument("ambient rank r must be >= 1") : tower_->ext_ptr()), r - 1),
      cache_(std::make_shared<Cache>()) {
    for (const auto& b : basis_) {
        if (b.size() != r_) throw std::invalid_argument("basis vector has length != r");
    }
    if (basis_.size() > static_cast<std::size_t>(r_) * tower_->n()) {
        throw std::invalid_argument("more basis vectors than dim_{F_q} of the ambient");
    }
    if (fingeo::rank(tower_->base(), flattened_rows(*tower_, basis_, r_)) != basis_.size()) {
        throw std::invalid_argument("basis of U is not F_q-linearly independent");
    }
}

void for_each_vector(const LinearSet& L, const std::function<void(std::span<const Elem>)>& fn) {
    const Tower& T = L.tower();
    const Field& E = T.ext();
    const unsigned k = L.rank();
    const std::uint64_t total = ipow(T.q(), k);
    if (total > (std::uint64_t{1} << 24)) throw GuardExceeded("linear set has too many vectors to enumerate");
    std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(L.r(), 0));
    std::vector<Elem> digit(k, 0);
    // odometer over GF(q)^k, partial[i+1] = partial[i] + digit[i] * b_i
    auto refresh = [&](unsigned from) {
        for (unsigned i = from; i < k; ++i) {
            const Elem s = T.embed(digit[i]);
            for (unsigned j = 0; j < L.r(); ++j) {
                partial[i + 1][j] = E.add(partial[i][j], E.mul(s, L.basis()[i][j]));
            }
        }
    };
    refresh(0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        unsigned pos = k;
        while (pos-- > 0) {
            if (++digit[pos] < T.q()) break;
            digit[pos] = 0;
        }
        refresh(pos);
        fn(partial[k]);
    }
}

const std::vector<WeightedPoint>& LinearSet::points() const {
    std::call_once(cache_->once, [this] {
        std::vector<std::uint64_t> codes;
        codes.reserve(ipow(tower_->q(), rank()));
        for_each_vector(*this, [&](std::span<const Elem> v) { codes.push_back(ambient_.code_of(v)); });
        std::sort(codes.begin(), codes.end());
        std::vector<WeightedPoint> pts;
        for (std::size_t i = 0; i < codes.size();) {
            std::size_t j = i;
            while (j < codes.size() && codes[j] == codes[i]) ++j;
            // (j - i) = q^w - 1
            std::uint64_t count = j - i + 1;
            unsigned w = 0;
            while (count > 1) {
                count /= tower_->q();
                ++w;
            }
            pts.push_back({codes[i], w});
            i = j;
        }
        cache_->points = std::move(pts);
    });
    return cache_->points;
}

unsigned LinearSet::weight_of(std::uint64_t code) const {
    const auto& pts = points();
    auto it = std::lower_bound(pts.begin(), pts.end(), code,
                               [](const WeightedPoint& p, std::uint64_t c) { return p.code < c; });
    return (it != pts.end() && it->code == code) ? it->weight : 0;
}

unsigned LinearSet::span_rank() const {
    return static_cast<unsigned>(fingeo::rank(tower_->ext(), Matrix::from_rows(basis_, r_)));
}

LinearSet LinearSet::extended(std::span<const Elem> v) const {
    auto b = basis_;
    b.emplace_back(v.begin(), v.end());
    return LinearSet(tower_, r_, std::move(b));
}

LinearSet LinearSet::padded(unsigned extra) const {
    auto b = basis_;
    for (auto& v : b) v.resize(r_ + extra, 0);
    return LinearSet(tower_, r_ + extra, std::move(b));
}

// ---------------------------------------------------------------------------

unsigned point_weight(std::span<const Elem> v, const LinearSet& L) {
    if (v.size() != L.r()) throw std::invalid_argument("ambient mismatch");
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) {
        throw std::invalid_argument("the zero vector is not a projective point");
    }
    const Tower& T = L.tower();
    Matrix m = flattened_rows(T, L.basis(), L.r());
    append_scalar_multiples(T, v, m);
    return L.rank() + T.n() - static_cast<unsigned>(rank(T.base(), std::move(m)));
}

unsigned subspace_weight(const Subspace& omega, const LinearSet& L) {
    if (omega.ambient_dim() + 1 != L.r() || omega.field().get() != L.tower().ext_ptr().get()) {
        throw std::invalid_argument("ambient mismatch");
    }
    if (omega.dim() < 0) return 0;
    const Tower& T = L.tower();
    Matrix m = flattened_rows(T, L.basis(), L.r());
    for (std::size_t i = 0; i < omega.basis().rows(); ++i) append_scalar_multiples(T, omega.basis().row(i), m);
    const auto w_dim = static_cast<unsigned>(omega.rank() * T.n());
    return L.rank() + w_dim - static_cast<unsigned>(rank(T.base(), std::move(m)));
}

unsigned hyperplane_weight(std::span<const Elem> dual, const LinearSet& L) {
    if (dual.size() != L.r()) throw std::invalid_argument("ambient mismatch");
    const Tower& T = L.tower();
    Matrix m(L.rank(), T.n());
    for (unsigned i = 0; i < L.rank(); ++i) T.coordinates(dot(T.ext(), dual, L.basis()[i]), m.row(i));
    return L.rank() - static_cast<unsigned>(rank(T.base(), std::move(m)));
}

std::vector<std::uint64_t> weight_spectrum(const LinearSet& L) {
    std::vector<std::uint64_t> N(L.rank() + 1, 0);
    for (const auto& p : L.points()) ++N[p.weight];
    N[0] = L.ambient().num_points() - L.size();
    return N;
}

bool contains_subspace(const Subspace& omega, const LinearSet& L) {
    for (auto code : L.ambient().points_of(omega)) {
        if (L.weight_of(code) == 0) return false;
    }
    return true;
}

bool is_h_scattered(const LinearSet& L, unsigned h) {
    if (h < 1 || h + 1 > L.r()) throw std::invalid_argument("h must satisfy 1 <= h <= r - 1");
    if (L.span_rank() != L.r()) return false;
    bool ok = true;
    L.ambient().for_each_subspace(static_cast<int>(h) - 1, [&](const Subspace& s) {
        if (ok && subspace_weight(s, L) > h) ok = false;
    });
    return ok;
}

bool is_properly_maximum(const LinearSet& L, unsigned h) {
    const unsigned rn = L.r() * L.tower().n();
    if (rn % (h + 1) != 0 || L.rank() != rn / (h + 1)) return false;
    return is_h_scattered(L, h);
}

// ---------------------------------------------------------------------------

std::map<unsigned, std::uint64_t> HyperplaneProfile::by_weight() const {
    std::map<unsigned, std::uint64_t> out;
    for (const auto& [key, count] : joint) out[key.first] += count;
    return out;
}

std::map<std::uint64_t, std::uint64_t> HyperplaneProfile::by_size() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [key, count] : joint) out[key.second] += count;
    return out;
}

std::uint64_t HyperplaneProfile::total() const {
    std::uint64_t t = 0;
    for (const auto& [key, count] : joint) t += count;
    return t;
}

HyperplaneProfile hyperplane_profile(const LinearSet& L) {
    const auto duals = L.ambient().hyperplane_duals();
    std::vector<Point> pts;
    pts.reserve(L.size());
    for (const auto& p : L.points()) pts.push_back(L.ambient().decode(p.code));
    const Field& E = L.tower().ext();
    using Joint = std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>;
    HyperplaneProfile prof;
    prof.joint = parallel_reduce(
        duals.size(), Joint{},
        [&](std::size_t begin, std::size_t end, Joint& acc) {
            for (std::size_t i = begin; i < end; ++i) {
                std::uint64_t meets = 0;
                for (const auto& p : pts) meets += dot(E, duals[i], p) == 0;
                ++acc[{hyperplane_weight(duals[i], L), meets}];
            }
        },
        [](Joint& total, const Joint& part) {
            for (const auto& [k, v] : part) total[k] += v;
        });
    return prof;
}

std::vector<mpz_class> predicted_t(std::uint64_t q, unsigned n, unsigned r, unsigned h) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    if ((static_cast<std::uint64_t>(r) * n) % (h + 1) != 0) throw std::invalid_argument("(h+1) must divide rn");
    const unsigned long rank = static_cast<unsigned long>(r) * n / (h + 1);
    const mpz_class denom = mpz_pow(q, n) - 1;
    std::vector<mpz_class> t(h + 1);
    for (unsigned i = 0; i <= h; ++i) {
        if (i > n) continue; // [n choose i]_q = 0
        mpz_class sum = 0;
        for (unsigned j = 0; j + i <= h; ++j) {
            const unsigned long choose2 = static_cast<unsigned long>(j) * (j == 0 ? 0 : j - 1) / 2;
            mpz_class term = gaussian_binomial(n - i, j, q) * mpz_pow(q, choose2) *
                             (mpz_pow(q, rank * (h - i - j + 1)) - 1);
            if (j % 2) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        mpz_class num = gaussian_binomial(n, i, q) * sum;
        if (num % denom != 0) throw std::logic_error("t_i closed form is not an integer");
        t[i] = num / denom;
    }
    return t;
}

} // namespace fingeo
