#include "fingeo/pg.hpp"

#include <algorithm>

namespace fingeo {

mpz_class space_size(unsigned k, std::uint64_t Q) {
    mpz_class q(static_cast<unsigned long>(Q));
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), q.get_mpz_t(), k);
    return (num - 1) / (q - 1);
}

mpz_class gaussian_binomial(unsigned a, unsigned b, std::uint64_t Q) {
    if (b > a) return 0;
    mpz_class q(static_cast<unsigned long>(Q));
    mpz_class num = 1, den = 1, t;
    for (unsigned i = 0; i < b; ++i) {
        mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), a - i);
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), i + 1);
        den *= t - 1;
    }
    return num / den;
}

std::uint64_t to_u64(const mpz_class& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw std::overflow_error("integer exceeds 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

namespace {

// Calls fn for every (nrows x ncols) reduced row echelon matrix of full rank.
void enumerate_rref(const Field& F, std::size_t ncols, std::size_t nrows, const std::function<void(const Matrix&)>& fn) {
    if (nrows == 0) {
        fn(Matrix(0, ncols));
        return;
    }
    if (nrows > ncols) return;
    const Elem Q = F.order();
    std::vector<std::size_t> piv(nrows);
    for (std::size_t i = 0; i < nrows; ++i) piv[i] = i;
    Matrix m(nrows, ncols);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<Elem> counter;
    while (true) {
        std::vector<bool> is_piv(ncols, false);
        for (auto c : piv) is_piv[c] = true;
        free.clear();
        for (std::size_t i = 0; i < nrows; ++i) {
            for (std::size_t j = piv[i] + 1; j < ncols; ++j) {
                if (!is_piv[j]) free.emplace_back(i, j);
            }
        }
        m = Matrix(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i) m(i, piv[i]) = 1;
        counter.assign(free.size(), 0);
        while (true) {
            fn(m);
            bool carry = true;
            for (std::size_t pos = free.size(); carry && pos-- > 0;) {
                auto [i, j] = free[pos];
                if (++counter[pos] < Q) {
                    m(i, j) = counter[pos];
                    carry = false;
                } else {
                    counter[pos] = 0;
                    m(i, j) = 0;
                }
            }
            if (carry) break;
        }
        // next combination of pivot columns
        std::size_t i = nrows;
        while (i > 0 && piv[i - 1] == ncols - nrows + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t k = i; k < nrows; ++k) piv[k] = piv[k - 1] + 1;
    }
}

void check_guard(const mpz_class& count, std::uint64_t limit, const char* what) {
    if (count > mpz_class(static_cast<unsigned long>(limit))) {
        throw GuardExceeded(std::string(what) + ": " + count.get_str() + " items exceed the limit of " +
                            std::to_string(limit));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FieldPtr field, unsigned ambient_dim, Matrix rows)
    : field_(std::move(field)), ambient_dim_(ambient_dim), basis_(std::move(rows)) {
    if (basis_.cols() != ambient_dim_ + 1) throw std::invalid_argument("subspace basis has wrong width");
    pivots_ = row_reduce(*field_, basis_);
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (v.size() != ambient_dim_ + 1) throw std::invalid_argument("ambient mismatch");
    const Field& F = *field_;
    std::vector<Elem> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Elem c = r[pivots_[i]];
        if (c == 0) continue;
        const Elem f = F.neg(c);
        auto row = basis_.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (row[j] != 0) r[j] = F.add(r[j], F.mul(f, row[j]));
        }
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_ || other.field_.get() != field_.get()) {
        throw std::invalid_argument("ambient mismatch");
    }
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

std::vector<Elem> Subspace::coordinates_of(std::span<const Elem> v) const {
    std::vector<Elem> c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::vector<Elem> Subspace::combine(std::span<const Elem> coords) const {
    if (coords.size() != basis_.rows()) throw std::invalid_argument("coordinate count mismatch");
    const Field& F = *field_;
    std::vector<Elem> v(ambient_dim_ + 1, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        auto row = basis_.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (row[j] != 0) v[j] = F.add(v[j], F.mul(coords[i], row[j]));
        }
    }
    return v;
}

bool Subspace::operator<(const Subspace& o) const {
    if (basis_.rows() != o.basis_.rows()) return basis_.rows() < o.basis_.rows();
    return basis_.data() < o.basis_.data();
}

// ---------------------------------------------------------------------------
// ProjectiveSpace

ProjectiveSpace::ProjectiveSpace(FieldPtr field, unsigned dim) : field_(std::move(field)), dim_(dim) {
    if (!field_) throw std::invalid_argument("null field");
    place_.resize(dim_ + 1);
    std::uint64_t p = 1;
    for (unsigned i = dim_ + 1; i-- > 0;) {
        place_[i] = p;
        if (i > 0) {
            if (p > (std::uint64_t{1} << 62) / field_->order()) throw GuardExceeded("projective space too large to index");
            p *= field_->order();
        }
    }
}

std::uint64_t ProjectiveSpace::num_points() const { return to_u64(space_size(dim_ + 1, order())); }

std::uint64_t ProjectiveSpace::encode(std::span<const Elem> v) const {
    if (v.size() != coords()) throw std::invalid_argument("ambient mismatch");
    std::uint64_t c = 0;
    for (unsigned i = 0; i <= dim_; ++i) c += v[i] * place_[i];
    return c;
}

Point ProjectiveSpace::decode(std::uint64_t code) const {
    Point v(coords());
    for (unsigned i = 0; i <= dim_; ++i) {
        v[i] = static_cast<Elem>(code / place_[i]);
        code %= place_[i];
    }
    return v;
}

Point ProjectiveSpace::normalized(std::span<const Elem> v) const {
    if (v.size() != coords()) throw std::invalid_argument("ambient mismatch");
    Point w(v.begin(), v.end());
    if (!normalize(*field_, w)) throw std::invalid_argument("the zero vector is not a projective point");
    return w;
}

std::uint64_t ProjectiveSpace::code_of(std::span<const Elem> v) const { return encode(normalized(v)); }

void ProjectiveSpace::for_each_point(const std::function<void(std::span<const Elem>)>& fn) const {
    check_guard(space_size(dim_ + 1, order()), kMaxEnumeratedPoints, "point enumeration");
    const Elem Q = field_->order();
    Point v(coords());
    for (unsigned lead = dim_ + 1; lead-- > 0;) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            fn(v);
            bool carry = true;
            for (unsigned pos = dim_ + 1; carry && pos-- > lead + 1;) {
                if (++v[pos] < Q) {
                    carry = false;
                } else {
                    v[pos] = 0;
                }
            }
            if (carry) break;
        }
    }
}

std::vector<std::uint64_t> ProjectiveSpace::point_codes() const {
    std::vector<std::uint64_t> out;
    out.reserve(num_points());
    for_each_point([&](std::span<const Elem> v) { out.push_back(encode(v)); });
    return out;
}

std::vector<Point> ProjectiveSpace::hyperplane_duals() const {
    std::vector<Point> out;
    for_each_point([&](std::span<const Elem> v) { out.emplace_back(v.begin(), v.end()); });
    return out;
}

Subspace ProjectiveSpace::hyperplane(std::span<const Elem> dual) const {
    Matrix a(0, coords());
    a.append_row(dual);
    if (rank(*field_, a) != 1) throw std::invalid_argument("zero dual vector");
    return Subspace(field_, dim_, null_space(*field_, a));
}

std::vector<Subspace> ProjectiveSpace::hyperplanes() const {
    std::vector<Subspace> out;
    for (const auto& a : hyperplane_duals()) out.push_back(hyperplane(a));
    return out;
}

void ProjectiveSpace::for_each_subspace(int k, const std::function<void(const Subspace&)>& fn) const {
    if (k < -1 || k > static_cast<int>(dim_)) throw std::invalid_argument("subspace dimension out of range");
    check_guard(gaussian_binomial(dim_ + 1, static_cast<unsigned>(k + 1), order()), kMaxEnumeratedSubspaces,
                "subspace enumeration");
    enumerate_rref(*field_, coords(), static_cast<std::size_t>(k + 1),
                   [&](const Matrix& m) { fn(Subspace(field_, dim_, m)); });
}

std::vector<Subspace> ProjectiveSpace::subspaces(int k) const {
    std::vector<Subspace> out;
    for_each_subspace(k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<Subspace> ProjectiveSpace::subspaces_through(const Subspace& F, int k) const {
    check(F);
    const int f = F.dim();
    if (k < f || k > static_cast<int>(dim_)) throw std::invalid_argument("subspace dimension out of range");
    check_guard(gaussian_binomial(dim_ - f, static_cast<unsigned>(k - f), order()), kMaxEnumeratedSubspaces,
                "subspaces through a fixed subspace");
    std::vector<bool> is_piv(coords(), false);
    for (auto c : F.pivots()) is_piv[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < coords(); ++c) {
        if (!is_piv[c]) complement.push_back(c);
    }
    std::vector<Subspace> out;
    enumerate_rref(*field_, complement.size(), static_cast<std::size_t>(k - f), [&](const Matrix& m) {
        Matrix rows = F.basis();
        std::vector<Elem> v(coords());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t j = 0; j < complement.size(); ++j) v[complement[j]] = m(i, j);
            rows.append_row(v);
        }
        out.emplace_back(field_, dim_, std::move(rows));
    });
    return out;
}

Subspace ProjectiveSpace::full() const {
    Matrix id(coords(), coords());
    for (std::size_t i = 0; i < coords(); ++i) id(i, i) = 1;
    return Subspace(field_, dim_, std::move(id));
}

Subspace ProjectiveSpace::empty() const { return Subspace(field_, dim_, Matrix(0, coords())); }

Subspace ProjectiveSpace::point(std::span<const Elem> v) const {
    Matrix m(0, coords());
    m.append_row(v);
    Subspace s(field_, dim_, std::move(m));
    if (s.dim() != 0) throw std::invalid_argument("the zero vector is not a projective point");
    return s;
}

Subspace ProjectiveSpace::span_of(const std::vector<Point>& vectors) const {
    return Subspace(field_, dim_, Matrix::from_rows(vectors, coords()));
}

std::vector<std::uint64_t> ProjectiveSpace::points_of(const Subspace& A) const {
    check(A);
    std::vector<std::uint64_t> out;
    if (A.dim() < 0) return out;
    ProjectiveSpace coeffs(field_, static_cast<unsigned>(A.dim()));
    out.reserve(coeffs.num_points());
    coeffs.for_each_point([&](std::span<const Elem> c) { out.push_back(encode(A.combine(c))); });
    std::sort(out.begin(), out.end());
    return out;
}

void ProjectiveSpace::check(const Subspace& A) const {
    if (A.ambient_dim() != dim_ || A.field().get() != field_.get()) throw std::invalid_argument("ambient mismatch");
}

// ---------------------------------------------------------------------------

Subspace span(const Subspace& A, const Subspace& B) {
    if (A.ambient_dim() != B.ambient_dim() || A.field().get() != B.field().get()) {
        throw std::invalid_argument("ambient mismatch");
    }
    Matrix m = A.basis();
    for (std::size_t i = 0; i < B.basis().rows(); ++i) m.append_row(B.basis().row(i));
    return Subspace(A.field(), A.ambient_dim(), std::move(m));
}

Subspace annihilator(const Subspace& A) {
    if (A.dim() < 0) {
        Matrix id(A.ambient_dim() + 1, A.ambient_dim() + 1);
        for (std::size_t i = 0; i <= A.ambient_dim(); ++i) id(i, i) = 1;
        return Subspace(A.field(), A.ambient_dim(), std::move(id));
    }
    return Subspace(A.field(), A.ambient_dim(), null_space(*A.field(), A.basis()));
}

Subspace meet(const Subspace& A, const Subspace& B) {
    if (A.ambient_dim() != B.ambient_dim() || A.field().get() != B.field().get()) {
        throw std::invalid_argument("ambient mismatch");
    }
    const Subspace duals = span(annihilator(A), annihilator(B));
    return annihilator(duals);
}

bool incident(std::span<const Elem> point, const Subspace& A) { return A.contains(point); }

} // namespace fingeo
