#include "fingeo/galois.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace fingeo {

namespace {

using Poly = std::vector<unsigned>; // coefficients low -> high over GF(p)

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
    // p is prime and small, Fermat is fine
    std::uint64_t r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    trim(f);
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = static_cast<unsigned>(std::uint64_t{f.back()} * lead_inv % p);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = static_cast<unsigned>((f[shift + i] + std::uint64_t{p - c} * g[i]) % p);
        }
        trim(f);
    }
    return f;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
Poly monic_from_index(std::uint64_t index, unsigned degree, unsigned p) {
    Poly f(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        f[i] = static_cast<unsigned>(index % p);
        index /= p;
    }
    f[degree] = 1;
    return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m <= 1) return m == 1;
    if (f[0] == 0) return false;
    for (unsigned d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t encode_digits(std::span<const unsigned> d, unsigned p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Fills exp table by repeated multiplication by x modulo f; returns false if
// x is not primitive.
bool build_power_table(const Poly& f, unsigned p, std::vector<Elem>& exp_out) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    const std::uint64_t q = ipow(p, m);
    exp_out.assign(q - 1, 0);
    std::vector<unsigned> cur(m, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        const auto enc = static_cast<Elem>(encode_digits(cur, p));
        if (i > 0 && enc == 1) return false;
        exp_out[i] = enc;
        const unsigned top = cur[m - 1];
        for (unsigned j = m - 1; j > 0; --j) {
            cur[j] = static_cast<unsigned>((cur[j - 1] + std::uint64_t{p - top} * f[j]) % p);
        }
        cur[0] = static_cast<unsigned>(std::uint64_t{p - top} * f[0] % p);
    }
    return encode_digits(cur, p) == 1;
}

unsigned primitive_root(unsigned p) {
    if (p == 2) return 1;
    for (unsigned g = 2; g < p; ++g) {
        std::uint64_t x = 1;
        unsigned order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    throw std::logic_error("no primitive root");
}

} // namespace

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {static_cast<unsigned>(p), e};
}

// ---------------------------------------------------------------------------
// Field

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(static_cast<Elem>(ipow(p, m))), modulus_(std::move(modulus)) {
    std::vector<Elem> powers;
    if (m == 1) {
        const unsigned g = primitive_root(p);
        powers.resize(p - 1);
        std::uint64_t x = 1;
        for (unsigned i = 0; i < p - 1; ++i) {
            powers[i] = static_cast<Elem>(x);
            x = x * g % p;
        }
    } else if (!build_power_table(modulus_, p, powers)) {
        throw std::logic_error("defining polynomial is not primitive");
    }
    const Elem n1 = q_ - 1;
    exp_.resize(2 * static_cast<std::size_t>(n1));
    log_.assign(q_, kNoLog);
    for (Elem i = 0; i < n1; ++i) {
        exp_[i] = exp_[i + n1] = powers[i];
        log_[powers[i]] = i;
    }
    if (p_ != 2) {
        neg_.resize(q_);
        for (Elem a = 0; a < q_; ++a) {
            auto d = digits(a);
            for (auto& x : d) x = (p_ - x) % p_;
            neg_[a] = from_digits(d);
        }
        zech_.resize(n1);
        for (Elem i = 0; i < n1; ++i) {
            auto d = digits(exp_[i]);
            d[0] = (d[0] + 1) % p_;
            const Elem v = from_digits(d);
            zech_[i] = v == 0 ? kNoLog : log_[v];
        }
    }
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1 || m > kMaxDegree) {
        throw std::invalid_argument("field degree out of range [1, 16]: " + std::to_string(m));
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
    }

    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> registry;
    std::lock_guard lock(mu);
    if (auto it = registry.find({p, m}); it != registry.end()) return it->second;

    Poly modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        std::vector<Elem> scratch;
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Poly f = monic_from_index(idx, m, p);
            if (f[0] == 0 || !is_irreducible(f, p)) continue;
            if (!build_power_table(f, p, scratch)) continue;
            modulus = std::move(f);
            break;
        }
        if (modulus.empty()) throw std::logic_error("no primitive polynomial found");
    }
    std::shared_ptr<const Field> field(new Field(p, m, std::move(modulus)));
    registry.emplace(std::pair{p, m}, field);
    return field;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
    auto [p, e] = prime_power(q);
    return make(p, e);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n1 = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % n1)) % n1];
}

std::vector<unsigned> Field::digits(Elem a) const {
    std::vector<unsigned> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const unsigned> d) const {
    return static_cast<Elem>(encode_digits(d, p_));
}

Elem Field::from_int(long long k) const noexcept {
    long long r = k % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::string Field::name() const {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("null field");
    if (!field_->contains(value_)) throw std::invalid_argument("element out of range for " + field_->name());
}

const Field& FieldElement::checked(const FieldElement& o) const {
    if (field_.get() != o.field_.get()) {
        throw std::invalid_argument("mixing elements of " + field_->name() + " and " + o.field_->name());
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, checked(o).add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, checked(o).sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, checked(o).mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, checked(o).div(value_, o.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

// ---------------------------------------------------------------------------
// Tower

Tower::Tower(FieldPtr base, FieldPtr ext, unsigned n) : base_(std::move(base)), ext_(std::move(ext)), n_(n) {
    const Field& F = *base_;
    const Field& E = *ext_;
    const unsigned e = F.degree();

    // Image of the generator x of GF(q): a root of its defining polynomial.
    Elem gamma = 0;
    if (e > 1) {
        const auto& f = F.modulus();
        bool found = false;
        for (Elem z = 0; z < E.order() && !found; ++z) {
            Elem acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = E.add(E.mul(acc, z), E.from_int(f[i]));
            if (acc == 0) {
                gamma = z;
                found = true;
            }
        }
        if (!found) throw std::logic_error("base field does not embed");
    }

    embed_.resize(F.order());
    restrict_.assign(E.order(), kOutside);
    for (Elem a = 0; a < F.order(); ++a) {
        Elem img;
        if (e == 1) {
            img = a;
        } else {
            const auto d = F.digits(a);
            img = 0;
            for (std::size_t i = d.size(); i-- > 0;) img = E.add(E.mul(img, gamma), E.from_int(d[i]));
        }
        embed_[a] = img;
        restrict_[img] = a;
    }

    const Elem w = n_ == 1 ? 1 : E.generator();
    basis_.resize(n_);
    Elem pw = 1;
    for (unsigned i = 0; i < n_; ++i) {
        basis_[i] = pw;
        pw = E.mul(pw, w);
    }

    const Elem q = F.order();
    packed_coords_.assign(E.order(), 0xffffffffu);
    std::vector<Elem> c(n_, 0);
    for (std::uint32_t packed = 0; packed < E.order(); ++packed) {
        std::uint32_t t = packed;
        Elem z = 0;
        for (unsigned i = 0; i < n_; ++i) {
            c[i] = t % q;
            t /= q;
            z = E.add(z, E.mul(embed_[c[i]], basis_[i]));
        }
        if (packed_coords_[z] != 0xffffffffu) throw std::logic_error("tower basis is not F_q-independent");
        packed_coords_[z] = packed;
    }
}

std::shared_ptr<const Tower> Tower::make(FieldPtr base, unsigned n) {
    if (!base) throw std::invalid_argument("null base field");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    const unsigned total = base->degree() * n;
    if (total > Field::kMaxDegree) throw std::overflow_error("extension degree too large");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < total; ++i) {
        size *= base->characteristic();
        if (size > Field::kMaxOrder) throw std::overflow_error("extension field exceeds 2^20 elements");
    }
    auto ext = Field::make(base->characteristic(), total);
    return std::shared_ptr<const Tower>(new Tower(std::move(base), std::move(ext), n));
}

std::shared_ptr<const Tower> Tower::of_order(std::uint64_t q, unsigned n) { return make(Field::of_order(q), n); }

Elem Tower::restrict_to_base(Elem z) const {
    const Elem a = restrict_.at(z);
    if (a == kOutside) throw std::domain_error("element is not in the base field");
    return a;
}

void Tower::coordinates(Elem z, std::span<Elem> out) const {
    std::uint32_t t = packed_coords_.at(z);
    const Elem q = base_->order();
    for (unsigned i = 0; i < n_; ++i) {
        out[i] = t % q;
        t /= q;
    }
}

std::vector<Elem> Tower::coordinates(Elem z) const {
    std::vector<Elem> out(n_);
    coordinates(z, out);
    return out;
}

Elem Tower::from_coordinates(std::span<const Elem> coords) const {
    if (coords.size() != n_) throw std::invalid_argument("coordinate vector has wrong length");
    Elem z = 0;
    for (unsigned i = 0; i < n_; ++i) z = ext_->add(z, ext_->mul(embed(coords[i]), basis_[i]));
    return z;
}

std::vector<Elem> Tower::flatten(std::span<const Elem> v) const {
    std::vector<Elem> out(v.size() * n_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!ext_->contains(v[i])) throw std::invalid_argument("entry is not in the extension field");
        coordinates(v[i], std::span<Elem>(out).subspan(i * n_, n_));
    }
    return out;
}

std::vector<Elem> Tower::unflatten(std::span<const Elem> flat) const {
    if (flat.size() % n_ != 0) throw std::invalid_argument("flattened length is not a multiple of n");
    std::vector<Elem> out(flat.size() / n_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = from_coordinates(flat.subspan(i * n_, n_));
    return out;
}

} // namespace fingeo
