#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fingeo {

/// Field elements are integers in [0, p^m) read base p over the polynomial
/// basis {1, x, ..., x^{m-1}}: digit i is the coefficient of x^i.
using Elem = std::uint32_t;

/// Serializable description of GF(p^m).
struct FieldSpec {
    unsigned p = 0;
    unsigned m = 0;
    /// Monic defining polynomial, coefficients c_0..c_m (c_m == 1).
    std::vector<unsigned> modulus;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// Splits a prime power q into (p, e). Throws std::invalid_argument otherwise.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

/// GF(p^m) with table-driven arithmetic.
///
/// Instances are interned: Field::make(p, m) returns the same object for the
/// same arguments, so field identity can be compared by address. The defining
/// polynomial is x for prime fields and otherwise the first primitive
/// polynomial in a fixed enumeration order, which makes x a generator of the
/// multiplicative group.
class Field {
public:
    static constexpr unsigned kMaxDegree = 16;
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    static std::shared_ptr<const Field> make(unsigned p, unsigned m);
    static std::shared_ptr<const Field> of_order(std::uint64_t q);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    Elem order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    FieldSpec spec() const { return {p_, m_, modulus_}; }

    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a];
        std::uint32_t d = log_[b] + (q_ - 1) - la;
        if (d >= q_ - 1) d -= q_ - 1;
        const std::uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[la + z];
    }
    Elem neg(Elem a) const noexcept { return p_ == 2 ? a : neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Primitive element; equals the encoding of x whenever m > 1.
    Elem generator() const noexcept { return exp_[1 % (q_ - 1)]; }
    /// Discrete log to the base generator(); a must be nonzero.
    std::uint32_t log(Elem a) const noexcept { return log_[a]; }
    Elem exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }

    /// Base-p digits of the encoding (length m).
    std::vector<unsigned> digits(Elem a) const;
    Elem from_digits(std::span<const unsigned> digits) const;

    /// Embedding of the integer k into the prime subfield.
    Elem from_int(long long k) const noexcept;

    std::string name() const;

private:
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    unsigned p_;
    unsigned m_;
    Elem q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;           // size 2(q-1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::uint32_t> zech_; // log(1 + g^i), odd characteristic only
    std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Checked element handle. Arithmetic between elements of different fields
/// throws std::invalid_argument.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const {
        return field_.get() == o.field_.get() && value_ == o.value_;
    }

private:
    const Field& checked(const FieldElement& o) const;

    FieldPtr field_;
    Elem value_;
};

/// The tower GF(q) <= GF(q^n) together with the F_q-coordinate view of
/// GF(q^n) in the basis {1, w, ..., w^{n-1}}, w the generator of GF(q^n).
class Tower {
public:
    static std::shared_ptr<const Tower> make(FieldPtr base, unsigned n);
    static std::shared_ptr<const Tower> of_order(std::uint64_t q, unsigned n);

    const Field& base() const noexcept { return *base_; }
    const Field& ext() const noexcept { return *ext_; }
    const FieldPtr& base_ptr() const noexcept { return base_; }
    const FieldPtr& ext_ptr() const noexcept { return ext_; }
    unsigned n() const noexcept { return n_; }
    /// q, the size of the base field.
    Elem q() const noexcept { return base_->order(); }

    Elem embed(Elem a) const { return embed_.at(a); }
    /// Inverse of embed; throws std::domain_error when z is outside GF(q).
    Elem restrict_to_base(Elem z) const;
    bool in_base(Elem z) const noexcept { return restrict_[z] != kOutside; }

    Elem frobenius(Elem z) const noexcept { return ext_->pow(z, base_->order()); }

    /// F_q-basis {1, w, ..., w^{n-1}} of GF(q^n).
    const std::vector<Elem>& basis() const noexcept { return basis_; }

    /// Coordinates of z over the basis, as base-field elements.
    void coordinates(Elem z, std::span<Elem> out) const;
    std::vector<Elem> coordinates(Elem z) const;
    Elem from_coordinates(std::span<const Elem> coords) const;

    /// GF(q^n)^r -> F_q^{rn}; block i holds the coordinates of v[i].
    std::vector<Elem> flatten(std::span<const Elem> v) const;
    std::vector<Elem> unflatten(std::span<const Elem> flat) const;

private:
    Tower(FieldPtr base, FieldPtr ext, unsigned n);

    static constexpr Elem kOutside = 0xffffffffu;

    FieldPtr base_;
    FieldPtr ext_;
    unsigned n_;
    std::vector<Elem> embed_;
    std::vector<Elem> restrict_;
    std::vector<Elem> basis_;
    std::vector<std::uint32_t> packed_coords_; // base-q packing of coordinates
};

using TowerPtr = std::shared_ptr<const Tower>;

/// Integer power with overflow check; throws std::overflow_error.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

} // namespace fingeo
