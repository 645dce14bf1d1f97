#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ghwlrc {

/// Raw field symbol. For GF(p) this is the residue; for GF(p^m) it is the
/// base-p encoding of the coefficient vector (constant term is the lowest digit).
using Symbol = std::uint16_t;

inline constexpr unsigned kMaxFieldOrder = 1u << 16;

bool is_prime(unsigned value);

/**
 * Finite field GF(p^m), q <= 2^16.
 *
 * Prime fields use direct modular arithmetic. Extension fields keep exp/log
 * tables over a primitive element, so mul/div/inv are two lookups. Addition in
 * an extension field is digit-wise mod p (plain XOR when p = 2).
 *
 * A Field is immutable after construction and is shared by pointer between
 * matrices and codes.
 */
class Field {
public:
    /// `modulus` is the low-to-high coefficient list of a monic degree-m
    /// polynomial. Ignored (must be empty or absent) when m = 1.
    Field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    /// Empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Symbol primitive_element() const { return primitive_; }
    std::string name() const;

    Symbol zero() const { return 0; }
    Symbol one() const { return 1; }

    Symbol add(Symbol a, Symbol b) const
    {
        if (m_ == 1) {
            unsigned s = unsigned(a) + b;
            return Symbol(s >= p_ ? s - p_ : s);
        }
        if (p_ == 2) return Symbol(a ^ b);
        return add_digits(a, b);
    }

    Symbol neg(Symbol a) const
    {
        if (a == 0) return 0;
        if (m_ == 1) return Symbol(p_ - a);
        if (p_ == 2) return a;
        return neg_digits(a);
    }

    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

    Symbol mul(Symbol a, Symbol b) const
    {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return Symbol((std::uint32_t(a) * b) % p_);
        unsigned e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    /// Throws std::domain_error on zero.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t e) const;

    bool contains(unsigned value) const { return value < q_; }

    friend bool operator==(const Field& a, const Field& b)
    {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Symbol add_digits(Symbol a, Symbol b) const;
    Symbol neg_digits(Symbol a) const;
    Symbol poly_mul_mod(Symbol a, Symbol b) const;
    void build_tables();

    unsigned p_;
    unsigned m_;
    unsigned q_;
    std::vector<unsigned> modulus_;
    Symbol primitive_ = 1;
    std::vector<Symbol> exp_;
    std::vector<unsigned> log_;
    std::vector<Symbol> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned m = 1, std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Field of the given order with the default modulus. Throws if q is not a prime power.
FieldPtr field_of_order(unsigned q);

/// Lowest monic irreducible of degree m over GF(p), ordered by the base-p value
/// of its low-to-high coefficient list.
std::vector<unsigned> default_modulus(unsigned p, unsigned m);

/// Monic irreducibility over GF(p) by trial division against every monic
/// polynomial of degree 1..m/2.
bool is_irreducible(unsigned p, const std::vector<unsigned>& monic);

/// Value-level handle carrying its field. Mixing elements of different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, unsigned value);

    const FieldPtr& field() const { return field_; }
    Symbol value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.value_ == b.value_ && *a.field_ == *b.field_;
    }

private:
    void require_same_field(const FieldElement& other) const;

    FieldPtr field_;
    Symbol value_;
};

} // namespace ghwlrc
