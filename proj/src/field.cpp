#include "ghwlrc/field.hpp"

#include <stdexcept>
#include <string>

namespace ghwlrc {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p)
{
    // extended Euclid
    long t = 0, new_t = 1;
    long r = p, new_r = a % p;
    while (new_r != 0) {
        long quotient = r / new_r;
        t = t - quotient * new_t;
        std::swap(t, new_t);
        r = r - quotient * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("element is not invertible");
    if (t < 0) t += p;
    return unsigned(t);
}

/// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_rem(Poly a, const Poly& b, unsigned p)
{
    trim(a);
    const unsigned lead_inv = inverse_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const unsigned factor = (a.back() * lead_inv) % p;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (factor * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly decode(unsigned index, unsigned p, unsigned m)
{
    Poly out(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

unsigned encode(const Poly& coeffs, unsigned p)
{
    unsigned value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * p + coeffs[i];
    return value;
}

std::vector<unsigned> prime_factors(unsigned v)
{
    std::vector<unsigned> out;
    for (unsigned f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

bool is_prime(unsigned value)
{
    if (value < 2) return false;
    for (unsigned f = 2; f * f <= value; ++f) {
        if (value % f == 0) return false;
    }
    return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& monic)
{
    if (monic.size() < 2) return false;
    const unsigned m = unsigned(monic.size() - 1);
    if (m == 1) return true;
    for (unsigned degree = 1; degree <= m / 2; ++degree) {
        // every monic polynomial of this degree: p^degree lower-coefficient choices
        unsigned count = 1;
        for (unsigned i = 0; i < degree; ++i) count *= p;
        for (unsigned lower = 0; lower < count; ++lower) {
            Poly divisor = decode(lower, p, degree);
            divisor.push_back(1);
            if (poly_rem(monic, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m)
{
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 2) return {};
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
    }
    for (unsigned lower = 0; lower < count; ++lower) {
        Poly candidate = decode(lower, p, m);
        candidate.push_back(1);
        if (is_irreducible(p, candidate)) return candidate;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field::Field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus)
    : p_(p), m_(m), q_(1)
{
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    for (unsigned i = 0; i < m; ++i) {
        if (std::uint64_t(q_) * p > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
        q_ *= p;
    }
    if (m == 1) {
        if (modulus && !modulus->empty()) throw std::invalid_argument("a prime field takes no modulus");
    } else if (modulus) {
        if (modulus->size() != m + 1) {
            throw std::invalid_argument("modulus must have " + std::to_string(m + 1) + " coefficients");
        }
        for (unsigned c : *modulus) {
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (modulus->back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(p, *modulus)) throw std::invalid_argument("modulus is reducible");
        modulus_ = *modulus;
    } else {
        modulus_ = default_modulus(p, m);
    }
    build_tables();
}

std::string Field::name() const
{
    if (m_ == 1) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

Symbol Field::add_digits(Symbol a, Symbol b) const
{
    unsigned result = 0, scale = 1;
    unsigned x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        result += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return Symbol(result);
}

Symbol Field::neg_digits(Symbol a) const
{
    unsigned result = 0, scale = 1;
    unsigned x = a;
    for (unsigned i = 0; i < m_; ++i) {
        result += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return Symbol(result);
}

Symbol Field::poly_mul_mod(Symbol a, Symbol b) const
{
    const Poly x = decode(a, p_, m_);
    const Poly y = decode(b, p_, m_);
    Poly product(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        for (unsigned j = 0; j < m_; ++j) product[i + j] = (product[i + j] + x[i] * y[j]) % p_;
    }
    Poly reduced = poly_rem(product, modulus_, p_);
    reduced.resize(m_, 0);
    return Symbol(encode(reduced, p_));
}

void Field::build_tables()
{
    inv_.assign(q_, 0);
    if (m_ == 1) {
        for (unsigned a = 1; a < q_; ++a) inv_[a] = Symbol(inverse_mod(a, p_));
        // smallest generator, reported for completeness
        const auto factors = prime_factors(q_ - 1);
        for (unsigned g = 1; g < q_; ++g) {
            bool generator = true;
            for (unsigned f : factors) {
                if (pow(Symbol(g), (q_ - 1) / f) == 1) {
                    generator = false;
                    break;
                }
            }
            if (generator) {
                primitive_ = Symbol(g);
                break;
            }
        }
        return;
    }

    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [this](Symbol base, unsigned e) {
        Symbol result = 1;
        while (e > 0) {
            if (e & 1u) result = poly_mul_mod(result, base);
            base = poly_mul_mod(base, base);
            e >>= 1;
        }
        return result;
    };
    primitive_ = 0;
    for (unsigned g = 2; g < q_ && primitive_ == 0; ++g) {
        bool generator = true;
        for (unsigned f : factors) {
            if (slow_pow(Symbol(g), (q_ - 1) / f) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) primitive_ = Symbol(g);
    }
    if (primitive_ == 0) throw std::logic_error("no primitive element found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Symbol current = 1;
    for (unsigned e = 0; e < q_ - 1; ++e) {
        exp_[e] = current;
        log_[current] = e;
        current = poly_mul_mod(current, primitive_);
    }
    for (unsigned a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Symbol Field::inv(Symbol a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    if (a >= q_) throw std::out_of_range("symbol outside the field");
    return inv_[a];
}

Symbol Field::pow(Symbol a, std::uint64_t e) const
{
    Symbol result = 1;
    Symbol base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldPtr make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus)
{
    return std::make_shared<const Field>(p, m, std::move(modulus));
}

FieldPtr field_of_order(unsigned q)
{
    if (q < 2 || q > kMaxFieldOrder) throw std::invalid_argument("field order " + std::to_string(q) + " out of range");
    unsigned p = 0;
    for (unsigned f = 2; f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    unsigned m = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make_field(p, m);
}

FieldElement::FieldElement(FieldPtr field, unsigned value) : field_(std::move(field)), value_(0)
{
    if (!field_) throw std::invalid_argument("null field");
    if (!field_->contains(value)) throw std::out_of_range("value outside " + field_->name());
    value_ = Symbol(value);
}

void FieldElement::require_same_field(const FieldElement& other) const
{
    if (field_ != other.field_ && !(*field_ == *other.field_)) {
        throw std::invalid_argument("operands belong to different fields");
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const
{
    require_same_field(other);
    return {field_, field_->add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const
{
    require_same_field(other);
    return {field_, field_->sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const
{
    require_same_field(other);
    return {field_, field_->mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& other) const
{
    require_same_field(other);
    return {field_, field_->div(value_, other.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

} // namespace ghwlrc
