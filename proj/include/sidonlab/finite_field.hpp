#pragma once

#include <memory>
#include <vector>

#include "sidonlab/sets.hpp"

namespace sidonlab::gf {

using sidonlab::Int;

namespace detail {
struct FieldImpl;
}

class Field;

/// Element of GF(p^e): coefficient vector of x^0..x^{e-1}, residues in [0, p).
class FieldElement {
public:
    FieldElement() = default;

    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::shared_ptr<const detail::FieldImpl>& impl() const { return impl_; }
    bool is_zero() const;
    bool operator==(const FieldElement& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

private:
    friend class Field;
    FieldElement(std::vector<Int> coeffs, std::shared_ptr<const detail::FieldImpl> impl)
        : coeffs_(std::move(coeffs)), impl_(std::move(impl)) {}

    std::vector<Int> coeffs_;
    std::shared_ptr<const detail::FieldImpl> impl_;
};

/// GF(p^e) with a fixed monic irreducible modulus polynomial. Immutable;
/// cheap to copy (shared internals), safe to share across threads.
///
/// Element order used throughout ("least" element, enumeration, packed
/// indices): compare coefficient vectors from the highest-degree
/// coefficient down to the constant term. Equivalently, the packed index
/// sum(c_i * p^i) compared numerically, so enumerating indices 0,1,2,...
/// walks the order with the constant term varying fastest.
class Field {
public:
    /// Field with the lexicographically least monic irreducible modulus of
    /// degree e over GF(p). Deterministic. Requires p prime, e >= 1, and
    /// p^e <= 2^24 (dense table cap).
    static Field make(Int p, int e);

    /// Field with an explicit modulus (constant term first, length e+1,
    /// monic); lets callers reproduce published tables exactly.
    static Field with_modulus(Int p, const std::vector<Int>& modulus_coeffs);

    Int characteristic() const;
    int degree() const;
    Int order() const;
    /// Modulus coefficients, constant term first, length degree()+1.
    const std::vector<Int>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Builds an element from coefficients (constant term first). Shorter
    /// vectors are zero-padded; coefficients are reduced mod p.
    FieldElement element(std::vector<Int> coeffs) const;
    /// Element with packed index sum(c_i * p^i), idx in [0, order).
    FieldElement from_index(Int idx) const;
    Int index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, Int k) const;  // k >= 0; a^0 = 1

    /// Multiplicative order is exactly order()-1.
    bool is_primitive(const FieldElement& a) const;
    /// Least element (in the documented order) generating the
    /// multiplicative group. Cached after first call.
    FieldElement find_primitive() const;

    /// Least positive k with base^k = target. Dense table (cached per base)
    /// when order <= 2^20, baby-step/giant-step above. Requires base
    /// primitive and target != 0.
    Int discrete_log(const FieldElement& base, const FieldElement& target) const;

    /// Structural equality: same characteristic and modulus.
    bool operator==(const Field& other) const;

private:
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FieldImpl> impl_;
};

/// True iff the modulus is irreducible over GF(p) (trial division by every
/// monic polynomial of degree <= deg/2; desk-scale only).
bool is_irreducible(Int p, const std::vector<Int>& poly);

bool is_prime(Int p);

}  // namespace sidonlab::gf
