#pragma once

/// Exact arithmetic in prime fields Z_q, extension fields GF(q^m) given by a
/// monic irreducible modulus, and the cyclotomic rational field Q[x]/Phi_p(x).
///
/// Field descriptors are interned: field_make and field_make_cyclotomic return
/// references to immutable FieldSpec objects that live for the remainder of
/// the process, so elements can carry plain pointers to their owner and two
/// elements belong to the same field exactly when their owner pointers match.
/// Mixing elements of different fields is a hard error, never a coercion.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace mdscodex {

using Rational = mpq_class;

enum class FieldKind { Prime, Extension, Cyclotomic };

class FieldSpec;

// Residue coefficients for the finite kinds; inline up to degree 6 so the
// small fields used in scans and decoding never touch the heap.
using FiniteCoeffs = boost::container::small_vector<std::int64_t, 6>;
using RationalCoeffs = std::vector<Rational>;

class FieldElement {
   public:
    FieldElement() : owner_(nullptr) {}

    const FieldSpec& field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Canonical little-endian coefficients (trailing zeros trimmed).
    std::span<const std::int64_t> finite_coeffs() const;
    const RationalCoeffs& rational_coeffs() const;

    FieldElement pow(std::int64_t e) const;
    FieldElement inv() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string to_string() const;

   private:
    friend class FieldSpec;
    const FieldSpec* owner_;
    std::variant<FiniteCoeffs, RationalCoeffs> coeffs_;
};

class FieldSpec {
   public:
    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return characteristic_; }
    int degree() const { return degree_; }
    /// Monic modulus, little-endian integer coefficients; empty for prime fields.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    /// q^m for the finite kinds, 0 for the cyclotomic-rational field.
    const mpz_class& cardinality() const { return cardinality_; }
    /// The p with modulus Phi_p, or 0 when the modulus is not a Phi_p.
    std::int64_t cyclotomic_p() const { return cyclotomic_p_; }
    bool is_finite() const { return kind_ != FieldKind::Cyclotomic; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Embedding of an integer via the characteristic (or into Q for kind Cyclotomic).
    FieldElement from_integer(std::int64_t v) const;
    /// Element from little-endian residues; reduced to canonical form.
    FieldElement element(const std::vector<std::int64_t>& coeffs) const;
    FieldElement element(const RationalCoeffs& coeffs) const;
    /// The coset of x; error for prime fields.
    FieldElement generator_x() const;

    /// Encoding of elements of a finite field as 0..q^m-1 (little-endian base q).
    FieldElement element_from_encoding(std::uint64_t enc) const;
    std::uint64_t encoding_of(const FieldElement& a) const;

    std::string describe() const;

    bool same_as(const FieldSpec& other) const { return this == &other; }

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement invert(const FieldElement& a) const;

   private:
    friend class FieldElement;
    friend const FieldSpec& field_make(std::int64_t, int, const std::optional<std::vector<std::int64_t>>&);
    friend const FieldSpec& field_make_cyclotomic(std::int64_t);

    FieldSpec() = default;

    FieldElement make(FiniteCoeffs c) const;
    FieldElement make(RationalCoeffs c) const;

    FiniteCoeffs reduce_finite(FiniteCoeffs c) const;
    RationalCoeffs reduce_rational(RationalCoeffs c) const;

    FieldKind kind_ = FieldKind::Prime;
    std::int64_t characteristic_ = 0;
    int degree_ = 1;
    std::vector<std::int64_t> modulus_;
    mpz_class cardinality_;
    std::int64_t cyclotomic_p_ = 0;
};

/// Z_q when m == 1; GF(q^m) otherwise. Without an explicit modulus the default
/// is Phi_p(x) when m = p-1 for a prime p with ord_p(q) = p-1, else the first
/// monic irreducible of degree m in base-q coefficient order.
const FieldSpec& field_make(std::int64_t q, int m,
                            const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

/// Q[x]/Phi_p(x) for a prime p >= 3; the coset of x is the primitive p-th root.
const FieldSpec& field_make_cyclotomic(std::int64_t p);

/// Smallest k >= 1 with a^k = 1; finite fields only, nonzero input.
std::int64_t element_order(const FieldElement& a);

/// Deterministic element of multiplicative order exactly p: the coset of x
/// when the field's modulus is Phi_p, else the first element of order p in
/// encoding order (prime fields: smallest integer >= 2). An explicit override
/// is validated and returned unchanged.
FieldElement find_root_of_unity(const FieldSpec& field, std::int64_t p,
                                const std::optional<FieldElement>& override_omega = std::nullopt);

}  // namespace mdscodex
