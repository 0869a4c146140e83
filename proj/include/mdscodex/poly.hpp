#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdscodex/field.hpp"

namespace mdscodex {

/// Univariate polynomial with coefficients in one field, little-endian,
/// leading coefficient nonzero unless the polynomial is zero.
class Poly {
   public:
    explicit Poly(const FieldSpec& base) : base_(&base) {}
    Poly(const FieldSpec& base, std::vector<FieldElement> coeffs);
    static Poly from_integers(const FieldSpec& base, const std::vector<std::int64_t>& coeffs);
    static Poly x_pow_minus_one(const FieldSpec& base, std::int64_t p);

    const FieldSpec& base() const { return *base_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading() const;
    bool is_monic() const;
    int nonzero_term_count() const;

    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const FieldElement& s) const;
    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    FieldElement eval(const FieldElement& x) const;
    std::string to_string() const;

   private:
    void trim();
    const FieldSpec* base_;
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Poly poly_gcd(Poly f, Poly g);

/// Irreducibility over a finite base field: f of degree d is irreducible iff
/// gcd(f, x^{Q^i} - x) = 1 for all 1 <= i <= d/2, Q the base cardinality.
bool poly_is_irreducible(const Poly& f);

}  // namespace mdscodex
