#include "mdscodex/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mdscodex/numutil.hpp"
#include "mdscodex/poly.hpp"

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const FieldSpec& require_same_owner(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) {
        throw std::invalid_argument("field mismatch: operands belong to different fields (" +
                                    a.field().describe() + " vs " + b.field().describe() + ")");
    }
    return a.field();
}

std::vector<std::int64_t> cyclotomic_modulus(std::int64_t p) {
    return std::vector<std::int64_t>(static_cast<std::size_t>(p), 1);
}

// Interning registry. Specs are immutable and live until process exit, so
// elements may hold plain owner pointers.
struct Registry {
    std::mutex mu;
    std::map<std::tuple<std::int64_t, int, std::vector<std::int64_t>>, std::unique_ptr<FieldSpec>> specs;
};

Registry& registry() {
    static Registry r;
    return r;
}

// Extended Euclid over Z_q[x] on raw residue vectors: returns (g, u) with
// u*a == g (mod m), g the monic gcd. Used for extension-field inversion.
struct ZqPoly {
    std::vector<std::int64_t> c;  // little-endian, trimmed
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

void zq_trim(ZqPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

ZqPoly zq_scale(const ZqPoly& f, std::int64_t s, std::int64_t q) {
    ZqPoly r = f;
    for (auto& x : r.c) x = x * s % q;
    zq_trim(r);
    return r;
}

ZqPoly zq_sub(const ZqPoly& a, const ZqPoly& b, std::int64_t q) {
    ZqPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::int64_t x = (i < a.c.size() ? a.c[i] : 0) - (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = mod_reduce(x, q);
    }
    zq_trim(r);
    return r;
}

ZqPoly zq_shift_mul(const ZqPoly& f, std::int64_t s, int shift, std::int64_t q) {
    ZqPoly r;
    if (f.c.empty() || s % q == 0) return r;
    r.c.assign(f.c.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i + static_cast<std::size_t>(shift)] = f.c[i] * s % q;
    return r;
}

ZqPoly zq_mul(const ZqPoly& a, const ZqPoly& b, std::int64_t q) {
    ZqPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % q;
        }
    }
    zq_trim(r);
    return r;
}

// a mod b, b nonzero.
ZqPoly zq_rem(ZqPoly a, const ZqPoly& b, std::int64_t q) {
    std::int64_t lead_inv = mod_inv(b.c.back(), q);
    while (a.deg() >= b.deg() && !a.c.empty()) {
        std::int64_t factor = a.c.back() * lead_inv % q;
        int shift = a.deg() - b.deg();
        a = zq_sub(a, zq_shift_mul(b, factor, shift, q), q);
    }
    return a;
}

// Returns u with u*a == 1 (mod m); a nonzero mod m, m irreducible.
ZqPoly zq_inverse_mod(const ZqPoly& a, const ZqPoly& m, std::int64_t q) {
    ZqPoly r0 = m, r1 = a;
    ZqPoly s0, s1;
    s1.c = {1};
    while (!r1.c.empty()) {
        // r0 = qq*r1 + r2
        ZqPoly qq;
        ZqPoly rem = r0;
        std::int64_t lead_inv = mod_inv(r1.c.back(), q);
        qq.c.assign(static_cast<std::size_t>(std::max(0, r0.deg() - r1.deg() + 1)), 0);
        while (rem.deg() >= r1.deg() && !rem.c.empty()) {
            std::int64_t factor = rem.c.back() * lead_inv % q;
            int shift = rem.deg() - r1.deg();
            qq.c[static_cast<std::size_t>(shift)] = factor;
            rem = zq_sub(rem, zq_shift_mul(r1, factor, shift, q), q);
        }
        zq_trim(qq);
        ZqPoly s2 = zq_sub(s0, zq_mul(qq, s1, q), q);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0) throw std::domain_error("inverse: element shares a factor with the modulus");
    return zq_scale(s0, mod_inv(r0.c[0], q), q);
}

// Extended Euclid over Q[x] for cyclotomic inversion.
struct QPoly {
    std::vector<Rational> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

void q_trim(QPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = (i < a.c.size() ? a.c[i] : Rational(0)) - (i < b.c.size() ? b.c[i] : Rational(0));
    }
    q_trim(r);
    return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    q_trim(r);
    return r;
}

QPoly q_inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a;
    QPoly s0, s1;
    s1.c = {Rational(1)};
    while (!r1.c.empty()) {
        QPoly qq, rem = r0;
        qq.c.assign(static_cast<std::size_t>(std::max(0, r0.deg() - r1.deg() + 1)), Rational(0));
        while (rem.deg() >= r1.deg() && !rem.c.empty()) {
            Rational factor = rem.c.back() / r1.c.back();
            int shift = rem.deg() - r1.deg();
            qq.c[static_cast<std::size_t>(shift)] = factor;
            QPoly shifted;
            shifted.c.assign(r1.c.size() + static_cast<std::size_t>(shift), Rational(0));
            for (std::size_t i = 0; i < r1.c.size(); ++i) shifted.c[i + static_cast<std::size_t>(shift)] = r1.c[i] * factor;
            rem = q_sub(rem, shifted);
        }
        q_trim(qq);
        QPoly s2 = q_sub(s0, q_mul(qq, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0) throw std::domain_error("inverse: element shares a factor with the modulus");
    QPoly out = s0;
    for (auto& x : out.c) x /= r0.c[0];
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

const FieldSpec& FieldElement::field() const {
    if (owner_ == nullptr) throw std::logic_error("use of a default-constructed FieldElement");
    return *owner_;
}

bool FieldElement::is_zero() const {
    if (const auto* f = std::get_if<FiniteCoeffs>(&coeffs_)) return f->empty();
    return std::get<RationalCoeffs>(coeffs_).empty();
}

bool FieldElement::is_one() const {
    if (const auto* f = std::get_if<FiniteCoeffs>(&coeffs_)) return f->size() == 1 && (*f)[0] == 1;
    const auto& r = std::get<RationalCoeffs>(coeffs_);
    return r.size() == 1 && r[0] == 1;
}

std::span<const std::int64_t> FieldElement::finite_coeffs() const {
    const auto* f = std::get_if<FiniteCoeffs>(&coeffs_);
    if (f == nullptr) throw std::logic_error("finite_coeffs on a cyclotomic-rational element");
    return {f->data(), f->size()};
}

const RationalCoeffs& FieldElement::rational_coeffs() const {
    const auto* r = std::get_if<RationalCoeffs>(&coeffs_);
    if (r == nullptr) throw std::logic_error("rational_coeffs on a finite-field element");
    return *r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return require_same_owner(a, b).add(a, b);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return require_same_owner(a, b).sub(a, b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return require_same_owner(a, b).mul(a, b);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = require_same_owner(a, b);
    return f.mul(a, f.invert(b));
}

FieldElement FieldElement::operator-() const { return field().neg(*this); }

FieldElement FieldElement::inv() const { return field().invert(*this); }

FieldElement FieldElement::pow(std::int64_t e) const {
    const FieldSpec& f = field();
    if (e < 0) return inv().pow(-e);
    FieldElement base = *this;
    FieldElement result = f.one();
    std::uint64_t exp = static_cast<std::uint64_t>(e);
    while (exp > 0) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.owner_ != b.owner_) {
        require_same_owner(a, b);
    }
    return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
    std::ostringstream out;
    out << "[";
    if (const auto* f = std::get_if<FiniteCoeffs>(&coeffs_)) {
        for (std::size_t i = 0; i < f->size(); ++i) out << (i ? "," : "") << (*f)[i];
    } else {
        const auto& r = std::get<RationalCoeffs>(coeffs_);
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i].get_str();
    }
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// FieldSpec arithmetic

FieldElement FieldSpec::make(FiniteCoeffs c) const {
    FieldElement e;
    e.owner_ = this;
    e.coeffs_ = std::move(c);
    return e;
}

FieldElement FieldSpec::make(RationalCoeffs c) const {
    FieldElement e;
    e.owner_ = this;
    e.coeffs_ = std::move(c);
    return e;
}

FiniteCoeffs FieldSpec::reduce_finite(FiniteCoeffs c) const {
    const std::int64_t q = characteristic_;
    for (auto& x : c) x = mod_reduce(x, q);
    if (kind_ == FieldKind::Extension) {
        // reduce modulo the monic modulus of degree m
        const int m = degree_;
        for (int d = static_cast<int>(c.size()) - 1; d >= m; --d) {
            std::int64_t lead = c[static_cast<std::size_t>(d)];
            if (lead == 0) continue;
            for (int i = 0; i < m; ++i) {
                auto& dst = c[static_cast<std::size_t>(d - m + i)];
                dst = mod_reduce(dst - lead * modulus_[static_cast<std::size_t>(i)], q);
            }
            c[static_cast<std::size_t>(d)] = 0;
        }
        if (static_cast<int>(c.size()) > m) c.resize(static_cast<std::size_t>(m));
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

RationalCoeffs FieldSpec::reduce_rational(RationalCoeffs c) const {
    const int m = degree_;  // p-1
    for (int d = static_cast<int>(c.size()) - 1; d >= m; --d) {
        Rational lead = c[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        // modulus is Phi_p = 1 + x + ... + x^{p-1}
        for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(d - m + i)] -= lead;
        c[static_cast<std::size_t>(d)] = 0;
    }
    if (static_cast<int>(c.size()) > m) c.resize(static_cast<std::size_t>(m));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

FieldElement FieldSpec::zero() const {
    if (kind_ == FieldKind::Cyclotomic) return make(RationalCoeffs{});
    return make(FiniteCoeffs{});
}

FieldElement FieldSpec::one() const { return from_integer(1); }

FieldElement FieldSpec::from_integer(std::int64_t v) const {
    if (kind_ == FieldKind::Cyclotomic) {
        RationalCoeffs c;
        if (v != 0) c.emplace_back(v);
        return make(std::move(c));
    }
    std::int64_t r = mod_reduce(v, characteristic_);
    FiniteCoeffs c;
    if (r != 0) c.push_back(r);
    return make(std::move(c));
}

FieldElement FieldSpec::element(const std::vector<std::int64_t>& coeffs) const {
    if (kind_ == FieldKind::Cyclotomic) {
        RationalCoeffs c(coeffs.begin(), coeffs.end());
        return make(reduce_rational(std::move(c)));
    }
    require(static_cast<int>(coeffs.size()) <= degree_,
            "element: coefficient list longer than the field degree");
    FiniteCoeffs c(coeffs.begin(), coeffs.end());
    return make(reduce_finite(std::move(c)));
}

FieldElement FieldSpec::element(const RationalCoeffs& coeffs) const {
    require(kind_ == FieldKind::Cyclotomic, "rational coefficients require the cyclotomic-rational kind");
    require(static_cast<int>(coeffs.size()) <= degree_,
            "element: coefficient list longer than the field degree");
    return make(reduce_rational(coeffs));
}

FieldElement FieldSpec::generator_x() const {
    require(kind_ != FieldKind::Prime, "generator_x: prime fields have no polynomial generator");
    if (kind_ == FieldKind::Cyclotomic) {
        RationalCoeffs c(2, Rational(0));
        c[1] = 1;
        return make(std::move(c));
    }
    FiniteCoeffs c{0, 1};
    return make(reduce_finite(std::move(c)));
}

FieldElement FieldSpec::element_from_encoding(std::uint64_t enc) const {
    require(is_finite(), "element_from_encoding: finite fields only");
    FiniteCoeffs c;
    const std::uint64_t q = static_cast<std::uint64_t>(characteristic_);
    while (enc > 0) {
        c.push_back(static_cast<std::int64_t>(enc % q));
        enc /= q;
    }
    require(static_cast<int>(c.size()) <= degree_, "element_from_encoding: encoding out of range");
    while (!c.empty() && c.back() == 0) c.pop_back();
    return make(std::move(c));
}

std::uint64_t FieldSpec::encoding_of(const FieldElement& a) const {
    require(is_finite(), "encoding_of: finite fields only");
    require(&a.field() == this, "encoding_of: element of a different field");
    std::uint64_t enc = 0;
    auto c = a.finite_coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        enc = enc * static_cast<std::uint64_t>(characteristic_) + static_cast<std::uint64_t>(c[i]);
    }
    return enc;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::Cyclotomic) {
        const auto& x = std::get<RationalCoeffs>(a.coeffs_);
        const auto& y = std::get<RationalCoeffs>(b.coeffs_);
        RationalCoeffs r(std::max(x.size(), y.size()), Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        return make(std::move(r));
    }
    const auto& x = std::get<FiniteCoeffs>(a.coeffs_);
    const auto& y = std::get<FiniteCoeffs>(b.coeffs_);
    FiniteCoeffs r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) {
        r[i] += y[i];
        if (r[i] >= characteristic_) r[i] -= characteristic_;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return make(std::move(r));
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::Cyclotomic) {
        const auto& x = std::get<RationalCoeffs>(a.coeffs_);
        const auto& y = std::get<RationalCoeffs>(b.coeffs_);
        RationalCoeffs r(std::max(x.size(), y.size()), Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        return make(std::move(r));
    }
    const auto& x = std::get<FiniteCoeffs>(a.coeffs_);
    const auto& y = std::get<FiniteCoeffs>(b.coeffs_);
    FiniteCoeffs r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) {
        r[i] -= y[i];
        if (r[i] < 0) r[i] += characteristic_;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return make(std::move(r));
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == FieldKind::Cyclotomic) {
        const auto& x = std::get<RationalCoeffs>(a.coeffs_);
        const auto& y = std::get<RationalCoeffs>(b.coeffs_);
        if (x.empty() || y.empty()) return zero();
        RationalCoeffs r(x.size() + y.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        }
        return make(reduce_rational(std::move(r)));
    }
    const auto& x = std::get<FiniteCoeffs>(a.coeffs_);
    const auto& y = std::get<FiniteCoeffs>(b.coeffs_);
    if (x.empty() || y.empty()) return zero();
    if (kind_ == FieldKind::Prime) {
        FiniteCoeffs r{x[0] * y[0] % characteristic_};
        if (r[0] == 0) r.clear();
        return make(std::move(r));
    }
    FiniteCoeffs r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            r[i + j] = (r[i + j] + x[i] * y[j]) % characteristic_;
        }
    }
    return make(reduce_finite(std::move(r)));
}

FieldElement FieldSpec::invert(const FieldElement& a) const {
    require(&a.field() == this, "invert: element of a different field");
    if (a.is_zero()) throw std::domain_error("division by zero in " + describe());
    switch (kind_) {
        case FieldKind::Prime: {
            const auto& x = std::get<FiniteCoeffs>(a.coeffs_);
            return make(FiniteCoeffs{mod_inv(x[0], characteristic_)});
        }
        case FieldKind::Extension: {
            ZqPoly ap, mp;
            auto c = a.finite_coeffs();
            ap.c.assign(c.begin(), c.end());
            mp.c = modulus_;
            ZqPoly u = zq_inverse_mod(ap, mp, characteristic_);
            FiniteCoeffs r(u.c.begin(), u.c.end());
            return make(reduce_finite(std::move(r)));
        }
        case FieldKind::Cyclotomic: {
            QPoly ap, mp;
            ap.c = a.rational_coeffs();
            mp.c.assign(modulus_.begin(), modulus_.end());
            QPoly u = q_inverse_mod(ap, mp);
            return make(reduce_rational(std::move(u.c)));
        }
    }
    throw std::logic_error("unreachable");
}

std::string FieldSpec::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case FieldKind::Prime:
            out << "GF(" << characteristic_ << ")";
            break;
        case FieldKind::Extension:
            out << "GF(" << characteristic_ << "^" << degree_ << ")";
            break;
        case FieldKind::Cyclotomic:
            out << "Q(w" << cyclotomic_p_ << ")";
            break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

// Detects whether a monic modulus over Z_q is Phi_p for prime p = deg+1.
std::int64_t phi_p_of(const std::vector<std::int64_t>& modulus) {
    for (std::int64_t c : modulus) {
        if (c != 1) return 0;
    }
    std::int64_t p = static_cast<std::int64_t>(modulus.size());
    return is_prime(p) ? p : 0;
}

std::vector<std::int64_t> default_modulus(std::int64_t q, int m) {
    // Phi_p when m = p-1 for a prime p with ord_p(q) = p-1.
    std::int64_t p = static_cast<std::int64_t>(m) + 1;
    if (is_prime(p) && q % p != 0 && mod_order(q % p, p) == p - 1) return cyclotomic_modulus(p);
    // Otherwise the first monic irreducible of degree m in base-q coefficient
    // order (low coefficients vary fastest).
    const FieldSpec& zq = field_make(q, 1);
    mpz_class total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    std::vector<std::int64_t> c(static_cast<std::size_t>(m) + 1, 0);
    c[static_cast<std::size_t>(m)] = 1;
    for (mpz_class v = 0; v < total; ++v) {
        mpz_class rest = v;
        for (int i = 0; i < m; ++i) {
            mpz_class digit = rest % q;
            c[static_cast<std::size_t>(i)] = digit.get_si();
            rest /= q;
        }
        if (poly_is_irreducible(Poly::from_integers(zq, c))) return c;
    }
    throw std::logic_error("default_modulus: no irreducible polynomial found");
}

}  // namespace

const FieldSpec& field_make(std::int64_t q, int m, const std::optional<std::vector<std::int64_t>>& modulus) {
    require(is_prime(q), "field_make: characteristic must be prime, got " + std::to_string(q));
    require(m >= 1, "field_make: degree must be positive");
    if (m == 1) {
        require(!modulus.has_value(), "field_make: a prime field takes no modulus");
        Registry& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        auto key = std::make_tuple(q, 1, std::vector<std::int64_t>{});
        auto it = reg.specs.find(key);
        if (it == reg.specs.end()) {
            auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
            spec->kind_ = FieldKind::Prime;
            spec->characteristic_ = q;
            spec->degree_ = 1;
            spec->cardinality_ = q;
            it = reg.specs.emplace(key, std::move(spec)).first;
        }
        return *it->second;
    }

    std::vector<std::int64_t> mod = modulus.has_value() ? *modulus : default_modulus(q, m);
    for (auto& c : mod) c = mod_reduce(c, q);
    require(static_cast<int>(mod.size()) == m + 1, "field_make: modulus degree does not match the field degree");
    require(mod.back() == 1, "field_make: modulus must be monic");
    {
        const FieldSpec& zq = field_make(q, 1);
        require(poly_is_irreducible(Poly::from_integers(zq, mod)),
                "field_make: modulus is reducible over GF(" + std::to_string(q) + ")");
    }

    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(q, m, mod);
    auto it = reg.specs.find(key);
    if (it == reg.specs.end()) {
        auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
        spec->kind_ = FieldKind::Extension;
        spec->characteristic_ = q;
        spec->degree_ = m;
        spec->modulus_ = mod;
        spec->cardinality_ = 1;
        for (int i = 0; i < m; ++i) spec->cardinality_ *= q;
        spec->cyclotomic_p_ = phi_p_of(mod);
        it = reg.specs.emplace(key, std::move(spec)).first;
    }
    return *it->second;
}

const FieldSpec& field_make_cyclotomic(std::int64_t p) {
    require(is_prime(p) && p >= 3, "field_make_cyclotomic: p must be a prime >= 3");
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(std::int64_t{0}, static_cast<int>(p - 1), cyclotomic_modulus(p));
    auto it = reg.specs.find(key);
    if (it == reg.specs.end()) {
        auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
        spec->kind_ = FieldKind::Cyclotomic;
        spec->characteristic_ = 0;
        spec->degree_ = static_cast<int>(p - 1);
        spec->modulus_ = cyclotomic_modulus(p);
        spec->cardinality_ = 0;
        spec->cyclotomic_p_ = p;
        it = reg.specs.emplace(key, std::move(spec)).first;
    }
    return *it->second;
}

// ---------------------------------------------------------------------------
// Orders and roots of unity

std::int64_t element_order(const FieldElement& a) {
    const FieldSpec& f = a.field();
    if (!f.is_finite()) throw std::invalid_argument("element_order: finite fields only");
    if (a.is_zero()) throw std::invalid_argument("element_order: zero has no multiplicative order");
    FieldElement cur = a;
    std::int64_t order = 1;
    const FieldElement one = f.one();
    mpz_class bound = f.cardinality() - 1;
    while (!(cur == one)) {
        cur = cur * a;
        ++order;
        if (bound.fits_slong_p() && order > bound.get_si()) {
            throw std::logic_error("element_order: exceeded group order");
        }
    }
    return order;
}

FieldElement find_root_of_unity(const FieldSpec& field, std::int64_t p,
                                const std::optional<FieldElement>& override_omega) {
    require(is_prime(p), "find_root_of_unity: p must be prime");
    require(field.is_finite(), "find_root_of_unity: finite fields only (the cyclotomic field fixes omega = x)");
    mpz_class group = field.cardinality() - 1;
    require(group % p == 0,
            "find_root_of_unity: " + std::to_string(p) + " does not divide |" + field.describe() + "*|");
    if (override_omega.has_value()) {
        const FieldElement& w = *override_omega;
        require(&w.field() == &field, "find_root_of_unity: override element belongs to a different field");
        require(!w.is_zero() && element_order(w) == p, "find_root_of_unity: override element does not have order p");
        return w;
    }
    if (field.cyclotomic_p() == p) return field.generator_x();
    // Fixed enumeration: encodings 2, 3, ... (prime fields: integers 2..q-1).
    mpz_class card = field.cardinality();
    for (std::uint64_t enc = 2;; ++enc) {
        if (card.fits_ulong_p() && enc >= card.get_ui()) break;
        FieldElement cand = field.element_from_encoding(enc);
        if (cand.pow(p).is_one() && !cand.is_one()) return cand;
    }
    throw std::logic_error("find_root_of_unity: no element of the requested order (unreachable for valid input)");
}

}  // namespace mdscodex
