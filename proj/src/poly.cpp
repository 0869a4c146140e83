#include "mdscodex/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace mdscodex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const FieldSpec& require_same_base(const Poly& a, const Poly& b) {
    if (&a.base() != &b.base()) throw std::invalid_argument("poly: base field mismatch");
    return a.base();
}

}  // namespace

Poly::Poly(const FieldSpec& base, std::vector<FieldElement> coeffs) : base_(&base), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        require(&c.field() == base_, "poly: coefficient from a different field");
    }
    trim();
}

Poly Poly::from_integers(const FieldSpec& base, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(base.from_integer(v));
    return Poly(base, std::move(c));
}

Poly Poly::x_pow_minus_one(const FieldSpec& base, std::int64_t p) {
    require(p >= 1, "x_pow_minus_one: exponent must be positive");
    std::vector<FieldElement> c(static_cast<std::size_t>(p) + 1, base.zero());
    c[0] = -base.one();
    c[static_cast<std::size_t>(p)] = base.one();
    return Poly(base, std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return base_->zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement Poly::leading() const {
    require(!coeffs_.empty(), "leading: zero polynomial");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

int Poly::nonzero_term_count() const {
    int t = 0;
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) ++t;
    }
    return t;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(leading().inv());
}

Poly operator+(const Poly& a, const Poly& b) {
    const FieldSpec& base = require_same_base(a, b);
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), base.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Poly(base, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldSpec& base = require_same_base(a, b);
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), base.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return Poly(base, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldSpec& base = require_same_base(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(base);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, base.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(base, std::move(c));
}

Poly Poly::scaled(const FieldElement& s) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return Poly(*base_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    const FieldSpec& base = require_same_base(a, b);
    require(!b.is_zero(), "divmod: division by the zero polynomial");
    Poly rem = a;
    std::vector<FieldElement> quot(
        static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), base.zero());
    const FieldElement lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        FieldElement factor = rem.leading() * lead_inv;
        quot[static_cast<std::size_t>(shift)] = factor;
        std::vector<FieldElement> sub(static_cast<std::size_t>(shift) + b.coeffs_.size(), base.zero());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            sub[static_cast<std::size_t>(shift) + i] = b.coeffs_[i] * factor;
        }
        rem = rem - Poly(base, std::move(sub));
    }
    return {Poly(base, std::move(quot)), rem};
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    return a.coeffs_ == b.coeffs_;
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = base_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0 || !c.is_one()) out << c.to_string();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly poly_gcd(Poly f, Poly g) {
    require_same_base(f, g);
    while (!g.is_zero()) {
        Poly r = Poly::divmod(f, g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

bool poly_is_irreducible(const Poly& f) {
    const FieldSpec& base = f.base();
    require(base.is_finite(), "poly_is_irreducible: finite base field required");
    require(f.degree() >= 1, "poly_is_irreducible: constant input");
    const int d = f.degree();
    if (d == 1) return true;

    // x^{Q^i} mod f by iterated Frobenius, Q the base field cardinality.
    const mpz_class card = base.cardinality();
    auto powmod_x = [&](const Poly& h) {
        // h^Q mod f via square and multiply on the bits of Q.
        Poly result = Poly::from_integers(base, {1});
        Poly sq = h;
        mpz_class e = card;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = Poly::divmod(result * sq, f).second;
            e >>= 1;
            if (e > 0) sq = Poly::divmod(sq * sq, f).second;
        }
        return result;
    };

    Poly x = Poly::from_integers(base, {0, 1});
    Poly h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod_x(h);
        Poly g = poly_gcd(f, h - x);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace mdscodex
