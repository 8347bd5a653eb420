#include "tricube/etale.hpp"

namespace tricube {

namespace {

bool quadratic_irreducible(const Poly& m) {
    Rat disc = m.coeff(1) * m.coeff(1) - Rat(4) * m.coeff(0);
    return !is_square_rat(disc);
}

}  // namespace

EtaleElement::EtaleElement(Poly modulus, Poly value) : mod_(std::move(modulus)) {
    if (mod_.degree() < 1 || mod_.degree() > 3 || !mod_.is_monic())
        throw std::invalid_argument("EtaleElement: modulus must be monic of degree 1..3");
    if (!is_squarefree(mod_))
        throw std::invalid_argument("EtaleElement: modulus must be squarefree");
    val_ = poly_divmod(value, mod_).second;
}

EtaleElement EtaleElement::generator(const Poly& modulus) {
    return EtaleElement(modulus, Poly::x());
}

EtaleElement EtaleElement::constant(const Poly& modulus, const Rat& c) {
    return EtaleElement(modulus, Poly::constant(c));
}

Rat EtaleElement::rational_value() const {
    if (!is_rational()) throw std::logic_error("EtaleElement: not a rational value");
    return val_.coeff(0);
}

EtaleElement EtaleElement::operator+(const EtaleElement& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("EtaleElement: modulus mismatch");
    return EtaleElement(mod_, val_ + o.val_);
}

EtaleElement EtaleElement::operator-(const EtaleElement& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("EtaleElement: modulus mismatch");
    return EtaleElement(mod_, val_ - o.val_);
}

EtaleElement EtaleElement::operator*(const EtaleElement& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("EtaleElement: modulus mismatch");
    return EtaleElement(mod_, val_ * o.val_);
}

EtaleElement EtaleElement::operator*(const Rat& s) const {
    return EtaleElement(mod_, val_ * s);
}

EtaleElement EtaleElement::operator-() const { return EtaleElement(mod_, -val_); }

bool EtaleElement::operator==(const EtaleElement& o) const {
    return mod_ == o.mod_ && val_ == o.val_;
}

EtaleElement etale_inverse(const EtaleElement& e) {
    // extended gcd of (value, modulus) in Q[x]
    Poly r0 = e.modulus(), r1 = e.value();
    Poly s0, s1 = Poly::constant(Rat(1));  // coefficients of e.value()
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0.degree() != 0)
        throw non_invertible_error("etale_inverse: zero divisor", r0);
    return EtaleElement(e.modulus(), s0 * (Rat(1) / r0.coeff(0)));
}

Rat etale_norm(const EtaleElement& e) {
    if (e.is_zero()) return Rat(0);
    return resultant(e.modulus(), e.value());
}

std::optional<EtaleElement> etale_sqrt(const EtaleElement& e) {
    const Poly& m = e.modulus();
    if (m.degree() == 1) {
        Rat v = e.value().coeff(0);
        if (v == 0) return EtaleElement::constant(m, Rat(0));
        if (!is_square_rat(v)) return std::nullopt;
        Rat s = make_rat(integer_sqrt(v.get_num()).root, integer_sqrt(v.get_den()).root);
        return EtaleElement::constant(m, s);
    }
    if (m.degree() != 2)
        throw std::invalid_argument("etale_sqrt: only degree <= 2 residue fields supported");
    if (!quadratic_irreducible(m))
        throw std::invalid_argument("etale_sqrt: modulus must be irreducible");
    // Work in the trace-zero basis: theta' = theta + q/2 satisfies theta'^2 = D
    // with D = q^2/4 - r (non-square since m is irreducible). Write
    // e = u' + v'*theta'; a square xi = x + y*theta' must satisfy
    //   x^2 + D*y^2 = u',   2*x*y = v',
    // so x^2 and D*y^2 are the roots of z^2 - u'*z + (u'^2 - N)/4 where
    // N = u'^2 - D*v'^2 is the norm of e. N must then be a rational square.
    Rat q = m.coeff(1), r = m.coeff(0);
    Rat u = e.value().coeff(0), v = e.value().coeff(1);
    Rat D = q * q / 4 - r;
    Rat up = u - q * v / 2, vp = v;
    if (vp == 0) {
        // x*y = 0: either xi rational or xi = y*theta'.
        if (up == 0) return EtaleElement::constant(m, Rat(0));
        if (is_square_rat(up)) {
            Rat s = make_rat(integer_sqrt(up.get_num()).root, integer_sqrt(up.get_den()).root);
            return EtaleElement::constant(m, s);
        }
        Rat upD = up / D;
        if (is_square_rat(upD)) {
            Rat y = make_rat(integer_sqrt(upD.get_num()).root,
                             integer_sqrt(upD.get_den()).root);
            return EtaleElement(m, Poly(std::vector<Rat>{y * q / 2, y}));
        }
        return std::nullopt;
    }
    Rat N = up * up - D * vp * vp;
    if (!is_square_rat(N)) return std::nullopt;
    Rat mN = make_rat(integer_sqrt(N.get_num()).root, integer_sqrt(N.get_den()).root);
    for (int sign : {1, -1}) {
        Rat x2 = (up + Rat(sign) * mN) / 2;
        if (x2 <= 0 || !is_square_rat(x2)) continue;
        Rat x = make_rat(integer_sqrt(x2.get_num()).root, integer_sqrt(x2.get_den()).root);
        if (x == 0) continue;
        Rat y = vp / (2 * x);
        if (x * x + D * y * y != up) continue;
        EtaleElement xi(m, Poly(std::vector<Rat>{x + q * y / 2, y}));
        if (xi * xi == e) return xi;
    }
    return std::nullopt;
}

}  // namespace tricube
