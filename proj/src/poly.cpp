#include "tricube/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tricube {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
    return c == 0 ? Poly() : Poly(std::vector<Rat>{c});
}

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::from_int_coeffs(const std::vector<Int>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) c.emplace_back(z);
    return Poly(std::move(c));
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat Poly::leading() const {
    if (is_zero()) throw std::logic_error("Poly::leading: zero polynomial");
    return c_.back();
}

bool Poly::has_integer_coeffs() const {
    for (const auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::logic_error("Poly::monic: zero polynomial");
    return *this * (Rat(1) / leading());
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = c > 0 ? c : Rat(-c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
    Poly r = a;
    std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1), Rat(0));
    Rat lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.leading() / lb;
        q[k] = f;
        std::vector<Rat> shift(k + b.degree() + 1, Rat(0));
        for (int i = 0; i <= b.degree(); ++i) shift[i + k] = b.coeff(i) * f;
        r = r - Poly(std::move(shift));
    }
    return {Poly(std::move(q)), r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = poly_divmod(f, g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

Rat resultant_rec(const Poly& f, const Poly& g) {
    // Res(f,g) = lc(f)^deg(g) * prod over roots of f of g; Euclid on (f, g).
    if (g.degree() == 0) {
        Rat lg = g.leading(), r(1);
        for (int i = 0; i < f.degree(); ++i) r *= lg;
        return r;
    }
    if (f.degree() == 0) {
        Rat lf = f.leading(), r(1);
        for (int i = 0; i < g.degree(); ++i) r *= lf;
        return r;
    }
    if (f.degree() < g.degree()) {
        Rat s = (f.degree() % 2 == 1 && g.degree() % 2 == 1) ? Rat(-1) : Rat(1);
        return s * resultant_rec(g, f);
    }
    Poly r = poly_divmod(f, g).second;
    if (r.is_zero()) return Rat(0);
    Rat lg = g.leading(), scale(1);
    for (int i = 0; i < f.degree() - r.degree(); ++i) scale *= lg;
    Rat s = (f.degree() % 2 == 1 && g.degree() % 2 == 1) ? Rat(-1) : Rat(1);
    return s * scale * resultant_rec(g, r);
}

}  // namespace

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return Rat(1);
    return resultant_rec(f, g);
}

Rat cubic_discriminant(const Poly& f) {
    if (f.degree() != 3 || !f.is_monic())
        throw std::invalid_argument("cubic_discriminant: monic cubic required");
    Rat p = f.coeff(2), q = f.coeff(1), r = f.coeff(0);
    return Rat(18) * p * q * r - Rat(4) * p * p * p * r + p * p * q * q -
           Rat(4) * q * q * q - Rat(27) * r * r;
}

std::vector<Int> rational_roots(const Poly& f) {
    if (f.is_zero() || !f.is_monic() || !f.has_integer_coeffs())
        throw std::invalid_argument("rational_roots: monic integer polynomial required");
    std::vector<Int> roots;
    Poly g = f;
    // Peel zero roots first, then test the divisors of the constant term.
    if (g.degree() > 0 && g.coeff(0) == 0) {
        roots.push_back(Int(0));
        while (g.degree() > 0 && g.coeff(0) == 0)
            g = poly_divmod(g, Poly::x()).first;
    }
    if (g.degree() > 0) {
        Int c0 = rat_num(g.coeff(0));
        for (const Int& d : divisors(c0)) {
            for (int sgn : {1, -1}) {
                Int cand = sgn * d;
                if (g.eval(Rat(cand)) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rat> rational_roots_q(const Poly& f) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("rational_roots_q: monic polynomial required");
    // x = y/m turns a monic rational polynomial into a monic integer one.
    Int m = 1;
    for (int i = 0; i < f.degree(); ++i) {
        Int d = rat_den(f.coeff(i));
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        m = m / g * d;
    }
    int n = f.degree();
    std::vector<Rat> c(n + 1);
    Int mk = 1;
    for (int i = n; i >= 0; --i) {
        c[i] = f.coeff(i) * Rat(mk);
        mk *= m;
    }
    Poly g(std::move(c));
    std::vector<Rat> roots;
    for (const Int& r : rational_roots(g)) roots.push_back(make_rat(r, m));
    return roots;
}

Poly CubicFactorization::product() const {
    Poly p = Poly::constant(unit);
    for (const auto& f : factors) p = p * f;
    return p;
}

CubicFactorization factor_cubic(const Poly& f) {
    if (f.degree() != 3) throw std::invalid_argument("factor_cubic: cubic required");
    CubicFactorization out;
    out.unit = f.leading();
    Poly g = f.monic();
    std::vector<Rat> roots = rational_roots_q(g);
    std::vector<Poly> linear;
    for (const Rat& r : roots) {
        Poly lin(std::vector<Rat>{-r, Rat(1)});
        while (true) {
            auto [q, rem] = poly_divmod(g, lin);
            if (!rem.is_zero()) break;
            linear.push_back(lin);
            g = q;
            if (g.degree() == 0) break;
        }
        if (g.degree() == 0) break;
    }
    out.factors = std::move(linear);
    if (g.degree() == 1) {
        out.factors.push_back(g);
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const Poly& a, const Poly& b) { return a.coeff(0) < b.coeff(0); });
    } else if (g.degree() == 2) {
        Rat disc = g.coeff(1) * g.coeff(1) - Rat(4) * g.coeff(0);
        if (is_square_rat(disc)) {
            // split quadratic (possible only via a repeated root missed above)
            SqrtResult sn = integer_sqrt(disc.get_num()), sd = integer_sqrt(disc.get_den());
            Rat sq = make_rat(sn.root, sd.root);
            Rat r1 = (-g.coeff(1) + sq) / 2, r2 = (-g.coeff(1) - sq) / 2;
            out.factors.push_back(Poly(std::vector<Rat>{-r1, Rat(1)}));
            out.factors.push_back(Poly(std::vector<Rat>{-r2, Rat(1)}));
            std::sort(out.factors.begin(), out.factors.end(),
                      [](const Poly& a, const Poly& b) { return a.coeff(0) < b.coeff(0); });
        } else {
            out.factors.push_back(g);
        }
    } else if (g.degree() == 3) {
        out.factors.push_back(g);  // no rational root: irreducible cubic
    }
    return out;
}

bool cubic_irreducible(const Poly& f) {
    if (f.degree() != 3 || !f.is_monic())
        throw std::invalid_argument("cubic_irreducible: monic cubic required");
    return rational_roots_q(f).empty();
}

}  // namespace tricube
