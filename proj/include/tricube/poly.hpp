#ifndef TRICUBE_POLY_HPP
#define TRICUBE_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricube/numeric.hpp"

namespace tricube {

// Dense univariate polynomial over Q. The zero polynomial has an empty
// coefficient vector; otherwise the leading coefficient is nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& c);
    static Poly x();  // the monomial of degree 1
    static Poly from_int_coeffs(const std::vector<Int>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool has_integer_coeffs() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly compose(const Poly& inner) const;  // this(inner(x))
    Poly monic() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Monic gcd.
Poly poly_gcd(const Poly& a, const Poly& b);
bool is_squarefree(const Poly& f);

// Resultant via the Euclidean identities; both inputs nonzero.
Rat resultant(const Poly& f, const Poly& g);

// disc(x^3+px^2+qx+r) = 18pqr - 4p^3r + p^2q^2 - 4q^3 - 27r^2; f monic cubic.
Rat cubic_discriminant(const Poly& f);

// Integer roots of a monic polynomial with integer coefficients (all rational
// roots of such a polynomial are integers), distinct, ascending.
std::vector<Int> rational_roots(const Poly& f);

// Rational roots of a monic polynomial over Q, distinct, ascending.
std::vector<Rat> rational_roots_q(const Poly& f);

// Factorization of a cubic over Q: unit * product of monic factors, linear
// factors first (ascending roots), then at most one irreducible quadratic, or
// the cubic itself when irreducible.
struct CubicFactorization {
    Rat unit;
    std::vector<Poly> factors;
    Poly product() const;
};
CubicFactorization factor_cubic(const Poly& f);

// A monic cubic over Q is irreducible iff it has no rational root.
bool cubic_irreducible(const Poly& f);

}  // namespace tricube

#endif
