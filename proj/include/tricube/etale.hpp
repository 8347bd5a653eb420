#ifndef TRICUBE_ETALE_HPP
#define TRICUBE_ETALE_HPP

#include <optional>
#include <stdexcept>

#include "tricube/poly.hpp"

namespace tricube {

// Raised when inversion meets a zero divisor of a non-field etale algebra;
// carries the nontrivial gcd with the modulus as the witness.
class non_invertible_error : public std::domain_error {
  public:
    non_invertible_error(std::string what, Poly witness)
        : std::domain_error(std::move(what)), witness_(std::move(witness)) {}
    const Poly& witness() const { return witness_; }

  private:
    Poly witness_;
};

// An element of Q[x]/(m) for m monic squarefree of degree 1..3, stored as the
// reduced representative. Degree 3 is all the singular-fibre residue fields of
// a cubic-surface conic bundle ever need.
class EtaleElement {
  public:
    EtaleElement(Poly modulus, Poly value);
    static EtaleElement generator(const Poly& modulus);
    static EtaleElement constant(const Poly& modulus, const Rat& c);

    const Poly& modulus() const { return mod_; }
    const Poly& value() const { return val_; }
    bool is_zero() const { return val_.is_zero(); }
    bool is_rational() const { return val_.degree() <= 0; }
    Rat rational_value() const;  // requires is_rational()
    int algebra_degree() const { return mod_.degree(); }

    EtaleElement operator+(const EtaleElement& o) const;
    EtaleElement operator-(const EtaleElement& o) const;
    EtaleElement operator*(const EtaleElement& o) const;
    EtaleElement operator*(const Rat& s) const;
    EtaleElement operator-() const;
    bool operator==(const EtaleElement& o) const;
    bool operator!=(const EtaleElement& o) const { return !(*this == o); }

  private:
    Poly mod_;
    Poly val_;
};

// Multiplicative inverse; throws non_invertible_error on zero divisors.
EtaleElement etale_inverse(const EtaleElement& e);

// N(h(theta)) = Res(modulus, h); multiplicative, c -> c^deg for constants.
Rat etale_norm(const EtaleElement& e);

// Square root inside the algebra when the modulus has degree <= 2 and is
// irreducible (or linear); nullopt means provably not a square. Degree-3
// residue fields are not supported (factorization over number fields is out
// of scope) and are rejected.
std::optional<EtaleElement> etale_sqrt(const EtaleElement& e);

}  // namespace tricube

#endif
