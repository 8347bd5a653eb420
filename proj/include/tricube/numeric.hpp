#ifndef TRICUBE_NUMERIC_HPP
#define TRICUBE_NUMERIC_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricube {

// Exact arithmetic only. Int/Rat are the ambient Z and Q of every module;
// no floating point appears anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical rendering: "p/q" in lowest terms, plain "p" for integers.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

struct SqrtResult {
    Int root;    // floor(sqrt(z))
    bool exact;  // root^2 == z
};

// floor square root with exactness flag; rejects z < 0.
SqrtResult integer_sqrt(const Int& z);

bool is_perfect_square(const Int& z);
// q is the square of a rational (0 counts as a square).
bool is_square_rat(const Rat& q);

// Deterministic Miller-Rabin below 3.317e24 (13-base certificate), BPSW+MR above.
bool is_prime(const Int& n);

// Prime factorization of |n| as prime -> exponent. Trial division up to
// trial_bound, then perfect-power extraction and Brent-Pollard rho.
std::map<Int, int> factorize(const Int& n, unsigned long trial_bound = 100000);

// All positive divisors of |n|, ascending.
std::vector<Int> divisors(const Int& n);

int valuation(const Int& n, const Int& p);
int valuation(const Rat& q, const Int& p);

// A class in Q*/(Q*)^2, stored as the unique squarefree integer representative
// (sign included), plus the distinguished zero class. Two nonzero rationals map
// to the same representative exactly when their quotient is a rational square.
class SquareClass {
  public:
    static SquareClass zero() { return SquareClass(Int(0)); }
    static SquareClass of_squarefree(const Int& v) { return SquareClass(v); }

    const Int& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool operator==(const SquareClass& o) const { return v_ == o.v_; }
    bool operator!=(const SquareClass& o) const { return v_ != o.v_; }

  private:
    explicit SquareClass(Int v) : v_(std::move(v)) {}
    Int v_;
};

// Squarefree representative of a nonzero rational; zero is rejected (the zero
// class exists only through SquareClass::zero()).
SquareClass square_class(const Rat& q, unsigned long trial_bound = 100000);

}  // namespace tricube

#endif
