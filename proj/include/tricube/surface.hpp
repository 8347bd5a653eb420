#ifndef TRICUBE_SURFACE_HPP
#define TRICUBE_SURFACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricube/etale.hpp"
#include "tricube/poly.hpp"

namespace tricube {

// f(u) = u^3 + a2*u^2 + a1*u + a0 together with the target value n of
// f(u1)+f(u2)+f(u3) = n.
struct CubicInput {
    Int a2, a1, a0, n;
    Poly f() const;
};

// The normalized surface: u1^3+u2^3+u3^3 + a*(u1+u2+u3) + 3b = n, with
// d = 3b - n. The projective model only depends on (a, d).
struct DepressedSurface {
    Int a;
    Rat b, n, d;
    std::optional<CubicInput> provenance;  // set when produced by normalize()

    static DepressedSurface make(const Int& a, const Rat& b, const Rat& n);
    // (a, d) scaled to an integral projective model (a*k^2, d*k^3).
    std::pair<Int, Int> integral_model() const;
};

// Shift-and-scale u -> (u - a2)/3 times 27; the defining identity
// 27*f((u-a2)/3) = u^3 + (9*a1 - 3*a2^2)*u + (2*a2^3 - 9*a1*a2 + 27*a0)
// is re-verified symbolically on every call.
DepressedSurface normalize(const CubicInput& in);

// 3*a1 - a2^2 == 0: the surface is integrally isomorphic to a sum of three
// cubes and is routed to the externally known result.
bool reduces_to_cubes(const CubicInput& in);
// The N with u1^3+u2^3+u3^3 = N after the routing shift (pre: reduces_to_cubes).
Int sum_of_cubes_rhs(const CubicInput& in);

struct ResolventPair {
    Poly f1;  // x^3 + a*x + d
    Poly f2;  // x^3 - 12a*x^2 + 36a^2*x + 27d^2 + 4a^3
};
ResolventPair build_resolvents(const DepressedSurface& s);

struct DiscriminantTriple {
    Rat d1, d2, d3;           // d1 = -(4a^3+27d^2), d2 = -243(4a^3+27d^2)(4a^3+3d^2)
    bool sq1, sq2, sq3;       // rational-square flags (0 counts as square)
};
DiscriminantTriple discriminant_triple(const DepressedSurface& s);

// Smooth iff d2 != 0; equivalent to the absence of singular points (the two
// singular families are 27d^2 + 4a^3*m^2 = 0 for m in {1,3}).
bool is_smooth(const DepressedSurface& s);

enum class GaloisLabel { S3xS3, C2xS3_f1_reducible, SumOfCubes, Inconclusive };
std::string to_string(GaloisLabel label);

// Finite abelian group as its list of invariant factors; empty = trivial.
using FiniteAbelianGroup = std::vector<int>;
std::string group_to_string(const FiniteAbelianGroup& g);

struct GaloisClassification {
    bool f1_irreducible = false;
    bool f2_irreducible = false;
    DiscriminantTriple discs;
    GaloisLabel label = GaloisLabel::Inconclusive;
    std::vector<std::string> reasons;       // failed conditions when Inconclusive
    std::vector<int> orbit_type;            // empty unless label pins a row
    std::optional<FiniteAbelianGroup> h1;
};
GaloisClassification classify_galois(const DepressedSurface& s);

class table_lookup_error : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// The Galois-type table keyed on (group label, orbit multiset). Keys hit by
// several rows with different cohomology are a hard lookup error, never a
// silent pick.
FiniteAbelianGroup table1_lookup(const std::string& group,
                                 const std::vector<int>& orbit_type);

struct BrauerVerdict {
    enum class Target { X, U };
    enum class Value { TrivialBrQ, ZmodThreeAlgebraic, Unknown };
    Target target;
    Value value;
    std::vector<std::string> justification;
};
std::string to_string(BrauerVerdict::Value v);

BrauerVerdict brauer_X(const DepressedSurface& s);
BrauerVerdict brauer_U(const DepressedSurface& s);

struct ExceptionalSet {
    std::vector<Int> singular_n;       // derived bounds: provably complete
    std::vector<Int> d1_square_n;
    std::vector<Int> d2_square_n;
    std::vector<Int> d3_square_n;
    std::vector<Int> f2_reducible_n;   // bounded scan only
    bool f2_complete = false;          // Siegel is ineffective
    Int search_bound;
};

// Effective enumeration for fixed integral (a, b), a != 0. The first four
// lists come from exact window arguments; window_multiplier widens those
// windows (used by the stability test), the result must not change.
ExceptionalSet exceptional_set(const Int& a, const Int& b, const Int& bound,
                               int window_multiplier = 1);

struct SurfacePoint {
    std::array<Rat, 3> depressed;                  // point on the (a,b,n) model
    std::optional<std::array<Int, 3>> original;    // integral pullback, if any
    bool integral_on_original = false;
};

// (r, 0, 0) on the depressed model for an integer root r of f1, plus the
// pullback through u -> (u - a2)/3 with an integrality flag.
std::optional<SurfacePoint> rational_point_from_f1_root(const DepressedSurface& s);

// Checks f2(xi(y)) = 0 mod g1(y) over l = Q[x]/(f1) (or over Q at a rational
// root), with xi(y) = -(a*y^2 + (3r^2-a)*y - (4a+3r^2)) and
// g1(y) = a*y^3 + 3r^2*y^2 - 3r^2*y + (4a+3r^2).
bool verify_resolvent_identity(const DepressedSurface& s);

}  // namespace tricube

#endif
