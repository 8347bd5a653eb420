#ifndef TRICUBE_BUNDLE_HPP
#define TRICUBE_BUNDLE_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tricube/local.hpp"
#include "tricube/surface.hpp"

namespace tricube {

// Homogeneous binary form in (s, t); coefficient k multiplies s^(deg-k) t^k.
class BinaryForm {
  public:
    BinaryForm() = default;
    BinaryForm(int deg, std::vector<Rat> coeffs);
    static BinaryForm zero(int deg);

    int deg() const { return deg_; }
    const Rat& coeff(int k) const { return c_[k]; }
    bool is_zero() const;

    BinaryForm operator+(const BinaryForm& o) const;  // degrees must match
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const Rat& s) const;
    bool operator==(const BinaryForm& o) const;

    Rat eval(const Rat& s, const Rat& t) const;
    EtaleElement eval_etale(const EtaleElement& s, const EtaleElement& t) const;
    // P(lambda) = F(1, lambda); the degree drop is the multiplicity of (s).
    Poly dehomogenize() const;

  private:
    int deg_ = 0;
    std::vector<Rat> c_;  // size deg_+1
};

// A closed point of P^1 carrying a singular fibre: either the zero set of a
// monic irreducible polynomial in lambda = t/s, or the point (s) at infinity.
struct ClosedPoint {
    bool at_infinity = false;
    Poly min_poly;  // finite chart only; monic irreducible, degree 1..3

    int degree() const { return at_infinity ? 1 : min_poly.degree(); }
    // Primitive integral homogeneous label, e.g. "(t)", "(s+t)", "(2s+t)",
    // "(16s^2-10st+7t^2)".
    std::string label() const;
    bool operator==(const ClosedPoint& o) const;
};

struct FibreData {
    ClosedPoint point;
    EtaleElement a_p;        // splitting class in k(p)* modulo squares
    SquareClass norm_class;  // class of N_{k(p)/Q}(a_p)
    // square test inside k(p); only decided for residue fields of degree <= 2
    std::optional<bool> a_p_is_square;
};

struct EpsilonGroup {
    std::vector<std::vector<int>> basis;      // 0/1 vectors over all points
    std::vector<size_t> trivial_directions;   // indices with norm_class 1
};

// How the A^1-coordinate is read off a surface point.
struct ParamConvention {
    enum class Kind {
        Pencil,           // lambda = l1/l2 with fallback -C2/C1
        CoordinateRatio,  // lambda = x[num_index]/x[den_index] (fixture pin)
    };
    Kind kind = Kind::Pencil;
    int num_index = 3;
    int den_index = 1;
    std::string describe() const;
};

// One quaternion symbol (lambda - tau, a); the point at infinity uses the
// reciprocal slot (1/lambda, a).
struct CBSymbol {
    bool tau_infinity = false;
    Rat tau;
    Int a;  // squarefree
};

struct BrauerClassCB {
    std::vector<int> epsilon;
    std::vector<CBSymbol> symbols;
    ParamConvention convention;
    std::vector<std::string> notes;  // e.g. omitted trivial symbols
};

// Points in projective coordinates (x0, x1, x2, x3).
using ProjPoint = std::array<Rat, 4>;

struct BundleData {
    DepressedSurface surface;
    Rat r;  // rational root of f1
    // Gram matrices (bilinear, halves on the off-diagonal) of the residual
    // quadrics C1 = x2^2 - x2 x3 + x3^2 + a x0^2 and
    // C2 = x1^2 + r x0 x1 + (r^2 + a) x0^2, with G = l1*C1 + l2*C2.
    std::array<std::array<Rat, 4>, 4> gram1{}, gram2{};
    std::array<std::array<BinaryForm, 3>, 3> T;  // generic-fibre Gram
    BinaryForm delta;                            // det T, degree 5

    Rat l1(const ProjPoint& x) const;  // x2 + x3
    Rat l2(const ProjPoint& x) const;  // x1 - r*x0
    Rat C1(const ProjPoint& x) const;
    Rat C2(const ProjPoint& x) const;
};

class bundle_inconsistency : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class evaluation_refused : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Verifies f1(r) = 0 and smoothness, builds the pencil decomposition and the
// generic Gram matrix, and checks det T = (3/4) t (t+s) R(s,t) against the
// closed-form singular-fibre cubic R.
BundleData build_bundle(const DepressedSurface& s, const Rat& r);

// The five geometric singular fibres as closed points (degrees sum to 5),
// canonically ordered: infinity chart first, then by (degree, coefficients).
std::vector<ClosedPoint> singular_locus(const BundleData& b);

// Specializes T at the point, extracts the rank-2 form <alpha, beta> by
// symmetric elimination (pivot order configurable for the path-independence
// check), and returns a_p = -alpha*beta with its norm class.
FibreData splitting_class(const BundleData& b, const ClosedPoint& p,
                          const std::array<int, 3>& pivot_order = {0, 1, 2});

std::vector<FibreData> all_fibres(const BundleData& b);

// Kernel basis of the GF(2) system prod norm_class^eps = square, with the
// norm-class-1 coordinates zeroed out and reported as trivial directions.
EpsilonGroup epsilon_group(const std::vector<FibreData>& fibres);

// Symbol list for an epsilon vector in the span; points with eps = 1 must
// have degree 1 (corestriction at higher-degree points is data-only).
BrauerClassCB brauer_class(const BundleData& b, const std::vector<FibreData>& fibres,
                           const std::vector<int>& epsilon);

bool on_surface(const DepressedSurface& s, const ProjPoint& x);

struct ParamValue {
    enum class Kind { Finite, Infinity, Undefined } kind = Kind::Undefined;
    Rat value;
};
ParamValue parameter_at(const BundleData& b, const ParamConvention& conv,
                        const ProjPoint& x);

// Sum of hilbert(lambda - tau, a, v) over the symbols; refuses (by exception)
// when the parameter is undefined or a slot vanishes.
Rat evaluate_class(const BrauerClassCB& cls, const BundleData& b, const ProjPoint& x,
                   const Place& v);

struct WeakApproxScan {
    std::vector<std::optional<Rat>> sample_invariants;  // nullopt = refused sample
    std::vector<Rat> attained;                          // sorted, unique
    bool fails_weak_approximation = false;              // |attained| >= 2
};

// Samples must lie on the surface (exact check); verdict is only claimed when
// the invariant map provably takes two values at v.
WeakApproxScan weak_approx_scan(const BrauerClassCB& cls, const BundleData& b,
                                const Place& v, const std::vector<ProjPoint>& samples);

}  // namespace tricube

#endif
