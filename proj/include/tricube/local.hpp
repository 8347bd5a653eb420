#ifndef TRICUBE_LOCAL_HPP
#define TRICUBE_LOCAL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricube/surface.hpp"

namespace tricube {

struct Place {
    bool real = false;
    Int p;  // meaningful when !real

    static Place real_place();
    static Place finite(const Int& p);  // validates primality
    bool operator==(const Place& o) const { return real == o.real && (real || p == o.p); }
    std::string to_string() const;
};

// (a, b): the quaternion algebra slots of a class (a, b) over a completion.
struct QuaternionSymbol {
    Rat a, b;
};

// Legendre symbol by Euler's criterion; p must be an odd prime.
int legendre(const Int& a, const Int& p);

// Local invariant of the quaternion algebra (a,b) over Q_v, in {0, 1/2}:
// 0 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the completion.
Rat hilbert(const Rat& a, const Rat& b, const Place& v);

// Exact count of (u1,u2,u3) in F_p^3 with f(u1)+f(u2)+f(u3) = n, by value
// tables; refuses p above the exhaustive cap.
Int fp_count_affine(const CubicInput& in, const Int& p, unsigned long cap = 1000);

// Count of the projective surface x1^3+x2^3+x3^3 + A(x1+x2+x3)x0^2 + D x0^3
// over F_p (affine chart plus the Fermat-cubic section at infinity).
Int fp_count_projective(const Int& A, const Int& D, const Int& p,
                        unsigned long cap = 1000);

// p > 3 and p does not divide Delta2 of the integral depressed model;
// p in {2,3} are always treated as requiring explicit search.
bool good_reduction(const DepressedSurface& s, const Int& p);

struct LocalCertificate {
    enum class Status { ExplicitPoint, WeilBound, RealTrivial, Insoluble, Unknown };
    Place place;
    Status status = Status::Unknown;

    // ExplicitPoint: integer representative found modulo p^level whose exact
    // values satisfy v_p(G(x)) > 2 * min_i v_p(dG/du_i(x)) (Newton lifting),
    // or value_val = -1 when G(x) = 0 exactly over Z.
    std::array<Int, 3> point{};
    int level = 0;
    long min_partial_val = 0;
    long value_val = 0;

    Int weil_lower_bound;    // WeilBound
    int witness_level = 0;   // Insoluble: exhaustive modulo p^witness_level
    int depth_reached = 0;   // Unknown

    std::string describe() const;
};

// Smooth reduction at p >= 11: at least p^2 - 8p - ceil(2 sqrt(p)) smooth
// affine F_p-points, each Hensel-liftable.
LocalCertificate weil_certificate(const DepressedSurface& s, const Int& p);

struct LiftablePoint {
    std::array<Int, 3> point;
    int level = 1;
    long min_partial_val = 0;
    long value_val = 0;  // -1: exact integer solution
};

// Deterministic residue search (lexicographic), refining modulo p^2, ... up
// to p^depth; returns the first point passing the Newton validity test.
std::optional<LiftablePoint> find_liftable_point(const CubicInput& in, const Int& p,
                                                 int depth);

LocalCertificate certify_Zp(const CubicInput& in, const Int& p, int depth = 4);

// Plugs the certificate back into G and the partial derivatives and checks
// every claimed valuation.
bool validate_certificate(const CubicInput& in, const LocalCertificate& cert);

struct AdelicCertificate {
    enum class Verdict { Soluble, Insoluble, Unknown };
    std::vector<LocalCertificate> certificates;  // real, then finite ascending
    std::vector<Int> bad_primes;                 // p > 3 dividing Delta2
    std::string weil_note;
    Verdict verdict = Verdict::Unknown;
};
std::string to_string(AdelicCertificate::Verdict v);

// Real place, p <= 7, and all bad primes get explicit certificates; every
// other prime is covered by the Weil lower bound. Requires a smooth surface.
AdelicCertificate certify_adeles(const CubicInput& in, int depth = 4);

}  // namespace tricube

#endif
