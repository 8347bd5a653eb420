#ifndef TRICUBE_CASEBOOK_HPP
#define TRICUBE_CASEBOOK_HPP

#include <optional>
#include <string>
#include <vector>

#include "tricube/bundle.hpp"
#include "tricube/local.hpp"
#include "tricube/surface.hpp"

namespace tricube {

struct TheoremReport {
    enum class Verdict { Reproduced, Failed, Inapplicable };
    std::string claim;
    std::string inputs;
    Verdict verdict = Verdict::Failed;
    std::string failed_step;  // set when Failed
    std::string reason;       // set when Inapplicable
    std::vector<std::string> notes;

    // payloads, filled as applicable
    int branch = 0;  // tetrahedral: 1 integral point, 2 trivial Brauer + ELS
    std::optional<std::array<Int, 3>> integral_point;
    std::optional<AdelicCertificate> adelic;
    std::vector<std::string> locus_labels;
    std::vector<Int> splitting_norm_classes;
    std::vector<int> epsilon;
    std::vector<Rat> attained_invariants;
};
std::string to_string(TheoremReport::Verdict v);

// u(u+1)(u+2) summed three times against 6n: either an explicit integral
// point from a root of f1 = x^3 - x - 6n, or trivial Brauer group plus an
// everywhere-local certificate.
TheoremReport verify_tetrahedral(const Int& n, int depth = 4);

struct TetrahedralRangeSummary {
    Int lo, hi;
    long integral_point_branch = 0;
    long brauer_els_branch = 0;
    std::vector<Int> failures;
};
TetrahedralRangeSummary tetrahedral_range(const Int& lo, const Int& hi, int depth = 4);

// The conic-bundle worked example on x1^3+x2^3+x3^3+21(x1+x2+x3) = 50:
// singular locus, splitting classes, the unique epsilon, the symbol class,
// and the real invariants at the two pinned points.
TheoremReport reproduce_u50(const Int& n = Int(50));

struct RationalityReport {
    bool applicable = false;
    bool minimal = false;
    bool non_rational = false;
    std::string justification;
};

// Minimality (hence non-rationality) from the S3xS3 orbit structure: the
// size-3 orbits are coplanar triangles and an orbit of size > 6 cannot be
// pairwise skew.
RationalityReport rationality_report(const DepressedSurface& s);

}  // namespace tricube

#endif
