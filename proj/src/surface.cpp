#include "tricube/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tricube {

Poly CubicInput::f() const {
    return Poly::from_int_coeffs({a0, a1, a2, Int(1)});
}

DepressedSurface DepressedSurface::make(const Int& a, const Rat& b, const Rat& n) {
    DepressedSurface s;
    s.a = a;
    s.b = b;
    s.n = n;
    s.d = Rat(3) * b - n;
    return s;
}

std::pair<Int, Int> DepressedSurface::integral_model() const {
    Int k = rat_den(d);
    return {a * k * k, rat_num(d) * k * k};
}

DepressedSurface normalize(const CubicInput& in) {
    Int a = 9 * in.a1 - 3 * in.a2 * in.a2;
    Int c = 2 * in.a2 * in.a2 * in.a2 - 9 * in.a1 * in.a2 + 27 * in.a0;
    // 27*f((u - a2)/3) must equal u^3 + a*u + c; anything else is a build-stopping bug.
    Poly shifted(std::vector<Rat>{make_rat(-in.a2, 3), make_rat(1, 3)});
    Poly lhs = in.f().compose(shifted) * Rat(27);
    Poly rhs(std::vector<Rat>{Rat(c), Rat(a), Rat(0), Rat(1)});
    if (lhs != rhs)
        throw std::logic_error("normalize: substitution identity failed");
    Rat n_prime = Rat(27 * in.n - 3 * c);
    DepressedSurface s = DepressedSurface::make(a, Rat(0), n_prime);
    s.provenance = in;
    return s;
}

bool reduces_to_cubes(const CubicInput& in) {
    return 3 * in.a1 - in.a2 * in.a2 == 0;
}

Int sum_of_cubes_rhs(const CubicInput& in) {
    if (!reduces_to_cubes(in))
        throw std::invalid_argument("sum_of_cubes_rhs: 3*a1 - a2^2 != 0");
    Int c0 = in.a2 / 3;  // 3 | a2 whenever a2 != 0
    if (3 * c0 != in.a2 && in.a2 != 0)
        throw std::logic_error("sum_of_cubes_rhs: a2 not divisible by 3");
    Poly shifted(std::vector<Rat>{Rat(-c0), Rat(1)});
    Poly lhs = in.f().compose(shifted);
    Poly rhs(std::vector<Rat>{Rat(in.a0 - c0 * c0 * c0), Rat(0), Rat(0), Rat(1)});
    if (lhs != rhs)
        throw std::logic_error("sum_of_cubes_rhs: shift identity failed");
    return in.n - 3 * in.a0 + 3 * c0 * c0 * c0;
}

ResolventPair build_resolvents(const DepressedSurface& s) {
    Rat a(s.a), d = s.d;
    ResolventPair r;
    r.f1 = Poly(std::vector<Rat>{d, a, Rat(0), Rat(1)});
    r.f2 = Poly(std::vector<Rat>{Rat(27) * d * d + Rat(4) * a * a * a,
                                 Rat(36) * a * a, Rat(-12) * a, Rat(1)});
    return r;
}

DiscriminantTriple discriminant_triple(const DepressedSurface& s) {
    Rat a(s.a), d = s.d;
    Rat p = Rat(4) * a * a * a + Rat(27) * d * d;
    Rat q = Rat(4) * a * a * a + Rat(3) * d * d;
    DiscriminantTriple t;
    t.d1 = -p;
    t.d2 = Rat(-243) * p * q;
    t.d3 = (p != 0) ? Rat(243) * q : Rat(0);
    t.sq1 = is_square_rat(t.d1);
    t.sq2 = is_square_rat(t.d2);
    t.sq3 = is_square_rat(t.d3);
    return t;
}

bool is_smooth(const DepressedSurface& s) {
    return discriminant_triple(s).d2 != 0;
}

std::string to_string(GaloisLabel label) {
    switch (label) {
        case GaloisLabel::S3xS3: return "S3xS3";
        case GaloisLabel::C2xS3_f1_reducible: return "C2xS3_f1_reducible";
        case GaloisLabel::SumOfCubes: return "SumOfCubes";
        case GaloisLabel::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string group_to_string(const FiniteAbelianGroup& g) {
    if (g.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << g[i];
    }
    return os.str();
}

GaloisClassification classify_galois(const DepressedSurface& s) {
    if (!is_smooth(s))
        throw std::invalid_argument("classify_galois: surface is not smooth");
    GaloisClassification out;
    ResolventPair res = build_resolvents(s);
    out.f1_irreducible = cubic_irreducible(res.f1);
    out.f2_irreducible = cubic_irreducible(res.f2);
    out.discs = discriminant_triple(s);
    if (s.a == 0) {
        out.label = GaloisLabel::SumOfCubes;
        return out;
    }
    if (!out.f2_irreducible) out.reasons.push_back("f2 reducible");
    if (out.discs.sq1) out.reasons.push_back("Delta1 is a square");
    if (out.discs.sq2) out.reasons.push_back("Delta2 is a square");
    if (out.discs.sq3) out.reasons.push_back("Delta3 is a square");
    if (!out.reasons.empty()) {
        out.label = GaloisLabel::Inconclusive;
        return out;
    }
    if (out.f1_irreducible) {
        out.label = GaloisLabel::S3xS3;
        out.orbit_type = {3, 3, 3, 18};
        out.h1 = table1_lookup("S3xS3", out.orbit_type);
    } else {
        out.label = GaloisLabel::C2xS3_f1_reducible;
        out.orbit_type = {1, 1, 1, 2, 2, 2, 6, 6, 6};
        out.h1 = table1_lookup("C2xS3", out.orbit_type);
    }
    return out;
}

namespace {

struct Table1Row {
    const char* group;
    std::vector<int> orbit;
    FiniteAbelianGroup h1;
};

// One entry per (group, orbit) pair of the Galois-type table; duplicate keys
// with different cohomology are real and must surface as ambiguity errors.
const std::vector<Table1Row>& table1_rows() {
    auto expand = [](std::initializer_list<std::pair<int, int>> spec) {
        std::vector<int> v;
        for (auto [size, count] : spec)
            for (int i = 0; i < count; ++i) v.push_back(size);
        return v;
    };
    static const std::vector<Table1Row> rows = {
        {"C1", expand({{1, 27}}), {}},
        {"C2", expand({{1, 15}, {2, 6}}), {}},
        {"C2", expand({{1, 3}, {2, 12}}), {2, 2}},
        {"C2", expand({{1, 3}, {2, 12}}), {}},
        {"C3", expand({{1, 9}, {3, 6}}), {}},
        {"C3", expand({{3, 9}}), {}},
        {"C3", expand({{3, 9}}), {3, 3}},
        {"C2^2", expand({{1, 3}, {2, 6}, {4, 3}}), {2}},
        {"S3", expand({{3, 3}, {6, 3}}), {2, 2}},
        {"S3", expand({{1, 9}, {3, 6}}), {}},
        {"C6", expand({{1, 3}, {2, 3}, {6, 3}}), {}},
        {"C6", expand({{3, 5}, {6, 2}}), {}},
        {"S3", expand({{1, 3}, {2, 3}, {6, 3}}), {}},
        {"S3", expand({{3, 3}, {6, 3}}), {}},
        {"S3", expand({{3, 3}, {6, 3}}), {3}},
        {"C3^2", expand({{3, 3}, {9, 2}}), {3}},
        {"C2xS3", expand({{3, 3}, {6, 1}, {12, 1}}), {2}},
        {"C2xS3", expand({{1, 3}, {2, 3}, {6, 3}}), {}},
        {"C3:S3", expand({{3, 3}, {18, 1}}), {}},
        {"C3xS3", expand({{3, 3}, {9, 2}}), {3}},
        {"C3xS3", expand({{3, 3}, {18, 1}}), {}},
        {"S3xS3", expand({{3, 3}, {18, 1}}), {}},
    };
    return rows;
}

}  // namespace

FiniteAbelianGroup table1_lookup(const std::string& group,
                                 const std::vector<int>& orbit_type) {
    std::vector<int> key = orbit_type;
    std::sort(key.begin(), key.end());
    std::vector<FiniteAbelianGroup> hits;
    for (const auto& row : table1_rows()) {
        if (group != row.group) continue;
        std::vector<int> o = row.orbit;
        std::sort(o.begin(), o.end());
        if (o == key) hits.push_back(row.h1);
    }
    if (hits.empty())
        throw table_lookup_error("table1_lookup: no row for (" + group + ", orbit)");
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() > 1) {
        std::ostringstream os;
        os << "table1_lookup: ambiguous key (" << group << ", orbit): candidates";
        for (const auto& h : hits) os << " " << group_to_string(h);
        throw table_lookup_error(os.str());
    }
    return hits.front();
}

std::string to_string(BrauerVerdict::Value v) {
    switch (v) {
        case BrauerVerdict::Value::TrivialBrQ: return "TrivialBrQ";
        case BrauerVerdict::Value::ZmodThreeAlgebraic: return "ZmodThree_algebraic";
        case BrauerVerdict::Value::Unknown: return "Unknown";
    }
    return "?";
}

BrauerVerdict brauer_X(const DepressedSurface& s) {
    if (!is_smooth(s))
        throw std::invalid_argument("brauer_X: surface is not smooth");
    GaloisClassification cls = classify_galois(s);
    BrauerVerdict v;
    v.target = BrauerVerdict::Target::X;
    switch (cls.label) {
        case GaloisLabel::S3xS3:
            v.value = BrauerVerdict::Value::TrivialBrQ;
            v.justification = {"Gal(K/Q) = S3xS3 with orbit type [3,3,3,18]: H1 = 0"};
            break;
        case GaloisLabel::C2xS3_f1_reducible:
            v.value = BrauerVerdict::Value::TrivialBrQ;
            v.justification = {"Gal(K/Q) = C2xS3 with f1 reducible: H1 = 0"};
            break;
        case GaloisLabel::SumOfCubes:
            if (cls.f1_irreducible) {
                v.value = BrauerVerdict::Value::ZmodThreeAlgebraic;
                v.justification = {"a = 0 with f1 irreducible: Br X/Br Q = Z/3 "
                                   "(external result; class not constructed here)"};
            } else {
                v.value = BrauerVerdict::Value::Unknown;
                v.justification = {"a = 0 with f1 reducible: outside the computed cases"};
            }
            break;
        case GaloisLabel::Inconclusive:
            v.value = BrauerVerdict::Value::Unknown;
            for (const auto& r : cls.reasons)
                v.justification.push_back("n in exceptional set: " + r);
            break;
    }
    return v;
}

BrauerVerdict brauer_U(const DepressedSurface& s) {
    if (!is_smooth(s))
        throw std::invalid_argument("brauer_U: surface is not smooth");
    DiscriminantTriple t = discriminant_triple(s);
    BrauerVerdict v = brauer_X(s);
    v.target = BrauerVerdict::Target::U;
    if (t.sq1) {
        v.value = BrauerVerdict::Value::Unknown;
        v.justification = {"disc f1 is a square: Br X -> Br U isomorphism hypothesis fails"};
        return v;
    }
    v.justification.push_back("disc f1 non-square: Br X -> Br U is an isomorphism");
    return v;
}

namespace {

Rat delta2_at(const Int& a, const Int& d) {
    Rat aa(a), dd(d);
    return Rat(-243) * (Rat(4) * aa * aa * aa + Rat(27) * dd * dd) *
           (Rat(4) * aa * aa * aa + Rat(3) * dd * dd);
}

void push_n(std::vector<Int>& v, const Int& b, const Int& d) { v.push_back(3 * b - d); }

void sort_unique(std::vector<Int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ExceptionalSet exceptional_set(const Int& a, const Int& b, const Int& bound,
                               int window_multiplier) {
    if (a == 0)
        throw std::invalid_argument("exceptional_set: a = 0 is routed elsewhere");
    if (window_multiplier < 1)
        throw std::invalid_argument("exceptional_set: window multiplier must be >= 1");
    ExceptionalSet out;
    out.search_bound = bound;
    Int a3_4 = 4 * a * a * a;

    // Singular n: 27 d^2 = -4a^3 m^2 for m in {1, 3}.
    for (Int m2 : {Int(1), Int(9)}) {
        Int num = -a3_4 * m2;
        if (num <= 0 || num % 27 != 0) continue;
        SqrtResult r = integer_sqrt(num / 27);
        if (!r.exact) continue;
        push_n(out.singular_n, b, r.root);
        if (r.root != 0) push_n(out.singular_n, b, -r.root);
    }
    sort_unique(out.singular_n);

    // Delta1 = -(4a^3 + 27 d^2) >= 0 forces 27 d^2 <= -4a^3 (empty for a > 0).
    if (a < 0) {
        Int window = integer_sqrt(-a3_4 / 27).root + 1;
        window *= window_multiplier;
        for (Int d = -window; d <= window; ++d) {
            Rat v = Rat(-(a3_4 + 27 * d * d));
            if (v >= 0 && is_square_rat(v)) push_n(out.d1_square_n, b, d);
        }
        sort_unique(out.d1_square_n);

        // Delta2 >= 0 exactly on the window -4a^3/27 <= d^2 <= -4a^3/3.
        Int w2 = integer_sqrt(-a3_4 / 3).root + 1;
        w2 *= window_multiplier;
        for (Int d = -w2; d <= w2; ++d) {
            if (is_square_rat(delta2_at(a, d))) push_n(out.d2_square_n, b, d);
        }
        sort_unique(out.d2_square_n);
    }

    // Delta3 square and nonzero forces 3 | a and w^2 - d^2 = 36 (a/3)^3.
    if (a % 3 == 0) {
        Int ap = a / 3;
        Int N = 36 * ap * ap * ap;
        for (const Int& e0 : divisors(N)) {
            for (int se : {1, -1}) {
                Int e = se * e0;
                Int f = N / e;
                if ((e + f) % 2 != 0) continue;
                Int d = (f - e) / 2;
                Rat a3 = Rat(4) * Rat(a) * Rat(a) * Rat(a);
                Rat d3 = (a3 + Rat(27) * Rat(d) * Rat(d) != 0)
                             ? Rat(243) * (a3 + Rat(3) * Rat(d) * Rat(d))
                             : Rat(0);
                if (is_square_rat(d3)) push_n(out.d3_square_n, b, d);
            }
        }
    }
    // Delta1 = 0 makes Delta3 = 0, which is a square.
    for (const Int& n : out.singular_n) {
        Int d = 3 * b - n;
        if (a3_4 + 27 * d * d == 0) out.d3_square_n.push_back(n);
    }
    sort_unique(out.d3_square_n);

    // f2 reducibility: exact root test for each |n| <= bound, supplemented by
    // the x-side sweep 27 d^2 = -(x^3 - 12a x^2 + 36a^2 x + 4a^3) over |x| <= bound,
    // which also catches members beyond the n-window. Completeness over all of
    // Z is out of reach (Siegel's theorem is ineffective), hence the flag.
    for (Int n = -bound; n <= bound; ++n) {
        DepressedSurface s = DepressedSurface::make(a, Rat(b), Rat(n));
        Poly f2 = build_resolvents(s).f2;
        if (!rational_roots(f2).empty()) out.f2_reducible_n.push_back(n);
    }
    for (Int x = -bound; x <= bound; ++x) {
        Int rhs = -(x * x * x - 12 * a * x * x + 36 * a * a * x + a3_4);
        if (rhs < 0 || rhs % 27 != 0) continue;
        SqrtResult r = integer_sqrt(rhs / 27);
        if (!r.exact) continue;
        push_n(out.f2_reducible_n, b, r.root);
        push_n(out.f2_reducible_n, b, -r.root);
    }
    sort_unique(out.f2_reducible_n);
    out.f2_complete = false;
    return out;
}

std::optional<SurfacePoint> rational_point_from_f1_root(const DepressedSurface& s) {
    Poly f1 = build_resolvents(s).f1;
    std::vector<Rat> roots = rational_roots_q(f1);
    if (roots.empty()) return std::nullopt;
    // Canonical choice: smallest |root|, ties broken toward the nonnegative one.
    Rat r = roots.front();
    for (const Rat& c : roots) {
        Rat ar = r < 0 ? Rat(-r) : r, ac = c < 0 ? Rat(-c) : c;
        if (ac < ar || (ac == ar && c > r)) r = c;
    }
    SurfacePoint pt;
    pt.depressed = {r, Rat(0), Rat(0)};
    if (s.provenance) {
        const CubicInput& in = *s.provenance;
        // u_original = (u_depressed - a2)/3 coordinate-wise.
        Rat c1 = (r - Rat(in.a2)) / 3, c2 = Rat(-in.a2) / 3;
        if (is_integer(c1) && is_integer(c2)) {
            pt.original = {rat_num(c1), rat_num(c2), rat_num(c2)};
            pt.integral_on_original = true;
        }
    } else if (is_integer(r)) {
        pt.original = {rat_num(r), Int(0), Int(0)};
        pt.integral_on_original = true;
    }
    return pt;
}

namespace {

using EPoly = std::vector<EtaleElement>;  // dense, coefficients in l

EPoly epoly_trim(EPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

EPoly epoly_mul(const EPoly& f, const EPoly& g, const EtaleElement& zero) {
    if (f.empty() || g.empty()) return {};
    EPoly out(f.size() + g.size() - 1, zero);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    return epoly_trim(out);
}

EPoly epoly_add(const EPoly& f, const EPoly& g, const EtaleElement& zero) {
    EPoly out(std::max(f.size(), g.size()), zero);
    for (size_t i = 0; i < f.size(); ++i) out[i] = out[i] + f[i];
    for (size_t i = 0; i < g.size(); ++i) out[i] = out[i] + g[i];
    return epoly_trim(out);
}

// remainder of f modulo g; leading coefficient of g must be invertible in l
EPoly epoly_mod(EPoly f, const EPoly& g, const EtaleElement& zero) {
    EtaleElement lead_inv = etale_inverse(g.back());
    f = epoly_trim(std::move(f));
    while (f.size() >= g.size()) {
        EtaleElement c = f.back() * lead_inv;
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            f[i + shift] = f[i + shift] - c * g[i];
        f = epoly_trim(std::move(f));
    }
    return f;
}

}  // namespace

bool verify_resolvent_identity(const DepressedSurface& s) {
    ResolventPair res = build_resolvents(s);
    if (!is_squarefree(res.f1))
        throw std::invalid_argument("verify_resolvent_identity: f1 not separable");
    // Residue ring for r: a rational root when one exists, else l = Q[x]/(f1).
    std::vector<Rat> roots = rational_roots_q(res.f1);
    Poly modulus = roots.empty() ? res.f1
                                 : Poly(std::vector<Rat>{-roots.front(), Rat(1)});
    EtaleElement r = EtaleElement::generator(modulus);
    auto cst = [&](const Rat& c) { return EtaleElement::constant(modulus, c); };
    EtaleElement zero = cst(Rat(0));
    Rat a(s.a);
    EtaleElement r2 = r * r;
    EtaleElement g1_lead = cst(a);                       // a*y^3 + ...
    EtaleElement c4a3r2 = r2 * Rat(3) + cst(Rat(4) * a); // 4a + 3r^2
    EPoly g1 = {c4a3r2, -(r2 * Rat(3)), r2 * Rat(3), g1_lead};
    g1 = epoly_trim(std::move(g1));  // a = 0 degenerates to the quadratic case
    EPoly xi = {c4a3r2, -(r2 * Rat(3) - cst(a)), cst(-a)};
    xi = epoly_trim(std::move(xi));
    // f2(xi(y)) mod g1 via Horner over l[y].
    EPoly acc;
    for (int i = res.f2.degree(); i >= 0; --i) {
        acc = epoly_mul(acc, xi, zero);
        acc = epoly_add(acc, EPoly{cst(res.f2.coeff(i))}, zero);
        acc = epoly_mod(std::move(acc), g1, zero);
    }
    return acc.empty();
}

}  // namespace tricube
