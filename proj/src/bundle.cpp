#include "tricube/bundle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tricube {

BinaryForm::BinaryForm(int deg, std::vector<Rat> coeffs) : deg_(deg), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != deg_ + 1)
        throw std::invalid_argument("BinaryForm: coefficient count mismatch");
}

BinaryForm BinaryForm::zero(int deg) {
    return BinaryForm(deg, std::vector<Rat>(deg + 1, Rat(0)));
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("BinaryForm: degree mismatch");
    std::vector<Rat> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return BinaryForm(deg_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("BinaryForm: degree mismatch");
    std::vector<Rat> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return BinaryForm(deg_, std::move(c));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    std::vector<Rat> c(deg_ + o.deg_ + 1, Rat(0));
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; j <= o.deg_; ++j) c[i + j] += c_[i] * o.c_[j];
    return BinaryForm(deg_ + o.deg_, std::move(c));
}

BinaryForm BinaryForm::operator*(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return BinaryForm(deg_, std::move(c));
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    return deg_ == o.deg_ && c_ == o.c_;
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
    Rat acc(0), spow(1);
    std::vector<Rat> tp(deg_ + 1, Rat(1));
    for (int i = 1; i <= deg_; ++i) tp[i] = tp[i - 1] * t;
    for (int k = deg_; k >= 0; --k) {
        acc += c_[k] * spow * tp[k];
        spow *= s;
    }
    return acc;
}

EtaleElement BinaryForm::eval_etale(const EtaleElement& s, const EtaleElement& t) const {
    EtaleElement acc = EtaleElement::constant(s.modulus(), Rat(0));
    EtaleElement spow = EtaleElement::constant(s.modulus(), Rat(1));
    std::vector<EtaleElement> tp{EtaleElement::constant(s.modulus(), Rat(1))};
    for (int i = 1; i <= deg_; ++i) tp.push_back(tp.back() * t);
    for (int k = deg_; k >= 0; --k) {
        acc = acc + spow * tp[k] * c_[k];
        spow = spow * s;
    }
    return acc;
}

Poly BinaryForm::dehomogenize() const {
    return Poly(std::vector<Rat>(c_.begin(), c_.end()));
}

std::string ClosedPoint::label() const {
    if (at_infinity) return "(s)";
    // clear denominators and render sum c_k s^(d-k) t^k with ascending k
    Int lcm(1);
    for (int i = 0; i <= min_poly.degree(); ++i) {
        Int d = rat_den(min_poly.coeff(i)), g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    int d = min_poly.degree();
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int k = 0; k <= d; ++k) {
        Int ck = rat_num(min_poly.coeff(k) * Rat(lcm));
        if (ck == 0) continue;
        if (!first) os << (ck > 0 ? "+" : "-");
        else if (ck < 0) os << "-";
        Int a = ck < 0 ? Int(-ck) : ck;
        int spow = d - k, tpow = k;
        bool coeff_shown = (a != 1) || (spow == 0 && tpow == 0);
        if (coeff_shown) os << a.get_str();
        if (spow > 0) {
            os << "s";
            if (spow > 1) os << "^" << spow;
        }
        if (tpow > 0) {
            os << "t";
            if (tpow > 1) os << "^" << tpow;
        }
        first = false;
    }
    os << ")";
    return os.str();
}

bool ClosedPoint::operator==(const ClosedPoint& o) const {
    return at_infinity == o.at_infinity && (at_infinity || min_poly == o.min_poly);
}

std::string ParamConvention::describe() const {
    if (kind == Kind::Pencil)
        return "lambda = (x2+x3)/(x1 - r*x0), fallback -C2/C1";
    std::ostringstream os;
    os << "lambda = x" << num_index << "/x" << den_index << " (pinned fixture)";
    return os.str();
}

Rat BundleData::l1(const ProjPoint& x) const { return x[2] + x[3]; }
Rat BundleData::l2(const ProjPoint& x) const { return x[1] - r * x[0]; }

namespace {

Rat quad_eval(const std::array<std::array<Rat, 4>, 4>& g, const ProjPoint& x) {
    Rat acc(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += g[i][j] * x[i] * x[j];
    return acc;
}

// ---- minimal multivariate polynomials in (x0,x1,x2,x3) for the symbolic
// decomposition check ----

using Monomial = std::array<int, 4>;

struct MultiPoly {
    std::map<Monomial, Rat> terms;

    static MultiPoly var(int i, int e = 1) {
        MultiPoly p;
        Monomial m{0, 0, 0, 0};
        m[i] = e;
        p.terms[m] = Rat(1);
        return p;
    }
    static MultiPoly constant(const Rat& c) {
        MultiPoly p;
        if (c != 0) p.terms[{0, 0, 0, 0}] = c;
        return p;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms) {
            r.terms[m] += c;
            if (r.terms[m] == 0) r.terms.erase(m);
        }
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms) c = -c;
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [m1, c1] : terms)
            for (const auto& [m2, c2] : o.terms) {
                Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
                r.terms[m] += c1 * c2;
                if (r.terms[m] == 0) r.terms.erase(m);
            }
        return r;
    }
    MultiPoly operator*(const Rat& c) const { return *this * constant(c); }
    bool is_zero() const { return terms.empty(); }
};

std::array<std::array<Rat, 4>, 4> gram_of(const MultiPoly& q) {
    std::array<std::array<Rat, 4>, 4> g{};
    for (auto& row : g) row.fill(Rat(0));
    for (const auto& [m, c] : q.terms) {
        int total = m[0] + m[1] + m[2] + m[3];
        if (total != 2) throw std::logic_error("gram_of: not a quadratic form");
        int i = -1, j = -1;
        for (int k = 0; k < 4; ++k) {
            if (m[k] == 2) { i = j = k; }
            if (m[k] == 1) { (i < 0 ? i : j) = k; }
        }
        if (i == j) {
            g[i][i] += c;
        } else {
            g[i][j] += c / 2;
            g[j][i] += c / 2;
        }
    }
    return g;
}

}  // namespace

Rat BundleData::C1(const ProjPoint& x) const { return quad_eval(gram1, x); }
Rat BundleData::C2(const ProjPoint& x) const { return quad_eval(gram2, x); }

bool on_surface(const DepressedSurface& s, const ProjPoint& x) {
    Rat g = x[1] * x[1] * x[1] + x[2] * x[2] * x[2] + x[3] * x[3] * x[3] +
            Rat(s.a) * (x[1] + x[2] + x[3]) * x[0] * x[0] + s.d * x[0] * x[0] * x[0];
    return g == 0;
}

BundleData build_bundle(const DepressedSurface& s, const Rat& r) {
    Poly f1 = build_resolvents(s).f1;
    if (f1.eval(r) != 0)
        throw std::invalid_argument("build_bundle: r is not a root of f1");
    if (!is_smooth(s))
        throw std::invalid_argument("build_bundle: surface is not smooth");
    BundleData b;
    b.surface = s;
    b.r = r;

    Rat a(s.a);
    // symbolic decomposition check: G = l1*C1 + l2*C2 in Q[x0..x3]
    MultiPoly x0 = MultiPoly::var(0), x1 = MultiPoly::var(1), x2 = MultiPoly::var(2),
              x3 = MultiPoly::var(3);
    auto cube = [](const MultiPoly& v) { return v * v * v; };
    MultiPoly G = cube(x1) + cube(x2) + cube(x3) +
                  (x1 + x2 + x3) * (x0 * x0) * a + cube(x0) * s.d;
    MultiPoly l1 = x2 + x3;
    MultiPoly l2 = x1 - x0 * r;
    MultiPoly C1 = x2 * x2 - x2 * x3 + x3 * x3 + x0 * x0 * a;
    MultiPoly C2 = x1 * x1 + x0 * x1 * r + x0 * x0 * (r * r + a);
    if (!(G - (l1 * C1 + l2 * C2)).is_zero())
        throw bundle_inconsistency("build_bundle: pencil decomposition failed");
    b.gram1 = gram_of(C1);
    b.gram2 = gram_of(C2);

    // Plane basis: w1, w2 span the line L, w3 = (0, s, t, 0) closes the plane
    // of the pencil s*l1 - t*l2 for every [s:t].
    std::array<std::array<BinaryForm, 4>, 3> w;
    auto cform = [](const Rat& c) { return BinaryForm(0, {c}); };
    w[0] = {cform(Rat(1)), cform(r), cform(Rat(0)), cform(Rat(0))};
    w[1] = {cform(Rat(0)), cform(Rat(0)), cform(Rat(1)), cform(Rat(-1))};
    BinaryForm sform(1, {Rat(1), Rat(0)}), tform(1, {Rat(0), Rat(1)}),
        zero1(1, {Rat(0), Rat(0)});
    w[2] = {zero1, sform, tform, zero1};

    auto bilinear = [](const std::array<std::array<Rat, 4>, 4>& g,
                       const std::array<BinaryForm, 4>& u,
                       const std::array<BinaryForm, 4>& v) {
        BinaryForm acc = BinaryForm::zero(u[0].deg() + v[0].deg());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (g[i][j] == 0) continue;
                acc = acc + (u[i] * v[j]) * g[i][j];
            }
        return acc;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            BinaryForm b1 = bilinear(b.gram1, w[i], w[j]);
            BinaryForm b2 = bilinear(b.gram2, w[i], w[j]);
            b.T[i][j] = tform * b1 + sform * b2;
        }

    auto det3 = [&]() {
        const auto& T = b.T;
        return T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1]) -
               T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0]) +
               T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]);
    };
    b.delta = det3();
    if (b.delta.deg() != 5)
        throw bundle_inconsistency("build_bundle: det T has unexpected degree");

    // cross-check against the closed-form singular-fibre locus
    Rat r2 = r * r;
    BinaryForm R(3, {Rat(4) * a + 3 * r2, Rat(-3) * r2, Rat(3) * r2, a});
    BinaryForm expected = (tform * (tform + sform) * R) * make_rat(3, 4);
    if (!(b.delta == expected))
        throw bundle_inconsistency("build_bundle: det T does not match t(t+s)R(s,t)");
    return b;
}

namespace {

// monic irreducible factors (with multiplicity) of a monic polynomial of
// degree 1..3 over Q
std::vector<Poly> factor_low_degree(const Poly& p) {
    if (p.degree() == 1) return {p};
    if (p.degree() == 2) {
        std::vector<Rat> roots = rational_roots_q(p);
        if (roots.empty()) return {p};
        std::vector<Poly> out;
        Poly g = p;
        for (const Rat& r : roots) {
            Poly lin(std::vector<Rat>{-r, Rat(1)});
            while (true) {
                auto [q, rem] = poly_divmod(g, lin);
                if (!rem.is_zero()) break;
                out.push_back(lin);
                g = q;
                if (g.degree() < 1) break;
            }
        }
        if (g.degree() == 1) out.push_back(g);
        return out;
    }
    if (p.degree() == 3) {
        CubicFactorization f = factor_cubic(p);
        return f.factors;
    }
    throw std::invalid_argument("factor_low_degree: degree out of range");
}

}  // namespace

std::vector<ClosedPoint> singular_locus(const BundleData& b) {
    Rat a(b.surface.a), r2 = b.r * b.r;
    BinaryForm R(3, {Rat(4) * a + 3 * r2, Rat(-3) * r2, Rat(3) * r2, a});
    Poly P = R.dehomogenize();
    int inf_mult = 3 - P.degree();
    if (inf_mult > 1)
        throw bundle_inconsistency("singular_locus: repeated fibre at infinity");

    std::vector<ClosedPoint> pts;
    if (inf_mult == 1) pts.push_back(ClosedPoint{true, Poly()});
    ClosedPoint p_t{false, Poly::x()};                                // (t)
    ClosedPoint p_st{false, Poly(std::vector<Rat>{Rat(1), Rat(1)})};  // (s+t)
    pts.push_back(p_t);
    pts.push_back(p_st);
    for (const Poly& f : factor_low_degree(P.monic()))
        pts.push_back(ClosedPoint{false, f});

    int total = 0;
    for (const auto& p : pts) total += p.degree();
    if (total != 5)
        throw bundle_inconsistency("singular_locus: degrees do not sum to 5");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw bundle_inconsistency(
                    "singular_locus: repeated singular fibre (surface singular?)");

    std::sort(pts.begin(), pts.end(), [](const ClosedPoint& x, const ClosedPoint& y) {
        if (x.at_infinity != y.at_infinity) return x.at_infinity;
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (int k = 0; k <= x.degree(); ++k) {
            if (x.min_poly.coeff(k) != y.min_poly.coeff(k))
                return x.min_poly.coeff(k) < y.min_poly.coeff(k);
        }
        return false;
    });
    return pts;
}

FibreData splitting_class(const BundleData& b, const ClosedPoint& p,
                          const std::array<int, 3>& pivot_order) {
    // residue field and the specialization point (s, t)
    Poly modulus = p.at_infinity ? Poly::x() : p.min_poly;
    EtaleElement tau = EtaleElement::generator(modulus);
    EtaleElement one = EtaleElement::constant(modulus, Rat(1));
    EtaleElement zero = EtaleElement::constant(modulus, Rat(0));
    EtaleElement es = p.at_infinity ? zero : one;
    EtaleElement et = p.at_infinity ? one : tau;

    std::array<std::array<EtaleElement, 3>, 3> M{
        {{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = b.T[i][j].eval_etale(es, et);

    std::vector<int> active(pivot_order.begin(), pivot_order.end());
    std::vector<EtaleElement> diag;
    while (!active.empty()) {
        int pivot = -1;
        for (int idx : active)
            if (!M[idx][idx].is_zero()) { pivot = idx; break; }
        if (pivot < 0) {
            // all active diagonal entries vanish; fold a nonzero off-diagonal in
            int ai = -1, aj = -1;
            for (size_t x = 0; x < active.size() && ai < 0; ++x)
                for (size_t y = x + 1; y < active.size() && ai < 0; ++y)
                    if (!M[active[x]][active[y]].is_zero()) {
                        ai = active[x];
                        aj = active[y];
                    }
            if (ai < 0) break;  // zero block
            for (int k = 0; k < 3; ++k) M[ai][k] = M[ai][k] + M[aj][k];
            for (int k = 0; k < 3; ++k) M[k][ai] = M[k][ai] + M[k][aj];
            pivot = ai;
        }
        EtaleElement alpha = M[pivot][pivot];
        diag.push_back(alpha);
        EtaleElement inv = etale_inverse(alpha);
        std::vector<int> rest;
        for (int idx : active)
            if (idx != pivot) rest.push_back(idx);
        for (int i : rest) {
            EtaleElement f = M[pivot][i] * inv;
            for (int j : rest) M[i][j] = M[i][j] - f * M[pivot][j];
            M[i][pivot] = zero;
            M[pivot][i] = zero;
        }
        active = rest;
    }
    if (diag.size() != 2)
        throw bundle_inconsistency("splitting_class: specialized fibre rank != 2");

    FibreData out{p, -(diag[0] * diag[1]), SquareClass::zero(), std::nullopt};
    out.norm_class = square_class(etale_norm(out.a_p));
    if (modulus.degree() <= 2) out.a_p_is_square = etale_sqrt(out.a_p).has_value();
    return out;
}

std::vector<FibreData> all_fibres(const BundleData& b) {
    std::vector<FibreData> out;
    for (const auto& p : singular_locus(b)) out.push_back(splitting_class(b, p));
    return out;
}

EpsilonGroup epsilon_group(const std::vector<FibreData>& fibres) {
    EpsilonGroup out;
    std::vector<size_t> nontrivial;
    for (size_t i = 0; i < fibres.size(); ++i) {
        if (fibres[i].norm_class.is_one())
            out.trivial_directions.push_back(i);
        else
            nontrivial.push_back(i);
    }
    // exponent vectors over the dimensions {sign} u {primes}
    std::vector<Int> dims;
    std::vector<std::vector<int>> cols;
    for (size_t i : nontrivial) {
        const Int& v = fibres[i].norm_class.value();
        std::vector<std::pair<Int, int>> entries;
        if (v < 0) entries.push_back({Int(0), 1});  // dimension 0 = sign
        for (const auto& [q, e] : factorize(v)) entries.push_back({q, e % 2});
        std::vector<int> col;
        for (const auto& [dim, bit] : entries) {
            if (bit == 0) continue;
            auto it = std::find(dims.begin(), dims.end(), dim);
            size_t idx = it - dims.begin();
            if (it == dims.end()) dims.push_back(dim);
            if (col.size() <= idx) col.resize(idx + 1, 0);
            col[idx] = 1;
        }
        cols.push_back(col);
    }
    size_t m = dims.size(), k = nontrivial.size();
    for (auto& col : cols) col.resize(m, 0);
    // kernel of the m x k matrix over GF(2)
    std::vector<std::vector<int>> mat(m, std::vector<int>(k, 0));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < m; ++i) mat[i][j] = cols[j][i];
    std::vector<int> pivot_col(m, -1);
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < m; ++col) {
        size_t sel = rank;
        while (sel < m && mat[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(mat[sel], mat[rank]);
        for (size_t i = 0; i < m; ++i) {
            if (i != rank && mat[i][col]) {
                for (size_t j = 0; j < k; ++j) mat[i][j] ^= mat[rank][j];
            }
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    std::vector<bool> is_pivot(k, false);
    for (size_t i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (size_t free = 0; free < k; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> sol(k, 0);
        sol[free] = 1;
        for (size_t i = 0; i < rank; ++i)
            if (mat[i][free]) sol[pivot_col[i]] = 1;
        std::vector<int> eps(fibres.size(), 0);
        for (size_t j = 0; j < k; ++j) eps[nontrivial[j]] = sol[j];
        out.basis.push_back(eps);
    }
    return out;
}

BrauerClassCB brauer_class(const BundleData& b, const std::vector<FibreData>& fibres,
                           const std::vector<int>& epsilon) {
    if (epsilon.size() != fibres.size())
        throw std::invalid_argument("brauer_class: epsilon length mismatch");
    // membership in the span: the norm-class product must be a square
    Rat prod(1);
    for (size_t i = 0; i < fibres.size(); ++i)
        if (epsilon[i]) prod *= Rat(fibres[i].norm_class.value());
    if (prod != 1 && !square_class(prod).is_one())
        throw std::invalid_argument("brauer_class: epsilon not in the kernel");

    BrauerClassCB cls;
    cls.epsilon = epsilon;
    for (size_t i = 0; i < fibres.size(); ++i) {
        if (!epsilon[i]) continue;
        const FibreData& f = fibres[i];
        if (f.point.degree() != 1)
            throw std::invalid_argument(
                "brauer_class: epsilon supported on a point of degree >= 2 "
                "(corestriction evaluation not implemented)");
        Rat ap = f.a_p.is_rational() ? f.a_p.rational_value() : f.a_p.value().coeff(0);
        SquareClass sc = square_class(ap);
        if (sc.is_one()) {
            cls.notes.push_back("trivial symbol omitted at " + f.point.label());
            continue;
        }
        CBSymbol sym;
        sym.a = sc.value();
        if (f.point.at_infinity) {
            sym.tau_infinity = true;
        } else {
            sym.tau = -f.point.min_poly.coeff(0);
        }
        cls.symbols.push_back(sym);
    }
    return cls;
}

ParamValue parameter_at(const BundleData& b, const ParamConvention& conv,
                        const ProjPoint& x) {
    ParamValue out;
    if (conv.kind == ParamConvention::Kind::CoordinateRatio) {
        Rat num = x[conv.num_index], den = x[conv.den_index];
        if (den != 0) {
            out.kind = ParamValue::Kind::Finite;
            out.value = num / den;
        } else {
            out.kind = num != 0 ? ParamValue::Kind::Infinity : ParamValue::Kind::Undefined;
        }
        return out;
    }
    Rat l1 = b.l1(x), l2 = b.l2(x);
    if (l1 != 0 || l2 != 0) {
        if (l2 != 0) {
            out.kind = ParamValue::Kind::Finite;
            out.value = l1 / l2;
        } else {
            out.kind = ParamValue::Kind::Infinity;
        }
        return out;
    }
    // on the line L: fall back to the residual-quadric chart, lambda = -C2/C1
    Rat c1 = b.C1(x), c2 = b.C2(x);
    if (c1 != 0) {
        out.kind = ParamValue::Kind::Finite;
        out.value = -c2 / c1;
    } else if (c2 != 0) {
        out.kind = ParamValue::Kind::Infinity;
    }
    return out;
}

Rat evaluate_class(const BrauerClassCB& cls, const BundleData& b, const ProjPoint& x,
                   const Place& v) {
    ParamValue lam = parameter_at(b, cls.convention, x);
    if (lam.kind == ParamValue::Kind::Undefined)
        throw evaluation_refused("evaluate_class: parameter undefined at the point");
    Rat total(0);
    for (const auto& sym : cls.symbols) {
        Rat slot;
        if (sym.tau_infinity) {
            if (lam.kind == ParamValue::Kind::Infinity || lam.value == 0)
                throw evaluation_refused("evaluate_class: reciprocal slot vanishes at " +
                                         std::string("(s)"));
            slot = Rat(1) / lam.value;
        } else {
            if (lam.kind == ParamValue::Kind::Infinity)
                throw evaluation_refused(
                    "evaluate_class: parameter infinite at a finite symbol (tau=" +
                    rat_to_string(sym.tau) + ")");
            slot = lam.value - sym.tau;
            if (slot == 0)
                throw evaluation_refused("evaluate_class: slot vanishes at symbol tau=" +
                                         rat_to_string(sym.tau));
        }
        total += hilbert(slot, Rat(sym.a), v);
    }
    // value in Q/Z restricted to {0, 1/2}
    if (is_integer(total)) return Rat(0);
    return make_rat(1, 2);
}

WeakApproxScan weak_approx_scan(const BrauerClassCB& cls, const BundleData& b,
                                const Place& v, const std::vector<ProjPoint>& samples) {
    WeakApproxScan out;
    for (const auto& x : samples) {
        if (!on_surface(b.surface, x))
            throw std::invalid_argument("weak_approx_scan: sample is not on the surface");
        try {
            Rat inv = evaluate_class(cls, b, x, v);
            out.sample_invariants.push_back(inv);
        } catch (const evaluation_refused&) {
            out.sample_invariants.push_back(std::nullopt);
        }
    }
    for (const auto& inv : out.sample_invariants)
        if (inv) out.attained.push_back(*inv);
    std::sort(out.attained.begin(), out.attained.end());
    out.attained.erase(std::unique(out.attained.begin(), out.attained.end()),
                       out.attained.end());
    out.fails_weak_approximation = out.attained.size() >= 2;
    return out;
}

}  // namespace tricube
