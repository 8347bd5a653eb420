#include "tricube/local.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tricube {

Place Place::real_place() {
    Place v;
    v.real = true;
    return v;
}

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("Place::finite: p must be prime");
    Place v;
    v.p = p;
    return v;
}

std::string Place::to_string() const { return real ? "real" : p.get_str(); }

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: odd prime required");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

// Legendre symbol of a p-adic unit rational: (num|p)(den|p).
int legendre_unit(const Rat& u, const Int& p) {
    return legendre(u.get_num(), p) * legendre(u.get_den(), p);
}

// residue of an odd rational modulo 8
long mod8(const Rat& u) {
    long n = mpz_fdiv_ui(u.get_num().get_mpz_t(), 8);
    long d = mpz_fdiv_ui(u.get_den().get_mpz_t(), 8);
    static const long inv8[8] = {0, 1, 0, 3, 0, 5, 0, 7};
    return (n * inv8[d]) % 8;
}

}  // namespace

Rat hilbert(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert: zero slot");
    if (v.real) return (a < 0 && b < 0) ? make_rat(1, 2) : Rat(0);
    const Int& p = v.p;
    int alpha = valuation(a, p), beta = valuation(b, p);
    Rat u = a, w = b;
    for (int i = 0; i < alpha; ++i) u /= p;
    for (int i = alpha; i < 0; ++i) u *= p;
    for (int i = 0; i < beta; ++i) w /= p;
    for (int i = beta; i < 0; ++i) w *= p;
    int sign;
    if (p == 2) {
        long ru = mod8(u), rw = mod8(w);
        long eps_u = ((ru - 1) / 2) % 2, eps_w = ((rw - 1) / 2) % 2;
        long om_u = (ru * ru - 1) / 8 % 2, om_w = (rw * rw - 1) / 8 % 2;
        long e = eps_u * eps_w + alpha * om_w + beta * om_u;
        sign = (e % 2 == 0) ? 1 : -1;
    } else {
        long eps = mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? 0 : 1;
        sign = 1;
        if ((alpha % 2) && (beta % 2) && eps) sign = -sign;
        if (beta % 2) sign *= legendre_unit(u, p);
        if (alpha % 2) sign *= legendre_unit(w, p);
    }
    return sign == 1 ? Rat(0) : make_rat(1, 2);
}

namespace {

unsigned long rat_mod_p(const Rat& q, unsigned long p) {
    unsigned long n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    unsigned long d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (d == 0) throw std::invalid_argument("rat_mod_p: denominator divisible by p");
    Int di(d), pi(p), inv;
    mpz_invert(inv.get_mpz_t(), di.get_mpz_t(), pi.get_mpz_t());
    Int r = inv * n % pi;
    return mpz_fdiv_ui(r.get_mpz_t(), p);
}

std::vector<unsigned long> value_table(const Poly& f, unsigned long p) {
    // f has integer (or p-integral) coefficients; tabulate f(u) mod p.
    std::vector<unsigned long> coef;
    for (int i = 0; i <= f.degree(); ++i) coef.push_back(rat_mod_p(f.coeff(i), p));
    std::vector<unsigned long> vals(p);
    for (unsigned long u = 0; u < p; ++u) {
        unsigned long acc = 0;
        for (int i = f.degree(); i >= 0; --i)
            acc = (acc * u + coef[i]) % p;
        vals[u] = acc;
    }
    return vals;
}

}  // namespace

Int fp_count_affine(const CubicInput& in, const Int& p, unsigned long cap) {
    if (!is_prime(p)) throw std::invalid_argument("fp_count_affine: p must be prime");
    if (p > Int(cap))
        throw std::invalid_argument("fp_count_affine: p exceeds the exhaustive cap");
    unsigned long pl = p.get_ui();
    std::vector<unsigned long> vals = value_table(in.f(), pl);
    std::vector<Int> hist(pl, Int(0));
    for (unsigned long u = 0; u < pl; ++u) hist[vals[u]] += 1;
    unsigned long nmod = mpz_fdiv_ui(in.n.get_mpz_t(), pl);
    Int count(0);
    for (unsigned long v1 = 0; v1 < pl; ++v1) {
        if (hist[v1] == 0) continue;
        for (unsigned long v2 = 0; v2 < pl; ++v2) {
            if (hist[v2] == 0) continue;
            unsigned long v3 = (nmod + 2 * pl - (v1 + v2) % pl) % pl;
            count += hist[v1] * hist[v2] * hist[v3];
        }
    }
    return count;
}

Int fp_count_projective(const Int& A, const Int& D, const Int& p, unsigned long cap) {
    if (!is_prime(p)) throw std::invalid_argument("fp_count_projective: p must be prime");
    if (p > Int(cap))
        throw std::invalid_argument("fp_count_projective: p exceeds the exhaustive cap");
    unsigned long pl = p.get_ui();
    // affine chart x0 = 1: g(u1)+g(u2)+g(u3) = -D with g(u) = u^3 + A*u
    Poly g = Poly::from_int_coeffs({Int(0), A, Int(0), Int(1)});
    std::vector<unsigned long> vals = value_table(g, pl);
    std::vector<Int> hist(pl, Int(0));
    for (unsigned long u = 0; u < pl; ++u) hist[vals[u]] += 1;
    unsigned long target = mpz_fdiv_ui(Int(-D).get_mpz_t(), pl);
    Int count(0);
    for (unsigned long v1 = 0; v1 < pl; ++v1) {
        if (hist[v1] == 0) continue;
        for (unsigned long v2 = 0; v2 < pl; ++v2) {
            if (hist[v2] == 0) continue;
            unsigned long v3 = (target + 2 * pl - (v1 + v2) % pl) % pl;
            count += hist[v1] * hist[v2] * hist[v3];
        }
    }
    // section at infinity: the plane Fermat cubic x1^3+x2^3+x3^3 = 0
    std::vector<unsigned long> cube(pl);
    std::vector<Int> cube_count(pl, Int(0));
    for (unsigned long u = 0; u < pl; ++u) {
        Int c = Int(u) * u % pl;
        c = c * u % pl;
        cube[u] = mpz_fdiv_ui(c.get_mpz_t(), pl);
        cube_count[cube[u]] += 1;
    }
    Int curve(0);
    for (unsigned long x1 = 0; x1 < pl; ++x1) {
        unsigned long need = (pl - (cube[x1] + 1) % pl) % pl;  // x2^3 = -1 - x1^3
        curve += cube_count[need];
    }
    curve += cube_count[pl - 1];  // [x1 : 1 : 0] with x1^3 = -1
    return count + curve;
}

bool good_reduction(const DepressedSurface& s, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("good_reduction: p must be prime");
    if (p <= 3) return false;
    auto [A, D] = s.integral_model();
    Int d2 = -243 * (4 * A * A * A + 27 * D * D) * (4 * A * A * A + 3 * D * D);
    if (d2 == 0) return false;
    return !mpz_divisible_p(d2.get_mpz_t(), p.get_mpz_t());
}

std::string LocalCertificate::describe() const {
    std::ostringstream os;
    os << "v=" << place.to_string() << " ";
    switch (status) {
        case Status::ExplicitPoint:
            os << "ExplicitPoint (" << point[0] << "," << point[1] << "," << point[2]
               << ") mod p^" << level << " v(G)=" << value_val
               << " min v(dG)=" << min_partial_val;
            break;
        case Status::WeilBound:
            os << "WeilBound >= " << weil_lower_bound;
            break;
        case Status::RealTrivial:
            os << "RealTrivial";
            break;
        case Status::Insoluble:
            os << "Insoluble mod p^" << witness_level;
            break;
        case Status::Unknown:
            os << "Unknown (depth " << depth_reached << ")";
            break;
    }
    return os.str();
}

LocalCertificate weil_certificate(const DepressedSurface& s, const Int& p) {
    if (p < 11) throw std::invalid_argument("weil_certificate: p >= 11 required");
    if (!good_reduction(s, p))
        throw std::invalid_argument("weil_certificate: good reduction required");
    LocalCertificate c;
    c.place = Place::finite(p);
    c.status = LocalCertificate::Status::WeilBound;
    // #X(F_p) >= p^2 - 7p + 1 and the Fermat-cubic section at infinity holds
    // at most p + 1 + 2 sqrt(p) points, so at least p^2 - 8p - ceil(2 sqrt(p))
    // smooth affine points remain.
    c.weil_lower_bound = p * p - 8 * p - (integer_sqrt(4 * p).root + 1);
    return c;
}

namespace {

struct SearchOutcome {
    std::optional<LiftablePoint> point;
    bool insoluble = false;
    int insoluble_level = 0;
    bool unknown = false;
    int depth_reached = 0;
};

constexpr unsigned long kExhaustiveMax = 400;   // p <= this: full residue tables
constexpr size_t kFrontierCap = 500000;

long val_or_inf(const Int& z, const Int& p, long inf) {
    if (z == 0) return inf;
    return valuation(z, p);
}

struct Model {
    Poly f, fp;  // f and f'
    Int n;
    Int G(const std::array<Int, 3>& u) const {
        Rat s(0);
        for (const Int& c : u) s += f.eval(Rat(c));
        return rat_num(s - Rat(n));
    }
    Int dG(const Int& c) const { return rat_num(fp.eval(Rat(c))); }
};

// Newton validity at an exact integer representative.
std::optional<LiftablePoint> check_newton(const Model& M, const std::array<Int, 3>& u,
                                          const Int& p, int level) {
    Int g = M.G(u);
    const long INF = 1L << 30;
    long t = INF;
    for (const Int& c : u) t = std::min(t, val_or_inf(M.dG(c), p, INF));
    if (g == 0) {
        LiftablePoint pt{u, level, t >= INF ? -1 : t, -1};
        return pt;
    }
    long m = valuation(g, p);
    if (t < INF && m > 2 * t) {
        LiftablePoint pt{u, level, t, m};
        return pt;
    }
    return std::nullopt;
}

SearchOutcome search_small_p(const Model& M, const Int& p, int depth) {
    SearchOutcome out;
    unsigned long pl = p.get_ui();
    std::vector<unsigned long> fv = value_table(M.f, pl);
    std::vector<unsigned long> dv = value_table(M.fp, pl);
    std::vector<std::vector<unsigned long>> preim(pl);
    for (unsigned long u = 0; u < pl; ++u) preim[fv[u]].push_back(u);
    unsigned long nmod = mpz_fdiv_ui(M.n.get_mpz_t(), pl);

    bool any_solution = false;
    std::vector<std::array<Int, 3>> singular;
    for (unsigned long u1 = 0; u1 < pl; ++u1) {
        for (unsigned long u2 = 0; u2 < pl; ++u2) {
            unsigned long need = (nmod + 2 * pl - (fv[u1] + fv[u2]) % pl) % pl;
            for (unsigned long u3 : preim[need]) {
                any_solution = true;
                std::array<Int, 3> u{Int(u1), Int(u2), Int(u3)};
                if (dv[u1] || dv[u2] || dv[u3]) {
                    if (auto pt = check_newton(M, u, p, 1)) {
                        out.point = pt;
                        return out;
                    }
                } else {
                    singular.push_back(u);
                }
            }
        }
    }
    if (!any_solution) {
        out.insoluble = true;
        out.insoluble_level = 1;
        return out;
    }
    // All residual solutions are singular modulo p; refine level by level.
    std::vector<std::array<Int, 3>> frontier = std::move(singular);
    Int pk = p;
    for (int k = 1; k < depth; ++k) {
        for (const auto& u : frontier) {
            if (auto pt = check_newton(M, u, p, k)) {
                out.point = pt;
                return out;
            }
        }
        std::vector<std::array<Int, 3>> next;
        Int pk1 = pk * p;
        for (const auto& u : frontier) {
            for (unsigned long d1 = 0; d1 < pl; ++d1)
                for (unsigned long d2 = 0; d2 < pl; ++d2)
                    for (unsigned long d3 = 0; d3 < pl; ++d3) {
                        std::array<Int, 3> w{u[0] + pk * d1, u[1] + pk * d2,
                                             u[2] + pk * d3};
                        if (mpz_divisible_p(M.G(w).get_mpz_t(), pk1.get_mpz_t()))
                            next.push_back(w);
                        if (next.size() > kFrontierCap) {
                            out.unknown = true;
                            out.depth_reached = k;
                            return out;
                        }
                    }
        }
        if (next.empty()) {
            out.insoluble = true;
            out.insoluble_level = k + 1;
            return out;
        }
        frontier = std::move(next);
        pk = pk1;
    }
    for (const auto& u : frontier) {
        if (auto pt = check_newton(M, u, p, depth)) {
            out.point = pt;
            return out;
        }
    }
    out.unknown = true;
    out.depth_reached = depth;
    return out;
}

// ---- root finding mod p for the sparse (large p) search ----

using FpPoly = std::vector<Int>;  // dense, reduced mod p

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FpPoly fp_mod(const FpPoly& f, const FpPoly& g, const Int& p) {
    // g monic
    FpPoly r = f;
    while (r.size() >= g.size()) {
        Int c = r.back();
        size_t shift = r.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            r[i + shift] = (r[i + shift] - c * g[i]) % p;
        r = fp_trim(std::move(r));
    }
    for (auto& c : r) c = ((c % p) + p) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpPoly& mod, const Int& p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return fp_mod(out, mod, p);
}

FpPoly fp_powmod_x(const Int& e, const FpPoly& mod, const Int& p) {
    // x^e modulo mod(x)
    FpPoly result{Int(1)};
    FpPoly base = fp_mod(FpPoly{Int(0), Int(1)}, mod, p);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = fp_mul(result, base, mod, p);
        base = fp_mul(base, base, mod, p);
        exp /= 2;
    }
    return result;
}

FpPoly fp_pow(const FpPoly& b, const Int& e, const FpPoly& mod, const Int& p) {
    FpPoly result{Int(1)};
    FpPoly base = fp_mod(b, mod, p);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = fp_mul(result, base, mod, p);
        base = fp_mul(base, base, mod, p);
        exp /= 2;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        // make b monic
        Int inv;
        mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
        for (auto& c : b) c = ((c * inv) % p + p) % p;
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
        for (auto& c : a) c = ((c * inv) % p + p) % p;
    }
    return a;
}

// All roots in F_p of a nonzero polynomial of degree <= 3, ascending.
std::vector<Int> fp_roots(const FpPoly& f_in, const Int& p) {
    FpPoly f = fp_trim(f_in);
    std::vector<Int> roots;
    if (f.empty()) throw std::logic_error("fp_roots: zero polynomial");
    // make monic
    Int inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), p.get_mpz_t());
    for (auto& c : f) c = ((c * inv) % p + p) % p;
    if (f.size() == 1) return roots;
    // split off the product of distinct linear factors: gcd(x^p - x, f)
    FpPoly xp = fp_powmod_x(p, f, p);
    if (xp.size() < 2) xp.resize(2, Int(0));
    xp[1] = (xp[1] - 1 + p) % p;  // x^p - x mod f
    FpPoly lin = fp_gcd(f, xp, p);
    // recursively split lin by gcd with (x+delta)^((p-1)/2) - 1
    std::vector<FpPoly> stack{lin};
    Int half = (p - 1) / 2;
    while (!stack.empty()) {
        FpPoly h = fp_trim(stack.back());
        stack.pop_back();
        if (h.size() <= 1) continue;
        if (h.size() == 2) {
            roots.push_back(((-h[0] % p) + p) % p);
            continue;
        }
        bool split = false;
        for (Int delta = 0; !split; ++delta) {
            FpPoly shifted{delta, Int(1)};
            FpPoly w = fp_pow(shifted, half, h, p);
            if (w.empty()) {  // x = -delta is a root of h
                w = FpPoly{Int(0)};
            }
            FpPoly wm1 = w;
            if (wm1.empty()) wm1.push_back(p - 1);
            else wm1[0] = (wm1[0] - 1 + p) % p;
            FpPoly g = fp_gcd(h, wm1, p);
            if (!g.empty() && g.size() > 1 && g.size() < h.size()) {
                // divide h by g
                FpPoly q, r = h;
                q.assign(h.size() - g.size() + 1, Int(0));
                while (r.size() >= g.size()) {
                    Int c = r.back();
                    size_t shift = r.size() - g.size();
                    q[shift] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        r[i + shift] = ((r[i + shift] - c * g[i]) % p + p) % p;
                    r = fp_trim(std::move(r));
                }
                stack.push_back(g);
                stack.push_back(fp_trim(std::move(q)));
                split = true;
            }
            if (delta > 200) throw std::logic_error("fp_roots: splitting stalled");
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

SearchOutcome search_large_p(const Model& M, const Int& p, int /*depth*/) {
    // Sparse deterministic scan: fix small (u1, u2), solve the cubic in u3.
    SearchOutcome out;
    std::vector<Int> fcoef;
    for (int i = 0; i <= M.f.degree(); ++i) fcoef.push_back(rat_num(M.f.coeff(i)));
    for (unsigned long B : {64ul, 1024ul}) {
        for (unsigned long a = 0; a < B; ++a) {
            for (unsigned long b = 0; b <= a; ++b) {
                Int u1(a), u2(b);
                Int c = (M.n - M.f.eval(Rat(u1)).get_num() - M.f.eval(Rat(u2)).get_num()) % p;
                c = ((c % p) + p) % p;
                FpPoly h;
                for (size_t i = 0; i < fcoef.size(); ++i)
                    h.push_back(((fcoef[i] % p) + p) % p);
                h[0] = (h[0] - c % p + p) % p;
                for (const Int& r : fp_roots(h, p)) {
                    std::array<Int, 3> u{u1, u2, r};
                    bool smooth = false;
                    for (const Int& cc : u)
                        if (!mpz_divisible_p(M.dG(cc).get_mpz_t(), p.get_mpz_t()))
                            smooth = true;
                    if (!smooth) continue;
                    if (auto pt = check_newton(M, u, p, 1)) {
                        out.point = pt;
                        return out;
                    }
                }
            }
        }
    }
    out.unknown = true;
    out.depth_reached = 1;
    return out;
}

SearchOutcome search_zp(const CubicInput& in, const Int& p, int depth) {
    Model M{in.f(), in.f().derivative(), in.n};
    if (p <= Int(kExhaustiveMax)) return search_small_p(M, p, depth);
    return search_large_p(M, p, depth);
}

}  // namespace

std::optional<LiftablePoint> find_liftable_point(const CubicInput& in, const Int& p,
                                                 int depth) {
    if (!is_prime(p)) throw std::invalid_argument("find_liftable_point: p must be prime");
    if (depth < 1) throw std::invalid_argument("find_liftable_point: depth >= 1 required");
    return search_zp(in, p, depth).point;
}

LocalCertificate certify_Zp(const CubicInput& in, const Int& p, int depth) {
    if (!is_prime(p)) throw std::invalid_argument("certify_Zp: p must be prime");
    LocalCertificate c;
    c.place = Place::finite(p);
    DepressedSurface s = normalize(in);
    if (p >= 11 && good_reduction(s, p)) return weil_certificate(s, p);
    SearchOutcome o = search_zp(in, p, depth);
    if (o.point) {
        c.status = LocalCertificate::Status::ExplicitPoint;
        c.point = o.point->point;
        c.level = o.point->level;
        c.min_partial_val = o.point->min_partial_val;
        c.value_val = o.point->value_val;
    } else if (o.insoluble) {
        c.status = LocalCertificate::Status::Insoluble;
        c.witness_level = o.insoluble_level;
    } else {
        c.status = LocalCertificate::Status::Unknown;
        c.depth_reached = o.depth_reached;
    }
    return c;
}

bool validate_certificate(const CubicInput& in, const LocalCertificate& cert) {
    if (cert.status == LocalCertificate::Status::RealTrivial) return cert.place.real;
    if (cert.status != LocalCertificate::Status::ExplicitPoint) return false;
    Model M{in.f(), in.f().derivative(), in.n};
    const Int& p = cert.place.p;
    Int g = M.G(cert.point);
    if (cert.value_val == -1) return g == 0;
    if (g == 0) return false;
    const long INF = 1L << 30;
    long t = INF;
    for (const Int& c : cert.point) t = std::min(t, val_or_inf(M.dG(c), p, INF));
    long m = valuation(g, p);
    return t == cert.min_partial_val && m == cert.value_val && m > 2 * t;
}

std::string to_string(AdelicCertificate::Verdict v) {
    switch (v) {
        case AdelicCertificate::Verdict::Soluble: return "soluble";
        case AdelicCertificate::Verdict::Insoluble: return "insoluble";
        case AdelicCertificate::Verdict::Unknown: return "unknown";
    }
    return "?";
}

AdelicCertificate certify_adeles(const CubicInput& in, int depth) {
    DepressedSurface s = normalize(in);
    if (!is_smooth(s))
        throw std::invalid_argument("certify_adeles: surface is not smooth");
    AdelicCertificate out;
    LocalCertificate real;
    real.place = Place::real_place();
    real.status = LocalCertificate::Status::RealTrivial;
    out.certificates.push_back(real);

    auto [A, D] = s.integral_model();
    Int d2 = -243 * (4 * A * A * A + 27 * D * D) * (4 * A * A * A + 3 * D * D);
    std::vector<Int> primes{Int(2), Int(3), Int(5), Int(7)};
    for (const auto& [q, e] : factorize(d2)) {
        if (q > 3 && std::find(primes.begin(), primes.end(), q) == primes.end())
            primes.push_back(q);
    }
    std::sort(primes.begin(), primes.end());
    for (const Int& q : primes) {
        if (q > 3 && mpz_divisible_p(d2.get_mpz_t(), q.get_mpz_t()))
            out.bad_primes.push_back(q);
        out.certificates.push_back(certify_Zp(in, q, depth));
    }
    out.weil_note = "every other prime p >= 11 has good reduction: at least "
                    "p^2 - 8p - ceil(2 sqrt(p)) > 0 smooth affine F_p-points, "
                    "each lifting to a Z_p-point";
    out.verdict = AdelicCertificate::Verdict::Soluble;
    for (const auto& c : out.certificates) {
        if (c.status == LocalCertificate::Status::Insoluble) {
            out.verdict = AdelicCertificate::Verdict::Insoluble;
            return out;
        }
        if (c.status == LocalCertificate::Status::Unknown)
            out.verdict = AdelicCertificate::Verdict::Unknown;
    }
    return out;
}

}  // namespace tricube
