#include "tricube/numeric.hpp"

#include <algorithm>

namespace tricube {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

SqrtResult integer_sqrt(const Int& z) {
    if (z < 0) throw std::invalid_argument("integer_sqrt: negative input");
    SqrtResult r;
    mpz_sqrt(r.root.get_mpz_t(), z.get_mpz_t());
    r.exact = (r.root * r.root == z);
    return r;
}

bool is_perfect_square(const Int& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool is_square_rat(const Rat& q) {
    if (q == 0) return true;
    if (q < 0) return false;
    return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

namespace {

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // The 13-base set certifies primality for n < 3.317e24.
    static const Int mr_limit("3317044064679887385961981");
    if (n < mr_limit) {
        for (int a : small_primes)
            if (miller_rabin_witness(n, Int(a), d, s)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_brent(const Int& n) {
    // Brent's cycle variant; deterministic parameter sweep.
    for (unsigned long c = 1;; ++c) {
        Int y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    unsigned long k = 2;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        Int root;
        for (k = 2;; ++k) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) break;
        }
        std::map<Int, int> sub;
        factor_rec(root, sub);
        for (auto& [p, e] : sub) out[p] += e * static_cast<int>(k);
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factorize(const Int& n, unsigned long trial_bound) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    std::map<Int, int> out;
    Int m = n < 0 ? Int(-n) : n;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= p; out[Int(p)] += 1; }
    }
    for (unsigned long p = 7; p <= trial_bound && Int(p) * p <= m; p += (p % 6 == 1) ? 4 : 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= p; out[Int(p)] += 1; }
    }
    if (m > 1) {
        if (Int(trial_bound) * trial_bound >= m) {
            out[m] += 1;  // cofactor below bound^2 with no small factor is prime
        } else {
            factor_rec(m, out);
        }
    }
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto f = factorize(n);
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : f) {
        size_t base = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation: zero input");
    Int m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) { m /= p; ++v; }
    return v;
}

int valuation(const Rat& q, const Int& p) {
    if (q == 0) throw std::invalid_argument("valuation: zero input");
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

SquareClass square_class(const Rat& q, unsigned long trial_bound) {
    if (q == 0) throw std::invalid_argument("square_class: zero input");
    // q and num*den differ by the square den^2.
    Int z = q.get_num() * q.get_den();
    Int sign = z < 0 ? -1 : 1;
    Int rep = sign;
    for (auto& [p, e] : factorize(z, trial_bound)) {
        if (e % 2 == 1) rep *= p;
    }
    return SquareClass::of_squarefree(rep);
}

}  // namespace tricube
