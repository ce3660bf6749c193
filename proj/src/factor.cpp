#include "g2/factor.hpp"

#include <algorithm>
#include <map>

namespace g2 {

namespace {

constexpr unsigned long kTrialLimit = 1ul << 16;

// Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0.
Int rho(const Int& n, unsigned long budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; c < 64; ++c) {
        Int y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1, spent = 0;
        const unsigned long m = 128;
        auto f = [&](const Int& v) {
            Int t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    Int d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += lim;
                spent += lim;
            }
            r *= 2;
            if (spent > budget) break;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Int(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (spent > budget) return 0;
    }
    return 0;
}

void split(const Int& n, unsigned long budget, std::map<Int, unsigned>& out, Int& rest) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int root;
    if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
        for (unsigned long e = 2; e < 64; ++e) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<Int, unsigned> sub;
                Int sub_rest = 1;
                split(root, budget, sub, sub_rest);
                for (auto& [p, k] : sub) out[p] += k * static_cast<unsigned>(e);
                rest *= pow(sub_rest, static_cast<unsigned>(e));
                return;
            }
        }
    }
    Int d = rho(n, budget);
    if (d == 0) {
        rest *= n;
        return;
    }
    split(d, budget, out, rest);
    split(Int(n / d), budget, out, rest);
}

}  // namespace

Int Factorization::value() const {
    Int v = sign;
    for (auto& [p, e] : factors) v *= pow(p, e);
    return v * unfactored;
}

std::string Factorization::str() const {
    std::string s = sign < 0 ? "-" : "";
    bool first = true;
    for (auto& [p, e] : factors) {
        if (!first) s += "*";
        first = false;
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    if (unfactored != 1) {
        if (!first) s += "*";
        first = false;
        s += "[" + unfactored.get_str() + "]";
    }
    if (first) s += "1";
    return s;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(const Int& n0, unsigned long rho_budget) {
    if (n0 == 0) throw DomainError("cannot factor zero");
    Factorization r;
    r.sign = n0 < 0 ? -1 : 1;
    Int n = abs(n0);
    std::map<Int, unsigned> found;
    for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        found[Int(p)] = e;
    }
    Int rest = 1;
    split(n, rho_budget, found, rest);
    for (auto& [p, e] : found) r.factors.emplace_back(p, e);
    r.unfactored = rest;
    return r;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("valuation of zero");
    Int m = n;
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

int valuation(const Rat& q, const Int& p) {
    return static_cast<int>(valuation(q.get_num(), p)) - static_cast<int>(valuation(q.get_den(), p));
}

Int squarefree_part(const Int& n) {
    auto f = factor(n);
    if (!f.complete()) throw DomainError("squarefree part needs a complete factorization of " + n.get_str());
    Int s = f.sign;
    for (auto& [p, e] : f.factors)
        if (e % 2 == 1) s *= p;
    return s;
}

Int squarefree_part(const Rat& q) {
    // n/d has the same square class as n*d.
    return squarefree_part(Int(q.get_num() * q.get_den()));
}

std::vector<Int> prime_support(const Rat& q) {
    std::vector<Int> ps;
    for (const Int* z : {&q.get_num(), &q.get_den()}) {
        if (*z == 0 || abs(*z) == 1) continue;
        auto f = factor(*z);
        for (auto& [p, e] : f.factors) ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

}  // namespace g2
