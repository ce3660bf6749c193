#include "g2/conic.hpp"

#include "g2/factor.hpp"

#include <map>
#include <stdexcept>

namespace g2 {

namespace {

using PrimeMap = std::map<Int, unsigned>;

// Thrown when a factorization needed by the descent is incomplete.
struct Incomplete {};

PrimeMap prime_map(const Int& n) {
    Factorization f = factor(n);
    if (!f.complete()) throw Incomplete{};
    PrimeMap m;
    for (auto& [p, e] : f.factors) m[p] += e;
    return m;
}

PrimeMap merge(PrimeMap a, const PrimeMap& b) {
    for (auto& [p, e] : b) a[p] += e;
    return a;
}

// n = sign * sf * sq^2 with sf squarefree.
void split_square(int sign_n, const PrimeMap& m, Int& sf, Int& sq, std::vector<Int>& primes) {
    sf = sign_n;
    sq = 1;
    primes.clear();
    for (auto& [p, e] : m) {
        if (e % 2) {
            sf *= p;
            primes.push_back(p);
        }
        sq *= pow(p, e / 2);
    }
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = a0 % p;
    if (a < 0) a += p;
    if (a == 0) return Int(0);
    if (p == 2) return a;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    Int q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    auto powm = [&](const Int& b, const Int& e) {
        Int r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Int c = powm(z, q), x = powm(a, (q + 1) / 2), t = powm(a, q);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

Int gcd3(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

Point3 primitive(Point3 x) {
    Int g = gcd3(x[0], x[1], x[2]);
    if (g != 0)
        for (auto& c : x) c /= g;
    return x;
}

Point3 primitive(const std::array<Rat, 3>& x) {
    Int den = 1;
    for (auto& c : x) den = lcm(den, Int(c.get_den()));
    Point3 z;
    for (std::size_t i = 0; i < 3; ++i) z[i] = Int(x[i] * den);
    return primitive(z);
}

// w^2 = a x^2 + b y^2 with squarefree a, b and known odd-exponent primes.
std::optional<Point3> descent(const Int& a, const std::vector<Int>& pa, const Int& b, const std::vector<Int>& pb) {
    if (abs(a) > abs(b)) {
        auto r = descent(b, pb, a, pa);
        if (!r) return std::nullopt;
        return Point3{(*r)[0], (*r)[2], (*r)[1]};
    }
    if (a == 1) return Point3{1, 1, 0};
    if (b == 1) return Point3{1, 0, 1};
    if (b == -1) return std::nullopt;
    Int m = abs(b);
    auto r0 = sqrt_mod_squarefree(a, m, pb);
    if (!r0) return std::nullopt;
    Int r = *r0 % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    Int q = (r * r - a) / b;
    Int b0 = 1, d = 0;
    std::vector<Int> p0;
    if (q != 0) {
        PrimeMap qm = prime_map(abs(q));
        Int sq;
        split_square(sign(q), qm, b0, sq, p0);
        d = sq;
    }
    auto s = descent(a, pa, b0, p0);
    if (!s) return std::nullopt;
    const Int &W = (*s)[0], &X = (*s)[1], &Y = (*s)[2];
    return primitive(Point3{-a * X + r * W, r * X - W, Y * b0 * d});
}

}  // namespace

Rat conic_value(const Mat3& m, const Point3& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += m[i][j] * Rat(x[i]) * Rat(x[j]);
    return s;
}

std::optional<Int> sqrt_mod_squarefree(const Int& a, const Int& m, const std::vector<Int>& primes) {
    Int r = 0, mod = 1;
    for (auto& p : primes) {
        auto s = sqrt_mod_prime(a, p);
        if (!s) return std::nullopt;
        // CRT: r = r mod mod, r = s mod p
        Int inv;
        mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
        Int k = (*s - r) * inv % p;
        if (k < 0) k += p;
        r += k * mod;
        mod *= p;
    }
    if (mod != abs(m)) throw std::logic_error("sqrt_mod_squarefree: prime list does not match the modulus");
    return r;
}

std::optional<Point3> legendre_descent(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw DomainError("legendre_descent needs nonzero coefficients");
    auto primes = [](const Int& n) {
        std::vector<Int> ps;
        for (auto& [p, e] : prime_map(abs(n))) {
            if (e > 1) throw DomainError("legendre_descent needs squarefree coefficients");
            ps.push_back(p);
        }
        return ps;
    };
    try {
        auto r = descent(a, primes(a), b, primes(b));
        if (r && (*r)[0] * (*r)[0] != a * (*r)[1] * (*r)[1] + b * (*r)[2] * (*r)[2])
            throw std::logic_error("legendre_descent: solution check failed");
        return r;
    } catch (const Incomplete&) {
        throw DomainError("legendre_descent: factorization incomplete");
    }
}

std::optional<Point3> conic_search(const Mat3& m0, long bound) {
    Int den = 1;
    for (auto& row : m0)
        for (auto& c : row) den = lcm(den, Int(c.get_den()));
    std::array<std::array<Int, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = Int(m0[i][j] * den);
    if (m[2][2] == 0) return Point3{0, 0, 1};
    for (long h = 1; h <= bound; ++h) {
        for (long x1 = 0; x1 <= h; ++x1) {
            for (long x2 = -h; x2 <= h; ++x2) {
                if (std::max(x1, std::abs(x2)) != h) continue;
                if (x1 == 0 && x2 < 0) continue;
                Int L = m[0][2] * x1 + m[1][2] * x2;
                Int q = m[0][0] * x1 * x1 + 2 * m[0][1] * x1 * x2 + m[1][1] * x2 * x2;
                Int delta = L * L - m[2][2] * q;
                Int root;
                if (!is_square(delta, &root)) continue;
                Int num = -L + root;
                return primitive(Point3{m[2][2] * x1, m[2][2] * x2, num});
            }
        }
    }
    return std::nullopt;
}

ConicSolution solve_conic(const Mat3& m0) {
    Int den = 1;
    for (auto& row : m0)
        for (auto& c : row) den = lcm(den, Int(c.get_den()));
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = m0[i][j] * den;
    ConicSolution out;
    for (std::size_t i = 0; i < 3; ++i)
        if (m[i][i] == 0) {
            Point3 e{0, 0, 0};
            e[i] = 1;
            out.status = ConicStatus::point;
            out.point = e;
            return out;
        }
    Rat d1 = m[0][0], d2 = m[0][0] * m[1][1] - m[0][1] * m[0][1], d3 = det3(m);
    if (d3 == 0) throw DomainError("singular conic: det M = 0");
    if (d2 == 0) {
        out.status = ConicStatus::point;
        out.point = primitive(std::array<Rat, 3>{-m[0][1], m[0][0], 0});
        return out;
    }
    // Orthogonal basis v1 = e1, v2 = e2 - (m12/m11) e1, v3 = e3 + al e1 + be e2.
    Rat al = (-m[0][2] * m[1][1] + m[1][2] * m[0][1]) / d2;
    Rat be = (-m[0][0] * m[1][2] + m[0][1] * m[0][2]) / d2;
    try {
        Int D1(d1.get_num()), D2(d2.get_num()), D3(d3.get_num());
        PrimeMap f1 = prime_map(abs(D1)), f2 = prime_map(abs(D2)), f3 = prime_map(abs(D3));
        // d1 X^2 + (d2/d1) Y^2 + (d3/d2) Z^2 = 0, times d1 d2:
        // sf(d2) (s1 X)^2 + (d2 Y)^2 + sf(d1 d3) (s3 Z)^2 = 0.
        Int a1, q1, a3, q3;
        std::vector<Int> p1, p3;
        split_square(sign(D2), f2, a1, q1, p1);
        split_square(sign(D1) * sign(D3), merge(f1, f3), a3, q3, p3);
        Rat s1 = Rat(D1 * q1), s3 = Rat(q3);
        out.quadratic_d = a1 == 1 ? Int(1) : Int(-a1);
        auto sol = descent(-a1, p1, -a3, p3);
        if (!sol) {
            out.status = ConicStatus::no_point;
            return out;
        }
        Rat X = Rat((*sol)[1]) / s1, Y = Rat((*sol)[0]) / d2, Z = Rat((*sol)[2]) / s3;
        std::array<Rat, 3> pt{X - Y * m[0][1] / m[0][0] + Z * al, Y + Z * be, Z};
        out.point = primitive(pt);
        if (conic_value(m, *out.point) != 0) throw std::logic_error("solve_conic: point check failed");
        out.status = ConicStatus::point;
        out.quadratic_d = 1;
        return out;
    } catch (const Incomplete&) {
        out.status = ConicStatus::undecided;
        return out;
    }
}

}  // namespace g2
