#include "g2/poly.hpp"

#include "g2/factor.hpp"

#include <algorithm>
#include <set>

namespace g2 {

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::x() { return Poly(std::vector<Rat>{0, 1}); }

Rat Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rat Poly::operator()(const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

Poly Poly::derivative() const {
    std::vector<Rat> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    Poly r = *this;
    r *= Rat(1) / c_.back();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Rat m = abs(a);
        if (s.empty())
            s += a < 0 ? "-" : "";
        else
            s += a < 0 ? " - " : " + ";
        bool unit = m == 1 && i > 0;
        if (!unit) s += to_string(m);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly pow(const Poly& p, unsigned e) {
    Poly r(Rat(1)), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs(), quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
    Rat lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Rat c = rem[static_cast<std::size_t>(i)] / lb;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[j];
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rat det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rat sgn = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sgn * m[n - 1][n - 1];
}

Rat resultant(const Poly& p, const Poly& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) return pow(p.lead(), static_cast<unsigned>(n));
    if (n == 0) return pow(q.lead(), static_cast<unsigned>(m));
    std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = p[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = q[n - i];
    return det(std::move(s));
}

namespace {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{1};
    if (abs(n) <= 1) return ds;
    auto f = factor(n);
    if (!f.complete()) throw DomainError("rational root search: cannot factor " + n.get_str());
    for (auto& [p, e] : f.factors) {
        std::size_t base = ds.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
        if (ds.size() > 2000000) throw DomainError("rational root search: too many divisors");
    }
    return ds;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p0) {
    std::set<Rat, decltype([](const Rat& a, const Rat& b) { return cmp(a, b) < 0; })> roots;
    if (p0.degree() <= 0) return {};
    // Squarefree part keeps the integer coefficients small.
    Poly p = p0;
    Poly g = gcd(p, p.derivative());
    if (g.degree() > 0) {
        Poly q, r;
        divmod(p, g, q, r);
        p = q;
    }
    while (p.degree() > 0 && p[0] == 0) {
        roots.insert(0);
        Poly q, r;
        divmod(p, Poly::x(), q, r);
        p = q;
    }
    int d = p.degree();
    if (d == 1) {
        roots.insert(-p[0] / p[1]);
    } else if (d == 2) {
        Rat disc = p[1] * p[1] - 4 * p[2] * p[0], s;
        if (is_square(disc, &s)) {
            roots.insert((-p[1] + s) / (2 * p[2]));
            roots.insert((-p[1] - s) / (2 * p[2]));
        }
    } else if (d > 2) {
        Int l = 1;
        for (auto& c : p.coeffs()) l = lcm(l, c.get_den());
        std::vector<Int> z;
        for (auto& c : p.coeffs()) z.push_back(Int(c * l));
        auto num = divisors(z.front()), den = divisors(z.back());
        for (auto& a : num)
            for (auto& b : den)
                for (int s : {1, -1}) {
                    Rat t(a * s, b);
                    t.canonicalize();
                    if (p(t) == 0) roots.insert(t);
                }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace g2
