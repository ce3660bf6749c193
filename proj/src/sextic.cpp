#include "g2/sextic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace g2 {

Sextic Sextic::from_ints(std::array<long, 7> c) {
    Sextic f;
    for (int i = 0; i < 7; ++i) f.a[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    return f;
}

bool Sextic::zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return q == 0; });
}

bool Sextic::integral() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return is_integral(q); });
}

bool Sextic::primitive() const {
    if (!integral() || zero()) return false;
    Int g = 0;
    for (auto& q : a) g = gcd(g, q.get_num());
    return g == 1;
}

Sextic Sextic::swapped() const {
    Sextic r;
    for (std::size_t i = 0; i < 7; ++i) r.a[i] = a[6 - i];
    return r;
}

Poly Sextic::dehomogenized() const {
    std::vector<Rat> c(7);
    for (std::size_t i = 0; i < 7; ++i) c[6 - i] = a[i];
    return Poly(std::move(c));
}

Sextic transform(const Sextic& f, const Mobius& m) {
    if (m.det() == 0) throw DomainError("singular substitution");
    // (aX+bZ)^(6-i) (cX+dZ)^i as coefficient lists in X^(6-k) Z^k.
    auto lin_pow = [](const Rat& p, const Rat& q, unsigned e) {
        std::vector<Rat> r{1};
        for (unsigned t = 0; t < e; ++t) {
            std::vector<Rat> s(r.size() + 1);
            for (std::size_t k = 0; k < r.size(); ++k) {
                s[k] += r[k] * p;
                s[k + 1] += r[k] * q;
            }
            r = std::move(s);
        }
        return r;
    };
    Sextic g;
    for (unsigned i = 0; i < 7; ++i) {
        if (f.a[i] == 0) continue;
        auto u = lin_pow(m.a, m.b, 6 - i), v = lin_pow(m.c, m.d, i);
        for (std::size_t j = 0; j < u.size(); ++j)
            for (std::size_t k = 0; k < v.size(); ++k) g.a[j + k] += f.a[i] * u[j] * v[k];
    }
    return g;
}

Sextic scale(const Sextic& f, const Rat& c) {
    Sextic g = f;
    for (auto& q : g.a) q *= c;
    return g;
}

std::pair<Rat, Sextic> content_primitive(const Sextic& f) {
    if (f.zero()) throw DomainError("zero form has no content");
    Int num = 0, den = 1;
    for (auto& q : f.a) {
        num = gcd(num, q.get_num());
        den = lcm(den, q.get_den());
    }
    Rat c(num, den);
    c.canonicalize();
    auto lead = std::find_if(f.a.begin(), f.a.end(), [](const Rat& q) { return q != 0; });
    if (*lead < 0) c = -c;
    return {c, scale(f, Rat(1) / c)};
}

Int naive_height(const Sextic& f) {
    if (!f.integral()) throw DomainError("normalize first: naive height needs an integral form");
    Int h = 0;
    for (auto& q : f.a) h = std::max(h, Int(abs(q.get_num())));
    return h;
}

Rat resultant_with_derivative(const Sextic& f) {
    Poly p = f.dehomogenized();
    if (p.degree() < 1) throw DomainError("resultant needs a nonconstant polynomial");
    return resultant(p, p.derivative());
}

namespace {

std::string strip(std::string_view s) {
    std::string r;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
    return r;
}

// Polynomial in one variable x with rational coefficients and integer exponents <= 6.
Sextic parse_poly(const std::string& s) {
    Sextic f;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sg = 1;
        if (s[i] == '+' || s[i] == '-') {
            sg = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("expected + or - in polynomial at position " + std::to_string(i));
        }
        const std::size_t term_start = i;
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rat c = 1;
        if (j > i) c = parse_rat(s.substr(i, j - i));
        i = j;
        unsigned e = 0;
        if (i < s.size() && s[i] == '*') {
            if (i == term_start || i + 1 >= s.size() || s[i + 1] != 'x')
                throw std::invalid_argument("misplaced * in polynomial at position " + std::to_string(i));
            ++i;
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            e = 1;
            if (i < s.size() && (s[i] == '^' || (s[i] == '*' && i + 1 < s.size() && s[i + 1] == '*'))) {
                i += s[i] == '^' ? 1 : 2;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw std::invalid_argument("missing exponent in polynomial");
                e = static_cast<unsigned>(std::stoul(s.substr(i, k - i)));
                i = k;
            }
        }
        if (i == term_start) throw std::invalid_argument("malformed term in polynomial at position " + std::to_string(i));
        if (e > 6) throw std::invalid_argument("degree exceeds 6 in polynomial");
        f.a[6 - e] += sg * c;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial");
    return f;
}

}  // namespace

Sextic parse_sextic(std::string_view in) {
    std::string s = strip(in);
    if (s.empty()) throw std::invalid_argument("empty sextic");
    if (s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    Sextic f;
    if (s.find(',') != std::string::npos) {
        std::size_t start = 0;
        for (int k = 0; k < 7; ++k) {
            auto comma = s.find(',', start);
            if ((k < 6) != (comma != std::string::npos))
                throw std::invalid_argument("a sextic needs exactly 7 comma-separated coefficients");
            f.a[static_cast<std::size_t>(k)] = parse_rat(s.substr(start, comma == std::string::npos ? comma : comma - start));
            start = comma + 1;
        }
    } else {
        f = parse_poly(s);
    }
    if (f.zero()) throw DomainError("zero form");
    return f;
}

std::string coeff_list(const Sextic& f) {
    std::string s;
    for (std::size_t i = 0; i < 7; ++i) {
        if (i) s += ",";
        s += to_string(f.a[i]);
    }
    return s;
}

std::string poly_string(const Sextic& f) { return f.dehomogenized().str("x"); }

}  // namespace g2
