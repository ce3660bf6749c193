#include "g2/rational.hpp"

#include <algorithm>
#include <cctype>

namespace g2 {

std::string to_string(const Rat& q) { return q.get_str(10); }

std::string to_string(const Int& z) { return z.get_str(10); }

Rat parse_rat(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw std::invalid_argument("empty rational");
    std::string t(s.substr(b, e - b + 1));
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    auto digits_ok = [](const std::string& u, bool allow_sign) {
        if (u.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && u[0] == '-') i = 1;
        if (i == u.size()) return false;
        return std::all_of(u.begin() + static_cast<long>(i), u.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    if (slash == std::string::npos) {
        if (!digits_ok(t, true)) throw std::invalid_argument("malformed rational: " + t);
        return Rat(Int(t));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!digits_ok(n, true) || !digits_ok(d, false))
        throw std::invalid_argument("malformed rational: " + t);
    Int den(d);
    if (den == 0) throw std::invalid_argument("zero denominator: " + t);
    Rat q(Int(n), den);
    q.canonicalize();
    return q;
}

Rat pow(const Rat& q, unsigned e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

Int pow(const Int& z, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

int sign(const Rat& q) { return sgn(q); }
int sign(const Int& z) { return sgn(z); }

bool is_square(const Int& z, Int* root) {
    if (z < 0) return false;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    if (root) *root = sqrt(z);
    return true;
}

bool is_square(const Rat& q, Rat* root) {
    Int n, d;
    if (!is_square(q.get_num(), &n) || !is_square(q.get_den(), &d)) return false;
    if (root) *root = Rat(n, d);
    return true;
}

}  // namespace g2
