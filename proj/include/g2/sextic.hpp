#pragma once

#include "g2/poly.hpp"
#include "g2/rational.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace g2 {

// f(x,z) = a[0] x^6 + a[1] x^5 z + ... + a[6] z^6; the curve is y^2 = f(x,1).
struct Sextic {
    std::array<Rat, 7> a{};

    Sextic() = default;
    explicit Sextic(std::array<Rat, 7> c) : a(std::move(c)) {}
    static Sextic from_ints(std::array<long, 7> c);

    bool zero() const;
    bool integral() const;
    bool primitive() const;  // integral with coprime numerators
    Sextic swapped() const;  // x <-> z
    Poly dehomogenized() const;  // f(x,1)
    friend bool operator==(const Sextic&, const Sextic&) = default;
};

// f^M(X,Z) = f(aX + bZ, cX + dZ).
struct Mobius {
    Rat a = 1, b = 0, c = 0, d = 1;
    Rat det() const { return a * d - b * c; }
    Mobius operator*(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

Sextic transform(const Sextic& f, const Mobius& m);
Sextic scale(const Sextic& f, const Rat& c);

// f = c * g with g integral, primitive and first nonzero coefficient positive.
std::pair<Rat, Sextic> content_primitive(const Sextic& f);

Int naive_height(const Sextic& f);

// Res_x(f(x,1), f'(x,1)) over the actual degree of f(x,1).
Rat resultant_with_derivative(const Sextic& f);

// "a0,...,a6" or a polynomial in x such as "x^6-14*x^4-82*x^2+1".
Sextic parse_sextic(std::string_view s);

std::string coeff_list(const Sextic& f);  // "a0,a1,...,a6"
std::string poly_string(const Sextic& f);  // "x^6 - 14*x^4 + ..."

}  // namespace g2
