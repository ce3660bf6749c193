#pragma once

#include "g2/rational.hpp"

#include <string>
#include <vector>

namespace g2 {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> c);
    Poly(const Rat& c);  // constant

    static Poly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat operator[](int i) const;
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& t) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Poly monic() const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& p, unsigned e);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

// Exact determinant by fraction-free elimination over Q.
Rat det(std::vector<std::vector<Rat>> m);

// Sylvester resultant Res(p, q) with respect to their formal degrees.
Rat resultant(const Poly& p, const Poly& q);

// All rational roots, ascending, without multiplicity.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace g2
