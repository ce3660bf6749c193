#pragma once

#include "g2/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace g2 {

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;  // ascending primes
    // Composite cofactor left after the rho budget ran out; 1 when complete.
    Int unfactored = 1;

    bool complete() const { return unfactored == 1; }
    Int value() const;
    // "-2^6*17^4*12301^2"; an unfactored cofactor is wrapped as "[c]".
    std::string str() const;
};

bool is_probable_prime(const Int& n);

// Trial division up to 2^16, then Pollard-Brent. rho_budget bounds the
// iterations spent on each composite cofactor.
Factorization factor(const Int& n, unsigned long rho_budget = 2000000);

unsigned valuation(const Int& n, const Int& p);
int valuation(const Rat& q, const Int& p);  // v_p(num) - v_p(den)

// Squarefree part with sign: n = s * m^2.  Requires a complete factorization.
Int squarefree_part(const Int& n);
Int squarefree_part(const Rat& q);

// Rational primes dividing the numerator or denominator.
std::vector<Int> prime_support(const Rat& q);

}  // namespace g2
