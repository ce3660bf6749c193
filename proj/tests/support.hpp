#pragma once

#include "g2/invariants.hpp"
#include "g2/sextic.hpp"

#include <random>

namespace g2::testing {

// Integral sextic with coefficients in [-h, h] and J10 != 0.
inline Sextic random_sextic(std::mt19937& rng, long h = 5) {
    std::uniform_int_distribution<long> d(-h, h);
    for (;;) {
        Sextic f;
        for (auto& c : f.a) c = d(rng);
        if (igusa(f).J10 != 0) return f;
    }
}

inline Mobius random_mobius(std::mt19937& rng, long h = 4) {
    std::uniform_int_distribution<long> d(-h, h);
    for (;;) {
        Mobius m{d(rng), d(rng), d(rng), d(rng)};
        if (m.det() != 0) return m;
    }
}

inline Rat random_rat(std::mt19937& rng, long h = 50) {
    std::uniform_int_distribution<long> num(-h, h), den(1, h);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace g2::testing
