#pragma once

#include "g2/classify.hpp"
#include "g2/factor.hpp"
#include "g2/invariants.hpp"
#include "g2/sextic.hpp"

#include <optional>

namespace g2 {

// Height of the primitive integer point [J2^5 : J4 J2^3 : J6 J2^2 : J10].
Int moduli_height(const Igusa& v);

struct PrimeReduction {
    Sextic form;     // integral primitive
    unsigned m = 0;  // exponent of the substitution x -> p^m x (0: unchanged)
    bool swapped = false;  // substitution applied to z instead of x
};

PrimeReduction reduce_at_prime(const Sextic& f, const Int& p);

struct HeightReport {
    Int naive;
    std::optional<Int> minimal;  // empty: unknown above the search bound
    Sextic witness;              // smallest form found, same key
    Int search_bound;            // heights below this were searched exhaustively
    Int stage1_height;           // height after prime reductions
};

// Stage 1 reduces at primes dividing a0 or a6; stage 2 searches all forms
// of smaller height when the stage-1 height is at most budget and the
// search space stays below max_forms.
HeightReport minimal_height(const Sextic& f, long budget = 10, unsigned jobs = 1,
                            double max_forms = 2.5e9);

struct DiscriminantReport {
    Sextic form;
    Factorization j10;  // factored J10 of the output
    unsigned twist_degree = 1;  // n when the shape f(x^n) was used with twists
};

DiscriminantReport minimal_discriminant(const Sextic& f, bool allow_twists);

// Defined over Q(u, v); requires u != 0 and 4u^3 != v^2.
Sextic v4_minimal_model(const Dihedral& d);

}  // namespace g2
