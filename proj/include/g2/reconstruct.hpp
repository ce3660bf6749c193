#pragma once

#include "g2/classify.hpp"
#include "g2/conic.hpp"
#include "g2/invariants.hpp"
#include "g2/sextic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2 {

struct ConicCubic {
    Mat3 conic;  // psi(x) = x^T M x
    // a[j][k][l] for 0 <= j <= k <= l < 3; other entries unused.
    std::array<std::array<std::array<Rat, 3>, 3>, 3> cubic{};
    Clebsch clebsch;
};

// Cubic coefficients from Clebsch invariants (j <= k <= l).
ConicCubic conic_cubic_from_clebsch(const Clebsch& c);
ConicCubic build_conic_cubic(const ModuliKey& k);
// Sum over ordered index triples, each sorted coefficient weighted by its multiplicity.
Rat cubic_value(const ConicCubic& cc, const std::array<Rat, 3>& x);

// d^2 at the J2 = 1 normalization; requires J2 != 0.
Rat d_squared(const ModuliKey& k);

struct FieldOfDefinition {
    enum class Kind { rational, quadratic } kind = Kind::rational;
    Int d = 1;           // squarefree; 1 when rational
    std::string reason;  // "involution", "conic", "model"
    friend bool operator==(const FieldOfDefinition&, const FieldOfDefinition&) = default;
    std::string kind_name() const { return kind == Kind::rational ? "rational" : "quadratic"; }
};

FieldOfDefinition rationality_obstruction(const ModuliKey& k);

// D4 model y^2 = x^5 + x^3 + s x and D6 model y^2 = x^6 + x^3 + w.
Rat d4_parameter(const ModuliKey& k);
Rat d6_parameter(const ModuliKey& k);

struct Reconstruction {
    std::string route;             // special, d4, d6, v4, mestre
    std::optional<Sextic> curve;   // content-normalized, key verified
    std::optional<Rat> parameter;  // s or w on the d4 and d6 routes
    std::optional<Dihedral> uv;    // v4 route
    FieldOfDefinition field;       // quadratic: certificate instead of a curve
};

// Throws DomainError "point search exhausted" when the conic is undecided
// and no point exists within search_bound.
Reconstruction reconstruct(const ModuliKey& k, long search_bound = 1000);

// Curve from the conic and cubic through a conic point p.
Sextic mestre_sextic(const ConicCubic& cc, const Point3& p);

// Integral primitive forms of height <= h with key k, one per x <-> z pair.
std::vector<Sextic> twist_set(const ModuliKey& k, int h, unsigned jobs = 1);

}  // namespace g2
