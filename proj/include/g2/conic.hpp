#pragma once

#include "g2/invariants.hpp"
#include "g2/rational.hpp"

#include <array>
#include <optional>

namespace g2 {

using Point3 = std::array<Int, 3>;

// x^T M x for symmetric M.
Rat conic_value(const Mat3& m, const Point3& x);

// Smallest solution in (max|x|, lexicographic) order among primitive triples
// with |x1|, |x2| <= bound; x3 is solved for exactly.
std::optional<Point3> conic_search(const Mat3& m, long bound);

enum class ConicStatus { point, no_point, undecided };

struct ConicSolution {
    ConicStatus status = ConicStatus::undecided;
    std::optional<Point3> point;  // primitive integral
    // Squarefree d with a point over Q(sqrt d) when status is no_point.
    Int quadratic_d = 1;
};

// Decides solubility of a nonsingular conic by diagonalization and Legendre
// descent; undecided only when a needed factorization is incomplete.
ConicSolution solve_conic(const Mat3& m);

// Solves w^2 = a x^2 + b y^2 for squarefree nonzero a, b; returns (w, x, y).
std::optional<Point3> legendre_descent(const Int& a, const Int& b);

// r with r^2 = a mod |m| for squarefree m given its prime factors.
std::optional<Int> sqrt_mod_squarefree(const Int& a, const Int& m, const std::vector<Int>& primes);

}  // namespace g2
