#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an input violates a mathematical precondition (exit code 2 in the CLI).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "num" when the denominator is 1, otherwise "num/den".
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Accepts "n", "-n", "n/d"; surrounding whitespace is ignored.
Rat parse_rat(std::string_view s);

Rat pow(const Rat& q, unsigned e);
Int pow(const Int& z, unsigned e);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

int sign(const Rat& q);
int sign(const Int& z);

// Exact square test; on success *root receives the nonnegative root.
bool is_square(const Int& z, Int* root = nullptr);
bool is_square(const Rat& q, Rat* root = nullptr);

// Strict weak order used for deterministic key sorting.
inline bool less(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }

}  // namespace g2
