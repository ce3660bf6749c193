#pragma once

#include <cstddef>
#include <cstdint>

namespace g2::tables {

// coef * a0^e[0] * ... * a6^e[6]
struct Term {
    std::int64_t coef;
    std::uint8_t e[7];
};

extern const Term j2_terms[];
extern const std::size_t j2_size;
extern const Term j4_terms[];
extern const std::size_t j4_size;
extern const Term j6_terms[];
extern const std::size_t j6_size;
extern const Term j10_terms[];  // classical discriminant
extern const std::size_t j10_size;

}  // namespace g2::tables
