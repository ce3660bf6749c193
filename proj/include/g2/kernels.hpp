#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace g2::kernels {

using i128 = __int128;
using Tuple = std::array<std::int8_t, 7>;  // a0..a6 with |ai| <= 127

struct Inv4 {
    i128 j2, j4, j6, j10;
    friend bool operator==(const Inv4&, const Inv4&) = default;
};

enum class Backend { scalar, avx2 };

std::string name(Backend b);

// Compiled in and supported by the running CPU.
bool avx2_available();

// Largest h for which every J-table evaluation on |ai| <= h stays an exact
// integer below 2^53 (sum |c| h^deg < 2^53 bounds every partial sum).
int double_exact_height();

// AVX2 when available and exact for coefficients bounded by h, else scalar.
// G2_KERNEL=scalar in the environment forces the reference kernel.
Backend select(int h);

// Reference kernel: __int128 arithmetic, exact for every Tuple.
void invariants_scalar(const Tuple* in, std::size_t n, Inv4* out);

// 4-lane double kernel; caller guarantees max |ai| <= double_exact_height().
void invariants_avx2(const Tuple* in, std::size_t n, Inv4* out);

void invariants(Backend b, const Tuple* in, std::size_t n, Inv4* out);

}  // namespace g2::kernels
