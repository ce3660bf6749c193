// Built with -mavx2 -mfma; only reached after the runtime CPU check.
#include "g2/invariant_tables.hpp"
#include "g2/kernels.hpp"

#include <immintrin.h>

#include <vector>

namespace g2::kernels {

bool avx2_compiled() { return true; }

namespace {

struct Flat {
    double coef;
    std::uint8_t nf;
    std::uint8_t var[7];
    std::uint8_t exp[7];
};

std::vector<Flat> flatten(const tables::Term* t, std::size_t n) {
    std::vector<Flat> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Flat f{static_cast<double>(t[k].coef), 0, {}, {}};
        for (std::uint8_t i = 0; i < 7; ++i)
            if (t[k].e[i]) {
                f.var[f.nf] = i;
                f.exp[f.nf] = t[k].e[i];
                ++f.nf;
            }
        out.push_back(f);
    }
    return out;
}

const std::vector<Flat>& flat(int which) {
    static const std::vector<Flat> t[4] = {flatten(tables::j2_terms, tables::j2_size),
                                           flatten(tables::j4_terms, tables::j4_size),
                                           flatten(tables::j6_terms, tables::j6_size),
                                           flatten(tables::j10_terms, tables::j10_size)};
    return t[which];
}

inline __m256d eval4(const std::vector<Flat>& terms, const __m256d (&pw)[7][11]) {
    __m256d acc = _mm256_setzero_pd();
    for (const auto& f : terms) {
        __m256d m = pw[f.var[0]][f.exp[0]];
        for (int j = 1; j < f.nf; ++j) m = _mm256_mul_pd(m, pw[f.var[j]][f.exp[j]]);
        acc = _mm256_fmadd_pd(_mm256_set1_pd(f.coef), m, acc);
    }
    return acc;
}

}  // namespace

void invariants_avx2(const Tuple* in, std::size_t n, Inv4* out) {
    const auto& t2 = flat(0);
    const auto& t4 = flat(1);
    const auto& t6 = flat(2);
    const auto& t10 = flat(3);
    std::size_t r = 0;
    __m256d pw[7][11];
    alignas(32) double res[4][4];
    for (; r + 4 <= n; r += 4) {
        for (int i = 0; i < 7; ++i) {
            const auto k = static_cast<std::size_t>(i);
            pw[i][0] = _mm256_set1_pd(1.0);
            pw[i][1] = _mm256_set_pd(in[r + 3][k], in[r + 2][k], in[r + 1][k], in[r][k]);
            for (int e = 2; e <= 10; ++e) pw[i][e] = _mm256_mul_pd(pw[i][e - 1], pw[i][1]);
        }
        _mm256_store_pd(res[0], eval4(t2, pw));
        _mm256_store_pd(res[1], eval4(t4, pw));
        _mm256_store_pd(res[2], eval4(t6, pw));
        _mm256_store_pd(res[3], eval4(t10, pw));
        for (int l = 0; l < 4; ++l)
            out[r + static_cast<std::size_t>(l)] = {static_cast<i128>(static_cast<long long>(res[0][l])),
                                                   static_cast<i128>(static_cast<long long>(res[1][l])),
                                                   static_cast<i128>(static_cast<long long>(res[2][l])),
                                                   static_cast<i128>(static_cast<long long>(res[3][l]))};
    }
    if (r < n) invariants_scalar(in + r, n - r, out + r);
}

}  // namespace g2::kernels
