#include "g2/kernels.hpp"

#include "g2/invariant_tables.hpp"

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace g2::kernels {

namespace {

struct Table {
    const tables::Term* t;
    std::size_t n;
    int degree;
};

const Table kTables[4] = {{tables::j2_terms, tables::j2_size, 2},
                          {tables::j4_terms, tables::j4_size, 4},
                          {tables::j6_terms, tables::j6_size, 6},
                          {tables::j10_terms, tables::j10_size, 10}};

i128 eval(const Table& tb, const i128 (&pw)[7][11]) {
    i128 s = 0;
    for (std::size_t k = 0; k < tb.n; ++k) {
        const auto& term = tb.t[k];
        i128 m = term.coef;
        for (int i = 0; i < 7; ++i)
            if (term.e[i]) m *= pw[i][term.e[i]];
        s += m;
    }
    return s;
}

}  // namespace

std::string name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

#if G2_WITH_AVX2
bool avx2_compiled();
#endif

bool avx2_available() {
#if G2_WITH_AVX2
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") && avx2_compiled();
    return ok;
#else
    return false;
#endif
}

int double_exact_height() {
    static const int h = [] {
        const double limit = 9007199254740992.0;  // 2^53
        int best = 0;
        for (int cand = 1; cand < 128; ++cand) {
            bool ok = true;
            for (const auto& tb : kTables) {
                double s = 0;
                for (std::size_t k = 0; k < tb.n; ++k) s += std::fabs(static_cast<double>(tb.t[k].coef));
                if (s * std::pow(cand, tb.degree) >= limit) ok = false;
            }
            if (!ok) break;
            best = cand;
        }
        return best;
    }();
    return h;
}

Backend select(int h) {
    if (const char* env = std::getenv("G2_KERNEL"); env && std::string_view(env) == "scalar") return Backend::scalar;
    if (avx2_available() && h <= double_exact_height()) return Backend::avx2;
    return Backend::scalar;
}

void invariants_scalar(const Tuple* in, std::size_t n, Inv4* out) {
    i128 pw[7][11];
    for (std::size_t r = 0; r < n; ++r) {
        for (int i = 0; i < 7; ++i) {
            pw[i][0] = 1;
            for (int e = 1; e <= 10; ++e) pw[i][e] = pw[i][e - 1] * in[r][static_cast<std::size_t>(i)];
        }
        out[r] = {eval(kTables[0], pw), eval(kTables[1], pw), eval(kTables[2], pw), eval(kTables[3], pw)};
    }
}

#if !G2_WITH_AVX2
void invariants_avx2(const Tuple* in, std::size_t n, Inv4* out) { invariants_scalar(in, n, out); }
#endif

void invariants(Backend b, const Tuple* in, std::size_t n, Inv4* out) {
    if (b == Backend::avx2 && avx2_available())
        invariants_avx2(in, n, out);
    else
        invariants_scalar(in, n, out);
}

}  // namespace g2::kernels
