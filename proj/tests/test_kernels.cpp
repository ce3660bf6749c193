#include "g2/enumerate.hpp"
#include "g2/invariants.hpp"
#include "g2/kernels.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <random>
#include <vector>

using namespace g2;
using kernels::Inv4;
using kernels::Tuple;

namespace {

std::vector<Tuple> box(int h) {
    std::vector<Tuple> out;
    const int side = 2 * h + 1;
    long total = 1;
    for (int i = 0; i < 7; ++i) total *= side;
    for (long idx = 0; idx < total; ++idx) {
        Tuple t;
        long r = idx;
        for (auto& c : t) {
            c = static_cast<std::int8_t>(r % side - h);
            r /= side;
        }
        out.push_back(t);
    }
    return out;
}

std::vector<Tuple> random_tuples(int h, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-h, h);
    std::vector<Tuple> out(n);
    for (auto& t : out)
        for (auto& c : t) c = static_cast<std::int8_t>(d(rng));
    return out;
}

Int to_int(kernels::i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

}  // namespace

TEST_CASE("scalar kernel matches exact invariants") {
    auto ts = random_tuples(127, 200, 1);
    auto small = random_tuples(3, 200, 2);
    ts.insert(ts.end(), small.begin(), small.end());
    std::vector<Inv4> out(ts.size());
    kernels::invariants_scalar(ts.data(), ts.size(), out.data());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Igusa J = igusa(enumerate::to_sextic(ts[i]));
        CHECK(Rat(to_int(out[i].j2)) == J.J2);
        CHECK(Rat(to_int(out[i].j4)) == J.J4);
        CHECK(Rat(to_int(out[i].j6)) == J.J6);
        CHECK(Rat(to_int(out[i].j10)) == J.J10);
    }
}

TEST_CASE("double kernel is exact up to height 9") { CHECK(kernels::double_exact_height() == 9); }

TEST_CASE("AVX2 kernel equals the scalar kernel") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 not available on this CPU; dispatch falls back to scalar");
        CHECK(kernels::select(2) == kernels::Backend::scalar);
        return;
    }
    auto check = [](const std::vector<Tuple>& ts) {
        std::vector<Inv4> a(ts.size()), b(ts.size());
        kernels::invariants_scalar(ts.data(), ts.size(), a.data());
        kernels::invariants_avx2(ts.data(), ts.size(), b.data());
        std::size_t bad = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) bad += !(a[i] == b[i]);
        CHECK(bad == 0);
    };
    check(box(2));  // every tuple of height <= 2, including odd batch tails
    check(random_tuples(kernels::double_exact_height(), 100003, 3));
    std::vector<Tuple> extreme;
    for (int s = 0; s < 128; ++s) {
        Tuple t;
        for (int i = 0; i < 7; ++i) t[static_cast<std::size_t>(i)] = static_cast<std::int8_t>((s >> i) & 1 ? 9 : -9);
        extreme.push_back(t);
    }
    check(extreme);
}

TEST_CASE("backend selection") {
    if (kernels::avx2_available()) {
        CHECK(kernels::select(kernels::double_exact_height()) == kernels::Backend::avx2);
        CHECK(kernels::select(kernels::double_exact_height() + 1) == kernels::Backend::scalar);
        setenv("G2_KERNEL", "scalar", 1);
        CHECK(kernels::select(1) == kernels::Backend::scalar);
        unsetenv("G2_KERNEL");
    }
    CHECK(kernels::select(100) == kernels::Backend::scalar);
}

TEST_CASE("canonical enumeration counts") {
    CHECK(enumerate::count_canonical(1) == 1093u);
    CHECK(enumerate::count_canonical(2) == 37969u);
    for (int jobs : {1, 3}) {
        std::atomic<std::uint64_t> n{0};
        enumerate::for_each_canonical(1, 2, static_cast<unsigned>(jobs),
                                      [&](unsigned, const Tuple*, const Inv4*, std::size_t k) { n += k; });
        CHECK(n.load() == 37969u);
    }
    std::atomic<std::uint64_t> shell{0};
    enumerate::for_each_canonical(2, 2, 1, [&](unsigned, const Tuple* t, const Inv4*, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) CHECK(enumerate::height(t[i]) == 2);
        shell += k;
    });
    CHECK(shell.load() == 37969u - 1093u);
}

TEST_CASE("both backends drive the enumeration identically") {
    auto sum = [](kernels::Backend b) {
        std::atomic<long long> s{0};
        enumerate::for_each_canonical(
            1, 2, 2,
            [&](unsigned, const Tuple*, const Inv4* inv, std::size_t k) {
                long long local = 0;
                for (std::size_t i = 0; i < k; ++i)
                    local += static_cast<long long>(inv[i].j10 % 1000003) + static_cast<long long>(inv[i].j6 % 997);
                s += local;
            },
            b);
        return s.load();
    };
    CHECK(sum(kernels::Backend::scalar) == sum(kernels::avx2_available() ? kernels::Backend::avx2
                                                                         : kernels::Backend::scalar));
}

TEST_CASE("class keys identify moduli points") {
    std::mt19937 rng(3);
    auto ts = random_tuples(3, 400, 4);
    std::vector<Inv4> inv(ts.size());
    kernels::invariants_scalar(ts.data(), ts.size(), inv.data());
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < std::min(ts.size(), i + 40); ++j) {
            if (inv[i].j10 == 0 || inv[j].j10 == 0 || inv[i].j2 == 0 || inv[j].j2 == 0) continue;
            bool same = *enumerate::class_key(inv[i]) == *enumerate::class_key(inv[j]);
            CHECK(same == (moduli_key(enumerate::to_sextic(ts[i])) == moduli_key(enumerate::to_sextic(ts[j]))));
        }
}
