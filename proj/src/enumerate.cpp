#include "g2/enumerate.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace g2::enumerate {

namespace {

using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

bool canonical(const Tuple& t) {
    int g = 0;
    int first = 0;
    for (auto c : t) {
        if (first == 0) first = c;
        g = std::gcd(g, static_cast<int>(c));
    }
    return first > 0 && g == 1;
}

int height(const Tuple& t) {
    int h = 0;
    for (auto c : t) h = std::max(h, std::abs(static_cast<int>(c)));
    return h;
}

Sextic to_sextic(const Tuple& t) {
    Sextic f;
    for (std::size_t i = 0; i < 7; ++i) f.a[i] = t[i];
    return f;
}

std::string tuple_string(const Tuple& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < 7; ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(t[i]));
    }
    return s + "]";
}

std::size_t ClassKeyHash::operator()(const ClassKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : k.v) {
        auto u = static_cast<u128>(v);
        for (std::uint64_t part : {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)}) {
            h ^= part + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
    }
    return static_cast<std::size_t>(h);
}

std::optional<ClassKey> class_key(const Inv4& j) {
    if (j.j2 == 0) return std::nullopt;
    i128 j2_2 = j.j2 * j.j2, j2_3 = j2_2 * j.j2;
    ClassKey k{{j2_3 * j2_2, j.j4 * j2_3, j.j6 * j2_2, j.j10}};
    u128 g = 0;
    for (auto v : k.v) g = gcd128(g, uabs(v));
    i128 d = static_cast<i128>(g);
    if (k.v[0] < 0) d = -d;
    for (auto& v : k.v) v /= d;
    return k;
}

Matcher::Matcher(const Igusa& target) : key_(key_from_igusa(target)) {
    if (target.J2 == 0) return;
    Rat J2_2 = target.J2 * target.J2, J2_3 = J2_2 * target.J2;
    std::array<Rat, 4> p{J2_3 * J2_2, target.J4 * J2_3, target.J6 * J2_2, target.J10};
    Int den = 1, g = 0;
    for (auto& q : p) den = lcm(den, Int(q.get_den()));
    std::array<Int, 4> z;
    for (std::size_t i = 0; i < 4; ++i) {
        z[i] = Int(p[i] * den);
        g = gcd(g, z[i]);
    }
    if (z[0] < 0) g = -g;
    ClassKey k{};
    for (std::size_t i = 0; i < 4; ++i) {
        Int c = z[i] / g;
        if (mpz_sizeinbase(c.get_mpz_t(), 2) > 125) {
            reachable_ = false;
            return;
        }
        Int a = abs(c);
        Int hi = a >> 64;
        Int lo = a - (hi << 64);
        i128 v = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
        k.v[i] = c < 0 ? -v : v;
    }
    class_ = k;
}

Matcher::Matcher(const ModuliKey& target) : key_(target) {
    if (target.r == -1) *this = Matcher(igusa_from_key(target));
}

bool Matcher::matches(const Tuple& t, const Inv4& inv) const {
    if (!reachable_ || inv.j10 == 0) return false;
    if (class_) {
        auto k = class_key(inv);
        return k && *k == *class_;
    }
    return inv.j2 == 0 && moduli_key(to_sextic(t)) == key_;
}

unsigned resolve_jobs(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("G2_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void for_each_canonical(int hmin, int hmax, unsigned jobs, const Visitor& visit) {
    for_each_canonical(hmin, hmax, jobs, visit, kernels::select(hmax));
}

void for_each_canonical(int hmin, int hmax, unsigned jobs, const Visitor& visit, kernels::Backend backend) {
    if (hmax < 0 || hmax > 127) throw std::invalid_argument("enumeration height must lie in [0, 127]");
    const int side = 2 * hmax + 1;
    const long chunks = static_cast<long>(side) * side * side;  // prefix (a0, a1, a2)
    std::atomic<long> next{0};
    auto work = [&](unsigned worker) {
        std::vector<Tuple> batch;
        std::vector<Inv4> inv;
        batch.reserve(static_cast<std::size_t>(side) * side * side * side);
        for (long c = next++; c < chunks; c = next++) {
            Tuple t{};
            long r = c;
            for (int i = 2; i >= 0; --i) {
                t[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(r % side - hmax);
                r /= side;
            }
            batch.clear();
            for (int a3 = -hmax; a3 <= hmax; ++a3)
                for (int a4 = -hmax; a4 <= hmax; ++a4)
                    for (int a5 = -hmax; a5 <= hmax; ++a5)
                        for (int a6 = -hmax; a6 <= hmax; ++a6) {
                            t[3] = static_cast<std::int8_t>(a3);
                            t[4] = static_cast<std::int8_t>(a4);
                            t[5] = static_cast<std::int8_t>(a5);
                            t[6] = static_cast<std::int8_t>(a6);
                            if (height(t) < hmin || !canonical(t)) continue;
                            batch.push_back(t);
                        }
            if (batch.empty()) continue;
            inv.resize(batch.size());
            kernels::invariants(backend, batch.data(), batch.size(), inv.data());
            visit(worker, batch.data(), inv.data(), batch.size());
        }
    };
    if (jobs <= 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
}

std::uint64_t count_canonical(int h) {
    const int side = 2 * h + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < 7; ++i) total *= static_cast<std::uint64_t>(side);
    std::uint64_t n = 0;
    Tuple t{};
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (int i = 6; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(static_cast<int>(r % static_cast<std::uint64_t>(side)) - h);
            r /= static_cast<std::uint64_t>(side);
        }
        if (canonical(t)) ++n;
    }
    return n;
}

}  // namespace g2::enumerate
