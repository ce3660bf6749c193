#include "g2/heights.hpp"

#include "g2/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <mutex>

namespace g2 {

Int moduli_height(const Igusa& v) {
    if (v.J10 == 0) throw DomainError("J10 = 0: moduli height undefined");
    Rat J2_2 = v.J2 * v.J2, J2_3 = J2_2 * v.J2;
    std::array<Rat, 4> p{J2_3 * J2_2, v.J4 * J2_3, v.J6 * J2_2, v.J10};
    Int den = 1, g = 0;
    for (auto& q : p) den = lcm(den, q.get_den());
    Int m = 0;
    std::array<Int, 4> z;
    for (std::size_t i = 0; i < 4; ++i) {
        z[i] = Int(p[i] * den);
        g = gcd(g, z[i]);
    }
    for (auto& c : z) m = std::max(m, Int(abs(c) / g));
    return m;
}

namespace {

// x -> p^m x anchored at the constant term a6; m = min floor((v6 - vi)/(6 - i)).
PrimeReduction reduce_one(const Sextic& f, const Int& p) {
    std::array<long, 7> val{};
    for (std::size_t i = 0; i < 7; ++i) val[i] = f.a[i] == 0 ? LONG_MAX : static_cast<long>(valuation(f.a[i].get_num(), p));
    if (val[6] == LONG_MAX) return {f, 0, false};
    long m = LONG_MAX;
    for (std::size_t i = 0; i < 6; ++i) {
        if (val[i] == LONG_MAX) continue;
        long d = val[6] - val[i];
        long q = d >= 0 ? d / static_cast<long>(6 - i) : -((-d + static_cast<long>(6 - i) - 1) / static_cast<long>(6 - i));
        m = std::min(m, q);
    }
    if (m == LONG_MAX || m <= 0) return {f, 0, false};
    Int pm = pow(p, static_cast<unsigned>(m));
    Sextic g = transform(f, Mobius{Rat(pm), 0, 0, 1});
    return {content_primitive(g).second, static_cast<unsigned>(m), false};
}

}  // namespace

PrimeReduction reduce_at_prime(const Sextic& f, const Int& p) {
    if (!f.integral()) throw DomainError("normalize first: reduction needs an integral form");
    if (!is_probable_prime(p)) throw DomainError("reduction needs a prime, got " + p.get_str());
    Sextic base = content_primitive(f).second;
    PrimeReduction a = reduce_one(base, p);
    PrimeReduction b = reduce_one(base.swapped(), p);
    b.form = b.form.swapped();
    b.swapped = true;
    Int h0 = naive_height(base), ha = naive_height(a.form), hb = naive_height(b.form);
    if (a.m == 0 && b.m == 0) return {base, 0, false};
    if (b.m > 0 && (a.m == 0 || hb < ha)) return hb < h0 ? b : PrimeReduction{base, 0, false};
    return ha < h0 ? a : PrimeReduction{base, 0, false};
}

namespace {

bool tuple_less(const enumerate::Tuple& a, const enumerate::Tuple& b) {
    for (std::size_t i = 0; i < 7; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

double box_size(long h) {
    double s = 1;
    for (int i = 0; i < 7; ++i) s *= static_cast<double>(2 * h + 1);
    return s / 2;
}

}  // namespace

HeightReport minimal_height(const Sextic& f0, long budget, unsigned jobs, double max_forms) {
    Sextic f = content_primitive(f0).second;
    if (!f.integral()) throw DomainError("normalize first");
    Igusa target = igusa(f);
    if (target.J10 == 0) throw DomainError("J10 = 0: not genus 2");
    HeightReport rep;
    rep.naive = naive_height(f);

    // Stage 1: prime reductions to a fixpoint.
    Sextic cur = f;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Int> primes;
        for (std::size_t idx : {std::size_t{0}, std::size_t{6}})
            if (cur.a[idx] != 0)
                for (auto& p : prime_support(cur.a[idx])) primes.push_back(p);
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (auto& p : primes) {
            auto r = reduce_at_prime(cur, p);
            if (r.m > 0 && naive_height(r.form) < naive_height(cur)) {
                cur = r.form;
                changed = true;
            }
        }
    }
    rep.stage1_height = naive_height(cur);
    rep.witness = cur;
    rep.search_bound = 1;
    if (rep.stage1_height == 1) {
        rep.minimal = Int(1);
        return rep;
    }
    if (rep.stage1_height > budget || rep.stage1_height > 127) return rep;

    // Stage 2: shells of increasing height below the stage-1 height.
    const long H = rep.stage1_height.get_si();
    const enumerate::Matcher match(target);
    for (long h = 1; h < H; ++h) {
        if (box_size(h) > max_forms) return rep;
        std::mutex mu;
        std::optional<enumerate::Tuple> best;
        enumerate::for_each_canonical(
            static_cast<int>(h), static_cast<int>(h), jobs,
            [&](unsigned, const enumerate::Tuple* t, const enumerate::Inv4* inv, std::size_t n) {
                std::optional<enumerate::Tuple> local;
                for (std::size_t i = 0; i < n; ++i)
                    if (match.matches(t[i], inv[i]) && (!local || tuple_less(t[i], *local))) local = t[i];
                if (local) {
                    std::lock_guard lock(mu);
                    if (!best || tuple_less(*local, *best)) best = local;
                }
            });
        rep.search_bound = h + 1;
        if (best) {
            rep.minimal = Int(h);
            rep.witness = enumerate::to_sextic(*best);
            return rep;
        }
    }
    rep.minimal = Int(H);
    return rep;
}

namespace {

unsigned vp_j10(const Sextic& f, const Int& p) { return valuation(igusa(f).J10.get_num(), p); }

// Candidate lattice moves at p: x -> p x + r z for roots r of f mod p, and z -> p z.
std::vector<Sextic> moves(const Sextic& f, const Int& p) {
    std::vector<Sextic> out;
    Poly g = f.dehomogenized();
    auto consider = [&](const Int& r) {
        out.push_back(content_primitive(transform(f, Mobius{Rat(p), Rat(r), 0, 1})).second);
    };
    if (p < 100000) {
        for (long r = 0; r < p.get_si(); ++r) {
            Rat val = g(Rat(r));
            if (mpz_divisible_p(val.get_num_mpz_t(), p.get_mpz_t())) consider(Int(r));
        }
    } else if (Int(f.a[0].get_num()) % p != 0) {
        // A root of multiplicity >= 5 mod p is the root of the fifth derivative.
        Int inv, a0 = 6 * Int(f.a[0].get_num());
        mpz_invert(inv.get_mpz_t(), a0.get_mpz_t(), p.get_mpz_t());
        Int r = -Int(f.a[1].get_num()) * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        consider(r);
    }
    out.push_back(content_primitive(transform(f, Mobius{1, 0, 0, Rat(p)})).second);
    return out;
}

// Twists y^2 = g(x^n) -> g(p^s x^n), s = +-1; valid only for the shapes tested by caller.
std::vector<Sextic> twist_moves(const Sextic& f, const Int& p, unsigned n) {
    std::vector<Sextic> out;
    for (int s : {1, -1}) {
        Sextic g = f;
        for (std::size_t i = 0; i < 7; i += n) {
            // a_i multiplies x^(6-i) = (x^n)^((6-i)/n)
            long k = static_cast<long>((6 - i) / n) * s;
            Rat scale = k >= 0 ? Rat(pow(p, static_cast<unsigned>(k))) : Rat(1) / Rat(pow(p, static_cast<unsigned>(-k)));
            g.a[i] *= scale;
        }
        out.push_back(content_primitive(g).second);
    }
    return out;
}

unsigned decomposable_degree(const Sextic& f) {
    auto zero = [&](std::initializer_list<int> idx) {
        for (int i : idx)
            if (f.a[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    };
    if (zero({1, 2, 4, 5})) return 3;
    if (zero({1, 3, 5})) return 2;
    return 1;
}

}  // namespace

DiscriminantReport minimal_discriminant(const Sextic& f0, bool allow_twists) {
    Sextic f = content_primitive(f0).second;
    if (igusa(f).J10 == 0) throw DomainError("J10 = 0: not genus 2");
    DiscriminantReport rep;
    unsigned n = allow_twists ? decomposable_degree(f) : 1;
    const unsigned bound = n == 2 ? 15 : n == 3 ? 10 : 30;
    for (bool improved = true; improved;) {
        improved = false;
        auto fz = factor(igusa(f).J10.get_num());
        for (auto& [p, e] : fz.factors) {
            if (e < bound) continue;
            unsigned best_v = e;
            Sextic best = f;
            auto cands = moves(f, p);
            if (n > 1)
                for (auto& g : twist_moves(f, p, n)) cands.push_back(g);
            for (auto& g : cands) {
                unsigned v = vp_j10(g, p);
                if (v < best_v) {
                    best_v = v;
                    best = g;
                }
            }
            if (best_v < e) {
                f = best;
                improved = true;
                break;
            }
        }
    }
    rep.form = f;
    rep.j10 = factor(igusa(f).J10.get_num());
    rep.twist_degree = n;
    return rep;
}

Sextic v4_minimal_model(const Dihedral& d) {
    const Rat &u = d.u, &v = d.v;
    if (u == 0) throw DomainError("u = 0: minimal V4 model undefined");
    Rat u2 = u * u, u3 = u2 * u, e = 4 * u3 - v * v;
    if (e == 0) throw DomainError("4u^3 = v^2: minimal V4 model degenerates");
    Rat e2 = e * e, e3 = e2 * e;
    Rat b6 = -(2 * u3 - u2 * v - v * v) / (64 * pow(u, 6));
    Rat b5 = -2 * (u2 + 3 * v) * e / (32 * pow(u, 5));
    Rat b4 = (30 * u3 + u2 * v - 15 * v * v) * e / (16 * pow(u, 4));
    Rat b3 = -4 * (u2 - 5 * v) * e2 / (8 * u3);
    Rat b2 = -(30 * u3 + u2 * v - 15 * v * v) * e2 / (4 * u2);
    Rat b1 = -(u2 + 3 * v) * e3 / u;
    Rat b0 = (2 * u3 - u2 * v - v * v) * e3;
    return Sextic({b6, b5, b4, b3, b2, b1, b0});
}

}  // namespace g2
