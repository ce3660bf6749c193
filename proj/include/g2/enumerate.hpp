#pragma once

#include "g2/classify.hpp"
#include "g2/kernels.hpp"
#include "g2/sextic.hpp"

#include <functional>
#include <optional>

namespace g2::enumerate {

using kernels::i128;
using kernels::Inv4;
using kernels::Tuple;

// Primitive with first nonzero coefficient positive (one per projective class).
bool canonical(const Tuple& t);
int height(const Tuple& t);
Sextic to_sextic(const Tuple& t);
std::string tuple_string(const Tuple& t);  // "[a0,...,a6]"

// Primitive integer point [J2^5 : J4 J2^3 : J6 J2^2 : J10] with J2^5 > 0.
// Equal keys <=> equal absolute invariants.  Requires J2 != 0.
struct ClassKey {
    i128 v[4];
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
    std::size_t operator()(const ClassKey& k) const noexcept;
};

std::optional<ClassKey> class_key(const Inv4& j);

// Tests whether enumerated tuples share the moduli key of a fixed target.
class Matcher {
public:
    explicit Matcher(const Igusa& target);
    explicit Matcher(const ModuliKey& target);
    bool matches(const Tuple& t, const Inv4& inv) const;

private:
    ModuliKey key_;
    std::optional<ClassKey> class_;
    bool reachable_ = true;  // false when the target key exceeds the int128 range
};

using Visitor = std::function<void(unsigned worker, const Tuple* t, const Inv4* inv, std::size_t n)>;

// Visits every canonical tuple with hmin <= max|ai| <= hmax, in batches,
// from `jobs` threads.  Batches arrive in no fixed order.
void for_each_canonical(int hmin, int hmax, unsigned jobs, const Visitor& visit,
                        kernels::Backend backend);
void for_each_canonical(int hmin, int hmax, unsigned jobs, const Visitor& visit);

// Number of canonical tuples with max|ai| <= h.
std::uint64_t count_canonical(int h);

// Resolves a job count: explicit value, else G2_JOBS, else 1.
unsigned resolve_jobs(int requested);

}  // namespace g2::enumerate
