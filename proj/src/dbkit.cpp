#include "g2/dbkit.hpp"

#include "g2/enumerate.hpp"
#include "g2/factor.hpp"
#include "g2/heights.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace g2::db {

namespace {

using json = nlohmann::ordered_json;
using enumerate::Tuple;

constexpr const char* kVersion = "1.0.0";

// Runs f(i) for i in [0, n) on `jobs` threads; results must go to slot i.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) f(i);
    };
    if (jobs <= 1 || n < 2) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

std::array<Rat, 7> coeffs(const Sextic& f) { return f.a; }

std::string factored(const Int& n, unsigned long budget = 2000000) {
    if (n == 0) return "0";
    return factor(n, budget).str();
}

// Number of primitive nonzero integer vectors of length len with max|xi| <= h, up to sign.
std::uint64_t primitive_count(int h, int len) {
    std::vector<int> mu(static_cast<std::size_t>(h) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(h) + 1, false);
    for (int p = 2; p <= h; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (int m = p; m <= h; m += p) {
            if (m > p) composite[static_cast<std::size_t>(m)] = true;
            mu[static_cast<std::size_t>(m)] = -mu[static_cast<std::size_t>(m)];
        }
        for (long m = static_cast<long>(p) * p; m <= h; m += static_cast<long>(p) * p) mu[static_cast<std::size_t>(m)] = 0;
    }
    long long total = 0;
    for (int d = 1; d <= h; ++d) {
        long long side = 2 * (h / d) + 1, box = 1;
        for (int i = 0; i < len; ++i) box *= side;
        total += mu[static_cast<std::size_t>(d)] * (box - 1);
    }
    return static_cast<std::uint64_t>(total / 2);
}

bool is_group(const Entry& e, Group g) { return e.aut.group == g; }

FieldOfDefinition stored(FieldOfDefinition f) {
    f.reason.clear();
    return f;
}

Entry entry_for(const ModuliKey& k, std::vector<Sextic> twists, std::optional<long> h, const Igusa& any_rep) {
    Entry e;
    e.key = k;
    e.h = h;
    e.aut = classify(k);
    e.mh = factored(moduli_height(any_rep));
    std::sort(twists.begin(), twists.end(), [](const Sextic& a, const Sextic& b) {
        Int ha = naive_height(a), hb = naive_height(b);
        if (ha != hb) return ha < hb;
        return std::lexicographical_compare(a.a.begin(), a.a.end(), b.a.begin(), b.a.end());
    });
    if (!twists.empty()) e.disc = factored(Int(igusa(twists.front()).J10.get_num()), 200000);
    for (auto& f : twists) e.twists.push_back(coeffs(f));
    std::sort(e.twists.begin(), e.twists.end());
    e.field = {FieldOfDefinition::Kind::rational, 1, ""};
    return e;
}

}  // namespace

Database build_L1(int hmax, unsigned jobs) {
    if (hmax < 1) throw DomainError("build L1 needs max >= 1");
    struct Local {
        std::unordered_map<enumerate::ClassKey, std::vector<Tuple>, enumerate::ClassKeyHash> by_class;
        std::map<ModuliKey, std::vector<Tuple>, KeyLess> by_key;
    };
    std::vector<Local> local(std::max(1u, jobs));
    enumerate::for_each_canonical(1, hmax, jobs, [&](unsigned w, const Tuple* t, const enumerate::Inv4* inv,
                                                     std::size_t n) {
        Local& L = local[w];
        for (std::size_t i = 0; i < n; ++i) {
            if (inv[i].j10 == 0) continue;
            if (auto k = enumerate::class_key(inv[i]))
                L.by_class[*k].push_back(t[i]);
            else
                L.by_key[moduli_key(enumerate::to_sextic(t[i]))].push_back(t[i]);
        }
    });
    std::vector<std::vector<Tuple>> groups;
    {
        std::unordered_map<enumerate::ClassKey, std::vector<Tuple>, enumerate::ClassKeyHash> merged;
        std::map<ModuliKey, std::vector<Tuple>, KeyLess> merged_key;
        for (auto& L : local) {
            for (auto& [k, v] : L.by_class) {
                auto& dst = merged[k];
                dst.insert(dst.end(), v.begin(), v.end());
            }
            for (auto& [k, v] : L.by_key) {
                auto& dst = merged_key[k];
                dst.insert(dst.end(), v.begin(), v.end());
            }
        }
        for (auto& [k, v] : merged) groups.push_back(std::move(v));
        for (auto& [k, v] : merged_key) groups.push_back(std::move(v));
    }
    std::vector<Entry> out(groups.size());
    parallel_for(groups.size(), jobs, [&](std::size_t i) {
        auto& g = groups[i];
        std::sort(g.begin(), g.end());
        std::vector<Sextic> twists;
        long h = 127;
        for (auto& t : g) {
            twists.push_back(enumerate::to_sextic(t));
            h = std::min<long>(h, enumerate::height(t));
        }
        Igusa J = igusa(twists.front());
        out[i] = entry_for(key_from_igusa(J), std::move(twists), h, J);
    });
    Database d;
    d.builder = "L1";
    d.bound = hmax;
    d.version = kVersion;
    for (auto& e : out) {
        ModuliKey k = e.key;
        if (!d.entries.emplace(k, std::move(e)).second) throw std::logic_error("build_L1: duplicate key after grouping");
    }
    d.columns = {"h", "P6", "curves", "V4", "D4", "D6"};
    for (long h = 1; h <= hmax; ++h) {
        std::uint64_t n = 0, v4 = 0, d4 = 0, d6 = 0;
        for (auto& [k, e] : d.entries) {
            if (e.h != h) continue;
            ++n;
            v4 += is_group(e, Group::V4);
            d4 += is_group(e, Group::D4);
            d6 += is_group(e, Group::D6);
        }
        d.rows.push_back({std::to_string(h), std::to_string(primitive_count(static_cast<int>(h), 7)), std::to_string(n),
                          std::to_string(v4), std::to_string(d4), std::to_string(d6)});
    }
    return d;
}

Database build_L2(int hmax, unsigned jobs) {
    if (hmax < 1) throw DomainError("build L2 needs max >= 1");
    struct Form {
        long a, b, h;
        std::optional<ModuliKey> key;
    };
    std::vector<Form> forms;
    for (long a = -hmax; a <= hmax; ++a)
        for (long b = -hmax; b <= hmax; ++b) forms.push_back({a, b, std::max(std::labs(a), std::labs(b)), {}});
    parallel_for(forms.size(), jobs, [&](std::size_t i) {
        Igusa J = igusa(Sextic::from_ints({1, 0, forms[i].a, 0, forms[i].b, 0, 1}));
        if (J.J10 != 0) forms[i].key = key_from_igusa(J);
    });
    std::map<ModuliKey, std::vector<const Form*>, KeyLess> by_key;
    for (auto& f : forms)
        if (f.key) by_key[*f.key].push_back(&f);
    std::map<ModuliKey, long, KeyLess> first;
    std::vector<std::pair<ModuliKey, std::vector<const Form*>>> items(by_key.begin(), by_key.end());
    std::vector<Entry> out(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        std::vector<Sextic> twists;
        long h = hmax;
        for (auto* f : items[i].second) {
            twists.push_back(Sextic::from_ints({1, 0, f->a, 0, f->b, 0, 1}));
            h = std::min(h, f->h);
        }
        Igusa J = igusa(twists.front());
        out[i] = entry_for(items[i].first, std::move(twists), h, J);
    });
    Database d;
    d.builder = "L2";
    d.bound = hmax;
    d.version = kVersion;
    for (auto& e : out) d.entries.emplace(e.key, e);
    d.columns = {"h", "forms", "new", "D4", "D6", "total"};
    for (long h = 1; h <= hmax; ++h) {
        std::uint64_t nforms = 0, d4 = 0, d6 = 0, fresh = 0, total = 0;
        for (auto& f : forms) {
            if (!f.key || f.h > h) continue;
            ++nforms;
            Group g = d.entries.at(*f.key).aut.group;
            d4 += g == Group::D4;
            d6 += g == Group::D6;
        }
        for (auto& [k, e] : d.entries) {
            fresh += *e.h == h;
            total += *e.h <= h;
        }
        d.rows.push_back({std::to_string(h), std::to_string(nforms), std::to_string(fresh), std::to_string(d4),
                          std::to_string(d6), std::to_string(total)});
    }
    return d;
}

Database build_L3(int mhmax, unsigned jobs) {
    if (mhmax < 1) throw DomainError("build L3 needs max >= 1");
    struct Point {
        std::array<long, 4> x;
        long h;
        std::optional<ModuliKey> key;
    };
    std::vector<Point> pts;
    const long side = 2L * mhmax + 1;
    for (long idx = 0; idx < side * side * side * side; ++idx) {
        std::array<long, 4> x;
        long r = idx;
        for (int i = 3; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = r % side - mhmax;
            r /= side;
        }
        long g = 0, first = 0, h = 0;
        for (long c : x) {
            g = std::gcd(g, c);
            if (first == 0) first = c;
            h = std::max(h, std::labs(c));
        }
        if (g != 1 || first <= 0) continue;
        pts.push_back({x, h, {}});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    parallel_for(pts.size(), jobs, [&](std::size_t i) {
        auto& p = pts[i];
        if (p.x[3] == 0) return;
        p.key = key_from_igusa(Igusa{p.x[0], p.x[1], p.x[2], p.x[3]});
    });
    std::map<ModuliKey, std::vector<const Point*>, KeyLess> by_key;
    for (auto& p : pts)
        if (p.key) by_key[*p.key].push_back(&p);
    std::vector<std::pair<ModuliKey, std::vector<const Point*>>> items(by_key.begin(), by_key.end());
    std::vector<Entry> out(items.size());
    std::vector<char> undecided(items.size(), 0);
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        const ModuliKey& k = items[i].first;
        const Point& p = *items[i].second.front();
        Igusa rep{p.x[0], p.x[1], p.x[2], p.x[3]};
        Entry e;
        e.key = k;
        e.aut = classify(k);
        e.mh = factored(moduli_height(rep));
        try {
            Reconstruction r = reconstruct(k);
            e.field = stored(r.field);
            if (r.curve) {
                e.twists.push_back(coeffs(*r.curve));
                e.disc = factored(Int(igusa(*r.curve).J10.get_num()), 20000);
            }
        } catch (const DomainError&) {
            undecided[i] = 1;
            e.field = {FieldOfDefinition::Kind::quadratic, 0, ""};
        }
        out[i] = std::move(e);
    });
    Database d;
    d.builder = "L3";
    d.bound = mhmax;
    d.version = kVersion;
    std::map<ModuliKey, std::size_t, KeyLess> index;
    for (std::size_t i = 0; i < out.size(); ++i) {
        index[out[i].key] = i;
        d.entries.emplace(out[i].key, out[i]);
    }
    d.columns = {"h", "n1", "n2", "n3", "n4", "ratio", "n2_distinct", "undecided"};
    for (long h = 1; h <= mhmax; ++h) {
        std::uint64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0, und = 0;
        std::set<std::size_t> distinct;
        for (auto& p : pts) {
            if (p.h > h) continue;
            ++n1;
            if (!p.key) continue;
            ++n2;
            std::size_t i = index.at(*p.key);
            distinct.insert(i);
            const Entry& e = out[i];
            if (undecided[i]) {
                ++und;
                continue;
            }
            if (e.field.kind == FieldOfDefinition::Kind::rational) {
                ++n3;
                n4 += e.aut.order > 2;
            }
        }
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.2f", n3 ? static_cast<double>(n3 - n4) / static_cast<double>(n3) : 0.0);
        d.rows.push_back({std::to_string(h), std::to_string(n1), std::to_string(n2), std::to_string(n3),
                          std::to_string(n4), ratio, std::to_string(distinct.size()), std::to_string(und)});
    }
    return d;
}

Database build(const std::string& which, int bound, unsigned jobs) {
    if (which == "L1") return build_L1(bound, jobs);
    if (which == "L2") return build_L2(bound, jobs);
    if (which == "L3") return build_L3(bound, jobs);
    throw std::invalid_argument("unknown database '" + which + "', expected L1, L2 or L3");
}

std::string stats_tsv(const Database& d) {
    if (d.rows.empty()) return "";
    std::string s;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "\t" : "") + cells[i];
        s += "\n";
    };
    line(d.columns);
    for (auto& r : d.rows) line(r);
    return s;
}

namespace {

json key_json(const ModuliKey& k) { return json::array({k.r, to_string(k.x1), to_string(k.x2), to_string(k.x3)}); }

json entry_to(const Entry& e) {
    json j;
    j["key"] = key_json(e.key);
    j["h"] = e.h ? json(*e.h) : json(nullptr);
    j["mh"] = e.mh;
    j["disc"] = e.disc.empty() ? json(nullptr) : json(e.disc);
    j["aut"] = json::array({e.aut.order, e.aut.index});
    j["conductor"] = nullptr;
    j["field"] = {{"kind", e.field.kind_name()}, {"d", to_string(e.field.d)}};
    json tw = json::array();
    for (auto& t : e.twists) {
        json row = json::array();
        for (auto& c : t) row.push_back(to_string(c));
        tw.push_back(row);
    }
    j["twists"] = tw;
    return j;
}

AutClass aut_from(int order, int index) {
    for (Group g : {Group::C2, Group::C10, Group::V4, Group::D4, Group::D6, Group::SL2_3, Group::GL2_3}) {
        AutClass a = aut_class(g);
        if (a.order == order && a.index == index) return a;
    }
    throw DomainError("unknown automorphism group [" + std::to_string(order) + "," + std::to_string(index) + "]");
}

}  // namespace

std::string entry_json(const Entry& e) { return entry_to(e).dump(); }

Entry entry_from_json(const std::string& line) {
    json j = json::parse(line);
    Entry e;
    auto& k = j.at("key");
    e.key.r = k.at(0).get<int>();
    e.key.x1 = parse_rat(k.at(1).get<std::string>());
    e.key.x2 = parse_rat(k.at(2).get<std::string>());
    e.key.x3 = parse_rat(k.at(3).get<std::string>());
    if (!j.at("h").is_null()) e.h = j.at("h").get<long>();
    e.mh = j.at("mh").get<std::string>();
    if (!j.at("disc").is_null()) e.disc = j.at("disc").get<std::string>();
    e.aut = aut_from(j.at("aut").at(0).get<int>(), j.at("aut").at(1).get<int>());
    auto& f = j.at("field");
    e.field.kind = f.at("kind").get<std::string>() == "rational" ? FieldOfDefinition::Kind::rational
                                                                 : FieldOfDefinition::Kind::quadratic;
    e.field.d = Int(f.at("d").get<std::string>());
    for (auto& row : j.at("twists")) {
        std::array<Rat, 7> t;
        for (std::size_t i = 0; i < 7; ++i) t[i] = parse_rat(row.at(i).get<std::string>());
        e.twists.push_back(t);
    }
    return e;
}

void save(const Database& d, std::ostream& out) {
    json meta;
    meta["builder"] = d.builder;
    meta["bound"] = d.bound;
    meta["version"] = d.version;
    meta["columns"] = d.columns;
    meta["rows"] = d.rows;
    out << json{{"meta", meta}}.dump() << "\n";
    for (auto& [k, e] : d.entries) out << entry_json(e) << "\n";
}

void save(const Database& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    save(d, out);
}

Database load(std::istream& in) {
    Database d;
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty database file");
    json head = json::parse(line);
    auto& m = head.at("meta");
    d.builder = m.at("builder").get<std::string>();
    d.bound = m.at("bound").get<long>();
    d.version = m.at("version").get<std::string>();
    d.columns = m.at("columns").get<std::vector<std::string>>();
    d.rows = m.at("rows").get<std::vector<std::vector<std::string>>>();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Entry e = entry_from_json(line);
        d.entries.emplace(e.key, std::move(e));
    }
    return d;
}

Database load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return load(in);
}

std::optional<Entry> query(const Database& d, const ModuliKey& k) {
    auto it = d.entries.find(k);
    if (it == d.entries.end()) return std::nullopt;
    return it->second;
}

}  // namespace g2::db
