#pragma once

#include "g2/classify.hpp"
#include "g2/reconstruct.hpp"
#include "g2/sextic.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2::db {

struct Entry {
    ModuliKey key;
    std::optional<long> h;  // empty: unknown above the build bound
    std::string mh;         // factored moduli height
    std::string disc;       // factored J10 of the first twist
    AutClass aut;
    FieldOfDefinition field;
    std::vector<std::array<Rat, 7>> twists;  // sorted
    friend bool operator==(const Entry&, const Entry&) = default;
};

struct KeyLess {
    bool operator()(const ModuliKey& a, const ModuliKey& b) const { return a < b; }
};

struct Database {
    std::string builder;  // L1, L2, L3
    long bound = 0;
    std::string version;
    std::vector<std::string> columns;           // stats header
    std::vector<std::vector<std::string>> rows;  // stats rows, one per bound
    std::map<ModuliKey, Entry, KeyLess> entries;
};

// All integral primitive forms up to sign with max|ai| <= hmax.
Database build_L1(int hmax, unsigned jobs = 1);
// Forms x^6 + a x^4 + b x^2 + 1 with max(|a|, |b|) <= hmax.
Database build_L2(int hmax, unsigned jobs = 1);
// Primitive 4-tuples up to sign read as (J2, J4, J6, J10), max|xi| <= mhmax.
Database build_L3(int mhmax, unsigned jobs = 1);

Database build(const std::string& which, int bound, unsigned jobs = 1);

// Stats rows as TSV, header first; empty database gives an empty table.
std::string stats_tsv(const Database& d);

std::string entry_json(const Entry& e);
Entry entry_from_json(const std::string& line);

// Header line, then entries sorted by key.
void save(const Database& d, std::ostream& out);
void save(const Database& d, const std::string& path);
Database load(std::istream& in);
Database load(const std::string& path);

std::optional<Entry> query(const Database& d, const ModuliKey& k);

}  // namespace g2::db
