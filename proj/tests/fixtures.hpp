#pragma once

#include "sweep.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace qschub::testing {

// Levi and word given 1-based.
inline PositionTable table_of(char type, int rank, IntVector levi = {}, std::optional<IntVector> word = std::nullopt) {
    const RootDatum datum = build_root_datum(type, rank);
    for (auto& x : levi) --x;
    if (word)
        for (auto& x : *word) --x;
    return fix_word(datum, make_parabolic(levi, datum), word);
}

inline std::map<std::string, std::size_t> index_by_name(const Cluster& c) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < c.size(); ++i) m[c.labels[i].str()] = i;
    return m;
}

inline std::vector<std::string> names(const std::vector<MinorLabel>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(l.str());
    return out;
}

inline std::set<std::string> name_set(const QuantumSeed& seed) {
    const auto v = names(seed.cluster.labels);
    return {v.begin(), v.end()};
}

using Entry = std::tuple<std::string, std::string, Rational>;
using Column = std::pair<std::string, std::vector<std::pair<std::string, int>>>;

// L entries not listed are zero.
inline bool lambda_matches(const QuantumSeed& seed, const std::vector<Entry>& entries) {
    const auto idx = index_by_name(seed.cluster);
    RationalMatrix want(seed.size(), RationalVector(seed.size(), Rational(0)));
    for (const auto& [a, b, v] : entries) {
        if (!idx.count(a) || !idx.count(b)) return false;
        want[idx.at(a)][idx.at(b)] = v;
        want[idx.at(b)][idx.at(a)] = -v;
    }
    return want == seed.L;
}

// Oriented columns (L b = -2 d_s e) keyed by label name.
inline bool columns_match(const QuantumSeed& seed, const std::vector<Column>& cols) {
    const auto idx = index_by_name(seed.cluster);
    if (cols.size() != seed.mutable_indices.size()) return false;
    for (const auto& [label, entries] : cols) {
        if (!idx.count(label)) return false;
        const auto j = seed.column_of(seed.cluster.labels[idx.at(label)]);
        if (!j) return false;
        IntVector want(seed.size(), 0);
        for (const auto& [n, e] : entries) {
            if (!idx.count(n)) return false;
            want[idx.at(n)] = e;
        }
        if (seed.oriented_column(*j) != want) return false;
    }
    return true;
}

}  // namespace qschub::testing
