#pragma once

#include "qschub/mutation.hpp"
#include "qschub/weyl.hpp"

#include <string>
#include <vector>

namespace qschub::testing {

struct Instance {
    std::string name;
    PositionTable table;
};

// Every proper Levi subset of the datum, default word.
inline std::vector<Instance> instances_of(char type, int rank) {
    const RootDatum datum = build_root_datum(type, rank);
    std::vector<Instance> out;
    for (unsigned mask = 0; mask + 1 < (1u << rank); ++mask) {
        IntVector levi;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i)) levi.push_back(i);
        const ParabolicDatum p = make_parabolic(levi, datum);
        std::string name = datum.name() + " levi{";
        for (std::size_t k = 0; k < levi.size(); ++k) name += (k ? "," : "") + std::to_string(levi[k] + 1);
        out.push_back({name + "}", fix_word(datum, p)});
    }
    return out;
}

inline std::vector<Instance> standard_sweep() {
    std::vector<Instance> out;
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}}) {
        auto v = instances_of(t, r);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// All nondecreasing tuples of length n over 0..M with first < last.
inline std::vector<IntVector> string_tuples(int M, std::size_t n) {
    std::vector<IntVector> out;
    IntVector cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == n) {
            if (cur.front() < cur.back()) out.push_back(cur);
            return;
        }
        for (int x = lo; x <= M; ++x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace qschub::testing
