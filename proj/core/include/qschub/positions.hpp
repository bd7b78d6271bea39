#pragma once

#include "qschub/weyl.hpp"

#include <optional>
#include <set>
#include <utility>

namespace qschub {

// A fixed reduced word of omega^p.  Strings are prefix lengths m in 0..M.
class PositionTable {
public:
    PositionTable(RootDatum datum, ParabolicDatum parabolic, IntVector word);

    const RootDatum& datum() const { return datum_; }
    const ParabolicDatum& parabolic() const { return parabolic_; }
    const IntVector& word() const { return word_; }
    int M() const { return static_cast<int>(word_.size()); }
    int rank() const { return datum_.rank; }

    // (s, t) of the 1-based position n.
    std::pair<int, int> letter_at(int n) const { return st_[n - 1]; }
    // 1-based position of the t-th occurrence of s; 0 for t = 0, M+1 past the last.
    int pos(int s, int t) const;
    int total(int s) const { return static_cast<int>(occurrences_[s].size()) - 1; }
    // Occurrences of s among the first m letters.
    int occ(int m, int s) const { return occ_[m][s]; }

    const WeylElt& prefix(int m) const { return prefix_[m]; }
    const WeylElt& omega(int s, int t) const { return prefix_[pos(s, t)]; }
    const Weight& prefix_weight(int m, int k) const { return prefix_weight_[m][k]; }

private:
    RootDatum datum_;
    ParabolicDatum parabolic_;
    IntVector word_;
    std::vector<std::pair<int, int>> st_;
    std::vector<IntVector> occurrences_;
    std::vector<IntVector> occ_;
    std::vector<WeylElt> prefix_;
    std::vector<std::vector<Weight>> prefix_weight_;
};

// Default word is the lexicographically least reduced word of omega^p.
PositionTable fix_word(const RootDatum& datum, const ParabolicDatum& parabolic,
                       const std::optional<IntVector>& word = std::nullopt);

int p_index(int a, int j, int k, const PositionTable& table);

enum class IndexKind { D, DRightStrict, U, ULeftStrict };

using IndexSet = std::set<std::pair<int, int>>;

// D: a_lo < j <= a_hi; DRightStrict: a_lo < j < a_hi; U: a_lo <= j < a_hi; ULeftStrict: a_lo < j < a_hi.
IndexSet index_set(IndexKind kind, int lo, int hi, const PositionTable& table);
IndexSet index_set_d(int t, const PositionTable& table);
IndexSet index_set_u(int t, const PositionTable& table);

}  // namespace qschub
