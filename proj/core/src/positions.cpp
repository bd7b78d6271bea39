#include "qschub/positions.hpp"

#include "qschub/linalg.hpp"

namespace qschub {

PositionTable::PositionTable(RootDatum datum, ParabolicDatum parabolic, IntVector word)
    : datum_(std::move(datum)), parabolic_(std::move(parabolic)), word_(std::move(word)) {
    const int r = datum_.rank;
    occurrences_.assign(r, IntVector{0});
    occ_.assign(word_.size() + 1, IntVector(r, 0));
    prefix_.push_back(identity_element(datum_));
    for (std::size_t n = 0; n < word_.size(); ++n) {
        const int s = word_[n];
        occurrences_[s].push_back(static_cast<int>(n) + 1);
        st_.emplace_back(s, total(s));
        occ_[n + 1] = occ_[n];
        ++occ_[n + 1][s];
        IntMatrix m = linalg::multiply(prefix_.back().action, reflection_matrix(s, datum_));
        IntVector w(word_.begin(), word_.begin() + static_cast<long>(n) + 1);
        prefix_.push_back(WeylElt{std::move(m), std::move(w)});
    }
    prefix_weight_.resize(prefix_.size());
    for (std::size_t m = 0; m < prefix_.size(); ++m)
        for (int k = 0; k < r; ++k)
            prefix_weight_[m].push_back(act(prefix_[m], datum_.fundamental_weight(k)));
}

int PositionTable::pos(int s, int t) const {
    if (t <= total(s)) return occurrences_[s][t];
    return M() + 1;
}

PositionTable fix_word(const RootDatum& datum, const ParabolicDatum& parabolic,
                       const std::optional<IntVector>& word) {
    const WeylElt target = omega_p(datum, parabolic);
    if (!word) return PositionTable(datum, parabolic, target.word);
    const WeylElt given = compose(*word, datum);
    if (given.length() != static_cast<int>(word->size()))
        throw InputError("word " + to_string(*word) + " is not reduced");
    if (given != target) throw InputError("word " + to_string(*word) + " does not evaluate to omega^p");
    return PositionTable(datum, parabolic, *word);
}

int p_index(int a, int j, int k, const PositionTable& table) {
    const Weight& target = table.prefix_weight(table.pos(a, j), k);
    for (int p = table.total(k); p >= 0; --p)
        if (table.prefix_weight(table.pos(k, p), k) == target) return p;
    throw ConstructionError("p_index(" + std::to_string(a) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") has no admissible value");
}

IndexSet index_set(IndexKind kind, int lo, int hi, const PositionTable& table) {
    if (lo < 0 || hi > table.M() || lo > hi)
        throw InputError("index set bounds out of order: " + std::to_string(lo) + "," + std::to_string(hi));
    IndexSet out;
    for (int a = 0; a < table.rank(); ++a) {
        const int x = table.occ(lo, a), y = table.occ(hi, a);
        int first = x, last = y;  // half-open [first, last)
        switch (kind) {
        case IndexKind::D: first = x + 1; last = y + 1; break;
        case IndexKind::DRightStrict: first = x + 1; last = y; break;
        case IndexKind::U: first = x; last = y; break;
        case IndexKind::ULeftStrict: first = x + 1; last = y; break;
        }
        for (int j = first; j < last; ++j) out.emplace(a, j);
    }
    return out;
}

IndexSet index_set_d(int t, const PositionTable& table) { return index_set(IndexKind::D, t, table.M(), table); }

IndexSet index_set_u(int t, const PositionTable& table) { return index_set(IndexKind::U, 0, t, table); }

}  // namespace qschub
