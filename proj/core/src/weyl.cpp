#include "qschub/weyl.hpp"

#include "qschub/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qschub {

namespace {

bool contains(const std::vector<Weight>& v, const Weight& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

bool order_by_length_word(const WeylElt& x, const WeylElt& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.word < y.word;
}

}  // namespace

WeylElt identity_element(const RootDatum& datum) {
    return WeylElt{linalg::identity(datum.rank), {}};
}

IntMatrix reflection_matrix(int i, const RootDatum& datum) {
    IntMatrix m = linalg::identity(datum.rank);
    for (int j = 0; j < datum.rank; ++j) m[j][i] -= datum.cartan[j][i];
    return m;
}

IntVector left_descents(const IntMatrix& action, const RootDatum& datum) {
    // sigma_i w < w  iff  <w rho, alpha_i^vee> < 0
    const Weight wr = linalg::apply(action, datum.rho());
    IntVector out;
    for (int i = 0; i < datum.rank; ++i)
        if (wr[i] < 0) out.push_back(i);
    return out;
}

IntVector reduced_word(const IntMatrix& action, const RootDatum& datum) {
    IntVector word;
    IntMatrix w = action;
    for (;;) {
        const IntVector ld = left_descents(w, datum);
        if (ld.empty()) break;
        word.push_back(ld.front());
        w = linalg::multiply(reflection_matrix(ld.front(), datum), w);
    }
    return word;
}

WeylElt compose(const IntVector& word, const RootDatum& datum) {
    IntMatrix m = linalg::identity(datum.rank);
    for (int i : word) {
        if (i < 0 || i >= datum.rank) throw InputError("letter out of range: " + std::to_string(i));
        m = linalg::multiply(m, reflection_matrix(i, datum));
    }
    IntVector w = reduced_word(m, datum);
    return WeylElt{std::move(m), std::move(w)};
}

WeylElt compose(const WeylElt& u, const WeylElt& v, const RootDatum& datum) {
    IntMatrix m = linalg::multiply(u.action, v.action);
    IntVector w = reduced_word(m, datum);
    return WeylElt{std::move(m), std::move(w)};
}

WeylElt inverse(const WeylElt& w, const RootDatum& datum) {
    IntVector rev(w.word.rbegin(), w.word.rend());
    return compose(rev, datum);
}

Weight act(const WeylElt& w, const Weight& x) { return linalg::apply(w.action, x); }

std::vector<Weight> inversion_set(const WeylElt& w, const RootDatum& datum) {
    const WeylElt wi = inverse(w, datum);
    std::vector<Weight> out;
    for (const auto& b : datum.positive_roots)
        if (!is_positive_root(act(wi, b), datum)) out.push_back(b);
    return out;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w, const RootDatum& datum) {
    if (u.length() > w.length()) return false;
    // Products of subwords of one reduced word of w are exactly the interval [e, w].
    std::set<IntMatrix> reach{linalg::identity(datum.rank)};
    for (int i : w.word) {
        const IntMatrix s = reflection_matrix(i, datum);
        std::vector<IntMatrix> next;
        for (const auto& x : reach) next.push_back(linalg::multiply(x, s));
        reach.insert(next.begin(), next.end());
    }
    return reach.count(u.action) > 0;
}

bool weak_left_leq(const WeylElt& u, const WeylElt& w, const RootDatum& datum) {
    const WeylElt hat = compose(inverse(u, datum), w, datum);
    return w.length() == u.length() + hat.length();
}

ParabolicDatum make_parabolic(IntVector levi, const RootDatum& datum) {
    std::sort(levi.begin(), levi.end());
    if (std::adjacent_find(levi.begin(), levi.end()) != levi.end())
        throw InputError("repeated Levi index");
    for (int i : levi)
        if (i < 0 || i >= datum.rank) throw InputError("Levi index out of range: " + std::to_string(i));
    if (static_cast<int>(levi.size()) == datum.rank)
        throw InputError("Levi factor must be a proper subset of the simple roots");
    return ParabolicDatum{std::move(levi)};
}

std::vector<Weight> nilradical_roots(const ParabolicDatum& p, const RootDatum& datum) {
    std::vector<Weight> out;
    for (const auto& b : datum.positive_roots) {
        const auto c = root_coordinates(b, datum);
        bool in_levi = true;
        for (int i = 0; i < datum.rank; ++i)
            if (c[i] != 0 && !std::binary_search(p.levi.begin(), p.levi.end(), i)) in_levi = false;
        if (!in_levi) out.push_back(b);
    }
    return out;
}

WeylElt longest_element(const RootDatum& datum, const IntVector& generators) {
    IntMatrix w = linalg::identity(datum.rank);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i : generators) {
            // w sigma_i > w iff w(alpha_i) > 0
            if (is_positive_root(linalg::apply(w, datum.simple_root(i)), datum)) {
                w = linalg::multiply(w, reflection_matrix(i, datum));
                grew = true;
                break;
            }
        }
    }
    IntVector word = reduced_word(w, datum);
    return WeylElt{std::move(w), std::move(word)};
}

WeylElt longest_element(const RootDatum& datum) {
    IntVector all(datum.rank);
    for (int i = 0; i < datum.rank; ++i) all[i] = i;
    return longest_element(datum, all);
}

WeylElt omega_p(const RootDatum& datum, const ParabolicDatum& p) {
    return compose(longest_element(datum, p.levi), longest_element(datum), datum);
}

std::vector<WeylElt> enumerate_group(const RootDatum& datum, const IntVector& generators,
                                     std::size_t cap) {
    std::map<IntMatrix, IntVector> seen;
    std::deque<IntMatrix> queue;
    seen[linalg::identity(datum.rank)] = {};
    queue.push_back(linalg::identity(datum.rank));
    while (!queue.empty()) {
        IntMatrix x = queue.front();
        queue.pop_front();
        for (int i : generators) {
            IntMatrix y = linalg::multiply(x, reflection_matrix(i, datum));
            if (seen.count(y)) continue;
            if (seen.size() >= cap)
                throw GroupTooLarge("Weyl group of " + datum.name() + " exceeds enumeration cap " +
                                    std::to_string(cap));
            seen[y] = {};
            queue.push_back(std::move(y));
        }
    }
    std::vector<WeylElt> out;
    out.reserve(seen.size());
    for (const auto& [m, unused] : seen) out.push_back(WeylElt{m, reduced_word(m, datum)});
    std::sort(out.begin(), out.end(), order_by_length_word);
    return out;
}

ParabolicQuotient enumerate_Wp(const RootDatum& datum, const ParabolicDatum& p, std::size_t cap) {
    IntVector all(datum.rank);
    for (int i = 0; i < datum.rank; ++i) all[i] = i;
    const auto group = enumerate_group(datum, all, cap);
    const auto upos = nilradical_roots(p, datum);
    ParabolicQuotient q;
    q.group_order = group.size();
    for (const auto& w : group) {
        bool ok = true;
        for (const auto& b : inversion_set(w, datum))
            if (!contains(upos, b)) {
                ok = false;
                break;
            }
        if (ok) q.minimal.push_back(w);
    }
    q.levi = enumerate_group(datum, p.levi, cap);
    return q;
}

}  // namespace qschub
