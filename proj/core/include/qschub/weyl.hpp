#pragma once

#include "qschub/rootdata.hpp"

#include <cstddef>

namespace qschub {

// Equality is equality of action matrices; the word is a reduced witness.
struct WeylElt {
    IntMatrix action;
    IntVector word;

    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const WeylElt& o) const { return action == o.action; }
    bool operator!=(const WeylElt& o) const { return action != o.action; }
};

struct ParabolicDatum {
    IntVector levi;  // sorted simple-root indices of the Levi factor
};

class GroupTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGroupCap = 40320;

WeylElt identity_element(const RootDatum& datum);
IntMatrix reflection_matrix(int i, const RootDatum& datum);

// Word (i_1..i_k) denotes sigma_{i_1} o ... o sigma_{i_k}.
WeylElt compose(const IntVector& word, const RootDatum& datum);
WeylElt compose(const WeylElt& u, const WeylElt& v, const RootDatum& datum);
WeylElt inverse(const WeylElt& w, const RootDatum& datum);
Weight act(const WeylElt& w, const Weight& x);

// Lexicographically least reduced word of the element with this action.
IntVector reduced_word(const IntMatrix& action, const RootDatum& datum);
IntVector left_descents(const IntMatrix& action, const RootDatum& datum);

std::vector<Weight> inversion_set(const WeylElt& w, const RootDatum& datum);
bool bruhat_leq(const WeylElt& u, const WeylElt& w, const RootDatum& datum);
bool weak_left_leq(const WeylElt& u, const WeylElt& w, const RootDatum& datum);

ParabolicDatum make_parabolic(IntVector levi, const RootDatum& datum);
std::vector<Weight> nilradical_roots(const ParabolicDatum& p, const RootDatum& datum);

WeylElt longest_element(const RootDatum& datum, const IntVector& generators);
WeylElt longest_element(const RootDatum& datum);
// Maximal element of W^p; w0 = w_L omega^p with lengths adding.
WeylElt omega_p(const RootDatum& datum, const ParabolicDatum& p);

std::vector<WeylElt> enumerate_group(const RootDatum& datum, const IntVector& generators,
                                     std::size_t cap = kDefaultGroupCap);

struct ParabolicQuotient {
    std::vector<WeylElt> minimal;  // W^p sorted by length, omega^p last
    std::vector<WeylElt> levi;     // W_p
    std::size_t group_order = 0;
};

ParabolicQuotient enumerate_Wp(const RootDatum& datum, const ParabolicDatum& p,
                               std::size_t cap = kDefaultGroupCap);

}  // namespace qschub
