#pragma once

#include "qschub/minor_label.hpp"

#include <map>

namespace qschub {

// gamma[n-1] = omega_{n-1}(alpha_{i_n}).
using GammaSequence = std::vector<Weight>;

// Top-term monomial on 1-based positions.
struct ZMonomial {
    std::map<int, int> exponents;
    Rational normalization{0};
};

GammaSequence gamma_sequence(const PositionTable& table);

// G with m1 m2 = q^G m2 m1 in the associated quasi-polynomial algebra.
Rational z_commutation_exponent(const ZMonomial& m1, const ZMonomial& m2, const GammaSequence& gamma,
                                const RootDatum& datum);

ZMonomial diagonal(const MinorLabel& label, const PositionTable& table);

Rational oracle_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table);

// Same as oracle_exponent with the gamma sequence supplied.
Rational oracle_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table,
                         const GammaSequence& gamma);

}  // namespace qschub
