#include "qschub/lusztig_oracle.hpp"

namespace qschub {

GammaSequence gamma_sequence(const PositionTable& table) {
    GammaSequence g;
    for (int n = 1; n <= table.M(); ++n)
        g.push_back(act(table.prefix(n - 1), table.datum().simple_root(table.word()[n - 1])));
    return g;
}

Rational z_commutation_exponent(const ZMonomial& m1, const ZMonomial& m2, const GammaSequence& gamma,
                                const RootDatum& datum) {
    Rational g(0);
    for (const auto& [a, e1] : m1.exponents)
        for (const auto& [b, e2] : m2.exponents) {
            if (a == b) continue;
            const Rational p = pairing(gamma[a - 1], gamma[b - 1], datum) * (e1 * e2);
            g += a < b ? -p : p;
        }
    return g;
}

ZMonomial diagonal(const MinorLabel& label, const PositionTable& table) {
    const MinorLabel check = label_from_weights(label.s, label.xi, label.eta, table);
    ZMonomial m;
    for (int t = check.i + 1; t <= check.j; ++t) m.exponents[table.pos(check.s, t)] = 1;
    // Z_{s,j}..Z_{s,i+1} = q^{2 alpha} Z_{s,i+1}..Z_{s,j}
    const GammaSequence gamma = gamma_sequence(table);
    Rational two_alpha(0);
    for (auto a = m.exponents.begin(); a != m.exponents.end(); ++a)
        for (auto b = std::next(a); b != m.exponents.end(); ++b)
            two_alpha += pairing(gamma[a->first - 1], gamma[b->first - 1], table.datum());
    m.normalization = two_alpha / 2;
    return m;
}

Rational oracle_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table,
                         const GammaSequence& gamma) {
    ZMonomial m1, m2;
    for (int t = l1.i + 1; t <= l1.j; ++t) m1.exponents[table.pos(l1.s, t)] = 1;
    for (int t = l2.i + 1; t <= l2.j; ++t) m2.exponents[table.pos(l2.s, t)] = 1;
    return z_commutation_exponent(m1, m2, gamma, table.datum());
}

Rational oracle_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table) {
    return z_commutation_exponent(diagonal(l1, table), diagonal(l2, table), gamma_sequence(table), table.datum());
}

}  // namespace qschub
