#include "qschub/minor_label.hpp"

namespace qschub {

std::string MinorLabel::str() const {
    return "E_" + std::to_string(s + 1) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

MinorLabel make_label(int i, int j, int s, const PositionTable& table) {
    if (s < 0 || s >= table.rank()) throw InputError("letter out of range: " + std::to_string(s));
    if (i < 0 || j < i || j > table.total(s))
        throw InputError("occurrence indices out of range for E_" + std::to_string(s + 1) + "(" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    return MinorLabel{s, i, j, table.prefix_weight(table.pos(s, i), s), table.prefix_weight(table.pos(s, j), s)};
}

MinorLabel label_from_weights(int s, const Weight& xi, const Weight& eta, const PositionTable& table) {
    if (s < 0 || s >= table.rank()) throw InputError("letter out of range: " + std::to_string(s));
    int i = -1, j = -1;
    for (int t = 0; t <= table.total(s); ++t) {
        const Weight& w = table.prefix_weight(table.pos(s, t), s);
        if (w == xi && i < 0) i = t;
        if (w == eta && j < 0) j = t;
    }
    if (i < 0 || j < 0 || j < i)
        throw InputError("weight pair is not of prefix form " + to_string(xi) + "," + to_string(eta));
    return make_label(i, j, s, table);
}

}  // namespace qschub
