#pragma once

#include "qschub/positions.hpp"

#include <compare>

namespace qschub {

// E_s(i, j) = E_{omega_(s,i) Lambda_s, omega_(s,j) Lambda_s}.  Identity is the weight pair.
struct MinorLabel {
    int s = 0;
    int i = 0;
    int j = 0;
    Weight xi;
    Weight eta;

    bool is_unit() const { return i == j; }
    bool operator==(const MinorLabel& o) const { return xi == o.xi && eta == o.eta; }
    std::strong_ordering operator<=>(const MinorLabel& o) const {
        if (auto c = xi <=> o.xi; c != 0) return c;
        return eta <=> o.eta;
    }
    std::string str() const;  // 1-based letter, e.g. E_1(0,2)
};

MinorLabel make_label(int i, int j, int s, const PositionTable& table);

// Resolves a weight pair (u Lambda_s, v Lambda_s) to prefix occurrences; throws if not of that form.
MinorLabel label_from_weights(int s, const Weight& xi, const Weight& eta, const PositionTable& table);

}  // namespace qschub
