#include "qschub/rootdata.hpp"

#include "qschub/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace qschub {

namespace {

IntMatrix cartan_table(char t, int r) {
    IntMatrix a(r, IntVector(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (t) {
    case 'A':
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
        link(r - 2, r - 1, -1, -2);
        break;
    case 'C':
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
        link(r - 2, r - 1, -2, -1);
        break;
    case 'D':
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
        link(r - 3, r - 1);
        break;
    case 'E':
        // Bourbaki: 1-3-4-5-...-r with 2 attached to 4.
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2, -2, -1);
        link(2, 3);
        break;
    case 'G':
        link(0, 1, -3, -1);
        break;
    default:
        break;
    }
    return a;
}

bool valid_type(char t, int r) {
    switch (t) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
    }
}

IntVector symmetrizers(const IntMatrix& a) {
    const int r = static_cast<int>(a.size());
    std::vector<std::optional<Rational>> d(r);
    d[0] = Rational(1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (d[i] && !d[j] && a[i][j] != 0) {
                    d[j] = *d[i] * Rational(a[i][j], a[j][i]);
                    changed = true;
                }
    }
    std::int64_t l = 1;
    for (const auto& x : d) l = std::lcm(l, x->denominator());
    IntVector out(r);
    std::int64_t g = 0;
    for (int i = 0; i < r; ++i) {
        out[i] = static_cast<int>((*d[i] * l).numerator());
        g = std::gcd(g, static_cast<std::int64_t>(out[i]));
    }
    for (auto& x : out) x /= static_cast<int>(g);
    return out;
}

}  // namespace

Weight RootDatum::simple_root(int i) const {
    Weight w(rank);
    for (int j = 0; j < rank; ++j) w[j] = cartan[j][i];
    return w;
}

Weight RootDatum::fundamental_weight(int i) const {
    Weight w(rank, 0);
    w[i] = 1;
    return w;
}

Weight RootDatum::rho() const { return Weight(rank, 1); }

std::string RootDatum::name() const { return std::string(1, lie_type) + std::to_string(rank); }

RootDatum build_root_datum(char lie_type, int rank) {
    if (!valid_type(lie_type, rank))
        throw InputError("invalid simple type " + std::string(1, lie_type) + std::to_string(rank));
    RootDatum rd;
    rd.lie_type = lie_type;
    rd.rank = rank;
    rd.cartan = cartan_table(lie_type, rank);
    rd.d = symmetrizers(rd.cartan);
    rd.cartan_inverse = linalg::inverse(rd.cartan);
    rd.gram.assign(rank, RationalVector(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rd.gram[i][j] = rd.cartan_inverse[i][j] * rd.d[i];

    std::set<Weight> roots;
    std::vector<Weight> frontier;
    for (int i = 0; i < rank; ++i) frontier.push_back(rd.simple_root(i));
    while (!frontier.empty()) {
        Weight b = frontier.back();
        frontier.pop_back();
        if (!roots.insert(b).second) continue;
        for (int i = 0; i < rank; ++i) frontier.push_back(reflect(i, b, rd));
    }
    for (const auto& b : roots)
        if (is_positive_root(b, rd)) rd.positive_roots.push_back(b);
    auto height = [&](const Weight& b) {
        Rational h(0);
        for (const auto& c : root_coordinates(b, rd)) h += c;
        return h;
    };
    std::stable_sort(rd.positive_roots.begin(), rd.positive_roots.end(),
                     [&](const Weight& x, const Weight& y) { return height(x) < height(y); });
    return rd;
}

Rational pairing(const Weight& x, const Weight& y, const RootDatum& datum) {
    Rational s(0);
    for (int i = 0; i < datum.rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < datum.rank; ++j)
            if (y[j] != 0) s += datum.gram[i][j] * (x[i] * y[j]);
    }
    return s;
}

Weight reflect(int i, const Weight& x, const RootDatum& datum) {
    Weight r = x;
    const int c = x[i];
    for (int j = 0; j < datum.rank; ++j) r[j] -= c * datum.cartan[j][i];
    return r;
}

RationalVector root_coordinates(const Weight& x, const RootDatum& datum) {
    return linalg::apply(datum.cartan_inverse, x);
}

bool is_positive_root(const Weight& x, const RootDatum& datum) {
    const auto c = root_coordinates(x, datum);
    bool nonzero = false;
    for (const auto& v : c) {
        if (v < 0) return false;
        if (v != 0) nonzero = true;
    }
    return nonzero;
}

}  // namespace qschub
