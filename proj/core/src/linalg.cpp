#include "qschub/linalg.hpp"

#include <sstream>

namespace qschub {

Weight add(const Weight& x, const Weight& y, int k) {
    Weight r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + k * y[i];
    return r;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace qschub

namespace qschub::linalg {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IntMatrix c(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < k; ++x)
            if (a[i][x] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][x] * b[x][j];
    return c;
}

IntVector apply(const IntMatrix& a, const IntVector& x) {
    IntVector y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    RationalMatrix c(n, RationalVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < k; ++x)
            if (a[i][x] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][x] * b[x][j];
    return c;
}

RationalVector apply(const RationalMatrix& a, const IntVector& x) {
    RationalVector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) y[i] += a[i][j] * x[j];
    return y;
}

RationalMatrix transpose(const RationalMatrix& a) {
    if (a.empty()) return {};
    RationalMatrix t(a[0].size(), RationalVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RationalMatrix inverse(const IntMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix m(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(m[c], m[p]);
        const Rational pv = m[c][c];
        for (auto& x : m[c]) x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    RationalMatrix inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    RationalMatrix m(rows, RationalVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rational pv = m[r][c];
        for (auto& x : m[r]) x /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    RationalVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
    return x;
}

}  // namespace qschub::linalg
