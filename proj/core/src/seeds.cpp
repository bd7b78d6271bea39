#include "qschub/seeds.hpp"

#include "qschub/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace qschub {

std::string to_string(Family f) { return f == Family::Standard ? "standard" : "opposite"; }

Family parse_family(const std::string& s) {
    if (s == "standard" || s == "std") return Family::Standard;
    if (s == "opposite" || s == "opp") return Family::Opposite;
    throw InputError("unknown variant: " + s);
}

std::string to_string(ClusterKind k) {
    switch (k) {
    case ClusterKind::PureD: return "pure-d";
    case ClusterKind::PureU: return "pure-u";
    case ClusterKind::Standard: return "standard";
    case ClusterKind::Opposite: return "opposite";
    case ClusterKind::Chain: return "chain";
    case ClusterKind::Intermediate: return "intermediate";
    }
    return "?";
}

ClusterKind Cluster::kind() const {
    switch (strings.size()) {
    case 0: return ClusterKind::Intermediate;
    case 2: return family == Family::Standard ? ClusterKind::PureD : ClusterKind::PureU;
    case 3: return family == Family::Standard ? ClusterKind::Standard : ClusterKind::Opposite;
    default: return ClusterKind::Chain;
    }
}

std::optional<std::size_t> Cluster::index_of(const MinorLabel& l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return i;
    return std::nullopt;
}

IntVector Cluster::mutable_indices() const {
    IntVector out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (mutable_mask[i]) out.push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------- order certificate

bool certified_less(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table) {
    return table.pos(l2.s, l2.i) < table.pos(l1.s, l1.i + 1) && table.pos(l1.s, l1.j) < table.pos(l2.s, l2.j + 1);
}

std::optional<OrderWitness> certify_order_at(const MinorLabel& l1, const MinorLabel& l2, int p, int q,
                                             const PositionTable& table) {
    const int a = l1.s, b = l2.s, M = table.M();
    if (p < 0 || q < 0 || p > M || q > M) return std::nullopt;
    if (table.prefix_weight(p, b) != l2.xi || table.prefix_weight(q, a) != l1.eta) return std::nullopt;
    const int p2 = std::max(p, table.pos(a, l1.i));
    const int q2 = std::max(q, table.pos(b, l2.j));
    if (p2 > M || q2 > M || table.prefix_weight(p2, a) != l1.xi || table.prefix_weight(q2, b) != l2.eta)
        return std::nullopt;

    const RootDatum& rd = table.datum();
    OrderWitness w;
    w.s_prime = compose(table.prefix(p).word, rd);
    w.t_prime = compose(table.prefix(q).word, rd);
    w.s = compose(inverse(w.s_prime, rd), table.prefix(p2), rd);
    w.t = compose(inverse(w.t_prime, rd), table.prefix(q2), rd);
    w.lambda = rd.fundamental_weight(a);
    w.mu = rd.fundamental_weight(b);
    const WeylElt ss = compose(w.s_prime, w.s, rd);
    const WeylElt tt = compose(w.t_prime, w.t, rd);
    if (ss.length() != w.s_prime.length() + w.s.length()) return std::nullopt;
    if (tt.length() != w.t_prime.length() + w.t.length()) return std::nullopt;
    if (act(ss, w.lambda) != l1.xi || act(w.t_prime, w.lambda) != l1.eta) return std::nullopt;
    if (act(w.s_prime, w.mu) != l2.xi || act(tt, w.mu) != l2.eta) return std::nullopt;
    return w;
}

std::optional<OrderWitness> certify_order(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table) {
    if (!certified_less(l1, l2, table)) return std::nullopt;
    auto w = certify_order_at(l1, l2, table.pos(l2.s, l2.i), table.pos(l1.s, l1.j), table);
    if (!w) throw VerificationError("prefix certificate without a Weyl witness for " + l1.str() + " < " + l2.str());
    return w;
}

Rational formula_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table) {
    if (!certified_less(l1, l2, table))
        throw VerificationError("uncertified pair " + l1.str() + " < " + l2.str());
    return pairing(add(l1.xi, l1.eta, -1), add(l2.xi, l2.eta), table.datum());
}

// ---------------------------------------------------------------- clusters

namespace {

struct Entry {
    MinorLabel label;
    Part part;
};

void validate_strings(const IntVector& strings, const PositionTable& table) {
    if (strings.size() < 2) throw InputError("at least two strings are required");
    for (std::size_t k = 0; k < strings.size(); ++k) {
        if (strings[k] < 0 || strings[k] > table.M())
            throw InputError("string " + std::to_string(strings[k]) + " outside 0.." + std::to_string(table.M()));
        if (k && strings[k] < strings[k - 1]) throw InputError("strings out of order: " + to_string(strings));
    }
    if (strings.front() == strings.back()) throw InputError("first and last strings must differ");
}

class ClusterBuilder {
public:
    explicit ClusterBuilder(const PositionTable& t) : table_(t) {}

    // E^d_t(s, j) for occ(b) < j <= occ(c)
    void down(int t, int b, int c) {
        for (int s = 0; s < table_.rank(); ++s)
            for (int j = table_.occ(b, s) + 1; j <= table_.occ(c, s); ++j) push(table_.occ(t, s), j, s, Part::D);
    }
    // E^u_c(s, j) for occ(a) <= j < occ(b)
    void up(int a, int b, int c) {
        for (int s = 0; s < table_.rank(); ++s)
            for (int j = table_.occ(a, s); j < table_.occ(b, s); ++j) push(j, table_.occ(c, s), s, Part::U);
    }
    void standard(const IntVector& r) {
        const std::size_t n = r.size();
        if (n < 2) return;
        if (n == 2) return down(r[0], r[0], r[1]);
        down(r[0], r[n - 2], r[n - 1]);
        opposite(IntVector(r.begin(), r.end() - 1));
    }
    void opposite(const IntVector& r) {
        const std::size_t n = r.size();
        if (n < 2) return;
        if (n == 2) return up(r[0], r[1], r[1]);
        up(r[0], r[1], r[n - 1]);
        standard(IntVector(r.begin() + 1, r.end()));
    }
    std::vector<Entry> entries;

private:
    void push(int i, int j, int s, Part part) {
        if (i == j) return;
        entries.push_back({make_label(i, j, s, table_), part});
    }
    const PositionTable& table_;
};

std::set<MinorLabel> label_set(const IntVector& strings, Family family, const PositionTable& table) {
    ClusterBuilder cb(table);
    if (family == Family::Standard)
        cb.standard(strings);
    else
        cb.opposite(strings);
    std::set<MinorLabel> out;
    for (const auto& e : cb.entries) out.insert(e.label);
    return out;
}

}  // namespace

Cluster build_cluster(const IntVector& strings, Family family, const PositionTable& table) {
    validate_strings(strings, table);
    ClusterBuilder cb(table);
    if (family == Family::Standard)
        cb.standard(strings);
    else
        cb.opposite(strings);
    auto& entries = cb.entries;

    auto key = [&](const Entry& e) {
        const MinorLabel& l = e.label;
        if (e.part == Part::U) return std::make_tuple(0, -table.pos(l.s, l.i), l.s, l.j);
        return std::make_tuple(1, table.pos(l.s, l.j), l.s, l.i);
    };
    std::sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) { return key(x) < key(y); });
    std::set<MinorLabel> seen;
    for (const auto& e : entries)
        if (!seen.insert(e.label).second) throw ConstructionError("duplicate label " + e.label.str());

    Cluster c;
    c.family = family;
    c.strings = strings;
    std::set<MinorLabel> frozen;
    const int first = strings.front(), last = strings.back();
    for (int s = 0; s < table.rank(); ++s)
        if (table.occ(first, s) < table.occ(last, s))
            frozen.insert(make_label(table.occ(first, s), table.occ(last, s), s, table));
    for (const auto& e : entries) {
        c.labels.push_back(e.label);
        c.parts.push_back(e.part);
        c.mutable_mask.push_back(frozen.count(e.label) == 0);
    }
    for (const auto& f : frozen)
        if (!c.index_of(f)) throw ConstructionError("non-mutable label " + f.str() + " missing from cluster");
    return c;
}

RationalMatrix lambda_matrix(const std::vector<MinorLabel>& labels, const PositionTable& table,
                             const LambdaOptions& options) {
    const std::size_t n = labels.size();
    const GammaSequence gamma = gamma_sequence(table);
    RationalMatrix L(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const MinorLabel &x = labels[i], &y = labels[j];
            std::vector<Rational> candidates;
            if (certified_less(x, y, table)) candidates.push_back(formula_exponent(x, y, table));
            if (certified_less(y, x, table)) candidates.push_back(-formula_exponent(y, x, table));
            if (candidates.empty())
                throw VerificationError("no order certificate for " + x.str() + ", " + y.str());
            if (options.flip_sign_at &&
                (*options.flip_sign_at == std::make_pair(i, j) || *options.flip_sign_at == std::make_pair(j, i)))
                for (auto& v : candidates) v = -v;
            const Rational o = oracle_exponent(x, y, table, gamma);
            for (const auto& v : candidates)
                if (v != o)
                    throw OracleMismatch("exponent mismatch at (" + x.str() + ", " + y.str() + "): formula " +
                                         to_string(v) + ", oracle " + to_string(o));
            L[i][j] = candidates.front();
            L[j][i] = -candidates.front();
        }
    return L;
}

// ---------------------------------------------------------------- H and B monomials

namespace {

void add_factor(LabelMonomial& m, int s, int i, int j, int e, const PositionTable& table) {
    if (i == j || e == 0) return;
    if (i > j)
        throw ConstructionError("factor E_" + std::to_string(s + 1) + "(" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not a minor");
    const MinorLabel l = make_label(i, j, s, table);
    if ((m[l] += e) == 0) m.erase(l);
}

LabelMonomial combine(const LabelMonomial& x, const LabelMonomial& y, int k) {
    LabelMonomial r = x;
    for (const auto& [l, e] : y)
        if ((r[l] += k * e) == 0) r.erase(l);
    return r;
}

}  // namespace

LabelMonomial h_monomial_labels(char kind, int t, int a, int j, const PositionTable& table) {
    const auto& A = table.datum().cartan;
    const int ta = table.occ(t, a);
    LabelMonomial m;
    if (kind == 'd') {
        add_factor(m, a, ta, j, 1, table);
        add_factor(m, a, ta, j - 1, 1, table);
    } else if (kind == 'u') {
        add_factor(m, a, j, ta, 1, table);
        add_factor(m, a, j - 1, ta, 1, table);
    } else {
        throw InputError(std::string("unknown H kind ") + kind);
    }
    for (int k = 0; k < table.rank(); ++k) {
        if (k == a || A[k][a] >= 0) continue;
        const int tk = table.occ(t, k), p = p_index(a, j, k, table);
        if (kind == 'd')
            add_factor(m, k, tk, p, A[k][a], table);
        else
            add_factor(m, k, p, tk, A[k][a], table);
    }
    return m;
}

ExponentVector resolve(const LabelMonomial& m, const Cluster& cluster) {
    ExponentVector v(cluster.size(), 0);
    for (const auto& [l, e] : m) {
        const auto idx = cluster.index_of(l);
        if (!idx) throw ConstructionError("factor " + l.str() + " is not in the cluster");
        v[*idx] += e;
    }
    return v;
}

ExponentVector h_monomial(char kind, int t, int a, int j, const Cluster& cluster, const PositionTable& table) {
    return resolve(h_monomial_labels(kind, t, a, j, table), cluster);
}

LabelMonomial boundary_column(int a, int b, int s, const PositionTable& table) {
    const auto& A = table.datum().cartan;
    const int sa = table.occ(a, s), sb = table.occ(b, s);
    const int mu = table.pos(s, sa + 1) - 1, mv = table.pos(s, sb + 1) - 1;
    LabelMonomial m;
    auto lab = [&](int k, int m1, int m2, int e) { add_factor(m, k, table.occ(m1, k), table.occ(m2, k), e, table); };
    lab(s, mu + 1, mv, -1);
    lab(s, mu, mv + 1, -1);
    for (int k = 0; k < table.rank(); ++k) {
        if (k == s || A[k][s] >= 0) continue;
        lab(k, a, mv, -A[k][s]);
        lab(k, mu, b, -A[k][s]);
        lab(k, a, b, A[k][s]);
    }
    return m;
}

LabelMonomial opposite_boundary_column(int b, int c, int s, const PositionTable& table) {
    const auto& A = table.datum().cartan;
    const int sb = table.occ(b, s), sc = table.occ(c, s);
    LabelMonomial m = combine(h_monomial_labels('u', c, s, sb, table), h_monomial_labels('d', b, s, sc, table), 1);
    add_factor(m, s, sb, sc, -2, table);
    for (int k = 0; k < table.rank(); ++k) {
        if (k == s || A[k][s] >= 0) continue;
        add_factor(m, k, table.occ(b, k), table.occ(c, k), -A[k][s], table);
    }
    return m;
}

std::pair<LabelMonomial, ColumnSource> b_column(const MinorLabel& label, const IntVector& strings, Family family,
                                                const PositionTable& table) {
    IntVector r = strings;
    if (r.size() == 2) r = family == Family::Standard ? IntVector{r[0], r[0], r[1]} : IntVector{r[0], r[1], r[1]};
    if (r.size() != 3) throw InputError("closed-form columns need two or three strings");
    const int a = r[0], b = r[1], c = r[2], s = label.s, i = label.i, j = label.j;
    const int sa = table.occ(a, s), sb = table.occ(b, s), sc = table.occ(c, s);
    auto bd = [&](int t, int jj) {
        return combine(h_monomial_labels('d', t, s, jj, table), h_monomial_labels('d', t, s, jj + 1, table), -1);
    };
    auto bu = [&](int t, int jj) {
        return combine(h_monomial_labels('u', t, s, jj + 1, table), h_monomial_labels('u', t, s, jj, table), -1);
    };
    if (family == Family::Standard) {
        if (j == sb && i > sa) return {bu(b, i), {"u", {}, family}};
        if (i == sa && sb < j && j < sc) return {bd(a, j), {"d", {}, family}};
        if (i == sa && j == sb) {
            const bool simple = table.pos(s, sb + 1) - 1 == b;
            return {boundary_column(a, b, s, table), {simple ? "boundary77" : "boundary75", {}, family}};
        }
    } else {
        if (j == sc && sa < i && i < sb) return {bu(c, i), {"u", {}, family}};
        if (i == sb && sb < j && j < sc) return {bd(b, j), {"d", {}, family}};
        if (i == sb && j == sc) return {opposite_boundary_column(b, c, s, table), {"opposite-boundary", {}, family}};
    }
    throw ConstructionError("no column formula for " + label.str() + " in " + to_string(family) + " seed " +
                            to_string(strings));
}

RationalVector certificate(const RationalMatrix& L, const ExponentVector& column) { return linalg::apply(L, column); }

std::optional<ExponentVector> repair_column(const RationalMatrix& L, const IntVector& support, std::size_t target,
                                            const Rational& value) {
    const std::size_t n = L.size();
    RationalMatrix sub(n, RationalVector(support.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < support.size(); ++k) sub[i][k] = L[i][support[k]];
    RationalVector rhs(n, Rational(0));
    rhs[target] = value;
    const auto x = linalg::solve(sub, rhs);
    if (!x) return std::nullopt;
    ExponentVector out(n, 0);
    for (std::size_t k = 0; k < support.size(); ++k) {
        if ((*x)[k].denominator() != 1) return std::nullopt;
        out[support[k]] = static_cast<int>((*x)[k].numerator());
    }
    return out;
}

// ---------------------------------------------------------------- seeds

ExponentVector QuantumSeed::column(std::size_t j) const {
    ExponentVector v(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) v[i] = B[i][j];
    return v;
}

ExponentVector QuantumSeed::oriented_column(std::size_t j) const {
    ExponentVector v = column(j);
    if (sign > 0)
        for (auto& x : v) x = -x;
    return v;
}

std::optional<std::size_t> QuantumSeed::column_of(const MinorLabel& l) const {
    for (std::size_t j = 0; j < mutable_indices.size(); ++j)
        if (cluster.labels[mutable_indices[j]] == l) return j;
    return std::nullopt;
}

namespace {

// Sign e with L x = e 2 d_s e_target, or 0.
int certificate_sign(const RationalMatrix& L, const ExponentVector& x, std::size_t target, int ds) {
    const RationalVector v = certificate(L, x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != target && v[i] != 0) return 0;
    if (v[target] == 2 * ds) return 1;
    if (v[target] == -2 * ds) return -1;
    return 0;
}

bool supported_in(const LabelMonomial& m, const Cluster& c) {
    for (const auto& [l, e] : m)
        if (!c.index_of(l)) return false;
    return true;
}

using SeedCache = std::map<std::pair<IntVector, Family>, std::optional<QuantumSeed>>;

QuantumSeed build_seed_impl(const IntVector& strings, Family family, const PositionTable& table, SeedCache& cache);

const std::optional<QuantumSeed>& cached_triple(const IntVector& strings, Family family, const PositionTable& table,
                                                SeedCache& cache) {
    auto key = std::make_pair(strings, family);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::optional<QuantumSeed> s;
    try {
        s = build_seed_impl(strings, family, table, cache);
    } catch (const ConstructionError&) {
    }
    return cache.emplace(key, std::move(s)).first->second;
}

QuantumSeed build_seed_impl(const IntVector& strings, Family family, const PositionTable& table, SeedCache& cache) {
    QuantumSeed seed;
    seed.cluster = build_cluster(strings, family, table);
    seed.L = lambda_matrix(seed.cluster.labels, table);
    seed.mutable_indices = seed.cluster.mutable_indices();
    const auto& cl = seed.cluster;
    const auto& A = table.datum().cartan;
    const auto& d = table.datum().d;

    std::vector<ExponentVector> columns;
    IntVector native;
    for (int idx : seed.mutable_indices) {
        const MinorLabel& l = cl.labels[idx];
        const int ds = d[l.s];
        std::optional<ExponentVector> col;
        ColumnSource src;
        if (strings.size() <= 3) {
            auto [mono, s0] = b_column(l, strings, family, table);
            src = s0;
            col = resolve(mono, cl);
            if (certificate_sign(seed.L, *col, idx, ds) == 0) {
                IntVector support;
                for (std::size_t k = 0; k < cl.size(); ++k)
                    if ((*col)[k] != 0 || cl.labels[k].s == l.s || A[cl.labels[k].s][l.s] < 0)
                        support.push_back(static_cast<int>(k));
                const int want = src.kind == "u" ? 1 : -1;
                col = repair_column(seed.L, support, idx, Rational(want * 2 * ds));
                if (!col) {
                    support.clear();
                    for (std::size_t k = 0; k < cl.size(); ++k) support.push_back(static_cast<int>(k));
                    col = repair_column(seed.L, support, idx, Rational(want * 2 * ds));
                }
                if (!col) throw ConstructionError("column for " + l.str() + " fails its certificate and cannot be repaired");
                src.kind = "repaired";
            }
        } else {
            const std::size_t n = strings.size();
            for (std::size_t x = 0; x < n && !col; ++x)
                for (std::size_t y = x; y < n && !col; ++y)
                    for (std::size_t z = y; z < n && !col; ++z) {
                        if (strings[x] == strings[z]) continue;
                        for (Family f : {Family::Standard, Family::Opposite}) {
                            const IntVector tr{strings[x], strings[y], strings[z]};
                            const auto& env = cached_triple(tr, f, table, cache);
                            if (!env) continue;
                            const auto jc = env->column_of(l);
                            if (!jc) continue;
                            LabelMonomial mono;
                            const ExponentVector ec = env->column(*jc);
                            for (std::size_t k = 0; k < ec.size(); ++k)
                                if (ec[k] != 0) mono[env->cluster.labels[k]] = ec[k];
                            if (!supported_in(mono, cl)) continue;
                            ExponentVector cand = resolve(mono, cl);
                            if (certificate_sign(seed.L, cand, idx, ds) == 0) continue;
                            col = std::move(cand);
                            src = ColumnSource{"envelope", tr, f};
                            break;
                        }
                    }
            if (!col) {
                IntVector support;
                for (std::size_t k = 0; k < cl.size(); ++k) support.push_back(static_cast<int>(k));
                col = repair_column(seed.L, support, idx, Rational(-2 * ds));
                if (!col) throw ConstructionError("no column found for " + l.str() + " in chain " + to_string(strings));
                src = ColumnSource{"repaired", {}, family};
            }
        }
        native.push_back(certificate_sign(seed.L, *col, idx, ds));
        columns.push_back(std::move(*col));
        seed.sources.push_back(src);
    }
    const bool all_positive = !native.empty() && std::all_of(native.begin(), native.end(), [](int x) { return x > 0; });
    seed.sign = all_positive ? 1 : -1;
    seed.B.assign(cl.size(), IntVector(columns.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const int f = native[j] == seed.sign ? 1 : -1;
        for (std::size_t i = 0; i < cl.size(); ++i) seed.B[i][j] = f * columns[j][i];
    }
    return seed;
}

}  // namespace

QuantumSeed build_seed(const IntVector& strings, Family family, const PositionTable& table) {
    SeedCache cache;
    return build_seed_impl(strings, family, table, cache);
}

CompatReport check_compatible(const QuantumSeed& seed, const PositionTable& table) {
    CompatReport rep;
    const std::size_t n = seed.size(), m = seed.mutable_indices.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (seed.L[i][j] != -seed.L[j][i]) {
                rep.pass = false;
                rep.failure = "L is not skew-symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return rep;
            }
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t idx = seed.mutable_indices[j];
        const int ds = table.datum().d[seed.cluster.labels[idx].s];
        for (std::size_t k = 0; k < n; ++k) {
            Rational v(0);
            for (std::size_t i = 0; i < n; ++i) v += seed.L[i][k] * seed.B[i][j];
            if (k != idx) {
                if (v != 0) {
                    rep.pass = false;
                    rep.failure = "(B^T L)[" + std::to_string(j) + "][" + std::to_string(k) + "] = " + to_string(v);
                    return rep;
                }
                continue;
            }
            const int sgn = v == 2 * ds ? -1 : v == -2 * ds ? 1 : 0;
            if (sgn == 0 || (rep.sign != 0 && sgn != rep.sign)) {
                rep.pass = false;
                rep.failure = "diagonal entry for " + seed.cluster.labels[idx].str() + " is " + to_string(v);
                return rep;
            }
            rep.sign = sgn;
            rep.diagonal_magnitudes.push_back(2 * ds);
        }
    }
    return rep;
}

bool is_splitting(int a, int b, int c, Family family, const PositionTable& table) {
    if (!(a < b && b < c)) throw InputError("splitting needs a < b < c");
    return label_set({a, b, c}, family, table) == label_set({a, c}, family, table);
}

std::string describe_matrix(const RationalMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        os << '[';
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << to_string(row[j]);
        os << "]\n";
    }
    return os.str();
}

std::string describe_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) os << to_string(row) << '\n';
    return os.str();
}

std::optional<std::string> seed_difference(const QuantumSeed& x, const QuantumSeed& y) {
    const auto& lx = x.cluster.labels;
    const auto& ly = y.cluster.labels;
    if (std::set<MinorLabel>(lx.begin(), lx.end()) != std::set<MinorLabel>(ly.begin(), ly.end())) {
        std::string d = "label sets differ:";
        for (const auto& l : lx)
            if (!y.cluster.index_of(l)) d += " -" + l.str();
        for (const auto& l : ly)
            if (!x.cluster.index_of(l)) d += " +" + l.str();
        return d;
    }
    std::vector<std::size_t> perm(lx.size());
    for (std::size_t i = 0; i < lx.size(); ++i) perm[i] = *y.cluster.index_of(lx[i]);
    for (std::size_t i = 0; i < lx.size(); ++i) {
        if (x.cluster.mutable_mask[i] != y.cluster.mutable_mask[perm[i]])
            return "mutability of " + lx[i].str() + " differs";
        for (std::size_t j = 0; j < lx.size(); ++j)
            if (x.L[i][j] != y.L[perm[i]][perm[j]])
                return "L differs at (" + lx[i].str() + ", " + lx[j].str() + "): " + to_string(x.L[i][j]) + " vs " +
                       to_string(y.L[perm[i]][perm[j]]);
    }
    for (std::size_t j = 0; j < x.mutable_indices.size(); ++j) {
        const MinorLabel& l = lx[x.mutable_indices[j]];
        const auto jy = y.column_of(l);
        if (!jy) return "column for " + l.str() + " missing";
        const ExponentVector cx = x.oriented_column(j), cy = y.oriented_column(*jy);
        for (std::size_t i = 0; i < lx.size(); ++i)
            if (cx[i] != cy[perm[i]])
                return "B column for " + l.str() + " differs at " + lx[i].str() + ": " + std::to_string(cx[i]) +
                       " vs " + std::to_string(cy[perm[i]]);
    }
    return std::nullopt;
}

bool is_subseed(const QuantumSeed& big, const QuantumSeed& small) {
    std::vector<std::size_t> emb;
    for (std::size_t i = 0; i < small.size(); ++i) {
        const auto k = big.cluster.index_of(small.cluster.labels[i]);
        if (!k) return false;
        if (small.cluster.mutable_mask[i] && !big.cluster.mutable_mask[*k]) return false;
        emb.push_back(*k);
    }
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j)
            if (small.L[i][j] != big.L[emb[i]][emb[j]]) return false;
    for (std::size_t j = 0; j < small.mutable_indices.size(); ++j) {
        const MinorLabel& l = small.cluster.labels[small.mutable_indices[j]];
        const ExponentVector cb = big.oriented_column(*big.column_of(l));
        const ExponentVector cs = small.oriented_column(j);
        ExponentVector restricted(small.size(), 0);
        for (std::size_t k = 0; k < big.size(); ++k) {
            if (cb[k] == 0) continue;
            const auto pos = std::find(emb.begin(), emb.end(), k);
            if (pos == emb.end()) return false;
            restricted[pos - emb.begin()] = cb[k];
        }
        if (restricted != cs) return false;
    }
    return true;
}

}  // namespace qschub
