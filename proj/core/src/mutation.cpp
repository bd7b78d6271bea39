#include "qschub/mutation.hpp"

#include "qschub/linalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qschub {

MatrixPair bfz_matrices(const RationalMatrix& L, const IntMatrix& B, const IntVector& mutable_indices, std::size_t col,
                        int eps) {
    const std::size_t n = B.size(), m = mutable_indices.size();
    const std::size_t k = mutable_indices.at(col);
    IntMatrix E = linalg::identity(n);
    E[k][k] = -1;
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) E[i][k] = std::max(0, -eps * B[i][col]);
    IntMatrix F = linalg::identity(m);
    F[col][col] = -1;
    for (std::size_t j = 0; j < m; ++j)
        if (j != col) F[col][j] = std::max(0, eps * B[k][j]);
    MatrixPair out;
    out.B = linalg::multiply(linalg::multiply(E, B), F);
    const RationalMatrix Er = linalg::to_rational(E);
    out.L = linalg::multiply(linalg::multiply(linalg::transpose(Er), L), Er);
    return out;
}

QuantumSeed bfz_mutate(const QuantumSeed& seed, std::size_t k, int eps, const PositionTable& table,
                       const std::optional<MinorLabel>& replacement) {
    if (k >= seed.size() || !seed.cluster.mutable_mask[k])
        throw InputError("index " + std::to_string(k) + " is not a mutable label");
    if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");
    const CompatReport rep = check_compatible(seed, table);
    if (!rep.pass) throw VerificationError("input seed is not a compatible pair: " + rep.failure);
    const std::size_t col = *seed.column_of(seed.cluster.labels[k]);
    MatrixPair p = bfz_matrices(seed.L, seed.B, seed.mutable_indices, col, eps);
    QuantumSeed out = seed;
    out.L = std::move(p.L);
    out.B = std::move(p.B);
    out.cluster.strings.clear();
    if (replacement) out.cluster.labels[k] = *replacement;
    return out;
}

std::vector<MutationSite> find_sites(int a, int b, int c, const PositionTable& table) {
    if (!(0 <= a && a <= b && b <= c && c <= table.M() && a < c))
        throw InputError("strings must satisfy a <= b <= c, a < c");
    std::vector<MutationSite> out;
    if (b < c) out.push_back({SiteKind::Plus, table.word()[b], a, b, c, b + 1});
    if (b > a) out.push_back({SiteKind::Minus, table.word()[b - 1], a, b, c, b - 1});
    return out;
}

SchubertPlan plan_schubert(int a, int b, int c, int target, const PositionTable& table) {
    if (!(0 <= a && a <= b && b <= c && c <= table.M() && a < c))
        throw InputError("strings must satisfy a <= b <= c, a < c");
    SchubertPlan p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.target = target;
    if (target == b + 1 && target <= c) {
        p.kind = SiteKind::Plus;
        p.letter = table.word()[b];
    } else if (target == b - 1 && target >= a) {
        p.kind = SiteKind::Minus;
        p.letter = table.word()[b - 1];
    } else {
        throw InputError("no mutation site from " + std::to_string(b) + " to " + std::to_string(target));
    }
    const int longer = std::max(b, target);
    p.sa = table.occ(a, p.letter);
    p.sb = table.occ(longer, p.letter);
    p.t0 = p.sb - p.sa - 1;
    return p;
}

LabelMonomial check_column(const SchubertPlan& plan, int t, const PositionTable& table) {
    const auto& A = table.datum().cartan;
    const int s = plan.letter, sb = plan.sb - 1;  // occurrences in the shorter string
    const int shorter = std::min(plan.b, plan.target);
    const int p = table.pos(s, plan.sa + t + 1);
    LabelMonomial m;
    auto put = [&](int k, int i, int j, int e) {
        if (i == j) return;
        const MinorLabel l = make_label(i, j, k, table);
        if ((m[l] += e) == 0) m.erase(l);
    };
    put(s, plan.sa + t + 1, sb, -1);
    put(s, plan.sa + t, sb + 1, -1);
    for (int k = 0; k < table.rank(); ++k)
        if (k != s && A[k][s] < 0) put(k, table.occ(p, k), table.occ(shorter, k), -A[k][s]);
    return m;
}

SeedState schubert_start(const SchubertPlan& plan, const PositionTable& table) {
    return SeedState{build_seed({plan.a, plan.b, plan.c}, Family::Standard, table), 0, std::nullopt};
}

namespace {

Weight label_weight(const MinorLabel& l) { return add(l.xi, l.eta, -1); }

// Verifies one BFZ step replacing `old` by `fresh`; fills the record.
SeedState mutate_and_verify(const SeedState& state, const MinorLabel& old, const MinorLabel& fresh,
                            const std::optional<LabelMonomial>& expected_column, const PositionTable& table,
                            StepRecord& rec) {
    const QuantumSeed& seed = state.seed;
    const auto k = seed.cluster.index_of(old);
    if (!k || !seed.cluster.mutable_mask[*k])
        throw VerificationError("label " + old.str() + " is not a mutable member of the current cluster");
    const std::size_t col = *seed.column_of(old);
    rec.action = "bfz";
    rec.replaced = old;
    rec.replacement = fresh;
    rec.k = *k;
    rec.eps = 1;

    QuantumSeed current = seed;
    if (expected_column) {
        rec.check_column_applicable = true;
        ExponentVector cc;
        try {
            cc = resolve(*expected_column, current.cluster);
        } catch (const ConstructionError& e) {
            rec.check_column = false;
            rec.detail += std::string("check column: ") + e.what() + "; ";
        }
        if (rec.check_column) {
            const ExponentVector have = current.oriented_column(col);
            if (have != cc) {
                ExponentVector diff(have.size());
                for (std::size_t i = 0; i < have.size(); ++i) diff[i] = have[i] - cc[i];
                const RationalVector v = certificate(current.L, diff);
                if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
                    for (std::size_t i = 0; i < cc.size(); ++i) current.B[i][col] = current.sign < 0 ? cc[i] : -cc[i];
                    rec.check_column_installed = true;
                } else {
                    rec.check_column = false;
                    rec.detail += "current column " + to_string(have) + " differs from check column " +
                                  to_string(cc) + "; ";
                }
            }
        }
    }

    Weight plus(table.rank(), 0), minus(table.rank(), 0);
    for (std::size_t i = 0; i < current.size(); ++i) {
        const int b = current.B[i][col];
        if (b > 0) plus = add(plus, label_weight(current.cluster.labels[i]), b);
        if (b < 0) minus = add(minus, label_weight(current.cluster.labels[i]), -b);
    }
    const Weight lhs = add(label_weight(old), label_weight(fresh));
    rec.weight_homogeneous = plus == minus && plus == lhs;
    if (!rec.weight_homogeneous) rec.detail += "exchange relation is not weight-homogeneous; ";

    const MatrixPair p1 = bfz_matrices(current.L, current.B, current.mutable_indices, col, 1);
    const MatrixPair p2 = bfz_matrices(current.L, current.B, current.mutable_indices, col, -1);
    rec.eps_independent = p1.L == p2.L && p1.B == p2.B;
    if (!rec.eps_independent) rec.detail += "eps = +1 and eps = -1 disagree; ";

    SeedState next{current, state.step + 1, std::nullopt};
    next.seed.cluster.labels[*k] = fresh;
    next.seed.cluster.strings.clear();
    next.seed.L = p1.L;
    next.seed.B = p1.B;
    try {
        const RationalMatrix direct = lambda_matrix(next.seed.cluster.labels, table);
        rec.lambda_match = direct == p1.L;
        if (!rec.lambda_match)
            rec.detail += "E^T L E differs from L of the new labels:\n" + describe_matrix(p1.L) + "vs\n" +
                          describe_matrix(direct);
    } catch (const VerificationError& e) {
        rec.lambda_match = false;
        rec.detail += std::string("new labels: ") + e.what() + "; ";
    }
    const CompatReport comp = check_compatible(next.seed, table);
    rec.compatible = comp.pass;
    if (!comp.pass) rec.detail += "mutated seed not compatible: " + comp.failure + "; ";
    return next;
}

}  // namespace

std::pair<SeedState, StepRecord> schubert_step(const SeedState& state, const SchubertPlan& plan,
                                               const PositionTable& table) {
    if (state.step >= plan.t0) throw InputError("no further steps on this path");
    const int s = plan.letter, t = state.step;
    StepRecord rec;
    rec.step = t + 1;
    if (plan.kind == SiteKind::Plus) {
        const int sb = plan.sb - 1;
        const MinorLabel old = make_label(plan.sa + t, sb, s, table);
        const MinorLabel fresh = make_label(plan.sa + t + 1, sb + 1, s, table);
        SeedState next = mutate_and_verify(state, old, fresh, check_column(plan, t, table), table, rec);
        if (t + 1 < plan.t0) next.check_column = resolve(check_column(plan, t + 1, table), next.seed.cluster);
        return {std::move(next), rec};
    }
    const int tt = plan.t0 - 1 - t;
    const MinorLabel old = make_label(plan.sa + tt + 1, plan.sb, s, table);
    const MinorLabel fresh = make_label(plan.sa + tt, plan.sb - 1, s, table);
    SeedState next = mutate_and_verify(state, old, fresh, std::nullopt, table, rec);
    return {std::move(next), rec};
}

bool MutationPath::pass() const {
    if (terminal_difference) return false;
    return std::all_of(records.begin(), records.end(), [](const StepRecord& r) { return r.pass(); });
}

std::string MutationPath::diagnostics() const {
    std::ostringstream os;
    for (const auto& r : records)
        if (!r.pass()) os << "step " << r.step << " (" << r.replaced.str() << " -> " << r.replacement.str() << "): " << r.detail << '\n';
    if (terminal_difference) os << "terminal seed: " << *terminal_difference << '\n';
    return os.str();
}

void require_pass(const MutationPath& path) {
    if (!path.pass()) throw VerificationError(path.diagnostics());
}

MutationPath schubert_mutate(int a, int b, int c, int target, const PositionTable& table) {
    const SchubertPlan plan = plan_schubert(a, b, c, target, table);
    MutationPath path;
    SeedState state = schubert_start(plan, table);
    const MinorLabel renamed = make_label(plan.sa, plan.sb, plan.letter, table);
    StepRecord rename;
    rename.action = "rename";
    rename.replaced = rename.replacement = renamed;
    if (plan.kind == SiteKind::Plus) {
        state.check_column = plan.t0 > 0 ? std::optional(resolve(check_column(plan, 0, table), state.seed.cluster))
                                         : std::nullopt;
        path.records.push_back(rename);
    }
    path.states.push_back(state);
    while (state.step < plan.t0) {
        auto [next, rec] = schubert_step(state, plan, table);
        path.records.push_back(rec);
        ++path.bfz_steps;
        state = std::move(next);
        path.states.push_back(state);
    }
    if (plan.kind == SiteKind::Minus) {
        rename.step = plan.t0 + 1;
        path.records.push_back(rename);
    }
    const QuantumSeed terminal = build_seed({a, target, c}, Family::Standard, table);
    path.terminal_difference = seed_difference(state.seed, terminal);
    path.sign_flipped = !terminal.mutable_indices.empty() && terminal.sign != state.seed.sign;
    return path;
}

MutationPath verified_path(const QuantumSeed& from, const QuantumSeed& to, const PositionTable& table) {
    MutationPath path;
    SeedState state{from, 0, std::nullopt};
    path.states.push_back(state);
    std::vector<MinorLabel> old, fresh;
    for (const auto& l : from.cluster.labels)
        if (!to.cluster.index_of(l)) old.push_back(l);
    for (const auto& l : to.cluster.labels)
        if (!from.cluster.index_of(l)) fresh.push_back(l);
    if (old.size() != fresh.size()) {
        path.terminal_difference = "cluster sizes differ";
        return path;
    }
    while (!old.empty()) {
        bool advanced = false;
        for (std::size_t x = 0; x < old.size() && !advanced; ++x) {
            const auto k = state.seed.cluster.index_of(old[x]);
            if (!state.seed.cluster.mutable_mask[*k]) continue;
            for (std::size_t y = 0; y < fresh.size() && !advanced; ++y) {
                StepRecord rec;
                rec.step = state.step + 1;
                SeedState next = mutate_and_verify(state, old[x], fresh[y], std::nullopt, table, rec);
                if (!rec.pass()) continue;
                path.records.push_back(rec);
                ++path.bfz_steps;
                state = std::move(next);
                path.states.push_back(state);
                old.erase(old.begin() + static_cast<long>(x));
                fresh.erase(fresh.begin() + static_cast<long>(y));
                advanced = true;
            }
        }
        if (!advanced) {
            std::string d = "no verified BFZ step replaces any of";
            for (const auto& l : old) d += " " + l.str();
            path.terminal_difference = d;
            return path;
        }
    }
    path.terminal_difference = seed_difference(state.seed, to);
    path.sign_flipped = !to.mutable_indices.empty() && to.sign != state.seed.sign;
    return path;
}

std::size_t middle_slot(std::size_t n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

namespace {

IntVector with_slot(IntVector v, std::size_t slot, int x) {
    v[slot] = x;
    return v;
}

}  // namespace

CreationPath create_annihilate(int a, int c, int b1, Direction dir, Family family, const PositionTable& table) {
    if (!(0 <= a && a < b1 && b1 < c && c <= table.M())) throw InputError("creation needs a < b1 < c");
    CreationPath out;
    const bool standard = family == Family::Standard;
    int b = standard ? a : c;
    if (standard) {
        for (int x = b1; x > a; --x)
            if (is_splitting(a, x, c, family, table)) {
                b = x;
                break;
            }
    } else {
        for (int x = b1; x < c; ++x)
            if (is_splitting(a, x, c, family, table)) {
                b = x;
                break;
            }
    }
    const QuantumSeed pair_seed = build_seed({a, c}, family, table);
    const QuantumSeed split_seed = build_seed({a, b, c}, family, table);
    if (auto d = seed_difference(pair_seed, split_seed)) {
        out.failure = "split seed differs from the pair seed: " + *d;
        return out;
    }
    std::vector<IntVector> chain{{a, c}, {a, b, c}};
    std::vector<std::string> moves{"start", "split"};
    for (int x = b; x != b1;) {
        const int y = x < b1 ? x + 1 : x - 1;
        chain.push_back({a, y, c});
        moves.push_back(y > x ? "m+" : "m-");
        x = y;
    }
    if (dir == Direction::Annihilate) {
        std::reverse(chain.begin(), chain.end());
        std::reverse(moves.begin(), moves.end());
        for (auto& m : moves) m = m == "split" ? "merge" : m == "m+" ? "m-" : m == "m-" ? "m+" : m;
        moves.front() = "start";
        moves.back() = "merge";
    }
    out.strings.push_back(chain.front());
    out.moves.push_back("start");
    out.seeds.push_back(build_seed(chain.front(), family, table));
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const IntVector& from = chain[i - 1];
        const IntVector& to = chain[i];
        QuantumSeed target = build_seed(to, family, table);
        if (from.size() != to.size()) {
            if (auto d = seed_difference(out.seeds.back(), target)) {
                out.failure = "split/merge changes the seed: " + *d;
                return out;
            }
        } else {
            const MutationPath p = standard ? schubert_mutate(a, from[1], c, to[1], table)
                                            : verified_path(out.seeds.back(), target, table);
            if (!p.pass()) {
                out.failure = p.diagnostics();
                return out;
            }
        }
        out.strings.push_back(to);
        out.moves.push_back(from.size() < to.size() ? "split" : from.size() > to.size() ? "merge" : to[1] > from[1] ? "m+" : "m-");
        out.seeds.push_back(std::move(target));
    }
    return out;
}

ReachReport explore_creation_graph(const PositionTable& table, Family family, std::size_t max_strings) {
    ReachReport rep;
    const int M = table.M();
    std::vector<IntVector> tuples;
    for (std::size_t n = 2; n <= max_strings; ++n) {
        IntVector cur;
        std::function<void(int)> rec = [&](int lo) {
            if (cur.size() == n) {
                if (cur.front() < cur.back()) tuples.push_back(cur);
                return;
            }
            for (int x = lo; x <= M; ++x) {
                cur.push_back(x);
                rec(x);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::map<IntVector, QuantumSeed> seeds;
    std::map<IntVector, std::set<MinorLabel>> sets;
    for (const auto& t : tuples) {
        try {
            QuantumSeed s = build_seed(t, family, table);
            sets[t] = std::set<MinorLabel>(s.cluster.labels.begin(), s.cluster.labels.end());
            seeds.emplace(t, std::move(s));
        } catch (const std::exception& e) {
            rep.failures.push_back("construction " + to_string(t) + ": " + e.what());
        }
    }
    rep.nodes = seeds.size();

    auto equal_seeds = [&](const IntVector& x, const IntVector& y) {
        return sets[x] == sets[y] && !seed_difference(seeds.at(x), seeds.at(y));
    };
    const IntVector start{0, M};
    std::set<IntVector> seen{start};
    std::deque<IntVector> queue{start};
    auto visit = [&](const IntVector& t) {
        if (seen.insert(t).second) queue.push_back(t);
    };
    while (!queue.empty()) {
        const IntVector u = queue.front();
        queue.pop_front();
        const std::size_t n = u.size();
        if (n < max_strings) {
            const std::size_t slot = middle_slot(n);
            for (int x = u[slot - 1]; x <= u[slot]; ++x) {
                IntVector t = u;
                t.insert(t.begin() + static_cast<long>(slot), x);
                if (seeds.count(t) && equal_seeds(u, t)) {
                    ++rep.split_edges;
                    visit(t);
                }
            }
        }
        if (n > 2) {
            const std::size_t slot = middle_slot(n - 1);
            IntVector t = u;
            t.erase(t.begin() + static_cast<long>(slot));
            if (seeds.count(t) && equal_seeds(u, t)) {
                ++rep.split_edges;
                visit(t);
            }
        }
        if (n >= 3) {
            const std::size_t slot = middle_slot(n - 1);
            for (int delta : {1, -1}) {
                const int x = u[slot] + delta;
                if (x < u[slot - 1] || x > u[slot + 1]) continue;
                const IntVector t = with_slot(u, slot, x);
                if (!seeds.count(t) || seen.count(t)) continue;
                MutationPath p = n == 3 && family == Family::Standard
                                     ? schubert_mutate(u[0], u[1], u[2], x, table)
                                     : verified_path(seeds.at(u), seeds.at(t), table);
                if (!p.pass()) {
                    rep.failures.push_back("move " + to_string(u) + " -> " + to_string(t) + ": " + p.diagnostics());
                    continue;
                }
                ++rep.mutation_edges;
                visit(t);
            }
        }
        const auto& su = sets[u];
        for (const auto& [t, st] : sets) {
            if (seen.count(t) || st.size() > su.size()) continue;
            if (!std::includes(su.begin(), su.end(), st.begin(), st.end())) continue;
            if (!is_subseed(seeds.at(u), seeds.at(t))) continue;
            ++rep.restriction_edges;
            visit(t);
        }
    }
    rep.reached = seen.size();
    for (const auto& [t, s] : seeds)
        if (!seen.count(t)) rep.missed.push_back(t);
    return rep;
}

}  // namespace qschub
