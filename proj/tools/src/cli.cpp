#include "cli.hpp"

#include "qschub/linalg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace qschub::cli {

namespace {

IntVector one_based(const IntVector& v) {
    IntVector out(v);
    for (auto& x : out) ++x;
    return out;
}

IntVector zero_based(const IntVector& v) {
    IntVector out(v);
    for (auto& x : out) --x;
    return out;
}

std::string join(const IntVector& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

Json rational_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

Rational rational_from(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InputError("rational must be a [numerator, denominator] pair");
    const auto num = j[0].get<std::int64_t>(), den = j[1].get<std::int64_t>();
    if (den <= 0) throw InputError("rational denominator must be positive");
    const Rational r(num, den);
    if (r.numerator() != num || r.denominator() != den) throw InputError("rational is not reduced");
    return r;
}

Json matrix_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rational_json(x));
        out.push_back(r);
    }
    return out;
}

Json seed_diagnostics(const QuantumSeed& seed, const PositionTable& table) {
    const CompatReport rep = check_compatible(seed, table);
    Json d;
    d["compatible"] = rep.pass;
    d["sign"] = seed.sign;
    d["diagonal"] = rep.diagonal_magnitudes;
    if (!rep.pass) d["failure"] = rep.failure;
    Json cols = Json::array();
    for (std::size_t j = 0; j < seed.mutable_indices.size(); ++j) {
        const std::size_t k = seed.mutable_indices[j];
        const RationalVector v = certificate(seed.L, seed.column(j));
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != k && v[i] != 0) ok = false;
        Json c;
        c["label"] = seed.cluster.labels[k].str();
        c["source"] = j < seed.sources.size() ? seed.sources[j].kind : "";
        c["value"] = rational_json(v[k]);
        c["certificate"] = ok && v[k] == Rational(2 * seed.sign * table.datum().d[seed.cluster.labels[k].s]);
        cols.push_back(c);
    }
    d["columns"] = cols;
    return d;
}

char parse_type(const std::string& t) {
    if (t.size() != 1 || std::string("ABCDEFG").find(t[0]) == std::string::npos)
        throw InputError("unknown Lie type '" + t + "'");
    return t[0];
}

}  // namespace

IntVector parse_index_list(const std::string& text) {
    IntVector out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad index '" + item + "'");
        }
        if (used != item.size() || v < 1) throw InputError("bad index '" + item + "'");
        out.push_back(v - 1);
    }
    return out;
}

std::size_t group_cap() {
    if (const char* env = std::getenv("QSCHUB_MAX_GROUP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("QSCHUB_MAX_GROUP must be a positive integer, got '") + env + "'");
    }
    return kDefaultGroupCap;
}

PositionTable make_table(const InstanceSpec& spec) {
    const RootDatum datum = build_root_datum(spec.type, spec.rank);
    for (int i : spec.levi)
        if (i >= spec.rank) throw InputError("Levi index " + std::to_string(i + 1) + " exceeds the rank");
    const ParabolicDatum p = make_parabolic(spec.levi, datum);
    if (spec.word) {
        for (int i : *spec.word)
            if (i >= spec.rank) throw InputError("word letter " + std::to_string(i + 1) + " exceeds the rank");
        try {
            return fix_word(datum, p, spec.word);
        } catch (const InputError&) {
            throw InputError("word " + join(one_based(*spec.word)) + " is not a reduced word of omega^p");
        }
    }
    return fix_word(datum, p);
}

SeedDocument make_document(const QuantumSeed& seed, const PositionTable& table) {
    SeedDocument doc;
    doc.lie_type = table.datum().lie_type;
    doc.rank = table.rank();
    doc.levi = one_based(table.parabolic().levi);
    doc.word = one_based(table.word());
    doc.strings = seed.cluster.strings;
    doc.variant = to_string(seed.cluster.family);
    const IntVector& w = table.word();
    for (std::size_t k = 0; k < seed.size(); ++k) {
        const MinorLabel& l = seed.cluster.labels[k];
        LabelEntry e;
        e.u = one_based(IntVector(w.begin(), w.begin() + table.pos(l.s, l.i)));
        e.v = one_based(IntVector(w.begin(), w.begin() + table.pos(l.s, l.j)));
        e.s = l.s + 1;
        e.is_mutable = seed.cluster.mutable_mask[k];
        e.part = k < seed.cluster.parts.size() ? (seed.cluster.parts[k] == Part::U ? "u" : "d") : "";
        e.name = l.str();
        doc.labels.push_back(e);
    }
    doc.L = seed.L;
    doc.B = seed.B;
    doc.diagnostics = seed_diagnostics(seed, table);
    return doc;
}

Json to_json(const SeedDocument& doc) {
    Json j;
    j["lie_type"] = std::string(1, doc.lie_type);
    j["rank"] = doc.rank;
    j["levi"] = doc.levi;
    j["word"] = doc.word;
    j["strings"] = doc.strings;
    j["variant"] = doc.variant;
    Json labels = Json::array();
    for (const auto& l : doc.labels) {
        Json e;
        e["name"] = l.name;
        e["u"] = l.u;
        e["v"] = l.v;
        e["s"] = l.s;
        e["mutable"] = l.is_mutable;
        e["part"] = l.part;
        labels.push_back(e);
    }
    j["labels"] = labels;
    j["L"] = matrix_json(doc.L);
    j["B"] = doc.B;
    j["diagnostics"] = doc.diagnostics;
    return j;
}

SeedDocument document_from_json(const Json& j) {
    try {
        SeedDocument doc;
        const std::string t = j.at("lie_type").get<std::string>();
        doc.lie_type = parse_type(t);
        doc.rank = j.at("rank").get<int>();
        doc.levi = j.at("levi").get<IntVector>();
        doc.word = j.at("word").get<IntVector>();
        doc.strings = j.at("strings").get<IntVector>();
        doc.variant = j.at("variant").get<std::string>();
        for (const auto& e : j.at("labels")) {
            LabelEntry l;
            l.name = e.at("name").get<std::string>();
            l.u = e.at("u").get<IntVector>();
            l.v = e.at("v").get<IntVector>();
            l.s = e.at("s").get<int>();
            l.is_mutable = e.at("mutable").get<bool>();
            l.part = e.at("part").get<std::string>();
            doc.labels.push_back(l);
        }
        for (const auto& row : j.at("L")) {
            RationalVector r;
            for (const auto& x : row) r.push_back(rational_from(x));
            doc.L.push_back(r);
        }
        doc.B = j.at("B").get<IntMatrix>();
        doc.diagnostics = j.at("diagnostics");
        return doc;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed seed document: ") + e.what());
    }
}

RestoredSeed seed_from_document(const SeedDocument& doc) {
    InstanceSpec spec{doc.lie_type, doc.rank, zero_based(doc.levi), zero_based(doc.word)};
    PositionTable table = make_table(spec);
    QuantumSeed seed;
    seed.cluster.family = parse_family(doc.variant);
    seed.cluster.strings = doc.strings;
    const std::size_t n = doc.labels.size();
    for (const auto& e : doc.labels) {
        const int s = e.s - 1;
        if (s < 0 || s >= table.rank()) throw InputError("label letter out of range");
        auto occurrence = [&](const IntVector& w) {
            if (w.size() > static_cast<std::size_t>(table.M()) ||
                !std::equal(w.begin(), w.end(), doc.word.begin()))
                throw InputError("label word is not a prefix of the fixed word");
            const int t = table.occ(static_cast<int>(w.size()), s);
            if (table.pos(s, t) != static_cast<int>(w.size()))
                throw InputError("label word does not end at an occurrence of its letter");
            return t;
        };
        const MinorLabel l = make_label(occurrence(e.u), occurrence(e.v), s, table);
        if (l.str() != e.name) throw InputError("label name " + e.name + " does not match its words");
        seed.cluster.labels.push_back(l);
        seed.cluster.mutable_mask.push_back(e.is_mutable);
        if (e.part == "u" || e.part == "d") seed.cluster.parts.push_back(e.part == "u" ? Part::U : Part::D);
    }
    if (!seed.cluster.parts.empty() && seed.cluster.parts.size() != n) throw InputError("inconsistent label parts");
    seed.mutable_indices = seed.cluster.mutable_indices();
    if (doc.L.size() != n || std::any_of(doc.L.begin(), doc.L.end(), [&](const auto& r) { return r.size() != n; }))
        throw InputError("L has the wrong shape");
    if (doc.B.size() != n || std::any_of(doc.B.begin(), doc.B.end(), [&](const auto& r) {
            return r.size() != seed.mutable_indices.size();
        }))
        throw InputError("B has the wrong shape");
    seed.L = doc.L;
    seed.B = doc.B;
    seed.sign = doc.diagnostics.value("sign", -1);
    return {std::move(table), std::move(seed)};
}

Json path_to_json(const MutationPath& path, const SchubertPlan& plan, const PositionTable& table, bool trace) {
    Json j;
    Json site;
    site["kind"] = plan.kind == SiteKind::Plus ? "m+" : "m-";
    site["letter"] = plan.letter + 1;
    site["a"] = plan.a;
    site["b"] = plan.b;
    site["c"] = plan.c;
    site["target"] = plan.target;
    j["site"] = site;
    j["t0"] = plan.t0;
    j["bfz_steps"] = path.bfz_steps;
    Json records = Json::array();
    for (const auto& r : path.records) {
        Json e;
        e["step"] = r.step;
        e["action"] = r.action;
        e["replaced"] = r.replaced.str();
        e["replacement"] = r.replacement.str();
        if (r.action == "bfz") {
            e["k"] = r.k;
            e["eps"] = r.eps;
            if (r.check_column_applicable) {
                e["check_column"] = r.check_column;
                e["check_column_installed"] = r.check_column_installed;
            }
            e["lambda_match"] = r.lambda_match;
            e["eps_independent"] = r.eps_independent;
            e["weight_homogeneous"] = r.weight_homogeneous;
            e["compatible"] = r.compatible;
        }
        e["verdict"] = r.pass() ? "pass" : "fail";
        if (!r.detail.empty()) e["detail"] = r.detail;
        records.push_back(e);
    }
    j["records"] = records;
    Json terminal;
    terminal["matches"] = !path.terminal_difference.has_value();
    if (path.terminal_difference) terminal["difference"] = *path.terminal_difference;
    terminal["b_sign_flipped"] = path.sign_flipped;
    j["terminal"] = terminal;
    if (trace) {
        Json states = Json::array();
        for (const auto& s : path.states) states.push_back(to_json(make_document(s.seed, table)));
        j["states"] = states;
    }
    j["pass"] = path.pass();
    return j;
}

// ---------------------------------------------------------------- verify

namespace {

struct Check {
    std::size_t count = 0;
    std::size_t failures = 0;
    std::string first;

    void fail(const std::string& what) {
        if (failures++ == 0) first = what;
    }
    Json json() const {
        Json j;
        j["count"] = count;
        j["failures"] = failures;
        if (failures) j["first_failure"] = first;
        return j;
    }
};

std::vector<std::pair<char, int>> expand_types(const VerifyOptions& o) {
    std::vector<std::pair<char, int>> out;
    for (const auto& t : o.types) {
        if (t.empty()) continue;
        const char type = parse_type(t.substr(0, 1));
        if (t.size() > 1) {
            int r = 0;
            try {
                r = std::stoi(t.substr(1));
            } catch (const std::exception&) {
                throw InputError("bad type '" + t + "'");
            }
            build_root_datum(type, r);
            out.emplace_back(type, r);
            continue;
        }
        for (int r = 1; r <= o.max_rank; ++r) {
            try {
                build_root_datum(type, r);
            } catch (const InputError&) {
                continue;
            }
            out.emplace_back(type, r);
        }
    }
    return out;
}

std::vector<IntVector> tuples(int M, std::size_t n) {
    std::vector<IntVector> out;
    IntVector cur;
    std::function<void(int)> rec = [&](int lo) {
        if (cur.size() == n) {
            if (cur.front() < cur.back()) out.push_back(cur);
            return;
        }
        for (int x = lo; x <= M; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

void weyl_checks(const RootDatum& datum, std::size_t cap, std::map<std::string, Check>& checks) {
    Check& c = checks["weyl"];
    for (int i = 0; i < datum.rank; ++i) {
        Weight v = add(reflect(i, datum.fundamental_weight(i), datum), datum.fundamental_weight(i));
        for (int j = 0; j < datum.rank; ++j)
            if (j != i) v = add(v, datum.fundamental_weight(j), datum.cartan[j][i]);
        ++c.count;
        if (v != Weight(datum.rank, 0)) c.fail("(sigma_i + 1)(Lambda_i) identity fails at " + std::to_string(i + 1));
    }
    IntVector all(datum.rank);
    for (int i = 0; i < datum.rank; ++i) all[i] = i;
    const auto W = enumerate_group(datum, all, cap);
    for (const auto& w : W) {
        ++c.count;
        if (static_cast<std::size_t>(w.length()) != inversion_set(w, datum).size()) c.fail("length != |Phi_w|");
    }
    const WeylElt w0 = longest_element(datum);
    for (unsigned mask = 0; mask + 1 < (1u << datum.rank); ++mask) {
        IntVector levi;
        for (int i = 0; i < datum.rank; ++i)
            if (mask & (1u << i)) levi.push_back(i);
        const ParabolicDatum p = make_parabolic(levi, datum);
        const WeylElt op = omega_p(datum, p);
        const WeylElt wl = longest_element(datum, levi);
        ++c.count;
        if (compose(wl, op, datum) != w0 || op.length() + wl.length() != w0.length()) c.fail("w_L omega^p != w0");
        auto phi = inversion_set(op, datum), nil = nilradical_roots(p, datum);
        std::sort(phi.begin(), phi.end());
        std::sort(nil.begin(), nil.end());
        ++c.count;
        if (phi != nil) c.fail("Phi(omega^p) != positive nilradical roots");
        const ParabolicQuotient q = enumerate_Wp(datum, p, cap);
        ++c.count;
        if (!(q.minimal.back() == op)) c.fail("omega^p is not the last element of W^p");
        std::set<IntMatrix> products;
        for (const auto& x : q.levi)
            for (const auto& y : q.minimal) products.insert(compose(x, y, datum).action);
        ++c.count;
        if (products.size() != W.size() || q.levi.size() * q.minimal.size() != W.size())
            c.fail("w = w_p w^p is not a unique factorization");
    }
}

void instance_checks(const PositionTable& table, bool inject_fault, std::map<std::string, Check>& checks) {
    const GammaSequence gamma = gamma_sequence(table);
    const int M = table.M();
    const Family families[] = {Family::Standard, Family::Opposite};
    for (std::size_t n = 2; n <= 4; ++n) {
        if (n == 4 && M > 6) break;
        for (const auto& strings : tuples(M, n))
            for (Family f : families) {
                const std::string where = to_string(strings) + " " + to_string(f);
                const Cluster cluster = build_cluster(strings, f, table);
                if (n <= 3) {
                    Check& c = checks["exponents"];
                    for (const auto& l1 : cluster.labels)
                        for (const auto& l2 : cluster.labels) {
                            if (!certified_less(l1, l2, table)) {
                                if (!(l1 == l2) && !certified_less(l2, l1, table))
                                    c.fail("uncertified pair " + l1.str() + ", " + l2.str() + " in " + where);
                                continue;
                            }
                            ++c.count;
                            if (formula_exponent(l1, l2, table) != oracle_exponent(l1, l2, table, gamma))
                                c.fail("formula != oracle for " + l1.str() + ", " + l2.str() + " in " + where);
                        }
                }
                if (inject_fault) {
                    Check& c = checks["fault_injection"];
                    const RationalMatrix L = lambda_matrix(cluster.labels, table);
                    for (std::size_t i = 0; i < L.size(); ++i)
                        for (std::size_t k = 0; k < L.size(); ++k)
                            if (L[i][k] != 0) {
                                ++c.count;
                                try {
                                    lambda_matrix(cluster.labels, table, LambdaOptions{std::pair(i, k)});
                                    c.fail("sign flip at " + where + " went undetected");
                                } catch (const OracleMismatch&) {
                                    c.fail("oracle mismatch detected at " + where);
                                }
                                i = k = L.size();
                            }
                }
                QuantumSeed seed;
                try {
                    seed = build_seed(strings, f, table);
                } catch (const std::exception& e) {
                    ++checks["compatibility"].count;
                    checks["compatibility"].fail("construction of " + where + ": " + e.what());
                    continue;
                }
                Check& compat = checks["compatibility"];
                ++compat.count;
                const CompatReport rep = check_compatible(seed, table);
                if (!rep.pass) compat.fail(where + ": " + rep.failure);
                Check& cert = checks["certificates"];
                Check& bfz = checks["bfz"];
                for (std::size_t j = 0; j < seed.mutable_indices.size(); ++j) {
                    const std::size_t k = seed.mutable_indices[j];
                    const RationalVector v = certificate(seed.L, seed.column(j));
                    ++cert.count;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        const Rational want =
                            i == k ? Rational(2 * seed.sign * table.datum().d[seed.cluster.labels[k].s]) : Rational(0);
                        if (v[i] != want) {
                            cert.fail(where + " column " + seed.cluster.labels[k].str());
                            break;
                        }
                    }
                    ++bfz.count;
                    const MatrixPair p = bfz_matrices(seed.L, seed.B, seed.mutable_indices, j, 1);
                    const MatrixPair m = bfz_matrices(seed.L, seed.B, seed.mutable_indices, j, -1);
                    const MatrixPair back = bfz_matrices(p.L, p.B, seed.mutable_indices, j, 1);
                    if (p.L != m.L || p.B != m.B) bfz.fail(where + ": eps dependence at " + std::to_string(j));
                    if (back.L != seed.L || back.B != seed.B) bfz.fail(where + ": not involutive at " + std::to_string(j));
                }
            }
    }
    for (const auto& t : tuples(M, 3)) {
        const int a = t[0], b = t[1], c = t[2];
        if (b < c) {
            Check& ck = checks["schubert_plus"];
            ++ck.count;
            const SchubertPlan plan = plan_schubert(a, b, c, b + 1, table);
            const MutationPath p = schubert_mutate(a, b, c, b + 1, table);
            if (p.bfz_steps != plan.t0 || !p.pass()) ck.fail(to_string(t) + ": " + p.diagnostics());
        }
        if (b > a) {
            Check& ck = checks["schubert_minus"];
            ++ck.count;
            const MutationPath p = schubert_mutate(a, b, c, b - 1, table);
            if (!p.pass()) ck.fail(to_string(t) + ": " + p.diagnostics());
        }
        if (a < b && b < c)
            for (Family f : families) {
                if (!is_splitting(a, b, c, f, table)) continue;
                Check& ck = checks["splitting"];
                ++ck.count;
                if (auto d = seed_difference(build_seed({a, c}, f, table), build_seed(t, f, table)))
                    ck.fail(to_string(t) + " " + to_string(f) + ": " + *d);
            }
    }
    if (table.rank() == 2)
        for (Family f : families) {
            const ReachReport r = explore_creation_graph(table, f, 4);
            Check& ck = checks["reachability"];
            ck.count += r.nodes;
            for (const auto& m : r.missed) ck.fail("unreached " + to_string(m) + " " + to_string(f));
            for (const auto& e : r.failures) ck.fail(e);
        }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const std::size_t cap = group_cap();
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
    VerifyReport report;
    Json instances = Json::array();
    for (auto [type, rank] : expand_types(options)) {
        const RootDatum datum = build_root_datum(type, rank);
        std::map<std::string, Check> weyl;
        weyl_checks(datum, cap, weyl);
        for (unsigned mask = 0; mask + 1 < (1u << rank); ++mask) {
            if (elapsed() > options.timeout_seconds) {
                report.timed_out = true;
                break;
            }
            IntVector levi;
            for (int i = 0; i < rank; ++i)
                if (mask & (1u << i)) levi.push_back(i);
            std::map<std::string, Check> checks;
            if (mask == 0) checks = weyl;
            try {
                instance_checks(make_table({type, rank, levi, std::nullopt}), options.inject_fault, checks);
            } catch (const std::exception& e) {
                checks["construction"].fail(e.what());
            }
            Json inst;
            inst["type"] = datum.name();
            inst["levi"] = one_based(levi);
            Json cj;
            bool pass = true;
            for (const auto& [name, c] : checks) {
                cj[name] = c.json();
                pass = pass && c.failures == 0;
            }
            inst["checks"] = cj;
            inst["pass"] = pass;
            report.pass = report.pass && pass;
            instances.push_back(inst);
        }
        if (report.timed_out) break;
    }
    report.summary["instances"] = instances;
    report.summary["pass"] = report.pass && !report.timed_out;
    report.summary["timed_out"] = report.timed_out;
    report.summary["elapsed_seconds"] = static_cast<double>(static_cast<long long>(elapsed() * 1000)) / 1000;
    return report;
}

// ---------------------------------------------------------------- commands

namespace {

struct CommonArgs {
    std::string type = "A";
    int rank = 2;
    std::string levi;
    std::string word;
    std::string format = "json";
};

void add_common(CLI::App* app, CommonArgs& a) {
    app->add_option("--type", a.type, "Lie type A-G")->required();
    app->add_option("--rank", a.rank, "rank")->required();
    app->add_option("--levi", a.levi, "comma-separated 1-based Levi indices; empty for the Borel");
    app->add_option("--word", a.word, "comma-separated 1-based reduced word of omega^p");
    app->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

InstanceSpec spec_of(const CommonArgs& a) {
    InstanceSpec s;
    s.type = parse_type(a.type);
    s.rank = a.rank;
    s.levi = parse_index_list(a.levi);
    if (!a.word.empty()) s.word = parse_index_list(a.word);
    return s;
}

std::string matrix_text(const RationalMatrix& m) { return describe_matrix(m); }

int cmd_info(const CommonArgs& a, std::ostream& out) {
    const InstanceSpec spec = spec_of(a);
    const PositionTable table = make_table(spec);
    const RootDatum& d = table.datum();
    const ParabolicQuotient q = enumerate_Wp(d, table.parabolic(), group_cap());
    if (a.format == "json") {
        Json j;
        j["lie_type"] = std::string(1, d.lie_type);
        j["rank"] = d.rank;
        j["cartan"] = d.cartan;
        j["symmetrizers"] = d.d;
        j["levi"] = one_based(table.parabolic().levi);
        j["weyl_order"] = q.group_order;
        j["levi_weyl_order"] = q.levi.size();
        j["quotient_order"] = q.minimal.size();
        j["length_omega_p"] = table.M();
        j["word"] = one_based(table.word());
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "type " << d.name() << '\n';
    out << "cartan\n" << describe_matrix(d.cartan);
    out << "symmetrizers " << join(d.d, " ") << '\n';
    out << "levi {" << join(one_based(table.parabolic().levi)) << "}\n";
    out << "|W| = " << q.group_order << '\n';
    out << "|W_p| = " << q.levi.size() << '\n';
    out << "|W^p| = " << q.minimal.size() << '\n';
    out << "length(omega^p) = " << table.M() << '\n';
    out << "word " << join(one_based(table.word()), " ") << '\n';
    return kExitOk;
}

void seed_text(const QuantumSeed& seed, const PositionTable& table, std::ostream& out) {
    out << "cluster " << to_string(seed.cluster.strings) << " " << to_string(seed.cluster.family) << '\n';
    for (std::size_t k = 0; k < seed.size(); ++k)
        out << "  " << k << ' ' << seed.cluster.labels[k].str() << (seed.cluster.mutable_mask[k] ? " mutable" : " frozen")
            << '\n';
    out << "L\n" << matrix_text(seed.L) << "B\n" << describe_matrix(seed.B);
    const CompatReport rep = check_compatible(seed, table);
    out << "compatible " << (rep.pass ? "yes" : "no: " + rep.failure) << '\n';
}

int cmd_seed(const CommonArgs& a, const std::optional<int>& sa, const std::optional<int>& sb,
             const std::optional<int>& sc, const std::string& strings, const std::string& variant, std::ostream& out) {
    const PositionTable table = make_table(spec_of(a));
    IntVector s;
    if (!strings.empty()) {
        std::stringstream ss(strings);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                s.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InputError("bad string '" + item + "'");
            }
        }
    } else {
        if (!sa || !sc) throw InputError("either --strings or --a and --c are required");
        s = sb ? IntVector{*sa, *sb, *sc} : IntVector{*sa, *sc};
    }
    for (int x : s)
        if (x < 0 || x > table.M()) throw InputError("string " + std::to_string(x) + " outside 0.." + std::to_string(table.M()));
    if (s.size() < 2 || s.front() >= s.back() || !std::is_sorted(s.begin(), s.end()))
        throw InputError("strings must be nondecreasing with first < last");
    const QuantumSeed seed = build_seed(s, parse_family(variant), table);
    const CompatReport rep = check_compatible(seed, table);
    if (a.format == "json")
        out << to_json(make_document(seed, table)).dump(2) << '\n';
    else
        seed_text(seed, table, out);
    if (!rep.pass) throw VerificationError("seed is not a compatible pair: " + rep.failure);
    return kExitOk;
}

int cmd_mutate(const CommonArgs& a, int sa, int sb, int sc, int to, bool trace, bool reverse, std::ostream& out,
               std::ostream& err) {
    const PositionTable table = make_table(spec_of(a));
    if (!(0 <= sa && sa <= sb && sb <= sc && sc <= table.M() && sa < sc))
        throw InputError("strings must satisfy 0 <= a <= b <= c <= M, a < c");
    const SchubertPlan plan = plan_schubert(sa, sb, sc, to, table);
    const MutationPath path = schubert_mutate(sa, sb, sc, to, table);
    Json j = path_to_json(path, plan, table, trace);
    bool pass = path.pass();
    std::string diag = path.diagnostics();
    if (reverse) {
        const SchubertPlan back_plan = plan_schubert(sa, to, sc, sb, table);
        const MutationPath back = schubert_mutate(sa, to, sc, sb, table);
        const QuantumSeed start = build_seed({sa, sb, sc}, Family::Standard, table);
        const auto diff = seed_difference(back.states.back().seed, start);
        Json r = path_to_json(back, back_plan, table, trace);
        r["returns_to_start"] = !diff.has_value();
        if (diff) r["start_difference"] = *diff;
        j["reverse"] = r;
        pass = pass && back.pass() && !diff;
        diag += back.diagnostics() + (diff ? "reverse path does not return to the start seed: " + *diff + "\n" : "");
    }
    if (a.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : path.records)
            out << "step " << r.step << ' ' << r.action << ' ' << r.replaced.str() << " -> " << r.replacement.str()
                << (r.action == "bfz" ? " k=" + std::to_string(r.k) + " eps=" + std::to_string(r.eps) : "") << ' '
                << (r.pass() ? "pass" : "fail") << '\n';
        out << "terminal " << (path.terminal_difference ? "differs" : "matches") << '\n';
    }
    if (!pass) {
        err << diag;
        return kExitVerification;
    }
    return kExitOk;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum seeds of quantized Schubert cells"};
    app.require_subcommand(1);

    CommonArgs info_args;
    info_args.format = "text";
    auto* info = app.add_subcommand("info", "root datum and parabolic summary");
    add_common(info, info_args);

    CommonArgs seed_args;
    std::optional<int> sa, sb, sc;
    std::string strings, variant = "standard";
    auto* seed = app.add_subcommand("seed", "build a quantum seed");
    add_common(seed, seed_args);
    seed->add_option("--a", sa, "prefix length of a");
    seed->add_option("--b", sb, "prefix length of b");
    seed->add_option("--c", sc, "prefix length of c");
    seed->add_option("--strings", strings, "comma-separated prefix lengths (chains)");
    seed->add_option("--variant", variant, "standard or opposite");

    CommonArgs mut_args;
    int ma = 0, mb = 0, mc = 0, mto = 0;
    bool trace = false, reverse = false;
    auto* mutate = app.add_subcommand("mutate", "run a Schubert mutation b -> b +- 1");
    add_common(mutate, mut_args);
    mutate->add_option("--a", ma)->required();
    mutate->add_option("--b", mb)->required();
    mutate->add_option("--c", mc)->required();
    mutate->add_option("--to", mto, "target prefix length b+1 or b-1")->required();
    mutate->add_flag("--trace", trace, "include every intermediate seed");
    mutate->add_flag("--reverse", reverse, "replay the reverse path and compare with the start seed");

    VerifyOptions vopt;
    std::string types = "A,B,G";
    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--max-rank", vopt.max_rank, "largest rank for bare type letters");
    verify->add_option("--types", types, "comma-separated types, e.g. A,B or A3,G2");
    verify->add_option("--timeout", vopt.timeout_seconds, "seconds");
    verify->add_flag("--inject-fault", vopt.inject_fault, "negate one L entry per cluster before the oracle check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*info) return cmd_info(info_args, out);
        if (*seed) return cmd_seed(seed_args, sa, sb, sc, strings, variant, out);
        if (*mutate) return cmd_mutate(mut_args, ma, mb, mc, mto, trace, reverse, out, err);
        if (*verify) {
            vopt.types = split_list(types);
            const VerifyReport r = run_verify(vopt);
            out << r.summary.dump(2) << '\n';
            if (r.timed_out) {
                err << "error: verification timed out after " << vopt.timeout_seconds << " s\n";
                return kExitTimeout;
            }
            return r.pass ? kExitOk : kExitVerification;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GroupTooLarge& e) {
        err << "input error: " << e.what() << " (set QSCHUB_MAX_GROUP to raise it)\n";
        return kExitInput;
    } catch (const ConstructionError& e) {
        err << "construction error: " << e.what() << '\n';
        return kExitConstruction;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitInput;
}

}  // namespace qschub::cli
