#pragma once

#include "qschub/lusztig_oracle.hpp"

#include <map>
#include <optional>

namespace qschub {

enum class Family { Standard, Opposite };
enum class ClusterKind { PureD, PureU, Standard, Opposite, Chain, Intermediate };
enum class Part { U, D };

std::string to_string(Family f);
Family parse_family(const std::string& s);
std::string to_string(ClusterKind k);

struct Cluster {
    std::vector<MinorLabel> labels;
    std::vector<bool> mutable_mask;
    std::vector<Part> parts;
    Family family = Family::Standard;
    IntVector strings;  // empty for intermediate clusters of a mutation path

    std::size_t size() const { return labels.size(); }
    ClusterKind kind() const;
    std::optional<std::size_t> index_of(const MinorLabel& l) const;
    IntVector mutable_indices() const;
};

// Witness of l1 < l2: l1 = Delta_{s's lambda, t' lambda}, l2 = Delta_{s' mu, t't mu},
// with l(s's) = l(s') + l(s) and l(t't) = l(t') + l(t).
struct OrderWitness {
    WeylElt s, s_prime, t, t_prime;
    Weight lambda, mu;
};

std::optional<OrderWitness> certify_order(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table);
// Witness anchored at s' = omega_p and t' = omega_q (prefix lengths).
std::optional<OrderWitness> certify_order_at(const MinorLabel& l1, const MinorLabel& l2, int p, int q,
                                             const PositionTable& table);
// Cheap test equivalent to certify_order(...).has_value().
bool certified_less(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table);

// (xi1 - eta1, xi2 + eta2); requires l1 < l2 certified.
Rational formula_exponent(const MinorLabel& l1, const MinorLabel& l2, const PositionTable& table);

Cluster build_cluster(const IntVector& strings, Family family, const PositionTable& table);

struct LambdaOptions {
    // Fault injection: negate the formula value at this entry before the oracle check.
    std::optional<std::pair<std::size_t, std::size_t>> flip_sign_at;
};

class OracleMismatch : public VerificationError {
public:
    using VerificationError::VerificationError;
};

RationalMatrix lambda_matrix(const std::vector<MinorLabel>& labels, const PositionTable& table,
                             const LambdaOptions& options = {});

using LabelMonomial = std::map<MinorLabel, int>;
using ExponentVector = IntVector;

LabelMonomial h_monomial_labels(char kind, int t, int a, int j, const PositionTable& table);
ExponentVector h_monomial(char kind, int t, int a, int j, const Cluster& cluster, const PositionTable& table);
ExponentVector resolve(const LabelMonomial& m, const Cluster& cluster);

// Boundary column for E_s(s_a, s_b).
LabelMonomial boundary_column(int a, int b, int s, const PositionTable& table);
// Opposite-variant boundary column for E_s(s_b, s_c).
LabelMonomial opposite_boundary_column(int b, int c, int s, const PositionTable& table);

struct ColumnSource {
    std::string kind;  // u, d, boundary77, boundary75, opposite-boundary, envelope, repaired
    IntVector envelope;
    Family envelope_family = Family::Standard;
};

// Closed-form column for a mutable label of a triple seed (n = 2 is normalised to a triple).
std::pair<LabelMonomial, ColumnSource> b_column(const MinorLabel& label, const IntVector& strings, Family family,
                                                const PositionTable& table);

RationalVector certificate(const RationalMatrix& L, const ExponentVector& column);

// Integer x supported on `support` with L x = value * e_target, if one exists.
std::optional<ExponentVector> repair_column(const RationalMatrix& L, const IntVector& support, std::size_t target,
                                            const Rational& value);

struct QuantumSeed {
    Cluster cluster;
    RationalMatrix L;
    IntMatrix B;  // N x (number of mutable labels)
    IntVector mutable_indices;
    int sign = -1;  // L b_j = sign * 2 d_s e_j for every column
    std::vector<ColumnSource> sources;

    std::size_t size() const { return cluster.size(); }
    ExponentVector column(std::size_t j) const;
    // Column scaled so that L b = -2 d_s e.
    ExponentVector oriented_column(std::size_t j) const;
    std::optional<std::size_t> column_of(const MinorLabel& l) const;
};

QuantumSeed build_seed(const IntVector& strings, Family family, const PositionTable& table);

struct CompatReport {
    bool pass = true;
    int sign = 0;  // sign of L b_j; B^T L carries the opposite sign
    IntVector diagonal_magnitudes;  // |2 d_s| per column
    std::string failure;
};

CompatReport check_compatible(const QuantumSeed& seed, const PositionTable& table);

bool is_splitting(int a, int b, int c, Family family, const PositionTable& table);

// Equality of seeds up to reordering of labels and a global sign of B; returns a diff on failure.
std::optional<std::string> seed_difference(const QuantumSeed& x, const QuantumSeed& y);

// Whether `small` is a restriction of `big`.
bool is_subseed(const QuantumSeed& big, const QuantumSeed& small);

std::string describe_matrix(const RationalMatrix& m);
std::string describe_matrix(const IntMatrix& m);

}  // namespace qschub
