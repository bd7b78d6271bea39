#pragma once

#include "qschub/seeds.hpp"

namespace qschub {

struct MatrixPair {
    RationalMatrix L;
    IntMatrix B;
};

// B' = E B F, L' = E^T L E for the mutable column `col`.
MatrixPair bfz_matrices(const RationalMatrix& L, const IntMatrix& B, const IntVector& mutable_indices, std::size_t col,
                        int eps);

// k is a cluster index.  The label at k is replaced when `replacement` is given.
QuantumSeed bfz_mutate(const QuantumSeed& seed, std::size_t k, int eps, const PositionTable& table,
                       const std::optional<MinorLabel>& replacement = std::nullopt);

enum class SiteKind { Plus, Minus };

struct MutationSite {
    SiteKind kind = SiteKind::Plus;
    int letter = 0;
    int a = 0, b = 0, c = 0;
    int target = 0;
};

std::vector<MutationSite> find_sites(int a, int b, int c, const PositionTable& table);

struct StepRecord {
    int step = 0;
    std::string action;  // rename or bfz
    MinorLabel replaced, replacement;
    std::size_t k = 0;
    int eps = 1;
    bool check_column_applicable = false;
    bool check_column = true;
    bool check_column_installed = false;
    bool lambda_match = true;
    bool eps_independent = true;
    bool weight_homogeneous = true;
    bool compatible = true;
    std::string detail;

    bool pass() const {
        return check_column && lambda_match && eps_independent && weight_homogeneous && compatible;
    }
};

struct SchubertPlan {
    SiteKind kind = SiteKind::Plus;
    int a = 0, b = 0, c = 0, target = 0;
    int letter = 0;
    int sa = 0, sb = 0;  // occurrences of the letter in a and in the longer of b, target
    int t0 = 0;          // number of BFZ steps
};

SchubertPlan plan_schubert(int a, int b, int c, int target, const PositionTable& table);

struct SeedState {
    QuantumSeed seed;
    int step = 0;
    std::optional<ExponentVector> check_column;
};

// The check column B_{m+}(s, t) for the label E_s(s_a + t, s_b).
LabelMonomial check_column(const SchubertPlan& plan, int t, const PositionTable& table);

SeedState schubert_start(const SchubertPlan& plan, const PositionTable& table);
std::pair<SeedState, StepRecord> schubert_step(const SeedState& state, const SchubertPlan& plan,
                                               const PositionTable& table);

struct MutationPath {
    std::vector<SeedState> states;
    std::vector<StepRecord> records;
    int bfz_steps = 0;
    std::optional<std::string> terminal_difference;
    bool sign_flipped = false;

    bool pass() const;
    std::string diagnostics() const;
};

// One Schubert step b -> target = b +- 1 on the standard seed (a, b, c).
MutationPath schubert_mutate(int a, int b, int c, int target, const PositionTable& table);

// Label-by-label BFZ path from one seed to another, each step verified against recomputed L.
MutationPath verified_path(const QuantumSeed& from, const QuantumSeed& to, const PositionTable& table);

void require_pass(const MutationPath& path);

enum class Direction { Create, Annihilate };

struct CreationPath {
    std::vector<IntVector> strings;  // visited string tuples
    std::vector<std::string> moves;
    std::vector<QuantumSeed> seeds;
    std::optional<std::string> failure;
};

CreationPath create_annihilate(int a, int c, int b1, Direction dir, Family family, const PositionTable& table);

// Insertion slot of a chain of n strings.
std::size_t middle_slot(std::size_t n);

struct ReachReport {
    std::size_t nodes = 0;
    std::size_t reached = 0;
    std::size_t mutation_edges = 0;
    std::size_t split_edges = 0;
    std::size_t restriction_edges = 0;
    std::vector<IntVector> missed;
    std::vector<std::string> failures;
};

// Breadth-first search from Q(e, p) over creation/annihilation moves and restrictions.
ReachReport explore_creation_graph(const PositionTable& table, Family family, std::size_t max_strings = 4);

}  // namespace qschub
