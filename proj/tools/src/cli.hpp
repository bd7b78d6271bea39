#pragma once

#include "qschub/mutation.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qschub::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConstruction = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitTimeout = 5;

// "1,3" -> {0, 2}; "" -> {}.
IntVector parse_index_list(const std::string& text);
std::size_t group_cap();  // QSCHUB_MAX_GROUP or the default

struct InstanceSpec {
    char type = 'A';
    int rank = 1;
    IntVector levi;                 // 0-based
    std::optional<IntVector> word;  // 0-based
};

PositionTable make_table(const InstanceSpec& spec);

struct LabelEntry {
    IntVector u, v;  // 1-based reduced words
    int s = 1;       // 1-based letter
    bool is_mutable = false;
    std::string part;  // u or d
    std::string name;
    bool operator==(const LabelEntry&) const = default;
};

struct SeedDocument {
    char lie_type = 'A';
    int rank = 1;
    IntVector levi;  // 1-based, sorted
    IntVector word;  // 1-based
    IntVector strings;
    std::string variant;
    std::vector<LabelEntry> labels;
    RationalMatrix L;
    IntMatrix B;
    Json diagnostics;
    bool operator==(const SeedDocument&) const = default;
};

SeedDocument make_document(const QuantumSeed& seed, const PositionTable& table);
Json to_json(const SeedDocument& doc);
SeedDocument document_from_json(const Json& j);

struct RestoredSeed {
    PositionTable table;
    QuantumSeed seed;
};

RestoredSeed seed_from_document(const SeedDocument& doc);

Json path_to_json(const MutationPath& path, const SchubertPlan& plan, const PositionTable& table, bool trace);

struct VerifyOptions {
    int max_rank = 3;
    std::vector<std::string> types{"A", "B", "G"};
    double timeout_seconds = 300;
    bool inject_fault = false;
};

struct VerifyReport {
    Json summary;
    bool pass = true;
    bool timed_out = false;
};

VerifyReport run_verify(const VerifyOptions& options);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qschub::cli
