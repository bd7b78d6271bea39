#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace qschub;
using namespace qschub::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qschub");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("index lists") {
    CHECK(parse_index_list("") == IntVector{});
    CHECK(parse_index_list("1,3") == IntVector{0, 2});
    CHECK(parse_index_list("2") == IntVector{1});
    CHECK_THROWS_AS(parse_index_list("a"), InputError);
    CHECK_THROWS_AS(parse_index_list("0"), InputError);
}

TEST_CASE("info") {
    const Result r = invoke({"info", "--type", "A", "--rank", "2", "--levi", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("|W^p| = 3") != std::string::npos);
    CHECK(r.out.find("length(omega^p) = 2") != std::string::npos);
    CHECK(r.out.find("word 2 1") != std::string::npos);

    const Result a1 = invoke({"info", "--type", "A", "--rank", "1", "--levi", ""});
    CHECK(a1.code == kExitOk);
    CHECK(a1.out.find("|W^p| = 2") != std::string::npos);

    const Result j = invoke({"info", "--type", "B", "--rank", "2", "--format", "json"});
    CHECK(j.code == kExitOk);
    CHECK(Json::parse(j.out)["lie_type"] == "B");

    const Result bad = invoke({"info", "--type", "A", "--rank", "2", "--levi", "3"});
    CHECK(bad.code == kExitInput);
    CHECK_FALSE(bad.err.empty());
    CHECK(invoke({"info", "--type", "Q", "--rank", "2"}).code == kExitInput);
    CHECK(invoke({"info", "--type", "A", "--rank", "2", "--levi", "1,2"}).code == kExitInput);
    CHECK(invoke({"info", "--type", "A", "--rank", "2", "--word", "1,1,2"}).code == kExitInput);
}

TEST_CASE("group cap") {
    setenv("QSCHUB_MAX_GROUP", "4", 1);
    CHECK(group_cap() == 4);
    CHECK(invoke({"info", "--type", "A", "--rank", "2"}).code == kExitInput);
    unsetenv("QSCHUB_MAX_GROUP");
    CHECK(invoke({"info", "--type", "A", "--rank", "2"}).code == kExitOk);
}

TEST_CASE("seed") {
    const Result r = invoke({"seed", "--type", "A", "--rank", "2", "--a", "0", "--c", "3", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    const SeedDocument doc = document_from_json(j);
    CHECK(doc.labels.size() == 3);
    CHECK(doc.B.size() == 3);
    CHECK(doc.B[0].size() == 1);
    CHECK(to_json(doc) == j);
    const RestoredSeed restored = seed_from_document(doc);
    CHECK(check_compatible(restored.seed, restored.table).pass);

    CHECK(invoke({"seed", "--type", "A", "--rank", "2", "--a", "2", "--c", "2"}).code == kExitInput);
    CHECK(invoke({"seed", "--type", "A", "--rank", "2", "--a", "0", "--c", "9"}).code == kExitInput);
    CHECK(invoke({"seed", "--type", "B", "--rank", "2", "--strings", "0,1,3,4", "--variant", "opposite"}).code == kExitOk);

    const std::vector<std::string> args{"seed", "--type", "G", "--rank", "2", "--a", "0", "--b", "2", "--c", "6"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("mutate") {
    const Result rename = invoke({"mutate", "--type", "A", "--rank", "2", "--a", "0", "--b", "1", "--c", "3", "--to", "2"});
    CHECK(rename.code == kExitOk);
    const Json rj = Json::parse(rename.out);
    CHECK(rj["t0"] == 0);
    REQUIRE(rj["records"].size() == 1);
    CHECK(rj["records"][0]["action"] == "rename");

    const Result one = invoke({"mutate", "--type", "A", "--rank", "3", "--a", "0", "--b", "2", "--c", "4", "--to", "3",
                               "--reverse", "--format", "json"});
    CHECK(one.code == kExitOk);
    const Json j = Json::parse(one.out);
    CHECK(j["reverse"]["returns_to_start"] == true);

    CHECK(invoke({"mutate", "--type", "A", "--rank", "2", "--a", "0", "--b", "1", "--c", "3", "--to", "3"}).code ==
          kExitInput);
}

TEST_CASE("verify") {
    const Result r = invoke({"verify", "--types", "A1"});
    CHECK(r.code == kExitOk);
    const Result fault = invoke({"verify", "--types", "A2", "--inject-fault"});
    CHECK(fault.code == kExitVerification);
    CHECK(fault.out.find("oracle mismatch detected") != std::string::npos);
    VerifyOptions o;
    o.types = {"A2", "B2"};
    CHECK(run_verify(o).pass);
}
