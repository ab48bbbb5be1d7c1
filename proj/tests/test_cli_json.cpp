#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "zslab/json_io.hpp"

using namespace zslab;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + ZSLAB_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliRun r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json load_schema() {
    std::ifstream in(std::string(ZSLAB_SOURCE_DIR) + "/schemas/zslab-result.schema.json");
    REQUIRE(in.good());
    return Json::parse(in);
}

} // namespace

TEST_CASE("serialization of search results") {
    AbelianGroup A = parse_group("3^2");
    ExactResult r;
    r.value = 9;
    r.status = SearchStatus::EXACT;
    r.witness = make_sequence(A, {0, 0, 1, 1});
    r.nodes_explored = 42;
    Json j = exact_result_json(A, "s", r);
    CHECK(j["group"] == "3^2");
    CHECK(j["quantity"] == "s");
    CHECK(j["value"] == 9);
    CHECK(j["status"] == "EXACT");
    CHECK(j["nodes"] == 42);
    REQUIRE(j["witness"].is_array());
    CHECK(j["witness"].size() == 4);
    CHECK(j["witness"][0] == Json::array({0, 0}));
    CHECK(j["witness"][2] == Json::array({0, 1}));
    CHECK(schema_validate(j, load_schema()));
}

TEST_CASE("sequence round-trip through JSON") {
    AbelianGroup A = parse_group("2x4");
    ZSequence S = make_sequence(A, {0, 3, 3, 7});
    Json j;
    j["group"] = A.to_spec();
    j["elems"] = sequence_json(S);
    ZSequence back = sequence_from_json(j);
    CHECK(back == S);
    CHECK_THROWS_AS(sequence_from_json(Json::object()), ParseError);
    // coordinates are reduced mod the factors, so [9, 9] parses fine
    Json reduced = j;
    reduced["elems"][0] = Json::array({2, 7});
    CHECK(sequence_from_json(reduced) == make_sequence(A, {3, 3, 3, 7}));
    Json bad = j;
    bad["elems"][0] = Json::array({9});  // wrong rank
    CHECK_THROWS_AS(sequence_from_json(bad), ParseError);
}

TEST_CASE("set parsing accepts bare arrays and wrapped objects") {
    AbelianGroup A = parse_group("3^2");
    Json bare = Json::array({Json::array({0, 0}), Json::array({1, 2})});
    auto F = set_from_json(A, bare);
    REQUIRE(F.size() == 2);
    CHECK(F[0] == 0);
    CHECK(F[1] == 5);
    Json wrapped;
    wrapped["elems"] = bare;
    CHECK(set_from_json(A, wrapped) == F);
}

TEST_CASE("schema validation catches shape errors") {
    Json schema = load_schema();
    AbelianGroup A = parse_group("3");
    ExactResult r;
    r.value = 5;
    r.status = SearchStatus::EXACT;
    r.witness = make_sequence(A, {0, 0, 1, 1});
    r.nodes_explored = 1;
    Json good = exact_result_json(A, "s", r);
    std::string err;
    CHECK(schema_validate(good, schema, &err));

    Json missing = good;
    missing.erase("nodes");
    CHECK_FALSE(schema_validate(missing, schema, &err));
    CHECK_FALSE(err.empty());

    Json extra = good;
    extra["unexpected"] = 1;
    CHECK_FALSE(schema_validate(extra, schema));

    Json wrong_status = good;
    wrong_status["status"] = "MAYBE";
    CHECK_FALSE(schema_validate(wrong_status, schema));

    Json wrong_type = good;
    wrong_type["value"] = "nine";
    CHECK_FALSE(schema_validate(wrong_type, schema));
}

TEST_CASE("cli: exact s with JSON output") {
    CliRun r = run_cli("s --group 3^2 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"] == 9);
    CHECK(j["status"] == "EXACT");
    CHECK(j["group"] == "3^2");
    CHECK(j["witness"].size() == 8);
    CHECK(schema_validate(j, load_schema()));
}

TEST_CASE("cli: vacuous g") {
    CliRun r = run_cli("g --group 2^2 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"] == 5);
    CHECK(j["status"] == "VACUOUS");
    CHECK(j["quantity"] == "g");
    CHECK(schema_validate(j, load_schema()));
}

TEST_CASE("cli: dimension query") {
    CliRun r = run_cli("dim -n 2 -D 3 -k 2 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["dim"] == "6");
}

TEST_CASE("cli: bound on a cyclic prime power") {
    CliRun r = run_cli("bound --group 9 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["exact"].is_object());
    CHECK(j["exact"]["value_int"] == "17");
    bool saw_rank2 = false;
    for (const auto& step : j["exact"]["provenance"])
        saw_rank2 = saw_rank2 || step["thm"] == "rank_two_exact";
    CHECK(saw_rank2);
    CHECK(j["assume_propd"] == false);
}

TEST_CASE("cli: conditional bounds are separated") {
    CliRun r = run_cli("bound --group 5^9 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["exact"].is_null());
    REQUIRE(j["conditional_upper"].is_object());
    REQUIRE_FALSE(j["conditional_upper"]["conditional_on"].empty());
    std::string cond = j["conditional_upper"]["conditional_on"][0];
    CHECK(cond.rfind("PROPERTY_D(5,", 0) == 0);
    CHECK(j["upper"]["conditional_on"].empty());

    CliRun ra = run_cli("bound --group 5^9 --assume-propd --json");
    REQUIRE(ra.exit_code == 0);
    Json ja = Json::parse(ra.out);
    CHECK(ja["assume_propd"] == true);
    CHECK(ja["conditional_upper"].is_null());
    CHECK(mpz_class(ja["upper"]["value_int"].get<std::string>())
          < mpz_class(j["upper"]["value_int"].get<std::string>()));
}

TEST_CASE("cli: property check") {
    CliRun r = run_cli("propd --group 3^2 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "HOLDS");
    CHECK(j["s"] == 9);
    CHECK(j["extremal_orbits"] == 1);
    CHECK(j["raw_count"] == "54");
}

TEST_CASE("cli: petrov search and verify") {
    CliRun r = run_cli("petrov -p 3 -n 1 --coeffs 1,1,1 --search --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"] == 2);
    CHECK(j["status"] == "EXACT");
    CHECK(j["bound_dim"]["value_int"] == "3");

    std::string path = "/tmp/zslab_test_set.json";
    {
        std::ofstream f(path);
        f << R"({"elems": [[0], [1], [2]]})";
    }
    CliRun v = run_cli("petrov -p 3 -n 1 --coeffs 1,1,1 --verify " + path + " --json");
    REQUIRE(v.exit_code == 0);
    Json jv = Json::parse(v.out);
    CHECK(jv["property_holds"] == false);
    REQUIRE(jv["violating_tuple"].is_array());
    CHECK(jv["violating_tuple"].size() == 3);

    {
        std::ofstream f(path);
        f << R"([[0], [1]])";
    }
    CliRun v2 = run_cli("petrov -p 3 -n 1 --coeffs 1,1,1 --verify " + path);
    CHECK(v2.exit_code == 0);
    CHECK(v2.out.find("holds") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: exit codes") {
    // budget exhaustion on a hard instance
    CliRun starved = run_cli("s --group 3^3 --budget-nodes 5 --json");
    CHECK(starved.exit_code == 2);
    Json j = Json::parse(starved.out);
    CHECK(j["status"] == "LOWER_BOUND_ONLY");
    CHECK(schema_validate(j, load_schema()));

    // malformed input
    CHECK(run_cli("s --group bogus").exit_code == 1);
    CHECK(run_cli("s --group 3x").exit_code == 1);
    CHECK(run_cli("dim -n 2 -D 0 -k 1").exit_code == 1);
    CHECK(run_cli("petrov -p 3 -n 1 --coeffs 1,1 --search").exit_code == 1);
    CHECK(run_cli("petrov -p 3 -n 1 --coeffs 1,1,1").exit_code == 1);
    CHECK(run_cli("propd --group 2x4").exit_code == 1);
    CHECK(run_cli("table no-such-table").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("cli: propd exit code distinguishes UNKNOWN") {
    CliRun r = run_cli("propd --group 3^3 --budget-nodes 5 --json");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "UNKNOWN");
    CHECK(j["s"].is_null());
}

TEST_CASE("cli: table output is byte-deterministic") {
    CliRun a = run_cli("table egz-small --budget-nodes 2000");
    CliRun b = run_cli("table egz-small --budget-nodes 2000");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
    REQUIRE_FALSE(a.out.empty());
    CHECK(a.out.rfind("group\torder\texponent", 0) == 0);
    CHECK((a.exit_code == 0 || a.exit_code == 2));

    CliRun p1 = run_cli("table propd-survey --budget-nodes 4000");
    CliRun p2 = run_cli("table propd-survey --budget-nodes 4000");
    CHECK(p1.out == p2.out);
}

TEST_CASE("cli: environment variable sets the default node budget") {
    CliRun starved = run_cli("s --group 3^3 --json", "ZSLAB_BUDGET_NODES=5 ");
    CHECK(starved.exit_code == 2);
    Json j = Json::parse(starved.out);
    CHECK(j["status"] == "LOWER_BOUND_ONLY");

    // an explicit flag overrides the environment
    CliRun overridden =
        run_cli("s --group 3 --budget-nodes 100000 --json", "ZSLAB_BUDGET_NODES=5 ");
    CHECK(overridden.exit_code == 0);
    Json j2 = Json::parse(overridden.out);
    CHECK(j2["status"] == "EXACT");
    CHECK(j2["value"] == 5);
}
