#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct RunResult {
    std::string out;
    int code = -1;
};

std::string bin() {
    const char* b = std::getenv("TAUCAT_BIN");
    REQUIRE_MESSAGE(b != nullptr, "TAUCAT_BIN must point at the taucat binary");
    return b;
}

std::string data(const std::string& name) {
    const char* d = std::getenv("TAUCAT_DATA");
    REQUIRE_MESSAGE(d != nullptr, "TAUCAT_DATA must point at the data directory");
    return std::string(d) + "/" + name;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + bin() + "\" " + args +
                      " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Json parse(const RunResult& r) {
    REQUIRE_FALSE(r.out.empty());
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("check reports predicates and closures") {
    auto r = run("check \"" + data("a2.quiver") + "\" --members P1");
    CHECK(r.code == 0);
    Json j = parse(r);
    CHECK(j["command"] == "check");
    CHECK(j["algebra"]["field"] == "Q");
    CHECK(j["algebra"]["dim"] == 3);
    CHECK(j["algebra"]["inventory_size"] == 3);
    std::string fp = j["algebra"]["fingerprint"];
    CHECK(fp.size() == 18);
    CHECK(fp.substr(16) == ":Q");
    CHECK(j["subcat"] == Json::array({"P1"}));
    CHECK(j["tau_rigid_def"] == true);
    CHECK(j["tau_rigid_ext"] == true);
    CHECK(j["support_tau_tilting"] == false);
    CHECK(j["tau_tilting"] == false);
    CHECK(j["partial_tilting"] == true);
    CHECK(j["tilting"] == false);
    CHECK(j["fac"] == Json::array({"S1", "P1"}));
    CHECK(j["perp1"] == Json::array({"P2", "S1", "P1"}));
    CHECK(j["support_report"]["projectives"].size() == 2);
}

TEST_CASE("empty member list is the zero subcategory") {
    auto r = run("check \"" + data("a2.quiver") + "\"");
    CHECK(r.code == 0);
    Json j = parse(r);
    CHECK(j["subcat"] == Json::array());
    CHECK(j["support_tau_tilting"] == true);
    CHECK(j["tau_tilting"] == false);
}

TEST_CASE("member grammar accepts names, indices and dimension vectors") {
    auto r = run("check \"" + data("a2.quiver") + "\" --members \"S1,P2\"");
    Json j = parse(r);
    CHECK(j["subcat"] == Json::array({"P2", "S1"}));

    r = run("check \"" + data("a2.quiver") + "\" --members \"0,2\"");
    j = parse(r);
    CHECK(j["subcat"] == Json::array({"P2", "P1"}));

    r = run("check \"" + data("a2.quiver") + "\" --members \"1,1#0\"");
    j = parse(r);
    CHECK(j["subcat"] == Json::array({"P1"}));

    // bare S works on a one-vertex quiver
    r = run("check \"" + data("loop2.quiver") + "\" --members S");
    CHECK(r.code == 0);
    j = parse(r);
    CHECK(j["subcat"].size() == 1);

    // duplicates collapse
    r = run("check \"" + data("a2.quiver") + "\" --members \"P1,2,1,1#0\"");
    j = parse(r);
    CHECK(j["subcat"] == Json::array({"P1"}));
}

TEST_CASE("exit 2 on unreadable or malformed input") {
    CHECK(run("check /nonexistent/nowhere.quiver").code == 2);

    auto tmp = std::filesystem::temp_directory_path() / "taucat_bad.quiver";
    std::ofstream(tmp) << "vertices: 1 2\narrows: a: 1 -> 7\n";
    CHECK(run("check " + tmp.string()).code == 2);
    std::filesystem::remove(tmp);

    // malformed member syntax
    CHECK(run("check \"" + data("a2.quiver") + "\" --members \"x#0\"").code == 2);
    CHECK(run("check \"" + data("a3.quiver") + "\" --members \"1#0\"").code == 2);

    // invalid cap value
    CHECK(run("check \"" + data("a2.quiver") + "\"", "TAUCAT_CAP=abc").code == 2);
}

TEST_CASE("exit 3 on unresolvable members") {
    CHECK(run("check \"" + data("a2.quiver") + "\" --members P9").code == 3);
    CHECK(run("check \"" + data("a2.quiver") + "\" --members Q1").code == 3);
    CHECK(run("check \"" + data("a2.quiver") + "\" --members 99").code == 3);
    CHECK(run("check \"" + data("a2.quiver") + "\" --members P").code == 3);
    CHECK(run("check \"" + data("a2.quiver") + "\" --members \"9,9#0\"").code == 3);
}

TEST_CASE("exit 4 on precondition violations") {
    CHECK(run("complete \"" + data("a2.quiver") + "\" --members \"S1,S2\" --method fac")
              .code == 4);
    CHECK(run("complete \"" + data("a2.quiver") +
              "\" --members \"S1,S2\" --method tau-perp")
              .code == 4);
    CHECK(run("verify \"" + data("loop2.quiver") + "\" --theorem 4.7").code == 4);
}

TEST_CASE("exit 5 when the cap trips") {
    CHECK(run("enumerate \"" + data("a3.quiver") + "\" --what stt", "TAUCAT_CAP=2").code ==
          5);
}

TEST_CASE("usage errors are nonzero and distinct from domain exits") {
    CHECK(run("").code != 0);
    CHECK(run("frobnicate x").code != 0);
    auto r = run("complete \"" + data("a2.quiver") + "\" --members P1 --method bogus");
    CHECK(r.code != 0);
    CHECK(r.code != 4);
}

TEST_CASE("complete implements all three methods") {
    auto r = run("complete \"" + data("a2.quiver") + "\" --members P1 --method fac");
    CHECK(r.code == 0);
    Json j = parse(r);
    const Json& c = j["completion"];
    CHECK(c["method"] == "fac-cokernel");
    CHECK(c["input"] == Json::array({"P1"}));
    CHECK(c["output"] == Json::array({"S1", "P1"}));
    CHECK(c["contains_input"] == true);
    CHECK(c["verified"] == true);

    r = run("complete \"" + data("a2.quiver") + "\" --members P1 --method tau-perp");
    j = parse(r);
    CHECK(j["completion"]["method"] == "tau-perp");
    CHECK(j["completion"]["output"] == Json::array({"P2", "P1"}));
    CHECK(j["completion"]["verified"] == true);

    r = run("complete \"" + data("a2.quiver") + "\" --members S1 --method tilting");
    j = parse(r);
    CHECK(j["completion"]["method"] == "tilting-perp");
    CHECK(j["completion"]["output"] == Json::array({"S1", "P1"}));
    CHECK(j["completion"]["verified"] == true);

    // empty input completes to the empty subcategory
    r = run("complete \"" + data("a2.quiver") + "\" --method fac");
    j = parse(r);
    CHECK(j["completion"]["output"] == Json::array());
    CHECK(j["completion"]["verified"] == true);
}

TEST_CASE("enumerate lists stt subcategories and torsion classes") {
    auto r = run("enumerate \"" + data("a2.quiver") + "\" --what stt");
    CHECK(r.code == 0);
    Json j = parse(r);
    CHECK(j["count"] == 5);
    REQUIRE(j["items"].size() == 5);
    int tau_tilting = 0;
    for (const auto& e : j["items"]) {
        CHECK(e.contains("members"));
        CHECK(e.contains("support"));
        if (e["tau_tilting"] == true) tau_tilting++;
    }
    CHECK(tau_tilting == 2);

    r = run("enumerate \"" + data("a2.quiver") + "\" --what tors");
    j = parse(r);
    CHECK(j["count"] == 5);
    for (const auto& e : j["items"]) CHECK(e["ext_projectives"].size() <= 2);

    r = run("enumerate \"" + data("a3.quiver") + "\" --what stt");
    j = parse(r);
    CHECK(j["count"] == 14);

    r = run("enumerate \"" + data("d4.quiver") + "\" --what stt");
    j = parse(r);
    CHECK(j["count"] == 50);
}

TEST_CASE("verify runs one theorem or the whole battery") {
    auto r = run("verify \"" + data("a2.quiver") + "\"");
    CHECK(r.code == 0);
    Json j = parse(r);
    CHECK(j["all_pass"] == true);
    REQUIRE(j["theorems"].size() == 8);
    for (const auto& t : j["theorems"]) {
        CHECK(t["applicable"] == true);
        CHECK(t["pass"] == true);
        CHECK(t["failures"] == Json::array());
        if (t["theorem"] == "3.4") {
            CHECK(t["bijection"]["stt_count"] == 5);
            CHECK(t["bijection"]["fixed_point_count"] == 5);
            CHECK(t["bijection"]["pass"] == true);
        }
    }

    r = run("verify \"" + data("a3.quiver") + "\" --theorem 4.7");
    CHECK(r.code == 0);
    j = parse(r);
    REQUIRE(j["theorems"].size() == 1);
    CHECK(j["theorems"][0]["cases"] == 5);

    // inapplicable theorems are skipped by "all" but fail a direct request
    r = run("verify \"" + data("loop2.quiver") + "\"");
    CHECK(r.code == 0);
    j = parse(r);
    CHECK(j["all_pass"] == true);
    bool saw_inapplicable = false;
    for (const auto& t : j["theorems"])
        if (t["theorem"] == "4.7") {
            CHECK(t["applicable"] == false);
            CHECK(t["note"] == "not hereditary");
            saw_inapplicable = true;
        }
    CHECK(saw_inapplicable);
}

TEST_CASE("export emits DOT graphs") {
    auto tmp = std::filesystem::temp_directory_path() / "taucat_a2.dot";
    auto r = run("export \"" + data("a2.quiver") + "\" --graph stt-exchange --out " +
                 tmp.string());
    CHECK(r.code == 0);
    Json j = parse(r);
    CHECK(j["nodes"] == 5);
    CHECK(j["edges"] == 5);  // the exchange pentagon
    std::string dot = j["dot"];
    CHECK(dot.find("graph stt_exchange") == 0);
    CHECK(dot.find("{S1,P1}") != std::string::npos);
    std::ifstream in(tmp);
    std::string written((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(written == dot);
    std::filesystem::remove(tmp);

    r = run("export \"" + data("a2.quiver") + "\" --graph tors-hasse");
    j = parse(r);
    CHECK(j["nodes"] == 5);
    CHECK(j["edges"] == 5);
    dot = j["dot"];
    CHECK(dot.find("digraph tors_hasse") == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const std::string cmd = "enumerate \"" + data("a3.quiver") + "\" --what stt";
    auto r1 = run(cmd);
    auto r2 = run(cmd);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    const std::string vcmd = "verify \"" + data("a3rel.quiver") + "\" --theorem 3.4";
    auto v1 = run(vcmd);
    auto v2 = run(vcmd);
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
}
