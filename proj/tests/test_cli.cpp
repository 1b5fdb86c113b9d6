#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qrs/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.exit = qrs::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json load_schema() {
    std::ifstream in(std::string(QRS_SOURCE_DIR) + "/docs/output_schema.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

// minimal structural validator for the subset of JSON Schema the file uses
void validate_envelope(const json& schema, const json& doc) {
    REQUIRE(doc.is_object());
    for (const auto& key : schema["required"])
        CHECK(doc.contains(key.get<std::string>()));
    const json& props = schema["properties"];
    for (auto it = props.begin(); it != props.end(); ++it) {
        if (!doc.contains(it.key()))
            continue;
        const std::string type = it.value()["type"];
        const json& v = doc[it.key()];
        if (type == "string")
            CHECK(v.is_string());
        else if (type == "boolean")
            CHECK(v.is_boolean());
        else if (type == "object")
            CHECK(v.is_object());
    }
    const std::string cmd = doc["command"];
    REQUIRE(schema["resultRequired"].contains(cmd));
    for (const auto& key : schema["resultRequired"][cmd])
        CHECK(doc["result"].contains(key.get<std::string>()));
}

// commands exercised in both output modes
const std::vector<std::vector<std::string>> kCorpus = {
    {"nf", "--algebra", "Uplus", "E2*E1"},
    {"nf", "--algebra", "Q3", "T2*T1"},
    {"mul", "--algebra", "Uplus", "E3", "E1"},
    {"relcheck", "--algebra", "UcheckGE0"},
    {"relcheck", "--algebra", "UW"},
    {"coproduct", "E1"},
    {"antipode", "E1"},
    {"hopf-axioms", "--bound", "1"},
    {"aut", "check", "--a", "1", "--b", "0", "--c", "0", "--d", "-1"},
    {"aut", "check", "--a", "1", "--b", "0", "--c", "0", "--d", "0"},
    {"aut", "classify", "--bound", "1"},
    {"aut", "compose", "--p", "1,0,0,-1", "--q", "-1,0,0,1"},
    {"aut", "hopf-check", "--a", "0", "--b", "0", "--c", "0", "--d", "0", "--b1", "r"},
    {"aut", "hopf-check", "--a", "1", "--b", "0", "--c", "0", "--d", "-1"},
    {"der", "apply", "--e1", "E1", "--e2", "0", "E1*E2"},
    {"der", "decompose", "--e1", "2*E1", "--e2", "3*E2"},
    {"der", "center", "--algebra", "Q3", "--bound", "2"},
    {"der", "embed", "E2"},
    {"reproduce", "prop3.1"},
};

}  // namespace

TEST_CASE("nf command matches the worked example") {
    RunResult r = run({"nf", "--algebra", "Uplus", "E2*E1"});
    CHECK(r.exit == 0);
    CHECK(r.out == "s^-1*E1*E2 - s^-1*E3\n");
}

TEST_CASE("aut check exit codes distinguish verdicts from usage errors") {
    CHECK(run({"aut", "check", "--a", "1", "--b", "0", "--c", "0", "--d", "-1"}).exit == 0);
    RunResult invalid = run({"aut", "check", "--a", "1", "--b", "0", "--c", "0", "--d", "0"});
    CHECK(invalid.exit == 1);
    CHECK(invalid.out.find("invalid") != std::string::npos);

    RunResult hopf = run({"aut", "hopf-check", "--a", "1", "--b", "0", "--c", "0",
                          "--d", "-1"});
    CHECK(hopf.exit == 1);
    CHECK(hopf.out.find("coproduct mismatch on E1") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({"nf", "--algebra", "Nope", "E1"}).exit == 2);
    CHECK(run({"nf", "--algebra", "Uplus", "E9*E1"}).exit == 2);
    CHECK(run({"nf", "--algebra", "Uplus", "E3^-1"}).exit == 2);
    CHECK(run({"frobnicate"}).exit == 2);
    CHECK(run({}).exit == 2);
    CHECK(run({"reproduce", "thm9.9"}).exit == 2);
}

TEST_CASE("json outputs validate against the shipped schema") {
    json schema = load_schema();
    for (const auto& cmd : kCorpus) {
        std::vector<std::string> args = {"--format", "json"};
        args.insert(args.end(), cmd.begin(), cmd.end());
        RunResult r = run(args);
        CAPTURE(cmd[0]);
        REQUIRE(!r.out.empty());
        json doc = json::parse(r.out);
        validate_envelope(schema, doc);
    }
}

TEST_CASE("text and json modes agree on every corpus verdict") {
    for (const auto& cmd : kCorpus) {
        std::vector<std::string> jargs = {"--format", "json"};
        jargs.insert(jargs.end(), cmd.begin(), cmd.end());
        RunResult jr = run(jargs);
        RunResult tr = run(cmd);
        CAPTURE(cmd[0]);
        CHECK(jr.exit == tr.exit);
        json doc = json::parse(jr.out);
        CHECK(doc["ok"] == (tr.exit == 0));
    }
}

TEST_CASE("reproduce runs a named check end to end") {
    RunResult r = run({"reproduce", "thm1.4"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("pass thm1.4") != std::string::npos);
}

TEST_CASE("der decompose prints the split") {
    RunResult r = run({"der", "decompose", "--e1", "2*E1", "--e2", "3*E2"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("t = 0") != std::string::npos);
    CHECK(r.out.find("mu1 = 2") != std::string::npos);
    CHECK(r.out.find("mu2 = 3") != std::string::npos);
}
