#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tropfrieze/cli.hpp"
#include "tropfrieze/example.hpp"
#include "tropfrieze/index.hpp"

using namespace tropfrieze;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"index"}).code == 2);
    CHECK(cli({"frobnicate", "builtin:ot-a4"}).code == 2);
    CHECK(cli({"index", "builtin:nope"}).code == 2);
    CHECK(cli({"index", "/nonexistent/spec.json"}).code == 2);
    CHECK(cli({"frieze", "builtin:ot-a4", "--phi", "1,x,3,4"}).code == 2);
}

TEST_CASE("index table output") {
    const auto r = cli({"index", "builtin:ot-a4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("object") != std::string::npos);
    CHECK(r.out.find("-P(1)+P(2)-P(3)+P(4)") != std::string::npos);

    const auto j = cli({"index", "builtin:ot-a4", "--json"});
    CHECK(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed.at("I(4)").at("P(1)").get<int>() == -1);
    CHECK(parsed.at("S3P(2)").at("P(2)").get<int>() == -1);
    CHECK_FALSE(parsed.at("P(1)").contains("P(2)"));  // zero coefficients omitted

    // JSON parses back into exactly the library table
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    for (const auto& [name, elem] : table.entries) {
        FreeAbelianElement rebuilt(spec.tilting_basis());
        for (const auto& [label, c] : parsed.at(name).items())
            rebuilt += c.get<Coeff>() * FreeAbelianElement::unit(spec.tilting_basis(), label);
        CHECK(rebuilt == elem);
    }
}

TEST_CASE("theta output") {
    const auto r = cli({"theta", "builtin:ot-a4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S(P(1))") != std::string::npos);
    CHECK(r.out.find("P(2)-P(3)+P(4)") != std::string::npos);
}

TEST_CASE("frieze-cone emits the inequality rows") {
    const auto r = cli({"frieze-cone", "builtin:ot-a4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "S(P(1)): P(2)-P(3)+P(4) >= 0\n"
          "S(P(2)): -P(1)+P(3)-P(4) >= 0\n"
          "S(P(3)): P(1)-P(2)+P(4) >= 0\n"
          "S(P(4)): -P(1)+P(2)-P(3) >= 0\n");
}

TEST_CASE("frieze values and checks") {
    const auto r = cli({"frieze", "builtin:ot-a4", "--phi", "-17,-8,2,19", "--check"});
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, "PASS pair") == 9);
    CHECK(r.out.find("26") != std::string::npos);
    CHECK(r.err.empty());

    const auto warned = cli({"frieze", "builtin:ot-a4", "--phi", "1,0,0,0"});
    CHECK(warned.code == 0);
    CHECK(warned.err.find("warning") != std::string::npos);

    const auto j = cli({"frieze", "builtin:ot-a4", "--phi", "-17,-8,2,19", "--check", "--json"});
    CHECK(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed.at("values").at("I(4)").get<int>() == 26);
    CHECK(parsed.at("report").size() == 9);
}

TEST_CASE("verification subcommands pass on the built-in spec") {
    const auto add = cli({"check-additivity", "builtin:ot-a4"});
    CHECK(add.code == 0);
    CHECK(count_lines_with(add.out, "PASS angle") == 18);

    const auto dicho = cli({"check-dichotomy", "builtin:ot-a4"});
    CHECK(dicho.code == 0);
    CHECK(count_lines_with(dicho.out, "PASS pair") == 9);
}

TEST_CASE("exchange pair scan") {
    const auto r = cli({"exchange-pairs", "builtin:ot-a4"});
    CHECK(r.code == 0);
    std::istringstream ss(r.out);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(ss, line)) ++lines;
    CHECK(lines == 18);
    CHECK(count_lines_with(r.out, "declared") == 9);
}

TEST_CASE("enumeration output") {
    const auto r = cli({"enumerate", "builtin:ot-a4", "--bound", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "-1 -1 -1 0\n"
          "-1 -1 0 1\n"
          "-1 0 0 1\n"
          "-1 0 1 1\n"
          "0 0 0 0\n"
          "0 1 1 1\n");

    const auto limited = cli({"enumerate", "builtin:ot-a4", "--bound", "1", "--limit", "2"});
    CHECK(count_lines_with(limited.out, " ") == 2);

    const auto threaded = cli({"enumerate", "builtin:ot-a4", "--bound", "2", "--threads", "3"});
    CHECK(threaded.out == cli({"enumerate", "builtin:ot-a4", "--bound", "2"}).out);
}

TEST_CASE("propagation") {
    const auto ok = cli({"propagate", "builtin:ot-a4", "--seed", "-17,-8,2,19", "--start", "P(1)"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("-19") != std::string::npos);

    const auto fail = cli({"propagate", "builtin:ot-a4", "--seed", "1,0,0,0", "--start", "P(1)"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("FAIL closure at P(1): existing 1, recomputed 2") != std::string::npos);
}

TEST_CASE("dot rendering") {
    const auto r = cli({"dot", "builtin:ot-a4"});
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, "->") == 9);
    CHECK(count_lines_with(r.out, "\";") - count_lines_with(r.out, "->") == 9);
    CHECK(r.out == cli({"dot", "builtin:ot-a4"}).out);
}

TEST_CASE("example subcommand") {
    const auto dump = cli({"example", "ot-a4"});
    CHECK(dump.code == 0);
    CHECK(load_spec(dump.out) == builtin_ot_a4());

    const auto path = std::filesystem::temp_directory_path() / "tropfrieze_emitted_spec.json";
    const auto emitted = cli({"example", "ot-a4", "--emit", path.string()});
    CHECK(emitted.code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(load_spec(ss.str()) == builtin_ot_a4());
    std::filesystem::remove(path);

    const auto report = cli({"example", "ot-a4", "--report"});
    CHECK(report.code == 0);
    CHECK(count_lines_with(report.out, "PASS ") == 9);
    CHECK(count_lines_with(report.out, "FAIL") == 0);

    CHECK(cli({"example", "nope"}).code == 2);
}

TEST_CASE("validate reports violations and other commands refuse invalid specs") {
    const auto good = cli({"validate", "builtin:ot-a4"});
    CHECK(good.code == 0);
    CHECK(good.out == "OK\n");

    json doc = json::parse(emit_spec(builtin_ot_a4()));
    doc["suspension"]["S3P(4)"] = "P(1)";
    const auto path = temp_file("tropfrieze_bad_spec.json", doc.dump());

    const auto bad = cli({"validate", path.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("suspension-not-bijective") != std::string::npos);

    const auto refused = cli({"index", path.string()});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("invalid spec") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("check-frieze with a values file") {
    json values = json::object();
    const std::vector<std::pair<std::string, int>> fig = {
        {"P(1)", -17}, {"P(2)", -8},   {"P(3)", 2},    {"P(4)", 19},   {"I(4)", 26},
        {"S3P(1)", 17}, {"S3P(2)", 8}, {"S3P(3)", -2}, {"S3P(4)", -19}};
    for (const auto& [name, v] : fig) values[name] = v;
    const auto path = temp_file("tropfrieze_values.json", values.dump());

    const auto ok = cli({"check-frieze", "builtin:ot-a4", "--values", path.string()});
    CHECK(ok.code == 0);
    CHECK(count_lines_with(ok.out, "PASS pair") == 9);

    values["I(4)"] = 27;
    const auto path2 = temp_file("tropfrieze_values_bad.json", values.dump());
    const auto bad = cli({"check-frieze", "builtin:ot-a4", "--values", path2.string()});
    CHECK(bad.code == 1);
    CHECK(count_lines_with(bad.out, "FAIL pair") >= 1);

    values.erase("I(4)");
    const auto path3 = temp_file("tropfrieze_values_missing.json", values.dump());
    CHECK(cli({"check-frieze", "builtin:ot-a4", "--values", path3.string()}).code == 2);

    std::filesystem::remove(path);
    std::filesystem::remove(path2);
    std::filesystem::remove(path3);
}
