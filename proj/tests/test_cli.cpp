#include "helpers.hpp"
#include "mixsegre/document.hpp"
#include "mixsegre/error.hpp"
#include "mixsegre/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mixsegre;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path corpus_dir() { return MIXSEGRE_CORPUS_DIR; }

Report run(const std::string& text, const std::string& command, std::vector<std::string> names,
           RunSettings settings = {}) {
    CommandArgs args;
    args.names = std::move(names);
    return run_command(parse_input(text), command, args, settings);
}

const char* kPair = "ring x,y,z; ideal I1 = z; ideal I2 = x*z, y*z, z^2;";

} // namespace

TEST_CASE("parse the two-ideal document") {
    const InputDocument doc = parse_input(kPair);
    REQUIRE(doc.ring);
    CHECK(doc.ring->variables() == std::vector<std::string>{"x", "y", "z"});
    CHECK(doc.ideals.size() == 2);
    CHECK(doc.ideal("I2").size() == 3);
    CHECK_FALSE(doc.ambient.has_value());
}

TEST_CASE("rational coefficients") {
    const InputDocument doc = parse_input("ring x; ideal I = x^2 - 1/2*x;");
    CHECK(doc.ideal("I").generators().front().terms().back().coeff == Rational(-1, 2));
}

TEST_CASE("syntax errors carry positions") {
    auto error_of = [](const std::string& text) -> ParseError {
        try {
            parse_input(text);
        } catch (const ParseError& e) {
            return e;
        }
        FAIL("no error for: " << text);
        throw;
    };
    const ParseError no_ring = error_of("ideal I = x;");
    CHECK(no_ring.line() == 1);
    CHECK(no_ring.column() == 1);
    CHECK(std::string(no_ring.what()).find("'ideal'") != std::string::npos);

    const ParseError unknown = error_of("ring x, y;\nideal I = x + w;");
    CHECK(unknown.line() == 2);
    CHECK(std::string(unknown.what()).find("unknown variable") != std::string::npos);

    const ParseError duplicate = error_of("ring x;\nideal I = x;\nideal I = x^2;");
    CHECK(duplicate.line() == 3);
    CHECK(std::string(duplicate.what()).find("duplicate") != std::string::npos);

    CHECK_THROWS_AS(parse_input("ring x; ideal I = x^;"), ParseError);
    CHECK_THROWS_AS(parse_input("ring x; ideal I = x"), ParseError);
    CHECK_THROWS_AS(parse_input("ring x, x; ideal I = x;"), ParseError);
    CHECK_THROWS_AS(parse_input("ring x; ideal I = x;\n[options]\nseed = -1\n"), ParseError);
}

TEST_CASE("serialize round-trips every corpus document") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext != ".ideal" && ext != ".surface" && ext != ".poly") continue;
        INFO(entry.path().string());
        const InputDocument doc = parse_input(slurp(entry.path()));
        const std::string text = serialize(doc);
        const InputDocument again = parse_input(text);
        CHECK(documents_equal(doc, again));
        CHECK(serialize(again) == text);
        ++seen;
    }
    CHECK(seen >= 8);
}

TEST_CASE("reports are byte-identical under a fixed seed") {
    for (const auto& [cmd, names] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"segre", {"I2"}}, {"compare", {"I1", "I2"}}, {"mixed", {"I1", "I2"}}, {"chain", {"I2"}}}) {
        CHECK(run(kPair, cmd, names).json.dump(2) == run(kPair, cmd, names).json.dump(2));
    }
}

TEST_CASE("different seeds certify the same numbers") {
    RunSettings a, b;
    a.seed = 1;
    b.seed = 2;
    const auto ra = run(kPair, "segre", {"I2"}, a).json;
    const auto rb = run(kPair, "segre", {"I2"}, b).json;
    CHECK(ra["results"]["I2"]["profile"] == rb["results"]["I2"]["profile"]);
    CHECK(ra["results"]["I2"]["chain"]["coefficients"] != rb["results"]["I2"]["chain"]["coefficients"]);
}

TEST_CASE("exit codes") {
    CHECK(run(kPair, "segre", {"I2"}).exit_code == kExitOk);
    CHECK(run(kPair, "compare", {"I1", "I2"}).exit_code == kExitVerdictFalse);
    CHECK(run("ring x,y; ideal I = x^2, y^2; ideal J = x^2, x*y, y^2;", "rees", {"I", "J"}).exit_code == kExitOk);
    CHECK_THROWS_AS(run(kPair, "segre", {"I9"}), Error);
    CHECK_THROWS_AS(run(kPair, "frobnicate", {"I1"}), Error);
    CHECK_THROWS_AS(run(kPair, "teissier", {"I1", "I2"}), PreconditionFailed);
}

TEST_CASE("report layout") {
    const auto j = run(kPair, "segre", {"I2"}).json;
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "config", "results", "verdict", "statistics"});
    CHECK(j["schema"] == "1");
    CHECK(j["results"]["I2"]["profile"]["e"] == nlohmann::json::array({"1", "1", "2"}));
    CHECK(j["config"]["seed"].is_string());
    RunSettings timed;
    timed.timing = true;
    CHECK(run(kPair, "segre", {"I2"}, timed).json.contains("timing"));
    const auto err = error_report("segre", "cli", "boom");
    CHECK(err["error"]["module"] == "cli");
}

TEST_CASE("options resolve from the command line over the document") {
    const InputDocument doc = parse_input("ring x; ideal I = x;\n[options]\nseed = 5, rounds = 3\n");
    RunSettings none, seed;
    seed.seed = 9;
    CHECK(resolve_config(doc, none).seed == 5);
    CHECK(resolve_config(doc, none).verification_rounds == 3);
    CHECK(resolve_config(doc, seed).seed == 9);
    CHECK(resolve_config(parse_input("ring x; ideal I = x;"), none).seed == kDefaultSeed);
}
