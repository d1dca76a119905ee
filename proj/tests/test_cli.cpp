// Drives the command-line frontend in-process through run_cli and checks the
// printed contract: exact output strings for the documented examples, exit
// codes (0 decided, 1 error, 2 undecided), JSON shapes that round-trip
// through the parsers, and decimal bounds that survive a re-check at ten
// times the printing precision.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "creals/cauchy.hpp"
#include "creals/cliapp.hpp"
#include "creals/intops.hpp"
#include "creals/poly.hpp"
#include "creals/term.hpp"
#include "oracles.hpp"

using namespace creals;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json parse_single_json_line(const std::string& out) {
    REQUIRE(!out.empty());
    REQUIRE(out.back() == '\n');
    REQUIRE(out.find('\n') == out.size() - 1);
    return nlohmann::json::parse(out);
}

Rat rat_from_str(const std::string& s) {
    Rat r(s, 10);
    r.canonicalize();
    return r;
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// First whitespace-separated token of a "1.414213 ± 1e-6" style line.
std::string leading_token(const std::string& line) {
    return line.substr(0, line.find(' '));
}

}  // namespace

TEST_CASE("eval prints guaranteed decimals") {
    CliResult r = run({"eval", "exp(1/2)", "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.414213 ± 1e-6\n");
    CHECK(r.err.empty());

    r = run({"eval", "1/3 + 1/6", "--digits", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.500 ± 1e-3\n");

    r = run({"eval", "exp(0)", "--digits", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.0 ± 1e-1\n");

    // Default precision is six digits; an exact integer pads with zeros.
    r = run({"eval", "sqrt(9/4) * 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3.000000 ± 1e-6\n");
}

TEST_CASE("decimals truncate toward zero") {
    CliResult r = run({"eval", "0 - sqrt(2)", "--digits", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1.414 ± 1e-3\n");

    r = run({"eval", "0 - 1/3", "--digits", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "-0.33 ± 1e-2\n");
}

TEST_CASE("floor and compare print certified answers") {
    CliResult r = run({"floor", "sqrt(2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run({"floor", "0 - sqrt(2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2\n");

    r = run({"compare", "exp(1/2)", "141/100"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("greater (certificate: m=", 0) == 0);
    CHECK(r.out.find(", k=") != std::string::npos);

    r = run({"compare", "141/100", "exp(1/2)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("less (certificate: m=", 0) == 0);
}

TEST_CASE("root locates the cube root of two") {
    CliResult r = run({"root", "--coeffs", "-2 0 0 1", "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.259921 ± 1e-6\n");

    // Rational coefficients are accepted; the certified bound is the
    // contract, not a specific final digit.
    r = run({"root", "--coeffs", "-1/8 0 0 1", "--digits", "6"});
    CHECK(r.code == 0);
    Rat d = oracles::parse_decimal(leading_token(r.out));
    CHECK(abs_rat(Rat(d - make_rat(Int(1), Int(2)))) <=
          make_rat(Int(1), Int(1000000)));
}

TEST_CASE("check renders every verdict kind") {
    CliResult r = run({"check", "forall x (x*x > 1)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("verdict: refuted\n", 0) == 0);
    CHECK(r.out.find("counterexample: x = 0\n") != std::string::npos);
    CHECK(r.out.find("refuted:") != std::string::npos);

    r = run({"check", "forall x exists y (y + x = 0)", "--budget", "10",
             "--samples", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("verdict: witnesses found\n", 0) == 0);
    CHECK(r.out.find("certified witnesses for all 20 sampled assignments") !=
          std::string::npos);
    CHECK(r.out.find("  x = 1  ->  y = -1\n") != std::string::npos);
    CHECK(r.out.find("  x = -1/2  ->  y = 1/2\n") != std::string::npos);
    CHECK(r.out.find("this is evidence, not a proof") != std::string::npos);

    r = run({"check", "exists y (y*y = 2 and y = 2)", "--budget", "4",
             "--samples", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("verdict: unknown\n", 0) == 0);
    CHECK(r.out.find("unknown:") != std::string::npos);
}

TEST_CASE("exit codes separate failure from indeterminacy") {
    // Parse error: exit 1, diagnostic on stderr, nothing on stdout.
    CliResult r = run({"eval", "x + ", "--digits", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("position") != std::string::npos);

    // Free variable: exit 1.
    r = run({"eval", "y + 1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("closed") != std::string::npos);

    // Division by zero in a literal: exit 1.
    r = run({"eval", "1/0"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());

    // Equal values cannot be separated at any fuel: exit 2, not an error.
    r = run({"compare", "1/2", "1/2"});
    CHECK(r.code == 2);
    CHECK(r.out == "unknown (no separation at fuel 30)\n");
    CHECK(r.err.empty());

    // A non-exact value sitting exactly on an integer never resolves.
    r = run({"floor", "sqrt(2) * sqrt(2)", "--fuel", "8"});
    CHECK(r.code == 2);
    CHECK(r.out == "unknown (no decision at fuel 8)\n");

    // Sign decisions starved of fuel: undecided, exit 2.
    r = run({"root", "--coeffs", "-2 0 0 1", "--fuel", "3"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    // Even degree is a usage error, not indeterminacy.
    r = run({"root", "--coeffs", "1 0 1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("odd degree") != std::string::npos);

    // Coefficients must be rational literals.
    r = run({"root", "--coeffs", "1 x 0 1"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());

    r = run({"root", "--coeffs", ""});
    CHECK(r.code == 1);

    // Missing subcommand and unknown flags are usage errors.
    r = run({});
    CHECK(r.code == 1);
    r = run({"eval", "1", "--no-such-flag"});
    CHECK(r.code == 1);

    // Help goes to stdout and exits 0.
    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
    CHECK(r.out.find("check") != std::string::npos);
}

TEST_CASE("json eval output round-trips through the parser") {
    CliResult r = run({"eval", "exp(1/2)", "--digits", "6", "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_single_json_line(r.out);
    CHECK(j["command"] == "eval");
    CHECK(j["value"] == "1.414213");
    CHECK(j["bound"] == "1e-6");
    CHECK(!j.contains("exact"));
    // The echoed expression is a fixed point of the parser/printer pair.
    std::string expr = j["expression"].get<std::string>();
    CHECK(to_string(parse_term(expr)) == expr);

    r = run({"eval", "1/3 + 1/6", "--digits", "3", "--json"});
    CHECK(r.code == 0);
    j = parse_single_json_line(r.out);
    CHECK(j["value"] == "0.500");
    CHECK(j["exact"] == "1/2");
}

TEST_CASE("json floor and compare outputs carry their certificates") {
    CliResult r = run({"floor", "sqrt(2)", "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_single_json_line(r.out);
    CHECK(j["command"] == "floor");
    CHECK(j["floor"] == "1");

    r = run({"floor", "sqrt(2) * sqrt(2)", "--fuel", "6", "--json"});
    CHECK(r.code == 2);
    j = parse_single_json_line(r.out);
    CHECK(j["result"] == "unknown");
    CHECK(j["fuel"] == 6);

    r = run({"compare", "exp(1/2)", "141/100", "--json"});
    CHECK(r.code == 0);
    j = parse_single_json_line(r.out);
    CHECK(j["result"] == "greater");
    // Rebuild the certificate from the JSON fields and re-validate it
    // against independently evaluated operands.
    CompareResult cert;
    cert.kind = CompareResult::Kind::Greater;
    cert.m = Int(j["certificate"]["m"].get<std::string>(), 10);
    cert.k = Int(j["certificate"]["k"].get<std::string>(), 10);
    CauchyReal left = eval_term(parse_term("exp(1/2)"), {});
    CauchyReal right = eval_term(parse_term("141/100"), {});
    CHECK(compare_certificate_valid(left, right, cert));

    r = run({"compare", "1", "1", "--json", "--fuel", "5"});
    CHECK(r.code == 2);
    j = parse_single_json_line(r.out);
    CHECK(j["result"] == "unknown");
    CHECK(j["fuel"] == 5);
    CHECK(!j.contains("certificate"));
}

TEST_CASE("json root output echoes the polynomial") {
    CliResult r = run({"root", "--coeffs", "-2 0 0 1", "--digits", "6",
                       "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_single_json_line(r.out);
    CHECK(j["command"] == "root");
    CHECK(j["coefficients"] ==
          nlohmann::json::array({"-2", "0", "0", "1"}));
    CHECK(j["value"] == "1.259921");
    CHECK(j["bound"] == "1e-6");
}

TEST_CASE("json check output re-parses and its evidence re-checks") {
    CliResult r = run({"check", "exists y (y*y*y = 2)", "--budget", "20",
                       "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = parse_single_json_line(r.out);
    CHECK(j["verdict"] == "witnesses found");
    CHECK(j["budget"] == 20);
    std::string sentence = j["sentence"].get<std::string>();
    CHECK(to_string(parse_sentence(sentence)) == sentence);

    REQUIRE(j["samples"].size() == 1);
    const nlohmann::json& s = j["samples"][0];
    CHECK(s["certified"] == true);
    CHECK(s["zoom_rounds"].get<unsigned>() >= 1);
    Rat w = rat_from_str(s["witness"]["y"].get<std::string>());
    REQUIRE(s["equalities"].size() == 1);
    const nlohmann::json& ev = s["equalities"][0];
    Rat value = rat_from_str(ev["value"].get<std::string>());
    Rat residual(w * w * w - 2);
    Rat tol = make_rat(Int(1), ipow(Int(2), 20));
    CHECK(abs_rat(residual) < tol);
    if (ev["exact"].get<bool>()) {
        CHECK(value == residual);
    } else {
        Int idx(ev["index"].get<std::string>(), 10);
        CHECK(abs_rat(value) < make_rat(Int(3), idx));
    }

    // Identical invocations print identical bytes.
    CliResult again = run({"check", "exists y (y*y*y = 2)", "--budget", "20",
                           "--json"});
    CHECK(again.out == r.out);

    // Refutation carries the exact counterexample.
    r = run({"check", "forall x (x*x > 1)", "--json"});
    CHECK(r.code == 0);
    j = parse_single_json_line(r.out);
    CHECK(j["verdict"] == "refuted");
    CHECK(j["counterexample"]["x"] == "0");

    // Witness tables pair each sampled value with its exact negation.
    r = run({"check", "forall x exists y (y + x = 0)", "--budget", "10",
             "--samples", "20", "--json"});
    CHECK(r.code == 0);
    j = parse_single_json_line(r.out);
    CHECK(j["verdict"] == "witnesses found");
    REQUIRE(j["samples"].size() == 20);
    for (const nlohmann::json& sample : j["samples"]) {
        CHECK(sample["certified"] == true);
        CHECK(sample["zoom_rounds"] == 0);
        Rat x = rat_from_str(sample["outer"]["x"].get<std::string>());
        Rat y = rat_from_str(sample["witness"]["y"].get<std::string>());
        CHECK(Rat(x + y) == 0);
        REQUIRE(sample["equalities"].size() == 1);
        CHECK(sample["equalities"][0]["exact"] == true);
        CHECK(sample["equalities"][0]["value"] == "0");
    }
}

TEST_CASE("printed bounds survive a re-check at tenfold precision") {
    const std::vector<std::string> exprs = {
        "exp(1/2)",
        "sqrt(2)",
        "exp(1/3) * sqrt(2) + 1/7",
        "0 - sqrt(5)",
        "exp(0 - 2/3)",
        "sqrt(7) * sqrt(7)",
    };
    for (const std::string& expr : exprs) {
        for (unsigned digits : {1u, 3u, 6u}) {
            CliResult r = run({"eval", expr, "--digits",
                               std::to_string(digits), "--json"});
            REQUIRE(r.code == 0);
            nlohmann::json j = parse_single_json_line(r.out);
            Rat d = oracles::parse_decimal(j["value"].get<std::string>());
            Int scale = ipow(Int(10), digits);
            Rat bound = make_rat(Int(1), scale);
            // Ten times the index the printer used for its approximant.
            Int n10 = Int(10) * Int(20) * scale;
            CauchyReal x = eval_term(parse_term(expr), {});
            Rat gap(d - x.approx(n10));
            CHECK(abs_rat(gap) <= Rat(bound + make_rat(Int(1), n10)));
        }
    }

    // Same invariant for the root finder's decimal.
    CliResult r = run({"root", "--coeffs", "5 -3 0 1", "--digits", "6",
                       "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = parse_single_json_line(r.out);
    Rat d = oracles::parse_decimal(j["value"].get<std::string>());
    Polynomial p = polynomial_from_rationals(
        {Rat(5), Rat(-3), Rat(0), Rat(1)});
    CauchyReal root = root_odd(p, 60);
    Int n10 = Int(10) * Int(20) * ipow(Int(10), 6);
    Rat gap(d - root.approx(n10));
    CHECK(abs_rat(gap) <=
          Rat(make_rat(Int(1), ipow(Int(10), 6)) + make_rat(Int(1), n10)));
    // And the residual at the printed decimal is small.
    CauchyReal at_d = eval_poly(p, from_rational(d));
    REQUIRE(at_d.exact());
    CHECK(abs_rat(*at_d.exact()) < make_rat(Int(1), Int(10000)));
}
