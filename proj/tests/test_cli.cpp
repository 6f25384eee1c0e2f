#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "riordan/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = riordan::cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("triangle renders catalog arrays in every format") {
    const Run csv = run({"triangle", "--array", "delannoy", "--rows", "6",
                         "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "1\n"
                     "1,1\n"
                     "1,3,1\n"
                     "1,5,5,1\n"
                     "1,7,13,7,1\n"
                     "1,9,25,25,9,1\n");

    const Run table = run({"triangle", "--array", "pascal", "--rows", "3"});
    CHECK(table.code == 0);
    CHECK(table.out == "1\n"
                       "1 1\n"
                       "1 2 1\n");

    const Run js = run({"triangle", "--array", "catalan_bell", "--rows", "6",
                        "--format", "json"});
    CHECK(js.code == 0);
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["array"] == "catalan_bell");
    CHECK(j["shift"].is_null());
    CHECK(j["rows"].size() == 6);
    CHECK(j["rows"].back() ==
          nlohmann::json::array({"42", "42", "28", "14", "5", "1"}));
    CHECK(!j.contains("meta"));

    const Run meta = run({"triangle", "--array", "catalan_bell", "--rows",
                          "3", "--format", "json", "--meta"});
    const nlohmann::json jm = nlohmann::json::parse(meta.out);
    REQUIRE(jm.contains("meta"));
    CHECK(jm["meta"]["command"] == "triangle");
    CHECK(jm["meta"]["order"] == 24);
}

TEST_CASE("literal array specs parse and match the catalog") {
    const Run lit = run({"triangle", "--g", "1/1,-1", "--f", "1,1/1,-1",
                         "--rows", "6", "--format", "csv"});
    const Run cat = run({"triangle", "--array", "delannoy", "--rows", "6",
                         "--format", "csv"});
    CHECK(lit.code == 0);
    CHECK(lit.out == cat.out);

    // non-unit constant term
    const Run bad = run({"triangle", "--g", "2", "--f", "1"});
    CHECK(bad.code == 64);

    // malformed literals
    CHECK(run({"triangle", "--g", "1,a", "--f", "1"}).code == 64);
    CHECK(run({"triangle", "--g", "1/0,1", "--f", "1"}).code == 64);
    CHECK(run({"triangle", "--g", "1/1/1", "--f", "1"}).code == 64);
    CHECK(run({"triangle", "--g", "", "--f", "1"}).code == 64);

    // --g without --f, unknown name, name mixed with literals
    CHECK(run({"triangle", "--g", "1"}).code == 64);
    CHECK(run({"triangle", "--array", "nosuch"}).code == 64);
    CHECK(run({"triangle", "--array", "pascal", "--g", "1", "--f", "1"})
              .code == 64);
}

TEST_CASE("central prints the oracle triangle with a convention note") {
    const Run r = run({"central", "--array", "delannoy", "--shift", "0",
                       "--rows", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n"
                   "3,1\n"
                   "13,7,1\n"
                   "63,41,11,1\n"
                   "321,231,85,15,1\n"
                   "1683,1289,575,145,19,1\n");
    CHECK(r.err.find("c(A;1)") != std::string::npos);

    const Run table = run(
        {"central", "--array", "pascal", "--shift", "0", "--rows", "4"});
    CHECK(table.code == 0);
    CHECK(table.out == " 1\n"
                       " 2  1\n"
                       " 6  4 1\n"
                       "20 15 6 1\n");
}

TEST_CASE("central accepts the label alias and validates the shift") {
    const Run by_shift = run({"central", "--array", "delannoy", "--shift",
                              "0", "--rows", "5", "--format", "csv"});
    const Run by_label = run({"central", "--array", "delannoy",
                              "--paper-label", "1", "--rows", "5", "--format",
                              "csv"});
    CHECK(by_label.code == 0);
    CHECK(by_label.out == by_shift.out);
    CHECK(by_label.err.find("label r=1 corresponds to shift s=0") !=
          std::string::npos);

    CHECK(run({"central", "--array", "delannoy", "--shift", "-1"}).code ==
          64);
    CHECK(run({"central", "--array", "delannoy", "--paper-label", "0"})
              .code == 64);
    CHECK(run({"central", "--array", "delannoy", "--shift", "0",
               "--paper-label", "1"})
              .code == 64);

    const Run js = run({"central", "--array", "delannoy", "--shift", "1",
                        "--rows", "4", "--format", "json"});
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["shift"] == 1);
    CHECK(j["rows"].back() ==
          nlohmann::json::array({"129", "61", "13", "1"}));
}

TEST_CASE("central regenerates catalog arrays at the required order") {
    const Run r = run({"central", "--array", "delannoy", "--order", "4",
                       "--rows", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(r.out.rfind("1683")) == "1683,1289,575,145,19,1\n");

    // literal arrays keep the explicit order and report the shortfall
    const Run lit = run({"central", "--g", "1/1,-1", "--f", "1,1/1,-1",
                         "--order", "4", "--rows", "6"});
    CHECK(lit.code == 2);
    CHECK(lit.err.find("order") != std::string::npos);

    const Run tri = run(
        {"triangle", "--array", "pascal", "--order", "4", "--rows", "6"});
    CHECK(tri.code == 2);
}

TEST_CASE("aseq and zseq print base and central sequences") {
    const Run a0 = run({"aseq", "--array", "catalan_bell", "--rows", "6",
                        "--format", "csv"});
    CHECK(a0.code == 0);
    CHECK(a0.out == "1,1,1,1,1,1\n");

    const Run a1 = run({"aseq", "--array", "catalan_bell", "--shift", "0",
                        "--rows", "6", "--format", "csv"});
    CHECK(a1.code == 0);
    CHECK(a1.out == "1,2,3,4,5,6\n");

    const Run z = run({"zseq", "--array", "delannoy", "--shift", "0",
                       "--rows", "8", "--format", "csv"});
    CHECK(z.code == 0);
    CHECK(z.out == "3,4,-4,12,-44,180,-788,3612\n");

    const Run z0 = run(
        {"zseq", "--array", "identity", "--rows", "4", "--format", "csv"});
    CHECK(z0.code == 0);
    CHECK(z0.out == "0,0,0,0\n");

    const nlohmann::json j = nlohmann::json::parse(
        run({"aseq", "--array", "pascal", "--rows", "3", "--format", "json"})
            .out);
    CHECK(j["shift"].is_null());
    CHECK(j["rows"] == nlohmann::json::array(
                           {nlohmann::json::array({"1", "1", "0"})}));
}

TEST_CASE("prodmat prints Hessenberg rows for array and central") {
    const Run base = run({"prodmat", "--array", "catalan_bell", "--rows", "4",
                          "--format", "csv"});
    CHECK(base.code == 0);
    CHECK(base.out == "1,1\n"
                      "1,1,1\n"
                      "1,1,1,1\n"
                      "1,1,1,1,1\n");

    const Run central = run({"prodmat", "--array", "catalan_bell", "--shift",
                             "0", "--rows", "3", "--format", "csv"});
    CHECK(central.code == 0);
    CHECK(central.out == "2,1\n"
                         "5,2,1\n"
                         "10,3,2,1\n");
}

TEST_CASE("verify reports one aggregated line per identity") {
    const Run cb = run({"verify", "--array", "catalan_bell", "--order", "16",
                        "--shift-max", "1", "--rows", "6"});
    CHECK(cb.code == 0);
    CHECK(cb.out.find("a_seq_squared: PASS (1/(1-x)^2)") !=
          std::string::npos);
    CHECK(cb.out.find("FAIL") == std::string::npos);

    const Run id = run({"verify", "--array", "identity"});
    CHECK(id.code == 0);
    CHECK(id.out.find("z_recurrence: SKIPPED (degenerate") !=
          std::string::npos);

    const Run del = run({"verify", "--array", "delannoy", "--shift-max", "3",
                         "--rows", "8", "--order", "16"});
    CHECK(del.code == 0);
    CHECK(del.out.find("FAIL") == std::string::npos);
    CHECK(del.out.find("oracle_equiv: PASS") != std::string::npos);
    // one line per identity: the per-shift suffix never leaks
    CHECK(del.out.find("[s=") == std::string::npos);
}

TEST_CASE("fuzz reports a deterministic pass count") {
    const std::vector<std::string> args{"fuzz",    "--seed",      "42",
                                        "--trials", "5",          "--order",
                                        "12",       "--shift-max", "2"};
    const Run first = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == "5/5 PASS\n");
    const Run second = run(args);
    CHECK(second.out == first.out);

    CHECK(run({"fuzz", "--trials", "0"}).code == 64);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"central", "--array", "catalan_bell",
                                        "--shift", "1",       "--rows",
                                        "5",       "--format", "json"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
}

TEST_CASE("usage surface: help and bad invocations") {
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("triangle") != std::string::npos);

    CHECK(run({}).code == 64);
    CHECK(run({"bogus"}).code == 64);
    CHECK(run({"triangle", "--array", "pascal", "--format", "yaml"}).code ==
          64);
    CHECK(run({"triangle"}).code == 64); // no array at all
    CHECK(run({"aseq", "--array", "pascal", "--rows", "0"}).code == 64);
}
