#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "util.hpp"

namespace {

const std::string kTool = ORBIT_ATLAS_CLI_PATH;

std::string golden(const std::string& name) {
    return testutil::read_file(std::string(ORBIT_ATLAS_GOLDEN_DIR) + "/" + name);
}

int line_count(const std::string& text) {
    int count = 0;
    for (char ch : text) {
        count += ch == '\n';
    }
    return count;
}

} // namespace

TEST_CASE("involutions listing") {
    const auto r4 = testutil::run_command(kTool + " involutions --n 4");
    CHECK(r4.exit_code == 0);
    CHECK(line_count(r4.output) == 11); // header + 10 rows

    const auto r1 = testutil::run_command(kTool + " involutions --n 1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == "id\tcycles\tdim\tarcs\n0\te\t0\t0\n");

    const auto r6 = testutil::run_command(kTool + " involutions --n 6");
    CHECK(r6.exit_code == 0);
    CHECK(line_count(r6.output) == 77);
}

TEST_CASE("involutions json is machine readable") {
    const auto r = testutil::run_command(kTool + " involutions --n 4 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("n") == 4);
    CHECK(doc.at("count") == 10);
    CHECK(doc.at("involutions").size() == 10);
    CHECK(doc.at("involutions")[0].at("dim") == 0);
}

TEST_CASE("enumeration caps and overrides") {
    CHECK(testutil::run_command(kTool + " involutions --n 11").exit_code == 2);
    CHECK(testutil::run_command(kTool + " involutions --n 11 --unsafe-large")
              .exit_code == 0);
    CHECK(testutil::run_command(kTool + " involutions --n 0").exit_code == 2);
    CHECK(testutil::run_command(kTool + " involutions").exit_code == 2);
    CHECK(testutil::run_command(kTool + " nonsense").exit_code == 2);
}

TEST_CASE("poset outputs match the golden files") {
    const auto dot = testutil::run_command(
        kTool + " poset --setting nilpotent --n 4 --out dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output == golden("i4_melnikov.dot"));

    const auto json = testutil::run_command(
        kTool + " poset --setting grassmannian --n 4 --lambda 2,2 --mu 2,2 --out json");
    CHECK(json.exit_code == 0);
    CHECK(json.output == golden("cell_22_22.json"));

    const auto single = testutil::run_command(
        kTool + " poset --setting grassmannian --n 4 --lambda 2,1 --mu 1,0 --out dot");
    CHECK(single.exit_code == 0);
    CHECK(line_count(single.output) == 5); // header, defaults, one node, close
}

TEST_CASE("poset input validation") {
    CHECK(testutil::run_command(kTool + " poset --setting grassmannian --n 4 "
                                        "--lambda 3,1 --mu 2,2")
              .exit_code == 2); // part exceeds box width
    CHECK(testutil::run_command(kTool + " poset --setting grassmannian --n 4 "
                                        "--lambda 1,2 --mu 2,2")
              .exit_code == 2); // not weakly decreasing
    CHECK(testutil::run_command(kTool + " poset --setting grassmannian --n 4 "
                                        "--lambda 2,2")
              .exit_code == 2); // missing mu
    CHECK(testutil::run_command(kTool + " poset --setting bogus --n 4").exit_code ==
          2);
}

TEST_CASE("verification suites succeed and report") {
    const auto main_theorem = testutil::run_command(
        kTool + " verify --check main-theorem --max-n 5");
    CHECK(main_theorem.exit_code == 0);
    CHECK(main_theorem.output.find("main-theorem: PASS") != std::string::npos);

    const auto oracle = testutil::run_command(
        kTool + " verify --check rank-oracle --max-n 4 --trials 20");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("rank-oracle: PASS") != std::string::npos);

    const auto axioms = testutil::run_command(
        kTool + " verify --check order-axioms --max-n 4");
    CHECK(axioms.exit_code == 0);

    const auto slice = testutil::run_command(
        kTool + " verify --check slice --max-n 3 --trials 20");
    CHECK(slice.exit_code == 0);
    CHECK(slice.output.find("slice: PASS") != std::string::npos);
}

TEST_CASE("the covers check reports the broken covering pair") {
    const auto covers = testutil::run_command(
        kTool + " verify --check covers --max-n 4");
    CHECK(covers.exit_code == 0);
    CHECK(covers.output.find("lambda=2,1 mu=2,1") != std::string::npos);
    CHECK(covers.output.find(
              "(14) < (12): cover in the cell, not in I_4; intermediates: (13)") !=
          std::string::npos);
}

TEST_CASE("verify flag validation") {
    CHECK(testutil::run_command(kTool + " verify --check bogus --max-n 3").exit_code ==
          2);
    CHECK(testutil::run_command(kTool + " verify --max-n 3").exit_code == 2);
    CHECK(testutil::run_command(kTool + " verify --check slice --max-n 7").exit_code ==
          2); // sweep cap without --unsafe-large
}

TEST_CASE("seeds come from flags or the environment") {
    const std::string args = " verify --check slice --max-n 2 --trials 5";
    const auto flagged = testutil::run_command(kTool + args + " --seed 777");
    const auto from_env =
        testutil::run_command("ORBIT_ATLAS_SEED=777 " + kTool + args);
    CHECK(flagged.exit_code == 0);
    CHECK(from_env.exit_code == 0);
    CHECK(flagged.output == from_env.output);
}

TEST_CASE("slice subcommand") {
    const auto symbolic = testutil::run_command(
        kTool + " slice --n 7 --lambda 4,4,2 --mu 3,3,1,1 --emit matrix");
    CHECK(symbolic.exit_code == 0);
    CHECK(symbolic.output == "0 0 t13 0 0 t16 t17\n"
                             "0 0 0 0 0 0 0\n"
                             "0 0 0 0 0 0 0\n"
                             "0 0 0 0 0 t46 t47\n"
                             "0 0 0 0 0 t56 t57\n"
                             "0 0 0 0 0 0 0\n"
                             "0 0 0 0 0 0 0\n");

    const auto identity = testutil::run_command(
        kTool +
        " slice --n 7 --lambda 4,4,2 --mu 3,3,1,1 --params all-zero --emit identify");
    CHECK(identity.exit_code == 0);
    CHECK(identity.output == "e\n");

    const auto generic = testutil::run_command(
        kTool +
        " slice --n 7 --lambda 4,4,2 --mu 3,3,1,1 --params generic --emit identify");
    CHECK(generic.exit_code == 0);
    CHECK(generic.output == "(13)(47)(56)\n");

    const auto subspaces = testutil::run_command(
        kTool + " slice --n 9 --lambda 5,4,2,1 --mu 4,4,4,1,1 --w 1-7,5-9 "
                "--emit subspaces");
    CHECK(subspaces.exit_code == 0);
    CHECK(subspaces.output == golden("canonical_pair_ex.txt"));

    const auto arcs_matrix = testutil::run_command(
        kTool + " slice --n 9 --lambda 5,4,2,1 --mu 4,4,4,1,1 --w 1-7,5-9 "
                "--emit matrix");
    CHECK(arcs_matrix.exit_code == 0);
    CHECK(arcs_matrix.output.find("0 0 0 0 0 0 1 0 0\n") == 0); // row of w_<

    const auto explicit_params = testutil::run_command(
        kTool + " slice --n 4 --lambda 2,2 --mu 2,2 --params 1,0,0,1 --emit identify");
    CHECK(explicit_params.exit_code == 0);
    CHECK(explicit_params.output == "(13)(24)\n");

    const auto wrong_count = testutil::run_command(
        kTool + " slice --n 4 --lambda 2,2 --mu 2,2 --params 1,2 --emit identify");
    CHECK(wrong_count.exit_code == 2);

    const auto inconsistent = testutil::run_command(
        kTool + " slice --n 4 --lambda 2,1 --mu 2,1 --w 1-3 --emit matrix");
    CHECK(inconsistent.exit_code == 2);
}

TEST_CASE("render subcommand") {
    const auto fig1 = testutil::run_command(
        kTool + " render --w 1-7,2-3,5-8 --n 8 --format ascii");
    CHECK(fig1.exit_code == 0);
    CHECK(fig1.output == golden("arcs_17_23_58.txt"));

    const auto fig3 = testutil::run_command(
        kTool + " render --w 1-7,5-9 --n 9 --lambda 5,4,2,1 --mu 4,4,4,1,1 "
                "--format ascii");
    CHECK(fig3.exit_code == 0);
    CHECK(fig3.output == golden("colored_17_59.txt"));

    const auto svg = testutil::run_command(
        kTool + " render --w 1-7,2-3,5-8 --n 8 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output == golden("arcs_17_23_58.svg"));

    const auto id2 = testutil::run_command(kTool + " render --w \"\" --n 2");
    CHECK(id2.exit_code == 0);
    CHECK(id2.output == "|  |\n*  *\n1  2\n");

    const auto inconsistent = testutil::run_command(
        kTool + " render --w 1-3 --n 4 --lambda 2,1 --mu 2,1");
    CHECK(inconsistent.exit_code == 2);
}

TEST_CASE("compare-orders reports") {
    const auto small = testutil::run_command(kTool + " compare-orders --max-n 2");
    CHECK(small.exit_code == 0);
    CHECK(small.output ==
          "compare-orders: n=1 Bruhat and adjoint orders coincide on I_1\n"
          "compare-orders: n=2 Bruhat and adjoint orders coincide on I_2\n");

    const auto larger = testutil::run_command(kTool + " compare-orders --max-n 4");
    CHECK(larger.exit_code == 0);
    CHECK(larger.output.find("orders differ") != std::string::npos);
    const auto again = testutil::run_command(kTool + " compare-orders --max-n 4");
    CHECK(larger.output == again.output);

    CHECK(testutil::run_command(kTool + " compare-orders --max-n 7").exit_code == 2);
}
