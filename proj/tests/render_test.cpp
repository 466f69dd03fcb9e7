#include <doctest.h>

#include "orbitatlas/render.hpp"
#include "util.hpp"

using namespace orbitatlas;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(ORBIT_ATLAS_GOLDEN_DIR) + "/" + name;
}

Coloring example_coloring() {
    return coloring_of(Partition({5, 4, 2, 1}, 4, 9), Partition({4, 4, 4, 1, 1}, 5, 9));
}

} // namespace

TEST_CASE("ascii diagram of the eight-node example") {
    const Involution w = Involution::parse("1-7,2-3,5-8", 8);
    const std::string art = render_ascii(w);
    CHECK(art == testutil::read_file(golden_path("arcs_17_23_58.txt")));
    CHECK(art == render_ascii(w)); // deterministic
}

TEST_CASE("ascii diagram of the colored nine-node example") {
    const Involution w = Involution::parse("1-7,5-9", 9);
    const std::string art = render_ascii(w, example_coloring());
    CHECK(art == testutil::read_file(golden_path("colored_17_59.txt")));
    // Grey fixed points carry no half-line: column of node 3 stays blank
    // above the baseline.
    CHECK(art.find("4 crossings") == std::string::npos); // art only, no prose
}

TEST_CASE("identity diagrams show only half-lines") {
    CHECK(render_ascii(Involution::identity(2)) == "|  |\n*  *\n1  2\n");
    // All-grey coloring: nothing above the baseline.
    const Coloring grey(std::vector<Color>(3, Color::Grey));
    CHECK(render_ascii(Involution::identity(3), grey) == ".  .  .\n1  2  3\n");
}

TEST_CASE("svg rendering is deterministic and matches goldens") {
    const Involution fig1 = Involution::parse("1-7,2-3,5-8", 8);
    const std::string svg = render_svg(fig1);
    CHECK(svg == testutil::read_file(golden_path("arcs_17_23_58.svg")));

    const Involution fig3 = Involution::parse("1-7,5-9", 9);
    const std::string colored = render_svg(fig3, example_coloring());
    CHECK(colored == testutil::read_file(golden_path("colored_17_59.svg")));
    CHECK(colored.find("#aaaaaa") != std::string::npos); // grey vertices
    CHECK(colored.find("#ffffff") != std::string::npos); // white vertices
}

TEST_CASE("rendering rejects inconsistent colorings") {
    const Coloring c = coloring_of(Partition({2, 1}, 2, 4), Partition({2, 1}, 2, 4));
    CHECK_THROWS_AS(render_ascii(Involution::parse("1-3", 4), c), InputError);
    CHECK_THROWS_AS(render_svg(Involution::parse("1-3", 4), c), InputError);
}
