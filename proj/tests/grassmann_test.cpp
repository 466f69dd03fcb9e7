#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbitatlas/grassmann.hpp"

using namespace orbitatlas;

namespace {

Coloring coloring_from_digits(const std::string& digits) {
    std::vector<Color> colors;
    for (char ch : digits) {
        colors.push_back(static_cast<Color>(ch - '0'));
    }
    return Coloring(std::move(colors));
}

std::vector<Coloring> colorings_of_size(int n) {
    std::vector<Coloring> out;
    std::vector<Color> colors(static_cast<size_t>(n), Color::Black);
    while (true) {
        out.emplace_back(colors);
        int i = 0;
        while (i < n && colors[static_cast<size_t>(i)] == Color::White) {
            colors[static_cast<size_t>(i)] = Color::Black;
            ++i;
        }
        if (i == n) {
            break;
        }
        colors[static_cast<size_t>(i)] =
            static_cast<Color>(static_cast<int>(colors[static_cast<size_t>(i)]) + 1);
    }
    return out;
}

// Alternative greedy matching: repeatedly join the RIGHTMOST admissible
// black-white pair (only grey or already-matched vertices strictly between).
// Any admissible matching order must produce the same arcs as the stack pass.
std::vector<std::pair<int, int>> rightmost_greedy(const Coloring& c) {
    const int n = c.size();
    std::vector<bool> matched(static_cast<size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> arcs;
    while (true) {
        int best_black = 0;
        int best_white = 0;
        for (int w = n; w >= 1 && best_white == 0; --w) {
            if (c.color(w) != Color::White || matched[static_cast<size_t>(w)]) {
                continue;
            }
            for (int b = w - 1; b >= 1; --b) {
                if (c.color(b) == Color::Black && !matched[static_cast<size_t>(b)]) {
                    best_black = b;
                    best_white = w;
                    break;
                }
                if (c.color(b) != Color::Grey && !matched[static_cast<size_t>(b)]) {
                    break; // an unmatched white blocks the gap
                }
            }
        }
        if (best_white == 0) {
            break;
        }
        matched[static_cast<size_t>(best_black)] = true;
        matched[static_cast<size_t>(best_white)] = true;
        arcs.emplace_back(best_black, best_white);
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

} // namespace

TEST_CASE("partition lattice-path bit strings") {
    const Partition lambda({5, 4, 2, 1}, 4, 9);
    CHECK(bitstring_from_partition(lambda).to_string() == "010100101");
    const Partition mu({4, 4, 4, 1, 1}, 5, 9);
    CHECK(bitstring_from_partition(mu).to_string() == "011000111");

    // Zero partition: ones occupy positions 1..rows.
    CHECK(bitstring_from_partition(Partition({}, 3, 7)).to_string() == "1110000");
    CHECK(bitstring_from_partition(Partition({2, 2}, 2, 4)).to_string() == "0011");
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({3}, 1, 4), InputError);    // part exceeds box
    CHECK_THROWS_AS(Partition({1, 2}, 2, 4), InputError); // not decreasing
    CHECK_THROWS_AS(Partition({1, 1, 1}, 2, 5), InputError); // too many parts
    CHECK_THROWS_AS(Partition({-1}, 1, 3), InputError);
    CHECK(Partition({0, 0}, 2, 4) == Partition({}, 2, 4));
    CHECK(Partition::parse("", 2, 4).weight() == 0);
    CHECK_THROWS_AS(Partition::parse("2,x", 2, 4), InputError);
}

TEST_CASE("bit strings invert to partitions") {
    const BitString example({0, 1, 0, 1, 0, 0, 1, 0, 1});
    CHECK(partition_from_bitstring(example, 4) == Partition({5, 4, 2, 1}, 4, 9));
    CHECK(partition_from_bitstring(BitString({1, 1, 1, 0, 0}), 3) ==
          Partition({}, 3, 5));
    CHECK_THROWS_AS(partition_from_bitstring(example, 3), InputError);

    // Exhaustive round-trip over the 3x3 box.
    int seen = 0;
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int c = 0; c <= b; ++c) {
                const Partition p({a, b, c}, 3, 6);
                CHECK(partition_from_bitstring(bitstring_from_partition(p), 3) == p);
                ++seen;
            }
        }
    }
    CHECK(seen == 20);
}

TEST_CASE("colorings as componentwise sums") {
    const Partition lambda({5, 4, 2, 1}, 4, 9);
    const Partition mu({4, 4, 4, 1, 1}, 5, 9);
    CHECK(coloring_of(lambda, mu).to_string() == "021100212");

    CHECK(coloring_of(Partition({2, 1}, 2, 4), Partition({1}, 2, 4)).to_string() ==
          "1111");
    CHECK(coloring_of(Partition({1}, 2, 4), Partition({}, 2, 4)).to_string() ==
          "2110");

    // lambda = mu doubles the bit string: no grey positions.
    const Coloring doubled = coloring_of(Partition({2, 1}, 2, 4), Partition({2, 1}, 2, 4));
    CHECK(doubled.to_string() == "0202");

    CHECK_THROWS_AS(coloring_of(Partition({1}, 1, 3), Partition({1}, 1, 4)),
                    InputError);
}

TEST_CASE("every coloring splits into two bit strings") {
    for (int n = 1; n <= 5; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            std::vector<std::uint8_t> lambda_bits;
            std::vector<std::uint8_t> mu_bits;
            for (int i = 1; i <= n; ++i) {
                lambda_bits.push_back(c.color(i) == Color::White ? 1 : 0);
                mu_bits.push_back(c.color(i) != Color::Black ? 1 : 0);
            }
            const BitString sl(lambda_bits);
            const BitString sm(mu_bits);
            const Partition lambda = partition_from_bitstring(sl, sl.ones());
            const Partition mu = partition_from_bitstring(sm, sm.ones());
            CHECK(coloring_of(lambda, mu) == c);
        }
    }
}

TEST_CASE("consistent involutions of the worked cells") {
    const Partition two_two({2, 2}, 2, 4);
    const auto cell = enumerate_consistent(two_two, two_two);
    std::vector<std::string> cycles;
    for (const auto& cw : cell) {
        cycles.push_back(cw.w.cycles());
    }
    CHECK(cycles == std::vector<std::string>{"e", "(23)", "(24)", "(13)", "(13)(24)",
                                             "(14)", "(14)(23)"});

    CHECK(enumerate_consistent(Partition({2, 1}, 2, 4), Partition({1}, 2, 4)).size() ==
          1);
    CHECK(enumerate_consistent(Partition({1}, 2, 4), Partition({}, 2, 4)).size() == 1);
    CHECK(enumerate_consistent(Partition({2, 1}, 2, 4), Partition({2, 1}, 2, 4))
              .size() == 5);
}

TEST_CASE("consistency means black-to-white arcs, identity first") {
    for (int n = 1; n <= 5; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            const auto members = consistent_involutions(c);
            REQUIRE(!members.empty());
            CHECK(members.front().is_identity());
            for (const Involution& w : members) {
                for (const auto& [i, j] : w.arcs()) {
                    CHECK(c.color(i) == Color::Black);
                    CHECK(c.color(j) == Color::White);
                }
            }
        }
    }
    CHECK_THROWS_AS(ConsistentInvolution::make(Involution::parse("1-3", 4),
                                               coloring_from_digits("0202")),
                    InputError);
}

TEST_CASE("codimension of the running example") {
    const Partition lambda({5, 4, 2, 1}, 4, 9);
    const Partition mu({4, 4, 4, 1, 1}, 5, 9);
    const Coloring c = coloring_of(lambda, mu);
    const auto cw =
        ConsistentInvolution::make(Involution::parse("1-7,5-9", 9), c);
    CHECK(codimension(cw) == 4);
}

TEST_CASE("codimension extremes across all cells") {
    const Partition two_two({2, 2}, 2, 4);
    CHECK(codimension(min_orbit_involution(coloring_of(two_two, two_two))) == 4);

    for (int n = 1; n <= 6; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            const auto maximum = max_orbit_involution(c);
            CHECK(codimension(maximum) == 0);
            const auto minimum = min_orbit_involution(c);
            CHECK(minimum.w.is_identity());
            CHECK(codimension(minimum) ==
                  static_cast<int>(c.black_white_pairs().size()));
            // The open orbit is the unique one of codimension zero.
            for (const Involution& w : consistent_involutions(c)) {
                const ConsistentInvolution member{w, c};
                if (!(w == maximum.w)) {
                    CHECK(codimension(member) > 0);
                }
                CHECK(codimension(member) >= 0);
            }
        }
    }
}

TEST_CASE("minimal orbit codimension of the running example") {
    const Coloring c = coloring_from_digits("021100212");
    CHECK(codimension(min_orbit_involution(c)) == 7);
}

TEST_CASE("restricted rank tables") {
    const Coloring c = coloring_from_digits("0022");
    const auto id = ConsistentInvolution::make(Involution::identity(4), c);
    for (int count : restricted_rank_table(id).counts()) {
        CHECK(count == 0);
    }
    const auto nested = ConsistentInvolution::make(Involution::parse("1-4,2-3", 4), c);
    const RestrictedRankTable t = restricted_rank_table(nested);
    REQUIRE(t.pairs() ==
            std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(t.counts() == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("restricted tables are restrictions of the full tables") {
    for (int n = 1; n <= 5; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            for (const Involution& w : consistent_involutions(c)) {
                const RankTable full = rank_table(w);
                const RestrictedRankTable restricted =
                    restricted_rank_table(ConsistentInvolution{w, c});
                for (size_t s = 0; s < restricted.pairs().size(); ++s) {
                    const auto [i, j] = restricted.pairs()[s];
                    CHECK(restricted.counts()[s] == full.at(i, j));
                }
            }
        }
    }
}

TEST_CASE("restricted order basics") {
    const Coloring c = coloring_from_digits("0202");
    const auto id = ConsistentInvolution::make(Involution::identity(4), c);
    const auto w14 = ConsistentInvolution::make(Involution::parse("1-4", 4), c);
    const auto w12 = ConsistentInvolution::make(Involution::parse("1-2", 4), c);
    CHECK(restricted_leq(id, w14));
    CHECK(restricted_leq(id, w12));
    CHECK(restricted_leq(w14, w12));
    CHECK_FALSE(restricted_leq(w12, w14));
    // No intermediate element inside the cell.
    for (const Involution& w : consistent_involutions(c)) {
        const ConsistentInvolution member{w, c};
        if (restricted_leq(w14, member) && restricted_leq(member, w12)) {
            CHECK((w == w14.w || w == w12.w));
        }
    }
    const Coloring other = coloring_from_digits("0022");
    CHECK_THROWS_AS(
        restricted_leq(id, ConsistentInvolution::make(Involution::identity(4), other)),
        InputError);
}

TEST_CASE("restricted order reverses codimension strictly") {
    for (int n = 1; n <= 6; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            const auto members = consistent_involutions(c);
            for (const Involution& v : members) {
                const ConsistentInvolution cv{v, c};
                for (const Involution& w : members) {
                    if (v == w) {
                        continue;
                    }
                    const ConsistentInvolution cw{w, c};
                    if (restricted_leq(cv, cw)) {
                        CHECK(codimension(cv) > codimension(cw));
                    }
                }
            }
        }
    }
}

TEST_CASE("maximal orbit involutions from stack matching") {
    CHECK(max_orbit_involution(coloring_from_digits("0022")).w ==
          Involution::parse("1-4,2-3", 4));
    CHECK(max_orbit_involution(coloring_from_digits("021100212")).w ==
          Involution::parse("1-2,6-7,5-9", 9));
    CHECK(max_orbit_involution(coloring_from_digits("111")).w ==
          Involution::identity(3));
}

TEST_CASE("greedy matching is order-independent") {
    for (int n = 1; n <= 8; ++n) {
        for (const Coloring& c : colorings_of_size(n)) {
            CHECK(max_orbit_involution(c).w.arcs() == rightmost_greedy(c));
        }
    }
}

TEST_CASE("codimension is bounded by the cell dimension") {
    for (int n = 1; n <= 5; ++n) {
        for (const BitString& sl : all_bitstrings(n)) {
            for (const BitString& sm : all_bitstrings(n)) {
                const Partition lambda = partition_from_bitstring(sl, sl.ones());
                const Partition mu = partition_from_bitstring(sm, sm.ones());
                const Coloring c = coloring_of(lambda, mu);
                const int cell_dimension = lambda.weight() + mu.weight();
                for (const Involution& w : consistent_involutions(c)) {
                    const int d = codimension(ConsistentInvolution{w, c});
                    CHECK(d >= 0);
                    CHECK(d <= cell_dimension);
                }
            }
        }
    }
}

TEST_CASE("restriction theorem at small sizes") {
    const RestrictionReport report = verify_restriction_theorem(5);
    CHECK(report.pass);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.cells == 4 + 16 + 64 + 256 + 1024);

    // Degenerate cells with a single element pass trivially.
    CHECK(enumerate_consistent(Partition({2, 1}, 2, 4), Partition({1}, 2, 4)).size() ==
          1);
}

TEST_CASE("covering pairs that break in the ambient order") {
    const Partition two_one({2, 1}, 2, 4);
    const auto broken = covering_comparison(two_one, two_one);
    bool found = false;
    for (const BrokenCover& bc : broken) {
        if (bc.v == Involution::parse("1-4", 4) && bc.w == Involution::parse("1-2", 4)) {
            found = true;
            REQUIRE(bc.intermediates.size() == 1);
            CHECK(bc.intermediates[0] == Involution::parse("1-3", 4));
        }
    }
    CHECK(found);

    // All covers of the (2,2) cell survive in the ambient order.
    const Partition two_two({2, 2}, 2, 4);
    CHECK(covering_comparison(two_two, two_two).empty());

    // A single-element cell has no covers at all.
    CHECK(covering_comparison(Partition({2, 1}, 2, 4), Partition({1}, 2, 4)).empty());
}
