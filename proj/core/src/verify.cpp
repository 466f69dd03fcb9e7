#include "orbitatlas/verify.hpp"

#include <map>
#include <sstream>

#include "orbitatlas/grassmann.hpp"
#include "orbitatlas/matrix.hpp"
#include "orbitatlas/orbit_posets.hpp"
#include "orbitatlas/slice.hpp"

namespace orbitatlas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Canonical (lambda, mu) for a coloring: lambda takes only the white bits,
/// mu takes white and grey bits.
std::pair<Partition, Partition> canonical_split(const Coloring& c) {
    const int n = c.size();
    std::vector<std::uint8_t> lambda_bits(static_cast<size_t>(n), 0);
    std::vector<std::uint8_t> mu_bits(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        if (c.color(i) == Color::White) {
            lambda_bits[static_cast<size_t>(i) - 1] = 1;
            mu_bits[static_cast<size_t>(i) - 1] = 1;
        } else if (c.color(i) == Color::Grey) {
            mu_bits[static_cast<size_t>(i) - 1] = 1;
        }
    }
    const BitString sl(std::move(lambda_bits));
    const BitString sm(std::move(mu_bits));
    return {partition_from_bitstring(sl, sl.ones()),
            partition_from_bitstring(sm, sm.ones())};
}

std::vector<Coloring> all_colorings(int n) {
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

} // namespace

CheckResult check_main_theorem(int max_n) {
    std::ostringstream out;
    out << "main-theorem: cell order vs restricted adjoint order, n <= " << max_n
        << "\n";
    const RestrictionReport report = verify_restriction_theorem(max_n);
    out << "main-theorem: swept " << report.cells << " (lambda, mu) cells, "
        << report.pairs << " ordered pairs\n";
    if (report.pass) {
        out << "main-theorem: PASS\n";
    } else {
        out << "main-theorem: FAIL counterexample "
            << report.counterexample->to_string() << "\n";
    }
    return CheckResult{report.pass, out.str()};
}

CheckResult check_rank_oracle(int table_max_n, int conj_max_n, int trials,
                              std::uint64_t seed) {
    std::ostringstream out;
    bool pass = true;
    for (int n = 1; n <= table_max_n && pass; ++n) {
        for (const Involution& w : enumerate_involutions(n)) {
            const RationalMatrix x = strict_upper_from_involution(w);
            if (!is_square_zero(x)) {
                out << "rank-oracle: FAIL " << w.cycles() << " at n=" << n
                    << ": w_< is not square-zero\n";
                pass = false;
                break;
            }
            if (!(southwest_rank_table(x) == rank_table(w))) {
                out << "rank-oracle: FAIL " << w.cycles() << " at n=" << n
                    << ": southwestern ranks differ from arc counts\n";
                pass = false;
                break;
            }
        }
        if (pass) {
            out << "rank-oracle: n=" << n << " southwestern ranks of w_< match "
                << "arc-count tables for all " << involution_count(n)
                << " involutions\n";
        }
    }
    std::uint64_t counter = 0;
    for (int n = 1; n <= conj_max_n && pass; ++n) {
        long checked = 0;
        for (const Involution& w : enumerate_involutions(n)) {
            const RationalMatrix x = strict_upper_from_involution(w);
            const RankTable expected = rank_table(w);
            for (int t = 0; t < trials && pass; ++t) {
                const RationalMatrix b =
                    random_borel(n, seed ^ splitmix64(counter++));
                const RationalMatrix conjugated = conjugate(b, x);
                ++checked;
                if (!(southwest_rank_table(conjugated) == expected)) {
                    out << "rank-oracle: FAIL conjugation changed the table of "
                        << w.cycles() << " at n=" << n << " trial " << t << "\n";
                    pass = false;
                } else if (!(identify_orbit(conjugated) == w)) {
                    out << "rank-oracle: FAIL conjugate of " << w.cycles()
                        << " identified as a different orbit at n=" << n << "\n";
                    pass = false;
                }
            }
        }
        if (pass) {
            out << "rank-oracle: n=" << n << " " << checked
                << " random B-conjugations left all tables invariant\n";
        }
    }
    out << (pass ? "rank-oracle: PASS\n" : "rank-oracle: FAIL\n");
    return CheckResult{pass, out.str()};
}

CheckResult check_slice(int max_n, int trials, std::uint64_t seed) {
    std::ostringstream out;
    bool pass = true;
    std::uint64_t counter = 0;
    for (int n = 1; n <= max_n && pass; ++n) {
        long cells = 0;
        long random_points = 0;
        const std::vector<BitString> bitstrings = all_bitstrings(n);
        for (const BitString& sl : bitstrings) {
            for (const BitString& sm : bitstrings) {
                if (!pass) {
                    break;
                }
                const Partition lambda = partition_from_bitstring(sl, sl.ones());
                const Partition mu = partition_from_bitstring(sm, sm.ones());
                const Coloring coloring = coloring_of(lambda, mu);
                ++cells;

                const ConsistentInvolution minimum = min_orbit_involution(coloring);
                const ConsistentInvolution maximum = max_orbit_involution(coloring);
                const SlicePoint origin{coloring};
                if (origin.parameter_count() != codimension(minimum)) {
                    out << "slice: FAIL parameter count "
                        << origin.parameter_count() << " != d(Id) = "
                        << codimension(minimum) << " for lambda="
                        << lambda.to_string() << " mu=" << mu.to_string() << "\n";
                    pass = false;
                    break;
                }

                for (const Involution& w : consistent_involutions(coloring)) {
                    const SlicePoint p =
                        SlicePoint::arc_indicator(ConsistentInvolution{w, coloring});
                    if (!(slice_embed(p) == strict_upper_from_involution(w))) {
                        out << "slice: FAIL arc-indicator point of " << w.cycles()
                            << " does not embed onto w_< (lambda="
                            << lambda.to_string() << " mu=" << mu.to_string()
                            << ")\n";
                        pass = false;
                        break;
                    }
                }
                if (!pass) {
                    break;
                }

                const bool degenerate = sl.ones() == 0 || sm.ones() == 0;
                const SlicePoint generic = SlicePoint::generic_primes(coloring);
                const RationalMatrix embedded = slice_embed(generic);
                if (!embedded.is_strictly_upper_triangular() ||
                    !is_square_zero(embedded)) {
                    out << "slice: FAIL generic point embeds outside the "
                        << "square-zero strictly upper matrices\n";
                    pass = false;
                    break;
                }
                if (!(identify_orbit(embedded) == maximum.w)) {
                    out << "slice: FAIL generic point of lambda="
                        << lambda.to_string() << " mu=" << mu.to_string()
                        << " identifies as "
                        << identify_orbit(embedded).cycles() << ", expected maximum "
                        << maximum.w.cycles() << "\n";
                    pass = false;
                    break;
                }
                if (!degenerate) {
                    const auto [u, wspace] = slice_subspaces(generic, lambda, mu);
                    if (!(schubert_profile(u) == lambda) ||
                        !(schubert_profile(wspace) == mu)) {
                        out << "slice: FAIL generic subspaces leave the Schubert "
                            << "cells of lambda=" << lambda.to_string()
                            << " mu=" << mu.to_string() << "\n";
                        pass = false;
                        break;
                    }
                }

                for (int t = 0; t < trials && pass; ++t) {
                    const SlicePoint p =
                        SlicePoint::random(coloring, seed ^ splitmix64(counter++));
                    const Involution identified = identify_orbit(slice_embed(p));
                    ++random_points;
                    if (!is_consistent(identified, coloring)) {
                        out << "slice: FAIL random point identified as "
                            << identified.cycles()
                            << " which is inconsistent with coloring "
                            << coloring.to_string() << "\n";
                        pass = false;
                        break;
                    }
                    const ConsistentInvolution cw{identified, coloring};
                    if (!restricted_leq(cw, maximum)) {
                        out << "slice: FAIL random point identified as "
                            << identified.cycles()
                            << " which is not below the maximum "
                            << maximum.w.cycles() << "\n";
                        pass = false;
                        break;
                    }
                    if (t == 0 && !degenerate) {
                        const auto [u, wspace] = slice_subspaces(p, lambda, mu);
                        const auto [cu, cwspace] = canonical_pair(cw, lambda, mu);
                        if (flag_intersection_profile(u) !=
                                flag_intersection_profile(cu) ||
                            flag_intersection_profile(wspace) !=
                                flag_intersection_profile(cwspace)) {
                            out << "slice: FAIL flag profiles of a random point "
                                << "differ from its canonical representative "
                                << "(lambda=" << lambda.to_string()
                                << " mu=" << mu.to_string() << ")\n";
                            pass = false;
                        }
                    }
                }
            }
            if (!pass) {
                break;
            }
        }
        if (pass) {
            out << "slice: n=" << n << " checked " << cells << " cells, "
                << random_points << " random points\n";
        }
    }
    out << (pass ? "slice: PASS\n" : "slice: FAIL\n");
    return CheckResult{pass, out.str()};
}

CheckResult check_covers(int max_n) {
    std::ostringstream out;
    bool pass = true;
    long broken_total = 0;
    for (int n = 1; n <= max_n && pass; ++n) {
        for (const Coloring& coloring : all_colorings(n)) {
            const auto [lambda, mu] = canonical_split(coloring);
            const std::vector<BrokenCover> broken = covering_comparison(lambda, mu);
            if (broken.empty()) {
                continue;
            }
            out << "covers: n=" << n << " coloring=" << coloring.to_string()
                << " lambda=" << lambda.to_string() << " mu=" << mu.to_string()
                << "\n";
            for (const BrokenCover& bc : broken) {
                ++broken_total;
                out << "  " << bc.v.cycles() << " < " << bc.w.cycles()
                    << ": cover in the cell, not in I_" << n << "; intermediates:";
                for (const Involution& c : bc.intermediates) {
                    out << " " << c.cycles();
                    if (is_consistent(c, coloring)) {
                        out << " [unexpected: intermediate lies in the cell]";
                        pass = false;
                    }
                }
                out << "\n";
            }
        }
    }
    out << "covers: " << broken_total
        << " covering pairs of cell posets are not covers of the ambient order\n";
    out << (pass ? "covers: PASS\n" : "covers: FAIL\n");
    return CheckResult{pass, out.str()};
}

CheckResult check_order_axioms(int max_n) {
    std::ostringstream out;
    bool pass = true;
    for (int n = 1; n <= max_n && pass; ++n) {
        std::map<int, long> gap_histogram;
        try {
            const OrbitPoset op = melnikov_poset(n);
            for (const auto& [a, b] : op.poset.covers()) {
                const int gap = op.meta.values[static_cast<size_t>(b)] -
                                op.meta.values[static_cast<size_t>(a)];
                if (gap < 1) {
                    out << "order-axioms: FAIL dimension does not increase "
                        << "strictly along cover " << op.poset.label(a) << " -> "
                        << op.poset.label(b) << " at n=" << n << "\n";
                    pass = false;
                }
                ++gap_histogram[gap];
            }
        } catch (const InputError& e) {
            out << "order-axioms: FAIL adjoint order at n=" << n << ": " << e.what()
                << "\n";
            pass = false;
        }
        if (!pass) {
            break;
        }
        out << "order-axioms: n=" << n << " adjoint poset valid; cover dimension "
            << "gaps:";
        for (const auto& [gap, count] : gap_histogram) {
            out << " " << gap << "x" << count;
        }
        out << "\n";

        long cell_posets = 0;
        for (const Coloring& coloring : all_colorings(n)) {
            const auto [lambda, mu] = canonical_split(coloring);
            try {
                const OrbitPoset op = restricted_poset(lambda, mu);
                ++cell_posets;
                for (const auto& [a, b] : op.poset.covers()) {
                    if (op.meta.values[static_cast<size_t>(a)] <=
                        op.meta.values[static_cast<size_t>(b)]) {
                        out << "order-axioms: FAIL codimension does not decrease "
                            << "strictly along cover " << op.poset.label(a) << " -> "
                            << op.poset.label(b) << " in coloring "
                            << coloring.to_string() << "\n";
                        pass = false;
                    }
                }
                // Unique extremes: the identity at the bottom, the stack
                // matching at the top.
                const Involution bottom = min_orbit_involution(coloring).w;
                const Involution top = max_orbit_involution(coloring).w;
                for (int a = 0; a < op.poset.size() && pass; ++a) {
                    bool is_min = true;
                    bool is_max = true;
                    for (int b = 0; b < op.poset.size(); ++b) {
                        is_min = is_min && op.poset.leq(a, b);
                        is_max = is_max && op.poset.leq(b, a);
                    }
                    if (is_min != (op.elements[static_cast<size_t>(a)] == bottom) ||
                        is_max != (op.elements[static_cast<size_t>(a)] == top)) {
                        out << "order-axioms: FAIL extremes of coloring "
                            << coloring.to_string() << " are not the designated "
                            << "minimum/maximum\n";
                        pass = false;
                    }
                }
            } catch (const InputError& e) {
                out << "order-axioms: FAIL cell order for coloring "
                    << coloring.to_string() << ": " << e.what() << "\n";
                pass = false;
            }
            if (!pass) {
                break;
            }
        }
        if (pass) {
            out << "order-axioms: n=" << n << " " << cell_posets
                << " cell posets valid with unique extremes\n";
        }
    }
    out << (pass ? "order-axioms: PASS\n" : "order-axioms: FAIL\n");
    return CheckResult{pass, out.str()};
}

CheckResult compare_orders(int max_n) {
    std::ostringstream out;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Involution> all = enumerate_involutions(n);
        std::vector<std::string> witnesses;
        for (const Involution& v : all) {
            for (const Involution& w : all) {
                const bool bruhat = bruhat_leq(v.map(), w.map());
                const bool melnikov = melnikov_leq(v, w);
                if (bruhat != melnikov) {
                    std::ostringstream line;
                    line << "  v=" << v.cycles() << " w=" << w.cycles()
                         << ": bruhat_leq=" << (bruhat ? "true" : "false")
                         << " melnikov_leq=" << (melnikov ? "true" : "false");
                    witnesses.push_back(line.str());
                }
            }
        }
        if (witnesses.empty()) {
            out << "compare-orders: n=" << n << " Bruhat and adjoint orders "
                << "coincide on I_" << n << "\n";
        } else {
            out << "compare-orders: n=" << n << " orders differ on "
                << witnesses.size() << " ordered pairs:\n";
            for (const std::string& line : witnesses) {
                out << line << "\n";
            }
        }
    }
    return CheckResult{true, out.str()};
}

} // namespace orbitatlas
