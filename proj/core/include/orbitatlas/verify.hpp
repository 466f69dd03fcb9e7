#pragma once

#include <cstdint>
#include <string>

namespace orbitatlas {

struct CheckResult {
    bool pass = true;
    std::string report; // deterministic, printable as-is
};

/// Exhaustive sweep of the restriction theorem: the cell order equals the
/// restriction of the adjoint order, over every (lambda, mu) for n <= max_n.
CheckResult check_main_theorem(int max_n);

/// Southwestern rank tables of w_< match the combinatorial arc-count tables
/// for n <= table_max_n, and stay invariant under `trials` random exact
/// B-conjugations per orbit for n <= conj_max_n.
CheckResult check_rank_oracle(int table_max_n, int conj_max_n, int trials,
                              std::uint64_t seed);

/// Slice checks per cell for n <= max_n: parameter counts, arc-indicator
/// points embedding onto w_<, generic points identifying the open orbit, and
/// random points landing inside the cell below the maximum.
CheckResult check_slice(int max_n, int trials, std::uint64_t seed);

/// Reports every covering pair of a cell poset that is not a covering pair
/// of I_n, with its intermediate elements; fails only if an intermediate
/// lies inside the cell (which the restriction theorem forbids).
CheckResult check_covers(int max_n);

/// Partial-order axioms for the adjoint posets and all cell posets up to
/// max_n, strict monotonicity of dim/codim along covers, uniqueness of the
/// extreme cell elements, and the observed cover-gap distribution.
CheckResult check_order_axioms(int max_n);

/// Compares the Bruhat order restricted to involutions against the adjoint
/// order for each n <= max_n, listing every differing ordered pair. Always
/// passes: this is a report, not an assertion.
CheckResult compare_orders(int max_n);

} // namespace orbitatlas
