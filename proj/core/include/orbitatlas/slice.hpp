#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitatlas/grassmann.hpp"
#include "orbitatlas/matrix.hpp"

namespace orbitatlas {

/// A subspace of Q^n, presented by a basis matrix whose columns span it.
struct Subspace {
    int ambient = 0;
    RationalMatrix basis; // ambient x dim, full column rank

    int dim() const { return basis.cols(); }

    /// Validates column independence; throws InputError otherwise.
    static Subspace span(RationalMatrix basis);
};

/// Equality by mutual containment: equal dimensions and rank([A | B]) = dim.
bool subspace_equal(const Subspace& a, const Subspace& b);

/// dim(V ∩ <e_1..e_j>) for j = 0..n (index j in the returned vector).
std::vector<int> flag_intersection_profile(const Subspace& v);

/// The unique lambda with V in the Schubert cell X°_lambda of the standard
/// flag, recovered from the jump positions of the flag intersection profile.
Partition schubert_profile(const Subspace& v);

/// The coordinate subspace U_lambda spanned by the e_i at the one-bits of
/// the lattice path of lambda.
Subspace coordinate_subspace(const Partition& p);

/// A point of the affine slice: one exact rational per black-white pair of
/// the coloring.
class SlicePoint {
  public:
    /// All parameters zero.
    explicit SlicePoint(Coloring c);

    /// t_{ij} = 1 exactly on the arcs of the involution.
    static SlicePoint arc_indicator(const ConsistentInvolution& cw);

    /// Distinct small primes 2, 3, 5, ... assigned to parameter slots in
    /// order; a deterministic stand-in for a generic point.
    static SlicePoint generic_primes(const Coloring& c);

    /// Deterministic-from-seed draw from a small pool of rationals that
    /// includes zero, so lower orbits stay reachable.
    static SlicePoint random(const Coloring& c, std::uint64_t seed);

    const Coloring& coloring() const { return coloring_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int parameter_count() const { return static_cast<int>(pairs_.size()); }

    const Rational& param(int i, int j) const;
    void set_param(int i, int j, Rational value);
    const std::vector<Rational>& params() const { return values_; }

  private:
    size_t slot(int i, int j) const;
    Coloring coloring_;
    std::vector<std::pair<int, int>> pairs_; // lexicographic
    std::vector<Rational> values_;
};

/// The representative pair (U, W) of the orbit labelled by cw inside
/// X°_lambda x X°_mu: U has one generator per one-bit j of s(lambda), namely
/// e_j when j is fixed and e_{w(j)} + e_j otherwise; W = U_mu.
std::pair<Subspace, Subspace> canonical_pair(const ConsistentInvolution& cw,
                                             const Partition& lambda,
                                             const Partition& mu);

/// The slice pair (U(t), W): grey positions carrying a lambda-bit contribute
/// plain basis vectors, each white j contributes e_j + sum of t_{ij} e_i
/// over black i < j; W = U_mu is fixed.
std::pair<Subspace, Subspace> slice_subspaces(const SlicePoint& p,
                                              const Partition& lambda,
                                              const Partition& mu);

/// The matrix with entry (i, j) = t_{ij} on black-white pairs and zeros
/// elsewhere; always strictly upper-triangular with square zero.
RationalMatrix slice_embed(const SlicePoint& p);

/// The involution labelling the orbit of a strictly upper-triangular
/// square-zero matrix, via its southwestern rank table. A reconstruction
/// failure is an InternalError: every such matrix lies in some orbit.
Involution identify_orbit(const RationalMatrix& x);

} // namespace orbitatlas
