#pragma once

#include "orbitatlas/grassmann.hpp"
#include "orbitatlas/poset.hpp"

namespace orbitatlas {

struct OrbitPoset {
    Poset poset;
    OrbitPosetMetadata meta;
    std::vector<Involution> elements; // aligned with poset ids
};

/// The adjoint-order poset of all involutions of {1..n}, labelled by cycles,
/// with orbit dimensions as element values.
OrbitPoset melnikov_poset(int n);

/// The cell poset of involutions consistent with (lambda, mu), ordered by
/// the restricted rank criterion, with codimensions as element values.
OrbitPoset restricted_poset(const Partition& lambda, const Partition& mu);

/// Default DOT node text: cycles plus "dim d" or "codim d".
std::string orbit_label(const OrbitPoset& op, int id);

} // namespace orbitatlas
