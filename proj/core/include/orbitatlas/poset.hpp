#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orbitatlas/errors.hpp"

namespace orbitatlas {

/// A finite poset over indexed, opaque labels: the full order table plus its
/// transitive reduction. Partial-order axioms are validated at construction.
class Poset {
  public:
    Poset() = default; // empty; populate via build_poset

    friend Poset build_poset(std::vector<std::string> labels,
                             const std::function<bool(int, int)>& leq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }

    bool leq(int a, int b) const {
        return table_[static_cast<size_t>(a) * labels_.size() + static_cast<size_t>(b)];
    }

    /// Covering pairs (a, b), a covered by b, sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool operator==(const Poset&) const = default;

  private:
    std::vector<std::string> labels_;
    std::vector<bool> table_; // row-major leq
    std::vector<std::pair<int, int>> covers_;
};

/// Materializes the comparator into a validated Poset; throws InputError with
/// the offending pair or triple if reflexivity, antisymmetry, or transitivity
/// fails.
Poset build_poset(std::vector<std::string> labels,
                  const std::function<bool(int, int)>& leq);

/// The covering pairs (transitive reduction) of a poset.
std::vector<std::pair<int, int>> hasse(const Poset& p);

/// Rebuilds the order table as the reflexive-transitive closure of a cover
/// list; used by the JSON parser and the reduction/closure round-trip tests.
Poset poset_from_covers(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& covers);

/// DOT digraph with covers as edges (small -> large), deterministic node
/// order, and node text supplied by the labeler.
std::string export_dot(const Poset& p, const std::function<std::string(int)>& labeler);

/// Domain metadata carried by the poset exchange format.
struct OrbitPosetMetadata {
    std::string setting; // "nilpotent" or "grassmannian"
    int n = 0;
    std::vector<int> lambda; // grassmannian only
    std::vector<int> mu;     // grassmannian only
    std::vector<std::vector<std::pair<int, int>>> pairs; // arcs per element
    std::vector<int> values; // dim (nilpotent) or codim (grassmannian)
};

/// JSON document: { "setting", "n", ["lambda", "mu",] "elements": [ { "id",
/// "pairs", "dim"|"codim" } ], "covers": [[a, b], ...] }, covers oriented
/// small -> large.
std::string export_json(const Poset& p, const OrbitPosetMetadata& meta);

struct ParsedPosetDocument {
    Poset poset;
    OrbitPosetMetadata meta;
};

/// Round-trip parser for export_json output.
ParsedPosetDocument parse_poset_json(const std::string& text);

} // namespace orbitatlas
