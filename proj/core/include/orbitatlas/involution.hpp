#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitatlas/errors.hpp"

namespace orbitatlas {

/// Largest n accepted by enumerate_involutions(); |I_12| = 140152 keeps
/// exhaustive sweeps at desk scale.
inline constexpr int kMaxEnumerationSize = 12;

/// A self-inverse permutation of {1..n}. All public indices are 1-based.
class Involution {
  public:
    /// Identity on {1..n}.
    static Involution identity(int n);

    /// From a 1-based one-line map; validates that it is an involution.
    static Involution from_map(std::vector<int> map);

    /// From a list of disjoint arcs (i, j), i < j; everything else is fixed.
    static Involution from_arcs(int n, std::span<const std::pair<int, int>> arcs);

    /// Parses the arc-list syntax "1-7,5-9"; the empty string is the identity.
    static Involution parse(const std::string& text, int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& map() const { return map_; }

    bool is_fixed(int i) const { return (*this)(i) == i; }
    bool is_identity() const;

    /// Arcs (i, w(i)) with i < w(i), ascending by left endpoint.
    std::vector<std::pair<int, int>> arcs() const;
    std::vector<int> fixed_points() const;
    int arc_count() const;

    /// Cycle notation: "e" for the identity, otherwise e.g. "(14)(23)";
    /// indices are space-separated once any of them needs two digits.
    std::string cycles() const;

    bool operator==(const Involution&) const = default;
    auto operator<=>(const Involution&) const = default;

  private:
    explicit Involution(std::vector<int> map) : map_(std::move(map)) {}
    std::vector<int> map_; // map_[i-1] = w(i)
};

/// Which fixed points carry vertical half-lines in an arc diagram.
enum class HalflinePolicy {
    AllFixed,    // nilpotent setting: every fixed point
    ColoredOnly, // colored setting: only black/white fixed points
};

/// Arc-diagram view of an involution: arcs and fixed points partition {1..n}.
struct ArcDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> fixed;
    HalflinePolicy policy = HalflinePolicy::AllFixed;
};

/// Upper-triangular table of arc counts r_{ij}, 1 <= i < j <= n.
/// Entries with i >= j read as zero.
class RankTable {
  public:
    explicit RankTable(int n);

    int size() const { return n_; }
    int at(int i, int j) const;
    void set(int i, int j, int value);

    /// Entrywise comparison over all i < j.
    bool leq(const RankTable& other) const;

    bool operator==(const RankTable&) const = default;

  private:
    size_t index(int i, int j) const;
    int n_;
    std::vector<int> r_;
};

/// All involutions of {1..n} in lexicographic order of the one-line map.
/// Throws CapacityError for n outside [1, kMaxEnumerationSize].
std::vector<Involution> enumerate_involutions(int n);

/// |I_n| by the recurrence a(n) = a(n-1) + (n-1) a(n-2).
std::uint64_t involution_count(int n);

ArcDiagram arc_diagram(const Involution& w,
                       HalflinePolicy policy = HalflinePolicy::AllFixed);

/// Crossings of a diagram with half-lines at the given fixed points:
/// arc/arc pairs (i,j),(k,l) with i<k<j<l plus arc/half-line pairs with the
/// half-line strictly under the arc. Half-line/half-line pairs never count.
int crossing_count(const ArcDiagram& d, std::span<const int> halflines);

/// #arcs * (#arcs + #half-lines) - #crossings, with a half-line at every
/// fixed point.
int orbit_dimension(const Involution& w);

/// r_{ij} = number of arcs (i', j') with i <= i' < j' <= j.
RankTable rank_table(const Involution& w);

/// v <= w in the adjoint (Melnikov) order: entrywise rank-table comparison.
bool melnikov_leq(const Involution& v, const Involution& w);

/// Inverts rank_table(); throws ReconstructionError if the table does not
/// arise from an involution.
Involution involution_from_rank_table(const RankTable& r);

/// Bruhat order on arbitrary permutations of equal size (1-based one-line
/// maps): u <= v iff every northwest-corner rank of u dominates that of v.
bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v);

} // namespace orbitatlas
