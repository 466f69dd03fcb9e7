#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitatlas/involution.hpp"

namespace orbitatlas {

/// A partition inside a rows x (ambient - rows) box. The all-zero partition
/// is valid; parts are stored weakly decreasing with trailing zeros kept
/// implicit.
class Partition {
  public:
    Partition(std::vector<int> parts, int rows, int ambient);

    /// Parses "5,4,2,1"; the empty string is the zero partition.
    static Partition parse(const std::string& text, int rows, int ambient);

    const std::vector<int>& parts() const { return parts_; }
    int part(int row) const; // 1-based row, zero beyond stored parts
    int rows() const { return rows_; }
    int ambient() const { return ambient_; }
    int weight() const;
    std::string to_string() const; // "5,4,2,1"; "0" for the zero partition

    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> parts_; // trailing zeros trimmed
    int rows_;
    int ambient_;
};

/// A 0/1 sequence of length n; the lattice-path encoding of a partition has
/// exactly `rows` ones.
class BitString {
  public:
    explicit BitString(std::vector<std::uint8_t> bits);

    int size() const { return static_cast<int>(bits_.size()); }
    int bit(int i) const { return bits_[static_cast<size_t>(i) - 1]; }
    int ones() const;
    std::vector<int> one_positions() const;
    std::string to_string() const; // e.g. "010100101"

    bool operator==(const BitString&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

enum class Color : std::uint8_t { Black = 0, Grey = 1, White = 2 };

/// The componentwise sum s(lambda) + s(mu), rendered black/grey/white.
class Coloring {
  public:
    explicit Coloring(std::vector<Color> colors);
    static Coloring from_partitions(const Partition& lambda, const Partition& mu);

    int size() const { return static_cast<int>(colors_.size()); }
    Color color(int i) const { return colors_[static_cast<size_t>(i) - 1]; }
    const std::vector<Color>& colors() const { return colors_; }

    std::vector<int> positions(Color c) const;
    /// Pairs (i, j), i < j, with i black and j white, in lexicographic order.
    std::vector<std::pair<int, int>> black_white_pairs() const;
    std::string to_string() const; // digits, e.g. "021100212"

    bool operator==(const Coloring&) const = default;

  private:
    std::vector<Color> colors_;
};

/// An involution whose every arc runs black -> white in a fixed coloring.
struct ConsistentInvolution {
    Involution w;
    Coloring coloring;

    /// Validates arc colors; throws InputError otherwise.
    static ConsistentInvolution make(Involution w, Coloring coloring);
};

bool is_consistent(const Involution& w, const Coloring& c);

/// Lattice-path bit string of a partition: bit i is set iff i is among
/// part(rows)+1, part(rows-1)+2, ..., part(1)+rows.
BitString bitstring_from_partition(const Partition& p);

/// Inverse of bitstring_from_partition; requires exactly `rows` ones.
Partition partition_from_bitstring(const BitString& s, int rows);

Coloring coloring_of(const Partition& lambda, const Partition& mu);

/// All involutions consistent with the coloring, in lexicographic order of
/// the one-line map (so the identity always comes first).
std::vector<Involution> consistent_involutions(const Coloring& c);
std::vector<ConsistentInvolution> enumerate_consistent(const Partition& lambda,
                                                       const Partition& mu);

/// Orbit codimension d(w): crossings of the colored diagram (half-lines only
/// at black/white fixed points) plus black-before-white fixed pairs.
int codimension(const ConsistentInvolution& cw);

/// Arc counts restricted to black-white index pairs.
class RestrictedRankTable {
  public:
    RestrictedRankTable(std::vector<std::pair<int, int>> pairs, std::vector<int> counts);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& counts() const { return counts_; }
    bool leq(const RestrictedRankTable& other) const;

    bool operator==(const RestrictedRankTable&) const = default;

  private:
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> counts_;
};

RestrictedRankTable restricted_rank_table(const ConsistentInvolution& cw);

/// v <= w in the cell order: entrywise comparison over black-white pairs.
/// Requires equal colorings.
bool restricted_leq(const ConsistentInvolution& cv, const ConsistentInvolution& cw);

/// The unique maximal element: stack-matching black against white, ignoring
/// grey; its codimension is zero.
ConsistentInvolution max_orbit_involution(const Coloring& c);

/// The unique minimal element: the identity, whose codimension equals the
/// number of black-before-white pairs.
ConsistentInvolution min_orbit_involution(const Coloring& c);

struct RestrictionCounterexample {
    int n = 0;
    BitString lambda_bits;
    BitString mu_bits;
    Involution v;
    Involution w;
    bool restricted = false; // restricted_leq(v, w)
    bool melnikov = false;   // melnikov_leq(v, w)
    std::string to_string() const;
};

struct RestrictionReport {
    bool pass = true;
    long cells = 0;
    long pairs = 0;
    std::optional<RestrictionCounterexample> counterexample;
};

/// Exhaustively checks that the cell order equals the restriction of the
/// adjoint order, over every bit-string pair (that is, every k, m, lambda,
/// mu) for each n <= n_max. A failure is reported, never thrown.
RestrictionReport verify_restriction_theorem(int n_max);

struct BrokenCover {
    Involution v;
    Involution w;
    std::vector<Involution> intermediates; // elements strictly between in I_n
};

/// Covering pairs of the cell poset that are not covering pairs of I_n,
/// each with its intermediate elements in I_n.
std::vector<BrokenCover> covering_comparison(const Partition& lambda,
                                             const Partition& mu);

/// All bit strings of length n (2^n of them), in binary counting order;
/// sweeping pairs of them covers every (k, lambda) x (m, mu) cell.
std::vector<BitString> all_bitstrings(int n);

} // namespace orbitatlas
