#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orbitatlas/involution.hpp"

namespace orbitatlas {

using Rational = mpq_class;

/// Parses "p/q" or "p" and canonicalizes; throws InputError on bad syntax or
/// zero denominator.
Rational parse_rational(const std::string& text);

/// Dense matrix of exact rationals; no floating point anywhere. Indices are
/// 1-based like everything else in the public API.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols); // zero-filled
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const;
    void set(int i, int j, Rational value);

    RationalMatrix operator*(const RationalMatrix& other) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_upper_triangular() const;          // zero below the diagonal
    bool is_strictly_upper_triangular() const; // zero on and below the diagonal

    bool operator==(const RationalMatrix&) const = default;

    /// One row per line, entries space-separated; integers print without the
    /// "/1" suffix.
    std::string to_text() const;
    static RationalMatrix from_text(const std::string& text);

  private:
    size_t index(int i, int j) const;
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix.
int rank(const RationalMatrix& m);

/// The strictly upper matrix w_<: entry (i, j) = 1 iff w(i) = j and i < j.
RationalMatrix strict_upper_from_involution(const Involution& w);

/// Whether X * X vanishes exactly; requires a square matrix.
bool is_square_zero(const RationalMatrix& x);

/// r_{ij} = rank of the submatrix with rows i..n and columns 1..j, for
/// i < j. Requires a strictly upper-triangular square matrix.
RankTable southwest_rank_table(const RationalMatrix& x);

/// Exact inverse of an invertible upper-triangular matrix.
RationalMatrix inverse_upper_triangular(const RationalMatrix& b);

/// b X b^{-1} for invertible upper-triangular b.
RationalMatrix conjugate(const RationalMatrix& b, const RationalMatrix& x);

/// Deterministic-from-seed invertible upper-triangular matrix with integer
/// entries in [-3, 3] and nonzero diagonal.
RationalMatrix random_borel(int n, std::uint64_t seed);

} // namespace orbitatlas
