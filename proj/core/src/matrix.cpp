#include "orbitatlas/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

namespace orbitatlas {

Rational parse_rational(const std::string& text) {
    mpq_class value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw InputError("bad rational '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw InputError("zero denominator in rational '" + text + "'");
    }
    value.canonicalize();
    return value;
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows_ < 1 || cols_ < 1) {
        throw InputError("matrix dimensions must be positive, got " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    entries_.assign(static_cast<size_t>(rows_) * static_cast<size_t>(cols_),
                    Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

size_t RationalMatrix::index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw InputError("matrix index (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside " + std::to_string(rows_) +
                         "x" + std::to_string(cols_));
    }
    return static_cast<size_t>(i - 1) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j - 1);
}

const Rational& RationalMatrix::at(int i, int j) const { return entries_[index(i, j)]; }

void RationalMatrix::set(int i, int j, Rational value) {
    entries_[index(i, j)] = std::move(value);
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) {
        throw InputError("cannot multiply " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " by " + std::to_string(other.rows_) +
                         "x" + std::to_string(other.cols_));
    }
    RationalMatrix result(rows_, other.cols_);
    for (int i = 1; i <= rows_; ++i) {
        for (int k = 1; k <= cols_; ++k) {
            const Rational& left = at(i, k);
            if (left == 0) {
                continue;
            }
            for (int j = 1; j <= other.cols_; ++j) {
                result.set(i, j, result.at(i, j) + left * other.at(k, j));
            }
        }
    }
    return result;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r == 0; });
}

bool RationalMatrix::is_upper_triangular() const {
    for (int i = 2; i <= rows_; ++i) {
        for (int j = 1; j < std::min(i, cols_ + 1); ++j) {
            if (at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool RationalMatrix::is_strictly_upper_triangular() const {
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= std::min(i, cols_); ++j) {
            if (at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string RationalMatrix::to_text() const {
    std::ostringstream out;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) {
                out << ' ';
            }
            out << at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

RationalMatrix RationalMatrix::from_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::vector<Rational> row;
        std::string token;
        while (fields >> token) {
            row.push_back(parse_rational(token));
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw InputError("matrix text contains no rows");
    }
    const size_t cols = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw InputError("matrix text has ragged rows");
        }
    }
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) {
            m.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                  std::move(rows[i][j]));
        }
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    return os << m.to_text();
}

namespace {

// Fraction-free (Bareiss) elimination over the integers; column pivoting
// keeps the exact-division property when zero columns are skipped. Returns
// the rank of the column prefix 1..j in prefix_ranks[j] when requested.
int bareiss_rank(std::vector<mpz_class> m, int rows, int cols,
                 std::vector<int>* prefix_ranks = nullptr) {
    auto entry = [&m, cols](int i, int j) -> mpz_class& {
        return m[static_cast<size_t>(i) * static_cast<size_t>(cols) +
                 static_cast<size_t>(j)];
    };
    if (prefix_ranks) {
        prefix_ranks->assign(static_cast<size_t>(cols) + 1, 0);
    }
    mpz_class previous_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (entry(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row >= 0) {
            if (pivot_row != r) {
                for (int j = c; j < cols; ++j) {
                    std::swap(entry(pivot_row, j), entry(r, j));
                }
            }
            for (int i = r + 1; i < rows; ++i) {
                for (int j = c + 1; j < cols; ++j) {
                    entry(i, j) =
                        (entry(r, c) * entry(i, j) - entry(i, c) * entry(r, j)) /
                        previous_pivot;
                }
                entry(i, c) = 0;
            }
            previous_pivot = entry(r, c);
            ++r;
        }
        if (prefix_ranks) {
            (*prefix_ranks)[static_cast<size_t>(c) + 1] = r;
        }
        if (r == rows && !prefix_ranks) {
            break;
        }
        if (r == rows && prefix_ranks) {
            for (int j = c + 1; j < cols; ++j) {
                (*prefix_ranks)[static_cast<size_t>(j) + 1] = r;
            }
            break;
        }
    }
    return r;
}

std::vector<mpz_class> cleared_submatrix(const RationalMatrix& m, int first_row) {
    const int rows = m.rows() - first_row + 1;
    std::vector<mpz_class> cleared(static_cast<size_t>(rows) *
                                   static_cast<size_t>(m.cols()));
    for (int i = first_row; i <= m.rows(); ++i) {
        mpz_class lcm = 1;
        for (int j = 1; j <= m.cols(); ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        }
        for (int j = 1; j <= m.cols(); ++j) {
            const Rational& value = m.at(i, j);
            cleared[static_cast<size_t>(i - first_row) * static_cast<size_t>(m.cols()) +
                    static_cast<size_t>(j - 1)] =
                value.get_num() * (lcm / value.get_den());
        }
    }
    return cleared;
}

} // namespace

int rank(const RationalMatrix& m) {
    // Row scaling by the denominator lcm preserves rank and lands in Z.
    return bareiss_rank(cleared_submatrix(m, 1), m.rows(), m.cols());
}

RationalMatrix strict_upper_from_involution(const Involution& w) {
    const int n = w.size();
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        if (i < w(i)) {
            m.set(i, w(i), 1);
        }
    }
    return m;
}

bool is_square_zero(const RationalMatrix& x) {
    if (!x.is_square()) {
        throw InputError("square-zero test needs a square matrix");
    }
    return (x * x).is_zero();
}

RankTable southwest_rank_table(const RationalMatrix& x) {
    if (!x.is_square() || !x.is_strictly_upper_triangular()) {
        throw InputError("southwest rank table needs a strictly upper-triangular "
                         "square matrix");
    }
    const int n = x.rows();
    RankTable table(n);
    // One elimination per starting row i: processing columns left to right
    // makes the rank of every column prefix available along the way, which
    // is exactly r_{ij} = rank(rows i..n, columns 1..j).
    for (int i = 1; i < n; ++i) {
        std::vector<int> prefix_ranks;
        bareiss_rank(cleared_submatrix(x, i), n - i + 1, n, &prefix_ranks);
        for (int j = i + 1; j <= n; ++j) {
            table.set(i, j, prefix_ranks[static_cast<size_t>(j)]);
        }
    }
    return table;
}

RationalMatrix inverse_upper_triangular(const RationalMatrix& b) {
    if (!b.is_square() || !b.is_upper_triangular()) {
        throw InputError("inverse_upper_triangular needs an upper-triangular "
                         "square matrix");
    }
    const int n = b.rows();
    for (int i = 1; i <= n; ++i) {
        if (b.at(i, i) == 0) {
            throw InputError("matrix is singular: zero diagonal entry at " +
                             std::to_string(i));
        }
    }
    // Back substitution per identity column; the inverse is upper-triangular.
    RationalMatrix inv(n, n);
    for (int col = 1; col <= n; ++col) {
        for (int i = col; i >= 1; --i) {
            Rational sum = (i == col) ? Rational(1) : Rational(0);
            for (int k = i + 1; k <= col; ++k) {
                sum -= b.at(i, k) * inv.at(k, col);
            }
            inv.set(i, col, sum / b.at(i, i));
        }
    }
    return inv;
}

RationalMatrix conjugate(const RationalMatrix& b, const RationalMatrix& x) {
    if (!b.is_square() || !x.is_square() || b.rows() != x.rows()) {
        throw InputError("conjugation needs square matrices of equal size");
    }
    return b * x * inverse_upper_triangular(b);
}

RationalMatrix random_borel(int n, std::uint64_t seed) {
    if (n < 1) {
        throw InputError("random_borel needs n >= 1");
    }
    std::mt19937_64 gen(seed);
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        // Diagonal from {-3,-2,-1,1,2,3}; modulo reduction keeps the draw
        // reproducible across standard libraries.
        const int d = static_cast<int>(gen() % 6);
        m.set(i, i, d < 3 ? d - 3 : d - 2);
        for (int j = i + 1; j <= n; ++j) {
            m.set(i, j, static_cast<int>(gen() % 7) - 3);
        }
    }
    return m;
}

} // namespace orbitatlas
