#include "orbitatlas/slice.hpp"

#include <algorithm>
#include <random>

namespace orbitatlas {

Subspace Subspace::span(RationalMatrix basis) {
    if (rank(basis) != basis.cols()) {
        throw InputError("basis columns are linearly dependent");
    }
    const int ambient = basis.rows();
    return Subspace{ambient, std::move(basis)};
}

namespace {

RationalMatrix concat_columns(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) {
        throw InputError("cannot concatenate matrices with different row counts");
    }
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            out.set(i, j, a.at(i, j));
        }
        for (int j = 1; j <= b.cols(); ++j) {
            out.set(i, a.cols() + j, b.at(i, j));
        }
    }
    return out;
}

} // namespace

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient || a.dim() != b.dim()) {
        return false;
    }
    return rank(concat_columns(a.basis, b.basis)) == a.dim();
}

std::vector<int> flag_intersection_profile(const Subspace& v) {
    const int n = v.ambient;
    const int d = v.dim();
    std::vector<int> profile(static_cast<size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        // dim(V ∩ F_j) = dim V + j - rank([basis | e_1..e_j]).
        RationalMatrix flag(n, j);
        for (int c = 1; c <= j; ++c) {
            flag.set(c, c, 1);
        }
        profile[static_cast<size_t>(j)] = d + j - rank(concat_columns(v.basis, flag));
    }
    return profile;
}

Partition schubert_profile(const Subspace& v) {
    const std::vector<int> profile = flag_intersection_profile(v);
    std::vector<std::uint8_t> jumps(static_cast<size_t>(v.ambient), 0);
    for (int j = 1; j <= v.ambient; ++j) {
        jumps[static_cast<size_t>(j) - 1] = static_cast<std::uint8_t>(
            profile[static_cast<size_t>(j)] - profile[static_cast<size_t>(j) - 1]);
    }
    return partition_from_bitstring(BitString(std::move(jumps)), v.dim());
}

Subspace coordinate_subspace(const Partition& p) {
    const std::vector<int> positions = bitstring_from_partition(p).one_positions();
    if (positions.empty()) {
        throw InputError("coordinate subspace needs at least one basis vector");
    }
    RationalMatrix basis(p.ambient(), static_cast<int>(positions.size()));
    for (size_t c = 0; c < positions.size(); ++c) {
        basis.set(positions[c], static_cast<int>(c) + 1, 1);
    }
    return Subspace{p.ambient(), std::move(basis)};
}

SlicePoint::SlicePoint(Coloring c)
    : coloring_(std::move(c)), pairs_(coloring_.black_white_pairs()) {
    values_.assign(pairs_.size(), Rational(0));
}

size_t SlicePoint::slot(int i, int j) const {
    const auto it = std::find(pairs_.begin(), pairs_.end(), std::pair<int, int>{i, j});
    if (it == pairs_.end()) {
        throw InputError("(" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not a black-white pair of the coloring");
    }
    return static_cast<size_t>(it - pairs_.begin());
}

const Rational& SlicePoint::param(int i, int j) const { return values_[slot(i, j)]; }

void SlicePoint::set_param(int i, int j, Rational value) {
    values_[slot(i, j)] = std::move(value);
}

SlicePoint SlicePoint::arc_indicator(const ConsistentInvolution& cw) {
    SlicePoint p(cw.coloring);
    for (const auto& [i, j] : cw.w.arcs()) {
        p.set_param(i, j, 1);
    }
    return p;
}

SlicePoint SlicePoint::generic_primes(const Coloring& c) {
    static constexpr int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                     73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
    SlicePoint p(c);
    if (p.pairs_.size() > std::size(primes)) {
        throw CapacityError("generic prime assignment supports at most " +
                            std::to_string(std::size(primes)) + " parameters");
    }
    for (size_t s = 0; s < p.pairs_.size(); ++s) {
        p.values_[s] = primes[s];
    }
    return p;
}

SlicePoint SlicePoint::random(const Coloring& c, std::uint64_t seed) {
    // Zero-heavy pool so random points reach non-open orbits.
    static const Rational pool[] = {Rational(0),     Rational(0),    Rational(1),
                                    Rational(-1),    Rational(2),    Rational(3),
                                    Rational(1, 2),  Rational(-2),   Rational(5, 3),
                                    Rational(-1, 4), Rational(7),    Rational(0)};
    std::mt19937_64 gen(seed);
    SlicePoint p(c);
    for (size_t s = 0; s < p.pairs_.size(); ++s) {
        p.values_[s] = pool[gen() % std::size(pool)];
    }
    return p;
}

std::pair<Subspace, Subspace> canonical_pair(const ConsistentInvolution& cw,
                                             const Partition& lambda,
                                             const Partition& mu) {
    if (!(coloring_of(lambda, mu) == cw.coloring)) {
        throw InputError("involution coloring does not match coloring(lambda, mu)");
    }
    const BitString slambda = bitstring_from_partition(lambda);
    const int n = lambda.ambient();
    const std::vector<int> generators = slambda.one_positions();
    if (generators.empty()) {
        throw InputError("lambda has no one-bits; U would be the zero space");
    }
    RationalMatrix basis(n, static_cast<int>(generators.size()));
    for (size_t c = 0; c < generators.size(); ++c) {
        const int j = generators[c];
        basis.set(j, static_cast<int>(c) + 1, 1);
        if (cw.w(j) != j) {
            basis.set(cw.w(j), static_cast<int>(c) + 1, 1);
        }
    }
    return {Subspace{n, std::move(basis)}, coordinate_subspace(mu)};
}

std::pair<Subspace, Subspace> slice_subspaces(const SlicePoint& p,
                                              const Partition& lambda,
                                              const Partition& mu) {
    if (!(coloring_of(lambda, mu) == p.coloring())) {
        throw InputError("slice point coloring does not match coloring(lambda, mu)");
    }
    const Coloring& c = p.coloring();
    const BitString slambda = bitstring_from_partition(lambda);
    const int n = lambda.ambient();

    std::vector<int> generators; // grey positions with a lambda-bit, then whites
    for (int j = 1; j <= n; ++j) {
        if ((c.color(j) == Color::Grey && slambda.bit(j)) || c.color(j) == Color::White) {
            generators.push_back(j);
        }
    }
    if (generators.empty()) {
        throw InputError("lambda has no one-bits; U would be the zero space");
    }
    RationalMatrix basis(n, static_cast<int>(generators.size()));
    for (size_t col = 0; col < generators.size(); ++col) {
        const int j = generators[col];
        basis.set(j, static_cast<int>(col) + 1, 1);
        if (c.color(j) == Color::White) {
            for (int i = 1; i < j; ++i) {
                if (c.color(i) == Color::Black) {
                    basis.set(i, static_cast<int>(col) + 1, p.param(i, j));
                }
            }
        }
    }
    return {Subspace{n, std::move(basis)}, coordinate_subspace(mu)};
}

RationalMatrix slice_embed(const SlicePoint& p) {
    const int n = p.coloring().size();
    RationalMatrix m(n, n);
    const auto& pairs = p.pairs();
    const auto& values = p.params();
    for (size_t s = 0; s < pairs.size(); ++s) {
        m.set(pairs[s].first, pairs[s].second, values[s]);
    }
    return m;
}

Involution identify_orbit(const RationalMatrix& x) {
    if (!x.is_square() || !x.is_strictly_upper_triangular()) {
        throw InputError("orbit identification needs a strictly upper-triangular "
                         "square matrix");
    }
    if (!is_square_zero(x)) {
        throw InputError("orbit identification needs a square-zero matrix");
    }
    try {
        return involution_from_rank_table(southwest_rank_table(x));
    } catch (const ReconstructionError& e) {
        throw InternalError(std::string("southwestern rank table of a square-zero "
                                        "matrix failed to identify an orbit: ") +
                            e.what());
    }
}

} // namespace orbitatlas
