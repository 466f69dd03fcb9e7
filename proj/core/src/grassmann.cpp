#include "orbitatlas/grassmann.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace orbitatlas {

Partition::Partition(std::vector<int> parts, int rows, int ambient)
    : parts_(std::move(parts)), rows_(rows), ambient_(ambient) {
    if (rows_ < 0 || ambient_ < rows_) {
        throw InputError("partition box needs 0 <= rows <= ambient, got rows=" +
                         std::to_string(rows_) + " ambient=" + std::to_string(ambient_));
    }
    if (static_cast<int>(parts_.size()) > rows_) {
        throw InputError("partition has more than rows=" + std::to_string(rows_) +
                         " parts");
    }
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw InputError("partition parts must be non-negative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InputError("partition parts must be weakly decreasing");
        }
    }
    if (!parts_.empty() && parts_[0] > ambient_ - rows_) {
        throw InputError("part " + std::to_string(parts_[0]) + " exceeds box width " +
                         std::to_string(ambient_ - rows_));
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

Partition Partition::parse(const std::string& text, int rows, int ambient) {
    std::vector<int> parts;
    std::string_view rest(text);
    while (!rest.empty()) {
        const size_t comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        rest = (comma == std::string_view::npos) ? std::string_view{}
                                                 : rest.substr(comma + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw InputError("bad partition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
    }
    return Partition(std::move(parts), rows, ambient);
}

int Partition::part(int row) const {
    if (row < 1 || row > rows_) {
        throw InputError("partition row " + std::to_string(row) + " outside 1.." +
                         std::to_string(rows_));
    }
    if (row > static_cast<int>(parts_.size())) {
        return 0;
    }
    return parts_[static_cast<size_t>(row) - 1];
}

int Partition::weight() const {
    int sum = 0;
    for (int p : parts_) {
        sum += p;
    }
    return sum;
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "0";
    }
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << parts_[i];
    }
    return out.str();
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
        if (b > 1) {
            throw InputError("bit string entries must be 0 or 1");
        }
    }
    if (bits_.empty()) {
        throw InputError("bit string must be non-empty");
    }
}

int BitString::ones() const {
    int count = 0;
    for (std::uint8_t b : bits_) {
        count += b;
    }
    return count;
}

std::vector<int> BitString::one_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i) {
        if (bit(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) {
        throw InputError("coloring must be non-empty");
    }
}

Coloring Coloring::from_partitions(const Partition& lambda, const Partition& mu) {
    if (lambda.ambient() != mu.ambient()) {
        throw InputError("colorings need equal ambient sizes, got " +
                         std::to_string(lambda.ambient()) + " and " +
                         std::to_string(mu.ambient()));
    }
    const BitString sl = bitstring_from_partition(lambda);
    const BitString sm = bitstring_from_partition(mu);
    std::vector<Color> colors(static_cast<size_t>(sl.size()));
    for (int i = 1; i <= sl.size(); ++i) {
        colors[static_cast<size_t>(i) - 1] = static_cast<Color>(sl.bit(i) + sm.bit(i));
    }
    return Coloring(std::move(colors));
}

std::vector<int> Coloring::positions(Color c) const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i) {
        if (color(i) == c) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Coloring::black_white_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= size(); ++i) {
        if (color(i) != Color::Black) {
            continue;
        }
        for (int j = i + 1; j <= size(); ++j) {
            if (color(j) == Color::White) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::string Coloring::to_string() const {
    std::string out;
    out.reserve(colors_.size());
    for (Color c : colors_) {
        out.push_back(static_cast<char>('0' + static_cast<int>(c)));
    }
    return out;
}

ConsistentInvolution ConsistentInvolution::make(Involution w, Coloring coloring) {
    if (w.size() != coloring.size()) {
        throw InputError("involution size " + std::to_string(w.size()) +
                         " does not match coloring size " +
                         std::to_string(coloring.size()));
    }
    if (!is_consistent(w, coloring)) {
        throw InputError("involution " + w.cycles() +
                         " has an arc that does not run black -> white in coloring " +
                         coloring.to_string());
    }
    return ConsistentInvolution{std::move(w), std::move(coloring)};
}

bool is_consistent(const Involution& w, const Coloring& c) {
    if (w.size() != c.size()) {
        return false;
    }
    for (const auto& [i, j] : w.arcs()) {
        if (c.color(i) != Color::Black || c.color(j) != Color::White) {
            return false;
        }
    }
    return true;
}

BitString bitstring_from_partition(const Partition& p) {
    std::vector<std::uint8_t> bits(static_cast<size_t>(p.ambient()), 0);
    for (int r = 1; r <= p.rows(); ++r) {
        const int position = p.part(p.rows() - r + 1) + r;
        bits[static_cast<size_t>(position) - 1] = 1;
    }
    return BitString(std::move(bits));
}

Partition partition_from_bitstring(const BitString& s, int rows) {
    if (s.ones() != rows) {
        throw InputError("bit string has " + std::to_string(s.ones()) +
                         " ones; expected rows=" + std::to_string(rows));
    }
    const std::vector<int> positions = s.one_positions();
    std::vector<int> parts(static_cast<size_t>(rows), 0);
    for (int r = 1; r <= rows; ++r) {
        parts[static_cast<size_t>(rows - r)] = positions[static_cast<size_t>(r) - 1] - r;
    }
    return Partition(std::move(parts), rows, s.size());
}

Coloring coloring_of(const Partition& lambda, const Partition& mu) {
    return Coloring::from_partitions(lambda, mu);
}

std::vector<Involution> consistent_involutions(const Coloring& c) {
    std::vector<Involution> out;
    for (Involution& w : enumerate_involutions(c.size())) {
        if (is_consistent(w, c)) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<ConsistentInvolution> enumerate_consistent(const Partition& lambda,
                                                       const Partition& mu) {
    const Coloring c = coloring_of(lambda, mu);
    std::vector<ConsistentInvolution> out;
    for (Involution& w : consistent_involutions(c)) {
        out.push_back(ConsistentInvolution{std::move(w), c});
    }
    return out;
}

namespace {

std::vector<int> colored_halflines(const Involution& w, const Coloring& c) {
    std::vector<int> halflines;
    for (int i : w.fixed_points()) {
        if (c.color(i) != Color::Grey) {
            halflines.push_back(i);
        }
    }
    return halflines;
}

} // namespace

int codimension(const ConsistentInvolution& cw) {
    const ArcDiagram d = arc_diagram(cw.w, HalflinePolicy::ColoredOnly);
    const std::vector<int> halflines = colored_halflines(cw.w, cw.coloring);
    int at_infinity = 0;
    for (size_t a = 0; a < halflines.size(); ++a) {
        for (size_t b = a + 1; b < halflines.size(); ++b) {
            if (cw.coloring.color(halflines[a]) == Color::Black &&
                cw.coloring.color(halflines[b]) == Color::White) {
                ++at_infinity;
            }
        }
    }
    return crossing_count(d, halflines) + at_infinity;
}

RestrictedRankTable::RestrictedRankTable(std::vector<std::pair<int, int>> pairs,
                                         std::vector<int> counts)
    : pairs_(std::move(pairs)), counts_(std::move(counts)) {
    if (pairs_.size() != counts_.size()) {
        throw InputError("restricted table needs one count per pair");
    }
}

bool RestrictedRankTable::leq(const RestrictedRankTable& other) const {
    if (pairs_ != other.pairs_) {
        throw InputError("restricted tables live over different black-white pairs");
    }
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] > other.counts_[i]) {
            return false;
        }
    }
    return true;
}

RestrictedRankTable restricted_rank_table(const ConsistentInvolution& cw) {
    const RankTable full = rank_table(cw.w);
    std::vector<std::pair<int, int>> pairs = cw.coloring.black_white_pairs();
    std::vector<int> counts;
    counts.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        counts.push_back(full.at(i, j));
    }
    return RestrictedRankTable(std::move(pairs), std::move(counts));
}

bool restricted_leq(const ConsistentInvolution& cv, const ConsistentInvolution& cw) {
    if (!(cv.coloring == cw.coloring)) {
        throw InputError("restricted_leq needs a shared coloring");
    }
    return restricted_rank_table(cv).leq(restricted_rank_table(cw));
}

ConsistentInvolution max_orbit_involution(const Coloring& c) {
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> open_blacks;
    for (int i = 1; i <= c.size(); ++i) {
        if (c.color(i) == Color::Black) {
            open_blacks.push_back(i);
        } else if (c.color(i) == Color::White && !open_blacks.empty()) {
            arcs.emplace_back(open_blacks.back(), i);
            open_blacks.pop_back();
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return ConsistentInvolution{Involution::from_arcs(c.size(), arcs), c};
}

ConsistentInvolution min_orbit_involution(const Coloring& c) {
    return ConsistentInvolution{Involution::identity(c.size()), c};
}

std::string RestrictionCounterexample::to_string() const {
    std::ostringstream out;
    out << "n=" << n << " s(lambda)=" << lambda_bits.to_string()
        << " s(mu)=" << mu_bits.to_string() << " v=" << v.cycles()
        << " w=" << w.cycles() << " restricted_leq=" << (restricted ? "true" : "false")
        << " melnikov_leq=" << (melnikov ? "true" : "false");
    return out.str();
}

std::vector<BitString> all_bitstrings(int n) {
    if (n < 1 || n > 30) {
        throw InputError("bit-string sweep supports 1 <= n <= 30");
    }
    std::vector<BitString> out;
    out.reserve(static_cast<size_t>(1) << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint8_t> bits(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            bits[static_cast<size_t>(i)] = (mask >> i) & 1u;
        }
        out.emplace_back(std::move(bits));
    }
    return out;
}

RestrictionReport verify_restriction_theorem(int n_max) {
    RestrictionReport report;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Involution> all = enumerate_involutions(n);
        std::vector<RankTable> tables;
        tables.reserve(all.size());
        for (const Involution& w : all) {
            tables.push_back(rank_table(w));
        }
        std::vector<std::vector<bool>> melnikov(all.size(),
                                                std::vector<bool>(all.size(), false));
        for (size_t a = 0; a < all.size(); ++a) {
            for (size_t b = 0; b < all.size(); ++b) {
                melnikov[a][b] = tables[a].leq(tables[b]);
            }
        }
        const std::vector<BitString> bitstrings = all_bitstrings(n);
        for (const BitString& sl : bitstrings) {
            for (const BitString& sm : bitstrings) {
                std::vector<Color> colors(static_cast<size_t>(n));
                for (int i = 1; i <= n; ++i) {
                    colors[static_cast<size_t>(i) - 1] =
                        static_cast<Color>(sl.bit(i) + sm.bit(i));
                }
                const Coloring coloring{std::move(colors)};
                const auto bw_pairs = coloring.black_white_pairs();
                std::vector<size_t> members;
                for (size_t a = 0; a < all.size(); ++a) {
                    if (is_consistent(all[a], coloring)) {
                        members.push_back(a);
                    }
                }
                ++report.cells;
                for (size_t a : members) {
                    for (size_t b : members) {
                        bool restricted = true;
                        for (const auto& [i, j] : bw_pairs) {
                            if (tables[a].at(i, j) > tables[b].at(i, j)) {
                                restricted = false;
                                break;
                            }
                        }
                        ++report.pairs;
                        if (restricted != melnikov[a][b]) {
                            report.pass = false;
                            report.counterexample = RestrictionCounterexample{
                                n, sl, sm, all[a], all[b], restricted, melnikov[a][b]};
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

std::vector<BrokenCover> covering_comparison(const Partition& lambda,
                                             const Partition& mu) {
    const Coloring coloring = coloring_of(lambda, mu);
    const int n = coloring.size();
    const std::vector<Involution> cell = consistent_involutions(coloring);
    const std::vector<Involution> all = enumerate_involutions(n);

    std::vector<RestrictedRankTable> restricted;
    restricted.reserve(cell.size());
    for (const Involution& w : cell) {
        restricted.push_back(restricted_rank_table(ConsistentInvolution{w, coloring}));
    }
    auto cell_leq = [&](size_t a, size_t b) { return restricted[a].leq(restricted[b]); };

    std::vector<RankTable> tables;
    tables.reserve(all.size());
    for (const Involution& w : all) {
        tables.push_back(rank_table(w));
    }

    std::vector<BrokenCover> out;
    for (size_t a = 0; a < cell.size(); ++a) {
        for (size_t b = 0; b < cell.size(); ++b) {
            if (a == b || !cell_leq(a, b)) {
                continue;
            }
            bool cover_in_cell = true;
            for (size_t c = 0; c < cell.size() && cover_in_cell; ++c) {
                if (c != a && c != b && cell_leq(a, c) && cell_leq(c, b)) {
                    cover_in_cell = false;
                }
            }
            if (!cover_in_cell) {
                continue;
            }
            std::vector<Involution> intermediates;
            size_t ia = all.size();
            size_t ib = all.size();
            for (size_t c = 0; c < all.size(); ++c) {
                if (all[c] == cell[a]) {
                    ia = c;
                }
                if (all[c] == cell[b]) {
                    ib = c;
                }
            }
            for (size_t c = 0; c < all.size(); ++c) {
                if (c != ia && c != ib && tables[ia].leq(tables[c]) &&
                    tables[c].leq(tables[ib])) {
                    intermediates.push_back(all[c]);
                }
            }
            if (!intermediates.empty()) {
                out.push_back(BrokenCover{cell[a], cell[b], std::move(intermediates)});
            }
        }
    }
    return out;
}

} // namespace orbitatlas
