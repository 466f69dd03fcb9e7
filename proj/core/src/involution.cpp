#include "orbitatlas/involution.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace orbitatlas {

namespace {

void check_size(int n) {
    if (n < 1) {
        throw InputError("ambient size must be positive, got " + std::to_string(n));
    }
}

// Appends all involutions extending the partial map; the first unassigned
// position is matched against every free partner in increasing order, which
// yields lexicographic order on the completed one-line maps.
void extend(std::vector<int>& map, int first_free, std::vector<Involution>& out) {
    const int n = static_cast<int>(map.size());
    int i = first_free;
    while (i < n && map[static_cast<size_t>(i)] != 0) {
        ++i;
    }
    if (i == n) {
        std::vector<int> complete = map;
        out.push_back(Involution::from_map(std::move(complete)));
        return;
    }
    for (int j = i; j < n; ++j) {
        if (map[static_cast<size_t>(j)] != 0) {
            continue;
        }
        map[static_cast<size_t>(i)] = j + 1;
        map[static_cast<size_t>(j)] = i + 1;
        extend(map, i + 1, out);
        map[static_cast<size_t>(i)] = 0;
        if (j != i) {
            map[static_cast<size_t>(j)] = 0;
        }
    }
}

int parse_index(std::string_view token) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError("bad index '" + std::string(token) + "' in arc list");
    }
    return value;
}

} // namespace

Involution Involution::identity(int n) {
    check_size(n);
    std::vector<int> map(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        map[static_cast<size_t>(i) - 1] = i;
    }
    return Involution(std::move(map));
}

Involution Involution::from_map(std::vector<int> map) {
    const int n = static_cast<int>(map.size());
    check_size(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int value : map) {
        if (value < 1 || value > n || seen[static_cast<size_t>(value) - 1]) {
            throw InputError("one-line map is not a permutation of {1.." +
                             std::to_string(n) + "}");
        }
        seen[static_cast<size_t>(value) - 1] = true;
    }
    for (int i = 1; i <= n; ++i) {
        const int j = map[static_cast<size_t>(i) - 1];
        if (map[static_cast<size_t>(j) - 1] != i) {
            throw InputError("map is not self-inverse at position " + std::to_string(i));
        }
    }
    return Involution(std::move(map));
}

Involution Involution::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
    check_size(n);
    std::vector<int> map(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        map[static_cast<size_t>(i) - 1] = i;
    }
    for (const auto& [i, j] : arcs) {
        if (i < 1 || j < 1 || i > n || j > n) {
            throw InputError("arc (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range 1.." + std::to_string(n));
        }
        if (i >= j) {
            throw InputError("arc (" + std::to_string(i) + "," + std::to_string(j) +
                             ") must have left endpoint smaller than right");
        }
        if (map[static_cast<size_t>(i) - 1] != i || map[static_cast<size_t>(j) - 1] != j) {
            throw InputError("arcs are not disjoint at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
        }
        map[static_cast<size_t>(i) - 1] = j;
        map[static_cast<size_t>(j) - 1] = i;
    }
    return Involution(std::move(map));
}

Involution Involution::parse(const std::string& text, int n) {
    std::vector<std::pair<int, int>> arcs;
    std::string_view rest(text);
    while (!rest.empty()) {
        const size_t comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        rest = (comma == std::string_view::npos) ? std::string_view{}
                                                 : rest.substr(comma + 1);
        if (token.empty()) {
            throw InputError("empty arc in involution spec '" + text + "'");
        }
        const size_t dash = token.find('-');
        if (dash == std::string_view::npos) {
            throw InputError("arc '" + std::string(token) + "' is missing '-'");
        }
        arcs.emplace_back(parse_index(token.substr(0, dash)),
                          parse_index(token.substr(dash + 1)));
    }
    return from_arcs(n, arcs);
}

bool Involution::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> Involution::arcs() const {
    std::vector<std::pair<int, int>> result;
    for (int i = 1; i <= size(); ++i) {
        if (i < (*this)(i)) {
            result.emplace_back(i, (*this)(i));
        }
    }
    return result;
}

std::vector<int> Involution::fixed_points() const {
    std::vector<int> result;
    for (int i = 1; i <= size(); ++i) {
        if (is_fixed(i)) {
            result.push_back(i);
        }
    }
    return result;
}

int Involution::arc_count() const {
    int count = 0;
    for (int i = 1; i <= size(); ++i) {
        if (i < (*this)(i)) {
            ++count;
        }
    }
    return count;
}

std::string Involution::cycles() const {
    const auto arc_list = arcs();
    if (arc_list.empty()) {
        return "e";
    }
    const bool wide = size() > 9;
    std::ostringstream out;
    for (const auto& [i, j] : arc_list) {
        out << '(' << i << (wide ? " " : "") << j << ')';
    }
    return out.str();
}

RankTable::RankTable(int n) : n_(n) {
    check_size(n);
    r_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

size_t RankTable::index(int i, int j) const {
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
           static_cast<size_t>(j - 1);
}

int RankTable::at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i >= j) {
        return 0;
    }
    return r_[index(i, j)];
}

void RankTable::set(int i, int j, int value) {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i >= j) {
        throw InputError("rank-table entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside the strict upper triangle");
    }
    r_[index(i, j)] = value;
}

bool RankTable::leq(const RankTable& other) const {
    if (n_ != other.n_) {
        throw InputError("rank-table size mismatch: " + std::to_string(n_) +
                         " vs " + std::to_string(other.n_));
    }
    for (int i = 1; i < n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (at(i, j) > other.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Involution> enumerate_involutions(int n) {
    if (n < 1 || n > kMaxEnumerationSize) {
        throw CapacityError("enumerate_involutions supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationSize) + ", got " +
                            std::to_string(n));
    }
    std::vector<Involution> out;
    out.reserve(involution_count(n));
    std::vector<int> map(static_cast<size_t>(n), 0);
    extend(map, 0, out);
    return out;
}

std::uint64_t involution_count(int n) {
    check_size(n);
    std::uint64_t prev2 = 1; // |I_0|
    std::uint64_t prev1 = 1; // |I_1|
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t current = prev1 + static_cast<std::uint64_t>(k - 1) * prev2;
        prev2 = prev1;
        prev1 = current;
    }
    return prev1;
}

ArcDiagram arc_diagram(const Involution& w, HalflinePolicy policy) {
    return ArcDiagram{w.size(), w.arcs(), w.fixed_points(), policy};
}

int crossing_count(const ArcDiagram& d, std::span<const int> halflines) {
    for (int h : halflines) {
        if (!std::binary_search(d.fixed.begin(), d.fixed.end(), h)) {
            throw InputError("half-line at " + std::to_string(h) +
                             " is not a fixed point of the diagram");
        }
    }
    int crossings = 0;
    for (size_t a = 0; a < d.arcs.size(); ++a) {
        const auto [i, j] = d.arcs[a];
        for (size_t b = a + 1; b < d.arcs.size(); ++b) {
            const auto [k, l] = d.arcs[b];
            const bool ab = i < k && k < j && j < l;
            const bool ba = k < i && i < l && l < j;
            if (ab || ba) {
                ++crossings;
            }
        }
        for (int h : halflines) {
            if (i < h && h < j) {
                ++crossings;
            }
        }
    }
    return crossings;
}

int orbit_dimension(const Involution& w) {
    const ArcDiagram d = arc_diagram(w, HalflinePolicy::AllFixed);
    const int arcs = static_cast<int>(d.arcs.size());
    const int halflines = static_cast<int>(d.fixed.size());
    return arcs * (arcs + halflines) - crossing_count(d, d.fixed);
}

RankTable rank_table(const Involution& w) {
    const int n = w.size();
    RankTable table(n);
    const auto arcs = w.arcs();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int count = 0;
            for (const auto& [a, b] : arcs) {
                if (i <= a && b <= j) {
                    ++count;
                }
            }
            table.set(i, j, count);
        }
    }
    return table;
}

bool melnikov_leq(const Involution& v, const Involution& w) {
    if (v.size() != w.size()) {
        throw InputError("cannot compare involutions of sizes " +
                         std::to_string(v.size()) + " and " + std::to_string(w.size()));
    }
    return rank_table(v).leq(rank_table(w));
}

Involution involution_from_rank_table(const RankTable& r) {
    const int n = r.size();
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int delta = r.at(i, j) - r.at(i + 1, j) - r.at(i, j - 1) + r.at(i + 1, j - 1);
            if (delta == 1) {
                arcs.emplace_back(i, j);
            } else if (delta != 0) {
                throw ReconstructionError(
                    "inclusion-exclusion delta at (" + std::to_string(i) + "," +
                    std::to_string(j) + ") is " + std::to_string(delta) +
                    "; table does not arise from an involution");
            }
        }
    }
    Involution w = Involution::identity(n);
    try {
        w = Involution::from_arcs(n, arcs);
    } catch (const InputError& e) {
        throw ReconstructionError(std::string("delta pattern is inconsistent: ") + e.what());
    }
    if (!(rank_table(w) == r)) {
        throw ReconstructionError("table is not the rank table of its delta involution");
    }
    return w;
}

bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
    const int n = static_cast<int>(u.size());
    if (n != static_cast<int>(v.size())) {
        throw InputError("cannot compare permutations of sizes " + std::to_string(n) +
                         " and " + std::to_string(v.size()));
    }
    // Northwest-corner rank of a permutation matrix: #{a <= i : p(a) <= j}.
    auto northwest = [](const std::vector<int>& p, int i, int j) {
        int count = 0;
        for (int a = 1; a <= i; ++a) {
            if (p[static_cast<size_t>(a) - 1] <= j) {
                ++count;
            }
        }
        return count;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (northwest(u, i, j) < northwest(v, i, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace orbitatlas
