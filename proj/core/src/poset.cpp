#include "orbitatlas/poset.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "orbitatlas/involution.hpp"

namespace orbitatlas {

namespace {

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<bool>& table,
                                                      int n) {
    auto leq = [&table, n](int a, int b) {
        return table[static_cast<size_t>(a) * static_cast<size_t>(n) +
                     static_cast<size_t>(b)];
    };
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) {
                continue;
            }
            bool has_intermediate = false;
            for (int c = 0; c < n && !has_intermediate; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) {
                    has_intermediate = true;
                }
            }
            if (!has_intermediate) {
                covers.emplace_back(a, b);
            }
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

} // namespace

Poset build_poset(std::vector<std::string> labels,
                  const std::function<bool(int, int)>& leq) {
    const int n = static_cast<int>(labels.size());
    std::vector<bool> table(static_cast<size_t>(n) * static_cast<size_t>(n), false);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            table[static_cast<size_t>(a) * static_cast<size_t>(n) +
                  static_cast<size_t>(b)] = leq(a, b);
        }
    }
    auto get = [&table, n](int a, int b) {
        return table[static_cast<size_t>(a) * static_cast<size_t>(n) +
                     static_cast<size_t>(b)];
    };
    for (int a = 0; a < n; ++a) {
        if (!get(a, a)) {
            throw InputError("reflexivity fails at element " + std::to_string(a) +
                             " (" + labels[static_cast<size_t>(a)] + ")");
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (get(a, b) && get(b, a)) {
                throw InputError("antisymmetry fails on pair (" +
                                 labels[static_cast<size_t>(a)] + ", " +
                                 labels[static_cast<size_t>(b)] + ")");
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!get(a, b)) {
                continue;
            }
            for (int c = 0; c < n; ++c) {
                if (get(b, c) && !get(a, c)) {
                    throw InputError("transitivity fails on triple (" +
                                     labels[static_cast<size_t>(a)] + ", " +
                                     labels[static_cast<size_t>(b)] + ", " +
                                     labels[static_cast<size_t>(c)] + ")");
                }
            }
        }
    }
    Poset p;
    p.labels_ = std::move(labels);
    p.covers_ = transitive_reduction(table, n);
    p.table_ = std::move(table);
    return p;
}

std::vector<std::pair<int, int>> hasse(const Poset& p) { return p.covers(); }

Poset poset_from_covers(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                         std::vector<bool>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a) {
        reach[static_cast<size_t>(a)][static_cast<size_t>(a)] = true;
    }
    for (const auto& [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw InputError("cover references element outside 0.." +
                             std::to_string(n - 1));
        }
        reach[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    }
    // Floyd-Warshall style closure.
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < n; ++a) {
            if (!reach[static_cast<size_t>(a)][static_cast<size_t>(k)]) {
                continue;
            }
            for (int b = 0; b < n; ++b) {
                if (reach[static_cast<size_t>(k)][static_cast<size_t>(b)]) {
                    reach[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
                }
            }
        }
    }
    return build_poset(std::move(labels), [&reach](int a, int b) {
        return reach[static_cast<size_t>(a)][static_cast<size_t>(b)];
    });
}

std::string export_dot(const Poset& p, const std::function<std::string(int)>& labeler) {
    std::ostringstream out;
    out << "digraph poset {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (int a = 0; a < p.size(); ++a) {
        out << "  n" << a << " [label=\"" << labeler(a) << "\"];\n";
    }
    for (const auto& [a, b] : p.covers()) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const Poset& p, const OrbitPosetMetadata& meta) {
    if (static_cast<int>(meta.pairs.size()) != p.size() ||
        static_cast<int>(meta.values.size()) != p.size()) {
        throw InputError("metadata must carry pairs and a value for every element");
    }
    const bool grassmannian = meta.setting == "grassmannian";
    if (!grassmannian && meta.setting != "nilpotent") {
        throw InputError("setting must be 'nilpotent' or 'grassmannian', got '" +
                         meta.setting + "'");
    }
    nlohmann::json doc;
    doc["setting"] = meta.setting;
    doc["n"] = meta.n;
    if (grassmannian) {
        doc["lambda"] = meta.lambda;
        doc["mu"] = meta.mu;
    }
    doc["elements"] = nlohmann::json::array();
    for (int a = 0; a < p.size(); ++a) {
        nlohmann::json element;
        element["id"] = a;
        element["pairs"] = nlohmann::json::array();
        for (const auto& [i, j] : meta.pairs[static_cast<size_t>(a)]) {
            element["pairs"].push_back({i, j});
        }
        element[grassmannian ? "codim" : "dim"] = meta.values[static_cast<size_t>(a)];
        doc["elements"].push_back(std::move(element));
    }
    doc["covers"] = nlohmann::json::array();
    for (const auto& [a, b] : p.covers()) {
        doc["covers"].push_back({a, b});
    }
    return doc.dump(2) + "\n";
}

ParsedPosetDocument parse_poset_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad poset JSON: ") + e.what());
    }
    try {
        OrbitPosetMetadata meta;
        meta.setting = doc.at("setting").get<std::string>();
        meta.n = doc.at("n").get<int>();
        if (meta.setting == "grassmannian") {
            meta.lambda = doc.at("lambda").get<std::vector<int>>();
            meta.mu = doc.at("mu").get<std::vector<int>>();
        }
        const std::string value_key = meta.setting == "grassmannian" ? "codim" : "dim";
        std::vector<std::string> labels;
        for (const auto& element : doc.at("elements")) {
            const int id = element.at("id").get<int>();
            if (id != static_cast<int>(labels.size())) {
                throw InputError("element ids must be consecutive from 0");
            }
            std::vector<std::pair<int, int>> arcs;
            for (const auto& pair : element.at("pairs")) {
                arcs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
            }
            labels.push_back(Involution::from_arcs(meta.n, arcs).cycles());
            meta.pairs.push_back(std::move(arcs));
            meta.values.push_back(element.at(value_key).get<int>());
        }
        std::vector<std::pair<int, int>> covers;
        for (const auto& cover : doc.at("covers")) {
            covers.emplace_back(cover.at(0).get<int>(), cover.at(1).get<int>());
        }
        return ParsedPosetDocument{poset_from_covers(std::move(labels), covers),
                                   std::move(meta)};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("poset JSON misses required fields: ") + e.what());
    }
}

} // namespace orbitatlas
