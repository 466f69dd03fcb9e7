#include "orbitatlas/orbit_posets.hpp"

namespace orbitatlas {

namespace {

OrbitPoset assemble(std::vector<Involution> elements, const std::string& setting,
                    int n, std::vector<int> lambda, std::vector<int> mu,
                    std::vector<int> values,
                    const std::function<bool(int, int)>& leq) {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (const Involution& w : elements) {
        labels.push_back(w.cycles());
    }
    OrbitPoset op;
    op.poset = build_poset(std::move(labels), leq);
    op.meta.setting = setting;
    op.meta.n = n;
    op.meta.lambda = std::move(lambda);
    op.meta.mu = std::move(mu);
    op.meta.values = std::move(values);
    for (const Involution& w : elements) {
        op.meta.pairs.push_back(w.arcs());
    }
    op.elements = std::move(elements);
    return op;
}

} // namespace

OrbitPoset melnikov_poset(int n) {
    std::vector<Involution> elements = enumerate_involutions(n);
    std::vector<RankTable> tables;
    tables.reserve(elements.size());
    std::vector<int> dims;
    dims.reserve(elements.size());
    for (const Involution& w : elements) {
        tables.push_back(rank_table(w));
        dims.push_back(orbit_dimension(w));
    }
    return assemble(std::move(elements), "nilpotent", n, {}, {}, std::move(dims),
                    [&tables](int a, int b) {
                        return tables[static_cast<size_t>(a)].leq(
                            tables[static_cast<size_t>(b)]);
                    });
}

OrbitPoset restricted_poset(const Partition& lambda, const Partition& mu) {
    const Coloring coloring = coloring_of(lambda, mu);
    std::vector<Involution> elements = consistent_involutions(coloring);
    std::vector<RestrictedRankTable> tables;
    std::vector<int> codims;
    for (const Involution& w : elements) {
        const ConsistentInvolution cw{w, coloring};
        tables.push_back(restricted_rank_table(cw));
        codims.push_back(codimension(cw));
    }
    return assemble(std::move(elements), "grassmannian", coloring.size(),
                    lambda.parts(), mu.parts(), std::move(codims),
                    [&tables](int a, int b) {
                        return tables[static_cast<size_t>(a)].leq(
                            tables[static_cast<size_t>(b)]);
                    });
}

std::string orbit_label(const OrbitPoset& op, int id) {
    const bool grassmannian = op.meta.setting == "grassmannian";
    return op.poset.label(id) + (grassmannian ? "\\ncodim " : "\\ndim ") +
           std::to_string(op.meta.values[static_cast<size_t>(id)]);
}

} // namespace orbitatlas
