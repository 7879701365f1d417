#include "phdiv/selection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "phdiv/errors.hpp"
#include "phdiv/random.hpp"

namespace phdiv {

std::string_view to_string(SubsetKind kind) {
    switch (kind) {
        case SubsetKind::closest: return "closest";
        case SubsetKind::farthest: return "farthest";
        case SubsetKind::random: return "random";
    }
    return "unknown";
}

SubsetKind parse_subset_kind(std::string_view name) {
    if (name == "closest") return SubsetKind::closest;
    if (name == "farthest") return SubsetKind::farthest;
    if (name == "random") return SubsetKind::random;
    throw InvalidInput("unknown subset kind '" + std::string(name) + "'");
}

std::vector<double> eccentricity(const DistanceMatrix& dist) {
    const std::size_t n = dist.size();
    if (n < 2) throw TooFewPoints("eccentricity needs at least two points");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(i, j);
            out[i] = std::max(out[i], d);
            out[j] = std::max(out[j], d);
        }
    }
    return out;
}

std::vector<std::size_t> eccentricity_ranking(const DistanceMatrix& dist) {
    const auto ecc = eccentricity(dist);
    std::vector<std::size_t> order(ecc.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&ecc](std::size_t a, std::size_t b) {
        return ecc[a] != ecc[b] ? ecc[a] < ecc[b] : a < b;
    });
    return order;
}

SubsetResult select_subset(const DistanceMatrix& dist, std::span<const Label> labels,
                           const SubsetSpec& spec) {
    const std::size_t n = dist.size();
    if (labels.size() != n) {
        throw InvalidInput("label count " + std::to_string(labels.size()) +
                           " does not match point count " + std::to_string(n));
    }
    if (spec.per_class < 1) throw InvalidInput("per_class must be at least 1");

    SubsetResult result;
    result.lower_half = n / 2;
    result.upper_half = n - result.lower_half;

    std::vector<std::size_t> pool;
    if (spec.kind == SubsetKind::random) {
        pool.resize(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
    } else {
        const auto ranking = eccentricity_ranking(dist);
        const auto split = ranking.begin() + static_cast<std::ptrdiff_t>(result.lower_half);
        if (spec.kind == SubsetKind::closest) {
            pool.assign(ranking.begin(), split);
        } else {
            pool.assign(split, ranking.end());
        }
        std::sort(pool.begin(), pool.end());
    }

    std::map<Label, std::vector<std::size_t>> candidates;
    for (Label label : labels) candidates[label];  // every label present in the data
    for (std::size_t idx : pool) candidates[labels[idx]].push_back(idx);

    Xoshiro256StarStar rng(spec.seed);
    for (auto& [label, members] : candidates) {
        if (members.size() < spec.per_class) {
            throw InsufficientClassMembers(
                "class " + std::to_string(label) + " has " + std::to_string(members.size()) +
                " members in the " + std::string(to_string(spec.kind)) + " pool, " +
                std::to_string(spec.per_class) + " requested");
        }
        for (std::size_t i = 0; i < spec.per_class; ++i) {
            const std::size_t j = i + rng.bounded(members.size() - i);
            std::swap(members[i], members[j]);
        }
        result.indices.insert(result.indices.end(), members.begin(),
                              members.begin() + static_cast<std::ptrdiff_t>(spec.per_class));
        result.class_counts[label] = spec.per_class;
    }
    std::sort(result.indices.begin(), result.indices.end());
    return result;
}

}  // namespace phdiv
