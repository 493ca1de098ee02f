#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// Deliberately dumb ground truth: closes every attribute subset of the
// smaller side of the context. Guarded to min(m, n) <= 20.
ConceptSet brute_force_concepts(const FormalContext& ctx);

struct ConceptDiff {
    std::vector<Concept> only_in_a;
    std::vector<Concept> only_in_b;

    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

ConceptDiff diff_concept_sets(const ConceptSet& a, const ConceptSet& b);

// Human-readable one-concept-per-line rendering of a diff, for verify output.
std::string describe_diff(const ConceptDiff& diff, std::size_t max_lines = 4);

struct RandomContextSpec {
    std::size_t object_count = 0;
    std::size_t attribute_count = 0;
    double density = 0.5;  // in [0, 1]
    std::uint64_t seed = 0;
};

// Deterministic for a fixed spec (std::mt19937_64 has a pinned sequence).
FormalContext random_context(const RandomContextSpec& spec);

}  // namespace fca
