#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// Whether the output is normalized to include the bottom concept
// (empty extent, full closure of M) that the empty-extent skip suppresses.
enum class IncludeBottom { Auto, Always, Never };

struct EnumerationStats {
    std::size_t concept_count = 0;
    double elapsed_seconds = 0.0;
    std::size_t extent_storage_bytes = 0;
    std::size_t peak_queue_bytes = 0;
    std::size_t canonicity_failures = 0;
};

// Raised by the horizontal engine when the local-queue reservations of the
// active recursion chain exceed the configured budget.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::size_t depth_reached, std::size_t bytes_needed, std::size_t budget_bytes)
        : std::runtime_error("local queue budget exhausted at recursion depth " +
                             std::to_string(depth_reached) + ": needs " +
                             std::to_string(bytes_needed) + " bytes, budget " +
                             std::to_string(budget_bytes)),
          depth_reached(depth_reached),
          bytes_needed(bytes_needed),
          budget_bytes(budget_bytes) {}

    std::size_t depth_reached;
    std::size_t bytes_needed;
    std::size_t budget_bytes;
};

// Per-concept spawn records. Concept numbers are assigned at spawn time;
// entry 0 is the root (G, G*) and has no parent or spawn attribute.
struct SpawnLog {
    std::vector<std::uint32_t> parent;           // parent[0] unused
    std::vector<std::uint32_t> spawn_attribute;  // spawn_attribute[0] unused

    std::size_t size() const { return parent.size(); }
};

struct EnumerationResult {
    // Indexed by concept number. When the bottom concept was appended by
    // include-bottom normalization it sits last and is not in the spawn log.
    std::vector<Concept> concepts_by_number;
    SpawnLog spawn;
    EnumerationStats stats;
    bool bottom_appended = false;

    ConceptSet canonical() const { return ConceptSet::from_concepts(concepts_by_number); }
};

struct ConceptTreeNode {
    std::uint32_t id = 0;
    std::optional<std::uint32_t> parent;
    std::optional<std::uint32_t> spawn_attribute;
    std::vector<std::uint32_t> children;  // ascending spawn order
};

// Spawn tree rooted at concept 0. Node count equals the spawn-log size
// (the appended bottom concept, when present, is not a tree node).
struct ConceptTree {
    std::vector<ConceptTreeNode> nodes;
};

ConceptTree concept_tree(const SpawnLog& log);

namespace detail {

// Appends (empty extent, M) when the policy asks for it, M* is empty and
// the enumeration suppressed it. Returns true when appended.
bool normalize_bottom(const FormalContext& ctx, IncludeBottom policy,
                      std::vector<Concept>& concepts);

}  // namespace detail

}  // namespace fca
