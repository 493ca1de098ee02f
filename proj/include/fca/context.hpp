#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fca {

// Thrown when a caller breaks a documented precondition (bad index,
// mismatched widths, oversized oracle input).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using ObjectId = std::uint32_t;
using AttributeId = std::uint32_t;

// Sorted, duplicate-free index set. Shared representation for object and
// attribute sets; the aliases below keep signatures self-describing.
struct IndexSet {
    std::vector<std::uint32_t> members;  // strictly increasing

    IndexSet() = default;
    explicit IndexSet(std::vector<std::uint32_t> sorted_members)
        : members(std::move(sorted_members)) {}

    // Sorts and deduplicates arbitrary input.
    static IndexSet of(std::vector<std::uint32_t> values);

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    bool contains(std::uint32_t v) const;
    bool is_subset_of(const IndexSet& other) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
        return a.members <=> b.members;
    }
};

using ObjectSet = IndexSet;
using AttributeSet = IndexSet;

// Immutable m-by-n binary incidence relation with object/attribute names.
class FormalContext {
public:
    FormalContext(std::size_t object_count, std::size_t attribute_count,
                  std::vector<std::uint8_t> incidence,
                  std::vector<std::string> object_names = {},
                  std::vector<std::string> attribute_names = {});

    // Builds from per-object attribute-id lists (duplicates tolerated).
    static FormalContext from_rows(std::size_t attribute_count,
                                   const std::vector<std::vector<AttributeId>>& rows,
                                   std::vector<std::string> object_names = {},
                                   std::vector<std::string> attribute_names = {});

    std::size_t object_count() const { return m_; }
    std::size_t attribute_count() const { return n_; }

    bool incidence(ObjectId g, AttributeId a) const {
        check_object(g);
        check_attribute(a);
        return cells_[static_cast<std::size_t>(g) * n_ + a] != 0;
    }
    // Unchecked fast path for inner loops.
    bool at(std::size_t g, std::size_t a) const { return cells_[g * n_ + a] != 0; }

    const std::string& object_name(ObjectId g) const { check_object(g); return object_names_[g]; }
    const std::string& attribute_name(AttributeId a) const { check_attribute(a); return attribute_names_[a]; }
    const std::vector<std::string>& object_names() const { return object_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }

    ObjectSet all_objects() const;
    AttributeSet all_attributes() const;

    void check_object(ObjectId g) const {
        if (g >= m_) throw ContractViolation("object index " + std::to_string(g) + " out of range [0," + std::to_string(m_) + ")");
    }
    void check_attribute(AttributeId a) const {
        if (a >= n_) throw ContractViolation("attribute index " + std::to_string(a) + " out of range [0," + std::to_string(n_) + ")");
    }

    friend bool operator==(const FormalContext& a, const FormalContext& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.cells_ == b.cells_ &&
               a.object_names_ == b.object_names_ && a.attribute_names_ == b.attribute_names_;
    }

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;  // row-major, m*n
    std::vector<std::string> object_names_;
    std::vector<std::string> attribute_names_;
};

struct Concept {
    ObjectSet extent;
    AttributeSet intent;

    friend bool operator==(const Concept&, const Concept&) = default;
};

// Attributes shared by every object in A; all of M when A is empty.
AttributeSet derive_attributes(const FormalContext& ctx, const ObjectSet& objects);

// Objects possessing every attribute in B; all of G when B is empty.
ObjectSet derive_objects(const FormalContext& ctx, const AttributeSet& attributes);

// (B*, B**). The result is always a formal concept.
Concept close_attributes(const FormalContext& ctx, const AttributeSet& attributes);

bool is_concept(const FormalContext& ctx, const Concept& c);

// New context with rows and columns (and names) swapped.
FormalContext transpose(const FormalContext& ctx);

// Concept order: c1 <= c2 iff extent(c1) is a subset of extent(c2).
bool leq(const Concept& c1, const Concept& c2);

// Collection of concepts in canonical order: intents ascending
// lexicographically. No two concepts may share an intent or an extent.
class ConceptSet {
public:
    ConceptSet() = default;

    // Sorts into canonical order; throws ContractViolation on duplicate
    // intents or extents.
    static ConceptSet from_concepts(std::vector<Concept> concepts);

    const std::vector<Concept>& concepts() const { return concepts_; }
    std::size_t size() const { return concepts_.size(); }

    friend bool operator==(const ConceptSet&, const ConceptSet&) = default;

private:
    std::vector<Concept> concepts_;  // canonical order
};

}  // namespace fca
