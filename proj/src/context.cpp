#include "fca/context.hpp"

#include <algorithm>
#include <numeric>

namespace fca {

IndexSet IndexSet::of(std::vector<std::uint32_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return IndexSet(std::move(values));
}

bool IndexSet::contains(std::uint32_t v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.members.begin(), other.members.end(),
                         members.begin(), members.end());
}

namespace {

std::vector<std::string> default_names(std::size_t count, const char* prefix) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return names;
}

}  // namespace

FormalContext::FormalContext(std::size_t object_count, std::size_t attribute_count,
                             std::vector<std::uint8_t> incidence,
                             std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names)
    : m_(object_count),
      n_(attribute_count),
      cells_(std::move(incidence)),
      object_names_(std::move(object_names)),
      attribute_names_(std::move(attribute_names)) {
    if (cells_.size() != m_ * n_)
        throw ContractViolation("incidence size " + std::to_string(cells_.size()) +
                                " does not match " + std::to_string(m_) + "x" + std::to_string(n_));
    for (auto& c : cells_) c = c ? 1 : 0;
    if (object_names_.empty())
        object_names_ = default_names(m_, "");
    if (attribute_names_.empty())
        attribute_names_ = default_names(n_, "a");
    if (object_names_.size() != m_)
        throw ContractViolation("object name count does not match object count");
    if (attribute_names_.size() != n_)
        throw ContractViolation("attribute name count does not match attribute count");
}

FormalContext FormalContext::from_rows(std::size_t attribute_count,
                                       const std::vector<std::vector<AttributeId>>& rows,
                                       std::vector<std::string> object_names,
                                       std::vector<std::string> attribute_names) {
    std::vector<std::uint8_t> cells(rows.size() * attribute_count, 0);
    for (std::size_t g = 0; g < rows.size(); ++g) {
        for (AttributeId a : rows[g]) {
            if (a >= attribute_count)
                throw ContractViolation("attribute id " + std::to_string(a) +
                                        " out of range in row " + std::to_string(g));
            cells[g * attribute_count + a] = 1;
        }
    }
    return FormalContext(rows.size(), attribute_count, std::move(cells),
                         std::move(object_names), std::move(attribute_names));
}

ObjectSet FormalContext::all_objects() const {
    std::vector<std::uint32_t> v(m_);
    std::iota(v.begin(), v.end(), 0);
    return ObjectSet(std::move(v));
}

AttributeSet FormalContext::all_attributes() const {
    std::vector<std::uint32_t> v(n_);
    std::iota(v.begin(), v.end(), 0);
    return AttributeSet(std::move(v));
}

AttributeSet derive_attributes(const FormalContext& ctx, const ObjectSet& objects) {
    for (auto g : objects.members) ctx.check_object(g);
    std::vector<std::uint32_t> shared;
    for (AttributeId a = 0; a < ctx.attribute_count(); ++a) {
        bool all = true;
        for (ObjectId g : objects.members) {
            if (!ctx.at(g, a)) { all = false; break; }
        }
        if (all) shared.push_back(a);
    }
    return AttributeSet(std::move(shared));
}

ObjectSet derive_objects(const FormalContext& ctx, const AttributeSet& attributes) {
    for (auto a : attributes.members) ctx.check_attribute(a);
    std::vector<std::uint32_t> holders;
    for (ObjectId g = 0; g < ctx.object_count(); ++g) {
        bool all = true;
        for (AttributeId a : attributes.members) {
            if (!ctx.at(g, a)) { all = false; break; }
        }
        if (all) holders.push_back(g);
    }
    return ObjectSet(std::move(holders));
}

Concept close_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
    ObjectSet extent = derive_objects(ctx, attributes);
    AttributeSet intent = derive_attributes(ctx, extent);
    return Concept{std::move(extent), std::move(intent)};
}

bool is_concept(const FormalContext& ctx, const Concept& c) {
    return derive_attributes(ctx, c.extent) == c.intent &&
           derive_objects(ctx, c.intent) == c.extent;
}

FormalContext transpose(const FormalContext& ctx) {
    const std::size_t m = ctx.object_count();
    const std::size_t n = ctx.attribute_count();
    std::vector<std::uint8_t> cells(n * m, 0);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t a = 0; a < n; ++a)
            if (ctx.at(g, a)) cells[a * m + g] = 1;
    return FormalContext(n, m, std::move(cells), ctx.attribute_names(), ctx.object_names());
}

bool leq(const Concept& c1, const Concept& c2) {
    return c1.extent.is_subset_of(c2.extent);
}

ConceptSet ConceptSet::from_concepts(std::vector<Concept> concepts) {
    std::sort(concepts.begin(), concepts.end(),
              [](const Concept& a, const Concept& b) { return a.intent < b.intent; });
    for (std::size_t i = 1; i < concepts.size(); ++i)
        if (concepts[i - 1].intent == concepts[i].intent)
            throw ContractViolation("duplicate intent in concept set");
    std::vector<const ObjectSet*> extents;
    extents.reserve(concepts.size());
    for (const auto& c : concepts) extents.push_back(&c.extent);
    std::sort(extents.begin(), extents.end(),
              [](const ObjectSet* a, const ObjectSet* b) { return *a < *b; });
    for (std::size_t i = 1; i < extents.size(); ++i)
        if (*extents[i - 1] == *extents[i])
            throw ContractViolation("duplicate extent in concept set");
    ConceptSet cs;
    cs.concepts_ = std::move(concepts);
    return cs;
}

}  // namespace fca
