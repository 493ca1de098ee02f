#include "fca/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace fca {

namespace {

// Enumerates closures of every B subset of M. Requires n <= 20.
std::vector<Concept> closures_of_all_attribute_subsets(const FormalContext& ctx) {
    const std::size_t n = ctx.attribute_count();
    std::vector<Concept> out;
    std::unordered_set<std::uint32_t> seen_intents;  // intent bitmask, n <= 20
    for (std::uint32_t mask = 0;; ++mask) {
        std::vector<std::uint32_t> b;
        for (std::uint32_t a = 0; a < n; ++a)
            if (mask & (1u << a)) b.push_back(a);
        Concept c = close_attributes(ctx, AttributeSet(std::move(b)));
        std::uint32_t intent_mask = 0;
        for (std::uint32_t a : c.intent.members) intent_mask |= 1u << a;
        if (seen_intents.insert(intent_mask).second) out.push_back(std::move(c));
        if (mask == (n == 0 ? 0u : ((1u << n) - 1u))) break;
    }
    return out;
}

}  // namespace

ConceptSet brute_force_concepts(const FormalContext& ctx) {
    const std::size_t m = ctx.object_count();
    const std::size_t n = ctx.attribute_count();
    if (std::min(m, n) > 20)
        throw ContractViolation("brute_force_concepts: min(m,n) = " +
                                std::to_string(std::min(m, n)) + " exceeds the limit of 20");
    if (n <= m) return ConceptSet::from_concepts(closures_of_all_attribute_subsets(ctx));
    // Enumerate on the transposed context and swap the pairs back.
    std::vector<Concept> swapped = closures_of_all_attribute_subsets(transpose(ctx));
    std::vector<Concept> out;
    out.reserve(swapped.size());
    for (auto& c : swapped)
        out.push_back(Concept{std::move(c.intent), std::move(c.extent)});
    return ConceptSet::from_concepts(std::move(out));
}

ConceptDiff diff_concept_sets(const ConceptSet& a, const ConceptSet& b) {
    ConceptDiff d;
    const auto& ca = a.concepts();
    const auto& cb = b.concepts();
    std::size_t i = 0, j = 0;
    while (i < ca.size() && j < cb.size()) {
        if (ca[i].intent < cb[j].intent) {
            d.only_in_a.push_back(ca[i++]);
        } else if (cb[j].intent < ca[i].intent) {
            d.only_in_b.push_back(cb[j++]);
        } else {
            if (!(ca[i] == cb[j])) {  // same intent, different extent
                d.only_in_a.push_back(ca[i]);
                d.only_in_b.push_back(cb[j]);
            }
            ++i;
            ++j;
        }
    }
    while (i < ca.size()) d.only_in_a.push_back(ca[i++]);
    while (j < cb.size()) d.only_in_b.push_back(cb[j++]);
    return d;
}

namespace {

void render_concepts(std::ostringstream& os, const char* label,
                     const std::vector<Concept>& cs, std::size_t max_lines) {
    for (std::size_t i = 0; i < cs.size() && i < max_lines; ++i) {
        os << label << " ({";
        for (std::size_t k = 0; k < cs[i].extent.members.size(); ++k)
            os << (k ? "," : "") << cs[i].extent.members[k];
        os << "},{";
        for (std::size_t k = 0; k < cs[i].intent.members.size(); ++k)
            os << (k ? "," : "") << cs[i].intent.members[k];
        os << "})\n";
    }
    if (cs.size() > max_lines)
        os << label << " ... " << (cs.size() - max_lines) << " more\n";
}

}  // namespace

std::string describe_diff(const ConceptDiff& diff, std::size_t max_lines) {
    if (diff.empty()) return "";
    std::ostringstream os;
    render_concepts(os, "only-in-a", diff.only_in_a, max_lines);
    render_concepts(os, "only-in-b", diff.only_in_b, max_lines);
    return os.str();
}

FormalContext random_context(const RandomContextSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<std::uint8_t> cells(spec.object_count * spec.attribute_count, 0);
    for (auto& c : cells) {
        // Portable uniform draw in [0,1): top 53 bits of the engine output.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        c = (u < spec.density) ? 1 : 0;
    }
    return FormalContext(spec.object_count, spec.attribute_count, std::move(cells));
}

}  // namespace fca
