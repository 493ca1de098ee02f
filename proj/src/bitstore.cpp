#include "fca/bitstore.hpp"

#include <bit>
#include <cassert>

namespace fca {

HorizontalContext pack_horizontal(const FormalContext& ctx, WordWidth width) {
    HorizontalContext h;
    h.width = width;
    h.object_count = ctx.object_count();
    h.attribute_count = ctx.attribute_count();
    h.words_per_row = words_for(ctx.attribute_count(), width);
    h.words.assign(h.object_count * h.words_per_row, 0);
    const unsigned wb = bits(width);
    for (std::size_t g = 0; g < h.object_count; ++g)
        for (std::size_t a = 0; a < h.attribute_count; ++a)
            if (ctx.at(g, a))
                h.words[g * h.words_per_row + a / wb] |= std::uint64_t{1} << (a % wb);
    return h;
}

FormalContext unpack_horizontal(const HorizontalContext& hctx,
                                std::vector<std::string> object_names,
                                std::vector<std::string> attribute_names) {
    std::vector<std::uint8_t> cells(hctx.object_count * hctx.attribute_count, 0);
    for (std::size_t g = 0; g < hctx.object_count; ++g)
        for (std::size_t a = 0; a < hctx.attribute_count; ++a)
            if (hctx.has(static_cast<ObjectId>(g), static_cast<AttributeId>(a)))
                cells[g * hctx.attribute_count + a] = 1;
    return FormalContext(hctx.object_count, hctx.attribute_count, std::move(cells),
                         std::move(object_names), std::move(attribute_names));
}

VerticalContext pack_vertical(const FormalContext& ctx, WordWidth width) {
    VerticalContext v;
    v.width = width;
    v.object_count = ctx.object_count();
    v.attribute_count = ctx.attribute_count();
    v.columns.reserve(ctx.attribute_count());
    const unsigned wb = bits(width);
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
        BlockExtent col;
        col.width = width;
        std::uint32_t block = 0;
        std::uint64_t value = 0;
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            const std::uint32_t b = static_cast<std::uint32_t>(g / wb);
            if (b != block) {
                if (value) col.blocks.push_back({block, value});
                block = b;
                value = 0;
            }
            if (ctx.at(g, a)) value |= std::uint64_t{1} << (g % wb);
        }
        if (value) col.blocks.push_back({block, value});
        v.columns.push_back(std::move(col));
    }
    return v;
}

BlockExtent intersect_blocks(const BlockExtent& a, const BlockExtent& b) {
    if (a.width != b.width)
        throw ContractViolation("intersect_blocks: width mismatch");
    BlockExtent out;
    out.width = a.width;
    auto ia = a.blocks.begin();
    auto ib = b.blocks.begin();
    while (ia != a.blocks.end() && ib != b.blocks.end()) {
        if (ia->index < ib->index) {
            ++ia;
        } else if (ib->index < ia->index) {
            ++ib;
        } else {
            const std::uint64_t v = ia->value & ib->value;
            if (v) out.blocks.push_back({ia->index, v});
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool is_subset_blocks(const BlockExtent& a, const BlockExtent& b) {
    if (a.width != b.width)
        throw ContractViolation("is_subset_blocks: width mismatch");
    auto ib = b.blocks.begin();
    for (const auto& pa : a.blocks) {
        while (ib != b.blocks.end() && ib->index < pa.index) ++ib;
        if (ib == b.blocks.end() || ib->index != pa.index) return false;
        if (pa.value & ~ib->value) return false;
    }
    return true;
}

std::size_t cardinality(const BlockExtent& a) {
    std::size_t total = 0;
    for (const auto& p : a.blocks) total += std::popcount(p.value);
    return total;
}

ObjectSet blocks_to_object_set(const BlockExtent& a) {
    std::vector<std::uint32_t> members;
    const unsigned wb = bits(a.width);
    for (const auto& p : a.blocks) {
        std::uint64_t v = p.value;
        while (v) {
            const unsigned k = static_cast<unsigned>(std::countr_zero(v));
            members.push_back(p.index * wb + k);
            v &= v - 1;
        }
    }
    return ObjectSet(std::move(members));
}

BlockExtent object_set_to_blocks(const ObjectSet& s, std::size_t object_count, WordWidth width) {
    BlockExtent out;
    out.width = width;
    const unsigned wb = bits(width);
    for (std::uint32_t g : s.members) {
        if (g >= object_count)
            throw ContractViolation("object index out of range in object_set_to_blocks");
        const std::uint32_t b = g / wb;
        const std::uint64_t bit = std::uint64_t{1} << (g % wb);
        if (!out.blocks.empty() && out.blocks.back().index == b)
            out.blocks.back().value |= bit;
        else
            out.blocks.push_back({b, bit});
    }
    return out;
}

std::size_t storage_bytes(const BlockExtent& a) {
    return a.blocks.size() * 2 * word_bytes(a.width);
}

std::size_t horizontal_extent_bytes(std::size_t object_count_in_extent) {
    return object_count_in_extent * 4;
}

void check_block_extent(const BlockExtent& a, std::size_t object_count) {
    const std::size_t block_count = words_for(object_count, a.width);
    (void)block_count;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        assert(a.blocks[i].value != 0);
        assert(a.blocks[i].index < block_count);
        if (i > 0) assert(a.blocks[i - 1].index < a.blocks[i].index);
        if (a.width == WordWidth::w32) assert(a.blocks[i].value <= 0xFFFFFFFFull);
    }
}

}  // namespace fca
