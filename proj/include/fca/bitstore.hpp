#pragma once

#include <cstdint>
#include <vector>

#include "fca/context.hpp"

namespace fca {

enum class WordWidth : unsigned { w32 = 32, w64 = 64 };

inline unsigned bits(WordWidth w) { return static_cast<unsigned>(w); }
inline unsigned word_bytes(WordWidth w) { return bits(w) / 8; }

// Number of width-sized words needed for `count` bits; 0 when count is 0.
inline std::size_t words_for(std::size_t count, WordWidth w) {
    return count == 0 ? 0 : (count - 1) / bits(w) + 1;
}

// Row-major word-packed incidence: bit k of word w in row g is set iff
// object g has attribute w*width+k. Trailing pad bits are zero.
struct HorizontalContext {
    WordWidth width = WordWidth::w64;
    std::size_t object_count = 0;
    std::size_t attribute_count = 0;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> words;  // object_count * words_per_row, values < 2^width

    std::uint64_t word(std::size_t g, std::size_t w) const {
        return words[g * words_per_row + w];
    }
    bool has(ObjectId g, AttributeId a) const {
        return (word(g, a / bits(width)) >> (a % bits(width))) & 1u;
    }
};

// One (block index, nonzero block value) pair of the vertical layout.
struct BlockPair {
    std::uint32_t index = 0;
    std::uint64_t value = 0;  // < 2^width, never zero when stored

    friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

// Sparse vertical encoding of an object set: strictly increasing block
// indices, zero-valued blocks omitted.
struct BlockExtent {
    WordWidth width = WordWidth::w64;
    std::vector<BlockPair> blocks;

    bool empty() const { return blocks.empty(); }

    friend bool operator==(const BlockExtent&, const BlockExtent&) = default;
};

// Column-major block-sparse incidence: one BlockExtent per attribute.
struct VerticalContext {
    WordWidth width = WordWidth::w64;
    std::size_t object_count = 0;
    std::size_t attribute_count = 0;
    std::vector<BlockExtent> columns;
};

HorizontalContext pack_horizontal(const FormalContext& ctx, WordWidth width);
FormalContext unpack_horizontal(const HorizontalContext& hctx,
                                std::vector<std::string> object_names = {},
                                std::vector<std::string> attribute_names = {});

VerticalContext pack_vertical(const FormalContext& ctx, WordWidth width);

// Merge intersection by block index; zero results dropped.
BlockExtent intersect_blocks(const BlockExtent& a, const BlockExtent& b);

// decoded(a) subset of decoded(b); equivalent to intersect_blocks(a,b) == a.
bool is_subset_blocks(const BlockExtent& a, const BlockExtent& b);

std::size_t cardinality(const BlockExtent& a);

ObjectSet blocks_to_object_set(const BlockExtent& a);
BlockExtent object_set_to_blocks(const ObjectSet& s, std::size_t object_count, WordWidth width);

// Vertical accounting: stored pairs cost an index word plus a value word.
std::size_t storage_bytes(const BlockExtent& a);

// Horizontal accounting: extents are per-object lists of 32-bit indices.
std::size_t horizontal_extent_bytes(std::size_t object_count_in_extent);

// Debug-build structural check: strictly increasing indices, no zero
// values, no value overflowing the width, indices within object range.
void check_block_extent(const BlockExtent& a, std::size_t object_count);

}  // namespace fca
