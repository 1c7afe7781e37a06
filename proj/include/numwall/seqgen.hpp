#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numwall/wall.hpp"

namespace nw {

inline constexpr const char* kRandomAlgorithm = "mt19937_64/rejection";

// Level-n paper-folding symbol, in [0, 2^n).
std::uint64_t paper_folding(unsigned level, std::uint64_t i);

struct SeqRecipe {
    enum class Kind { paper_folding, random, literal };
    Kind kind = Kind::literal;
    unsigned level = 1;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> values;
    std::int64_t length = 0;
    FieldPtr field;
    // Symbol -> element code; empty means the default embedding.
    std::map<std::int64_t, Fe> embedding;

    std::string describe() const;
};

Seq materialize(const SeqRecipe& recipe);

struct SymbolFile {
    std::vector<std::int64_t> symbols;
    std::optional<std::string> field;
};

// Whitespace/comma separated integers, '#' comments, optional "# field: p^k/mod" header.
SymbolFile parse_symbols(std::string_view text);

// Uniform random element codes from the named generator.
std::vector<Fe> random_codes(std::uint64_t seed, std::uint32_t q, std::size_t count);

} // namespace nw
