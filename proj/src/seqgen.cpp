#include "numwall/seqgen.hpp"

#include <bit>
#include <cctype>
#include <random>
#include <sstream>

namespace nw {

std::uint64_t paper_folding(unsigned level, std::uint64_t i) {
    if (i == 0) fail(Errc::invalid_argument, "paper-folding index starts at 1");
    if (level > 62) fail(Errc::invalid_argument, "paper-folding level too large");
    std::uint64_t odd = i >> std::countr_zero(i);
    std::uint64_t res = odd & ((std::uint64_t(1) << (level + 1)) - 1);
    if ((res & 1) == 0) fail(Errc::internal_inconsistency, "even residue in paper-folding formula");
    return (res - 1) / 2;
}

std::vector<Fe> random_codes(std::uint64_t seed, std::uint32_t q, std::size_t count) {
    std::mt19937_64 gen(seed);
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % q);
    std::vector<Fe> out;
    out.reserve(count);
    while (out.size() < count) {
        std::uint64_t x = gen();
        if (x >= limit) continue;
        out.push_back(static_cast<Fe>(x % q));
    }
    return out;
}

std::string SeqRecipe::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::paper_folding: os << "pf:" << level << ":" << length; break;
    case Kind::random: os << "random:" << kRandomAlgorithm << ":seed=" << seed << ":" << length; break;
    case Kind::literal: os << "literal:" << values.size(); break;
    }
    return os.str();
}

Seq materialize(const SeqRecipe& rc) {
    if (!rc.field) fail(Errc::invalid_argument, "recipe has no field");
    Seq s;
    s.field = rc.field;
    s.recipe = rc.describe();
    auto embed = [&](std::int64_t sym) -> Fe {
        if (rc.embedding.empty()) return rc.field->embed(sym);
        auto it = rc.embedding.find(sym);
        if (it == rc.embedding.end()) fail(Errc::embedding_incomplete, "no element assigned to symbol " + std::to_string(sym));
        if (!rc.field->valid(it->second)) fail(Errc::embedding_incomplete, "embedding target out of range");
        return it->second;
    };
    switch (rc.kind) {
    case SeqRecipe::Kind::paper_folding:
        if (rc.length < 0) fail(Errc::invalid_argument, "negative length");
        for (std::int64_t i = 1; i <= rc.length; ++i)
            s.v.push_back(embed(static_cast<std::int64_t>(paper_folding(rc.level, static_cast<std::uint64_t>(i)))));
        break;
    case SeqRecipe::Kind::random:
        if (rc.length < 0) fail(Errc::invalid_argument, "negative length");
        s.v = random_codes(rc.seed, rc.field->q(), static_cast<std::size_t>(rc.length));
        break;
    case SeqRecipe::Kind::literal:
        for (std::int64_t x : rc.values) s.v.push_back(embed(x));
        break;
    }
    return s;
}

SymbolFile parse_symbols(std::string_view text) {
    SymbolFile out;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::string comment = line.substr(hash + 1);
            auto key = comment.find("field:");
            if (key != std::string::npos) {
                std::string v = comment.substr(key + 6);
                std::string t;
                for (char c : v)
                    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
                out.field = t;
            }
            line = line.substr(0, hash);
        }
        for (char& c : line)
            if (c == ',' || c == ';') c = ' ';
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                out.symbols.push_back(v);
            } catch (const std::exception&) {
                fail(Errc::parse_error, "bad sequence token '" + tok + "'");
            }
        }
    }
    return out;
}

} // namespace nw
