#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numwall/wall.hpp"

namespace nw {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 26;

// Budget from NW_BUDGET when set, else the default.
std::uint64_t default_budget();

struct SquarePortion {
    std::int64_t l = 1; // side
    std::int64_t n = 1; // top-left column
    std::int64_t m = 0; // top-left row
};

// Rows m..m+height-1, columns n..n+width-1.
struct RectPortion {
    std::int64_t width = 1, height = 1, n = 1, m = 0;
};

struct EnumConfig {
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultBudget;
};

// Calls visit(wall, unit) for every sequence of length r; units are prefix classes in lexicographic order.
// Returns the number of units; visit must be thread-safe across distinct units.
std::size_t for_each_wall(const FieldPtr& f, std::int64_t r, const EnumConfig& cfg,
                          const std::function<void(const Wall&, std::size_t unit)>& visit, std::size_t* units_out = nullptr);

// Number of sequences of length r whose wall satisfies each predicate.
std::vector<std::uint64_t> count_walls(const FieldPtr& f, std::int64_t r, const EnumConfig& cfg,
                                       const std::vector<std::function<bool(const Wall&)>>& preds);

// The wall has a window containing the portion (finite-wall reading; see README).
bool contains_portion(const Wall& w, const SquarePortion& p);
bool rect_zero(const Wall& w, const RectPortion& p);
bool portion_visible(std::int64_t r, const SquarePortion& p);
// Portions (l,n,m) with fully visible top row and r >= 2m+1+l.
std::vector<SquarePortion> admissible_portions(std::int64_t r);

std::uint64_t enumerate_portion(const FieldPtr& f, std::int64_t r, const SquarePortion& p, const EnumConfig& cfg = {});

BigInt formula_rect(std::uint32_t q, std::int64_t r, std::int64_t l, std::int64_t d, std::int64_t n, std::int64_t m);
BigInt ipow(std::uint64_t q, std::int64_t e);

// Three-shape codomain of the Q-function.
bool q_codomain(BladeShape b);
BigInt q_formula(BladeShape b1, BladeShape b2, std::int64_t m, std::uint32_t q);
// Whether the m=1 tree-diagram label of the branch carries a factor (q-2).
bool q_branch_has_q_minus_2(BladeShape b1, BladeShape b2);

BladeShape right_blade(const Wall& w);

struct QEnumeration {
    // Per seed: counts for all-nonzero, top-right-zero, bottom-zero targets.
    std::vector<std::array<std::uint64_t, 3>> per_seed;
    bool well_defined = true;
    std::array<std::uint64_t, 3> counts{};
    std::vector<std::vector<Fe>> seeds;
};

// Seeds are drawn deterministically from the sequences of a few short lengths carrying blade b1.
std::vector<std::vector<Fe>> blade_seeds(const FieldPtr& f, BladeShape b1, std::size_t how_many, std::uint64_t seed = 1);
QEnumeration q_enumerate(const FieldPtr& f, BladeShape b1, std::int64_t m, std::size_t seeds = 20, const EnumConfig& cfg = {});

// Tree diagram: target blade -> number of two-digit extensions.
using TreeDiagram = std::map<BladeShape, std::uint64_t>;
TreeDiagram tree_diagram_expected(BladeShape b1, std::uint32_t q);
TreeDiagram tree_diagram_count(const FieldPtr& f, const std::vector<Fe>& seed);

struct TwoWindowResult {
    std::uint64_t count = 0;
    BigInt unit;            // q^(r-l1-l2)
    bool disjoint_hats = false;
    double ratio = 0.0;     // count / unit, for reporting only
};

bool portions_overlap(const SquarePortion& a, const SquarePortion& b);
bool hat_cones_disjoint(const SquarePortion& a, const SquarePortion& b);
TwoWindowResult two_window_census(const FieldPtr& f, std::int64_t r, const SquarePortion& a, const SquarePortion& b, const EnumConfig& cfg = {});

struct ContinueResult {
    std::size_t seeds = 0;
    std::size_t excluded = 0;
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> counts; // one per admitted seed
    bool ok() const;
};

// Zero-right-blade seeds of length 2k+i extended to 2k+2m+l+1; portion (l, m+k+2, m+k).
ContinueResult window_continue(const FieldPtr& f, std::int64_t k, std::int64_t i, std::int64_t m, std::int64_t l, const EnumConfig& cfg = {});

struct SearchResult {
    bool exhausted = false;
    std::int64_t exhausted_at = 0;           // first length with no survivor
    std::vector<std::uint64_t> frontier;     // survivors per length 1..; partial unless frontier_complete
    bool frontier_complete = true;
    std::optional<std::vector<Fe>> witness;  // survivor of length r_max
    std::uint64_t nodes = 0;
};

// Largest guaranteed window size: the widest top-row zero run of any window.
std::int64_t definite_max_window(const Wall& w);
// Stops at the lexicographically first witness unless count_all; an exhausted search always counts every survivor.
SearchResult min_window_search(const FieldPtr& f, std::int64_t r_max, std::int64_t target, const EnumConfig& cfg = {}, bool count_all = false);
// Survivors counted by full enumeration at one length, for validating the pruned search.
std::uint64_t min_window_unpruned(const FieldPtr& f, std::int64_t r, std::int64_t target, const EnumConfig& cfg = {});

} // namespace nw
