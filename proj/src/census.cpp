#include "numwall/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

namespace nw {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("NW_BUDGET")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        fail(Errc::invalid_argument, std::string("NW_BUDGET must be a positive integer, got '") + env + "'");
    }
    return kDefaultBudget;
}

BigInt ipow(std::uint64_t q, std::int64_t e) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent in integer power");
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
}

namespace {

Seq empty_seq(const FieldPtr& f) { return Seq{f, {}, ""}; }

void check_budget(std::uint32_t q, std::int64_t r, std::uint64_t budget, std::uint64_t factor = 1) {
    BigInt need = ipow(q, r) * factor;
    if (need > budget)
        fail(Errc::space_too_large, "enumeration of " + need.str() + " walls exceeds budget " + std::to_string(budget) + " (set NW_BUDGET to raise it)");
}

std::vector<Fe> digits_of(std::uint64_t code, std::uint32_t q, std::int64_t len) {
    std::vector<Fe> v(static_cast<std::size_t>(len));
    for (std::int64_t i = len - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<Fe>(code % q);
        code /= q;
    }
    return v;
}

// Depth-first walk over all extensions of w by `more` entries.
void dfs(const Wall& w, std::int64_t more, std::uint32_t q, const std::function<void(const Wall&)>& leaf) {
    if (more == 0) {
        leaf(w);
        return;
    }
    for (Fe x = 0; x < q; ++x) {
        Wall c = w;
        c.extend(x);
        dfs(c, more - 1, q, leaf);
    }
}

void run_units(std::size_t units, unsigned jobs, const std::function<void(std::size_t)>& work) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || units <= 1) {
        for (std::size_t u = 0; u < units; ++u) work(u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned j = 0; j < std::min<std::size_t>(jobs, units); ++j) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t u = next.fetch_add(1);
                if (u >= units) return;
                try {
                    work(u);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

Wall wall_of(const FieldPtr& f, const std::vector<Fe>& v) { return Wall::frame(Seq{f, v, ""}); }

} // namespace

std::size_t for_each_wall(const FieldPtr& f, std::int64_t r, const EnumConfig& cfg,
                          const std::function<void(const Wall&, std::size_t)>& visit, std::size_t* units_out) {
    std::uint32_t q = f->q();
    check_budget(q, r, cfg.budget);
    std::int64_t p0 = 0;
    std::uint64_t units = 1;
    while (p0 < r && units < 16ull * std::max(1u, cfg.jobs)) {
        ++p0;
        units *= q;
    }
    if (units_out) *units_out = units;
    run_units(units, cfg.jobs, [&](std::size_t u) {
        Wall w = Wall::frame(empty_seq(f), {false});
        for (Fe x : digits_of(u, q, p0)) w.extend(x);
        dfs(w, r - p0, q, [&](const Wall& leaf) { visit(leaf, u); });
    });
    return units;
}

std::vector<std::uint64_t> count_walls(const FieldPtr& f, std::int64_t r, const EnumConfig& cfg,
                                       const std::vector<std::function<bool(const Wall&)>>& preds) {
    std::vector<std::vector<std::uint64_t>> per_unit;
    std::size_t units = 0;
    std::uint32_t q = f->q();
    // Size the per-unit table before the parallel walk.
    {
        std::int64_t p0 = 0;
        std::uint64_t u = 1;
        while (p0 < r && u < 16ull * std::max(1u, cfg.jobs)) {
            ++p0;
            u *= q;
        }
        per_unit.assign(u, std::vector<std::uint64_t>(preds.size(), 0));
    }
    for_each_wall(f, r, cfg, [&](const Wall& w, std::size_t unit) {
        auto& acc = per_unit[unit];
        for (std::size_t i = 0; i < preds.size(); ++i)
            if (preds[i](w)) ++acc[i];
    }, &units);
    std::vector<std::uint64_t> total(preds.size(), 0);
    for (const auto& acc : per_unit)
        for (std::size_t i = 0; i < acc.size(); ++i) total[i] += acc[i];
    return total;
}

bool portion_visible(std::int64_t r, const SquarePortion& p) {
    return p.l >= 1 && p.m >= 0 && p.n >= p.m + 1 && p.n + p.l - 1 <= r - p.m;
}

bool contains_portion(const Wall& w, const SquarePortion& p) {
    auto vis = [&](std::int64_t m, std::int64_t n) { return m >= 0 && w.in_support(m, n); };
    if (!vis(p.m, p.n) || w.at(p.m, p.n) != 0) return false;
    for (std::int64_t i = 0; i < p.l; ++i)
        for (std::int64_t j = 0; j < p.l; ++j)
            if (vis(p.m + i, p.n + j) && w.at(p.m + i, p.n + j) != 0) return false;
    std::int64_t r = w.length();
    std::int64_t m0 = p.m;
    while (m0 - 1 >= 0 && w.at(m0 - 1, p.n) == 0) --m0;
    std::int64_t a = p.n, b = p.n;
    while (a - 1 >= m0 + 1 && w.at(m0, a - 1) == 0) --a;
    while (b + 1 <= r - m0 && w.at(m0, b + 1) == 0) ++b;
    std::int64_t width = b - a + 1;
    bool lo = a == m0 + 1, ro = b == r - m0;
    if (!lo && !ro) return p.n >= a && p.n + p.l <= a + width && p.m + p.l <= m0 + width;
    if (!lo && ro) return p.n >= a;
    if (lo && !ro) return p.n + p.l <= a + width;
    return true;
}

bool rect_zero(const Wall& w, const RectPortion& p) {
    for (std::int64_t i = 0; i < p.height; ++i)
        for (std::int64_t j = 0; j < p.width; ++j) {
            std::int64_t m = p.m + i, n = p.n + j;
            if (m < 0 || !w.in_support(m, n) || w.at(m, n) != 0) return false;
        }
    return true;
}

std::vector<SquarePortion> admissible_portions(std::int64_t r) {
    std::vector<SquarePortion> out;
    for (std::int64_t l = 1; l <= r; ++l)
        for (std::int64_t m = 0; 2 * m + 1 + l <= r; ++m)
            for (std::int64_t n = m + 1; n + l - 1 <= r - m; ++n) out.push_back({l, n, m});
    return out;
}

std::uint64_t enumerate_portion(const FieldPtr& f, std::int64_t r, const SquarePortion& p, const EnumConfig& cfg) {
    if (r < 2 * p.m + 1 + p.l) fail(Errc::invalid_portion, "portion needs r >= 2m+1+l");
    if (!portion_visible(r, p)) fail(Errc::invalid_portion, "portion top row must lie inside the wall");
    return count_walls(f, r, cfg, {[&](const Wall& w) { return contains_portion(w, p); }})[0];
}

BigInt formula_rect(std::uint32_t q, std::int64_t r, std::int64_t l, std::int64_t d, std::int64_t n, std::int64_t m) {
    if (l < 1 || d >= l || m < 0) fail(Errc::out_of_regime, "rectangle needs l >= 1 and d < l");
    std::int64_t bottom = m + l - d - 1;
    if (n < bottom + 1 || n + l - 1 > r - bottom) fail(Errc::invalid_portion, "rectangle must lie fully inside the wall");
    BigInt Q = q;
    BigInt num, den;
    std::int64_t e;
    if (d <= 0) {
        if (d < m - n) fail(Errc::out_of_regime, "d below m-n");
        // Longest side is the height l-d.
        std::int64_t L = l - d;
        e = r - L - 2 * m - 1;
        num = (BigInt(1 - d) * ipow(q, 2 * m + 2)) - (BigInt(-d - 1) * ipow(q, 2 * m + 1)) - BigInt(d) * (Q - 1);
        den = Q + 1;
    } else {
        std::int64_t dd = std::min(d, m);
        e = r - l - 2 * m;
        num = BigInt(dd + 1) * ipow(q, 2 * m + 2) + 2 * ipow(q, 2 * m + 1) - BigInt(dd - 1) * ipow(q, 2 * m) - ipow(q, 2 * dd) + 1;
        den = (Q + 1) * (Q + 1);
    }
    if (e >= 0) num *= ipow(q, e);
    else den *= ipow(q, -e);
    if (num % den != 0) fail(Errc::out_of_regime, "rectangle formula is not integral here");
    return num / den;
}

bool q_codomain(BladeShape b) {
    return b == BladeShape::all_nonzero || b == BladeShape::top_right_zero || b == BladeShape::bottom_zero;
}

bool q_branch_has_q_minus_2(BladeShape b1, BladeShape b2) {
    return b2 == BladeShape::all_nonzero && (b1 == BladeShape::all_nonzero || b1 == BladeShape::top_left_zero);
}

BigInt q_formula(BladeShape b1, BladeShape b2, std::int64_t m, std::uint32_t q) {
    using B = BladeShape;
    if (b1 == B::zero || !q_codomain(b2)) fail(Errc::unsupported_shape_pair, std::string("Q undefined for ") + blade_name(b1) + " -> " + blade_name(b2));
    if (m < 0) fail(Errc::invalid_argument, "m must be non-negative");
    if (m == 0) return b1 == b2 ? 1 : 0;
    BigInt Q = q;
    auto P = [&](std::int64_t e) { return ipow(q, e); };
    auto div = [&](const BigInt& num) {
        if (num % (Q + 1) != 0) fail(Errc::internal_inconsistency, "Q formula not integral");
        return BigInt(num / (Q + 1));
    };
    if (b2 == B::all_nonzero) {
        if (b1 == B::top_two_zero || b1 == B::top_left_bottom_zero) return m == 1 ? Q * (Q - 1) : div(Q * (Q - 1) * (Q - 1) * (P(2 * m - 2) - 1));
        if (b1 == B::top_left_zero) return m == 1 ? Q * (Q - 2) : div(Q * (Q - 1) * (P(2 * m - 1) - P(2 * m - 2) + 2));
        if (b1 == B::all_nonzero) return div((Q - 1) * (P(2 * m) - P(2 * m - 1) - 2));
        return div((Q - 1) * (Q - 1) * (P(2 * m - 1) + 1)); // top-right-zero, bottom-zero
    }
    if (b2 == B::top_right_zero) {
        if (b1 == B::all_nonzero || b1 == B::bottom_zero) return div((Q - 1) * (P(2 * m - 1) + 1));
        if (b1 == B::top_right_zero) return div(Q * (Q - 1) * (P(2 * m - 2) - 1));
        if (b1 == B::top_left_zero || b1 == B::top_left_bottom_zero) return m == 1 ? Q : div(Q * (Q - 1) * (P(2 * m - 2) - 1));
        return m == 1 ? BigInt(0) : div(Q * Q * (Q - 1) * (P(2 * m - 3) + 1)); // top-two-zero
    }
    // bottom-zero target
    if (b1 == B::all_nonzero || b1 == B::top_right_zero) return div((Q - 1) * (P(2 * m - 1) + 1));
    if (b1 == B::top_left_zero || b1 == B::top_two_zero) return m == 1 ? Q : div(Q * (Q - 1) * (P(2 * m - 2) - 1));
    if (b1 == B::bottom_zero) return div(Q * (Q - 1) * (P(2 * m - 2) - 1));
    return m == 1 ? BigInt(0) : div(Q * Q * (Q - 1) * (P(2 * m - 3) + 1)); // top-left-bottom-zero
}

BladeShape right_blade(const Wall& w) { return blades(w).right; }

std::vector<std::vector<Fe>> blade_seeds(const FieldPtr& f, BladeShape b1, std::size_t how_many, std::uint64_t seed) {
    std::uint32_t q = f->q();
    std::int64_t base = q <= 3 ? 7 : (q <= 5 ? 6 : 4);
    std::vector<std::vector<Fe>> pool;
    for (std::int64_t len : {base, base + 1}) {
        std::uint64_t total = static_cast<std::uint64_t>(ipow(q, len));
        Wall empty = Wall::frame(empty_seq(f), {false});
        dfs(empty, len, q, [&](const Wall& w) {
            if (right_blade(w) == b1) pool.push_back(w.sequence());
        });
        (void)total;
    }
    if (pool.empty()) fail(Errc::no_seed_with_blade, std::string("no short sequence has right blade ") + blade_name(b1));
    std::mt19937_64 gen(seed);
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[gen() % i]);
    if (pool.size() > how_many) pool.resize(how_many);
    return pool;
}

QEnumeration q_enumerate(const FieldPtr& f, BladeShape b1, std::int64_t m, std::size_t seeds, const EnumConfig& cfg) {
    if (b1 == BladeShape::zero) fail(Errc::unsupported_shape_pair, "Q is defined for nonzero source blades");
    std::uint32_t q = f->q();
    check_budget(q, 2 * m, cfg.budget, seeds);
    QEnumeration out;
    out.seeds = blade_seeds(f, b1, seeds);
    out.per_seed.assign(out.seeds.size(), {});
    run_units(out.seeds.size(), cfg.jobs, [&](std::size_t i) {
        std::array<std::uint64_t, 3> c{};
        dfs(wall_of(f, out.seeds[i]), 2 * m, q, [&](const Wall& w) {
            BladeShape b = right_blade(w);
            if (b == BladeShape::all_nonzero) ++c[0];
            else if (b == BladeShape::top_right_zero) ++c[1];
            else if (b == BladeShape::bottom_zero) ++c[2];
        });
        out.per_seed[i] = c;
    });
    out.counts = out.per_seed.front();
    for (const auto& c : out.per_seed)
        if (c != out.counts) out.well_defined = false;
    return out;
}

TreeDiagram tree_diagram_expected(BladeShape b1, std::uint32_t q) {
    using B = BladeShape;
    std::uint64_t Q = q;
    TreeDiagram t;
    auto put = [&](B b, std::uint64_t v) {
        if (v) t[b] = v;
    };
    switch (b1) {
    case B::all_nonzero:
        put(B::all_nonzero, (Q - 1) * (Q - 2));
        put(B::top_right_zero, Q - 1);
        put(B::bottom_zero, Q - 1);
        put(B::top_left_zero, Q - 1);
        put(B::zero, 1);
        break;
    case B::top_right_zero:
        put(B::all_nonzero, (Q - 1) * (Q - 1));
        put(B::bottom_zero, Q - 1);
        put(B::top_two_zero, Q - 1);
        put(B::zero, 1);
        break;
    case B::bottom_zero:
        put(B::all_nonzero, (Q - 1) * (Q - 1));
        put(B::top_right_zero, Q - 1);
        put(B::top_left_bottom_zero, Q - 1);
        put(B::zero, 1);
        break;
    case B::top_left_zero:
        put(B::all_nonzero, Q * (Q - 2));
        put(B::top_right_zero, Q);
        put(B::bottom_zero, Q);
        break;
    case B::top_two_zero:
        put(B::all_nonzero, Q * (Q - 1));
        put(B::bottom_zero, Q);
        break;
    case B::top_left_bottom_zero:
        put(B::all_nonzero, Q * (Q - 1));
        put(B::top_right_zero, Q);
        break;
    case B::zero: fail(Errc::unsupported_shape_pair, "the zero blade has no tree diagram");
    }
    return t;
}

TreeDiagram tree_diagram_count(const FieldPtr& f, const std::vector<Fe>& seed) {
    TreeDiagram t;
    dfs(wall_of(f, seed), 2, f->q(), [&](const Wall& w) { ++t[right_blade(w)]; });
    return t;
}

bool portions_overlap(const SquarePortion& a, const SquarePortion& b) {
    bool rows = a.m < b.m + b.l && b.m < a.m + a.l;
    bool cols = a.n < b.n + b.l && b.n < a.n + a.l;
    return rows && cols;
}

bool hat_cones_disjoint(const SquarePortion& a, const SquarePortion& b) {
    std::int64_t a0 = a.n - a.m, a1 = a.n + a.m + a.l - 1;
    std::int64_t b0 = b.n - b.m, b1 = b.n + b.m + b.l - 1;
    return a1 < b0 || b1 < a0;
}

TwoWindowResult two_window_census(const FieldPtr& f, std::int64_t r, const SquarePortion& a, const SquarePortion& b, const EnumConfig& cfg) {
    auto full = [&](const SquarePortion& p) { return portion_visible(r, p) && p.n + p.l - 1 <= r - (p.m + p.l - 1) && p.n >= p.m + p.l; };
    if (!full(a) || !full(b)) fail(Errc::invalid_portion, "two-window portions must lie fully inside the wall");
    if (portions_overlap(a, b)) fail(Errc::overlapping_portions, "portions overlap; count the enclosing rectangle instead");
    TwoWindowResult res;
    res.count = count_walls(f, r, cfg, {[&](const Wall& w) { return contains_portion(w, a) && contains_portion(w, b); }})[0];
    res.unit = ipow(f->q(), r - a.l - b.l);
    res.disjoint_hats = hat_cones_disjoint(a, b);
    res.ratio = static_cast<double>(res.count) / static_cast<double>(res.unit);
    return res;
}

bool ContinueResult::ok() const {
    if (counts.empty()) return false;
    return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == expected; });
}

ContinueResult window_continue(const FieldPtr& f, std::int64_t k, std::int64_t i, std::int64_t m, std::int64_t l, const EnumConfig& cfg) {
    if (k < 1 || (i != 1 && i != 2) || m < 0 || l < 1) fail(Errc::invalid_argument, "window-continue needs k >= 1, i in {1,2}, m >= 0, l >= 1");
    if (2 * m + 1 - i < 0) fail(Errc::out_of_regime, "window-continue needs 2m+1-i >= 0");
    std::uint32_t q = f->q();
    std::int64_t L0 = 2 * k + i, Lf = 2 * k + 2 * m + l + 1;
    if (Lf < L0) fail(Errc::invalid_argument, "extension shorter than seed");
    check_budget(q, Lf, cfg.budget);
    SquarePortion P{l, m + k + 2, m + k};
    ContinueResult res;
    res.expected = static_cast<std::uint64_t>(ipow(q, 2 * m + 1 - i));
    std::vector<std::vector<Fe>> seeds;
    dfs(Wall::frame(empty_seq(f), {false}), L0, q, [&](const Wall& w) {
        if (right_blade(w) != BladeShape::zero) return;
        ++res.seeds;
        std::int64_t d = w.depth();
        std::int64_t m0 = d, n0 = L0 - d;
        while (m0 - 1 >= 0 && w.at(m0 - 1, n0) == 0) --m0;
        while (n0 - 1 >= m0 + 1 && w.at(m0, n0 - 1) == 0) --n0;
        std::int64_t b = n0;
        while (b + 1 <= L0 - m0 && w.at(m0, b + 1) == 0) ++b;
        std::int64_t width = b - n0 + 1;
        SquarePortion framed{width + 2, n0 - 1, m0 - 1};
        if (portions_overlap(framed, P)) {
            ++res.excluded;
            return;
        }
        seeds.push_back(w.sequence());
    });
    res.counts.assign(seeds.size(), 0);
    run_units(seeds.size(), cfg.jobs, [&](std::size_t s) {
        std::uint64_t c = 0;
        dfs(wall_of(f, seeds[s]), Lf - L0, q, [&](const Wall& w) {
            if (contains_portion(w, P)) ++c;
        });
        res.counts[s] = c;
    });
    return res;
}

std::int64_t definite_max_window(const Wall& w) {
    std::int64_t best = 0;
    for (const WindowRec& rec : w.registry()) best = std::max(best, rec.l);
    return best;
}

SearchResult min_window_search(const FieldPtr& f, std::int64_t r_max, std::int64_t target, const EnumConfig& cfg, bool count_all) {
    if (target < 1 || r_max < 1) fail(Errc::invalid_argument, "search needs target >= 1 and r_max >= 1");
    std::uint32_t q = f->q();
    SearchResult res;
    res.frontier.assign(static_cast<std::size_t>(r_max), 0);
    // Breadth-first over short prefixes to create work units.
    std::vector<Wall> level{Wall::frame(empty_seq(f), {false})};
    std::int64_t len = 0;
    std::uint64_t nodes = 0;
    while (len < r_max && !level.empty() && level.size() < 64ull * std::max(1u, cfg.jobs)) {
        std::vector<Wall> next;
        for (const Wall& w : level)
            for (Fe x = 0; x < q; ++x) {
                Wall c = w;
                c.extend(x);
                ++nodes;
                if (definite_max_window(c) < target) next.push_back(std::move(c));
            }
        ++len;
        res.frontier[static_cast<std::size_t>(len - 1)] = next.size();
        if (nodes > cfg.budget) fail(Errc::space_too_large, "search exceeded node budget");
        level = std::move(next);
    }
    struct Unit {
        std::vector<std::uint64_t> frontier;
        std::optional<std::vector<Fe>> witness;
        std::uint64_t nodes = 0;
    };
    std::vector<Unit> units(level.size());
    std::atomic<std::uint64_t> total_nodes{nodes};
    // Lowest unit index holding a witness; later units stop early unless every node is counted.
    std::atomic<std::size_t> first_hit{level.size()};
    std::int64_t base = len;
    run_units(level.size(), cfg.jobs, [&](std::size_t u) {
        Unit& U = units[u];
        U.frontier.assign(static_cast<std::size_t>(r_max), 0);
        auto stop = [&] { return !count_all && (U.witness || first_hit.load() < u); };
        std::function<void(const Wall&)> go = [&](const Wall& w) {
            if (w.length() == r_max) {
                if (!U.witness) {
                    U.witness = w.sequence();
                    std::size_t cur = first_hit.load();
                    while (u < cur && !first_hit.compare_exchange_weak(cur, u)) {
                    }
                }
                return;
            }
            for (Fe x = 0; x < q && !stop(); ++x) {
                Wall c = w;
                c.extend(x);
                ++U.nodes;
                if ((U.nodes & 0xffff) == 0 && total_nodes.fetch_add(0x10000) > cfg.budget)
                    fail(Errc::space_too_large, "search exceeded node budget");
                if (definite_max_window(c) >= target) continue;
                ++U.frontier[static_cast<std::size_t>(c.length() - 1)];
                go(c);
            }
        };
        go(level[u]);
    });
    if (base == r_max && !level.empty()) res.witness = level.front().sequence();
    for (const Unit& U : units) {
        for (std::int64_t i = base; i < r_max; ++i) res.frontier[static_cast<std::size_t>(i)] += U.frontier[static_cast<std::size_t>(i)];
        res.nodes += U.nodes;
        if (!res.witness && U.witness) res.witness = U.witness;
    }
    res.nodes += nodes;
    res.frontier_complete = count_all || !res.witness;
    for (std::int64_t i = 0; i < r_max; ++i)
        if (res.frontier[static_cast<std::size_t>(i)] == 0) {
            res.exhausted = true;
            res.exhausted_at = i + 1;
            res.frontier.resize(static_cast<std::size_t>(i + 1));
            break;
        }
    return res;
}

std::uint64_t min_window_unpruned(const FieldPtr& f, std::int64_t r, std::int64_t target, const EnumConfig& cfg) {
    return count_walls(f, r, cfg, {[&](const Wall& w) { return definite_max_window(w) < target; }})[0];
}

} // namespace nw
