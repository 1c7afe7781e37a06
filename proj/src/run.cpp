#include "run.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "numwall/census.hpp"
#include "numwall/littlewood.hpp"
#include "numwall/seqgen.hpp"

namespace nw {

namespace {

const std::set<std::string> kSubcommands{"wall", "render", "check-lc", "transfer", "census", "search", "selftest"};
const std::set<std::string> kExperiments{"contain-full", "rect", "q-table", "tree-diagrams", "two-window", "window-continue"};

std::int64_t get_int(const json& j, const char* key, std::int64_t dflt) {
    if (!j.contains(key) || j[key].is_null()) return dflt;
    if (!j[key].is_number_integer()) fail(Errc::invalid_argument, std::string("'") + key + "' must be an integer");
    return j[key].get<std::int64_t>();
}

std::string get_str(const json& j, const char* key, const std::string& dflt) {
    if (!j.contains(key) || j[key].is_null()) return dflt;
    if (!j[key].is_string()) fail(Errc::invalid_argument, std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
}

bool needs_sequence(const std::string& sub) { return sub == "wall" || sub == "render" || sub == "check-lc" || sub == "transfer"; }

json normalize_sequence(const json& s) {
    if (!s.is_object()) fail(Errc::invalid_argument, "sequence must be an object");
    std::string kind = get_str(s, "kind", "");
    json out{{"kind", kind}};
    if (kind == "literal") {
        if (s.contains("text")) {
            SymbolFile sf = parse_symbols(get_str(s, "text", ""));
            if (sf.symbols.empty()) fail(Errc::invalid_argument, "sequence is empty");
            out["values"] = sf.symbols;
            if (sf.field) out["field_header"] = *sf.field;
            if (s.contains("source")) out["source"] = s["source"];
            return out;
        }
        if (!s.contains("values") || !s["values"].is_array()) fail(Errc::invalid_argument, "literal sequence needs 'values'");
        if (s["values"].empty()) fail(Errc::invalid_argument, "sequence is empty");
        for (const auto& v : s["values"])
            if (!v.is_number_integer()) fail(Errc::invalid_argument, "sequence values must be integers");
        out["values"] = s["values"];
    } else if (kind == "paper_folding") {
        std::int64_t level = get_int(s, "level", -1), length = get_int(s, "length", -1);
        if (level < 0 || length < 1) fail(Errc::invalid_argument, "paper-folding needs level >= 0 and length >= 1");
        out["level"] = level;
        out["length"] = length;
    } else if (kind == "random") {
        std::int64_t length = get_int(s, "length", -1);
        if (length < 1) fail(Errc::invalid_argument, "random sequence needs length >= 1");
        out["length"] = length;
        out["seed"] = get_int(s, "seed", 1);
        out["algorithm"] = kRandomAlgorithm;
    } else {
        fail(Errc::invalid_argument, "sequence kind must be literal, paper_folding or random");
    }
    if (s.contains("embedding") && !s["embedding"].empty()) {
        if (!s["embedding"].is_object()) fail(Errc::invalid_argument, "embedding must map symbols to codes");
        out["embedding"] = s["embedding"];
    }
    if (s.contains("source")) out["source"] = s["source"];
    return out;
}

Seq build_sequence(const json& s, const FieldPtr& f) {
    SeqRecipe rc;
    rc.field = f;
    std::string kind = s["kind"];
    if (kind == "literal") {
        rc.kind = SeqRecipe::Kind::literal;
        rc.values = s["values"].get<std::vector<std::int64_t>>();
    } else if (kind == "paper_folding") {
        rc.kind = SeqRecipe::Kind::paper_folding;
        rc.level = static_cast<unsigned>(s["level"].get<std::int64_t>());
        rc.length = s["length"];
    } else {
        rc.kind = SeqRecipe::Kind::random;
        rc.seed = static_cast<std::uint64_t>(s["seed"].get<std::int64_t>());
        rc.length = s["length"];
    }
    if (s.contains("embedding")) {
        for (const auto& [k, v] : s["embedding"].items()) {
            std::int64_t sym = 0;
            try {
                sym = std::stoll(k);
            } catch (const std::exception&) {
                fail(Errc::invalid_argument, "embedding key '" + k + "' is not an integer");
            }
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() >= f->q())
                fail(Errc::invalid_argument, "embedding code for symbol " + k + " is not an element of " + f->name());
            rc.embedding[sym] = static_cast<Fe>(v.get<std::int64_t>());
        }
    }
    return materialize(rc);
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os) fail(Errc::io_error, "write to '" + path + "' failed");
}

json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BladeShape blade_from_name(const std::string& s) {
    for (BladeShape b : {BladeShape::all_nonzero, BladeShape::top_right_zero, BladeShape::top_left_zero, BladeShape::bottom_zero,
                         BladeShape::top_two_zero, BladeShape::top_left_bottom_zero, BladeShape::zero})
        if (s == blade_name(b)) return b;
    fail(Errc::invalid_argument, "unknown blade shape '" + s + "'");
}

const std::vector<BladeShape> kSources{BladeShape::all_nonzero, BladeShape::top_right_zero, BladeShape::top_left_zero,
                                       BladeShape::bottom_zero, BladeShape::top_two_zero, BladeShape::top_left_bottom_zero};
const std::vector<BladeShape> kTargets{BladeShape::all_nonzero, BladeShape::top_right_zero, BladeShape::bottom_zero};

json window_json(const WindowRec& w) {
    json j{{"l", w.l}, {"n", w.n}, {"m", w.m}, {"status", status_name(w.status)}};
    if (w.ratios) j["ratios"] = {{"P", w.ratios->P}, {"Q", w.ratios->Q}, {"R", w.ratios->R}, {"S", w.ratios->S}};
    return j;
}

json witness_json(const DioWitness& w) {
    return {{"N", w.N.str()},
            {"k", w.k},
            {"exponent", w.exponent},
            {"resolved", w.resolved},
            {"precision_used", w.precision_used},
            {"ledger", {{"growth", w.ledger.growth}, {"abs", w.ledger.abs}, {"padic", w.ledger.padic}, {"frac", w.ledger.frac}}}};
}

json inf_json(const TruncInf& t) {
    return {{"l", t.l}, {"resolved", t.resolved}, {"deg_bound", t.deg_bound}, {"pow_bound", t.pow_bound},
            {"candidates", t.candidates}, {"witness", witness_json(t.witness)}};
}

json finding_json(const WindowFinding& f) {
    return {{"m", f.m}, {"n", f.n}, {"size", f.size}, {"threshold", f.threshold}, {"status", status_name(f.status)}};
}

constexpr std::size_t kListCap = 100;

// ---------------------------------------------------------------- wall / render

RunOutput run_wall(const json& cfg, const FieldPtr& f, const Seq& s, bool render_only) {
    Wall w = Wall::frame(s);
    const json& outs = cfg["outputs"];
    json rep{{"config", cfg}, {"kind", render_only ? "render" : "wall"}, {"field", f->name()}, {"length", w.length()}, {"depth", w.depth()}};
    if (outs.contains("ppm")) write_file(outs["ppm"], wall_ppm(w));
    if (render_only) {
        rep["width"] = w.length() + 4;
        rep["height"] = w.depth() + 3;
        rep["verdict"] = "pass";
        return {rep.dump(), 0};
    }
    if (outs.contains("csv")) write_file(outs["csv"], wall_csv(w));
    json wins = json::array();
    for (const WindowRec& rec : detect_windows(w)) wins.push_back(window_json(rec));
    rep["windows"] = wins;
    std::map<std::string, std::int64_t> rules;
    for (std::int64_t m = 0; m <= w.depth(); ++m)
        for (std::int64_t n = Wall::row_lo(m); n <= w.row_hi(m); ++n) ++rules[rule_name(w.rule(m, n))];
    rep["rules"] = rules;
    Blades b = blades(w);
    rep["blades"] = {{"right", blade_name(b.right)}, {"left", blade_name(b.left)}};
    int verdict = 0;
    if (cfg["verify"].get<bool>()) {
        bool same = Wall::naive(s).same_entries(w);
        rep["oracle_match"] = same;
        verdict = same ? 0 : 1;
    }
    rep["verdict"] = verdict ? "mismatch" : "pass";
    return {rep.dump(), verdict};
}

// ---------------------------------------------------------------- check-lc

RunOutput run_check_lc(const json& cfg, const FieldPtr& f, const Seq& s) {
    (void)f;
    GrowthFn g = GrowthFn::parse(cfg["growth"].get<std::string>());
    std::int64_t l = cfg["l"];
    AddressMode mode = cfg["mode"] == "diagonal" ? AddressMode::diagonal : AddressMode::column;
    WindowCheck wc = window_check(s, l, g, mode);
    json viol = json::array(), pot = json::array();
    for (std::size_t i = 0; i < wc.violations.size() && i < kListCap; ++i) viol.push_back(finding_json(wc.violations[i]));
    for (std::size_t i = 0; i < wc.potential.size() && i < kListCap; ++i) pot.push_back(finding_json(wc.potential[i]));
    json rep{{"config", cfg},
             {"kind", "check-lc"},
             {"threshold_convention", "violation iff size >= l + b_f(k); the stated form l + b_f(k) - 1 is not used"},
             {"window_check",
              {{"pass", wc.pass},
               {"violation_count", wc.violations.size()},
               {"violations", viol},
               {"potential_count", wc.potential.size()},
               {"potential", pot},
               {"max_closed", wc.max_closed},
               {"max_complete", wc.max_complete},
               {"max_open_visible", wc.max_open_visible}}}};
    int verdict = wc.pass ? 0 : 1;
    if (cfg["audit"].get<bool>()) {
        AuditReport a = equivalence_audit(s, l, g, cfg["deg"], cfg["brute"].get<bool>());
        json mm = json::array();
        for (std::size_t i = 0; i < a.mismatches.size() && i < kListCap; ++i)
            mm.push_back({{"kind", a.mismatches[i].kind}, {"h", a.mismatches[i].h}, {"n", a.mismatches[i].n}, {"detail", a.mismatches[i].detail}});
        rep["audit"] = {{"ok", a.ok()},
                        {"pairs", a.pairs},
                        {"dio_solutions", a.dio_solutions},
                        {"windows", a.windows},
                        {"kernels_checked", a.kernels_checked},
                        {"brute_checked", a.brute_checked},
                        {"mismatch_count", a.mismatches.size()},
                        {"mismatches", mm}};
        if (!a.ok()) verdict = 1;
    }
    rep["verdict"] = verdict ? "violation" : "pass";
    return {rep.dump(), verdict};
}

// ---------------------------------------------------------------- transfer

RunOutput run_transfer(const json& cfg, const FieldPtr& f, const Seq& s) {
    Poly p = Poly::parse(f, cfg["pt"].get<std::string>());
    std::int64_t prec = cfg["prec"];
    if (prec == 0) prec = p.deg().value() * s.size();
    TransferReport t = transfer(s.v, p, cfg["deg"], cfg["pow"], prec);
    json rep{{"config", cfg},   {"kind", "transfer"},   {"p", t.p.str()},           {"deg_p", t.m},
             {"prec_t", t.prec_t}, {"l_base", t.l_base}, {"l_trans", t.l_trans},      {"holds", t.holds},
             {"base", inf_json(t.base)}, {"transferred", inf_json(t.trans)}};
    rep["verdict"] = t.holds ? "match" : "mismatch";
    return {rep.dump(), t.holds ? 0 : 1};
}

// ---------------------------------------------------------------- census

struct CensusCtx {
    json cfg;
    FieldPtr f;
    EnumConfig ec;
    std::uint32_t q = 0;
    json params;
    std::string lines;
    int verdict = 0;

    std::int64_t p(const char* key, std::int64_t dflt) const { return get_int(params, key, dflt); }
    bool has(const char* key) const { return params.contains(key); }
    std::int64_t need(const char* key) const {
        if (!params.contains(key)) fail(Errc::invalid_argument, std::string("experiment needs parameter '") + key + "'");
        return get_int(params, key, 0);
    }
    void emit(json line) {
        std::string v = line.value("verdict", "match");
        if (v == "mismatch") verdict = 1;
        line["config"] = cfg;
        lines += line.dump();
        lines += '\n';
    }
};

json portion_json(const SquarePortion& s) { return {{"l", s.l}, {"n", s.n}, {"m", s.m}}; }

void census_contain_full(CensusCtx& c) {
    std::int64_t r = c.need("r");
    std::vector<SquarePortion> ps;
    if (c.has("l") || c.has("n") || c.has("m")) {
        SquarePortion sp{c.need("l"), c.need("n"), c.need("m")};
        if (r < 2 * sp.m + 1 + sp.l) fail(Errc::invalid_portion, "portion needs r >= 2m+1+l");
        if (!portion_visible(r, sp)) fail(Errc::invalid_portion, "portion top row must lie inside the wall");
        ps.push_back(sp);
    } else {
        ps = admissible_portions(r);
    }
    std::vector<std::function<bool(const Wall&)>> preds;
    for (const auto& sp : ps) preds.push_back([sp](const Wall& w) { return contains_portion(w, sp); });
    auto counts = count_walls(c.f, r, c.ec, preds);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        BigInt expect = ipow(c.q, r - ps[i].l);
        c.emit({{"experiment", "contain-full"}, {"q", c.q}, {"r", r}, {"portion", portion_json(ps[i])}, {"formula_value", big(expect)},
                {"enumerated_value", counts[i]}, {"verdict", BigInt(counts[i]) == expect ? "match" : "mismatch"},
                {"stats", {{"walls", big(ipow(c.q, r))}}}});
    }
}

void census_rect(CensusCtx& c) {
    std::int64_t r = c.need("r");
    struct Item {
        RectPortion p;
        std::int64_t l, d;
        BigInt formula;
    };
    std::vector<Item> items;
    auto add = [&](std::int64_t l, std::int64_t d, std::int64_t n, std::int64_t m) {
        BigInt v = formula_rect(c.q, r, l, d, n, m);
        items.push_back({RectPortion{l, l - d, n, m}, l, d, v});
    };
    if (c.has("l") || c.has("d") || c.has("n") || c.has("m")) {
        add(c.need("l"), c.need("d"), c.need("n"), c.need("m"));
    } else {
        std::int64_t dmax = c.p("dmax", 2);
        for (std::int64_t d = -dmax; d <= dmax; ++d)
            for (std::int64_t l = std::max<std::int64_t>(1, d + 1); l <= r; ++l) {
                std::int64_t h = l - d;
                for (std::int64_t m = 0; m + h - 1 <= (r - 1) / 2; ++m)
                    for (std::int64_t n = m + h; n + l - 1 <= r - (m + h - 1); ++n) {
                        if (d <= 0 && d < m - n) continue;
                        add(l, d, n, m);
                    }
            }
    }
    std::vector<std::function<bool(const Wall&)>> preds;
    for (const auto& it : items) preds.push_back([p = it.p](const Wall& w) { return rect_zero(w, p); });
    auto counts = count_walls(c.f, r, c.ec, preds);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Item& it = items[i];
        json line{{"experiment", "rect"}, {"q", c.q}, {"r", r}, {"l", it.l}, {"d", it.d}, {"n", it.p.n}, {"m", it.p.m},
                  {"regime", it.d <= 0 ? "vertical" : (it.d > it.p.m ? "horizontal-reduced" : "horizontal")},
                  {"formula_value", big(it.formula)}, {"enumerated_value", counts[i]},
                  {"verdict", BigInt(counts[i]) == it.formula ? "match" : "mismatch"}};
        if (it.d != 0) {
            double unit = static_cast<double>(std::llabs(it.d)) * static_cast<double>(ipow(c.q, r - it.l));
            line["bound_ratio"] = static_cast<double>(counts[i]) / unit;
        }
        c.emit(line);
    }
}

void census_q_table(CensusCtx& c) {
    std::vector<std::int64_t> ms;
    if (c.has("m")) ms.push_back(c.need("m"));
    else
        for (std::int64_t m = 0; m <= c.p("m_max", 3); ++m) ms.push_back(m);
    std::vector<BladeShape> srcs = kSources;
    if (c.params.contains("b1")) srcs = {blade_from_name(get_str(c.params, "b1", ""))};
    std::size_t seeds = static_cast<std::size_t>(c.p("seeds", 20));
    for (BladeShape b1 : srcs)
        for (std::int64_t m : ms) {
            QEnumeration e = q_enumerate(c.f, b1, m, seeds, c.ec);
            for (std::size_t k = 0; k < kTargets.size(); ++k) {
                BigInt fv = q_formula(b1, kTargets[k], m, c.q);
                bool eq = fv == e.counts[k] && e.well_defined;
                c.emit({{"experiment", "q-table"}, {"q", c.q}, {"m", m}, {"b1", blade_name(b1)}, {"b2", blade_name(kTargets[k])},
                        {"formula_value", big(fv)}, {"enumerated_value", e.counts[k]}, {"well_defined", e.well_defined},
                        {"seeds", e.seeds.size()}, {"q_minus_2_branch", q_branch_has_q_minus_2(b1, kTargets[k])},
                        {"verdict", eq ? "match" : "mismatch"}});
            }
        }
}

void census_tree(CensusCtx& c) {
    std::size_t seeds = static_cast<std::size_t>(c.p("seeds", 20));
    std::vector<BladeShape> srcs = kSources;
    if (c.params.contains("b1")) srcs = {blade_from_name(get_str(c.params, "b1", ""))};
    for (BladeShape b1 : srcs) {
        TreeDiagram want = tree_diagram_expected(b1, c.q);
        auto list = blade_seeds(c.f, b1, seeds);
        std::size_t agree = 0;
        TreeDiagram first;
        for (std::size_t i = 0; i < list.size(); ++i) {
            TreeDiagram got = tree_diagram_count(c.f, list[i]);
            if (i == 0) first = got;
            if (got == want) ++agree;
        }
        json exp = json::object(), got = json::object();
        for (auto [b, v] : want) exp[blade_name(b)] = v;
        for (auto [b, v] : first) got[blade_name(b)] = v;
        c.emit({{"experiment", "tree-diagrams"}, {"q", c.q}, {"b1", blade_name(b1)}, {"expected", exp}, {"enumerated", got},
                {"seeds", list.size()}, {"seeds_agreeing", agree}, {"verdict", agree == list.size() ? "match" : "mismatch"}});
    }
}

bool fully_visible(std::int64_t r, const SquarePortion& p) {
    return p.l >= 1 && p.m >= 0 && p.n >= p.m + p.l && p.n + p.l - 1 <= r - (p.m + p.l - 1);
}

struct PairSpec {
    std::int64_t r;
    SquarePortion a, b;
};

// Random fully visible, non-overlapping pairs; about half are drawn with disjoint hat cones.
std::vector<PairSpec> random_pairs(std::uint32_t q, std::size_t count, std::uint64_t seed, std::int64_t r_min, std::int64_t r_max) {
    std::mt19937_64 gen(seed ^ (std::uint64_t(q) << 32));
    auto uni = [&](std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<PairSpec> out;
    std::size_t guard = 0;
    while (out.size() < count) {
        if (++guard > 1000000) fail(Errc::invalid_argument, "cannot draw enough portion pairs in the requested length range");
        std::int64_t r = uni(r_min, r_max);
        auto draw = [&]() {
            std::int64_t l = uni(1, 3);
            std::int64_t mmax = (r - 1) / 2 - (l - 1);
            if (mmax < 0) return SquarePortion{0, 0, 0};
            std::int64_t m = uni(0, mmax);
            std::int64_t lo = m + l, hi = r - (m + l - 1) - (l - 1);
            if (hi < lo) return SquarePortion{0, 0, 0};
            return SquarePortion{l, uni(lo, hi), m};
        };
        SquarePortion a = draw(), b = draw();
        if (!fully_visible(r, a) || !fully_visible(r, b) || portions_overlap(a, b)) continue;
        bool want_disjoint = out.size() % 2 == 0;
        if (hat_cones_disjoint(a, b) != want_disjoint) continue;
        if (b.n < a.n || (b.n == a.n && b.m < a.m)) std::swap(a, b);
        out.push_back({r, a, b});
    }
    return out;
}

void census_two_window(CensusCtx& c) {
    double C = c.params.contains("C") ? c.params["C"].get<double>() : static_cast<double>(c.q + 1);
    std::vector<PairSpec> pairs;
    if (c.has("l1")) {
        PairSpec ps{c.need("r"), {c.need("l1"), c.need("n1"), c.need("m1")}, {c.need("l2"), c.need("n2"), c.need("m2")}};
        if (!fully_visible(ps.r, ps.a) || !fully_visible(ps.r, ps.b)) fail(Errc::invalid_portion, "two-window portions must lie fully inside the wall");
        if (portions_overlap(ps.a, ps.b)) fail(Errc::overlapping_portions, "portions overlap; use the rect experiment for the enclosing rectangle");
        pairs.push_back(ps);
    } else {
        std::int64_t count = c.p("pairs", 50);
        std::int64_t rmax = c.p("r_max", c.q == 2 ? 12 : 9);
        std::int64_t rmin = c.p("r_min", std::min<std::int64_t>(rmax, 6));
        pairs = random_pairs(c.q, static_cast<std::size_t>(count), static_cast<std::uint64_t>(c.cfg["seed"].get<std::int64_t>()), rmin, rmax);
    }
    // One enumeration per length.
    std::map<std::int64_t, std::vector<std::size_t>> by_r;
    for (std::size_t i = 0; i < pairs.size(); ++i) by_r[pairs[i].r].push_back(i);
    std::vector<std::uint64_t> counts(pairs.size());
    for (const auto& [r, idx] : by_r) {
        std::vector<std::function<bool(const Wall&)>> preds;
        for (std::size_t i : idx)
            preds.push_back([a = pairs[i].a, b = pairs[i].b](const Wall& w) { return contains_portion(w, a) && contains_portion(w, b); });
        auto cs = count_walls(c.f, r, c.ec, preds);
        for (std::size_t k = 0; k < idx.size(); ++k) counts[idx[k]] = cs[k];
    }
    double max_ratio = 0;
    std::size_t case1 = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairSpec& ps = pairs[i];
        BigInt unit = ipow(c.q, ps.r - ps.a.l - ps.b.l);
        bool disjoint = hat_cones_disjoint(ps.a, ps.b);
        double ratio = static_cast<double>(counts[i]) / static_cast<double>(unit);
        max_ratio = std::max(max_ratio, ratio);
        std::string verdict;
        if (disjoint) {
            ++case1;
            verdict = BigInt(counts[i]) == unit ? "match" : "mismatch";
        } else {
            verdict = ratio <= C ? "bounded" : "mismatch";
        }
        c.emit({{"experiment", "two-window"}, {"q", c.q}, {"r", ps.r}, {"portion1", portion_json(ps.a)}, {"portion2", portion_json(ps.b)},
                {"disjoint_hats", disjoint}, {"formula_value", disjoint ? json(big(unit)) : json("bound " + std::to_string(C) + "*" + big(unit).dump())},
                {"unit", big(unit)}, {"C", C}, {"enumerated_value", counts[i]}, {"ratio", ratio}, {"verdict", verdict}});
    }
    if (pairs.size() > 1)
        c.emit({{"experiment", "two-window-summary"}, {"q", c.q}, {"pairs", pairs.size()}, {"case1_pairs", case1}, {"C", C}, {"max_ratio", max_ratio},
                {"verdict", max_ratio <= C ? "bounded" : "mismatch"}});
}

void census_window_continue(CensusCtx& c) {
    std::int64_t k = c.need("k"), i = c.need("i"), m = c.need("m"), l = c.need("l");
    ContinueResult res = window_continue(c.f, k, i, m, l, c.ec);
    if (res.counts.empty())
        fail(Errc::no_seed_with_blade, "no zero-blade seed of length " + std::to_string(2 * k + i) + " keeps its window clear of the portion");
    std::set<std::uint64_t> distinct(res.counts.begin(), res.counts.end());
    c.emit({{"experiment", "window-continue"}, {"q", c.q}, {"k", k}, {"i", i}, {"m", m}, {"l", l},
            {"portion", portion_json({l, m + k + 2, m + k})}, {"seeds", res.seeds}, {"excluded", res.excluded},
            {"admitted", res.counts.size()}, {"formula_value", res.expected}, {"enumerated_values", std::vector<std::uint64_t>(distinct.begin(), distinct.end())},
            {"verdict", res.ok() ? "match" : "mismatch"}});
}

RunOutput run_census(const json& cfg, const FieldPtr& f, unsigned jobs) {
    CensusCtx c;
    c.cfg = cfg;
    c.f = f;
    c.q = f->q();
    c.params = cfg["params"];
    c.ec = {jobs, static_cast<std::uint64_t>(cfg["budget"].get<std::int64_t>())};
    std::string e = cfg["experiment"];
    if (e == "contain-full") census_contain_full(c);
    else if (e == "rect") census_rect(c);
    else if (e == "q-table") census_q_table(c);
    else if (e == "tree-diagrams") census_tree(c);
    else if (e == "two-window") census_two_window(c);
    else census_window_continue(c);
    return {c.lines, c.verdict};
}

// ---------------------------------------------------------------- search

RunOutput run_search(const json& cfg, const FieldPtr& f, unsigned jobs) {
    EnumConfig ec{jobs, static_cast<std::uint64_t>(cfg["budget"].get<std::int64_t>())};
    SearchResult s = min_window_search(f, cfg["max_len"], cfg["target_window"], ec, cfg["count_all"].get<bool>());
    json rep{{"config", cfg}, {"kind", "search"}, {"q", f->q()}, {"exhausted", s.exhausted}};
    // Partial counts depend on the thread schedule, so only complete ones are reported.
    if (s.frontier_complete) {
        rep["frontier"] = s.frontier;
        rep["nodes"] = s.nodes;
    }
    if (s.exhausted) rep["exhausted_at"] = s.exhausted_at;
    if (s.witness) rep["witness"] = *s.witness;
    rep["result"] = s.exhausted ? "exhausted" : "witness";
    rep["verdict"] = "pass";
    return {rep.dump(), 0};
}

// ---------------------------------------------------------------- selftest

RunOutput run_selftest(const json& cfg, unsigned jobs) {
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        std::string detail;
        bool ok = true;
        try {
            detail = body();
        } catch (const Error& e) {
            ok = false;
            detail = std::string(errc_name(e.code())) + ": " + e.what();
        }
        if (!detail.empty() && detail.rfind("FAIL", 0) == 0) ok = false;
        all = all && ok;
        checks.push_back({{"name", name}, {"pass", ok}, {"detail", detail}});
    };
    EnumConfig ec{jobs, kDefaultBudget};
    auto f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    check("frame-equals-oracle", [&] {
        std::size_t n = 0;
        for (auto f : {f2, f3})
            for (std::int64_t r = 1; r <= (f->q() == 2 ? 8 : 6); ++r)
                for_each_wall(f, r, {1, kDefaultBudget}, [&](const Wall& w, std::size_t) {
                    Seq s{f, w.sequence(), ""};
                    if (!Wall::naive(s).same_entries(w)) fail(Errc::internal_inconsistency, "frame and oracle differ");
                    for (const WindowRec& rec : detect_windows(w))
                        if (rec.status == WindowStatus::complete) frame_ratios(w, rec);
                    ++n;
                });
        return std::to_string(n) + " walls";
    });
    check("contain-full", [&] {
        for (std::int64_t r = 2; r <= 8; ++r) {
            auto ps = admissible_portions(r);
            std::vector<std::function<bool(const Wall&)>> preds;
            for (const auto& sp : ps) preds.push_back([sp](const Wall& w) { return contains_portion(w, sp); });
            auto cs = count_walls(f2, r, ec, preds);
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (BigInt(cs[i]) != ipow(2, r - ps[i].l)) return std::string("FAIL r=") + std::to_string(r);
        }
        return std::string("q=2 r<=8");
    });
    check("q-table", [&] {
        for (BladeShape b1 : kSources)
            for (std::int64_t m = 0; m <= 2; ++m) {
                QEnumeration e = q_enumerate(f3, b1, m, 5, ec);
                for (std::size_t k = 0; k < 3; ++k)
                    if (q_formula(b1, kTargets[k], m, 3) != e.counts[k] || !e.well_defined) return std::string("FAIL ") + blade_name(b1);
            }
        return std::string("q=3 m<=2");
    });
    check("rect", [&] {
        std::int64_t r = 8;
        std::size_t n = 0;
        for (std::int64_t d = -2; d <= 2; ++d)
            for (std::int64_t l = std::max<std::int64_t>(1, d + 1); l <= 3; ++l) {
                std::int64_t h = l - d, m = 0, nn = h;
                if (nn + l - 1 > r - (m + h - 1)) continue;
                RectPortion p{l, h, nn, m};
                auto cs = count_walls(f2, r, ec, {[p](const Wall& w) { return rect_zero(w, p); }});
                if (BigInt(cs[0]) != formula_rect(2, r, l, d, nn, m)) return std::string("FAIL d=") + std::to_string(d);
                ++n;
            }
        return std::to_string(n) + " rectangles";
    });
    check("audit", [&] {
        std::int64_t pairs = 0;
        for (std::int64_t r = 4; r <= 8; ++r)
            for_each_wall(f2, r, {1, kDefaultBudget}, [&](const Wall& w, std::size_t) {
                AuditReport a = equivalence_audit(Seq{f2, w.sequence(), ""}, 1, GrowthFn::constant(1), 3, true);
                if (!a.ok()) fail(Errc::internal_inconsistency, "audit mismatch: " + a.mismatches[0].kind);
                pairs += a.pairs;
            });
        return std::to_string(pairs) + " pairs";
    });
    check("transfer", [&] {
        Poly p = Poly::parse(f3, "t^2+1");
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto b = random_codes(seed, 3, 16);
            TransferReport t = transfer(b, p, 2, 2, 32);
            if (!t.holds) return std::string("FAIL seed ") + std::to_string(seed);
        }
        return std::string("GF(3), t^2+1");
    });
    json rep{{"config", cfg}, {"kind", "selftest"}, {"checks", checks}, {"verdict", all ? "pass" : "mismatch"}};
    return {rep.dump(), all ? 0 : 1};
}

} // namespace

json normalize_config(const json& in) {
    if (!in.is_object()) fail(Errc::invalid_argument, "config must be a JSON object");
    std::string sub = get_str(in, "subcommand", "");
    if (!kSubcommands.count(sub)) fail(Errc::invalid_argument, "unknown subcommand '" + sub + "'");
    json c{{"subcommand", sub}};
    std::string header;
    if (needs_sequence(sub)) {
        if (!in.contains("sequence")) fail(Errc::invalid_argument, "a sequence is required (--seq, --seq-file, --pf or --random)");
        json seq = normalize_sequence(in["sequence"]);
        if (seq.contains("field_header")) {
            header = seq["field_header"];
            seq.erase("field_header");
        }
        c["sequence"] = seq;
    }
    if (sub != "selftest") {
        std::string field = get_str(in, "field", header);
        if (field.empty()) fail(Errc::invalid_argument, "--field is required");
        FieldPtr f = Field::parse(field);
        if (!header.empty() && !Field::parse(header)->same(*f))
            fail(Errc::invalid_argument, "--field " + f->name() + " conflicts with the sequence file header " + header);
        c["field"] = f->name();
    }
    c["seed"] = get_int(in, "seed", 1);
    c["budget"] = get_int(in, "budget", static_cast<std::int64_t>(default_budget()));
    if (c["budget"].get<std::int64_t>() < 1) fail(Errc::invalid_argument, "budget must be positive");
    json outs = in.contains("outputs") ? in["outputs"] : json::object();
    if (!outs.is_object()) fail(Errc::invalid_argument, "outputs must be an object");
    c["outputs"] = outs;
    if (sub == "wall") c["verify"] = in.value("verify", false);
    if (sub == "render" && !outs.contains("ppm")) fail(Errc::invalid_argument, "render needs an output path (--out)");
    if (sub == "check-lc") {
        if (!in.contains("l")) fail(Errc::invalid_argument, "check-lc needs --l");
        c["l"] = get_int(in, "l", 0);
        c["growth"] = GrowthFn::parse(get_str(in, "growth", "const:1")).str();
        std::string mode = get_str(in, "mode", "column");
        if (mode != "column" && mode != "diagonal") fail(Errc::invalid_argument, "--mode must be column or diagonal");
        c["mode"] = mode;
        c["audit"] = in.value("audit", false);
        c["brute"] = in.value("brute", false);
        c["deg"] = get_int(in, "deg", 4);
    }
    if (sub == "transfer") {
        std::string pt = get_str(in, "pt", "");
        if (pt.empty()) fail(Errc::invalid_argument, "transfer needs --pt");
        c["pt"] = pt;
        c["deg"] = get_int(in, "deg", 3);
        c["pow"] = get_int(in, "pow", 2);
        c["prec"] = get_int(in, "prec", 0);
        if (c["deg"].get<std::int64_t>() < 0 || c["pow"].get<std::int64_t>() < 0 || c["prec"].get<std::int64_t>() < 0)
            fail(Errc::invalid_argument, "--deg, --pow and --prec must be non-negative");
    }
    if (sub == "census") {
        std::string e = get_str(in, "experiment", "");
        if (!kExperiments.count(e)) fail(Errc::invalid_argument, "unknown experiment '" + e + "'");
        c["experiment"] = e;
        json params = in.contains("params") ? in["params"] : json::object();
        if (!params.is_object()) fail(Errc::invalid_argument, "params must be an object");
        c["params"] = params;
    }
    if (sub == "search") {
        c["target_window"] = get_int(in, "target_window", 3);
        c["max_len"] = get_int(in, "max_len", 20);
        c["count_all"] = in.value("count_all", false);
    }
    return c;
}

RunOutput run_config(const json& in) {
    json cfg = normalize_config(in);
    unsigned jobs = static_cast<unsigned>(std::max<std::int64_t>(1, get_int(in, "jobs", 1)));
    std::string sub = cfg["subcommand"];
    if (sub == "selftest") return run_selftest(cfg, jobs);
    FieldPtr f = Field::parse(cfg["field"].get<std::string>());
    if (sub == "census") return run_census(cfg, f, jobs);
    if (sub == "search") return run_search(cfg, f, jobs);
    Seq s = build_sequence(cfg["sequence"], f);
    if (sub == "wall") return run_wall(cfg, f, s, false);
    if (sub == "render") return run_wall(cfg, f, s, true);
    if (sub == "check-lc") return run_check_lc(cfg, f, s);
    return run_transfer(cfg, f, s);
}

} // namespace nw
