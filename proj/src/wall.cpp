#include "numwall/wall.hpp"

#include <algorithm>
#include <sstream>

namespace nw {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::sentinel: return "sentinel";
    case Rule::input: return "input";
    case Rule::window: return "window";
    case Rule::first: return "first";
    case Rule::second: return "second";
    case Rule::third: return "third";
    }
    return "?";
}

const char* status_name(WindowStatus s) {
    switch (s) {
    case WindowStatus::complete: return "complete";
    case WindowStatus::right_open: return "right-open";
    case WindowStatus::left_open: return "left-open";
    case WindowStatus::both_open: return "both-open";
    case WindowStatus::closed_incomplete: return "closed-incomplete";
    }
    return "?";
}

const char* blade_name(BladeShape b) {
    switch (b) {
    case BladeShape::all_nonzero: return "all-nonzero";
    case BladeShape::top_right_zero: return "top-right-zero";
    case BladeShape::top_left_zero: return "top-left-zero";
    case BladeShape::bottom_zero: return "bottom-zero";
    case BladeShape::top_two_zero: return "top-two-zero";
    case BladeShape::top_left_bottom_zero: return "top-left-bottom-zero";
    case BladeShape::zero: return "zero";
    }
    return "?";
}

BladeShape blade_from_pattern(bool tl, bool tr, bool b) {
    if (tl && tr && b) return BladeShape::all_nonzero;
    if (tl && !tr && b) return BladeShape::top_right_zero;
    if (!tl && tr && b) return BladeShape::top_left_zero;
    if (tl && tr && !b) return BladeShape::bottom_zero;
    if (!tl && !tr && b) return BladeShape::top_two_zero;
    if (!tl && tr && !b) return BladeShape::top_left_bottom_zero;
    if (!tl && !tr && !b) return BladeShape::zero;
    fail(Errc::internal_inconsistency, "blade with nonzero top-left and zero top-right and bottom");
}

bool operator==(const WindowRec& a, const WindowRec& b) {
    return a.l == b.l && a.n == b.n && a.m == b.m && a.status == b.status;
}

Fe det_gauss(const Field& f, std::vector<std::vector<Fe>>& a, std::uint64_t* ops) {
    std::size_t n = a.size();
    std::uint64_t cnt = 0;
    Fe d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) {
            d = 0;
            break;
        }
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = f.neg(d);
        }
        d = f.mul(d, a[c][c]);
        Fe inv = f.inv(a[c][c]);
        cnt += 2;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Fe k = f.mul(a[r][c], inv);
            ++cnt;
            for (std::size_t j = c; j < n; ++j) a[r][j] = f.sub(a[r][j], f.mul(k, a[c][j]));
            cnt += 2 * (n - c);
        }
    }
    if (ops) *ops += cnt;
    return d;
}

Fe toeplitz_det(const Seq& s, std::int64_t n, std::int64_t m, std::uint64_t* ops) {
    if (m == -1) return 1;
    if (m < -1) return 0;
    if (n - m < 1 || n + m > s.size())
        fail(Errc::out_of_support, "T_S(" + std::to_string(n) + "," + std::to_string(m) + ") needs entries outside the sequence");
    std::size_t k = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<Fe>> a(k, std::vector<Fe>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = s.at(std::int64_t(i) - std::int64_t(j) + n);
    return det_gauss(*s.field, a, ops);
}

Fe hankel_det(const Seq& s, std::int64_t n, std::int64_t m) {
    if (n < 1 || n + 2 * m > s.size())
        fail(Errc::out_of_support, "H_S(" + std::to_string(n) + "," + std::to_string(m) + ") needs entries outside the sequence");
    std::size_t k = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<Fe>> a(k, std::vector<Fe>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = s.at(std::int64_t(i + j) + n);
    return det_gauss(*s.field, a);
}

Fe Wall::at(std::int64_t m, std::int64_t n) const {
    if (!in_support(m, n))
        fail(Errc::out_of_support, "entry (" + std::to_string(m) + "," + std::to_string(n) + ") lies outside the wall");
    return rows_[static_cast<std::size_t>(m + 2)][static_cast<std::size_t>(n - row_lo(m))];
}

Rule Wall::rule(std::int64_t m, std::int64_t n) const {
    if (!prov_enabled_) fail(Errc::invalid_argument, "wall was built without provenance");
    at(m, n);
    return static_cast<Rule>(prov_[static_cast<std::size_t>(m + 2)][static_cast<std::size_t>(n - row_lo(m))]);
}

void Wall::set(std::int64_t m, std::int64_t n, Fe v, Rule why) {
    auto& row = rows_[static_cast<std::size_t>(m + 2)];
    std::size_t i = static_cast<std::size_t>(n - row_lo(m));
    if (row.size() <= i) row.resize(i + 1, 0);
    row[i] = static_cast<std::uint16_t>(v);
    if (prov_enabled_) {
        auto& pr = prov_[static_cast<std::size_t>(m + 2)];
        if (pr.size() <= i) pr.resize(i + 1, 0);
        pr[i] = static_cast<std::uint8_t>(why);
    }
}

void Wall::init(const Seq& s, WallOptions opt) {
    if (!s.field) fail(Errc::invalid_argument, "sequence has no field");
    f_ = s.field;
    r_ = s.size();
    seq_ = s.v;
    prov_enabled_ = opt.provenance;
    std::size_t nrows = static_cast<std::size_t>(depth() + 3);
    rows_.assign(nrows, {});
    if (prov_enabled_) prov_.assign(nrows, {});
    for (std::int64_t m = -2; m <= depth(); ++m) {
        std::int64_t w = row_hi(m) - row_lo(m) + 1;
        rows_[static_cast<std::size_t>(m + 2)].reserve(static_cast<std::size_t>(std::max<std::int64_t>(w, 0)));
    }
    for (std::int64_t n = -1; n <= r_ + 2; ++n) set(-2, n, 0, Rule::sentinel);
    for (std::int64_t n = 0; n <= r_ + 1; ++n) set(-1, n, 1, Rule::sentinel);
    wins_.clear();
    active_.assign(static_cast<std::size_t>(r_ + 3), -1);
}

#define NW_W(mm, nn) static_cast<Fe>(rows_[static_cast<std::size_t>((mm) + 2)][static_cast<std::size_t>((nn) - row_lo(mm))])

Fe Wall::cell_value(std::int64_t m, std::int64_t n, Rule& why, std::uint64_t& ops) const {
    const Field& f = *f_;
    if (m == 0) {
        why = Rule::input;
        return seq_[static_cast<std::size_t>(n - 1)];
    }
    Fe up2 = NW_W(m - 2, n);
    Fe up = NW_W(m - 1, n);
    if (up2 != 0) {
        why = Rule::first;
        ops += 4;
        Fe num = f.sub(f.mul(up, up), f.mul(NW_W(m - 1, n - 1), NW_W(m - 1, n + 1)));
        return f.div(num, up2);
    }
    std::int32_t idx = active_[static_cast<std::size_t>(n)];
    if (idx < 0)
        fail(Errc::internal_inconsistency, "no window registered above (" + std::to_string(m) + "," + std::to_string(n) + ")");
    const Active& w = wins_[static_cast<std::size_t>(idx)];
    std::int64_t m0 = w.m0, n0 = w.n0, g = w.g;
    if (up == 0 && m <= m0 + g - 1) {
        why = Rule::window;
        return 0;
    }
    bool closed = n0 > m0 + 1 && n0 + g <= r_ - m0 && NW_W(m0, n0 + g) != 0;
    bool second = up == 0 && m == m0 + g;
    bool third = up != 0 && m - 2 == m0 + g - 1;
    if (!closed || (!second && !third))
        fail(Errc::internal_inconsistency, "frame bookkeeping cannot supply entry (" + std::to_string(m) + "," + std::to_string(n) + ")");
    std::int64_t k = n0 + g - n;
    Fe A = NW_W(m0 - 1, n0 - 1 + k);
    Fe B = NW_W(m0 - 1 + k, n0 - 1);
    Fe C = NW_W(m0 + g - k, n0 + g);
    if (second) {
        why = Rule::second;
        ops += 4;
        return f.mul(f.sign(g * k), f.div(f.mul(B, C), A));
    }
    why = Rule::third;
    Fe D = up;
    Fe E = NW_W(m0 - 2, n0 - 1 + k);
    Fe F = NW_W(m0 - 1 + k, n0 - 2);
    Fe G = NW_W(m0 + g - k, n0 + g + 1);
    Fe corner = NW_W(m0 - 1, n0 - 1);
    Fe P = f.div(NW_W(m0 - 1, n0), corner);
    Fe Q = f.div(NW_W(m0, n0 - 1), corner);
    Fe R = f.div(NW_W(m0 - 1, n0 + g), NW_W(m0, n0 + g));
    Fe S = f.mul(f.sign(g), f.div(f.mul(Q, R), P));
    Fe sk = f.sign(k);
    Fe t1 = f.div(f.mul(Q, E), A);
    Fe t2 = f.mul(sk, f.div(f.mul(P, F), B));
    Fe t3 = f.mul(sk, f.div(f.mul(S, G), C));
    ops += 22;
    return f.mul(f.div(D, R), f.sub(f.add(t1, t2), t3));
}

void Wall::register_cell(std::int64_t m, std::int64_t n) {
    if (NW_W(m, n) != 0 || NW_W(m - 1, n) == 0) return;
    if (n - 1 >= m + 1 && NW_W(m, n - 1) == 0 && NW_W(m - 1, n - 1) != 0) {
        std::int32_t idx = active_[static_cast<std::size_t>(n - 1)];
        if (idx >= 0 && wins_[static_cast<std::size_t>(idx)].m0 == m) {
            ++wins_[static_cast<std::size_t>(idx)].g;
            active_[static_cast<std::size_t>(n)] = idx;
            return;
        }
    }
    wins_.push_back({m, n, 1});
    active_[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(wins_.size() - 1);
}

Wall Wall::frame(const Seq& s, WallOptions opt, std::uint64_t* ops) {
    Wall w;
    w.init(s, opt);
    std::uint64_t cnt = 0;
    for (std::int64_t m = 0; m <= w.depth(); ++m) {
        for (std::int64_t n = m + 1; n <= w.r_ - m; ++n) {
            Rule why;
            Fe v = w.cell_value(m, n, why, cnt);
            w.set(m, n, v, why);
            w.register_cell(m, n);
        }
    }
    if (ops) *ops += cnt;
    return w;
}

Wall Wall::naive(const Seq& s, std::uint64_t* ops) {
    Wall w;
    w.init(s, WallOptions{false});
    for (std::int64_t m = 0; m <= w.depth(); ++m) {
        for (std::int64_t n = m + 1; n <= w.r_ - m; ++n) {
            w.set(m, n, toeplitz_det(s, n, m, ops), Rule::input);
            w.register_cell(m, n);
        }
    }
    return w;
}

void Wall::grow_to(std::int64_t r) {
    r_ = r;
    std::size_t nrows = static_cast<std::size_t>(depth() + 3);
    if (rows_.size() < nrows) {
        rows_.resize(nrows);
        if (prov_enabled_) prov_.resize(nrows);
    }
    active_.resize(static_cast<std::size_t>(r_ + 3), -1);
    set(-2, r_ + 2, 0, Rule::sentinel);
    set(-2, r_ + 1, 0, Rule::sentinel);
    set(-1, r_ + 1, 1, Rule::sentinel);
    set(-1, r_, 1, Rule::sentinel);
}

ExtendReport Wall::extend(Fe s_next, std::uint64_t* ops) {
    if (!f_) fail(Errc::invalid_argument, "cannot extend an empty wall without a field");
    if (!f_->valid(s_next)) fail(Errc::invalid_argument, "element code out of range");
    ExtendReport rep;
    seq_.push_back(s_next);
    grow_to(r_ + 1);
    std::uint64_t cnt = 0;
    for (std::int64_t i = 0; i <= depth(); ++i) {
        std::int64_t n = r_ - i;
        rep.determined.push_back(NW_W(i - 1, n - 1) == 0);
        Rule why;
        Fe v = cell_value(i, n, why, cnt);
        set(i, n, v, why);
        register_cell(i, n);
    }
    if (ops) *ops += cnt;
    return rep;
}

#undef NW_W

bool Wall::same_entries(const Wall& o) const {
    if (r_ != o.r_ || !f_ || !o.f_ || !f_->same(*o.f_)) return false;
    for (std::int64_t m = -2; m <= depth(); ++m)
        for (std::int64_t n = row_lo(m); n <= row_hi(m); ++n)
            if (at(m, n) != o.at(m, n)) return false;
    return true;
}

std::vector<WindowRec> Wall::registry() const {
    std::vector<WindowRec> out;
    for (const Active& a : wins_) {
        WindowRec w;
        w.m = a.m0;
        w.n = a.n0;
        w.l = a.g;
        bool lo = a.n0 == a.m0 + 1;
        bool ro = a.n0 + a.g - 1 == r_ - a.m0;
        if (lo && ro) w.status = WindowStatus::both_open;
        else if (lo) w.status = WindowStatus::left_open;
        else if (ro) w.status = WindowStatus::right_open;
        else {
            bool full = in_support(a.m0 + a.g, a.n0 - 1) && in_support(a.m0 + a.g, a.n0 + a.g);
            w.status = full ? WindowStatus::complete : WindowStatus::closed_incomplete;
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const WindowRec& a, const WindowRec& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });
    return out;
}

Wall wall_naive(const Seq& s) { return Wall::naive(s); }
Wall wall_frame(const Seq& s) { return Wall::frame(s); }

std::pair<Wall, ExtendReport> extend_diagonal(const Wall& w, Fe s_next) {
    Wall out = w;
    ExtendReport rep = out.extend(s_next);
    return {std::move(out), std::move(rep)};
}

Seq reverse(const Seq& s) {
    Seq r = s;
    std::reverse(r.v.begin(), r.v.end());
    r.recipe = s.recipe.empty() ? std::string() : "reverse(" + s.recipe + ")";
    return r;
}

bool reflect_check(const Seq& s) {
    Wall a = Wall::frame(s, {false});
    Wall b = Wall::frame(reverse(s), {false});
    std::int64_t r = s.size();
    for (std::int64_t m = 0; m <= a.depth(); ++m)
        for (std::int64_t n = 0; n <= r - 1 - 2 * m; ++n)
            if (b.at(m, r - m - n) != a.at(m, m + n + 1)) return false;
    return true;
}

Blades blades(const Wall& w) {
    std::int64_t r = w.length();
    if (r < 1) fail(Errc::too_short, "blades need at least one sequence entry");
    std::int64_t d = w.depth();
    Blades b;
    b.right = blade_from_pattern(w.at(d - 1, r - d) != 0, w.at(d - 1, r - d + 1) != 0, w.at(d, r - d) != 0);
    b.left = blade_from_pattern(w.at(d - 1, d + 1) != 0, w.at(d - 1, d) != 0, w.at(d, d + 1) != 0);
    return b;
}

std::string wall_csv(const Wall& w) {
    std::ostringstream os;
    os << "m,n,value\n";
    for (std::int64_t m = -2; m <= w.depth(); ++m)
        for (std::int64_t n = Wall::row_lo(m); n <= w.row_hi(m); ++n) os << m << "," << n << "," << w.at(m, n) << "\n";
    return os.str();
}

std::uint8_t gray_level(std::uint32_t code, std::uint32_t q) {
    return static_cast<std::uint8_t>((255u * code * 2 + q) / (2 * q));
}

std::string wall_ppm(const Wall& w) {
    std::int64_t width = w.length() + 4;
    std::int64_t height = w.depth() + 3;
    std::string head = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::string px(static_cast<std::size_t>(width * height * 3), static_cast<char>(255));
    std::uint32_t q = w.field()->q();
    for (std::int64_t m = -2; m <= w.depth(); ++m) {
        for (std::int64_t n = Wall::row_lo(m); n <= w.row_hi(m); ++n) {
            std::size_t at = static_cast<std::size_t>(((m + 2) * width + (n + 1)) * 3);
            Fe v = w.at(m, n);
            if (v == 0) {
                px[at] = static_cast<char>(255);
                px[at + 1] = 0;
                px[at + 2] = 0;
            } else {
                char g = static_cast<char>(gray_level(v, q));
                px[at] = px[at + 1] = px[at + 2] = g;
            }
        }
    }
    return head + px;
}

} // namespace nw
