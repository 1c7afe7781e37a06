#include <algorithm>

#include "numwall/wall.hpp"

namespace nw {

namespace {

std::string cell(std::int64_t m, std::int64_t n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

} // namespace

std::vector<WindowRec> detect_windows(const Wall& w) {
    std::int64_t r = w.length();
    std::int64_t depth = w.depth();
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(std::max<std::int64_t>(depth + 1, 0)));
    for (std::int64_t m = 0; m <= depth; ++m) seen[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(r - 2 * m), 0);
    auto mark = [&](std::int64_t m, std::int64_t n) -> char& { return seen[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - m - 1)]; };

    std::vector<WindowRec> out;
    std::vector<std::pair<std::int64_t, std::int64_t>> stack;
    for (std::int64_t m = 0; m <= depth; ++m) {
        for (std::int64_t n = m + 1; n <= r - m; ++n) {
            if (w.at(m, n) != 0 || mark(m, n)) continue;
            // (m,n) is the first cell of its component in row-major order, so it is the top-left of the top row.
            std::int64_t count = 0;
            stack.assign(1, {m, n});
            mark(m, n) = 1;
            while (!stack.empty()) {
                auto [cm, cn] = stack.back();
                stack.pop_back();
                ++count;
                const std::int64_t dm[4] = {-1, 1, 0, 0}, dn[4] = {0, 0, -1, 1};
                for (int d = 0; d < 4; ++d) {
                    std::int64_t a = cm + dm[d], b = cn + dn[d];
                    if (a < 0 || a > depth || b < a + 1 || b > r - a) continue;
                    if (w.at(a, b) != 0 || mark(a, b)) continue;
                    mark(a, b) = 1;
                    stack.push_back({a, b});
                }
            }
            std::int64_t a = n, b = n;
            while (b + 1 <= r - m && w.at(m, b + 1) == 0) ++b;
            std::int64_t width = b - a + 1;
            bool lo = a == m + 1, ro = b == r - m;
            std::int64_t expect = 0;
            for (std::int64_t i = m; i <= std::min(depth, m + width - 1); ++i) {
                std::int64_t c0 = lo ? i + 1 : a, c1 = ro ? r - i : b;
                c0 = std::max(c0, i + 1);
                c1 = std::min(c1, r - i);
                for (std::int64_t c = c0; c <= c1; ++c) {
                    if (w.at(i, c) != 0) fail(Errc::non_square_zero_region, "zero region at " + cell(m, n) + " is not square: " + cell(i, c) + " is nonzero");
                    ++expect;
                }
            }
            if (expect != count) fail(Errc::non_square_zero_region, "zero region at " + cell(m, n) + " has " + std::to_string(count) + " cells, square needs " + std::to_string(expect));
            WindowRec rec;
            rec.m = m;
            rec.n = n;
            rec.l = width;
            if (lo && ro) rec.status = WindowStatus::both_open;
            else if (lo) rec.status = WindowStatus::left_open;
            else if (ro) rec.status = WindowStatus::right_open;
            else {
                bool full = w.in_support(m + width, a - 1) && w.in_support(m + width, b + 1);
                rec.status = full ? WindowStatus::complete : WindowStatus::closed_incomplete;
            }
            if (rec.status == WindowStatus::complete) rec.ratios = frame_ratios(w, rec);
            out.push_back(rec);
        }
    }
    return out;
}

FrameRatios frame_ratios(const Wall& w, const WindowRec& win) {
    if (win.status != WindowStatus::complete) fail(Errc::not_complete, "window at " + cell(win.m, win.n) + " is not complete");
    const Field& f = *w.field();
    std::int64_t m0 = win.m, n0 = win.n, g = win.l;
    auto A = [&](std::int64_t k) { return w.at(m0 - 1, n0 - 1 + k); };
    auto B = [&](std::int64_t k) { return w.at(m0 - 1 + k, n0 - 1); };
    auto C = [&](std::int64_t k) { return w.at(m0 + g - k, n0 + g); };
    auto D = [&](std::int64_t k) { return w.at(m0 + g, n0 + g - k); };
    auto ratio = [&](auto edge, const char* name) {
        for (std::int64_t k = 0; k <= g + 1; ++k)
            if (edge(k) == 0) fail(Errc::non_geometric_edge, std::string("inner frame edge ") + name + " has a zero entry");
        Fe rho = f.div(edge(1), edge(0));
        for (std::int64_t k = 1; k <= g; ++k)
            if (edge(k + 1) != f.mul(rho, edge(k))) fail(Errc::non_geometric_edge, std::string("inner frame edge ") + name + " is not geometric");
        return rho;
    };
    FrameRatios fr;
    fr.P = ratio(A, "top");
    fr.Q = ratio(B, "left");
    fr.R = ratio(C, "right");
    fr.S = ratio(D, "bottom");
    if (f.mul(fr.P, fr.S) != f.mul(f.sign(g), f.mul(fr.Q, fr.R)))
        fail(Errc::internal_inconsistency, "frame ratios of window at " + cell(m0, n0) + " violate PS/QR = (-1)^l");
    return fr;
}

} // namespace nw
