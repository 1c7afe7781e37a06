#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numwall/field.hpp"

namespace nw {

// Finite sequence s_1..s_r; v[i-1] = s_i.
struct Seq {
    FieldPtr field;
    std::vector<Fe> v;
    std::string recipe;

    std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }
    Fe at(std::int64_t i) const { return v[static_cast<std::size_t>(i - 1)]; }
};

// Which clause produced an entry.
enum class Rule : std::uint8_t { sentinel, input, window, first, second, third };
const char* rule_name(Rule r);

enum class WindowStatus : std::uint8_t { complete, right_open, left_open, both_open, closed_incomplete };
const char* status_name(WindowStatus s);

struct FrameRatios {
    Fe P = 0, Q = 0, R = 0, S = 0;
};

struct WindowRec {
    std::int64_t l = 0; // side for closed windows, visible top-row width for open ones
    std::int64_t n = 0; // top-left column
    std::int64_t m = 0; // top-left row
    WindowStatus status = WindowStatus::complete;
    std::optional<FrameRatios> ratios;

    bool left_open() const { return status == WindowStatus::left_open || status == WindowStatus::both_open; }
    bool right_open() const { return status == WindowStatus::right_open || status == WindowStatus::both_open; }
    bool closed() const { return status == WindowStatus::complete || status == WindowStatus::closed_incomplete; }
};

bool operator==(const WindowRec& a, const WindowRec& b);

// Zero/nonzero pattern of (top-left, top-right, bottom); X = nonzero.
enum class BladeShape : std::uint8_t { all_nonzero, top_right_zero, top_left_zero, bottom_zero, top_two_zero, top_left_bottom_zero, zero };
const char* blade_name(BladeShape b);
BladeShape blade_from_pattern(bool tl_nonzero, bool tr_nonzero, bool b_nonzero);

struct WallOptions {
    bool provenance = true;
};

struct ExtendReport {
    // One flag per row 0..depth of the new diagonal, true when independent of the appended entry.
    std::vector<bool> determined;
};

class Wall {
public:
    Wall() = default;

    static Wall naive(const Seq& s, std::uint64_t* ops = nullptr);
    static Wall frame(const Seq& s, WallOptions opt = {}, std::uint64_t* ops = nullptr);

    // Appends s_{r+1} and fills the new diagonal.
    ExtendReport extend(Fe s_next, std::uint64_t* ops = nullptr);

    const FieldPtr& field() const { return f_; }
    std::int64_t length() const { return r_; }
    std::int64_t depth() const { return r_ >= 1 ? (r_ - 1) / 2 : -1; }
    const std::vector<Fe>& sequence() const { return seq_; }

    static std::int64_t row_lo(std::int64_t m) { return m == -2 ? -1 : (m == -1 ? 0 : m + 1); }
    std::int64_t row_hi(std::int64_t m) const { return m == -2 ? r_ + 2 : (m == -1 ? r_ + 1 : r_ - m); }
    bool in_support(std::int64_t m, std::int64_t n) const {
        return m >= -2 && m <= depth() && n >= row_lo(m) && n <= row_hi(m);
    }
    // Raises out_of_support outside the triangle and sentinel rows.
    Fe at(std::int64_t m, std::int64_t n) const;
    bool zero(std::int64_t m, std::int64_t n) const { return at(m, n) == 0; }
    Rule rule(std::int64_t m, std::int64_t n) const;
    bool has_provenance() const { return prov_enabled_; }

    // Windows registered while the wall was generated.
    std::vector<WindowRec> registry() const;

    bool same_entries(const Wall& o) const;

private:
    struct Active {
        std::int64_t m0, n0, g;
    };

    void init(const Seq& s, WallOptions opt);
    void set(std::int64_t m, std::int64_t n, Fe v, Rule why);
    Fe cell_value(std::int64_t m, std::int64_t n, Rule& why, std::uint64_t& ops) const;
    void register_cell(std::int64_t m, std::int64_t n);
    void grow_to(std::int64_t r);

    FieldPtr f_;
    std::int64_t r_ = 0;
    std::vector<Fe> seq_;
    std::vector<std::vector<std::uint16_t>> rows_; // index m+2
    std::vector<std::vector<std::uint8_t>> prov_;
    bool prov_enabled_ = true;
    std::vector<Active> wins_;
    std::vector<std::int32_t> active_; // column -> index into wins_, or -1
};

// det T_S(n,m); raises out_of_support when s_{n-m}..s_{n+m} is not inside the sequence.
Fe toeplitz_det(const Seq& s, std::int64_t n, std::int64_t m, std::uint64_t* ops = nullptr);
// det H_S(n,m).
Fe hankel_det(const Seq& s, std::int64_t n, std::int64_t m);
// Determinant by Gaussian elimination; the matrix is consumed.
Fe det_gauss(const Field& f, std::vector<std::vector<Fe>>& a, std::uint64_t* ops = nullptr);

Wall wall_naive(const Seq& s);
Wall wall_frame(const Seq& s);
std::pair<Wall, ExtendReport> extend_diagonal(const Wall& w, Fe s_next);

std::vector<WindowRec> detect_windows(const Wall& w);
FrameRatios frame_ratios(const Wall& w, const WindowRec& win);

struct Blades {
    BladeShape right;
    BladeShape left;
};
Blades blades(const Wall& w);

bool reflect_check(const Seq& s);
Seq reverse(const Seq& s);

// CSV "m,n,value" including sentinel rows.
std::string wall_csv(const Wall& w);
// Binary P6: zero red, outside support white, nonzero gray with 1 darkest.
std::string wall_ppm(const Wall& w);
std::uint8_t gray_level(std::uint32_t code, std::uint32_t q);

} // namespace nw
