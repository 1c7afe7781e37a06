#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numwall/poly.hpp"
#include "numwall/wall.hpp"

namespace nw {

class GrowthFn {
public:
    enum class Kind { constant, log_sq, log_mul_loglog, table };

    static GrowthFn constant(std::uint64_t c);
    // f(q^k) = max(k,1)^2
    static GrowthFn log_sq();
    // f(q^k) = k log_q k (taken as 1 where that is below 1)
    static GrowthFn log_mul_loglog();
    // b_f(k) given directly; the last entry repeats.
    static GrowthFn table(std::vector<std::int64_t> b);
    // "const:C", "log2", "loglog", "table:b0,b1,..."
    static GrowthFn parse(std::string_view spec);

    Kind kind() const { return kind_; }
    std::string str() const;
    // floor(log_q f(q^k)), by exact integer comparison.
    std::int64_t b(std::uint32_t q, std::int64_t k) const;
    // Raises invalid_argument when b is decreasing somewhere in [0, k_max].
    void check_monotone(std::uint32_t q, std::int64_t k_max) const;
    bool trivial() const { return kind_ == Kind::constant && c_ == 1; }

private:
    Kind kind_ = Kind::constant;
    std::uint64_t c_ = 1;
    std::vector<std::int64_t> table_;
};

struct DioLedger {
    std::int64_t growth = 0; // b_f(deg N)
    std::int64_t abs = 0;    // deg N
    std::int64_t padic = 0;  // -v_p(N)
    std::int64_t frac = 0;   // deg <N Theta>, or an upper bound when unresolved
};

// f |N| |N|_p |<N Theta>| = q^{-exponent}; a lower bound when !resolved.
struct DioWitness {
    Poly N;
    std::int64_t k = 0;
    std::int64_t exponent = 0;
    bool resolved = true;
    DioLedger ledger;
    std::int64_t precision_used = 0;
};

DioWitness dio_exponent(const LaurentTrunc& theta, const Poly& N, const Poly& p, const GrowthFn& f);

struct TruncInf {
    std::int64_t l = 0; // max witness exponent (a lower bound when !resolved)
    bool resolved = true;
    DioWitness witness;
    std::int64_t deg_bound = 0;
    std::int64_t pow_bound = 0;
    std::uint64_t candidates = 0;
};

// Max exponent over N = M p^k, M nonzero of degree <= D, 0 <= k <= K.
TruncInf truncated_inf(const LaurentTrunc& theta, std::int64_t D, std::int64_t K, const Poly& p, const GrowthFn& f);

enum class AddressMode { column, diagonal };

struct WindowFinding {
    std::int64_t m = 0, n = 0, size = 0, threshold = 0;
    WindowStatus status = WindowStatus::complete;
};

struct WindowCheck {
    bool pass = true;
    std::vector<WindowFinding> violations; // definite
    std::vector<WindowFinding> potential;  // open windows whose final size is undetermined
    std::int64_t max_closed = 0;
    std::int64_t max_complete = 0;
    std::int64_t max_open_visible = 0;
};

// Threshold l + b_f(k): k = n-1 for a top-left cell in column n, or m+n-1 in diagonal mode.
WindowCheck window_check(const Wall& w, std::int64_t l, const GrowthFn& f, AddressMode mode = AddressMode::column);
WindowCheck window_check(const Seq& s, std::int64_t l, const GrowthFn& f, AddressMode mode = AddressMode::column);

struct AuditMismatch {
    std::string kind;
    std::int64_t h = 0, n = 0;
    std::string detail;
};

struct AuditReport {
    std::int64_t l = 0;
    std::int64_t deg_bound = 0;
    std::int64_t pairs = 0;
    std::int64_t dio_solutions = 0;
    std::int64_t windows = 0;
    std::int64_t kernels_checked = 0;
    std::int64_t brute_checked = 0;
    std::vector<AuditMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Two-sided check of the Diophantine/window dictionary over deg M <= D.
AuditReport equivalence_audit(const Seq& s, std::int64_t l, const GrowthFn& f, std::int64_t D, bool brute_force = false);

struct TransferReport {
    Poly p;
    std::int64_t m = 0;
    std::int64_t l_base = 0;
    std::int64_t l_trans = 0;
    bool holds = false;
    TruncInf base;
    TruncInf trans;
    std::int64_t prec_t = 0;
};

TransferReport transfer(const std::vector<Fe>& b, const Poly& p, std::int64_t D, std::int64_t K, std::int64_t prec_t);

} // namespace nw
