#include "numwall/littlewood.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>

#include "numwall/linalg.hpp"

namespace nw {

using boost::multiprecision::cpp_int;

GrowthFn GrowthFn::constant(std::uint64_t c) {
    if (c < 1) fail(Errc::invalid_argument, "constant growth function must be at least 1");
    GrowthFn g;
    g.kind_ = Kind::constant;
    g.c_ = c;
    return g;
}

GrowthFn GrowthFn::log_sq() {
    GrowthFn g;
    g.kind_ = Kind::log_sq;
    return g;
}

GrowthFn GrowthFn::log_mul_loglog() {
    GrowthFn g;
    g.kind_ = Kind::log_mul_loglog;
    return g;
}

GrowthFn GrowthFn::table(std::vector<std::int64_t> b) {
    if (b.empty()) fail(Errc::invalid_argument, "empty growth table");
    GrowthFn g;
    g.kind_ = Kind::table;
    g.table_ = std::move(b);
    return g;
}

GrowthFn GrowthFn::parse(std::string_view spec) {
    auto num = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail(Errc::parse_error, "bad growth spec '" + std::string(spec) + "'");
        return v;
    };
    if (spec.rfind("const:", 0) == 0) {
        std::int64_t c = num(spec.substr(6));
        if (c < 1) fail(Errc::parse_error, "constant growth must be >= 1");
        return constant(static_cast<std::uint64_t>(c));
    }
    if (spec == "log2" || spec == "log_sq") return log_sq();
    if (spec == "loglog" || spec == "log_mul_loglog") return log_mul_loglog();
    if (spec.rfind("table:", 0) == 0) {
        std::vector<std::int64_t> b;
        std::string_view rest = spec.substr(6);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            b.push_back(num(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return table(std::move(b));
    }
    fail(Errc::parse_error, "unknown growth spec '" + std::string(spec) + "' (const:C, log2, loglog, table:...)");
}

std::string GrowthFn::str() const {
    switch (kind_) {
    case Kind::constant: return "const:" + std::to_string(c_);
    case Kind::log_sq: return "log2";
    case Kind::log_mul_loglog: return "loglog";
    case Kind::table: {
        std::string s = "table:";
        for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + std::to_string(table_[i]);
        return s;
    }
    }
    return "?";
}

namespace {

// Largest b >= 0 with q^b <= v; v >= 1.
std::int64_t floor_log(std::uint32_t q, const cpp_int& v) {
    std::int64_t b = 0;
    cpp_int x = q;
    while (x <= v) {
        x *= q;
        ++b;
    }
    return b;
}

} // namespace

std::int64_t GrowthFn::b(std::uint32_t q, std::int64_t k) const {
    switch (kind_) {
    case Kind::constant: return floor_log(q, cpp_int(c_));
    case Kind::log_sq: {
        cpp_int v = std::max<std::int64_t>(k, 1);
        return floor_log(q, v * v);
    }
    case Kind::log_mul_loglog: {
        if (k < 2) return 0;
        // q^b <= k log_q k  <=>  q^(q^b) <= k^k
        cpp_int kk = boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(k));
        std::int64_t b = 0;
        std::uint64_t t = q;
        while (true) {
            if (t > static_cast<std::uint64_t>(k) * 64) break;
            if (boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(t)) > kk) break;
            ++b;
            t *= q;
        }
        return b;
    }
    case Kind::table: return table_[static_cast<std::size_t>(std::min<std::int64_t>(std::max<std::int64_t>(k, 0), static_cast<std::int64_t>(table_.size()) - 1))];
    }
    return 0;
}

void GrowthFn::check_monotone(std::uint32_t q, std::int64_t k_max) const {
    std::int64_t prev = b(q, 0);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        std::int64_t cur = b(q, k);
        if (cur < prev) fail(Errc::invalid_argument, "growth function " + str() + " decreases at k=" + std::to_string(k));
        prev = cur;
    }
}

DioWitness dio_exponent(const LaurentTrunc& theta, const Poly& N, const Poly& p, const GrowthFn& f) {
    if (N.is_zero()) fail(Errc::zero_argument, "Diophantine quality of N = 0");
    DioWitness w;
    w.N = N;
    std::int64_t degN = N.deg().value();
    std::int64_t v = padic_norm_exp(N, p);
    w.k = v / p.deg().value();
    LaurentTrunc prod = mul_poly_series(N, theta);
    LaurentTrunc fr = frac(prod);
    w.precision_used = prod.prec();
    w.ledger.growth = f.b(theta.field()->q(), degN);
    w.ledger.abs = degN;
    w.ledger.padic = -v;
    if (fr.zero_on_range()) {
        w.resolved = false;
        w.ledger.frac = -prod.prec() - 1;
    } else {
        w.ledger.frac = fr.top();
    }
    w.exponent = -(w.ledger.growth + w.ledger.abs + w.ledger.padic + w.ledger.frac);
    return w;
}

TruncInf truncated_inf(const LaurentTrunc& theta, std::int64_t D, std::int64_t K, const Poly& p, const GrowthFn& f) {
    if (D < 0 || K < 0) fail(Errc::invalid_argument, "enumeration bounds must be non-negative");
    const FieldPtr& fp = theta.field();
    std::uint32_t q = fp->q();
    TruncInf out;
    out.deg_bound = D;
    out.pow_bound = K;
    bool have = false;
    std::vector<Poly> powers{Poly::constant(fp, 1)};
    for (std::int64_t k = 1; k <= K; ++k) powers.push_back(powers.back() * p);
    // Constant multiples share every absolute value, so monic M suffice.
    for (std::int64_t d = 0; d <= D; ++d) {
        std::uint64_t count = 1;
        for (std::int64_t i = 0; i < d; ++i) {
            count *= q;
            if (count > (std::uint64_t(1) << 32)) fail(Errc::space_too_large, "truncated infimum enumeration too large");
        }
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Fe> c(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t x = code;
            for (std::int64_t i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<Fe>(x % q);
                x /= q;
            }
            c[static_cast<std::size_t>(d)] = 1;
            Poly M(fp, std::move(c));
            for (std::int64_t k = 0; k <= K; ++k) {
                DioWitness w = dio_exponent(theta, M * powers[static_cast<std::size_t>(k)], p, f);
                ++out.candidates;
                if (!w.resolved) out.resolved = false;
                if (!have || w.exponent > out.l || (w.exponent == out.l && !w.resolved && out.witness.resolved)) {
                    out.l = w.exponent;
                    out.witness = w;
                    have = true;
                }
            }
        }
    }
    return out;
}

WindowCheck window_check(const Wall& w, std::int64_t l, const GrowthFn& f, AddressMode mode) {
    WindowCheck out;
    std::uint32_t q = w.field()->q();
    for (const WindowRec& rec : detect_windows(w)) {
        std::int64_t k = mode == AddressMode::column ? rec.n - 1 : rec.m + rec.n - 1;
        WindowFinding fd{rec.m, rec.n, rec.l, l + f.b(q, k), rec.status};
        if (rec.closed()) {
            out.max_closed = std::max(out.max_closed, rec.l);
            if (rec.status == WindowStatus::complete) out.max_complete = std::max(out.max_complete, rec.l);
            if (rec.l >= fd.threshold) out.violations.push_back(fd);
        } else {
            out.max_open_visible = std::max(out.max_open_visible, rec.l);
            if (rec.l >= fd.threshold) out.violations.push_back(fd);
            else out.potential.push_back(fd);
        }
    }
    out.pass = out.violations.empty();
    return out;
}

WindowCheck window_check(const Seq& s, std::int64_t l, const GrowthFn& f, AddressMode mode) {
    return window_check(Wall::frame(s, {false}), l, f, mode);
}

AuditReport equivalence_audit(const Seq& s, std::int64_t l, const GrowthFn& f, std::int64_t D, bool brute_force) {
    const FieldPtr& fp = s.field;
    const Field& fld = *fp;
    std::uint32_t q = fld.q();
    std::int64_t r = s.size();
    AuditReport rep;
    rep.l = l;
    rep.deg_bound = D;
    Wall w = Wall::frame(s, {false});
    LaurentTrunc theta = LaurentTrunc::from_sequence(fp, s.v);
    Poly t = Poly::monomial(fp, 1);
    auto mism = [&](const char* kind, std::int64_t h, std::int64_t n, std::string detail) {
        rep.mismatches.push_back({kind, h, n, std::move(detail)});
    };
    WindowCheck wc = window_check(w, l, f, AddressMode::column);
    auto top_left = [&](std::int64_t m, std::int64_t n) {
        while (m - 1 >= 0 && w.at(m - 1, n) == 0) --m;
        while (n - 1 >= m + 1 && w.at(m, n - 1) == 0) --n;
        return std::pair{m, n};
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> audited_wins;
    for (std::int64_t h = 0; h <= D; ++h) {
        for (std::int64_t n = 0;; ++n) {
            std::int64_t L = l + f.b(q, h + n);
            if (L < 1 || n + 2 * h + 2 * L - 1 > r) break;
            ++rep.pairs;
            bool win = true;
            for (std::int64_t i = h; i <= h + L - 1 && win; ++i) win = w.at(i, n + 1 + i) == 0;
            Matrix H(static_cast<std::size_t>(L + h), std::vector<Fe>(static_cast<std::size_t>(h + 1)));
            for (std::int64_t i = 1; i <= L + h; ++i)
                for (std::int64_t j = 0; j <= h; ++j) H[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = s.at(i + j + n);
            auto K = nullspace(fld, H, static_cast<std::size_t>(h + 1));
            bool a0 = false, ah = false;
            for (const auto& v : K) {
                a0 = a0 || v[0] != 0;
                ah = ah || v[static_cast<std::size_t>(h)] != 0;
            }
            bool dio = a0 && ah;
            if (dio) {
                ++rep.dio_solutions;
                if (!win) mism("dio_without_window", h, n, "kernel has a solution of exact shape but the diagonal is not zero");
            }
            if (win) {
                ++rep.windows;
                audited_wins.push_back({h, n});
                if (K.empty()) mism("window_without_kernel", h, n, "zero diagonal but the Hankel system has full column rank");
                for (const auto& v : K) {
                    Poly N = Poly(fp, v).shift(static_cast<std::size_t>(n));
                    DioWitness dw = dio_exponent(theta, N, t, f);
                    ++rep.kernels_checked;
                    if (dw.exponent < l + 1)
                        mism("kernel_quality_low", h, n, "kernel vector " + N.str() + " has exponent " + std::to_string(dw.exponent));
                }
                auto [m0, c0] = top_left(h, n + 1 + h);
                bool flagged = std::any_of(wc.violations.begin(), wc.violations.end(), [&](const WindowFinding& v) { return v.m == m0 && v.n == c0; });
                if (!flagged) mism("window_check_missed", h, n, "window at (" + std::to_string(m0) + "," + std::to_string(c0) + ") not reported");
            }
            if (brute_force && h >= 1) {
                std::uint64_t count = 1;
                for (std::int64_t i = 0; i < h - 1; ++i) count *= q;
                if (count * (q - 1) * (q - 1) <= 20000) {
                    bool found = false;
                    for (Fe a0v = 1; a0v < q && !found; ++a0v)
                        for (Fe ahv = 1; ahv < q && !found; ++ahv)
                            for (std::uint64_t code = 0; code < count && !found; ++code) {
                                std::vector<Fe> c(static_cast<std::size_t>(h) + 1, 0);
                                c[0] = a0v;
                                c[static_cast<std::size_t>(h)] = ahv;
                                std::uint64_t x = code;
                                for (std::int64_t i = 1; i < h; ++i) {
                                    c[static_cast<std::size_t>(i)] = static_cast<Fe>(x % q);
                                    x /= q;
                                }
                                Poly N = Poly(fp, std::move(c)).shift(static_cast<std::size_t>(n));
                                found = dio_exponent(theta, N, t, f).exponent >= l + 1;
                            }
                    ++rep.brute_checked;
                    if (found != dio) mism("brute_vs_kernel", h, n, found ? "enumeration finds a solution the kernel misses" : "kernel solution not found by enumeration");
                }
            } else if (brute_force && h == 0) {
                bool found = false;
                for (Fe a = 1; a < q && !found; ++a)
                    found = dio_exponent(theta, Poly::constant(fp, a).shift(static_cast<std::size_t>(n)), t, f).exponent >= l + 1;
                ++rep.brute_checked;
                if (found != dio) mism("brute_vs_kernel", h, n, "constant multiplier disagrees with kernel");
            }
        }
    }
    if (rep.pairs == 0) fail(Errc::insufficient_prefix, "sequence too short for any (h,n) pair at l=" + std::to_string(l));
    // Every closed violation inside the audited range must appear as a zero diagonal.
    for (const WindowFinding& v : wc.violations) {
        if (!(v.status == WindowStatus::complete || v.status == WindowStatus::closed_incomplete)) continue;
        std::int64_t h = v.m, n = v.n - v.m - 1;
        if (h > D) continue;
        std::int64_t L = l + f.b(q, h + n);
        if (n + 2 * h + 2 * L - 1 > r) continue;
        if (std::find(audited_wins.begin(), audited_wins.end(), std::pair{h, n}) == audited_wins.end())
            mism("violation_without_window", h, n, "window of size " + std::to_string(v.size) + " has no matching zero diagonal");
    }
    return rep;
}

TransferReport transfer(const std::vector<Fe>& b, const Poly& p, std::int64_t D, std::int64_t K, std::int64_t prec_t) {
    if (!p.is_irreducible()) fail(Errc::reducible_base, "base " + p.str() + " is not irreducible");
    const FieldPtr& fp = p.field();
    TransferReport rep;
    rep.p = p;
    rep.m = p.deg().value();
    rep.prec_t = prec_t;
    GrowthFn one = GrowthFn::constant(1);
    LaurentTrunc base = LaurentTrunc::from_sequence(fp, b);
    rep.base = truncated_inf(base, D, K, Poly::monomial(fp, 1), one);
    LaurentTrunc sub = substitute(b, p, prec_t);
    rep.trans = truncated_inf(sub, rep.m * D + rep.m - 1, K, p, one);
    if (!rep.base.resolved)
        fail(Errc::insufficient_precision, "base infimum unresolved: witness " + rep.base.witness.N.str() + " vanishes to precision " + std::to_string(base.prec()));
    if (!rep.trans.resolved)
        fail(Errc::insufficient_precision, "transferred infimum unresolved: witness " + rep.trans.witness.N.str() + " vanishes to precision " + std::to_string(prec_t));
    rep.l_base = rep.base.l;
    rep.l_trans = rep.trans.l;
    rep.holds = rep.l_trans == rep.m * rep.l_base;
    return rep;
}

} // namespace nw
