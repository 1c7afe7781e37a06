#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numwall/field.hpp"

namespace nw {

// Degree with a distinguished minus-infinity for the zero polynomial.
class Deg {
public:
    constexpr Deg() = default;
    constexpr explicit Deg(std::int64_t v) : finite_(true), v_(v) {}
    static constexpr Deg neg_inf() { return Deg(); }

    constexpr bool finite() const { return finite_; }
    std::int64_t value() const {
        if (!finite_) fail(Errc::invalid_argument, "degree of zero has no integer value");
        return v_;
    }

    friend constexpr bool operator==(const Deg& a, const Deg& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(const Deg& a, const Deg& b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.v_ <=> b.v_;
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    bool finite_ = false;
    std::int64_t v_ = 0;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    // Ascending coefficients.
    Poly(FieldPtr f, std::vector<Fe> coeffs);

    static Poly monomial(FieldPtr f, std::size_t d, Fe c = 1);
    static Poly constant(FieldPtr f, Fe c) { return monomial(std::move(f), 0, c); }
    // "c_d*t^d + ... + c_0" or "d:[c_d,...,c_0]".
    static Poly parse(FieldPtr f, std::string_view text);

    const FieldPtr& field() const { return f_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_zero() const { return c_.empty(); }
    Deg deg() const { return c_.empty() ? Deg::neg_inf() : Deg(static_cast<std::int64_t>(c_.size()) - 1); }
    Fe lead() const { return c_.empty() ? 0 : c_.back(); }
    // Exponent of t dividing the polynomial; zero has none.
    std::int64_t trailing_zeros() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(Fe c) const;
    Poly shift(std::size_t k) const;
    Poly pow(unsigned e) const;
    // Quotient and remainder; divisor nonzero.
    void divmod(const Poly& d, Poly& quo, Poly& rem) const;
    Poly operator/(const Poly& d) const;
    Poly operator%(const Poly& d) const;
    bool operator==(const Poly& o) const { return c_ == o.c_ && (!f_ || !o.f_ || f_->same(*o.f_)); }

    bool is_irreducible() const;
    std::string str() const;
    std::string code_str() const;

private:
    void normalize();
    void check(const Poly& o) const;

    FieldPtr f_;
    std::vector<Fe> c_;
};

Poly gcd(Poly a, Poly b);

// Series sum c_e t^e over e in [-prec, top], stored densely.
class LaurentTrunc {
public:
    LaurentTrunc() = default;
    // coeffs[i] is the coefficient of t^{hi - i}; the last one belongs to t^{-prec}.
    LaurentTrunc(FieldPtr f, std::int64_t hi, std::int64_t prec, std::vector<Fe> coeffs);
    // Theta = sum_{i=1}^{prec} s_i t^{-i} from a 1-indexed sequence.
    static LaurentTrunc from_sequence(FieldPtr f, const std::vector<Fe>& s);
    static LaurentTrunc from_poly(const Poly& p, std::int64_t prec);
    // "h=<top> prec=<prec>" then codes.
    static LaurentTrunc parse(FieldPtr f, std::string_view text);
    std::string serialize() const;

    const FieldPtr& field() const { return f_; }
    std::int64_t prec() const { return prec_; }
    // Highest stored exponent (coefficient nonzero unless zero_on_range).
    std::int64_t top() const { return hi_; }
    bool zero_on_range() const { return c_.empty(); }
    // Coefficient of t^e; raises when e is below the stored precision.
    Fe coeff(std::int64_t e) const;

    std::string str() const;

private:
    void normalize();

    FieldPtr f_;
    std::int64_t hi_ = 0;
    std::int64_t prec_ = 0;
    std::vector<Fe> c_;
};

struct BasePExpansion {
    std::vector<Poly> digits;
    Poly base;
    Poly reassemble() const;
};

Deg abs_value(const Poly& x);
// Raises insufficient_precision when the series vanishes on its stored range.
std::int64_t abs_value(const LaurentTrunc& x);

BasePExpansion base_p_expand(const Poly& n, const Poly& p);
std::int64_t padic_norm_exp(const Poly& n, const Poly& p);
LaurentTrunc frac(const LaurentTrunc& x);
LaurentTrunc mul_poly_series(const Poly& n, const LaurentTrunc& theta);
// sum_{i>=1} b[i-1] p^{-i}, exact down to t^{-prec_t}.
LaurentTrunc substitute(const std::vector<Fe>& b, const Poly& p, std::int64_t prec_t);
// Number of b_i substitute reads for a given base degree and precision.
std::int64_t substitute_coeffs_needed(std::int64_t deg_p, std::int64_t prec_t);
// N(p(t)).
Poly compose(const Poly& n, const Poly& p);

} // namespace nw
