#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "numwall/error.hpp"

namespace nw {

// Element code: base-p digits of the polynomial representative, digit i = coefficient of x^i.
using Fe = std::uint32_t;

class Field {
public:
    // modulus_code packs the monic modulus (including its leading 1) in base p; 0 = auto.
    static std::shared_ptr<const Field> make(std::uint32_t p, unsigned k, std::uint64_t modulus_code = 0);
    // Accepts "p", "p^k" or "p^k/modulus-code".
    static std::shared_ptr<const Field> parse(std::string_view spec);

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t modulus_code() const { return modulus_; }
    std::string name() const;

    bool same(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }
    bool valid(Fe a) const { return a < q_; }

    Fe add(Fe a, Fe b) const {
        if (k_ == 1) {
            Fe s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[a * q_ + b];
        return add_digits(a, b);
    }
    Fe neg(Fe a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        return neg_[a];
    }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Fe inv(Fe a) const {
        if (a == 0) fail(Errc::division_by_zero, "inverse of zero in " + name());
        return inv_[a];
    }
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::int64_t e) const;
    // (-1)^parity
    Fe sign(std::int64_t parity) const { return (parity & 1) ? neg(1) : 1; }

    // Reference multiplication by schoolbook product and reduction; independent of the log tables.
    Fe mul_slow(Fe a, Fe b) const;

    std::vector<std::uint32_t> digits(Fe a) const;
    Fe from_digits(const std::vector<std::uint32_t>& d) const;
    // Element from an arbitrary integer symbol: reduced mod p for prime fields, taken as a code otherwise.
    Fe embed(std::int64_t v) const;

private:
    Field() = default;
    Fe add_digits(Fe a, Fe b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    unsigned k_ = 0;
    std::uint32_t q_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<std::uint32_t> mod_digits_; // ascending, monic, size k+1
    std::vector<Fe> exp_;                   // size 2q
    std::vector<std::uint32_t> log_;
    std::vector<Fe> inv_;
    std::vector<Fe> neg_;
    std::vector<std::uint16_t> add_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

// Field element bound to its field; arithmetic between different fields raises field_mismatch.
struct Elem {
    FieldPtr f;
    Fe c = 0;
};

Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator/(const Elem& a, const Elem& b);
Elem operator-(const Elem& a);
Elem inverse(const Elem& a);
Elem power(const Elem& a, std::int64_t e);
bool operator==(const Elem& a, const Elem& b);

} // namespace nw
