#include "numwall/field.hpp"

#include <charconv>

namespace nw {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits to_digits(std::uint64_t code, std::uint32_t p) {
    Digits d;
    while (code) {
        d.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return d;
}

std::uint64_t to_code(const Digits& d, std::uint32_t p) {
    std::uint64_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        std::int64_t qt = r / nr;
        t -= qt * nt;
        std::swap(t, nt);
        r -= qt * nr;
        std::swap(r, nr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// a mod b over GF(p); b nonzero.
Digits pmod(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    std::uint32_t li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * li % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t(p - c) * b[i]) % p);
        trim(a);
    }
    return a;
}

Digits pmul(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

Digits psub(Digits a, const Digits& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Quotient of a by b over GF(p).
Digits pdiv(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    if (a.size() < b.size()) return {};
    Digits qd(a.size() - b.size() + 1, 0);
    std::uint32_t li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * li % p);
        std::size_t shift = a.size() - b.size();
        qd[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t(p - c) * b[i]) % p);
        trim(a);
    }
    trim(qd);
    return qd;
}

bool irreducible(const Digits& f, std::uint32_t p) {
    std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t lo = 1;
        for (std::size_t i = 0; i < d; ++i) lo *= p;
        for (std::uint64_t c = lo; c < 2 * lo; ++c) {
            if (pmod(f, to_digits(c, p), p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, unsigned k, std::uint64_t modulus_code) {
    if (!is_prime(p)) fail(Errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) fail(Errc::degree_mismatch, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) fail(Errc::invalid_argument, "field size exceeds 2^16");
    }
    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<std::uint32_t>(q);
    if (k == 1) {
        if (modulus_code != 0 && modulus_code != p)
            fail(Errc::degree_mismatch, "prime field takes no modulus (or the code of t)");
        f->modulus_ = 0;
        f->mod_digits_ = {0, 1};
    } else if (modulus_code == 0) {
        for (std::uint64_t c = q; c < 2 * q; ++c) {
            Digits d = to_digits(c, p);
            if (irreducible(d, p)) {
                f->modulus_ = c;
                f->mod_digits_ = d;
                break;
            }
        }
    } else {
        Digits d = to_digits(modulus_code, p);
        if (d.size() != k + 1) fail(Errc::degree_mismatch, "modulus degree differs from extension degree");
        if (d.back() != 1) fail(Errc::degree_mismatch, "modulus must be monic");
        if (!irreducible(d, p)) fail(Errc::reducible_modulus, "modulus code " + std::to_string(modulus_code) + " is reducible");
        f->modulus_ = modulus_code;
        f->mod_digits_ = d;
    }
    f->build_tables();
    return f;
}

std::shared_ptr<const Field> Field::parse(std::string_view spec) {
    auto num = [&](std::string_view s) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            fail(Errc::parse_error, "bad field spec '" + std::string(spec) + "'");
        return v;
    };
    std::string_view rest = spec;
    std::uint64_t mod = 0;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        mod = num(rest.substr(slash + 1));
        rest = rest.substr(0, slash);
    }
    std::uint64_t p = 0, k = 1;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        p = num(rest.substr(0, caret));
        k = num(rest.substr(caret + 1));
    } else {
        p = num(rest);
    }
    if (p > 65536 || k > 16) fail(Errc::invalid_argument, "field spec out of range");
    return make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), mod);
}

std::string Field::name() const {
    std::string s = std::to_string(p_) + "^" + std::to_string(k_);
    if (k_ > 1) s += "/" + std::to_string(modulus_);
    return s;
}

Fe Field::mul_slow(Fe a, Fe b) const {
    Digits prod = pmul(to_digits(a, p_), to_digits(b, p_), p_);
    if (k_ == 1) return prod.empty() ? 0 : prod[0];
    return static_cast<Fe>(to_code(pmod(prod, mod_digits_, p_), p_));
}

Fe Field::add_digits(Fe a, Fe b) const {
    Fe r = 0, w = 1;
    while (a || b) {
        r += w * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

void Field::build_tables() {
    std::uint32_t n = q_ - 1;
    // Extended Euclid on representatives.
    inv_.assign(q_, 0);
    for (Fe a = 1; a < q_; ++a) {
        if (k_ == 1) {
            inv_[a] = inv_mod(a, p_);
            continue;
        }
        Digits r0 = mod_digits_, r1 = to_digits(a, p_);
        Digits t0, t1 = {1};
        while (!r1.empty()) {
            Digits qd = pdiv(r0, r1, p_);
            Digits r2 = psub(r0, pmul(qd, r1, p_), p_);
            Digits t2 = psub(t0, pmul(qd, t1, p_), p_);
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant
        std::uint32_t c = inv_mod(r0[0], p_);
        for (auto& x : t0) x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p_);
        inv_[a] = static_cast<Fe>(to_code(t0, p_));
    }
    neg_.assign(q_, 0);
    for (Fe a = 0; a < q_; ++a) {
        Digits d = to_digits(a, p_);
        for (auto& x : d) x = (p_ - x) % p_;
        neg_[a] = static_cast<Fe>(to_code(d, p_));
    }
    if (k_ > 1 && p_ != 2 && q_ <= 256) {
        add_.assign(std::size_t(q_) * q_, 0);
        for (Fe a = 0; a < q_; ++a)
            for (Fe b = 0; b < q_; ++b) add_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
    // Primitive element search for the log tables.
    for (Fe g = 1; g < q_; ++g) {
        std::vector<Fe> e(n);
        Fe x = 1;
        bool prim = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            e[i] = x;
            x = mul_slow(x, g);
            if (x == 1 && i + 1 < n) {
                prim = false;
                break;
            }
        }
        if (!prim) continue;
        exp_.assign(2 * std::size_t(n) + 1, 0);
        log_.assign(q_, 0);
        for (std::uint32_t i = 0; i < 2 * n + 1; ++i) exp_[i] = e[i % n];
        for (std::uint32_t i = 0; i < n; ++i) log_[e[i]] = i;
        return;
    }
    fail(Errc::internal_inconsistency, "no primitive element found");
}

Fe Field::pow(Fe a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t l = (std::uint64_t(log_[a]) * (std::uint64_t(e) % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

std::vector<std::uint32_t> Field::digits(Fe a) const {
    Digits d(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Fe Field::from_digits(const std::vector<std::uint32_t>& d) const {
    Digits t = d;
    for (auto& x : t) x %= p_;
    trim(t);
    if (t.size() > k_) fail(Errc::invalid_argument, "too many digits for " + name());
    return static_cast<Fe>(to_code(t, p_));
}

Fe Field::embed(std::int64_t v) const {
    if (k_ == 1) {
        std::int64_t r = v % std::int64_t(p_);
        return static_cast<Fe>(r < 0 ? r + p_ : r);
    }
    if (v < 0 || v >= std::int64_t(q_)) fail(Errc::embedding_incomplete, "symbol " + std::to_string(v) + " is not an element code of " + name());
    return static_cast<Fe>(v);
}

namespace {
const Field& common(const Elem& a, const Elem& b) {
    if (!a.f || !b.f || !a.f->same(*b.f)) fail(Errc::field_mismatch, "operands belong to different fields");
    return *a.f;
}
} // namespace

Elem operator+(const Elem& a, const Elem& b) { return {a.f, common(a, b).add(a.c, b.c)}; }
Elem operator-(const Elem& a, const Elem& b) { return {a.f, common(a, b).sub(a.c, b.c)}; }
Elem operator*(const Elem& a, const Elem& b) { return {a.f, common(a, b).mul(a.c, b.c)}; }
Elem operator/(const Elem& a, const Elem& b) { return {a.f, common(a, b).div(a.c, b.c)}; }
Elem operator-(const Elem& a) { return {a.f, a.f->neg(a.c)}; }
Elem inverse(const Elem& a) { return {a.f, a.f->inv(a.c)}; }
Elem power(const Elem& a, std::int64_t e) { return {a.f, a.f->pow(a.c, e)}; }
bool operator==(const Elem& a, const Elem& b) { return common(a, b).same(*a.f) && a.c == b.c; }

} // namespace nw
