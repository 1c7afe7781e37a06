#include "numwall/poly.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace nw {

Poly::Poly(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Fe x : c_)
        if (!f_->valid(x)) fail(Errc::invalid_argument, "coefficient code out of range for " + f_->name());
    normalize();
}

Poly Poly::monomial(FieldPtr f, std::size_t d, Fe c) {
    std::vector<Fe> v(d + 1, 0);
    v[d] = c;
    return Poly(std::move(f), std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check(const Poly& o) const {
    if (!f_ || !o.f_ || !f_->same(*o.f_)) fail(Errc::field_mismatch, "polynomials over different fields");
}

std::int64_t Poly::trailing_zeros() const {
    if (c_.empty()) fail(Errc::zero_argument, "zero polynomial has no t-adic valuation");
    std::int64_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

Poly Poly::operator+(const Poly& o) const {
    check(o);
    std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check(o);
    std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check(o);
    if (c_.empty() || o.c_.empty()) return Poly(f_);
    std::vector<Fe> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::scale(Fe c) const {
    std::vector<Fe> r(c_);
    for (auto& x : r) x = f_->mul(x, c);
    return Poly(f_, std::move(r));
}

Poly Poly::shift(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<Fe> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(f_, std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(f_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

void Poly::divmod(const Poly& d, Poly& quo, Poly& rem) const {
    check(d);
    if (d.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    std::vector<Fe> r = c_;
    std::vector<Fe> qv(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0);
    Fe li = f_->inv(d.lead());
    while (r.size() >= d.c_.size() && !r.empty()) {
        Fe c = f_->mul(r.back(), li);
        std::size_t sh = r.size() - d.c_.size();
        qv[sh] = c;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r[sh + i] = f_->sub(r[sh + i], f_->mul(c, d.c_[i]));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quo = Poly(f_, std::move(qv));
    rem = Poly(f_, std::move(r));
}

Poly Poly::operator/(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return r;
}

bool Poly::is_irreducible() const {
    if (c_.size() < 2) return false;
    std::size_t n = c_.size() - 1;
    if (n == 1) return true;
    std::uint64_t q = f_->q();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Fe> v(d + 1, 0);
            std::uint64_t x = code;
            for (std::size_t i = 0; i < d; ++i) {
                v[i] = static_cast<Fe>(x % q);
                x /= q;
            }
            v[d] = 1;
            if ((*this % Poly(f_, std::move(v))).is_zero()) return false;
        }
    }
    return true;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i];
            continue;
        }
        if (c_[i] != 1) os << c_[i] << "*";
        os << "t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::string Poly::code_str() const {
    std::ostringstream os;
    if (c_.empty()) return "-inf:[]";
    os << (c_.size() - 1) << ":[";
    for (std::size_t i = c_.size(); i-- > 0;) os << c_[i] << (i ? "," : "");
    os << "]";
    return os.str();
}

namespace {

std::string strip(std::string_view s) {
    std::string r;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
    return r;
}

std::int64_t to_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        fail(Errc::parse_error, "cannot parse polynomial '" + std::string(whole) + "'");
    return v;
}

} // namespace

Poly Poly::parse(FieldPtr f, std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) fail(Errc::parse_error, "empty polynomial");
    if (auto colon = s.find(':'); colon != std::string::npos) {
        std::int64_t d = to_int(std::string_view(s).substr(0, colon), text);
        std::string body = s.substr(colon + 1);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail(Errc::parse_error, "expected d:[c_d,...,c_0]");
        body = body.substr(1, body.size() - 2);
        std::vector<Fe> desc;
        std::size_t pos = 0;
        while (pos <= body.size() && !body.empty()) {
            std::size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            desc.push_back(f->embed(to_int(std::string_view(body).substr(pos, comma - pos), text)));
            pos = comma + 1;
        }
        if (static_cast<std::int64_t>(desc.size()) != d + 1) fail(Errc::parse_error, "coefficient count does not match degree");
        return Poly(f, std::vector<Fe>(desc.rbegin(), desc.rend()));
    }
    Poly acc(f);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = s.find_first_of("+-", pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) fail(Errc::parse_error, "empty term in '" + std::string(text) + "'");
        std::int64_t coef = 1, e = 0;
        auto tpos = term.find('t');
        if (tpos == std::string::npos) {
            coef = to_int(term, text);
        } else {
            std::string c = term.substr(0, tpos);
            if (!c.empty()) {
                if (c.back() != '*') fail(Errc::parse_error, "expected '*' before t");
                coef = to_int(std::string_view(c).substr(0, c.size() - 1), text);
            }
            std::string rest = term.substr(tpos + 1);
            if (rest.empty()) e = 1;
            else if (rest[0] == '^') e = to_int(std::string_view(rest).substr(1), text);
            else fail(Errc::parse_error, "unexpected text after t");
        }
        if (e < 0) fail(Errc::parse_error, "negative exponent in polynomial");
        Fe c = f->embed(coef);
        if (negative) c = f->neg(c);
        acc = acc + monomial(f, static_cast<std::size_t>(e), c);
    }
    return acc;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scale(a.field()->inv(a.lead()));
    return a;
}

Poly compose(const Poly& n, const Poly& p) {
    Poly acc(n.field());
    for (std::size_t i = n.coeffs().size(); i-- > 0;) acc = acc * p + Poly::constant(n.field(), n.coeffs()[i]);
    return acc;
}

Deg abs_value(const Poly& x) { return x.deg(); }

BasePExpansion base_p_expand(const Poly& n, const Poly& p) {
    if (!p.is_irreducible()) fail(Errc::reducible_base, "base " + p.str() + " is not irreducible");
    BasePExpansion out;
    out.base = p;
    Poly cur = n;
    while (!cur.is_zero()) {
        Poly q, r;
        cur.divmod(p, q, r);
        out.digits.push_back(r);
        cur = q;
    }
    return out;
}

Poly BasePExpansion::reassemble() const {
    Poly acc(base.field());
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * base + digits[i];
    return acc;
}

std::int64_t padic_norm_exp(const Poly& n, const Poly& p) {
    if (n.is_zero()) fail(Errc::zero_argument, "p-adic norm of zero");
    BasePExpansion e = base_p_expand(n, p);
    std::int64_t i = 0;
    while (e.digits[i].is_zero()) ++i;
    return p.deg().value() * i;
}

} // namespace nw
