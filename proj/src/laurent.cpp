#include "numwall/poly.hpp"

#include <cctype>
#include <sstream>

namespace nw {

LaurentTrunc::LaurentTrunc(FieldPtr f, std::int64_t hi, std::int64_t prec, std::vector<Fe> coeffs)
    : f_(std::move(f)), hi_(hi), prec_(prec), c_(std::move(coeffs)) {
    if (static_cast<std::int64_t>(c_.size()) != hi + prec + 1 && !(c_.empty() && hi < -prec))
        fail(Errc::invalid_argument, "coefficient count does not match the exponent range");
    normalize();
}

void LaurentTrunc::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        hi_ = -prec_ - 1;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    hi_ -= static_cast<std::int64_t>(lead);
}

LaurentTrunc LaurentTrunc::from_sequence(FieldPtr f, const std::vector<Fe>& s) {
    return LaurentTrunc(std::move(f), -1, static_cast<std::int64_t>(s.size()), s);
}

LaurentTrunc LaurentTrunc::from_poly(const Poly& p, std::int64_t prec) {
    std::int64_t hi = p.is_zero() ? -prec - 1 : std::max<std::int64_t>(p.deg().value(), -prec - 1);
    std::vector<Fe> c;
    for (std::int64_t e = hi; e >= -prec; --e) c.push_back(e >= 0 ? p.coeff(static_cast<std::size_t>(e)) : 0);
    return LaurentTrunc(p.field(), hi, prec, std::move(c));
}

Fe LaurentTrunc::coeff(std::int64_t e) const {
    if (e < -prec_) fail(Errc::insufficient_precision, "coefficient of t^" + std::to_string(e) + " lies below precision " + std::to_string(prec_));
    if (e > hi_) return 0;
    return c_[static_cast<std::size_t>(hi_ - e)];
}

std::string LaurentTrunc::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = hi_; e >= -prec_ && !c_.empty(); --e) {
        Fe c = coeff(e);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    os << " + O(t^" << (-prec_ - 1) << ")";
    return os.str();
}

std::string LaurentTrunc::serialize() const {
    std::ostringstream os;
    std::int64_t h = c_.empty() ? -prec_ - 1 : hi_;
    os << "h=" << h << " prec=" << prec_ << "\n";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i];
    os << "\n";
    return os.str();
}

LaurentTrunc LaurentTrunc::parse(FieldPtr f, std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string a, b;
    if (!(is >> a >> b) || a.rfind("h=", 0) != 0 || b.rfind("prec=", 0) != 0)
        fail(Errc::parse_error, "series header must be 'h=<top> prec=<prec>'");
    std::int64_t h = 0, prec = 0;
    try {
        h = std::stoll(a.substr(2));
        prec = std::stoll(b.substr(5));
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad series header");
    }
    std::vector<Fe> c;
    std::string tok;
    while (is >> tok) {
        for (char& ch : tok)
            if (ch == ',') ch = ' ';
        std::istringstream ts(tok);
        std::int64_t v;
        while (ts >> v) c.push_back(f->embed(v));
    }
    if (h < -prec) c.clear();
    return LaurentTrunc(std::move(f), h, prec, std::move(c));
}

std::int64_t abs_value(const LaurentTrunc& x) {
    if (x.zero_on_range())
        fail(Errc::insufficient_precision, "series vanishes down to t^-" + std::to_string(x.prec()) + "; degree unresolved");
    return x.top();
}

LaurentTrunc frac(const LaurentTrunc& x) {
    std::vector<Fe> c;
    for (std::int64_t e = -1; e >= -x.prec(); --e) c.push_back(x.coeff(e));
    if (x.prec() < 1) return LaurentTrunc(x.field(), -x.prec() - 1, x.prec(), {});
    return LaurentTrunc(x.field(), -1, x.prec(), std::move(c));
}

LaurentTrunc mul_poly_series(const Poly& n, const LaurentTrunc& theta) {
    const Field& f = *theta.field();
    if (!n.field() || !n.field()->same(f)) fail(Errc::field_mismatch, "polynomial and series over different fields");
    if (n.is_zero()) return LaurentTrunc(theta.field(), -theta.prec() - 1, theta.prec(), {});
    std::int64_t d = n.deg().value();
    std::int64_t prec = theta.prec() - d;
    if (prec < 1)
        fail(Errc::insufficient_precision, "product keeps no fractional coefficient: need precision above " + std::to_string(d));
    if (theta.zero_on_range()) return LaurentTrunc(theta.field(), -prec - 1, prec, {});
    std::int64_t hi = theta.top() + d;
    std::vector<Fe> c;
    c.reserve(static_cast<std::size_t>(hi + prec + 1));
    for (std::int64_t e = hi; e >= -prec; --e) {
        Fe acc = 0;
        for (std::int64_t j = 0; j <= d; ++j) {
            Fe nj = n.coeff(static_cast<std::size_t>(j));
            if (nj == 0 || e - j > theta.top()) continue;
            acc = f.add(acc, f.mul(nj, theta.coeff(e - j)));
        }
        c.push_back(acc);
    }
    return LaurentTrunc(theta.field(), hi, prec, std::move(c));
}

std::int64_t substitute_coeffs_needed(std::int64_t deg_p, std::int64_t prec_t) {
    return prec_t < 0 ? 0 : prec_t / deg_p;
}

LaurentTrunc substitute(const std::vector<Fe>& b, const Poly& p, std::int64_t prec_t) {
    if (p.is_zero() || p.deg().value() < 1) fail(Errc::invalid_argument, "substitution base must have degree at least 1");
    const FieldPtr& fp = p.field();
    const Field& f = *fp;
    std::int64_t m = p.deg().value();
    std::int64_t need = substitute_coeffs_needed(m, prec_t);
    if (static_cast<std::int64_t>(b.size()) < need)
        fail(Errc::not_enough_coefficients, "substitution to precision " + std::to_string(prec_t) + " needs " + std::to_string(need) +
                                                " coefficients, got " + std::to_string(b.size()));
    if (need == 0) return LaurentTrunc(fp, -prec_t - 1, prec_t, {});
    std::size_t len = static_cast<std::size_t>(prec_t) + 1; // powers x^0..x^prec_t, x = 1/t
    // u(x) = p(t) t^{-m}
    std::vector<Fe> u(len, 0);
    for (std::int64_t j = 0; j <= m && j < static_cast<std::int64_t>(len); ++j) u[j] = p.coeff(static_cast<std::size_t>(m - j));
    std::vector<Fe> ui(len, 0);
    Fe u0i = f.inv(u[0]);
    ui[0] = u0i;
    for (std::size_t i = 1; i < len; ++i) {
        Fe acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc = f.add(acc, f.mul(u[j], ui[i - j]));
        ui[i] = f.neg(f.mul(acc, u0i));
    }
    std::vector<Fe> y(len, 0);
    for (std::size_t i = static_cast<std::size_t>(m); i < len; ++i) y[i] = ui[i - m];
    auto mul = [&](const std::vector<Fe>& a, const std::vector<Fe>& c) {
        std::vector<Fe> r(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], c[j]));
        }
        return r;
    };
    std::vector<Fe> acc(len, 0);
    acc[0] = b[static_cast<std::size_t>(need - 1)];
    for (std::int64_t i = need - 1; i >= 1; --i) {
        acc = mul(acc, y);
        acc[0] = f.add(acc[0], b[static_cast<std::size_t>(i - 1)]);
    }
    acc = mul(acc, y);
    std::vector<Fe> c(acc.begin() + 1, acc.end());
    return LaurentTrunc(fp, -1, prec_t, std::move(c));
}

} // namespace nw
