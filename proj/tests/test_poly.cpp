#include <doctest.h>

#include "numwall/poly.hpp"
#include "numwall/seqgen.hpp"
#include "support.hpp"

using namespace nw;
using testing::code_of;

namespace {

Poly random_poly(const FieldPtr& f, std::mt19937_64& g, std::size_t deg) {
    auto c = oracle::random_seq(g, f->q(), deg + 1);
    if (c.back() == 0) c.back() = 1;
    return Poly(f, c);
}

} // namespace

TEST_CASE("absolute values") {
    auto f2 = Field::make(2, 1);
    CHECK(abs_value(Poly::parse(f2, "t^3+t")) == Deg(3));
    CHECK(abs_value(Poly(f2)) == Deg::neg_inf());
    CHECK(Deg::neg_inf() < Deg(-100));
    // t^-2 + t^-5
    LaurentTrunc th(f2, -1, 5, {0, 1, 0, 0, 1});
    CHECK(abs_value(th) == -2);
    CHECK(code_of([&] { abs_value(LaurentTrunc(f2, -1, 3, {0, 0, 0})); }) == Errc::insufficient_precision);
}

TEST_CASE("polynomial parsing and printing") {
    auto f3 = Field::make(3, 1);
    Poly a = Poly::parse(f3, "2*t^3 + t + 1");
    CHECK(a.coeffs() == std::vector<Fe>{1, 1, 0, 2});
    CHECK(Poly::parse(f3, "3:[2,0,1,1]") == a);
    CHECK(Poly::parse(f3, a.str()) == a);
    CHECK(Poly::parse(f3, a.code_str()) == a);
    CHECK(code_of([&] { Poly::parse(f3, "t^"); }) == Errc::parse_error);
    CHECK(code_of([&] { Poly::parse(f3, "2:[1,1]"); }) == Errc::parse_error);
}

TEST_CASE("polynomial ring laws") {
    auto f5 = Field::make(5, 1);
    std::mt19937_64 g(3);
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(f5, g, g() % 6), b = random_poly(f5, g, g() % 6), c = random_poly(f5, g, 1 + g() % 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).deg().value() == a.deg().value() + b.deg().value());
        Poly quo, rem;
        a.divmod(c, quo, rem);
        CHECK(quo * c + rem == a);
        CHECK(rem.deg() < c.deg());
        // Ultrametric inequality for |.|.
        CHECK(abs_value(a + b) <= std::max(abs_value(a), abs_value(b)));
        // Independent product.
        std::vector<std::int64_t> x(a.coeffs().begin(), a.coeffs().end()), y(b.coeffs().begin(), b.coeffs().end());
        auto z = oracle::pmul(x, y, 5);
        std::vector<Fe> zc(z.begin(), z.end());
        CHECK((a * b).coeffs() == zc);
    }
}

TEST_CASE("irreducibility") {
    auto f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    CHECK(Poly::parse(f2, "t^2+t+1").is_irreducible());
    CHECK_FALSE(Poly::parse(f2, "t^2+1").is_irreducible());
    CHECK(Poly::parse(f2, "t^3+t+1").is_irreducible());
    CHECK(Poly::parse(f3, "t^2+1").is_irreducible());
    CHECK_FALSE(Poly::parse(f3, "t^2+t+1").is_irreducible()); // (t-1)^2
    CHECK(Poly::parse(f3, "t^3+2*t+1").is_irreducible());
    CHECK_FALSE(Poly::parse(f3, "t^3+t+1").is_irreducible()); // root 1
    // Count of monic irreducible quadratics over GF(q) is (q^2-q)/2.
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::make(q, 1);
        int count = 0;
        for (Fe a = 0; a < q; ++a)
            for (Fe b = 0; b < q; ++b) count += Poly(f, {b, a, 1}).is_irreducible();
        CHECK(count == int(q * q - q) / 2);
    }
}

TEST_CASE("base p expansion") {
    auto f2 = Field::make(2, 1);
    Poly p = Poly::parse(f2, "t^2+t+1");
    auto e = base_p_expand(p * p, p);
    REQUIRE(e.digits.size() == 3);
    CHECK(e.digits[0].is_zero());
    CHECK(e.digits[1].is_zero());
    CHECK(e.digits[2] == Poly::constant(f2, 1));
    auto e2 = base_p_expand(Poly::parse(f2, "t^3+t^2+t"), p);
    REQUIRE(e2.digits.size() == 2);
    CHECK(e2.digits[0].is_zero());
    CHECK(e2.digits[1] == Poly::parse(f2, "t"));
    auto e3 = base_p_expand(Poly::constant(f2, 1), p);
    REQUIRE(e3.digits.size() == 1);
    CHECK(e3.digits[0] == Poly::constant(f2, 1));
    CHECK(code_of([&] { base_p_expand(p, Poly::parse(f2, "t^2+1")); }) == Errc::reducible_base);
}

TEST_CASE("base p expansion round trip and digit bounds") {
    auto f3 = Field::make(3, 1);
    std::mt19937_64 g(11);
    for (const char* ps : {"t", "t^2+1", "t^3+2*t+1"}) {
        Poly p = Poly::parse(f3, ps);
        for (int it = 0; it < 100; ++it) {
            Poly n = random_poly(f3, g, g() % 10);
            auto e = base_p_expand(n, p);
            CHECK(e.reassemble() == n);
            for (const Poly& d : e.digits) CHECK(d.deg() < p.deg());
        }
    }
}

TEST_CASE("p-adic norm") {
    auto f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    Poly p = Poly::parse(f2, "t^2+t+1");
    CHECK(padic_norm_exp(Poly::parse(f2, "t+1"), p) == 0);
    CHECK(padic_norm_exp(Poly::parse(f2, "t") * p, p) == 2);
    CHECK(padic_norm_exp(Poly::monomial(f3, 5), Poly::parse(f3, "t")) == 5);
    CHECK(code_of([&] { padic_norm_exp(Poly(f2), p); }) == Errc::zero_argument);
    // Additivity and multiples of deg p.
    std::mt19937_64 g(5);
    Poly p3 = Poly::parse(f3, "t^2+1");
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(f3, g, g() % 5) * p3.pow(static_cast<unsigned>(g() % 3));
        Poly b = random_poly(f3, g, g() % 5);
        std::int64_t ea = padic_norm_exp(a, p3), eb = padic_norm_exp(b, p3);
        CHECK(ea % 2 == 0);
        CHECK(padic_norm_exp(a * b, p3) == ea + eb);
    }
}

TEST_CASE("fractional part") {
    auto f3 = Field::make(3, 1);
    // t^2 + 1 + t^-1, prec 2
    LaurentTrunc x(f3, 2, 2, {1, 0, 1, 1, 0});
    LaurentTrunc fx = frac(x);
    CHECK(fx.top() == -1);
    CHECK(fx.coeff(-1) == 1);
    CHECK(fx.coeff(-2) == 0);
    CHECK(frac(LaurentTrunc::from_poly(Poly::parse(f3, "t^2+2"), 4)).zero_on_range());
    LaurentTrunc y(f3, -3, 5, {1, 0, 0});
    CHECK(frac(y).top() == -3);
    CHECK(frac(y).coeff(-3) == 1);
}

TEST_CASE("polynomial times series") {
    auto f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    LaurentTrunc th(f2, -1, 2, {1, 1});
    LaurentTrunc r = mul_poly_series(Poly::parse(f2, "t"), th);
    CHECK(r.prec() == 1);
    CHECK(r.top() == 0);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(-1) == 1);
    LaurentTrunc same = mul_poly_series(Poly::constant(f2, 1), th);
    CHECK(same.serialize() == th.serialize());
    // (t+1)(t^-1 + t^-3 + t^-4) = 1 + t^-1 + t^-2 + t^-3 + t^-3 + t^-4 ..., prec 3
    LaurentTrunc th2(f2, -1, 4, {1, 0, 1, 1});
    LaurentTrunc r2 = mul_poly_series(Poly::parse(f2, "t+1"), th2);
    CHECK(r2.prec() == 3);
    CHECK(r2.coeff(0) == 1);
    CHECK(r2.coeff(-1) == 1);
    CHECK(r2.coeff(-2) == 1);
    CHECK(r2.coeff(-3) == 0);
    CHECK(code_of([&] { r2.coeff(-4); }) == Errc::insufficient_precision);
    CHECK(code_of([&] { mul_poly_series(Poly::monomial(f2, 4), th2); }) == Errc::insufficient_precision);
    CHECK(code_of([&] { mul_poly_series(Poly::constant(f3, 1), th2); }) == Errc::field_mismatch);
}

TEST_CASE("series product agrees with a direct convolution") {
    auto f5 = Field::make(5, 1);
    std::mt19937_64 g(9);
    for (int it = 0; it < 100; ++it) {
        auto s = oracle::random_seq(g, 5, 20);
        Poly n = random_poly(f5, g, g() % 6);
        LaurentTrunc prod = mul_poly_series(n, LaurentTrunc::from_sequence(f5, s));
        std::int64_t d = n.deg().value();
        for (std::int64_t e = d - 1; e >= -(20 - d); --e) {
            std::int64_t acc = 0;
            for (std::int64_t j = 0; j <= d; ++j) {
                std::int64_t i = j - e; // s_i t^{-i} times t^j
                if (i >= 1 && i <= 20) acc += std::int64_t(n.coeff(j)) * s[i - 1];
            }
            CHECK(prod.coeff(e) == Fe(acc % 5));
        }
    }
}

TEST_CASE("series serialization round trip") {
    auto f3 = Field::make(3, 1);
    std::mt19937_64 g(1);
    for (int it = 0; it < 50; ++it) {
        auto s = oracle::random_seq(g, 3, 1 + g() % 15);
        LaurentTrunc th = LaurentTrunc::from_sequence(f3, s);
        LaurentTrunc back = LaurentTrunc::parse(f3, th.serialize());
        CHECK(back.serialize() == th.serialize());
        CHECK(back.prec() == th.prec());
    }
    CHECK(code_of([&] { LaurentTrunc::parse(f3, "x=1"); }) == Errc::parse_error);
}

TEST_CASE("substitution examples") {
    auto f3 = Field::make(3, 1);
    LaurentTrunc r = substitute({1, 0, 0, 0}, Poly::parse(f3, "t^2+1"), 8);
    std::vector<Fe> expect{0, 1, 0, 2, 0, 1, 0, 2}; // t^-1 .. t^-8
    for (std::int64_t e = 1; e <= 8; ++e) CHECK(r.coeff(-e) == expect[e - 1]);
    CHECK(r.coeff(0) == 0);
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q, 1);
        LaurentTrunc r2 = substitute({0, 1, 0}, Poly::parse(f, "t^2"), 6);
        CHECK(r2.top() == -4);
        for (std::int64_t e = 1; e <= 6; ++e) CHECK(r2.coeff(-e) == (e == 4 ? 1u : 0u));
    }
    // p = t is the identity.
    std::mt19937_64 g(2);
    auto b = oracle::random_seq(g, 3, 12);
    CHECK(substitute(b, Poly::parse(f3, "t"), 12).serialize() == LaurentTrunc::from_sequence(f3, b).serialize());
    CHECK(code_of([&] { substitute({1}, Poly::parse(f3, "t^2+1"), 8); }) == Errc::not_enough_coefficients);
    CHECK(substitute_coeffs_needed(2, 8) == 4);
}

TEST_CASE("substitution inverts powers of p") {
    // For b = e_j the result is p^{-j}; multiplying back by p^j gives 1 to precision.
    for (const char* spec : {"2", "3"}) {
        auto f = Field::parse(spec);
        for (const char* ps : {"t^2+t+1", "t^3+t+1", "t^2+1"}) {
            Poly p = Poly::parse(f, ps);
            if (!p.is_irreducible()) continue;
            std::int64_t m = p.deg().value();
            for (std::int64_t j = 1; j <= 4; ++j) {
                std::vector<Fe> b(6, 0);
                b[j - 1] = 1;
                std::int64_t prec = 6 * m;
                LaurentTrunc x = substitute(b, p, prec);
                LaurentTrunc back = mul_poly_series(p.pow(static_cast<unsigned>(j)), x);
                CHECK(back.coeff(0) == 1);
                CHECK(frac(back).zero_on_range());
            }
        }
    }
}

TEST_CASE("composition scales degrees, fractional parts and p-adic norms") {
    auto f3 = Field::make(3, 1);
    Poly p = Poly::parse(f3, "t^2+1");
    std::int64_t m = 2;
    std::mt19937_64 g(13);
    for (int it = 0; it < 60; ++it) {
        auto b = oracle::random_seq(g, 3, 24);
        Poly n = random_poly(f3, g, 1 + g() % 4);
        CHECK(compose(n, p).deg().value() == m * n.deg().value());
        CHECK(padic_norm_exp(compose(n, p), p.pow(1)) == m * padic_norm_exp(n, Poly::parse(f3, "t")));
        LaurentTrunc base = frac(mul_poly_series(n, LaurentTrunc::from_sequence(f3, b)));
        LaurentTrunc trans = frac(mul_poly_series(compose(n, p), substitute(b, p, m * 24)));
        if (base.zero_on_range()) continue;
        REQUIRE_FALSE(trans.zero_on_range());
        CHECK(trans.top() == m * base.top());
    }
}
