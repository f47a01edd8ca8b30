#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzlab/hpoly.hpp"
#include "syzlab/parse.hpp"
#include "syzlab/rng.hpp"

using namespace syzlab;

namespace {

HPoly P(const char* src) { return parse_poly(src); }

HPoly random_hpoly(Rng& rng, int degree) {
    HPoly f(degree);
    for (const Mono& m : monomials_of_degree(degree)) {
        long c = rng.uniform(-4, 4);
        if (c != 0 && rng.coin()) f.add_term(m, Rational(c));
    }
    return f;
}

}  // namespace

TEST_CASE("rational invariants") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::from_string("10/15") == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 2).inverse() == Rational(2, 7));
}

TEST_CASE("poly arithmetic examples") {
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));

    HPoly cancel = P("x^2") - P("x^2");
    CHECK(cancel.is_zero());
    CHECK(cancel.degree() == 2);

    CHECK(P("xz + y^2") * P("xz + 2y^2") == P("x^2z^2 + 3xy^2z + 2y^4"));

    CHECK_THROWS_AS(P("x^2") + P("y"), std::invalid_argument);
    CHECK(P("x + y").pow(2) == P("x^2 + 2xy + y^2"));
    CHECK(P("2x").scaled(Rational(1, 2)) == P("x"));
}

TEST_CASE("partial derivatives") {
    HPoly f = P("y^4z + x^5");
    CHECK(partial_derivative(f, Var::Z) == P("y^4"));
    CHECK(partial_derivative(f, Var::X) == P("5x^4"));
    HPoly zero = partial_derivative(P("x^3"), Var::Y);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 2);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(P("x^2+y^2+z^2"), {Rational(1), Rational(1), Rational(1)}) == Rational(3));
    CHECK(evaluate(P("xz - y^2"), {Rational(1), Rational(1), Rational(1)}) == Rational(0));
    CHECK(evaluate(partial_derivative(P("y^4z + x^5"), Var::X),
                   {Rational(0), Rational(1), Rational(1)}) == Rational(0));
    CHECK_THROWS_AS(evaluate(P("x"), {Rational(0), Rational(0), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("restrict_to_line") {
    Point e1{Rational(1), Rational(0), Rational(0)};
    Point e2{Rational(0), Rational(1), Rational(0)};
    Point e3{Rational(0), Rational(0), Rational(1)};

    BinaryForm a = restrict_to_line(P("x^2 + y^2"), e1, e2);
    CHECK(a.degree() == 2);
    CHECK(a[0] == Rational(1));
    CHECK(a[1] == Rational(0));
    CHECK(a[2] == Rational(1));

    BinaryForm b = restrict_to_line(P("xz"), e1, e3);
    CHECK(b[0] == Rational(0));
    CHECK(b[1] == Rational(1));
    CHECK(b[2] == Rational(0));

    BinaryForm c = restrict_to_line(P("y^4z"), e1, e2);
    CHECK(c.is_zero());
    CHECK(c.degree() == 5);

    Point twice{Rational(2), Rational(0), Rational(0)};
    CHECK_THROWS_AS(restrict_to_line(P("x"), e1, twice), std::invalid_argument);
}

TEST_CASE("exact_divide") {
    CHECK(*exact_divide(P("x^2 - y^2"), P("x + y")) == P("x - y"));
    CHECK(*exact_divide(P("x^2z^2 + 3xy^2z + 2y^4"), P("xz + y^2")) == P("xz + 2y^2"));
    CHECK(!exact_divide(P("x^2"), P("y")));
    CHECK_THROWS_AS(exact_divide(P("x"), HPoly(1)), std::invalid_argument);
}

TEST_CASE("hessian determinant") {
    CHECK(hessian_det(P("x^3 + y^3 + z^3")) == P("216xyz"));
    CHECK(hessian_det(P("xyz")) == P("2xyz"));
    HPoly h = hessian_det(P("x^2 + y^2 + z^2"));
    CHECK(h.degree() == 0);
    CHECK(h == HPoly::constant(Rational(8)));
    CHECK_THROWS_AS(hessian_det(P("x")), std::invalid_argument);
}

TEST_CASE("binary gcd and squarefree parts") {
    // s^2 t -> squarefree part s t
    BinaryForm g(3);
    g[1] = Rational(1);  // s^2 t
    auto parts = binary_gcd_squarefree(g);
    CHECK(parts.squarefree_part.degree() == 2);
    BinaryForm st(2);
    st[1] = Rational(1);
    CHECK(parts.squarefree_part == st);

    // s^2 + t^2 is squarefree
    BinaryForm h(2);
    h[0] = Rational(1);
    h[2] = Rational(1);
    auto ph = binary_gcd_squarefree(h);
    CHECK(ph.squarefree_part.degree() == 2);
    CHECK(ph.gcd_with_derivative.degree() == 0);

    // s^3 (s+t)^2 -> squarefree part s (s+t)
    BinaryForm s(1), spt(1);
    s[0] = Rational(1);
    spt[0] = Rational(1);
    spt[1] = Rational(1);
    BinaryForm f = s * s * s * spt * spt;
    auto pf = binary_gcd_squarefree(f);
    CHECK(pf.squarefree_part.degree() == 2);
    CHECK(pf.gcd_with_derivative.degree() == 3);

    // t-power handling: t^3 has one distinct root
    BinaryForm t3(3);
    t3[3] = Rational(1);
    CHECK(binary_gcd_squarefree(t3).squarefree_part.degree() == 1);

    CHECK_THROWS_AS(binary_gcd_squarefree(BinaryForm(2)), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        int d1 = static_cast<int>(rng.uniform(0, 3));
        int d2 = static_cast<int>(rng.uniform(0, 3));
        HPoly f = random_hpoly(rng, d1);
        HPoly g = random_hpoly(rng, d1);
        HPoly h = random_hpoly(rng, d2);
        CHECK(f + g == g + f);
        CHECK(f * h == h * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * h) * h == f * (h * h));
    }
}

TEST_CASE("divide undoes multiply") {
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        HPoly f = random_hpoly(rng, static_cast<int>(rng.uniform(0, 3)));
        HPoly g = random_hpoly(rng, static_cast<int>(rng.uniform(1, 3)));
        if (g.is_zero()) continue;
        auto q = exact_divide(f * g, g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
    }
}

TEST_CASE("restriction is a ring map") {
    Rng rng(99);
    for (int i = 0; i < 15; ++i) {
        HPoly f = random_hpoly(rng, 2);
        HPoly g = random_hpoly(rng, 3);
        Point p{Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3)), Rational(1)};
        Point q{Rational(1), Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3))};
        Rational cross0 = p[1] * q[2] - p[2] * q[1];
        Rational cross1 = p[2] * q[0] - p[0] * q[2];
        Rational cross2 = p[0] * q[1] - p[1] * q[0];
        if (cross0.is_zero() && cross1.is_zero() && cross2.is_zero()) continue;
        CHECK(restrict_to_line(f * g, p, q) ==
              restrict_to_line(f, p, q) * restrict_to_line(g, p, q));
    }
}

TEST_CASE("derivatives commute and respect linearity") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        HPoly f = random_hpoly(rng, 4);
        HPoly g = random_hpoly(rng, 4);
        CHECK(partial_derivative(partial_derivative(f, Var::X), Var::Y) ==
              partial_derivative(partial_derivative(f, Var::Y), Var::X));
        CHECK(partial_derivative(f + g, Var::Z) ==
              partial_derivative(f, Var::Z) + partial_derivative(g, Var::Z));
    }
}

TEST_CASE("euler identity") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        int d = static_cast<int>(rng.uniform(1, 5));
        HPoly f = random_hpoly(rng, d);
        HPoly lhs = HPoly::variable(Var::X) * partial_derivative(f, Var::X) +
                    HPoly::variable(Var::Y) * partial_derivative(f, Var::Y) +
                    HPoly::variable(Var::Z) * partial_derivative(f, Var::Z);
        CHECK(lhs == f.scaled(Rational(d)));
    }
}

TEST_CASE("linear substitution composes with products") {
    Rng rng(23);
    std::array<std::array<Rational, 3>, 3> m;
    for (auto& row : m)
        for (auto& e : row) e = Rational(rng.uniform(-3, 3));
    HPoly f = random_hpoly(rng, 2);
    HPoly g = random_hpoly(rng, 3);
    CHECK(substitute_linear(f * g, m) == substitute_linear(f, m) * substitute_linear(g, m));
}
