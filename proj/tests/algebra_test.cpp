#include <multicurve/multicurve.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace multicurve;

namespace {

Exponent E(long a, long b, long c) { return Exponent{a, b, c}; }

SparsePolynomial P(const std::string& text) { return parse_polynomial(text); }

} // namespace

TEST(Numeric, FloorDivision) {
    EXPECT_EQ(floor_div(Int(7), Int(3)), 2);
    EXPECT_EQ(floor_div(Int(6), Int(3)), 2);
    EXPECT_EQ(floor_div(Int(-7), Int(3)), -3);
    EXPECT_EQ(floor_div(Int(-6), Int(3)), -2);
    EXPECT_EQ(floor_div(Int(0), Int(5)), 0);
}

TEST(Numeric, FloorCeil) {
    EXPECT_EQ(floor(Rational(7, 2)), 3);
    EXPECT_EQ(floor(Rational(-7, 2)), -4);
    EXPECT_EQ(floor(Rational(3)), 3);
    EXPECT_EQ(ceil(Rational(7, 2)), 4);
    EXPECT_EQ(ceil(Rational(-7, 2)), -3);
    EXPECT_EQ(ceil(Rational(3)), 3);
    EXPECT_EQ(floor(Rational(13, 9) * 9 - 12), 1);
}

TEST(Numeric, RationalText) {
    EXPECT_EQ(to_string(Rational(13, 9)), "13/9");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(parse_rational("13/9"), Rational(13, 9));
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("+7"), Rational(7));
    EXPECT_THROW(parse_rational("1.5"), parse_error);
    EXPECT_THROW(parse_rational("3/0"), parse_error);
    EXPECT_THROW(parse_rational("2/-3"), parse_error);
    EXPECT_THROW(parse_rational(""), parse_error);
    EXPECT_THROW(parse_rational("13/9 "), parse_error);
}

TEST(Vectors, Arithmetic) {
    Vec3 a{1, 2, 3}, b{4, 5, 6};
    EXPECT_EQ(a + b, Vec3(5, 7, 9));
    EXPECT_EQ(b - a, Vec3(3, 3, 3));
    EXPECT_EQ(-a, Vec3(-1, -2, -3));
    EXPECT_EQ(a * Int(3), Vec3(3, 6, 9));
    EXPECT_EQ(dot(a, b), 32);
    EXPECT_EQ(cross(Vec3(1, 0, 0), Vec3(0, 1, 0)), Vec3(0, 0, 1));
    EXPECT_EQ(cross(a, b), Vec3(-3, 6, -3));
    EXPECT_EQ(a.total_degree(), 6);
    EXPECT_TRUE(Vec3(0, 0, 0).is_zero());
    EXPECT_TRUE(a.positive());
    EXPECT_FALSE(Vec3(1, 0, 2).positive());
    EXPECT_TRUE(Vec3(1, 0, 2).nonnegative());
}

TEST(Vectors, OrdersAndPrimitive) {
    EXPECT_TRUE(divides(E(1, 0, 1), E(2, 0, 1)));
    EXPECT_FALSE(divides(E(1, 0, 1), E(0, 5, 5)));
    EXPECT_TRUE(lex_less(E(0, 2, 0), E(1, 0, 1)));
    EXPECT_TRUE(grlex_less(E(0, 1, 0), E(2, 0, 0)));   // lower total degree
    EXPECT_TRUE(grlex_less(E(0, 2, 0), E(1, 0, 1)));   // same degree, lex breaks tie
    EXPECT_EQ(primitive(Vec3(2, -4, 6)), Vec3(1, -2, 3));
    EXPECT_EQ(primitive(Vec3(0, 0, 0)), Vec3(0, 0, 0));
    EXPECT_EQ(primitive(Vec3(0, -3, 0)), Vec3(0, -1, 0));
    EXPECT_EQ(to_string(Vec3(3, 4, 5)), "[3 4 5]");
}

TEST(Parse, Examples) {
    SparsePolynomial f = P("y^2 - x*z");
    EXPECT_EQ(f.term_count(), 2u);
    EXPECT_EQ(f.coefficient(E(0, 2, 0)), 1);
    EXPECT_EQ(f.coefficient(E(1, 0, 1)), -1);

    EXPECT_TRUE(P("0").is_zero());
    EXPECT_TRUE(P("x - x").is_zero());
    EXPECT_EQ(P("(x+y)^2 - x^2 - 2*x*y"), P("y^2"));
    EXPECT_EQ(P("x1*x3^2"), P("x*z^2"));
    EXPECT_EQ(P("3/2*x").coefficient(E(1, 0, 0)), Rational(3, 2));
    EXPECT_EQ(P("-x^2"), -P("x^2"));
    EXPECT_EQ(P("2^3"), SparsePolynomial::constant(8));
}

TEST(Parse, ErrorsCarryPositions) {
    try {
        parse_polynomial("x + @");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.code(), errc::syntax_error);
        EXPECT_EQ(e.position(), 4u);
    }
    try {
        parse_polynomial("x^-1");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.code(), errc::negative_exponent);
        EXPECT_EQ(e.position(), 2u);
    }
    try {
        parse_polynomial("w + 1");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.code(), errc::syntax_error);
        EXPECT_EQ(e.position(), 0u);
    }
    try {
        parse_polynomial("2x");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.code(), errc::syntax_error);
        EXPECT_EQ(e.position(), 1u);
    }
    EXPECT_THROW(parse_polynomial("x*(y"), parse_error);
}

TEST(Polynomials, Arithmetic) {
    SparsePolynomial f = P("y^2 - x*z");
    EXPECT_EQ(f * P("y^2 + x*z"), P("y^4 - x^2*z^2"));
    EXPECT_EQ(f * SparsePolynomial(), SparsePolynomial());
    EXPECT_EQ(f + (-f), SparsePolynomial());
    EXPECT_EQ(f * Rational(1, 2), P("1/2*y^2 - 1/2*x*z"));
    EXPECT_EQ(f.pow(2), P("y^4 - 2*x*y^2*z + x^2*z^2"));
    EXPECT_EQ(f.pow(0), SparsePolynomial::constant(1));
    EXPECT_EQ(f.shifted(E(1, 0, 0)), P("x*y^2 - x^2*z"));
    EXPECT_EQ(f.leading_exponent(), E(1, 0, 1)); // x*z beats y^2 in graded lex
}

TEST(Polynomials, Derivatives) {
    EXPECT_EQ(partial_derivative(P("y^2 - x*z"), 1), P("2*y"));
    EXPECT_EQ(partial_derivative(P("y^2"), 0), SparsePolynomial());
    EXPECT_EQ(partial_derivative(P("z^2 - x^2*y"), 2), P("2*z"));
    EXPECT_EQ(partial_derivative(P("x*z"), E(1, 0, 1)), SparsePolynomial::constant(1));
    EXPECT_EQ(partial_derivative(P("x^3"), E(2, 0, 0)), P("6*x"));
}

TEST(Polynomials, Parametrization) {
    Weight n{3, 4, 5};
    EXPECT_TRUE(substitute_parametrization(P("y^2 - x*z"), n).empty());
    UnivariatePolynomial u = substitute_parametrization(P("y^2 + x*z"), n);
    ASSERT_EQ(u.size(), 1u);
    EXPECT_EQ(u.at(Int(8)), 2);
    EXPECT_EQ(substitute_parametrization(P("x"), n).at(Int(3)), 1);
}

TEST(Polynomials, OrdAlongWeight) {
    Weight n{3, 4, 5};
    EXPECT_EQ(ord_weight(n, P("x")), Int(3));
    EXPECT_EQ(ord_weight(n, P("y^2 - x*z")), Int(8));
    EXPECT_EQ(ord_weight(n, P("1 + z")), Int(0));
    EXPECT_EQ(ord_weight(n, SparsePolynomial()), std::nullopt);
}

TEST(Polynomials, Display) {
    // Terms print in graded-lex order, largest first; same-degree ties go to
    // the lexicographically larger exponent.
    EXPECT_EQ(to_string(P("y^2 - x*z")), "-x*z + y^2");
    EXPECT_EQ(to_string(P("x^3 - y*z")), "x^3 - y*z");
    EXPECT_EQ(to_string(SparsePolynomial()), "0");
    EXPECT_EQ(to_string(P("-x + 3/2*z^2")), "3/2*z^2 - x");
    EXPECT_EQ(to_string(SparsePolynomial::constant(1)), "1");
}

TEST(Polynomials, RandomRingAxioms) {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        SparsePolynomial f = oracle::random_polynomial(rng, 5, 4, 3);
        SparsePolynomial g = oracle::random_polynomial(rng, 5, 4, 3);
        SparsePolynomial h = oracle::random_polynomial(rng, 4, 4, 3);
        EXPECT_EQ((f + g) * h, f * h + g * h);
        EXPECT_EQ(f * g, g * f);
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_EQ(parse_polynomial(to_string(f)), f);
    }
}

TEST(Polynomials, ParametrizationIsARingMap) {
    std::mt19937_64 rng(777);
    Weight n{3, 4, 5};
    for (int iter = 0; iter < 100; ++iter) {
        SparsePolynomial f = oracle::random_polynomial(rng, 4, 4, 2);
        SparsePolynomial g = oracle::random_polynomial(rng, 4, 4, 2);
        EXPECT_EQ(substitute_parametrization(f * g, n),
                  oracle::uni_mul(substitute_parametrization(f, n),
                                  substitute_parametrization(g, n)));
    }
}

TEST(Linalg, RowSpace) {
    RowSpace space;
    EXPECT_TRUE(space.insert({Rational(1), Rational(0), Rational(1)}));
    EXPECT_TRUE(space.insert({Rational(0), Rational(1), Rational(1)}));
    EXPECT_FALSE(space.insert({Rational(1), Rational(1), Rational(2)}));
    EXPECT_EQ(space.rank(), 2u);
    EXPECT_TRUE(space.contains({Rational(1), Rational(-1), Rational(0)}));
    EXPECT_FALSE(space.contains({Rational(0), Rational(0), Rational(1)}));

    RowSpace bigger = space;
    bigger.insert({Rational(0), Rational(0), Rational(1)});
    EXPECT_TRUE(row_space_contains(bigger, space));
    EXPECT_FALSE(row_space_contains(space, bigger));
    EXPECT_FALSE(row_space_equal(space, bigger));
}

TEST(Linalg, RrefAndNullspace) {
    std::vector<RationalRow> m = {{Rational(0), Rational(2), Rational(4)},
                                  {Rational(1), Rational(1), Rational(1)}};
    auto pivots = rref(m);
    ASSERT_EQ(pivots.size(), 2u);
    EXPECT_EQ(pivots[0], 0u);
    EXPECT_EQ(pivots[1], 1u);
    EXPECT_EQ(m[0], RationalRow({Rational(1), Rational(0), Rational(-1)}));
    EXPECT_EQ(m[1], RationalRow({Rational(0), Rational(1), Rational(2)}));

    auto basis = nullspace({{Rational(1), Rational(1), Rational(1)}}, 3);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis)
        EXPECT_EQ(v[0] + v[1] + v[2], 0);

    auto full = nullspace({}, 3);
    EXPECT_EQ(full.size(), 3u);
}

TEST(MonomialIdeals, Minimalization) {
    MonomialIdeal ideal =
        MonomialIdeal::from_generators({E(2, 0, 0), E(2, 1, 0), E(0, 1, 0), E(0, 1, 0)});
    ASSERT_EQ(ideal.generators().size(), 2u);
    EXPECT_EQ(ideal.generators()[0], E(2, 0, 0));
    EXPECT_EQ(ideal.generators()[1], E(0, 1, 0));
    EXPECT_TRUE(ideal.contains(E(2, 5, 0)));
    EXPECT_TRUE(ideal.contains(E(0, 1, 3)));
    EXPECT_FALSE(ideal.contains(E(1, 0, 4)));
    EXPECT_FALSE(ideal.contains(E(0, 0, 0)));
}

TEST(MonomialIdeals, EqualityAndDisplay) {
    MonomialIdeal a = MonomialIdeal::from_generators({E(0, 2, 0), E(1, 0, 1)});
    MonomialIdeal b = MonomialIdeal::from_generators({E(1, 0, 1), E(0, 2, 0)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_string(a), "(y^2, x*z)");
    MonomialIdeal unit = MonomialIdeal::from_generators({E(0, 0, 0), E(1, 0, 0)});
    EXPECT_EQ(to_string(unit), "(1)");
    EXPECT_TRUE(unit.contains(E(0, 0, 0)));
}
