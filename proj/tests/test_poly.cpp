#include <gtest/gtest.h>

#include "resdouble/poly.hpp"

using namespace resdouble;

TEST(Poly, ParsesAndExpands) {
    EXPECT_EQ(parse_poly("x*(y^2-x)*(y^2+x)*(y^2-x^3)*(y^2+x^3)").str(), "x^9 - x^7*y^4 - x^3*y^4 + x*y^8");
    EXPECT_EQ(parse_poly("(x - 2*y)^3").str(), "x^3 - 6*x^2*y + 12*x*y^2 - 8*y^3");
    EXPECT_EQ(parse_poly(" - y^2 + x^3 / 2 ").str(), "1/2*x^3 - y^2");
    EXPECT_EQ(parse_poly("X*Y - 3").str(), "x*y - 3");
}

TEST(Poly, ZeroParsesToEmptyPolynomial) { EXPECT_TRUE(parse_poly("0").is_zero()); }

TEST(Poly, ParseErrorsCarryPositions) {
    auto pos = [](const std::string& s) {
        try {
            parse_poly(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    EXPECT_EQ(pos("x^"), 2);
    EXPECT_EQ(pos("x + z"), 4);
    EXPECT_EQ(pos("(x + y"), 6);
    EXPECT_EQ(pos("x / y"), 4);
    EXPECT_EQ(pos(""), 0);
    EXPECT_EQ(pos("x y"), 2);
}

TEST(Poly, RationalRoots) {
    // (2t - 3)(t + 1)^2 t (t^2 - 2)
    UniPoly f = UniPoly({-3, 2}) * UniPoly({1, 1}) * UniPoly({1, 1}) * UniPoly({0, 1}) * UniPoly({-2, 0, 1});
    EXPECT_EQ(rational_roots(f), (std::vector<Rational>{-1, 0, Rational(3, 2)}));
    EXPECT_TRUE(rational_roots(UniPoly({2, 0, 1})).empty());
    EXPECT_EQ(rational_roots(UniPoly({Rational(-1, 6), Rational(1, 3)})), std::vector<Rational>{Rational(1, 2)});
}

TEST(Poly, SquarefreeDecomposition) {
    UniPoly v({0, 1});
    UniPoly f = UniPoly({-1, 1}) * UniPoly({-1, 1}) * UniPoly({2, 0, 1}).monic() * UniPoly({2, 0, 1}) *
                UniPoly({2, 0, 1}) * UniPoly({3, 1});
    auto sq = squarefree_decomposition(UniPoly::constant(5) * f);
    ASSERT_EQ(sq.size(), 3u);
    EXPECT_EQ(sq[0], std::make_pair(UniPoly({3, 1}), 1));
    EXPECT_EQ(sq[1], std::make_pair(UniPoly({-1, 1}), 2));
    EXPECT_EQ(sq[2], std::make_pair(UniPoly({2, 0, 1}), 3));
}

TEST(Poly, ShiftIsSubstitution) {
    BiPoly f = parse_poly("x^2*y^3 - 4*x*y + y^2 - 7");
    BiPoly g = f.shift_y(Rational(-2, 3));
    BiPoly direct = parse_poly("x^2*(y - 2/3)^3 - 4*x*(y - 2/3) + (y - 2/3)^2 - 7");
    EXPECT_EQ(g, direct);
}

TEST(Poly, Restrictions) {
    BiPoly f = parse_poly("y^3 + x*y - x^2 + 2*y^2");
    EXPECT_EQ(f.restrict_x0(), UniPoly({0, 0, 2, 1}));
    EXPECT_EQ(f.restrict_y0(), UniPoly({0, 0, -1}));
    EXPECT_EQ(f.order(), 2);
    EXPECT_EQ(f.at_x(2), UniPoly({-4, 2, 2, 1}));
}

TEST(Poly, DivisionAndGcd) {
    UniPoly a = UniPoly({1, 1}) * UniPoly({-2, 0, 3});
    UniPoly b = UniPoly({1, 1}) * UniPoly({5, 1});
    EXPECT_EQ(gcd(a, b), UniPoly({1, 1}));
    auto [q, r] = divmod(a, UniPoly({1, 1}));
    EXPECT_EQ(q, UniPoly({-2, 0, 3}));
    EXPECT_TRUE(r.is_zero());
}
