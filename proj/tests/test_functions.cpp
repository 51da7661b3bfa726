#include "property_suites.hpp"

#include <gtest/gtest.h>

using namespace wrightcheck;

namespace {

const Symbol h1 = positive_symbol("h1");
const Symbol h2 = positive_symbol("h2");
const Symbol h3 = positive_symbol("h3");
const Symbol h4 = positive_symbol("h4");

PointFunction theorem_function() {
    return positive_part_power_of(AdditiveFunctional{{h1, -1}, {h2, 1}, {h3, 1}, {h4, 1}}, 3);
}

}  // namespace

TEST(ScalarKernel, Values) {
    EXPECT_EQ(ScalarKernel::positive_part_power(3)(Rational(-2)), 0);
    EXPECT_EQ(ScalarKernel::positive_part_power(3)(Rational(2)), 8);
    EXPECT_EQ(ScalarKernel::positive_part_power(2)(Rational(0)), 0);
    EXPECT_EQ(ScalarKernel::absolute_value()(Rational(-9)), 9);
    EXPECT_EQ(ScalarKernel::power(3)(Rational(-2)), -8);
    EXPECT_EQ(ScalarKernel::identity()(make_rational(-1, 3)), make_rational(-1, 3));
    EXPECT_THROW(ScalarKernel::positive_part_power(0), std::invalid_argument);
}

TEST(FunctionEval, SixteenTermTableRows) {
    const auto f = theorem_function();
    EXPECT_EQ(function_eval(f, Point(h1) + Point(h2) + Point(h3) + Point(h4)), 8);
    EXPECT_EQ(function_eval(f, Point(h2) + Point(h3) + Point(h4)), 27);
    EXPECT_EQ(function_eval(f, Point(h1)), 0);
}

TEST(FunctionEval, TabulatedOutsideTableThrows) {
    const auto f = PointFunction::tabulated({{Point(h1), Rational(5)}});
    EXPECT_EQ(f(Point(h1)), 5);
    EXPECT_THROW(f(Point(h2)), UntabulatedPoint);
}

TEST(ScaleFunction, ZeroAndOne) {
    const auto f = theorem_function();
    const auto untab = PointFunction::tabulated({});
    const Point x = Point(h2) + Point(h3);
    EXPECT_EQ(scale_function(0, untab)(x), 0);
    EXPECT_EQ(scale_function(1, f)(x), f(x));
}

TEST(ScaleFunction, SquaredSlopeGivesQuadraticPositivePart) {
    const Symbol u = positive_symbol("u");
    for (int c : {0, 1, 2}) {
        const auto f = scale_function(c * c, positive_part_power_of(AdditiveFunctional{{u, 1}}, 2));
        const auto g = positive_part_power_of(AdditiveFunctional{{u, c}}, 2);
        for (int k = -3; k <= 3; ++k) {
            const Point x = Rational(k) * Point(u);
            EXPECT_EQ(f(x), g(x)) << "c=" << c << " k=" << k;
            EXPECT_EQ(f(x), k > 0 ? Rational(c * c * k * k) : Rational(0));
        }
    }
}

TEST(PointFunction, CombinatorsAreIdentitiesInTrivialCases) {
    const auto f = theorem_function();
    SeededRng rng(3);
    const std::vector<Symbol> syms = {h1, h2, h3, h4};
    for (int i = 0; i < 50; ++i) {
        const Point x = suites::random_point(rng, syms, -3, 3);
        ASSERT_EQ(PointFunction::pointwise_power(f, 1)(x), f(x));
        ASSERT_EQ(PointFunction::sum_of({f})(x), f(x));
        ASSERT_EQ(PointFunction::sum_of({f, scale_function(-1, f)})(x), 0);
        ASSERT_EQ(PointFunction::constant(7)(x), 7);
    }
}

TEST(PointFunction, KernelOfTabulatedModulus) {
    const auto q = PointFunction::tabulated({{Point(h1), Rational(-9)}, {Point(h2), Rational(4)}});
    const auto abs_q = PointFunction::kernel_of(ScalarKernel::absolute_value(), q);
    EXPECT_EQ(abs_q(Point(h1)), 9);
    EXPECT_EQ(abs_q(Point(h2)), 4);
}

TEST(PointFunction, CompositeMatchesKernelOfAdditive) {
    SeededRng rng(5);
    const auto syms = suites::suite_symbols();
    for (unsigned n : {1u, 3u, 5u}) {
        for (int i = 0; i < 100; ++i) {
            AdditiveFunctional a;
            for (const auto& s : syms) a.set(s, suites::random_rational(rng, -3, 3, 2));
            const Point x = suites::random_point(rng, syms, -3, 3);
            const Rational t = a(x);
            ASSERT_EQ(positive_part_power_of(a, n)(x), t > 0 ? power(t, n) : Rational(0));
        }
    }
}

TEST(PointFunction, PositivePartPowersAreJensenConvexOnSamples) {
    for (unsigned n : {1u, 3u}) {
        const auto t = suites::positive_part_jensen(n, 2022 + n);
        EXPECT_TRUE(t.all()) << "n=" << n << ": " << t.first_failure;
        EXPECT_EQ(t.total, 200u);
    }
}
