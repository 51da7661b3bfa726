#include "property_suites.hpp"

#include <gtest/gtest.h>

using namespace wrightcheck;

namespace {

const Symbol h1 = positive_symbol("h1");
const Symbol h2 = positive_symbol("h2");
const Symbol h3 = positive_symbol("h3");
const Symbol h4 = positive_symbol("h4");
const Symbol h = positive_symbol("h");

std::vector<Symbol> first(unsigned k) {
    const std::vector<Symbol> all = {h1, h2, h3, h4, positive_symbol("h5"), positive_symbol("h6")};
    return {all.begin(), all.begin() + k};
}

Point times(long long k, const Symbol& s) { return Rational(k) * Point(s); }

}  // namespace

TEST(AtomMass, Dirac) {
    const auto d = MeasureExpr::dirac(Point(h1));
    EXPECT_EQ(atom_mass(d, Point(h1)), 1);
    EXPECT_EQ(atom_mass(d, Point(h2)), 0);
}

TEST(AtomMass, ClosureCountsRepresentations) {
    const auto j = MeasureExpr::j_closure(MeasureExpr::dirac(Point()), Point(h));
    EXPECT_EQ(atom_mass(j, times(3, h)), 1);
    EXPECT_EQ(atom_mass(j, -Point(h)), 0);
    EXPECT_EQ(atom_mass(j, make_rational(1, 2) * Point(h)), 0);
    const auto jj = MeasureExpr::j_closure(j, Point(h));
    EXPECT_EQ(atom_mass(jj, times(2, h)), 3);
    EXPECT_EQ(atom_mass(jj, times(5, h)), 6);
}

TEST(AtomMass, ZeroStepClosureIsRejected) {
    EXPECT_THROW(MeasureExpr::j_closure(MeasureExpr::dirac(Point()), Point()), NonTerminatingJ);
    EXPECT_THROW(MeasureExpr::j_closure(MeasureExpr::dirac(Point()), -Point(h)), InvalidIncrement);
    EXPECT_THROW(MeasureExpr::shift(MeasureExpr::dirac(Point()), Point(h1) - Point(h2)), InvalidIncrement);
}

TEST(Nabla, SignedTopCornerValue) {
    for (unsigned n : {1u, 3u, 5u}) {
        const auto hs = first(n + 1);
        const auto incs = detail::as_increments(hs);
        const auto m = nabla(MeasureExpr::dirac(Point(h1)), incs);
        EXPECT_EQ(atom_mass(m, incs.total()), n % 2 ? -1 : 1) << "n=" << n;
    }
}

TEST(Nabla, DiracAndZero) {
    const Point x = Point(h1) + Point(h2);
    EXPECT_EQ(atom_mass(nabla(MeasureExpr::dirac(x), {Point(h)}), x), 1);
    const auto zero = MeasureExpr::scale(0, MeasureExpr::dirac(x));
    const auto nz = nabla(zero, {Point(h1), Point(h)});
    for (const auto& p : {x, Point(), x + Point(h), Point(h1) + Point(h)}) EXPECT_EQ(atom_mass(nz, p), 0);
}

TEST(JOp, ClosureOfDirac) {
    const auto m = j_op(MeasureExpr::dirac(Point(h1)), {Point(h1), Point(h2)});
    EXPECT_EQ(atom_mass(m, Point(h1)), 1);
    EXPECT_EQ(atom_mass(m, Point(h2)), 0);
    const auto mu1 = j_op(MeasureExpr::dirac(Point(h1)), detail::as_increments(first(4)));
    EXPECT_EQ(atom_mass(mu1, Point(h1) + Point(h2)), 1);
}

TEST(BuildMu, ComponentValues) {
    const auto hs3 = first(4);
    EXPECT_EQ(atom_mass(build_mu_i(1, hs3), Point(h1)), 1);
    EXPECT_EQ(atom_mass(build_mu_i(2, hs3), Point(h1)), 0);
    const auto hs1 = first(2);
    EXPECT_EQ(atom_mass(build_mu_i(1, hs1), Point(h1) + Point(h2)), 1);
    EXPECT_THROW(build_mu_i(0, hs1), std::out_of_range);
    EXPECT_THROW(build_mu_i(3, hs1), std::out_of_range);
    EXPECT_THROW(build_mu_i(1, {h1, h1}), std::invalid_argument);
    EXPECT_THROW(build_mu_i(1, {h1, Symbol{"v", false}}), InvalidIncrement);
}

TEST(BuildMu, SignedCombinationValues) {
    const auto mu = build_mu(first(4));
    EXPECT_EQ(atom_mass(mu, Point(h1)), -1);
    EXPECT_EQ(atom_mass(mu, Point(h1) + Point(h2)), 0);
    EXPECT_EQ(atom_mass(mu, Point(h2) + Point(h3)), 2);
}

TEST(BuildMu, ClosureSpotChecks) {
    SeededRng rng(44);
    const auto hs = first(4);
    for (std::size_t i = 1; i <= hs.size(); ++i) {
        const auto mu_i = build_mu_i(i, hs);
        for (int trial = 0; trial < 25; ++trial) {
            Point x(hs[i - 1]);
            for (const auto& s : hs) x += times(rng.uniform(0, 3), s);
            ASSERT_EQ(atom_mass(mu_i, x), 1) << "i=" << i << " x=" << to_string(x);
        }
    }
}

TEST(ASets, SmallCases) {
    const auto s1 = build_a_sets(first(2));
    ASSERT_EQ(s1.a_i.size(), 2u);
    EXPECT_EQ(s1.a_i[0], (std::vector<Point>{Point(h1), Point(h1) + Point(h2)}));
    EXPECT_EQ(s1.a_i[1], (std::vector<Point>{Point(h2), Point(h1) + Point(h2)}));
    EXPECT_EQ(s1.a_union, (std::vector<Point>{Point(h1), Point(h2), Point(h1) + Point(h2)}));
    const auto s3 = build_a_sets(first(4));
    for (const auto& ai : s3.a_i) EXPECT_EQ(ai.size(), 8u);
    EXPECT_EQ(s3.a_union.size(), 15u);
    EXPECT_TRUE(s3.in_a_i(0, Point(h1)));
    EXPECT_FALSE(s3.in_a_i(1, Point(h1)));
}

TEST(MeasureMassFunction, Composition) {
    const auto d = measure_mass_function(MeasureExpr::dirac(Point(h2)));
    EXPECT_EQ(d(Point(h2)), 1);
    EXPECT_EQ(d(Point(h1)), 0);
    const auto mu = build_mu(first(4));
    EXPECT_EQ(PointFunction::pointwise_power(measure_mass_function(mu), 3)(Point(h2) + Point(h3)), 8);
    const auto sum = PointFunction::sum_of(
        {measure_mass_function(mu), measure_mass_function(MeasureExpr::dirac(Point(h1)))});
    EXPECT_EQ(sum(Point(h1)), 0);
}

TEST(Measures, ShiftComposition) {
    SeededRng rng(8);
    const auto syms = suites::suite_symbols();
    for (int trial = 0; trial < 100; ++trial) {
        const auto nu = random_atomic_measure(rng, syms, false);
        const Point a = suites::random_positive_increment(rng, syms);
        const Point b = suites::random_positive_increment(rng, syms);
        const auto twice = shift(shift(nu, a), b);
        for (int i = 0; i < 20; ++i) {
            const Point x = suites::random_point(rng, syms, -1, 8);
            ASSERT_EQ(atom_mass(twice, x), atom_mass(nu, x - a - b));
        }
    }
}

TEST(Measures, Linearity) {
    SeededRng rng(9);
    const auto syms = suites::suite_symbols();
    for (int trial = 0; trial < 100; ++trial) {
        const auto m1 = random_atomic_measure(rng, syms, false);
        const auto m2 = random_atomic_measure(rng, syms, false);
        const Rational c = suites::random_rational(rng, -4, 4, 3);
        const auto combo = m1 + c * m2;
        for (int i = 0; i < 20; ++i) {
            const Point x = suites::random_point(rng, syms, 0, 5);
            ASSERT_EQ(atom_mass(combo, x), atom_mass(m1, x) + c * atom_mass(m2, x));
        }
    }
}

TEST(Measures, RoundTripExamples) {
    const auto m = nabla(j_op(MeasureExpr::dirac(Point()), {Point(h)}), {Point(h)});
    EXPECT_EQ(atom_mass(m, Point()), 1);
    EXPECT_EQ(atom_mass(m, Point(h)), 0);
}

TEST(Measures, RoundTripsBothDirections) {
    const auto r = verify_prop_4_3(40, 5);
    EXPECT_TRUE(r.pass());
}

TEST(Measures, CachedMassesEqualUncached) {
    SeededRng rng(12);
    const auto syms = suites::suite_symbols();
    for (int trial = 0; trial < 50; ++trial) {
        const auto nu = random_atomic_measure(rng, syms, false);
        const auto hs = random_increments(rng, syms);
        const auto m = nabla(j_op(nu, hs), hs);
        MassCache cache;
        for (int i = 0; i < 30; ++i) {
            const Point x = suites::random_point(rng, syms, -1, 7);
            ASSERT_EQ(atom_mass(m, x, &cache), atom_mass(m, x));
            ASSERT_EQ(atom_mass(m, x, &cache), atom_mass(m, x));
        }
    }
    EXPECT_EQ(verify_prop_4_3(20, 77, true).claims.size(), verify_prop_4_3(20, 77, false).claims.size());
    for (std::uint64_t seed : {1u, 2u}) {
        const auto on = verify_prop_4_3(15, seed, true);
        const auto off = verify_prop_4_3(15, seed, false);
        ASSERT_EQ(on.claims.size(), off.claims.size());
        for (std::size_t i = 0; i < on.claims.size(); ++i) EXPECT_EQ(on.claims[i].computed, off.claims[i].computed);
    }
}
