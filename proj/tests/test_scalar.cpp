#include <gtest/gtest.h>

#include <cmath>

#include "ggindex/families.hpp"
#include "ggindex/index.hpp"
#include "ggindex/scalar.hpp"

using namespace ggindex;

namespace {

double r(double a, double b) { return std::sqrt(a / b); }

// Triangle-edge sum evaluated in long double straight from its definition.
long double split_ref(long n, long x) {
    long double xl = x, nl = n;
    return std::sqrt(xl / (xl + 1)) + std::sqrt((nl - 3 - xl) / (nl - 2 - xl)) +
           std::sqrt((nl - 3) / ((xl + 1) * (nl - 2 - xl)));
}

}  // namespace

TEST(EdgeTerm, Examples) {
    EXPECT_NEAR(edge_term(2, 5), r(1, 2), 1e-15);
    EXPECT_EQ(edge_term(1, 1), 0.0);
    EXPECT_NEAR(edge_term(3, 6), r(7, 18), 1e-15);
    EXPECT_NEAR(edge_term(3, 6), 0.6236, 5e-5);
}

TEST(EdgeTerm, DomainError) {
    EXPECT_THROW(edge_term(0.5, 2), std::domain_error);
    EXPECT_THROW(edge_term(2, 0), std::domain_error);
    EXPECT_THROW(edge_term(NAN, 2), std::domain_error);
}

TEST(EdgeTerm, SymmetricAndConstantAtTwo) {
    for (double x = 1; x <= 30; x += 0.25) {
        EXPECT_DOUBLE_EQ(edge_term(x, 2), std::sqrt(0.5));
        for (double y = 1; y <= 10; y += 1.5) EXPECT_DOUBLE_EQ(edge_term(x, y), edge_term(y, x));
    }
}

TEST(EdgeTermStep, Examples) {
    for (long a : {2, 3, 10}) EXPECT_NEAR(edge_term_step(a, 2), 0.0, 1e-15);
    EXPECT_NEAR(edge_term_step(2, 1), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(edge_term_step(3, 4), r(5, 12) - r(1, 2), 1e-15);
    EXPECT_NEAR(edge_term_step(3, 4), -0.0616, 5e-5);
    EXPECT_THROW(edge_term_step(1, 3), std::domain_error);
}

TEST(EdgeTermStep, FractionFormAgreesAndSignFollowsTwoMinusX) {
    for (long a = 2; a <= 25; ++a) {
        for (double x = 1; x <= 40; x += 0.5) {
            double d = edge_term_step(a, x);
            EXPECT_NEAR(d, edge_term_step_fraction(a, x), 1e-12);
            if (x < 2) { EXPECT_GT(d, 0.0); }
            if (x > 2) { EXPECT_LT(d, 0.0); }
        }
    }
}

TEST(SplitSum, Examples) {
    EXPECT_NEAR(split_sum(8, 2), r(2, 3) + r(3, 4) + r(5, 12), 1e-15);
    EXPECT_NEAR(split_sum(8, 2), 2.3280, 5e-4);
    EXPECT_NEAR(split_sum(9, 3), std::sqrt(3.0) + r(3, 8), 1e-14);
    EXPECT_NEAR(split_sum(9, 3), 2.3444, 5e-4);
    EXPECT_NEAR(split_sum(7, 1), r(3, 4) + std::sqrt(2.0), 1e-14);
}

TEST(SplitSum, DomainErrors) {
    EXPECT_THROW(split_sum(6, 1), std::domain_error);
    EXPECT_THROW(split_sum(10, 0), std::domain_error);
    EXPECT_THROW(split_sum(10, 7), std::domain_error);
}

TEST(SplitSum, ReflectionSymmetry) {
    for (long n = 7; n <= 300; ++n)
        for (long x = 1; x <= n - 4; ++x) EXPECT_NEAR(split_sum(n, x), split_sum(n, n - 3 - x), 1e-12);
}

TEST(SplitSum, ArgmaxExamples) {
    EXPECT_EQ(split_sum_argmax(9).argmax_x, 3);
    EXPECT_EQ(split_sum_argmax(12).argmax_x, 2);
    EXPECT_EQ(split_sum_argmax(100).argmax_x, 1);
    EXPECT_EQ(split_sum_argmax(7).argmax_x, 1);
    EXPECT_EQ(split_sum_argmax(8).argmax_x, 2);
}

TEST(SplitSum, ArgmaxMatchesLongDoubleScan) {
    for (long n = 7; n <= 2000; ++n) {
        long best = 1;
        for (long x = 2; x <= n - 6; ++x)
            if (split_ref(n, x) > split_ref(n, best)) best = x;
        auto a = split_sum_argmax(n);
        ASSERT_EQ(a.argmax_x, best) << "n=" << n;
        ASSERT_TRUE(a.agrees) << "n=" << n;
        ASSERT_NEAR(a.max_value, static_cast<double>(split_ref(n, best)), 1e-12);
    }
}

TEST(SplitSum, CaseTags) {
    EXPECT_EQ(split_case(7), SplitCase::N7);
    EXPECT_EQ(split_case(10), SplitCase::N10to15);
    EXPECT_EQ(split_case(15), SplitCase::N10to15);
    EXPECT_EQ(split_case(16), SplitCase::N16plus);
    EXPECT_STREQ(to_string(SplitCase::N9), "n9");
}

TEST(SplitSum, GapNegativeFor10To15) {
    const double stated[] = {-0.0040, -0.0034, -0.0034, -0.0038, -0.0043, -0.0049};
    for (long n = 10; n <= 15; ++n) {
        double gap = split_sum_gap(n);
        EXPECT_LT(gap, 0.0);
        EXPECT_NEAR(gap, stated[n - 10], 5e-4);
        EXPECT_NEAR(gap, split_sum(n, 2) - std::sqrt(2.0) - r(n - 2, n - 1), 1e-12);
    }
}

TEST(SrtUpperBound, Examples) {
    EXPECT_NEAR(s_rt_upper_bound(7), 2 * r(5, 6) + 6 * r(1, 2), 1e-12);
    EXPECT_NEAR(s_rt_upper_bound(7), 6.0687, 5e-4);
    EXPECT_NEAR(s_rt_upper_bound(10), 5 * r(8, 9) + 6 * r(1, 2), 1e-12);
    EXPECT_NEAR(s_rt_upper_bound(10), 8.9568, 5e-4);
}

TEST(S33ClosedForm, Examples) {
    EXPECT_NEAR(s33_closed_form(7, 1, 1), std::sqrt(3.0) + 2 * std::sqrt(2.0) + 2 * r(5, 6), 1e-12);
    EXPECT_NEAR(s33_closed_form(7, 1, 1), 6.3862, 5e-4);
    EXPECT_NEAR(s33_closed_form(9, 2, 2), 2 * r(2, 3) + 2 * r(6, 15) + 2 * r(4, 5) + 4 * r(7, 8), 1e-12);
    EXPECT_NEAR(s33_closed_form(9, 2, 2), 8.4284, 5e-4);
    EXPECT_NEAR(s33_closed_form(8, 2, 1), 7.4141, 5e-4);
    EXPECT_THROW(s33_closed_form(7, 0, 1), std::domain_error);
    EXPECT_THROW(s33_closed_form(7, 2, 1), std::domain_error);
}

TEST(S33ClosedForm, MatchesGraph) {
    for (long n = 7; n <= 30; ++n)
        for (long m1 = 1; m1 + 1 <= n - 5; ++m1)
            for (long n1 = 1; m1 + n1 <= n - 5; ++n1) {
                auto g = make_family(s33(m1, n1, n - 5 - m1 - n1));
                ASSERT_EQ(g.order(), static_cast<std::size_t>(n));
                ASSERT_NEAR(s33_closed_form(n, m1, n1), abc_gg_value(g), 1e-9);
            }
}

TEST(SrtExtremal, Examples) {
    auto six = s_rt_extremal(6);
    EXPECT_NEAR(six.value, 4.8572, 5e-4);
    EXPECT_EQ(family_label(six.family), family_label(s33(1, 0, 0)));
    EXPECT_NEAR(s_rt_extremal(16).value, 2 * (std::sqrt(2.0) + r(12, 13)) + 11 * r(14, 15), 1e-12);
    EXPECT_NEAR(s_rt_extremal(12).value, 2 * (r(2, 3) + r(7, 8) + r(9, 24)) + 7 * r(10, 11), 1e-12);
    for (long n = 6; n <= 40; ++n) {
        auto s = s_rt_extremal(n);
        auto g = make_family(s.family);
        EXPECT_EQ(g.order(), static_cast<std::size_t>(n));
        EXPECT_NEAR(s.value, abc_gg_value(g), 1e-9) << n;
    }
    EXPECT_THROW(s_rt_extremal(5), std::domain_error);
}

TEST(BicyclicBound, Examples) {
    EXPECT_NEAR(bicyclic_max_bound(7).value, 6.8077, 5e-4);
    EXPECT_NEAR(bicyclic_max_bound(9).value, 8.8558, 5e-4);
    EXPECT_NEAR(bicyclic_max_bound(4).value, 2 * std::sqrt(2.0), 1e-12);
    EXPECT_THROW(bicyclic_max_bound(3), std::domain_error);
}

TEST(BicyclicBound, MatchesGraphAndQuadClosedForm) {
    for (long n = 4; n <= 40; ++n) {
        auto b = bicyclic_max_bound(n);
        double direct = abc_gg_value(make_family(b.family));
        EXPECT_NEAR(b.value, direct, 1e-9) << n;
        if (n >= 5) { EXPECT_NEAR(b_quad_closed_form(n - 3, 1), direct, 1e-9) << n; }
    }
}
