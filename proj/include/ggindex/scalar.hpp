#pragma once

// Scalar functions behind the extremal argument: the edge term f(x, y), its
// unit step in the second argument, the hub-split sum over x and the closed
// forms of the candidate extremal graphs.

#include <cmath>
#include <stdexcept>
#include <string>

#include "families.hpp"
#include "index.hpp"

namespace ggindex {

/// f(x, y) = sqrt((x + y - 2) / (x y)) for real x, y >= 1.
inline double edge_term(double x, double y) {
    if (!(x >= 1.0) || !(y >= 1.0)) throw std::domain_error("edge_term: arguments must be >= 1");
    return std::sqrt((x + y - 2.0) / (x * y));
}

/// f(x, a) - f(x, a - 1).
inline double edge_term_step(long a, double x) {
    if (a < 2) throw std::domain_error("edge_term_step: a must be >= 2");
    return edge_term(x, static_cast<double>(a)) - edge_term(x, static_cast<double>(a - 1));
}

/// The same step rewritten as a single fraction with numerator (2 - x).
inline double edge_term_step_fraction(long a, double x) {
    if (a < 2) throw std::domain_error("edge_term_step_fraction: a must be >= 2");
    if (!(x >= 1.0)) throw std::domain_error("edge_term_step_fraction: x must be >= 1");
    const double ad = static_cast<double>(a);
    const double denom = std::sqrt(ad * (ad - 1.0) * x) *
                         (std::sqrt((ad - 1.0) * (x + ad - 2.0)) + std::sqrt(ad * (x + ad - 3.0)));
    return (2.0 - x) / denom;
}

/// Sum of the three triangle-edge terms when a hub of order n splits off x
/// pendants on one side:
///   sqrt(x/(x+1)) + sqrt((n-3-x)/(n-2-x)) + sqrt((n-3)/((x+1)(n-2-x))).
/// Accepts 1 <= x <= n-4 so that the reflection x <-> n-3-x can be checked.
inline double split_sum(long n, long x) {
    if (n < 7) throw std::domain_error("split_sum: n must be >= 7");
    if (x < 1 || x > n - 4) {
        throw std::domain_error("split_sum: x = " + std::to_string(x) + " outside [1, " +
                                std::to_string(n - 4) + "]");
    }
    return sqrt_ratio(x, x + 1) + sqrt_ratio(n - 3 - x, n - 2 - x) +
           sqrt_ratio(n - 3, (x + 1) * (n - 2 - x));
}

enum class SplitCase { N7, N8, N9, N10to15, N16plus };

inline const char* to_string(SplitCase c) {
    switch (c) {
        case SplitCase::N7: return "n7";
        case SplitCase::N8: return "n8";
        case SplitCase::N9: return "n9";
        case SplitCase::N10to15: return "n10to15";
        case SplitCase::N16plus: return "n16plus";
    }
    return "?";
}

struct SplitArgmax {
    long n = 0;
    long argmax_x = 0;
    double max_value = 0.0;
    SplitCase case_tag = SplitCase::N7;
    long expected_x = 0;  // maximizer named by the case split
    bool agrees = false;  // argmax_x == expected_x
};

inline SplitCase split_case(long n) {
    if (n == 7) return SplitCase::N7;
    if (n == 8) return SplitCase::N8;
    if (n == 9) return SplitCase::N9;
    if (n <= 15) return SplitCase::N10to15;
    return SplitCase::N16plus;
}

inline long split_case_argmax(SplitCase c) {
    switch (c) {
        case SplitCase::N7: return 1;
        case SplitCase::N8: return 2;
        case SplitCase::N9: return 3;
        case SplitCase::N10to15: return 2;
        case SplitCase::N16plus: return 1;
    }
    return 0;
}

/// Exhaustive scan of split_sum(n, x) over 1 <= x <= n-6. Ties (within
/// 1e-12) go to the smaller x.
inline SplitArgmax split_sum_argmax(long n) {
    if (n < 7) throw std::domain_error("split_sum_argmax: n must be >= 7");
    SplitArgmax r;
    r.n = n;
    r.argmax_x = 1;
    r.max_value = split_sum(n, 1);
    for (long x = 2; x <= n - 6; ++x) {
        double v = split_sum(n, x);
        if (v > r.max_value + 1e-12) {
            r.max_value = v;
            r.argmax_x = x;
        }
    }
    r.case_tag = split_case(n);
    r.expected_x = split_case_argmax(r.case_tag);
    r.agrees = r.argmax_x == r.expected_x;
    return r;
}

/// Upper bound (n-5) sqrt((n-2)/(n-1)) + 6 sqrt(1/2) for shared-vertex
/// bicyclic graphs outside the S_n^{3,3}(m1, n1, m0) shapes.
inline double s_rt_upper_bound(long n) {
    if (n < 7) throw std::domain_error("s_rt_upper_bound: n must be >= 7");
    return static_cast<double>(n - 5) * sqrt_ratio(n - 2, n - 1) + 6.0 * sqrt_ratio(1, 2);
}

/// split_sum(n, 2) - sqrt(2) - sqrt((n-2)/(n-1)) for 10 <= n <= 15.
inline double split_sum_gap(long n) {
    if (n < 10 || n > 15) throw std::domain_error("split_sum_gap: n must be in [10, 15]");
    return sqrt_ratio(2, 3) + sqrt_ratio(n - 5, n - 4) + sqrt_ratio(n - 3, 3 * (n - 4)) -
           std::sqrt(2.0) - sqrt_ratio(n - 2, n - 1);
}

/// Index of S_n^{3,3}(m1, n1, m0) with m1, n1 >= 1 and m0 = n - m1 - n1 - 5.
inline double s33_closed_form(long n, long m1, long n1) {
    if (m1 < 1 || n1 < 1 || m1 + n1 > n - 5) {
        throw std::domain_error("s33_closed_form: need m1, n1 >= 1 and m1 + n1 <= n - 5");
    }
    auto triangle = [n](long k) {
        return sqrt_ratio(k, k + 1) + sqrt_ratio(n - k - 3, n - k - 2) +
               sqrt_ratio(n - 3, (k + 1) * (n - k - 2));
    };
    return triangle(m1) + triangle(n1) + static_cast<double>(n - 5) * sqrt_ratio(n - 2, n - 1);
}

struct BoundValue {
    long n = 0;
    double value = 0.0;
    FamilySpec family;
};

/// Largest index over bicyclic graphs whose two cycles share one vertex,
/// together with the graph attaining it.
inline BoundValue s_rt_extremal(long n) {
    if (n < 6) throw std::domain_error("s_rt_extremal: n must be >= 6");
    if (n == 6) {
        double v = std::sqrt(3.0) + std::sqrt(2.0) + sqrt_ratio(2, 3) + sqrt_ratio(4, 5);
        return {n, v, s33(1, 0, 0)};
    }
    long m1 = 1, n1 = 1;
    if (n == 8) m1 = 2;
    else if (n >= 9 && n <= 15) m1 = n1 = 2;
    auto m0 = static_cast<std::size_t>(n - m1 - n1 - 5);
    return {n, s33_closed_form(n, m1, n1),
            s33(static_cast<std::size_t>(m1), static_cast<std::size_t>(n1), m0)};
}

/// Maximum index over connected bicyclic graphs of order n, attained by
/// B_n(n-3, 1, 1, 1).
inline BoundValue bicyclic_max_bound(long n) {
    if (n < 4) throw std::domain_error("bicyclic_max_bound: n must be >= 4");
    double v = 2.0 * sqrt_ratio(n - 3, n - 2) + std::sqrt(2.0) + sqrt_ratio(n - 4, n - 3) +
               static_cast<double>(n - 4) * sqrt_ratio(n - 2, n - 1);
    return {n, v, b_quad(static_cast<std::size_t>(n - 3), 1, 1, 1)};
}

}  // namespace ggindex
