#pragma once

// Mixed forward and backward differences of point functions and the
// Jensen / Wright convexity probes built on them.
//
// forward_diff evaluates the operator composition literally,
//   D_{h1..hk} f = D_{h1..h(k-1)} (D_{hk} f),
// while forward_diff_closed sums the alternating subset expansion
//   sum over S of (-1)^(k-|S|) f(x + sum_{i in S} h_i).
// The two are kept independent so each can check the other.

#include "wrightcheck/errors.hpp"
#include "wrightcheck/function.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/rational.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrightcheck {

/// Nonempty list of positive increments.
class IncrementList {
public:
    IncrementList(std::vector<Point> items) : items_(std::move(items)) {
        if (items_.empty()) throw InvalidIncrement("increment list is empty");
        for (const auto& h : items_) require_positive_increment(h);
    }
    IncrementList(std::initializer_list<Point> items) : IncrementList(std::vector<Point>(items)) {}

    /// For increments whose positivity is known from outside the symbolic
    /// model (e.g. a mixed combination like cbrt2 - one). Only nonzero-ness is
    /// checked. Such lists must not be used to build measure closures.
    static IncrementList assume_positive(std::vector<Point> items) {
        IncrementList out;
        if (items.empty()) throw InvalidIncrement("increment list is empty");
        for (const auto& h : items)
            if (h.is_zero()) throw InvalidIncrement("zero increment");
        out.items_ = std::move(items);
        return out;
    }

    static IncrementList repeated(const Point& h, std::size_t m) {
        if (m == 0) throw InvalidIncrement("difference order must be positive");
        return IncrementList(std::vector<Point>(m, h));
    }

    std::span<const Point> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    const Point& operator[](std::size_t i) const { return items_[i]; }

    Point total() const {
        Point s;
        for (const auto& h : items_) s += h;
        return s;
    }

private:
    IncrementList() = default;
    std::vector<Point> items_;
};

using PointEvaluator = std::function<Rational(const Point&)>;

namespace detail {

inline Rational forward_composed(const PointEvaluator& f, const Point& x, std::span<const Point> hs) {
    if (hs.empty()) return f(x);
    const Point& last = hs.back();
    PointEvaluator step = [&f, &last](const Point& y) { return f(y + last) - f(y); };
    return forward_composed(step, x, hs.first(hs.size() - 1));
}

inline Rational backward_composed(const PointEvaluator& f, const Point& x, std::span<const Point> hs) {
    if (hs.empty()) return f(x);
    const Point& last = hs.back();
    PointEvaluator step = [&f, &last](const Point& y) { return f(y) - f(y - last); };
    return backward_composed(step, x, hs.first(hs.size() - 1));
}

// Advances a sorted k-combination of {0..n-1} to its lexicographic successor.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Mixed forward difference of any callable, by operator composition.
inline Rational forward_difference(const PointEvaluator& f, const Point& x, const IncrementList& hs) {
    return detail::forward_composed(f, x, hs.items());
}

inline Rational backward_difference(const PointEvaluator& f, const Point& x, const IncrementList& hs) {
    return detail::backward_composed(f, x, hs.items());
}

inline Rational forward_diff(const PointFunction& f, const Point& x, const IncrementList& hs) {
    return forward_difference([&f](const Point& y) { return f(y); }, x, hs);
}

inline Rational backward_diff(const PointFunction& f, const Point& x, const IncrementList& hs) {
    return backward_difference([&f](const Point& y) { return f(y); }, x, hs);
}

/// One term of the subset expansion: f at x + sum of the selected increments.
struct ExpansionRow {
    std::vector<std::size_t> subset;  // 0-based, increasing
    Point point;
    int sign;  // (-1)^(k - |subset|)
};

/// All 2^k terms, largest subsets first, lexicographic within a size.
inline std::vector<ExpansionRow> subset_expansion(const Point& x, const IncrementList& hs) {
    const std::size_t k = hs.size();
    std::vector<ExpansionRow> rows;
    rows.reserve(std::size_t{1} << k);
    for (std::size_t size = k + 1; size-- > 0;) {
        std::vector<std::size_t> c(size);
        for (std::size_t i = 0; i < size; ++i) c[i] = i;
        const int sign = ((k - size) % 2 == 0) ? 1 : -1;
        do {
            Point p = x;
            for (auto i : c) p += hs[i];
            rows.push_back({c, std::move(p), sign});
        } while (size > 0 && detail::next_combination(c, k));
    }
    return rows;
}

inline Rational forward_difference_closed(const PointEvaluator& f, const Point& x, const IncrementList& hs) {
    Rational s = 0;
    for (const auto& row : subset_expansion(x, hs)) {
        if (row.sign > 0)
            s += f(row.point);
        else
            s -= f(row.point);
    }
    return s;
}

inline Rational forward_diff_closed(const PointFunction& f, const Point& x, const IncrementList& hs) {
    return forward_difference_closed([&f](const Point& y) { return f(y); }, x, hs);
}

/// D_h^m f(x).
inline Rational equal_increment_diff(const PointFunction& f, const Point& x, const Point& h, unsigned m) {
    return forward_diff(f, x, IncrementList::repeated(h, m));
}

/// Full evaluation table of a forward difference, grouped by subset size.
struct DifferenceTable {
    struct Row {
        ExpansionRow term;
        Rational value;
    };
    std::vector<Row> rows;
    /// Signed contribution of each subset size, largest size first.
    std::vector<Rational> group_sums;
    Rational value;

    /// "8 - 30 + 24 - 3 + 0 = -1"
    std::string grouped_sum_text() const {
        std::string out;
        for (std::size_t i = 0; i < group_sums.size(); ++i) {
            const Rational& g = group_sums[i];
            if (i == 0) {
                out += to_string(g);
            } else {
                out += g < 0 ? " - " : " + ";
                out += to_string(g < 0 ? Rational(-g) : g);
            }
        }
        return out + " = " + to_string(value);
    }
};

inline DifferenceTable difference_table(const PointFunction& f, const Point& x, const IncrementList& hs) {
    DifferenceTable t;
    t.group_sums.assign(hs.size() + 1, Rational(0));
    for (auto& term : subset_expansion(x, hs)) {
        Rational v = f(term.point);
        const std::size_t group = hs.size() - term.subset.size();
        if (term.sign > 0)
            t.group_sums[group] += v;
        else
            t.group_sums[group] -= v;
        t.rows.push_back({std::move(term), std::move(v)});
    }
    t.value = 0;
    for (const auto& g : t.group_sums) t.value += g;
    return t;
}

struct Violation {
    std::size_t sample;
    Point x;
    std::vector<Point> increments;
    Rational value;
    DifferenceTable table;
};

struct SkippedSample {
    std::size_t sample;
    std::string reason;
};

struct ProbeResult {
    std::vector<Violation> violations;
    std::vector<SkippedSample> skipped;
    std::size_t checked = 0;
};

struct JensenSample {
    Point x;
    Point h;
};

struct WrightSample {
    Point x;
    IncrementList hs;
};

/// Samples with D_h^(n+1) f(x) < 0, in input order.
inline ProbeResult jensen_convexity_probe(const PointFunction& f, unsigned n,
                                          const std::vector<JensenSample>& samples) {
    ProbeResult result;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto hs = IncrementList::repeated(samples[i].h, n + 1);
        try {
            Rational v = forward_diff(f, samples[i].x, hs);
            ++result.checked;
            if (v < 0) {
                result.violations.push_back({i, samples[i].x, {hs.items().begin(), hs.items().end()}, v,
                                             difference_table(f, samples[i].x, hs)});
            }
        } catch (const UntabulatedPoint& e) {
            result.skipped.push_back({i, e.what()});
        }
    }
    return result;
}

/// Samples with D_{h1..h(n+1)} f(x) < 0, in input order.
inline ProbeResult wright_convexity_probe(const PointFunction& f, unsigned n,
                                          const std::vector<WrightSample>& samples) {
    ProbeResult result;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.hs.size() != n + 1)
            throw std::invalid_argument("wright probe sample " + std::to_string(i) + " has " +
                                        std::to_string(s.hs.size()) + " increments, expected " +
                                        std::to_string(n + 1));
        try {
            Rational v = forward_diff(f, s.x, s.hs);
            ++result.checked;
            if (v < 0) {
                result.violations.push_back(
                    {i, s.x, {s.hs.items().begin(), s.hs.items().end()}, v, difference_table(f, s.x, s.hs)});
            }
        } catch (const UntabulatedPoint& e) {
            result.skipped.push_back({i, e.what()});
        }
    }
    return result;
}

}  // namespace wrightcheck
