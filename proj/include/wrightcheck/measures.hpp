#pragma once

#include "wrightcheck/differences.hpp"
#include "wrightcheck/errors.hpp"
#include "wrightcheck/function.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/measure_expr.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrightcheck {

/// nabla_{h1..hk} mu, each step nu -> nu - tau_h nu.
inline MeasureExpr nabla(MeasureExpr mu, const IncrementList& hs) {
    for (const auto& h : hs.items()) mu = mu - MeasureExpr::shift(mu, h);
    return mu;
}

/// J_{h1} J_{h2} ... J_{hk} nu.
inline MeasureExpr j_op(MeasureExpr nu, const IncrementList& hs) {
    const auto items = hs.items();
    for (std::size_t i = items.size(); i-- > 0;) nu = MeasureExpr::j_closure(std::move(nu), items[i]);
    return nu;
}

inline MeasureExpr shift(MeasureExpr nu, const Point& h) { return MeasureExpr::shift(std::move(nu), h); }

namespace detail {

inline void require_distinct_positive(const std::vector<Symbol>& hs) {
    if (hs.empty()) throw std::invalid_argument("need at least one basis symbol");
    std::set<Symbol> seen;
    for (const auto& s : hs) {
        if (!s.positive) throw InvalidIncrement("symbol '" + s.name + "' is not declared positive");
        if (!seen.insert(s).second) throw std::invalid_argument("symbol '" + s.name + "' repeated");
    }
}

inline IncrementList as_increments(const std::vector<Symbol>& hs) {
    std::vector<Point> pts;
    pts.reserve(hs.size());
    for (const auto& s : hs) pts.emplace_back(s);
    return IncrementList(std::move(pts));
}

}  // namespace detail

/// mu_i = J_{h1..h(n+1)} delta_{h_i}, with 1-based i.
inline MeasureExpr build_mu_i(std::size_t i, const std::vector<Symbol>& hs) {
    detail::require_distinct_positive(hs);
    if (i < 1 || i > hs.size()) throw std::out_of_range("mu index " + std::to_string(i) + " out of range");
    return j_op(MeasureExpr::dirac(Point(hs[i - 1])), detail::as_increments(hs));
}

/// mu = mu_2 + ... + mu_(n+1) - mu_1.
inline MeasureExpr build_mu(const std::vector<Symbol>& hs) {
    detail::require_distinct_positive(hs);
    std::vector<MeasureExpr> terms;
    terms.push_back(MeasureExpr::scale(-1, build_mu_i(1, hs)));
    for (std::size_t i = 2; i <= hs.size(); ++i) terms.push_back(build_mu_i(i, hs));
    return MeasureExpr::sum(std::move(terms));
}

/// Bit j of mask selects h_(j+1).
inline Point lattice_corner(const std::vector<Symbol>& hs, unsigned long mask) {
    std::vector<Point::Entry> entries;
    for (std::size_t j = 0; j < hs.size(); ++j)
        if (mask & (1ul << j)) entries.emplace_back(hs[j], Rational(1));
    return Point::from_entries(std::move(entries));
}

struct ASets {
    /// a_i[i] lists A_(i+1): h_(i+1) plus any 0/1 combination of the others.
    std::vector<std::vector<Point>> a_i;
    /// Every nonzero 0/1 combination, in increasing mask order.
    std::vector<Point> a_union;

    bool in_a_i(std::size_t i, const Point& x) const {
        for (const auto& p : a_i.at(i))
            if (p == x) return true;
        return false;
    }
};

inline ASets build_a_sets(const std::vector<Symbol>& hs) {
    detail::require_distinct_positive(hs);
    if (hs.size() >= sizeof(unsigned long) * 8) throw std::invalid_argument("too many symbols");
    const unsigned long full = 1ul << hs.size();
    ASets sets;
    sets.a_i.resize(hs.size());
    for (unsigned long mask = 1; mask < full; ++mask) {
        Point p = lattice_corner(hs, mask);
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (mask & (1ul << i)) sets.a_i[i].push_back(p);
        sets.a_union.push_back(std::move(p));
    }
    return sets;
}

inline PointFunction measure_mass_function(MeasureExpr mu, MassCache* cache = nullptr) {
    return PointFunction::measure_mass(std::move(mu), cache);
}

}  // namespace wrightcheck
