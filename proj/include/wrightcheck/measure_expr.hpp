#pragma once

// Atomic signed measures on the lattice spanned by positive basis symbols,
// kept as immutable expression trees and evaluated one atom at a time.
//
//   Dirac(p)          unit atom at p
//   Shift(nu, h)      tau_h nu, i.e. nu moved by +h
//   Sum(nu_1..nu_k)
//   Scale(c, nu)
//   JClosure(nu, h)   sum over k >= 0 of tau_h^k nu
//
// Every node carries a per-symbol lower bound on the coordinates of its
// support (symbols absent from the bound have bound 0). A closure atom query
// at x only needs k <= (x_b - floor_b) / h_b for any symbol b with h_b > 0,
// which makes every query a finite sum.

#include "wrightcheck/errors.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wrightcheck {

class MeasureExpr;
class MassCache;

inline Rational atom_mass(const MeasureExpr& mu, const Point& x, MassCache* cache = nullptr);

class MeasureExpr {
public:
    struct Dirac;
    struct Shift;
    struct Sum;
    struct Scale;
    struct JClosure;
    using Variant = std::variant<Dirac, Shift, Sum, Scale, JClosure>;

    static MeasureExpr dirac(Point p);
    static MeasureExpr shift(MeasureExpr inner, Point h);
    static MeasureExpr sum(std::vector<MeasureExpr> terms);
    static MeasureExpr scale(Rational c, MeasureExpr inner);
    static MeasureExpr j_closure(MeasureExpr inner, Point h);
    static MeasureExpr zero() { return sum({}); }

    const Variant& node() const noexcept;
    const Point& support_floor() const noexcept;

    /// Stable identity of the underlying node (used by MassCache).
    const void* id() const noexcept { return node_.get(); }

    friend MeasureExpr operator+(MeasureExpr a, MeasureExpr b) {
        return sum({std::move(a), std::move(b)});
    }
    friend MeasureExpr operator-(MeasureExpr a, MeasureExpr b) {
        return sum({std::move(a), scale(-1, std::move(b))});
    }
    friend MeasureExpr operator*(Rational c, MeasureExpr m) { return scale(std::move(c), std::move(m)); }

private:
    struct Node;
    MeasureExpr(Variant v, Point floor);

    std::shared_ptr<const Node> node_;
};

struct MeasureExpr::Dirac {
    Point at;
};
struct MeasureExpr::Shift {
    MeasureExpr inner;
    Point by;
};
struct MeasureExpr::Sum {
    std::vector<MeasureExpr> terms;
};
struct MeasureExpr::Scale {
    Rational factor;
    MeasureExpr inner;
};
struct MeasureExpr::JClosure {
    MeasureExpr inner;
    Point step;
};

struct MeasureExpr::Node {
    Variant v;
    Point floor;
};

inline MeasureExpr::MeasureExpr(Variant v, Point floor)
    : node_(std::make_shared<const Node>(Node{std::move(v), std::move(floor)})) {}

inline const MeasureExpr::Variant& MeasureExpr::node() const noexcept { return node_->v; }
inline const Point& MeasureExpr::support_floor() const noexcept { return node_->floor; }

inline MeasureExpr MeasureExpr::dirac(Point p) {
    Point floor = p;
    return MeasureExpr(Dirac{std::move(p)}, std::move(floor));
}

inline MeasureExpr MeasureExpr::shift(MeasureExpr inner, Point h) {
    require_positive_increment(h);
    Point floor = inner.support_floor() + h;
    return MeasureExpr(Shift{std::move(inner), std::move(h)}, std::move(floor));
}

inline MeasureExpr MeasureExpr::sum(std::vector<MeasureExpr> terms) {
    Point floor;
    if (!terms.empty()) {
        // componentwise minimum, absent symbols counting as 0
        std::map<Symbol, Rational> lows;
        for (const auto& t : terms)
            for (const auto& [sym, _] : t.support_floor().entries()) lows.emplace(sym, 0);
        for (auto& [sym, low] : lows) {
            bool first = true;
            for (const auto& t : terms) {
                Rational c = t.support_floor().coordinate(sym);
                if (first || c < low) low = c;
                first = false;
            }
        }
        floor = Point::from_entries({lows.begin(), lows.end()});
    }
    return MeasureExpr(Sum{std::move(terms)}, std::move(floor));
}

inline MeasureExpr MeasureExpr::scale(Rational c, MeasureExpr inner) {
    Point floor = inner.support_floor();
    return MeasureExpr(Scale{std::move(c), std::move(inner)}, std::move(floor));
}

inline MeasureExpr MeasureExpr::j_closure(MeasureExpr inner, Point h) {
    if (h.is_zero()) throw NonTerminatingJ("closure increment is zero");
    require_positive_increment(h);
    Point floor = inner.support_floor();
    return MeasureExpr(JClosure{std::move(inner), std::move(h)}, std::move(floor));
}

/// Memo table of atom masses keyed by (node, point). Results are identical
/// with or without it; safe for concurrent use.
class MassCache {
public:
    std::optional<Rational> find(const void* node, const Point& x) const {
        std::lock_guard lock(mutex_);
        auto it = table_.find(Key{node, x});
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void store(const void* node, const Point& x, const Rational& value) {
        std::lock_guard lock(mutex_);
        table_.emplace(Key{node, x}, value);
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

private:
    struct Key {
        const void* node;
        Point x;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.node != b.node) return std::less<const void*>{}(a.node, b.node);
            return a.x < b.x;
        }
    };

    mutable std::mutex mutex_;
    std::map<Key, Rational> table_;
};

namespace detail {

// True when some coordinate of x lies strictly below the support floor.
inline bool below_floor(const Point& x, const Point& floor) {
    const auto& xs = x.entries();
    const auto& fs = floor.entries();
    auto ix = xs.begin();
    auto jf = fs.begin();
    while (ix != xs.end() || jf != fs.end()) {
        if (jf == fs.end() || (ix != xs.end() && ix->first < jf->first)) {
            if (ix->second < 0) return true;  // floor 0 there
            ++ix;
        } else if (ix == xs.end() || jf->first < ix->first) {
            if (jf->second > 0) return true;  // x has 0 there
            ++jf;
        } else {
            if (ix->second < jf->second) return true;
            ++ix;
            ++jf;
        }
    }
    return false;
}

// Number of closure terms that can contribute at x: the least floor((x_b - m_b) / h_b)
// over symbols with h_b > 0, plus one. Returns 0 when no term contributes.
inline Integer closure_term_count(const Point& x, const Point& inner_floor, const Point& step) {
    std::optional<Integer> best;
    for (const auto& [sym, hb] : step.entries()) {
        if (hb <= 0) continue;
        Integer k = floor((x.coordinate(sym) - inner_floor.coordinate(sym)) / hb);
        if (!best || k < *best) best = k;
    }
    if (!best) throw NonTerminatingJ("closure increment " + to_string(step) + " has no positive coordinate");
    return *best < 0 ? Integer(0) : Integer(*best + 1);
}

}  // namespace detail

/// Exact signed mass of the atom {x}.
inline Rational atom_mass(const MeasureExpr& mu, const Point& x, MassCache* cache) {
    if (detail::below_floor(x, mu.support_floor())) return 0;
    if (cache != nullptr) {
        if (auto hit = cache->find(mu.id(), x)) return *hit;
    }
    Rational result = std::visit(
        [&](const auto& n) -> Rational {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, MeasureExpr::Dirac>) {
                return x == n.at ? Rational(1) : Rational(0);
            } else if constexpr (std::is_same_v<T, MeasureExpr::Shift>) {
                return atom_mass(n.inner, x - n.by, cache);
            } else if constexpr (std::is_same_v<T, MeasureExpr::Sum>) {
                Rational s = 0;
                for (const auto& t : n.terms) s += atom_mass(t, x, cache);
                return s;
            } else if constexpr (std::is_same_v<T, MeasureExpr::Scale>) {
                if (n.factor == 0) return 0;
                return n.factor * atom_mass(n.inner, x, cache);
            } else {
                const Integer count = detail::closure_term_count(x, n.inner.support_floor(), n.step);
                Rational s = 0;
                Point y = x;
                for (Integer k = 0; k < count; ++k) {
                    s += atom_mass(n.inner, y, cache);
                    y -= n.step;
                }
                return s;
            }
        },
        mu.node());
    if (cache != nullptr) cache->store(mu.id(), x, result);
    return result;
}

}  // namespace wrightcheck
