#pragma once

// Points in the rational span of an abstract Hamel basis, and additive
// functionals given by their values on basis symbols.
//
// Basis symbols are opaque tokens. They are never tied to real numbers, so
// Q-linear independence holds by construction and two points are equal iff
// their coordinate lists are identical.

#include "wrightcheck/errors.hpp"
#include "wrightcheck/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wrightcheck {

/// A basis element. Identity and ordering are by name; `positive` is a declared
/// attribute, not something computed.
struct Symbol {
    std::string name;
    bool positive = false;

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.name == b.name; }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        return a.name <=> b.name;
    }
};

inline Symbol positive_symbol(std::string name) { return Symbol{std::move(name), true}; }

/// Registry of declared symbols. Names are unique.
class Basis {
public:
    const Symbol& declare(const std::string& name, bool positive) {
        auto [it, inserted] = symbols_.try_emplace(name, Symbol{name, positive});
        if (!inserted && it->second.positive != positive)
            throw Error("symbol '" + name + "' redeclared with a different sign");
        return it->second;
    }

    bool contains(const std::string& name) const { return symbols_.count(name) != 0; }

    const Symbol& at(const std::string& name) const {
        auto it = symbols_.find(name);
        if (it == symbols_.end()) throw UnknownSymbol("unknown symbol '" + name + "'");
        return it->second;
    }

    std::vector<Symbol> symbols() const {
        std::vector<Symbol> out;
        out.reserve(symbols_.size());
        for (const auto& [_, s] : symbols_) out.push_back(s);
        return out;
    }

private:
    std::map<std::string, Symbol> symbols_;
};

/// Finitely supported Symbol -> Rational map, kept sorted by symbol with no
/// zero entries.
class Point {
public:
    using Entry = std::pair<Symbol, Rational>;

    Point() = default;

    /// The point 1*s.
    explicit Point(const Symbol& s) { coords_.emplace_back(s, Rational(1)); }

    static Point from_entries(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Point p;
        for (auto& [sym, value] : entries) {
            if (!p.coords_.empty() && p.coords_.back().first == sym)
                p.coords_.back().second += value;
            else
                p.coords_.emplace_back(std::move(sym), std::move(value));
        }
        p.drop_zeros();
        return p;
    }

    const std::vector<Entry>& entries() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }
    std::size_t support_size() const noexcept { return coords_.size(); }

    Rational coordinate(const Symbol& s) const {
        auto it = std::lower_bound(coords_.begin(), coords_.end(), s,
                                   [](const Entry& e, const Symbol& key) { return e.first < key; });
        if (it != coords_.end() && it->first == s) return it->second;
        return 0;
    }

    Point& operator+=(const Point& other) { return *this = combine(*this, 1, other); }
    Point& operator-=(const Point& other) { return *this = combine(*this, -1, other); }

    friend Point operator+(const Point& a, const Point& b) { return combine(a, 1, b); }
    friend Point operator-(const Point& a, const Point& b) { return combine(a, -1, b); }
    friend Point operator-(const Point& a) { return Rational(-1) * a; }

    friend Point operator*(const Rational& c, const Point& p) {
        Point out;
        if (c == 0) return out;
        out.coords_.reserve(p.coords_.size());
        for (const auto& [sym, value] : p.coords_) out.coords_.emplace_back(sym, c * value);
        return out;
    }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.coords_.size() != b.coords_.size()) return false;
        for (std::size_t i = 0; i < a.coords_.size(); ++i) {
            if (a.coords_[i].first != b.coords_[i].first) return false;
            if (a.coords_[i].second != b.coords_[i].second) return false;
        }
        return true;
    }

    /// Lexicographic order on the canonical entry lists; used for containers.
    friend bool operator<(const Point& a, const Point& b) {
        const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& [sa, va] = a.coords_[i];
            const auto& [sb, vb] = b.coords_[i];
            if (sa != sb) return sa < sb;
            if (va != vb) return va < vb;
        }
        return a.coords_.size() < b.coords_.size();
    }

private:
    // a + c*b by a sorted merge.
    static Point combine(const Point& a, const Rational& c, const Point& b) {
        Point out;
        out.coords_.reserve(a.coords_.size() + b.coords_.size());
        auto ia = a.coords_.begin();
        auto ib = b.coords_.begin();
        while (ia != a.coords_.end() || ib != b.coords_.end()) {
            if (ib == b.coords_.end() || (ia != a.coords_.end() && ia->first < ib->first)) {
                out.coords_.push_back(*ia++);
            } else if (ia == a.coords_.end() || ib->first < ia->first) {
                out.coords_.emplace_back(ib->first, c * ib->second);
                ++ib;
            } else {
                Rational v = ia->second + c * ib->second;
                if (v != 0) out.coords_.emplace_back(ia->first, std::move(v));
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    void drop_zeros() {
        coords_.erase(std::remove_if(coords_.begin(), coords_.end(),
                                     [](const Entry& e) { return e.second == 0; }),
                      coords_.end());
    }

    std::vector<Entry> coords_;
};

/// Canonical linear combination sum(c_i * p_i).
inline Point point_combine(const std::vector<std::pair<Rational, Point>>& terms) {
    std::vector<Point::Entry> entries;
    for (const auto& [c, p] : terms) {
        if (c == 0) continue;
        for (const auto& [sym, value] : p.entries()) entries.emplace_back(sym, c * value);
    }
    return Point::from_entries(std::move(entries));
}

inline Rational coordinate(const Point& x, const Symbol& b) { return x.coordinate(b); }

/// Human-readable form in symbol order, e.g. "h1 + h2", "-12*cbrt2 + 9*cbrt4 + 4*one", "0".
inline std::string to_string(const Point& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [sym, value] : p.entries()) {
        Rational mag = value < 0 ? Rational(-value) : value;
        if (first) {
            if (value < 0) out += "-";
        } else {
            out += value < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += sym.name;
        first = false;
    }
    return out;
}

/// A Q-linear functional determined by its values on basis symbols; symbols
/// without an assigned value map to 0.
class AdditiveFunctional {
public:
    AdditiveFunctional() = default;

    AdditiveFunctional(std::initializer_list<std::pair<Symbol, Rational>> values) {
        for (const auto& [s, v] : values) set(s, v);
    }

    AdditiveFunctional& set(const Symbol& s, Rational value) {
        values_[s] = std::move(value);
        return *this;
    }

    Rational value_at(const Symbol& s) const {
        auto it = values_.find(s);
        return it == values_.end() ? Rational(0) : it->second;
    }

    const std::map<Symbol, Rational>& values() const noexcept { return values_; }

    Rational operator()(const Point& x) const {
        Rational sum = 0;
        for (const auto& [sym, c] : x.entries()) {
            auto it = values_.find(sym);
            if (it != values_.end()) sum += c * it->second;
        }
        return sum;
    }

private:
    std::map<Symbol, Rational> values_;
};

inline Rational additive_eval(const AdditiveFunctional& a, const Point& x) { return a(x); }

/// +1 when p is a nonzero nonnegative combination of positive symbols, -1 when
/// -p is, 0 for the zero point. Anything else has no decidable sign.
inline int point_sign(const Point& p) {
    if (p.is_zero()) return 0;
    bool all_nonneg = true;
    bool all_nonpos = true;
    for (const auto& [sym, value] : p.entries()) {
        if (!sym.positive)
            throw SignUndecidable("sign of " + to_string(p) + " depends on undeclared symbol '" +
                                  sym.name + "'");
        all_nonneg = all_nonneg && value > 0;
        all_nonpos = all_nonpos && value < 0;
    }
    if (all_nonneg) return 1;
    if (all_nonpos) return -1;
    throw SignUndecidable("sign of mixed combination " + to_string(p) + " is undecidable");
}

inline bool is_positive_increment(const Point& p) {
    try {
        return point_sign(p) > 0;
    } catch (const SignUndecidable&) {
        return false;
    }
}

inline const Point& require_positive_increment(const Point& p) {
    if (!is_positive_increment(p))
        throw InvalidIncrement("increment " + to_string(p) +
                               " is not a nonzero nonnegative combination of positive symbols");
    return p;
}

}  // namespace wrightcheck
