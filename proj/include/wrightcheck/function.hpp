#pragma once

#include "wrightcheck/errors.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/measure_expr.hpp"
#include "wrightcheck/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wrightcheck {

/// t -> (max(t,0))^n, |t|, t^n or t.
class ScalarKernel {
public:
    enum class Kind { PositivePartPower, AbsoluteValue, Power, Identity };

    static ScalarKernel positive_part_power(unsigned n) {
        if (n == 0) throw std::invalid_argument("positive-part power needs n >= 1");
        return ScalarKernel(Kind::PositivePartPower, n);
    }
    static ScalarKernel absolute_value() { return ScalarKernel(Kind::AbsoluteValue, 1); }
    static ScalarKernel power(unsigned n) { return ScalarKernel(Kind::Power, n); }
    static ScalarKernel identity() { return ScalarKernel(Kind::Identity, 1); }

    Kind kind() const noexcept { return kind_; }
    unsigned exponent() const noexcept { return exponent_; }

    Rational operator()(const Rational& t) const {
        switch (kind_) {
            case Kind::PositivePartPower:
                return t > 0 ? power_of(t) : Rational(0);
            case Kind::AbsoluteValue:
                return t < 0 ? Rational(-t) : t;
            case Kind::Power:
                return power_of(t);
            case Kind::Identity:
                return t;
        }
        return t;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::PositivePartPower:
                return "(t)_+^" + std::to_string(exponent_);
            case Kind::AbsoluteValue:
                return "|t|";
            case Kind::Power:
                return "t^" + std::to_string(exponent_);
            case Kind::Identity:
                return "t";
        }
        return "?";
    }

private:
    ScalarKernel(Kind k, unsigned n) : kind_(k), exponent_(n) {}
    Rational power_of(const Rational& t) const { return wrightcheck::power(t, exponent_); }

    Kind kind_;
    unsigned exponent_;
};

/// An exactly evaluatable function of a Point.
///
/// Composite(kernel, a)   x -> kernel(a(x))
/// Tabulated(table)       defined only on the tabulated points
/// MeasureMass(mu)        x -> mu({x})
/// Scaled(c, f)           x -> c * f(x)
/// SumOf(f_1..f_k)        pointwise sum
/// PointwisePower(f, n)   x -> f(x)^n
/// KernelOf(kernel, f)    x -> kernel(f(x)), e.g. |Q| for a tabulated Q
class PointFunction {
public:
    struct Composite {
        ScalarKernel kernel;
        AdditiveFunctional additive;
    };
    struct Tabulated {
        std::map<Point, Rational> table;
    };
    struct MeasureMass {
        MeasureExpr measure;
        MassCache* cache = nullptr;
    };
    struct Scaled;
    struct SumOf;
    struct PointwisePower;
    struct KernelOf;
    using Variant =
        std::variant<Composite, Tabulated, MeasureMass, Scaled, SumOf, PointwisePower, KernelOf>;

    static PointFunction composite(ScalarKernel k, AdditiveFunctional a);
    static PointFunction tabulated(std::map<Point, Rational> table);
    static PointFunction measure_mass(MeasureExpr mu, MassCache* cache = nullptr);
    static PointFunction scaled(Rational c, PointFunction inner);
    static PointFunction sum_of(std::vector<PointFunction> terms);
    static PointFunction pointwise_power(PointFunction inner, unsigned n);
    static PointFunction kernel_of(ScalarKernel k, PointFunction inner);

    /// x -> c for every x.
    static PointFunction constant(Rational c) {
        return scaled(std::move(c), composite(ScalarKernel::power(0), AdditiveFunctional{}));
    }

    const Variant& node() const noexcept;
    Rational operator()(const Point& x) const;

private:
    explicit PointFunction(Variant v);
    std::shared_ptr<const Variant> node_;
};

struct PointFunction::Scaled {
    Rational factor;
    PointFunction inner;
};
struct PointFunction::SumOf {
    std::vector<PointFunction> terms;
};
struct PointFunction::PointwisePower {
    PointFunction inner;
    unsigned exponent;
};
struct PointFunction::KernelOf {
    ScalarKernel kernel;
    PointFunction inner;
};

inline PointFunction::PointFunction(Variant v) : node_(std::make_shared<const Variant>(std::move(v))) {}

inline const PointFunction::Variant& PointFunction::node() const noexcept { return *node_; }

inline PointFunction PointFunction::composite(ScalarKernel k, AdditiveFunctional a) {
    return PointFunction(Composite{k, std::move(a)});
}
inline PointFunction PointFunction::tabulated(std::map<Point, Rational> table) {
    return PointFunction(Tabulated{std::move(table)});
}
inline PointFunction PointFunction::measure_mass(MeasureExpr mu, MassCache* cache) {
    return PointFunction(MeasureMass{std::move(mu), cache});
}
inline PointFunction PointFunction::scaled(Rational c, PointFunction inner) {
    return PointFunction(Scaled{std::move(c), std::move(inner)});
}
inline PointFunction PointFunction::sum_of(std::vector<PointFunction> terms) {
    return PointFunction(SumOf{std::move(terms)});
}
inline PointFunction PointFunction::pointwise_power(PointFunction inner, unsigned n) {
    if (n == 0) throw std::invalid_argument("pointwise power needs n >= 1");
    return PointFunction(PointwisePower{std::move(inner), n});
}
inline PointFunction PointFunction::kernel_of(ScalarKernel k, PointFunction inner) {
    return PointFunction(KernelOf{k, std::move(inner)});
}

inline Rational PointFunction::operator()(const Point& x) const {
    return std::visit(
        [&](const auto& n) -> Rational {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Composite>) {
                return n.kernel(n.additive(x));
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                auto it = n.table.find(x);
                if (it == n.table.end())
                    throw UntabulatedPoint("function is not tabulated at " + to_string(x));
                return it->second;
            } else if constexpr (std::is_same_v<T, MeasureMass>) {
                return atom_mass(n.measure, x, n.cache);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                if (n.factor == 0) return 0;
                return n.factor * n.inner(x);
            } else if constexpr (std::is_same_v<T, SumOf>) {
                Rational s = 0;
                for (const auto& t : n.terms) s += t(x);
                return s;
            } else if constexpr (std::is_same_v<T, PointwisePower>) {
                return power(n.inner(x), n.exponent);
            } else {
                return n.kernel(n.inner(x));
            }
        },
        *node_);
}

inline Rational function_eval(const PointFunction& f, const Point& x) { return f(x); }

inline PointFunction scale_function(Rational c, PointFunction f) {
    return PointFunction::scaled(std::move(c), std::move(f));
}

/// x -> (a(x))_+^n
inline PointFunction positive_part_power_of(const AdditiveFunctional& a, unsigned n) {
    return PointFunction::composite(ScalarKernel::positive_part_power(n), a);
}

}  // namespace wrightcheck
