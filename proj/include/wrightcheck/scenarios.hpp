#pragma once

// Scenario runners. Each builds its objects from scratch, computes every
// quantity exactly, and records it next to the value it must equal.

#include "wrightcheck/differences.hpp"
#include "wrightcheck/errors.hpp"
#include "wrightcheck/function.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/measure_expr.hpp"
#include "wrightcheck/measures.hpp"
#include "wrightcheck/random.hpp"
#include "wrightcheck/rational.hpp"
#include "wrightcheck/report.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrightcheck {

/// Largest order the scenario runners accept; 2^(n+1) evaluations per difference.
inline constexpr unsigned kMaxOrder = 30;

namespace detail {

inline Value val(const Rational& r) { return Value(std::in_place_type<Rational>, r); }
inline Value val(long long v) { return Value(std::in_place_type<Rational>, Rational(v)); }
inline Value truth(bool b) { return Value(std::in_place_type<bool>, b); }
inline Value text(std::string s) { return Value(std::in_place_type<std::string>, std::move(s)); }

inline void require_odd(unsigned n) {
    if (n % 2 == 0)
        throw EvenOrder("order n=" + std::to_string(n) +
                        " is even; the counterexample construction needs odd n (see `probe even`)");
    if (n > kMaxOrder) throw std::invalid_argument("order n=" + std::to_string(n) + " is too large");
}

inline Rational sign_power(unsigned k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

inline std::string subset_label(const std::vector<std::size_t>& subset, const std::vector<Symbol>& hs) {
    std::string s = "f(0";
    for (auto i : subset) s += " + " + hs[i].name;
    return s + ")";
}

inline Trace table_trace(const DifferenceTable& t, const std::vector<Symbol>& hs, const std::string& op) {
    Trace trace;
    for (const auto& row : t.rows) trace.rows.push_back({subset_label(row.term.subset, hs), row.value});
    trace.notes.push_back(op + " = " + t.grouped_sum_text());
    return trace;
}

}  // namespace detail

/// h1, ..., h(n+1), all declared positive.
inline std::vector<Symbol> increment_symbols(unsigned n) {
    std::vector<Symbol> hs;
    for (unsigned i = 1; i <= n + 1; ++i) hs.push_back(positive_symbol("h" + std::to_string(i)));
    return hs;
}

/// a(h1) = -1, a(h2) = ... = a(h(n+1)) = 1.
inline AdditiveFunctional counterexample_additive(const std::vector<Symbol>& hs) {
    AdditiveFunctional a;
    for (std::size_t i = 0; i < hs.size(); ++i) a.set(hs[i], i == 0 ? Rational(-1) : Rational(1));
    return a;
}

inline IncrementList symbol_increments(const std::vector<Symbol>& hs) {
    std::vector<Point> pts;
    for (const auto& s : hs) pts.emplace_back(s);
    return IncrementList(std::move(pts));
}

inline Report verify_theorem_2_3(unsigned n) {
    detail::require_odd(n);
    using detail::val;
    const auto hs = increment_symbols(n);
    const auto a = counterexample_additive(hs);
    const auto f = positive_part_power_of(a, n);
    const auto incs = symbol_increments(hs);
    const Point origin;
    const Point top = incs.total();

    Report r;
    r.scenario = "theorem23";
    r.parameters = {{"n", std::to_string(n)}};

    const Rational fwd = forward_diff(f, origin, incs);
    const Rational closed = forward_diff_closed(f, origin, incs);
    const Rational bwd = backward_diff(f, top, incs);
    r.add("forward difference at 0", "D_{h1..h" + std::to_string(n + 1) + "} (a(x))_+^" + std::to_string(n) +
          " at x = 0, by operator composition", val(fwd), val(-1));
    r.add("subset expansion at 0", "same difference as the alternating sum over all subsets of increments",
          val(closed), val(-1));
    r.add("backward difference at h1+...+h" + std::to_string(n + 1),
          "nabla_{h1..h" + std::to_string(n + 1) + "} f at the sum of all increments", val(bwd), val(-1));
    r.add("backward form equals forward form", "nabla f(x + sum h) = D f(x)", detail::truth(bwd == fwd),
          detail::truth(true));

    r.trace = detail::table_trace(difference_table(f, origin, incs), hs, "D f(0)");
    return r;
}

inline Report verify_section_3_1() {
    using detail::val;
    const unsigned n = 3;
    const auto hs = increment_symbols(n);
    const auto a = counterexample_additive(hs);
    const auto f = positive_part_power_of(a, n);
    const auto incs = symbol_increments(hs);
    const Point origin;

    Report r;
    r.scenario = "section31";

    // Printed table, largest subsets first, lexicographic within a size.
    const std::vector<long long> printed = {8, 1, 1, 1, 27, 0, 0, 0, 8, 8, 8, 0, 1, 1, 1, 0};
    const std::vector<long long> printed_groups = {8, -30, 24, -3, 0};

    const auto table = difference_table(f, origin, incs);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        r.add(detail::subset_label(row.term.subset, hs), "(a(x))_+^3 at x = " + to_string(row.term.point),
              val(row.value), val(printed.at(i)));
    }
    for (std::size_t g = 0; g < table.group_sums.size(); ++g) {
        const std::size_t size = n + 1 - g;
        r.add("signed sum over " + std::to_string(size) + "-element subsets",
              "(-1)^" + std::to_string(g) + " times the sum of the rows whose argument adds " + std::to_string(size) +
                  " of the h_i",
              val(table.group_sums[g]), val(printed_groups.at(g)));
    }
    r.add("D_{h1h2h3h4} f(0)", table.grouped_sum_text(), val(table.value), val(-1));
    r.add("recursive difference agrees", "operator composition gives the same value",
          val(forward_diff(f, origin, incs)), val(-1));

    r.trace = detail::table_trace(table, hs, "D_{h1h2h3h4} f(0)");
    return r;
}

inline Report verify_section_3_2() {
    using detail::truth;
    using detail::val;
    Report r;
    r.scenario = "section32";

    // (i) f = |Q| with Q(x) = a(x^2). The squares are expanded by hand in the
    // basis {one, sqrt2, cbrt2, cbrt4}; cbrt4 carries its own additive value.
    {
        const Symbol one = positive_symbol("one");
        const Symbol sqrt2 = positive_symbol("sqrt2");
        const Symbol cbrt2 = positive_symbol("cbrt2");
        const Symbol cbrt4 = positive_symbol("cbrt4");
        const AdditiveFunctional a{{one, Rational(-9)}, {sqrt2, Rational(4)}, {cbrt4, Rational(4)}};
        const Point x(one);
        const Point h = Point(cbrt2) - Point(one);  // cbrt2 - 1 > 0, a fact outside the symbolic model

        const std::vector<Point> squares = {
            Point(one),
            Point(cbrt4),
            point_combine({{4, Point(cbrt4)}, {-4, Point(cbrt2)}, {1, Point(one)}}),
            point_combine({{9, Point(cbrt4)}, {-12, Point(cbrt2)}, {4, Point(one)}}),
        };
        const std::vector<long long> printed_q = {-9, 4, 7, 0};

        std::map<Point, Rational> q_table;
        Point at = x;
        for (std::size_t k = 0; k < squares.size(); ++k) {
            const Rational q = a(squares[k]);
            const std::string where = k == 0 ? "x" : "x+" + (k == 1 ? std::string() : std::to_string(k)) + "h";
            r.add("Q(" + where + ")", "a applied to (" + to_string(at) + ")^2 = " + to_string(squares[k]), val(q),
                  val(printed_q[k]));
            q_table.emplace(at, q);
            at += h;
        }
        const auto abs_q = PointFunction::kernel_of(ScalarKernel::absolute_value(), PointFunction::tabulated(q_table));
        const auto hhh = IncrementList::assume_positive({h, h, h});
        r.add("D_h^3 |Q|(x)", "x = one, h = cbrt2 - one", val(forward_diff(abs_q, x, hhh)), val(-18));
        r.add("D_h^3 |Q|(x) by subset expansion", "|Q(x+3h)| - 3|Q(x+2h)| + 3|Q(x+h)| - |Q(x)|",
              val(forward_diff_closed(abs_q, x, hhh)), val(-18));
    }

    // (ii) discontinuous a: exact witness with a(x) = 1, a(h) = -2.
    {
        const Symbol s = positive_symbol("s");
        const Symbol t = positive_symbol("t");
        const AdditiveFunctional a{{s, Rational(1)}, {t, Rational(-2)}};
        const auto f = positive_part_power_of(a, 2);
        const Point x(s);
        const Point h(t);
        const Rational ax = a(x);
        r.add("discontinuous a: D_h^3 f(x)", "f = (a(x))_+^2, a(s) = 1, a(t) = -2, x = s, h = t",
              val(equal_increment_diff(f, x, h, 3)), val(-(ax * ax)));
        const auto probe = jensen_convexity_probe(f, 2, {{x, h}});
        r.add("discontinuous a: Jensen violations", "samples with D_h^3 f(x) < 0",
              val(static_cast<long long>(probe.violations.size())), val(1));
    }

    // (iii) a(x) = c x with c >= 0 on the integer grid.
    const Symbol u = positive_symbol("u");
    for (long long c : {0, 1, 2}) {
        const AdditiveFunctional a{{u, Rational(c)}};
        const auto f = positive_part_power_of(a, 2);
        const auto g = scale_function(Rational(c * c), positive_part_power_of(AdditiveFunctional{{u, Rational(1)}}, 2));
        std::vector<JensenSample> samples;
        bool same = true;
        for (long long k = -3; k <= 3; ++k) {
            for (long long step : {1, 2}) {
                samples.push_back({Rational(k) * Point(u), Rational(step) * Point(u)});
            }
            const Point p = Rational(k) * Point(u);
            same = same && f(p) == g(p);
        }
        const auto probe = jensen_convexity_probe(f, 2, samples);
        r.add("a = " + std::to_string(c) + "x: Jensen violations on grid",
              "x in {-3..3}, h in {1,2}, D_h^3 (cx)_+^2 < 0", val(static_cast<long long>(probe.violations.size())),
              val(0));
        r.add("a = " + std::to_string(c) + "x: f = c^2 x_+^2 on grid", "(cx)_+^2 against the scaled form",
              truth(same), truth(true));
    }

    // (iv) a(x) = c x with c < 0, x = -1, h = 1.
    for (long long c : {-1, -2}) {
        const AdditiveFunctional a{{u, Rational(c)}};
        const auto f = positive_part_power_of(a, 2);
        r.add("a = " + std::to_string(c) + "x: D_1^3 f(-1)", "equals -c^2",
              val(equal_increment_diff(f, -Point(u), Point(u), 3)), val(-(c * c)));
    }
    return r;
}

inline Report verify_lemma_4_4(unsigned n) {
    detail::require_odd(n);
    using detail::truth;
    using detail::val;
    const auto hs = increment_symbols(n);
    const auto sets = build_a_sets(hs);
    const auto mu = build_mu(hs);
    std::vector<MeasureExpr> mu_i;
    for (std::size_t i = 1; i <= hs.size(); ++i) mu_i.push_back(build_mu_i(i, hs));
    const Point h1(hs[0]);

    Report r;
    r.scenario = "lemma44";
    r.parameters = {{"n", std::to_string(n)}};

    bool sizes_ok = true;
    for (const auto& ai : sets.a_i) sizes_ok = sizes_ok && ai.size() == (std::size_t{1} << n);
    r.add("|A_i| = 2^n for every i", "", truth(sizes_ok), truth(true));
    r.add("|A|", "nonzero 0/1 combinations of h1..h" + std::to_string(n + 1),
          val(static_cast<long long>(sets.a_union.size())), val((1LL << (n + 1)) - 1));

    bool in_ok = true;
    bool out_ok = true;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (const auto& x : sets.a_union) {
            const Rational m = atom_mass(mu_i[i], x);
            ++checked;
            if (sets.in_a_i(i, x))
                in_ok = in_ok && m == 1;
            else
                out_ok = out_ok && m == 0;
        }
    }
    r.add("(a) mu_i = 1 on A_i", "all i, all x in A_i", truth(in_ok), truth(true));
    r.add("(b) mu_i = 0 on A \\ A_i", "all i, all x in A outside A_i", truth(out_ok), truth(true));

    std::vector<Rational> mu_on_a;
    std::string negatives;
    for (const auto& x : sets.a_union) {
        mu_on_a.push_back(atom_mass(mu, x));
        if (mu_on_a.back() < 0) negatives += (negatives.empty() ? "" : ", ") + to_string(x);
    }
    r.add("(c) {x in A : mu(x) < 0}", "", detail::text("{" + negatives + "}"), detail::text("{" + hs[0].name + "}"));
    r.add("(d) mu(h1)", "", val(atom_mass(mu, h1)), val(-1));
    r.add("(d) -mu_1(h1)", "the only mu_i carrying mass at h1 enters with sign -1", val(-atom_mass(mu_i[0], h1)),
          val(-1));

    bool positive_part_ok = true;
    for (std::size_t k = 0; k < sets.a_union.size(); ++k) {
        const Rational& m = mu_on_a[k];
        const Rational lhs = m > 0 ? m : Rational(0);
        const Rational rhs = m + (sets.a_union[k] == h1 ? Rational(1) : Rational(0));
        positive_part_ok = positive_part_ok && lhs == rhs;
    }
    r.add("(e) mu_+ = mu + delta_h1 on A", "max(mu(x), 0) = mu(x) + delta_h1(x) for all x in A",
          truth(positive_part_ok), truth(true));
    r.add("points checked", "mu_i evaluations over all i and all of A", val(static_cast<long long>(checked)),
          val(static_cast<long long>(hs.size() * sets.a_union.size())));
    return r;
}

namespace detail {

// For every support mask, the sum over compositions j of n into hs.size()
// parts with that support of multinomial(n; j) * (-1)^(j_1).
inline std::map<unsigned long, Integer> multinomial_by_support(unsigned n, std::size_t parts) {
    std::vector<Integer> fact(n + 1, Integer(1));
    for (unsigned i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::map<unsigned long, Integer> out;
    std::vector<unsigned> j(parts, 0);
    // recursive enumeration of compositions
    auto rec = [&](auto&& self, std::size_t idx, unsigned remaining) -> void {
        if (idx + 1 == parts) {
            j[idx] = remaining;
            Integer coeff = fact[n];
            unsigned long mask = 0;
            for (std::size_t k = 0; k < parts; ++k) {
                coeff /= fact[j[k]];
                if (j[k] > 0) mask |= 1ul << k;
            }
            if (j[0] % 2 == 1) coeff = -coeff;
            out[mask] += coeff;
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            j[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

inline unsigned long corner_mask(const Point& x, const std::vector<Symbol>& hs) {
    unsigned long mask = 0;
    for (std::size_t k = 0; k < hs.size(); ++k)
        if (x.coordinate(hs[k]) != 0) mask |= 1ul << k;
    return mask;
}

}  // namespace detail

inline Report verify_lemma_4_6(unsigned n) {
    detail::require_odd(n);
    using detail::truth;
    using detail::val;
    const auto hs = increment_symbols(n);
    const auto incs = symbol_increments(hs);
    const auto sets = build_a_sets(hs);
    const auto a = counterexample_additive(hs);
    const auto f = positive_part_power_of(a, n);
    const auto mu = build_mu(hs);
    const Point h1(hs[0]);
    const Point top = incs.total();
    const Point origin;
    const auto delta_h1 = MeasureExpr::dirac(h1);
    const Rational sign_n = detail::sign_power(n);

    const auto mu_fn = measure_mass_function(mu);
    const auto delta_fn = measure_mass_function(delta_h1);
    const auto shifted_power = PointFunction::pointwise_power(PointFunction::sum_of({mu_fn, delta_fn}), n);
    const auto mu_power = PointFunction::pointwise_power(mu_fn, n);

    Report r;
    r.scenario = "lemma46";
    r.parameters = {{"n", std::to_string(n)}};

    bool f_ok = true, a_ok = true, expand_ok = true, cross_ok = true;
    for (const auto& x : sets.a_union) {
        const Rational m = atom_mass(mu, x);
        const Rational d = x == h1 ? Rational(1) : Rational(0);
        const Rational lhs = power(m + d, n);
        f_ok = f_ok && f(x) == lhs;
        a_ok = a_ok && a(x) == m;
        expand_ok = expand_ok && lhs == power(m, n) - sign_n * d;
        for (unsigned k = 1; k + 1 <= n; ++k) cross_ok = cross_ok && power(m, k) * d == detail::sign_power(k) * d;
    }
    r.add("f = (mu + delta_h1)^n on A", "(a(x))_+^n against the pointwise power of atom masses", truth(f_ok),
          truth(true));
    r.add("a = mu on A", "additive values against atom masses of mu", truth(a_ok), truth(true));
    r.add("(mu + delta_h1)^n = mu^n - (-1)^n delta_h1 on A", "", truth(expand_ok), truth(true));
    r.add("mu^k delta_h1 = (-1)^k delta_h1 on A", "k = 1..n-1", truth(cross_ok), truth(true));

    // Products of mu_j against closures of a single atom, over every nonempty
    // index set and every x in A.
    {
        std::vector<MeasureExpr> mu_i;
        for (std::size_t i = 1; i <= hs.size(); ++i) mu_i.push_back(build_mu_i(i, hs));
        std::vector<std::vector<Rational>> mass(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (const auto& x : sets.a_union) mass[i].push_back(atom_mass(mu_i[i], x));
        bool product_ok = true;
        const unsigned long full = 1ul << hs.size();
        for (unsigned long subset = 1; subset < full; ++subset) {
            const auto closure = j_op(MeasureExpr::dirac(lattice_corner(hs, subset)), incs);
            for (std::size_t k = 0; k < sets.a_union.size(); ++k) {
                Rational prod = 1;
                for (std::size_t i = 0; i < hs.size(); ++i)
                    if (subset & (1ul << i)) prod *= mass[i][k];
                product_ok = product_ok && prod == atom_mass(closure, sets.a_union[k]);
            }
        }
        r.add("prod_j mu_j = J delta_{sum h_j} on A", "every nonempty index set, every x in A", truth(product_ok),
              truth(true));
    }

    // nabla mu^n against the multinomial sum of atoms on A.
    {
        const auto by_support = detail::multinomial_by_support(n, hs.size());
        bool multinomial_ok = true;
        for (const auto& x : sets.a_union) {
            auto it = by_support.find(detail::corner_mask(x, hs));
            const Rational rhs = it == by_support.end() ? Rational(0) : Rational(it->second);
            multinomial_ok = multinomial_ok && backward_diff(mu_power, x, incs) == rhs;
        }
        r.add("nabla mu^n = multinomial atom sum on A", "sum over j of multinomial(n; j) (-1)^j1 delta at the support of j",
              truth(multinomial_ok), truth(true));
    }

    const std::string at_top = " at h1+...+h" + std::to_string(n + 1);
    const Rational nabla_mu_n = backward_diff(mu_power, top, incs);
    const Rational nabla_delta = atom_mass(nabla(delta_h1, incs), top);
    r.add("nabla mu^n" + at_top, "", val(nabla_mu_n), val(0));
    r.add("nabla delta_h1" + at_top, "measure difference of the unit atom", val(nabla_delta), val(sign_n));
    r.add("D delta_h1 at 0", "forward difference of the atom-mass function",
          val(forward_diff(delta_fn, origin, incs)), val(sign_n));

    const Rational measure_path = backward_diff(shifted_power, top, incs);
    const Rational chain = nabla_mu_n - sign_n * nabla_delta;
    const Rational direct_path = backward_diff(f, top, incs);
    r.add("measure path: nabla (mu + delta_h1)^n" + at_top, "", val(measure_path), val(-1));
    r.add("measure path: nabla mu^n - (-1)^n nabla delta_h1", "", val(chain), val(-1));
    r.add("direct path: nabla f" + at_top, "", val(direct_path), val(-1));
    r.add("direct path: D f(0)", "", val(forward_diff(f, origin, incs)), val(-1));
    r.add("measure and direct paths agree", "", truth(measure_path == direct_path && chain == direct_path),
          truth(true));
    return r;
}

/// Random atomic measure with 1..5 atoms at nonnegative integer points
/// (coordinates <= 5) over `symbols`.
inline MeasureExpr random_atomic_measure(SeededRng& rng, const std::vector<Symbol>& symbols, bool nonnegative,
                                         std::vector<Point>* atoms = nullptr) {
    const auto count = rng.uniform(1, 5);
    std::vector<MeasureExpr> terms;
    for (std::int64_t k = 0; k < count; ++k) {
        std::vector<Point::Entry> entries;
        for (const auto& s : symbols) entries.emplace_back(s, Rational(rng.uniform(0, 5)));
        Point p = Point::from_entries(std::move(entries));
        std::int64_t w = nonnegative ? rng.uniform(1, 3) : rng.uniform(-3, 2);
        if (!nonnegative && w >= 0) ++w;  // weights in {-3..-1, 1..3}
        if (atoms) atoms->push_back(p);
        terms.push_back(MeasureExpr::scale(Rational(w), MeasureExpr::dirac(std::move(p))));
    }
    return MeasureExpr::sum(std::move(terms));
}

/// 1..3 nonzero increments with coordinates in {0,1,2}.
inline IncrementList random_increments(SeededRng& rng, const std::vector<Symbol>& symbols) {
    const auto count = rng.uniform(1, 3);
    std::vector<Point> hs;
    while (static_cast<std::int64_t>(hs.size()) < count) {
        std::vector<Point::Entry> entries;
        for (const auto& s : symbols) entries.emplace_back(s, Rational(rng.uniform(0, 2)));
        Point h = Point::from_entries(std::move(entries));
        if (!h.is_zero()) hs.push_back(std::move(h));
    }
    return IncrementList(std::move(hs));
}

inline constexpr std::size_t kMinProbePoints = 50;

/// At least kMinProbePoints distinct points: the given ones, then random
/// points with coordinates in [-1, 7].
inline std::vector<Point> probe_points(SeededRng& rng, const std::vector<Symbol>& symbols,
                                       const std::vector<Point>& seeds) {
    std::set<Point> pts(seeds.begin(), seeds.end());
    while (pts.size() < kMinProbePoints) {
        std::vector<Point::Entry> entries;
        for (const auto& s : symbols) entries.emplace_back(s, Rational(rng.uniform(-1, 7)));
        pts.insert(Point::from_entries(std::move(entries)));
    }
    return {pts.begin(), pts.end()};
}

/// Randomized round trips nabla(J nu) = nu and J(nabla mu) = mu. With
/// `memoize`, atom masses are cached per trial; results do not depend on it.
inline Report verify_prop_4_3(unsigned trials, std::uint64_t seed, bool memoize = false) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    using detail::truth;
    using detail::val;
    Report r;
    r.scenario = "prop43";
    r.parameters = {{"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};

    {
        const Symbol hsym = positive_symbol("h");
        const Point h(hsym);
        const auto m = nabla(j_op(MeasureExpr::dirac(Point()), IncrementList{h}), IncrementList{h});
        r.add("nabla_h J_h delta_0 at 0", "", val(atom_mass(m, Point())), val(1));
        r.add("nabla_h J_h delta_0 at h", "", val(atom_mass(m, h)), val(0));
    }

    const std::vector<Symbol> symbols = {positive_symbol("p1"), positive_symbol("p2"), positive_symbol("p3")};
    SeededRng rng(seed);
    long long pass_a = 0, pass_b = 0, hypothesis_ok = 0;
    std::size_t fewest = SIZE_MAX;
    for (unsigned t = 0; t < trials; ++t) {
        MassCache cache;
        MassCache* c = memoize ? &cache : nullptr;

        std::vector<Point> atoms;
        const auto nu = random_atomic_measure(rng, symbols, false, &atoms);
        const auto hs = random_increments(rng, symbols);
        const auto probes = probe_points(rng, symbols, atoms);
        fewest = std::min(fewest, probes.size());
        const auto round_a = nabla(j_op(nu, hs), hs);
        bool ok_a = true;
        for (const auto& x : probes) ok_a = ok_a && atom_mass(round_a, x, c) == atom_mass(nu, x, c);
        pass_a += ok_a;

        std::vector<Point> atoms_b;
        const auto nu_b = random_atomic_measure(rng, symbols, true, &atoms_b);
        const auto hs_b = random_increments(rng, symbols);
        const auto mu = j_op(nu_b, hs_b);
        const auto diff = nabla(mu, hs_b);
        const auto round_b = j_op(diff, hs_b);
        const auto probes_b = probe_points(rng, symbols, atoms_b);
        fewest = std::min(fewest, probes_b.size());
        bool nonneg = true;
        bool ok_b = true;
        for (const auto& x : probes_b) {
            nonneg = nonneg && atom_mass(diff, x, c) >= 0;
            ok_b = ok_b && atom_mass(round_b, x, c) == atom_mass(mu, x, c);
        }
        hypothesis_ok += nonneg;
        pass_b += ok_b;
    }
    r.add("nabla(J nu) = nu", "random signed atomic nu, 1-3 increments", val(pass_a), val(trials));
    r.add("nabla mu >= 0 for mu = J nu", "hypothesis of the reverse round trip", val(hypothesis_ok), val(trials));
    r.add("J(nabla mu) = mu", "mu = J of a random nonnegative atomic measure", val(pass_b), val(trials));
    r.add("probe points per round trip >= " + std::to_string(kMinProbePoints), "fewest: " + std::to_string(fewest),
          truth(fewest >= kMinProbePoints), truth(true));
    return r;
}

inline const std::vector<std::string>& even_candidates() {
    static const std::vector<std::string> ids = {"prop31-witness", "prop32-grid", "prop33-witness"};
    return ids;
}

/// Reports how a documented n = 2 candidate behaves. None of them is a
/// counterexample; the even case stays open.
inline Report probe_even(unsigned n, const std::string& candidate) {
    using detail::val;
    if (n % 2 != 0) throw std::invalid_argument("probe even needs an even n, got " + std::to_string(n));
    if (n != 2) throw UnknownCandidate("no documented candidates for n=" + std::to_string(n) + " (only n=2)");

    Report r;
    r.scenario = "probe-even";
    r.parameters = {{"n", "2"}, {"case", candidate}};
    const Symbol u = positive_symbol("u");

    if (candidate == "prop31-witness") {
        const Symbol s = positive_symbol("s");
        const Symbol t = positive_symbol("t");
        const AdditiveFunctional a{{s, Rational(1)}, {t, Rational(-2)}};
        const auto probe = jensen_convexity_probe(positive_part_power_of(a, 2), n, {{Point(s), Point(t)}});
        r.add("Jensen violations", "(a(x))_+^2 with a(s) = 1, a(t) = -2 at x = s, h = t",
              val(static_cast<long long>(probe.violations.size())), val(1));
        r.add("violation value", "equals -(a(x))^2",
              val(probe.violations.empty() ? Rational(0) : probe.violations.front().value), val(-1));
        r.add("outcome", "", detail::text("not 2-Jensen-convex, so not a candidate"), std::nullopt);
    } else if (candidate == "prop33-witness") {
        const AdditiveFunctional a{{u, Rational(-1)}};
        const auto probe = jensen_convexity_probe(positive_part_power_of(a, 2), n, {{-Point(u), Point(u)}});
        r.add("Jensen violations", "(cx)_+^2 with c = -1 at x = -1, h = 1",
              val(static_cast<long long>(probe.violations.size())), val(1));
        r.add("violation value", "equals -c^2",
              val(probe.violations.empty() ? Rational(0) : probe.violations.front().value), val(-1));
        r.add("outcome", "", detail::text("not 2-Jensen-convex, so not a candidate"), std::nullopt);
    } else if (candidate == "prop32-grid") {
        const AdditiveFunctional a{{u, Rational(1)}};
        const auto f = positive_part_power_of(a, 2);
        std::vector<JensenSample> js;
        std::vector<WrightSample> ws;
        const std::vector<Point> steps = {Point(u), Rational(2) * Point(u)};
        for (long long k = -3; k <= 3; ++k) {
            const Point x = Rational(k) * Point(u);
            for (const auto& h : steps) js.push_back({x, h});
            for (const auto& h1 : steps)
                for (const auto& h2 : steps)
                    for (const auto& h3 : steps) ws.push_back({x, IncrementList{h1, h2, h3}});
        }
        r.add("Jensen violations on grid", "x in {-3..3}, h in {1,2}",
              val(static_cast<long long>(jensen_convexity_probe(f, n, js).violations.size())), val(0));
        r.add("Wright violations on grid", "x in {-3..3}, h_i in {1,2}",
              val(static_cast<long long>(wright_convexity_probe(f, n, ws).violations.size())), val(0));
        r.add("outcome", "", detail::text("continuous and 2-convex, hence also 2-Wright-convex: not a candidate"),
              std::nullopt);
    } else {
        std::string known;
        for (const auto& id : even_candidates()) known += (known.empty() ? "" : ", ") + id;
        throw UnknownCandidate("unknown candidate '" + candidate + "' (known: " + known + ")");
    }
    return r;
}

}  // namespace wrightcheck
