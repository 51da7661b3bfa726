#pragma once

// Line-oriented scenario definition files.
//
//   # comment
//   symbol <name> [positive]
//   additive <symbol> = <rational>              value of the default functional `a`
//   additive <fname>(<symbol>) = <rational>
//   point <name> = <point-expr>
//   function pospartpow <n> of <fname>
//   function power <n> of <fname>
//   function abs of <fname>
//   function identity of <fname>
//   function [abs] tabulated { <point-expr> : <rational>, ... }   (may span lines)
//   measure <name> = dirac <point-expr>
//   measure <name> = shift <mname> by <point-expr>
//   measure <name> = j <mname> by [<point-expr>, ...]
//   measure <name> = nabla <mname> by [<point-expr>, ...]
//   measure <name> = scale <rational> <mname>
//   measure <name> = sum <mname> <mname> ...
//   measure <name> = mu [<i>] over [<symbol>, ...]
//   eval value at <point-expr>
//   eval forward-diff at <point-expr> with [<point-expr>, ...] [assume-positive]
//   eval closed-diff at <point-expr> with [<point-expr>, ...] [assume-positive]
//   eval backward-diff at <point-expr> with [<point-expr>, ...] [assume-positive]
//   eval atom-mass <mname> at <point-expr>
//   eval jensen-probe n=<k> grid=<lo>:<hi>
//   eval wright-probe n=<k> grid=<lo>:<hi>
//
// Every eval line may end with `expect <rational>`; probes then compare the
// number of violations. A point expression is a sum of terms `[<rational>*]<name>`
// where <name> is a symbol or a declared point, or the literal 0.
//
// Probe grids: x runs over every point whose coordinate on each declared
// symbol is an integer in [lo, hi]; Jensen increments are the single positive
// symbols, Wright increment lists are all multisets of n+1 positive symbols.

#include "wrightcheck/differences.hpp"
#include "wrightcheck/errors.hpp"
#include "wrightcheck/function.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/measure_expr.hpp"
#include "wrightcheck/measures.hpp"
#include "wrightcheck/rational.hpp"
#include "wrightcheck/report.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wrightcheck {

class DefinitionRunner {
public:
    explicit DefinitionRunner(std::string name) { report_.scenario = "run " + std::move(name); }

    Report run(std::istream& in) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::size_t start_line = lineno;
            // tabulated blocks may span lines until the closing brace
            if (line.find('{') != std::string::npos) {
                while (line.find('}') == std::string::npos) {
                    std::string more;
                    if (!std::getline(in, more))
                        throw ParseError(start_line, line.find('{') + 1, "unterminated '{'");
                    ++lineno;
                    line += ' ';
                    line += more;
                }
            }
            statement(line, start_line);
        }
        return report_;
    }

private:
    class Cursor {
    public:
        Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

        void skip_space() {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        bool at_end() {
            skip_space();
            return pos_ >= text_.size() || text_[pos_] == '#';
        }
        char peek() {
            skip_space();
            return pos_ < text_.size() ? text_[pos_] : '\0';
        }
        std::size_t column() const { return pos_ + 1; }
        std::size_t line() const { return line_; }

        [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

        bool accept(char c) {
            if (peek() != c) return false;
            ++pos_;
            return true;
        }
        void expect(char c) {
            if (!accept(c)) fail(std::string("expected '") + c + "'");
        }

        std::string word() {
            skip_space();
            const std::size_t begin = pos_;
            while (pos_ < text_.size()) {
                const char c = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                    ++pos_;
                } else {
                    break;
                }
            }
            if (begin == pos_) fail("expected a name");
            return std::string(text_.substr(begin, pos_ - begin));
        }
        bool accept_word(std::string_view w) {
            skip_space();
            const std::size_t save = pos_;
            if (text_.substr(pos_, w.size()) == w) {
                pos_ += w.size();
                const bool boundary = pos_ >= text_.size() ||
                                      !(std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
                if (boundary) return true;
            }
            pos_ = save;
            return false;
        }
        void expect_word(std::string_view w) {
            if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
        }

        bool at_number() {
            const char c = peek();
            return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
        }

        Rational rational() {
            skip_space();
            const std::size_t begin = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            try {
                return parse_rational(text_.substr(begin, pos_ - begin));
            } catch (const std::invalid_argument& e) {
                pos_ = begin;
                fail(e.what());
            }
        }

        unsigned positive_integer() {
            const std::size_t col = column();
            const Rational r = rational();
            if (boost::multiprecision::denominator(r) != 1 || r < 1 || r > 64)
                throw ParseError(line_, col, "expected an integer in [1, 64]");
            return static_cast<unsigned>(boost::multiprecision::numerator(r));
        }

    private:
        std::string_view text_;
        std::size_t line_;
        std::size_t pos_ = 0;
    };

    static std::string located(const Cursor& c, const std::string& what) {
        return "line " + std::to_string(c.line()) + ": " + what;
    }

    const Symbol& symbol(Cursor& c, const std::string& name) {
        if (!basis_.contains(name)) throw UnknownSymbol(located(c, "unknown symbol '" + name + "'"));
        return basis_.at(name);
    }

    Point point_term(Cursor& c) {
        Rational coeff = 1;
        if (c.at_number()) {
            coeff = c.rational();
            if (!c.accept('*')) {
                if (coeff != 0) c.fail("expected '*' after coefficient");
                return Point();
            }
        }
        const std::string name = c.word();
        if (auto it = points_.find(name); it != points_.end()) return coeff * it->second;
        if (!basis_.contains(name)) throw UnknownSymbol(located(c, "unknown symbol or point '" + name + "'"));
        return coeff * Point(basis_.at(name));
    }

    Point point_expr(Cursor& c) {
        bool negate = c.accept('-');
        Point p = negate ? -point_term(c) : point_term(c);
        while (true) {
            if (c.accept('+')) {
                p += point_term(c);
            } else if (c.accept('-')) {
                p -= point_term(c);
            } else {
                return p;
            }
        }
    }

    std::vector<Point> point_list(Cursor& c) {
        c.expect('[');
        std::vector<Point> out;
        if (c.accept(']')) return out;
        do {
            out.push_back(point_expr(c));
        } while (c.accept(','));
        c.expect(']');
        return out;
    }

    IncrementList increments(Cursor& c, std::vector<Point> pts, bool assume_positive) {
        try {
            return assume_positive ? IncrementList::assume_positive(std::move(pts)) : IncrementList(std::move(pts));
        } catch (const InvalidIncrement& e) {
            throw InvalidIncrement(located(c, e.what()));
        }
    }

    const MeasureExpr& measure(Cursor& c) {
        const std::string name = c.word();
        auto it = measures_.find(name);
        if (it == measures_.end()) throw UnknownSymbol(located(c, "unknown measure '" + name + "'"));
        return it->second;
    }

    const PointFunction& function(Cursor& c) {
        if (!function_) c.fail("no function declared before this eval");
        return *function_;
    }

    std::optional<Value> expectation(Cursor& c) {
        if (!c.accept_word("expect")) return std::nullopt;
        return Value(std::in_place_type<Rational>, c.rational());
    }

    void finish(Cursor& c) {
        if (!c.at_end()) c.fail("unexpected trailing text");
    }

    void statement(const std::string& line, std::size_t lineno) {
        Cursor c(line, lineno);
        if (c.at_end()) return;
        const std::string keyword = c.word();
        if (keyword == "symbol") {
            const std::string name = c.word();
            const bool positive = c.accept_word("positive");
            finish(c);
            if (points_.count(name)) c.fail("'" + name + "' is already a point");
            try {
                basis_.declare(name, positive);
            } catch (const Error& e) {
                c.fail(e.what());
            }
        } else if (keyword == "additive") {
            std::string fname = "a";
            std::string sname = c.word();
            if (c.accept('(')) {
                fname = sname;
                sname = c.word();
                c.expect(')');
            }
            const Symbol& s = symbol(c, sname);
            c.expect('=');
            const Rational v = c.rational();
            finish(c);
            additives_[fname].set(s, v);
        } else if (keyword == "point") {
            const std::string name = c.word();
            if (basis_.contains(name)) c.fail("'" + name + "' is already a symbol");
            c.expect('=');
            Point p = point_expr(c);
            finish(c);
            points_[name] = std::move(p);
        } else if (keyword == "function") {
            if (function_) c.fail("a function is already declared");
            function_ = function_spec(c);
            finish(c);
        } else if (keyword == "measure") {
            const std::string name = c.word();
            c.expect('=');
            MeasureExpr m = measure_spec(c);
            finish(c);
            measures_.insert_or_assign(name, std::move(m));
        } else if (keyword == "eval") {
            eval(c);
        } else {
            throw ParseError(lineno, 1, "unknown statement '" + keyword + "'");
        }
    }

    const AdditiveFunctional& additive(Cursor& c) {
        const std::string name = c.word();
        auto it = additives_.find(name);
        if (it == additives_.end()) throw UnknownSymbol(located(c, "unknown additive functional '" + name + "'"));
        return it->second;
    }

    PointFunction function_spec(Cursor& c) {
        if (c.accept_word("pospartpow")) {
            const unsigned n = c.positive_integer();
            c.expect_word("of");
            return PointFunction::composite(ScalarKernel::positive_part_power(n), additive(c));
        }
        if (c.accept_word("power")) {
            const unsigned n = c.positive_integer();
            c.expect_word("of");
            return PointFunction::composite(ScalarKernel::power(n), additive(c));
        }
        if (c.accept_word("identity")) {
            c.expect_word("of");
            return PointFunction::composite(ScalarKernel::identity(), additive(c));
        }
        const bool abs = c.accept_word("abs");
        if (abs && c.accept_word("of")) return PointFunction::composite(ScalarKernel::absolute_value(), additive(c));
        c.expect_word("tabulated");
        c.expect('{');
        std::map<Point, Rational> table;
        if (!c.accept('}')) {
            do {
                Point p = point_expr(c);
                c.expect(':');
                const Rational v = c.rational();
                if (!table.emplace(std::move(p), v).second) c.fail("point tabulated twice");
            } while (c.accept(','));
            c.expect('}');
        }
        auto tab = PointFunction::tabulated(std::move(table));
        return abs ? PointFunction::kernel_of(ScalarKernel::absolute_value(), tab) : tab;
    }

    MeasureExpr measure_spec(Cursor& c) {
        try {
            if (c.accept_word("dirac")) return MeasureExpr::dirac(point_expr(c));
            if (c.accept_word("shift")) {
                MeasureExpr inner = measure(c);
                c.expect_word("by");
                return MeasureExpr::shift(std::move(inner), point_expr(c));
            }
            if (c.accept_word("j")) {
                MeasureExpr inner = measure(c);
                c.expect_word("by");
                return j_op(std::move(inner), increments(c, point_list(c), false));
            }
            if (c.accept_word("nabla")) {
                MeasureExpr inner = measure(c);
                c.expect_word("by");
                return nabla(std::move(inner), increments(c, point_list(c), false));
            }
            if (c.accept_word("scale")) {
                const Rational k = c.rational();
                return MeasureExpr::scale(k, measure(c));
            }
            if (c.accept_word("sum")) {
                std::vector<MeasureExpr> terms;
                while (!c.at_end()) terms.push_back(measure(c));
                return MeasureExpr::sum(std::move(terms));
            }
            if (c.accept_word("mu")) {
                std::optional<unsigned> index;
                if (c.at_number()) index = c.positive_integer();
                c.expect_word("over");
                c.expect('[');
                std::vector<Symbol> hs;
                do {
                    hs.push_back(symbol(c, c.word()));
                } while (c.accept(','));
                c.expect(']');
                return index ? build_mu_i(*index, hs) : build_mu(hs);
            }
        } catch (const InvalidIncrement& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw InvalidIncrement(located(c, what));
        } catch (const NonTerminatingJ& e) {
            throw InvalidIncrement(located(c, e.what()));
        } catch (const std::out_of_range& e) {
            c.fail(e.what());
        }
        c.fail("expected dirac, shift, j, nabla, scale, sum or mu");
    }

    std::pair<long long, long long> grid(Cursor& c) {
        c.expect_word("grid");
        c.expect('=');
        const std::size_t col = c.column();
        const Rational lo = c.rational();
        c.expect(':');
        const Rational hi = c.rational();
        if (boost::multiprecision::denominator(lo) != 1 || boost::multiprecision::denominator(hi) != 1 || lo > hi ||
            lo < -100 || hi > 100)
            throw ParseError(c.line(), col, "grid bounds must be integers lo <= hi within [-100, 100]");
        return {static_cast<long long>(boost::multiprecision::numerator(lo)),
                static_cast<long long>(boost::multiprecision::numerator(hi))};
    }

    std::vector<Point> grid_points(long long lo, long long hi) const {
        std::vector<Point> pts = {Point()};
        for (const auto& s : basis_.symbols()) {
            std::vector<Point> next;
            for (const auto& p : pts)
                for (long long k = lo; k <= hi; ++k) next.push_back(p + Rational(k) * Point(s));
            pts = std::move(next);
        }
        return pts;
    }

    std::vector<Point> positive_steps() const {
        std::vector<Point> out;
        for (const auto& s : basis_.symbols())
            if (s.positive) out.emplace_back(s);
        return out;
    }

    void eval(Cursor& c) {
        const std::string prefix = "line " + std::to_string(c.line()) + ": ";
        const std::string what = c.word();
        if (what == "value") {
            c.expect_word("at");
            const Point x = point_expr(c);
            const auto expected = expectation(c);
            finish(c);
            report_.add(prefix + "f(" + to_string(x) + ")", "", Value(std::in_place_type<Rational>, evaluate(c, x)),
                        expected);
        } else if (what == "forward-diff" || what == "closed-diff" || what == "backward-diff") {
            c.expect_word("at");
            const Point x = point_expr(c);
            c.expect_word("with");
            auto pts = point_list(c);
            const bool assume = c.accept_word("assume-positive");
            const auto expected = expectation(c);
            finish(c);
            const auto hs = increments(c, std::move(pts), assume);
            const PointFunction& f = function(c);
            Rational v;
            try {
                if (what == "forward-diff")
                    v = forward_diff(f, x, hs);
                else if (what == "closed-diff")
                    v = forward_diff_closed(f, x, hs);
                else
                    v = backward_diff(f, x, hs);
            } catch (const UntabulatedPoint& e) {
                throw UntabulatedPoint(prefix + e.what());
            }
            std::string incs;
            for (const auto& h : hs.items()) incs += (incs.empty() ? "" : ", ") + to_string(h);
            report_.add(prefix + what + " at " + to_string(x), "increments [" + incs + "]",
                        Value(std::in_place_type<Rational>, v), expected);
        } else if (what == "atom-mass") {
            const MeasureExpr m = measure(c);
            c.expect_word("at");
            const Point x = point_expr(c);
            const auto expected = expectation(c);
            finish(c);
            report_.add(prefix + "atom mass at " + to_string(x), "",
                        Value(std::in_place_type<Rational>, atom_mass(m, x)), expected);
        } else if (what == "jensen-probe" || what == "wright-probe") {
            c.expect_word("n");
            c.expect('=');
            const unsigned n = c.positive_integer();
            const auto [lo, hi] = grid(c);
            const auto expected = expectation(c);
            finish(c);
            const PointFunction& f = function(c);
            const auto xs = grid_points(lo, hi);
            const auto steps = positive_steps();
            if (steps.empty()) c.fail("probe needs at least one positive symbol");
            ProbeResult result;
            if (what == "jensen-probe") {
                std::vector<JensenSample> samples;
                for (const auto& x : xs)
                    for (const auto& h : steps) samples.push_back({x, h});
                result = jensen_convexity_probe(f, n, samples);
            } else {
                std::vector<WrightSample> samples;
                std::vector<std::size_t> pick(n + 1, 0);
                while (true) {
                    std::vector<Point> hs;
                    for (auto i : pick) hs.push_back(steps[i]);
                    for (const auto& x : xs) samples.push_back({x, IncrementList(hs)});
                    // next nondecreasing index tuple
                    std::size_t k = pick.size();
                    while (k > 0 && pick[k - 1] + 1 == steps.size()) --k;
                    if (k == 0) break;
                    ++pick[k - 1];
                    for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[k - 1];
                }
                result = wright_convexity_probe(f, n, samples);
            }
            std::string detail = std::to_string(result.checked) + " samples checked";
            if (!result.skipped.empty()) detail += ", " + std::to_string(result.skipped.size()) + " untabulated skipped";
            if (!result.violations.empty()) {
                const auto& v = result.violations.front();
                detail += "; first violation " + to_string(v.value) + " at x = " + to_string(v.x);
            }
            report_.add(prefix + what + " n=" + std::to_string(n) + " violations", detail,
                        Value(std::in_place_type<Rational>, Rational(static_cast<long long>(result.violations.size()))),
                        expected);
        } else {
            c.fail("unknown eval request '" + what + "'");
        }
    }

    Rational evaluate(Cursor& c, const Point& x) {
        try {
            return function(c)(x);
        } catch (const UntabulatedPoint& e) {
            throw UntabulatedPoint(located(c, e.what()));
        }
    }

    Basis basis_;
    std::map<std::string, AdditiveFunctional> additives_;
    std::map<std::string, Point> points_;
    std::map<std::string, MeasureExpr> measures_;
    std::optional<PointFunction> function_;
    Report report_;
};

inline Report run_definition(std::istream& in, const std::string& name = "<input>") {
    return DefinitionRunner(name).run(in);
}

inline Report run_definition_string(const std::string& text, const std::string& name = "<string>") {
    std::istringstream in(text);
    return run_definition(in, name);
}

inline Report run_definition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open definition file '" + path + "'");
    return run_definition(in, path);
}

}  // namespace wrightcheck
