#pragma once

#include "wrightcheck/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wrightcheck {

/// Exact rational, truth value, or a rendered set of points.
using Value = std::variant<Rational, bool, std::string>;

inline std::string to_string(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return to_string(x);
            else if constexpr (std::is_same_v<T, bool>)
                return x ? "true" : "false";
            else
                return x;
        },
        v);
}

/// One checked statement. With an expectation it passes iff computed equals
/// expected exactly; without one it is informational and always passes.
struct Claim {
    std::string label;
    std::string statement;
    Value computed;
    std::optional<Value> expected;

    bool pass() const { return !expected || *expected == computed; }
};

struct TraceRow {
    std::string label;
    Rational value;
};

struct Trace {
    std::vector<TraceRow> rows;
    std::vector<std::string> notes;
};

struct Report {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Claim> claims;
    std::optional<Trace> trace;

    Claim& add(std::string label, std::string statement, Value computed, std::optional<Value> expected) {
        claims.push_back({std::move(label), std::move(statement), std::move(computed), std::move(expected)});
        return claims.back();
    }

    bool pass() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass(); });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass(); }));
    }

    std::string title() const {
        std::string t = scenario;
        for (const auto& [k, v] : parameters) t += " " + k + "=" + v;
        return t;
    }
};

enum class OutputFormat { Human, Tsv, Jsonl };

inline void render_human(std::ostream& os, const Report& r, bool with_trace) {
    os << "== " << r.title() << " ==\n";
    if (with_trace && r.trace) {
        std::size_t width = 0;
        for (const auto& row : r.trace->rows) width = std::max(width, row.label.size());
        for (const auto& row : r.trace->rows)
            os << "  " << row.label << std::string(width - row.label.size(), ' ') << " = "
               << to_string(row.value) << "\n";
        for (const auto& note : r.trace->notes) os << "  " << note << "\n";
        os << "\n";
    }
    std::size_t width = 0;
    for (const auto& c : r.claims) width = std::max(width, c.label.size());
    for (const auto& c : r.claims) {
        os << "  [" << (c.pass() ? "PASS" : "FAIL") << "] " << c.label
           << std::string(width - c.label.size(), ' ') << "  computed " << to_string(c.computed);
        if (c.expected) os << "  expected " << to_string(*c.expected);
        os << "\n";
        if (!c.statement.empty()) os << "         " << std::string(width, ' ') << "  " << c.statement << "\n";
    }
    os << "  " << (r.pass() ? "all claims pass" : std::to_string(r.failures()) + " claim(s) FAILED") << "\n";
}

inline void render_tsv(std::ostream& os, const Report& r) {
    for (const auto& c : r.claims) {
        os << r.title() << '\t' << c.label << '\t' << to_string(c.computed) << '\t'
           << (c.expected ? to_string(*c.expected) : "-") << '\t' << (c.pass() ? "pass" : "fail") << '\n';
    }
}

inline void render_jsonl(std::ostream& os, const Report& r, bool with_trace) {
    for (const auto& c : r.claims) {
        nlohmann::ordered_json j;
        j["scenario"] = r.title();
        j["label"] = c.label;
        j["statement"] = c.statement;
        j["computed"] = to_string(c.computed);
        j["expected"] = c.expected ? nlohmann::ordered_json(to_string(*c.expected)) : nlohmann::ordered_json();
        j["pass"] = c.pass();
        os << j.dump() << '\n';
    }
    if (with_trace && r.trace) {
        for (const auto& row : r.trace->rows) {
            nlohmann::ordered_json j;
            j["scenario"] = r.title();
            j["trace"] = row.label;
            j["value"] = to_string(row.value);
            os << j.dump() << '\n';
        }
    }
}

inline void render(std::ostream& os, const Report& r, OutputFormat format, bool with_trace) {
    switch (format) {
        case OutputFormat::Human:
            render_human(os, r, with_trace);
            break;
        case OutputFormat::Tsv:
            render_tsv(os, r);
            break;
        case OutputFormat::Jsonl:
            render_jsonl(os, r, with_trace);
            break;
    }
}

}  // namespace wrightcheck
