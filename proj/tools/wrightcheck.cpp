// wrightcheck: command line front end for the scenario runners.

#include "wrightcheck/wrightcheck.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace wrightcheck;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<unsigned> kTheoremBatch = {1, 3, 5, 7, 9, 11};
const std::vector<unsigned> kLemmaBatch = {1, 3, 5};

struct Options {
    std::string format = "human";
    bool trace = false;
    std::vector<unsigned> orders;
    bool allow_large = false;
    unsigned trials = 100;
    std::uint64_t seed = 42;
    bool memo = false;
    unsigned even_n = 2;
    std::string candidate;
    bool list_candidates = false;
    std::string path;
};

OutputFormat parse_format(const std::string& s) {
    if (s == "tsv") return OutputFormat::Tsv;
    if (s == "jsonl") return OutputFormat::Jsonl;
    return OutputFormat::Human;
}

// Orders above `soft_limit` need --allow-large; the cost grows like 2^(n+1).
std::vector<unsigned> checked_orders(const Options& o, const std::vector<unsigned>& batch, unsigned soft_limit,
                                     const char* cost) {
    const auto orders = o.orders.empty() ? batch : o.orders;
    for (unsigned n : orders) {
        if (n % 2 == 0) continue;  // rejected by the runner with EvenOrder
        if (n > soft_limit) {
            if (!o.allow_large)
                throw CLI::ValidationError("--n", "n=" + std::to_string(n) + " exceeds " + std::to_string(soft_limit) +
                                                      "; pass --allow-large to run it anyway");
            std::cerr << "warning: n=" << n << " costs about " << cost << "\n";
        }
    }
    return orders;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of higher-order Wright and Jensen convexity counterexamples"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"human", "tsv", "jsonl"}))
        ->capture_default_str();
    app.add_flag("--trace", o.trace, "Emit the full evaluation table");

    std::vector<std::function<Report()>> jobs;

    auto* verify = app.add_subcommand("verify", "Reproduce a computation from the counterexample construction");
    verify->require_subcommand(1);

    auto add_orders = [&](CLI::App* cmd, const std::string& batch) {
        cmd->add_option("--n", o.orders, "Odd order n (repeatable); default batch " + batch);
        cmd->add_flag("--allow-large", o.allow_large, "Permit orders above the default batch");
    };

    auto* theorem = verify->add_subcommand("theorem23", "Mixed difference of (a(x))_+^n at 0 equals -1");
    add_orders(theorem, "1 3 5 7 9 11");
    theorem->callback([&] {
        for (unsigned n : checked_orders(o, kTheoremBatch, 11, "2^(n+1) evaluations"))
            jobs.push_back([n] { return verify_theorem_2_3(n); });
    });

    verify->add_subcommand("section31", "The sixteen-term table for n = 3")->callback([&] {
        jobs.push_back([] { return verify_section_3_1(); });
    });
    verify->add_subcommand("section32", "The |Q| example and the n = 2 candidates")->callback([&] {
        jobs.push_back([] { return verify_section_3_2(); });
    });

    auto* lemma44 = verify->add_subcommand("lemma44", "Values of mu and mu_i on the corner set A");
    add_orders(lemma44, "1 3 5");
    lemma44->callback([&] {
        for (unsigned n : checked_orders(o, kLemmaBatch, 5, "(n+1)*2^(n+1) atom masses"))
            jobs.push_back([n] { return verify_lemma_4_4(n); });
    });

    auto* lemma46 = verify->add_subcommand("lemma46", "Powers of mu and the final backward difference");
    add_orders(lemma46, "1 3 5");
    lemma46->callback([&] {
        for (unsigned n : checked_orders(o, kLemmaBatch, 5, "4^(n+1) atom masses"))
            jobs.push_back([n] { return verify_lemma_4_6(n); });
    });

    auto* prop = verify->add_subcommand("prop43", "Randomized nabla/J round trips");
    prop->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
    prop->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    prop->add_flag("--memo", o.memo, "Cache atom masses within each trial");
    prop->callback([&] { jobs.push_back([&] { return verify_prop_4_3(o.trials, o.seed, o.memo); }); });

    auto* probe = app.add_subcommand("probe", "Documented candidates for even n");
    probe->require_subcommand(1);
    auto* even = probe->add_subcommand("even", "Report how a candidate fares for even n");
    even->add_option("--n", o.even_n, "Even order")->capture_default_str();
    even->add_option("--case", o.candidate, "Candidate id");
    even->add_flag("--list", o.list_candidates, "List candidate ids");
    even->callback([&] {
        if (o.list_candidates) {
            for (const auto& id : even_candidates()) std::cout << id << "\n";
            return;
        }
        if (o.candidate.empty()) throw CLI::RequiredError("--case");
        jobs.push_back([&] { return probe_even(o.even_n, o.candidate); });
    });

    auto* run = app.add_subcommand("run", "Execute a scenario definition file");
    run->add_option("file", o.path, "Definition file")->required();
    run->callback([&] { jobs.push_back([&] { return run_definition_file(o.path); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const OutputFormat format = parse_format(o.format);
    bool all_pass = true;
    bool first = true;
    try {
        for (const auto& job : jobs) {
            const Report r = job();
            if (format == OutputFormat::Human && !first) std::cout << "\n";
            first = false;
            render(std::cout, r, format, o.trace);
            all_pass = all_pass && r.pass();
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return all_pass ? kExitPass : kExitFail;
}
