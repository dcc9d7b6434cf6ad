#pragma once

#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "filtered_tableau.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "problem.hpp"
#include "problem_io.hpp"

// Command implementations behind the schubert_lr executable. Each returns
// its exit status and the exact text for stdout and stderr, so tests can
// drive them without spawning processes.

namespace schubert_lr::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kInvalidInput = 2 };

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

struct CommandOptions {
    std::optional<std::set<int>> alpha;
    int threads = 1;
    std::optional<int> floor;
};

/// The counting rule checked by `verify`. Replaceable so that tests can
/// confirm a broken rule is caught.
using RuleFunction =
    std::function<Integer(const SchubertProblem&, const std::optional<std::set<int>>&, int threads)>;

inline Integer default_rule(const SchubertProblem& p, const std::optional<std::set<int>>& alpha, int threads)
{
    return intersection_number(p, alpha, threads);
}

namespace detail {

inline std::optional<std::set<int>> effective_alpha(const ProblemDocument& doc, const CommandOptions& opts)
{
    return opts.alpha ? opts.alpha : doc.alpha;
}

inline CommandResult failure(const std::string& message)
{
    return {kInvalidInput, "", "error: " + message + "\n"};
}

template <class F>
CommandResult guarded(F&& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        return failure(std::string("parse: ") + e.what());
    } catch (const std::overflow_error& e) {
        return failure(std::string("overflow: ") + e.what());
    } catch (const std::exception& e) {
        return failure(e.what());
    }
}

} // namespace detail

inline CommandResult cmd_count(const ProblemDocument& doc, const CommandOptions& opts = {})
{
    return detail::guarded([&] {
        const auto n = intersection_number(doc.problem(), detail::effective_alpha(doc, opts), opts.threads);
        return CommandResult{kSuccess, std::to_string(n) + "\n", ""};
    });
}

inline CommandResult cmd_enumerate(const ProblemDocument& doc, const CommandOptions& opts = {})
{
    return detail::guarded([&] {
        const auto p = doc.problem();
        const auto alpha = validate_problem(p, detail::effective_alpha(doc, opts));
        std::vector<FilteredTableau> tableaux;
        if (alpha == p.cuts()) {
            tableaux = enumerate_filtered_tableaux(p, Shape::whole(StaircaseShape(alpha, p.n)), opts.threads);
        }
        return CommandResult{kSuccess, render_enumeration(tableaux), ""};
    });
}

inline CommandResult cmd_verify(const ProblemDocument& doc, const CommandOptions& opts = {},
                                const RuleFunction& rule = default_rule)
{
    return detail::guarded([&] {
        const auto p = doc.problem();
        const auto alpha = detail::effective_alpha(doc, opts);
        validate_problem(p, alpha);
        const Integer r = rule(p, alpha, opts.threads);
        const Integer o = oracle_intersection_number(p, alpha);
        const bool ok = r == o;
        std::ostringstream os;
        os << "rule=" << r << " oracle=" << o << (ok ? " OK" : " MISMATCH") << '\n';
        return CommandResult{ok ? kSuccess : kMismatch, os.str(), ""};
    });
}

/// Coefficient of sigma_w for a valley permutation w. The floor defaults to
/// the largest cut of the problem.
inline CommandResult cmd_valley(const std::string& w_text, const ProblemDocument& doc, const CommandOptions& opts = {})
{
    return detail::guarded([&] {
        const auto p = doc.problem();
        check_terms(p);
        const auto w = Permutation::parse(w_text);
        if (w.size() != p.n) {
            return detail::failure("permutation " + w_text + " is not a permutation of {1.." + std::to_string(p.n) +
                                   "}");
        }
        int floor = 0;
        if (opts.floor) {
            floor = *opts.floor;
        } else if (!p.terms.empty()) {
            floor = p.terms.back().a;
        } else {
            return detail::failure("cannot infer the floor of an empty problem; pass --floor");
        }
        const auto v = valley_from_permutation(w, floor);
        std::ostringstream os;
        os << "floor=" << floor << " mu=" << v.mu().to_string() << '\n';
        os << valley_coefficient(v, p, opts.threads) << '\n';
        return CommandResult{kSuccess, os.str(), ""};
    });
}

inline CommandResult cmd_monk(const ProblemDocument& doc, const CommandOptions& opts = {})
{
    return detail::guarded([&] {
        const auto p = doc.problem();
        if (opts.alpha || doc.alpha) {
            return detail::failure("monk does not accept an alpha override");
        }
        validate_problem(p);
        if (!p.all_boxes()) {
            return detail::failure("monk needs every partition to be a single box");
        }
        const Integer chains = count_monk_chains(p);
        const Integer monk = iterate_monk(p);
        const bool ok = chains == monk;
        std::ostringstream os;
        os << "chains=" << chains << " monk=" << monk << (ok ? " OK" : " MISMATCH") << '\n';
        return CommandResult{ok ? kSuccess : kMismatch, os.str(), ""};
    });
}

/// Parses `text` and dispatches to the named command. `permutation` is the
/// argument of `valley`.
inline CommandResult run_command(const std::string& command, const std::string& text, const CommandOptions& opts = {},
                                 const std::string& permutation = "")
{
    ProblemDocument doc;
    try {
        doc = parse_problem(text);
    } catch (const ParseError& e) {
        return detail::failure(std::string("parse: ") + e.what());
    }
    if (command == "count") {
        return cmd_count(doc, opts);
    }
    if (command == "enumerate") {
        return cmd_enumerate(doc, opts);
    }
    if (command == "verify") {
        return cmd_verify(doc, opts);
    }
    if (command == "valley") {
        return cmd_valley(permutation, doc, opts);
    }
    if (command == "monk") {
        return cmd_monk(doc, opts);
    }
    return detail::failure("unknown command: " + command);
}

} // namespace schubert_lr::cli
