#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "staircase.hpp"

namespace schubert_lr {

/// One factor pi_a^* sigma_lambda of a Grassmannian Schubert problem.
struct Term {
    int a = 0;
    Partition lambda;

    bool operator==(const Term&) const = default;
};

/// A list of (descent position, partition) pairs with a_1 <= ... <= a_s,
/// in the flag manifolds of C^n.
struct SchubertProblem {
    int n = 0;
    std::vector<Term> terms;

    std::set<int> cuts() const
    {
        std::set<int> out;
        for (const auto& t : terms) {
            out.insert(t.a);
        }
        return out;
    }

    int total_size() const
    {
        int s = 0;
        for (const auto& t : terms) {
            s += t.lambda.size();
        }
        return s;
    }

    bool all_boxes() const
    {
        return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.lambda == Partition{1}; });
    }

    bool operator==(const SchubertProblem&) const = default;
};

/// Validation failure, tagged with the violated condition.
class ProblemError : public std::invalid_argument {
public:
    enum class Kind { InvalidAlpha, Unsorted, IllFormedTerm, DimensionMismatch };

    ProblemError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// dim(alpha) = sum_i (n - alpha_i)(alpha_i - alpha_{i-1}) with alpha_0 = 0.
inline int dimension(const std::set<int>& alpha, int n)
{
    try {
        check_cut_set(alpha, n);
    } catch (const std::invalid_argument& e) {
        throw ProblemError(ProblemError::Kind::InvalidAlpha, e.what());
    }
    int dim = 0;
    int previous = 0;
    for (int a : alpha) {
        dim += (n - a) * (a - previous);
        previous = a;
    }
    return dim;
}

/// Checks sortedness and rectangle containment of every term, without the
/// dimension condition.
inline void check_terms(const SchubertProblem& p)
{
    if (p.n < 2) {
        throw ProblemError(ProblemError::Kind::InvalidAlpha, "ambient dimension n must be at least 2");
    }
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const auto& t = p.terms[i];
        if (t.a < 1 || t.a > p.n - 1) {
            throw ProblemError(ProblemError::Kind::IllFormedTerm,
                               "rectangle containment: term " + std::to_string(i + 1) + " has cut " +
                                   std::to_string(t.a) + " outside {1.." + std::to_string(p.n - 1) + "}");
        }
        if (i > 0 && p.terms[i - 1].a > t.a) {
            throw ProblemError(ProblemError::Kind::Unsorted,
                               "sortedness: terms must satisfy a_1 <= a_2 <= ... (term " + std::to_string(i + 1) + ")");
        }
        if (!fits_in_rectangle(t.lambda, t.a, p.n)) {
            throw ProblemError(ProblemError::Kind::IllFormedTerm,
                               "rectangle containment: partition " + t.lambda.to_string() + " of term " +
                                   std::to_string(i + 1) + " does not fit in the " + std::to_string(t.a) + "x" +
                                   std::to_string(p.n - t.a) + " rectangle");
        }
    }
}

/// Checks a Grassmannian Schubert problem and returns the cut set it lives
/// on: `alpha_override` when given (it must contain every a_i), otherwise
/// {a_1, ..., a_s}. The degrees must sum to dim(alpha).
inline std::set<int> validate_problem(const SchubertProblem& p, const std::optional<std::set<int>>& alpha_override = {})
{
    check_terms(p);
    std::set<int> alpha = alpha_override ? *alpha_override : p.cuts();
    if (alpha.empty()) {
        throw ProblemError(ProblemError::Kind::InvalidAlpha, "cut set alpha must be non-empty (problem has no terms)");
    }
    const int dim = dimension(alpha, p.n);
    if (alpha_override) {
        for (const auto& t : p.terms) {
            if (!alpha.contains(t.a)) {
                throw ProblemError(ProblemError::Kind::InvalidAlpha,
                                   "cut " + std::to_string(t.a) + " is not in alpha " + format_cut_set(alpha));
            }
        }
    }
    if (p.total_size() != dim) {
        throw ProblemError(ProblemError::Kind::DimensionMismatch,
                           "dimension condition: |lambda_1| + ... + |lambda_s| = " + std::to_string(p.total_size()) +
                               " but dim(" + format_cut_set(alpha) + ") = " + std::to_string(dim));
    }
    return alpha;
}

/// Inserts the cut b: adds the term (b, kappa) where kappa is the rectangle
/// with b - alpha_i rows and alpha_{i+1} - b columns, alpha_i < b < alpha_{i+1}
/// being the neighbouring cuts (alpha_0 = 0, alpha_{m+1} = n). The
/// intersection number is unchanged.
inline SchubertProblem refine_problem(const SchubertProblem& p, int b)
{
    const auto alpha = p.cuts();
    if (b < 1 || b > p.n - 1) {
        throw std::invalid_argument("new cut " + std::to_string(b) + " outside {1.." + std::to_string(p.n - 1) + "}");
    }
    if (alpha.contains(b)) {
        throw std::invalid_argument("cut " + std::to_string(b) + " is already in alpha");
    }
    const auto above = alpha.upper_bound(b);
    const int next = above == alpha.end() ? p.n : *above;
    const int prev = above == alpha.begin() ? 0 : *std::prev(above);
    const Term inserted{b, Partition::rectangle(b - prev, next - b)};

    SchubertProblem out{p.n, {}};
    const auto pos = std::find_if(p.terms.begin(), p.terms.end(), [&](const Term& t) { return t.a > b; });
    out.terms.assign(p.terms.begin(), pos);
    out.terms.push_back(inserted);
    out.terms.insert(out.terms.end(), pos, p.terms.end());
    return out;
}

} // namespace schubert_lr
