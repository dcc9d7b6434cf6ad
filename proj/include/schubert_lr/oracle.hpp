#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "filtered_tableau.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "problem.hpp"
#include "schubert_polynomial.hpp"
#include "skew_tableau.hpp"

// Independent verification route. Nothing in this header counts filtered
// tableaux: products are formed from Schubert polynomials of Grassmannian
// permutations and read off through Poincare duality in the cohomology of
// the complete flag manifold.

namespace schubert_lr {

/// Product of the first `prefix` classes pi_{a_i}^* sigma_{lambda_i} in the
/// cohomology ring of the complete flag manifold, as a reduced polynomial.
inline ExactPolynomial problem_product(const SchubertProblem& p, std::size_t prefix)
{
    check_terms(p);
    if (prefix > p.terms.size()) {
        throw std::invalid_argument("prefix longer than the problem");
    }
    auto f = ExactPolynomial::constant(1);
    for (std::size_t i = 0; i < prefix; ++i) {
        const auto& t = p.terms[i];
        f = reduce_mod_coinvariants(f * schubert_polynomial(grassmannian_permutation(t.a, t.lambda, p.n)), p.n);
    }
    return f;
}

inline ExactPolynomial problem_product(const SchubertProblem& p) { return problem_product(p, p.terms.size()); }

/// Coefficient of sigma_w in the product of the problem's classes, paired
/// against the dual class sigma_{w0 w}. Zero when length(w) differs from the
/// total degree.
inline Integer oracle_coefficient(const Permutation& w, const SchubertProblem& p)
{
    check_terms(p);
    if (w.size() != p.n) {
        throw std::invalid_argument("permutation size differs from the problem's n");
    }
    if (w.length() != p.total_size()) {
        return 0;
    }
    return staircase_coefficient(problem_product(p) * schubert_polynomial(w.dual()), p.n);
}

/// Coefficient of the point class of the partial flag manifold for alpha,
/// computed as the coefficient of its pullback sigma_{w_alpha}, where
/// w_alpha is the longest permutation with descents in alpha.
inline Integer oracle_intersection_number(const SchubertProblem& p,
                                          const std::optional<std::set<int>>& alpha_override = {})
{
    const auto alpha = validate_problem(p, alpha_override);
    return oracle_coefficient(longest_with_descents_in(alpha, p.n), p);
}

/// sigma_w * pi_a^* (box) = sum of sigma_{w r_jk} over j <= a < k with
/// length(w r_jk) = length(w) + 1.
inline SchubertClassExpansion monk_multiply(const Permutation& w, int a)
{
    const int n = w.size();
    if (a < 1 || a > n - 1) {
        throw std::invalid_argument("Monk cut must lie in [1, n-1]");
    }
    SchubertClassExpansion out;
    const int len = w.length();
    for (int j = 1; j <= a; ++j) {
        for (int k = a + 1; k <= n; ++k) {
            auto u = w.swap_positions(j, k);
            if (u.length() == len + 1) {
                out[u] = checked_add(out[u], 1);
            }
        }
    }
    return out;
}

/// Runs Monk's rule term by term from the identity and reads off the
/// coefficient of the point class of the partial flag manifold.
inline Integer iterate_monk(const SchubertProblem& p)
{
    const auto alpha = validate_problem(p);
    if (!p.all_boxes()) {
        throw std::invalid_argument("iterate_monk requires every partition to be a single box");
    }
    SchubertClassExpansion current{{Permutation::identity(p.n), 1}};
    for (const auto& t : p.terms) {
        SchubertClassExpansion next;
        for (const auto& [w, c] : current) {
            for (const auto& [u, d] : monk_multiply(w, t.a)) {
                next[u] = checked_add(next[u], checked_mul(c, d));
            }
        }
        current = std::move(next);
    }
    auto it = current.find(longest_with_descents_in(alpha, p.n));
    return it == current.end() ? 0 : it->second;
}

/// v <=_a w: (1) w(i) >= v(i) and w(j) <= v(j) whenever i <= a < j;
/// (2) relative order of v is kept within positions 1..a and within a+1..n
/// wherever v increases.
inline bool a_bruhat_leq(const Permutation& v, const Permutation& w, int a)
{
    if (v.size() != w.size()) {
        throw std::invalid_argument("a-Bruhat comparison of permutations of different sizes");
    }
    const int n = v.size();
    for (int i = 1; i <= a && i <= n; ++i) {
        if (w(i) < v(i)) {
            return false;
        }
    }
    for (int j = a + 1; j <= n; ++j) {
        if (w(j) > v(j)) {
            return false;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const bool same_side = j <= a || i > a;
            if (same_side && v(i) < v(j) && !(w(i) < w(j))) {
                return false;
            }
        }
    }
    return true;
}

/// Expands the product of the first `prefix` classes and checks that every
/// Schubert class appearing with a positive coefficient is indexed by a
/// permutation without descents after a_prefix.
inline bool descent_support_check(const SchubertProblem& p, std::size_t prefix)
{
    if (prefix == 0) {
        return true;
    }
    const int last = p.terms.at(prefix - 1).a;
    for (const auto& [w, c] : expand_in_flag_cohomology(problem_product(p, prefix), p.n)) {
        if (c > 0 && !descent_set(w).empty() && *descent_set(w).rbegin() > last) {
            return false;
        }
    }
    return true;
}

/// Both sides of c^w_{v,a,lambda} = c^{mu(w)|a / mu(v)|a}_lambda for valley
/// permutations with a common floor a: the left from the oracle, the right
/// from LR tableaux of the restricted skew shape.
inline std::pair<Integer, Integer> coefficient_identity_sides(const ValleyPermutation& v, const ValleyPermutation& w,
                                                              const Partition& lambda)
{
    const int n = v.permutation().size();
    const int a = v.floor();
    if (w.permutation().size() != n || w.floor() != a) {
        throw std::invalid_argument("valley permutations must share n and floor");
    }
    if (a > n - 1) {
        throw std::invalid_argument("floor must lie in [1, n-1]");
    }
    if (!w.mu().contains(v.mu())) {
        throw std::invalid_argument("mu(v) is not contained in mu(w)");
    }
    if (!fits_in_rectangle(lambda, a, n)) {
        throw std::invalid_argument("lambda does not fit in the rectangle for the floor");
    }
    Integer lhs = 0;
    if (w.permutation().length() == v.permutation().length() + lambda.size()) {
        const auto product = schubert_polynomial(v.permutation()) *
                             schubert_polynomial(grassmannian_permutation(a, lambda, n)) *
                             schubert_polynomial(w.permutation().dual());
        lhs = staircase_coefficient(product, n);
    }
    const SkewShape skew(w.shape().restrict_to_rectangle(a), v.shape().restrict_to_rectangle(a));
    return {lhs, lr_coefficient(skew, lambda)};
}

inline bool coefficient_identity_check(const ValleyPermutation& v, const ValleyPermutation& w, const Partition& lambda)
{
    const auto [lhs, rhs] = coefficient_identity_sides(v, w, lambda);
    return lhs == rhs;
}

} // namespace schubert_lr
