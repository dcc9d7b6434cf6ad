#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "problem.hpp"
#include "skew_tableau.hpp"
#include "staircase.hpp"

namespace schubert_lr {

/// A chain of shapes empty = mu_0 <= mu_1 <= ... <= mu_s together with LR
/// fillings of the consecutive differences.
///
/// `fillings[i]` is a tableau on the skew shape
/// (mu_{i+1} restricted to the rectangle for cuts[i]) / (mu_i restricted to
/// the same rectangle), in the rectangle's own coordinates.
struct FilteredTableau {
    std::vector<int> cuts;
    std::vector<Shape> chain;
    std::vector<SkewTableau> fillings;

    const Shape& shape() const { return chain.back(); }
};

/// Returns a description of the first violated condition, or nothing when
/// `t` is a filtered tableau with the problem's content and the given shape.
inline std::optional<std::string> filtered_tableau_defect(const FilteredTableau& t, const SchubertProblem& p,
                                                          const Shape& target)
{
    const auto s = p.terms.size();
    if (t.chain.size() != s + 1 || t.fillings.size() != s || t.cuts.size() != s) {
        return "chain length does not match the number of terms";
    }
    if (t.chain.front().size() != 0) {
        return "chain does not start at the empty shape";
    }
    if (!(t.chain.back() == target)) {
        return "chain does not end at the target shape";
    }
    for (std::size_t i = 0; i < s; ++i) {
        const int a = p.terms[i].a;
        if (t.cuts[i] != a) {
            return "step " + std::to_string(i + 1) + " records the wrong cut";
        }
        const Shape& lo = t.chain[i];
        const Shape& hi = t.chain[i + 1];
        if (!hi.contains(lo)) {
            return "step " + std::to_string(i + 1) + " is not an inclusion";
        }
        for (int r = 1; r <= hi.bound().num_rows(); ++r) {
            for (int c = lo.right_end(r) + 1; c <= hi.right_end(r); ++c) {
                if (!in_rectangle(r, c, a)) {
                    return "step " + std::to_string(i + 1) + " leaves the rectangle for cut " + std::to_string(a);
                }
            }
        }
        const SkewShape skew(hi.restrict_to_rectangle(a), lo.restrict_to_rectangle(a));
        if (!(t.fillings[i].shape() == skew)) {
            return "filling " + std::to_string(i + 1) + " has the wrong skew shape";
        }
        if (!is_lr_tableau(t.fillings[i], p.terms[i].lambda)) {
            return "filling " + std::to_string(i + 1) + " is not an LR tableau of content " +
                   p.terms[i].lambda.to_string();
        }
    }
    if (target.size() != p.total_size()) {
        return "shape size differs from the total content size";
    }
    return std::nullopt;
}

namespace detail {

/// Depth-first search over shape chains mu_1 <= ... <= mu_s ending at a
/// fixed target. At step i the next shape adds |lambda_i| boxes inside the
/// rectangle for a_i; candidates whose LR coefficient vanishes, or which
/// leave target boxes that no later rectangle can reach, are cut.
class ChainSearch {
public:
    ChainSearch(const SchubertProblem& p, Shape target) : problem_(p), target_(std::move(target))
    {
        const auto& alpha = target_.bound().alpha();
        for (const auto& t : p.terms) {
            if (!alpha.contains(t.a)) {
                throw std::invalid_argument("cut " + std::to_string(t.a) + " is not part of the staircase " +
                                            format_cut_set(alpha));
            }
        }
    }

    struct Successor {
        Shape shape;
        SkewShape step;
        Integer weight;
    };

    /// Next shapes after `current` for term `i`, in lexicographic order of
    /// their row vectors.
    std::vector<Successor> successors(const Shape& current, std::size_t i) const
    {
        const auto& bound = target_.bound();
        const int n = bound.n();
        const int a = problem_.terms[i].a;
        const Partition& lambda = problem_.terms[i].lambda;
        const Partition inner = current.restrict_to_rectangle(a);
        const int height = std::min(a, bound.num_rows());
        const int width = n - a;

        std::vector<Successor> out;
        std::vector<int> outer(static_cast<std::size_t>(height), 0);
        auto rec = [&](auto&& self, int r, int cap, int remaining) -> void {
            if (r > height) {
                if (remaining == 0) {
                    consider(current, a, lambda, inner, outer, i, out);
                }
                return;
            }
            const int lo = inner.row(r - 1);
            // A row may only grow inside the rectangle if it already reaches
            // the column just left of it.
            const bool can_grow = lo > 0 || current.right_end(r) >= a - 1;
            const int target_cap = target_.right_end(r) - a + 1;
            const int hi = can_grow ? std::max(lo, std::min({cap, lo + remaining, target_cap})) : lo;
            for (int v = lo; v <= hi; ++v) {
                if (v > cap) {
                    break;
                }
                outer[static_cast<std::size_t>(r - 1)] = v;
                self(self, r + 1, v, remaining - (v - lo));
            }
            outer[static_cast<std::size_t>(r - 1)] = 0;
        };
        if (height >= 1) {
            rec(rec, 1, width, lambda.size());
        } else if (lambda.size() == 0) {
            consider(current, a, lambda, inner, outer, i, out);
        }
        std::sort(out.begin(), out.end(),
                  [](const Successor& x, const Successor& y) { return x.shape.rows().rows() < y.shape.rows().rows(); });
        return out;
    }

    const SchubertProblem& problem() const { return problem_; }
    const Shape& target() const { return target_; }

private:
    void consider(const Shape& current, int a, const Partition& lambda, const Partition& inner,
                  const std::vector<int>& outer, std::size_t i, std::vector<Successor>& out) const
    {
        const auto& bound = target_.bound();
        std::vector<int> rows = current.rows().rows();
        rows.resize(static_cast<std::size_t>(bound.num_rows()), 0);
        for (std::size_t k = 0; k < outer.size(); ++k) {
            const int r = static_cast<int>(k) + 1;
            if (outer[k] > inner.row(r - 1)) {
                rows[k] = a - bound.left_edge(r) + outer[k];
            }
        }
        if (!Shape::is_valid(rows, bound)) {
            return;
        }
        Shape next(Partition(rows), bound);
        if (!target_.contains(next) || !reachable(next, i + 1)) {
            return;
        }
        SkewShape step(Partition(outer), inner);
        const Integer weight = lr_coefficient(step, lambda);
        if (weight == 0) {
            return;
        }
        out.push_back({std::move(next), std::move(step), weight});
    }

    /// Every box of the target missing from `shape` lies in the rectangle of
    /// some term j >= from.
    bool reachable(const Shape& shape, std::size_t from) const
    {
        for (int r = 1; r <= target_.bound().num_rows(); ++r) {
            const int first_missing = shape.right_end(r) + 1;
            if (first_missing > target_.right_end(r)) {
                continue;
            }
            bool ok = false;
            for (std::size_t j = from; j < problem_.terms.size() && !ok; ++j) {
                const int a = problem_.terms[j].a;
                ok = r <= a && a <= first_missing;
            }
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    const SchubertProblem& problem_;
    Shape target_;
};

struct ShapeChain {
    std::vector<Shape> shapes;
    std::vector<SkewShape> steps;
};

inline void collect_chains(const ChainSearch& search, ShapeChain& prefix, std::vector<ShapeChain>& out)
{
    const std::size_t i = prefix.steps.size();
    if (i == search.problem().terms.size()) {
        if (prefix.shapes.back() == search.target()) {
            out.push_back(prefix);
        }
        return;
    }
    for (auto& succ : search.successors(prefix.shapes.back(), i)) {
        prefix.shapes.push_back(succ.shape);
        prefix.steps.push_back(succ.step);
        collect_chains(search, prefix, out);
        prefix.shapes.pop_back();
        prefix.steps.pop_back();
    }
}

/// Counts by dynamic programming over (step, shape).
class ChainCounter {
public:
    explicit ChainCounter(const ChainSearch& search) : search_(search) {}

    Integer count(const Shape& shape, std::size_t i)
    {
        if (i == search_.problem().terms.size()) {
            return shape == search_.target() ? 1 : 0;
        }
        auto key = std::make_pair(i, shape.rows().rows());
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Integer total = 0;
        for (const auto& succ : search_.successors(shape, i)) {
            total = checked_add(total, checked_mul(succ.weight, count(succ.shape, i + 1)));
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const ChainSearch& search_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

inline int effective_threads(int threads) { return std::max(1, threads); }

} // namespace detail

/// Shape chains (condition (1) plus a non-vanishing LR coefficient at every
/// step) ending at `target`, in lexicographic order.
inline std::vector<std::vector<Shape>> enumerate_shape_chains(const SchubertProblem& p, const Shape& target)
{
    check_terms(p);
    std::vector<std::vector<Shape>> out;
    if (target.size() != p.total_size()) {
        return out;
    }
    detail::ChainSearch search(p, target);
    detail::ShapeChain prefix{{Shape::empty(target.bound())}, {}};
    std::vector<detail::ShapeChain> chains;
    detail::collect_chains(search, prefix, chains);
    for (auto& c : chains) {
        out.push_back(std::move(c.shapes));
    }
    return out;
}

/// All filtered tableaux with shape `target` and content `p`, ordered
/// lexicographically by chain of shapes and then by fillings. The search
/// fans out over the first step's shapes on up to `threads` workers; the
/// output order does not depend on the thread count.
inline std::vector<FilteredTableau> enumerate_filtered_tableaux(const SchubertProblem& p, const Shape& target,
                                                                int threads = 1)
{
    check_terms(p);
    std::vector<FilteredTableau> out;
    if (target.size() != p.total_size()) {
        return out;
    }
    detail::ChainSearch search(p, target);
    const Shape start = Shape::empty(target.bound());

    std::vector<detail::ShapeChain> chains;
    if (p.terms.empty()) {
        if (start == target) {
            chains.push_back({{start}, {}});
        }
    } else {
        const auto first = search.successors(start, 0);
        std::vector<std::vector<detail::ShapeChain>> parts(first.size());
        auto work = [&](std::size_t k) {
            detail::ShapeChain prefix{{start, first[k].shape}, {first[k].step}};
            detail::collect_chains(search, prefix, parts[k]);
        };
        const auto workers = static_cast<std::size_t>(detail::effective_threads(threads));
        for (std::size_t base = 0; base < first.size(); base += workers) {
            std::vector<std::future<void>> jobs;
            for (std::size_t k = base; k < std::min(first.size(), base + workers); ++k) {
                jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, work, k));
            }
            for (auto& j : jobs) {
                j.get();
            }
        }
        for (auto& part : parts) {
            std::move(part.begin(), part.end(), std::back_inserter(chains));
        }
    }

    for (const auto& chain : chains) {
        std::vector<std::vector<SkewTableau>> options;
        for (std::size_t i = 0; i < chain.steps.size(); ++i) {
            options.push_back(enumerate_lr_tableaux(chain.steps[i], p.terms[i].lambda));
        }
        std::vector<std::size_t> pick(options.size(), 0);
        bool done = false;
        while (!done) {
            FilteredTableau t;
            t.chain = chain.shapes;
            for (std::size_t i = 0; i < options.size(); ++i) {
                t.cuts.push_back(p.terms[i].a);
                t.fillings.push_back(options[i][pick[i]]);
            }
            out.push_back(std::move(t));
            // Odometer over the filling choices, last step fastest.
            std::size_t k = options.size();
            while (true) {
                if (k == 0) {
                    done = true;
                    break;
                }
                --k;
                if (++pick[k] < options[k].size()) {
                    break;
                }
                pick[k] = 0;
            }
        }
    }
    return out;
}

/// Number of filtered tableaux with shape `target` and content `p`.
inline Integer count_filtered_tableaux(const SchubertProblem& p, const Shape& target, int threads = 1)
{
    check_terms(p);
    if (target.size() != p.total_size()) {
        return 0;
    }
    detail::ChainSearch search(p, target);
    const Shape start = Shape::empty(target.bound());
    if (p.terms.empty()) {
        return start == target ? 1 : 0;
    }
    const auto first = search.successors(start, 0);
    const auto workers = static_cast<std::size_t>(detail::effective_threads(threads));
    if (workers == 1) {
        detail::ChainCounter counter(search);
        return counter.count(start, 0);
    }
    std::vector<Integer> partial(first.size(), 0);
    for (std::size_t base = 0; base < first.size(); base += workers) {
        std::vector<std::future<void>> jobs;
        for (std::size_t k = base; k < std::min(first.size(), base + workers); ++k) {
            jobs.push_back(std::async(std::launch::async, [&, k] {
                detail::ChainCounter counter(search);
                partial[k] = checked_mul(first[k].weight, counter.count(first[k].shape, 1));
            }));
        }
        for (auto& j : jobs) {
            j.get();
        }
    }
    Integer total = 0;
    for (Integer v : partial) {
        total = checked_add(total, v);
    }
    return total;
}

/// The coefficient of the point class of the partial flag manifold for
/// alpha in the product of the problem's classes: the number of filtered
/// tableaux of the whole staircase. With an explicit alpha strictly larger
/// than {a_i} the coefficient is zero.
inline Integer intersection_number(const SchubertProblem& p, const std::optional<std::set<int>>& alpha_override = {},
                                   int threads = 1)
{
    const auto alpha = validate_problem(p, alpha_override);
    if (alpha != p.cuts()) {
        return 0;
    }
    return count_filtered_tableaux(p, Shape::whole(StaircaseShape(alpha, p.n)), threads);
}

/// A permutation decreasing through position `floor` and increasing after.
class ValleyPermutation {
public:
    const Permutation& permutation() const noexcept { return w_; }
    int floor() const noexcept { return floor_; }

    /// Rows w(1)-1 > w(2)-1 > ... > w(floor)-1, a shape in the complete
    /// staircase.
    const Partition& mu() const noexcept { return mu_; }

    Shape shape() const { return Shape(mu_, StaircaseShape::full(w_.size())); }

    static ValleyPermutation from_permutation(const Permutation& w, int floor)
    {
        const int n = w.size();
        if (floor < 1 || floor > n) {
            throw std::invalid_argument("floor must lie in [1, n]");
        }
        for (int i = 1; i < n; ++i) {
            const bool ok = i < floor ? w(i) > w(i + 1) : w(i) < w(i + 1);
            if (i != floor && !ok) {
                throw std::invalid_argument("not a valley permutation with floor at " + std::to_string(floor) + ": " +
                                            w.to_string());
            }
        }
        std::vector<int> rows;
        for (int i = 1; i <= floor; ++i) {
            rows.push_back(w(i) - 1);
        }
        ValleyPermutation v;
        v.w_ = w;
        v.floor_ = floor;
        v.mu_ = Partition(std::move(rows));
        return v;
    }

    /// Rebuilds w from its shape: w(i) = mu(i) + 1 for i <= floor, the
    /// unused values increasing afterwards.
    static ValleyPermutation from_shape(const Partition& mu, int floor, int n)
    {
        if (floor < 1 || floor > n || mu.num_rows() > floor || mu.num_rows() < floor - 1 || mu.first_row() > n - 1) {
            throw std::invalid_argument("shape " + mu.to_string() + " is incompatible with a valley of floor " +
                                        std::to_string(floor) + " in S_" + std::to_string(n));
        }
        std::vector<int> word;
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (int i = 0; i < floor; ++i) {
            const int v = mu.row(i) + 1;
            if (used[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("shape " + mu.to_string() + " has repeated rows");
            }
            used[static_cast<std::size_t>(v)] = true;
            word.push_back(v);
        }
        for (int v = 1; v <= n; ++v) {
            if (!used[static_cast<std::size_t>(v)]) {
                word.push_back(v);
            }
        }
        return from_permutation(Permutation(std::move(word)), floor);
    }

private:
    Permutation w_;
    int floor_ = 1;
    Partition mu_;
};

inline ValleyPermutation valley_from_permutation(const Permutation& w, int floor)
{
    return ValleyPermutation::from_permutation(w, floor);
}

inline ValleyPermutation valley_from_shape(const Partition& mu, int floor, int n)
{
    return ValleyPermutation::from_shape(mu, floor, n);
}

/// The coefficient of sigma_w in the product of the problem's classes in
/// the cohomology of the complete flag manifold: the number of filtered
/// tableaux with shape mu(w). Zero on a degree mismatch.
inline Integer valley_coefficient(const ValleyPermutation& w, const SchubertProblem& p, int threads = 1)
{
    check_terms(p);
    if (w.permutation().size() != p.n) {
        throw std::invalid_argument("permutation size differs from the problem's n");
    }
    if (w.mu().size() != p.total_size()) {
        return 0;
    }
    return count_filtered_tableaux(p, w.shape(), threads);
}

/// The shape in the staircase for alpha whose column j holds
/// #{k <= j : w(k) > w(j+1)} boxes for every j in {min alpha, ..., n-1}, or
/// nothing when no such shape exists.
inline std::optional<Shape> monk_shape(const Permutation& w, const std::set<int>& alpha, int n)
{
    if (w.size() != n) {
        throw std::invalid_argument("permutation size differs from n");
    }
    StaircaseShape bound(alpha, n);
    std::vector<int> counts(static_cast<std::size_t>(n - 1), 0);
    for (int j = *alpha.begin(); j <= n - 1; ++j) {
        int c = 0;
        for (int k = 1; k <= j; ++k) {
            c += w(k) > w(j + 1) ? 1 : 0;
        }
        counts[static_cast<std::size_t>(j - 1)] = c;
    }
    return Shape::from_column_counts(counts, bound);
}

/// Saturated chains of shapes from empty to the whole staircase whose i-th
/// step adds one box inside the rectangle for a_i.
inline Integer count_monk_chains(const SchubertProblem& p)
{
    const auto alpha = validate_problem(p);
    if (!p.all_boxes()) {
        throw std::invalid_argument("count_monk_chains requires every partition to be a single box");
    }
    const StaircaseShape bound(alpha, p.n);
    std::map<std::vector<int>, Integer> frontier{{std::vector<int>(static_cast<std::size_t>(bound.num_rows()), 0), 1}};
    for (const auto& term : p.terms) {
        std::map<std::vector<int>, Integer> next;
        for (const auto& [rows, ways] : frontier) {
            for (int r = 1; r <= bound.num_rows(); ++r) {
                const int c = bound.left_edge(r) + rows[static_cast<std::size_t>(r - 1)];
                if (!bound.contains_box(r, c) || !in_rectangle(r, c, term.a)) {
                    continue;
                }
                auto grown = rows;
                ++grown[static_cast<std::size_t>(r - 1)];
                if (Shape::is_valid(grown, bound)) {
                    auto& slot = next[grown];
                    slot = checked_add(slot, ways);
                }
            }
        }
        frontier = std::move(next);
    }
    const auto full = bound.rows().rows();
    for (const auto& [rows, ways] : frontier) {
        if (Partition(rows).rows() == full) {
            return ways;
        }
    }
    return 0;
}

} // namespace schubert_lr
