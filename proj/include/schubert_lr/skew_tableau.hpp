#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "partition.hpp"

namespace schubert_lr {

/// The boxes of `outer` not in `inner`.
class SkewShape {
public:
    SkewShape() = default;

    SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!outer_.contains(inner_)) {
            throw std::invalid_argument("skew shape " + outer_.to_string() + "/" + inner_.to_string() +
                                        ": inner partition is not contained in outer");
        }
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }

    /// Boxes of row r (1-indexed) occupy columns first_column(r)..last_column(r).
    int first_column(int r) const noexcept { return inner_.row(r - 1) + 1; }
    int last_column(int r) const noexcept { return outer_.row(r - 1); }
    int row_size(int r) const noexcept { return last_column(r) - first_column(r) + 1; }
    int num_rows() const noexcept { return outer_.num_rows(); }

    bool contains_box(int r, int c) const noexcept
    {
        return r >= 1 && c >= first_column(r) && c <= last_column(r);
    }

    /// Boxes in row-major order (top row first, left to right).
    std::vector<std::pair<int, int>> boxes() const
    {
        std::vector<std::pair<int, int>> out;
        for (int r = 1; r <= num_rows(); ++r) {
            for (int c = first_column(r); c <= last_column(r); ++c) {
                out.emplace_back(r, c);
            }
        }
        return out;
    }

    bool operator==(const SkewShape&) const = default;

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

private:
    Partition outer_;
    Partition inner_;
};

/// A filling of a skew shape with positive integers. Entries are stored in
/// row-major box order; box (r, c) is 1-indexed, rows downward.
class SkewTableau {
public:
    SkewTableau() = default;

    SkewTableau(SkewShape shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries))
    {
        if (static_cast<int>(entries_.size()) != shape_.size()) {
            throw std::invalid_argument("tableau has " + std::to_string(entries_.size()) + " entries for " +
                                        std::to_string(shape_.size()) + " boxes");
        }
        for (int v : entries_) {
            if (v < 1) {
                throw std::invalid_argument("tableau entries must be positive");
            }
        }
    }

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    int at(int r, int c) const
    {
        if (!shape_.contains_box(r, c)) {
            throw std::out_of_range("box (" + std::to_string(r) + "," + std::to_string(c) + ") not in skew shape");
        }
        int offset = 0;
        for (int i = 1; i < r; ++i) {
            offset += std::max(0, shape_.row_size(i));
        }
        return entries_[static_cast<std::size_t>(offset + c - shape_.first_column(r))];
    }

    /// Number of entries equal to j.
    int content(int j) const { return static_cast<int>(std::count(entries_.begin(), entries_.end(), j)); }

    /// Entries read right to left across each row, top row first.
    std::vector<int> reading_word() const
    {
        std::vector<int> word;
        for (int r = 1; r <= shape_.num_rows(); ++r) {
            for (int c = shape_.last_column(r); c >= shape_.first_column(r); --c) {
                word.push_back(at(r, c));
            }
        }
        return word;
    }

    bool operator==(const SkewTableau&) const = default;
    bool operator<(const SkewTableau& o) const { return entries_ < o.entries_; }

private:
    SkewShape shape_;
    std::vector<int> entries_;
};

/// Every prefix has at least as many i's as (i+1)'s.
inline bool is_ballot_word(const std::vector<int>& word)
{
    std::vector<int> seen;
    for (int v : word) {
        if (v < 1) {
            return false;
        }
        if (static_cast<int>(seen.size()) < v) {
            seen.resize(static_cast<std::size_t>(v), 0);
        }
        ++seen[static_cast<std::size_t>(v - 1)];
        if (v > 1 && seen[static_cast<std::size_t>(v - 1)] > seen[static_cast<std::size_t>(v - 2)]) {
            return false;
        }
    }
    return true;
}

/// Rows weakly increase, columns strictly increase.
inline bool is_semistandard(const SkewTableau& t)
{
    const auto& sh = t.shape();
    for (int r = 1; r <= sh.num_rows(); ++r) {
        for (int c = sh.first_column(r); c <= sh.last_column(r); ++c) {
            if (sh.contains_box(r, c + 1) && t.at(r, c) > t.at(r, c + 1)) {
                return false;
            }
            if (sh.contains_box(r + 1, c) && t.at(r, c) >= t.at(r + 1, c)) {
                return false;
            }
        }
    }
    return true;
}

/// Littlewood-Richardson condition: semistandard, content lambda, ballot
/// reading word.
inline bool is_lr_tableau(const SkewTableau& t, const Partition& lambda)
{
    if (t.shape().size() != lambda.size()) {
        return false;
    }
    for (int v : t.entries()) {
        if (v > lambda.num_rows()) {
            return false;
        }
    }
    for (int j = 1; j <= lambda.num_rows(); ++j) {
        if (t.content(j) != lambda.row(j - 1)) {
            return false;
        }
    }
    return is_semistandard(t) && is_ballot_word(t.reading_word());
}

namespace detail {

/// Row-by-row backtracking over LR fillings. Each row is chosen as a whole
/// weakly increasing sequence, in lexicographic order, so the emitted
/// tableaux come out in row-major lexicographic order. Partial rows are
/// pruned on column strictness, content overflow and ballot violations.
template <typename Visit>
void for_each_lr_filling(const SkewShape& shape, const Partition& lambda, Visit&& visit)
{
    if (shape.size() != lambda.size()) {
        return;
    }
    const int max_entry = lambda.num_rows();
    const int rows = shape.num_rows();
    // grid[r][c], 1-indexed, 0 marks boxes outside the skew shape.
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows) + 2,
                                       std::vector<int>(static_cast<std::size_t>(shape.outer().first_row()) + 2, 0));
    std::vector<int> used(static_cast<std::size_t>(max_entry) + 2, 0);
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(shape.size()));

    auto fill_row = [&](auto&& self_row, auto&& self_all, int r, int c, int min_val) -> void {
        if (c > shape.last_column(r)) {
            // Row complete: ballot check on this row read right to left.
            std::vector<int> counts = used;
            for (int cc = shape.first_column(r); cc <= shape.last_column(r); ++cc) {
                --counts[static_cast<std::size_t>(grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)])];
            }
            for (int cc = shape.last_column(r); cc >= shape.first_column(r); --cc) {
                const int v = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
                ++counts[static_cast<std::size_t>(v)];
                if (v > 1 && counts[static_cast<std::size_t>(v)] > counts[static_cast<std::size_t>(v - 1)]) {
                    return;
                }
            }
            self_all(self_all, r + 1);
            return;
        }
        int lo = min_val;
        if (r > 1 && shape.contains_box(r - 1, c)) {
            lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        }
        // Entries in row r of an LR tableau never exceed r.
        const int hi = std::min(max_entry, r);
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<std::size_t>(v)] >= lambda.row(v - 1)) {
                continue;
            }
            ++used[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            entries.push_back(v);
            self_row(self_row, self_all, r, c + 1, v);
            entries.pop_back();
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            --used[static_cast<std::size_t>(v)];
        }
    };

    auto fill_all = [&](auto&& self_all, int r) -> void {
        if (r > rows) {
            visit(entries);
            return;
        }
        fill_row(fill_row, self_all, r, shape.first_column(r), 1);
    };

    fill_all(fill_all, 1);
}

} // namespace detail

/// All LR tableaux of the given skew shape and content, in row-major
/// lexicographic order of their entries.
inline std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& lambda)
{
    std::vector<SkewTableau> out;
    detail::for_each_lr_filling(shape, lambda,
                                [&](const std::vector<int>& entries) { out.emplace_back(shape, entries); });
    return out;
}

/// c^{outer/inner}_lambda: the number of LR tableaux.
inline Integer lr_coefficient(const SkewShape& shape, const Partition& lambda)
{
    Integer count = 0;
    detail::for_each_lr_filling(shape, lambda, [&](const std::vector<int>&) { count = checked_add(count, 1); });
    return count;
}

} // namespace schubert_lr
