#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace schubert_lr {

/// Formats a cut set as "{2,3,5}".
inline std::string format_cut_set(const std::set<int>& alpha)
{
    std::string out = "{";
    bool first = true;
    for (int a : alpha) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(a);
        first = false;
    }
    return out + "}";
}

inline void check_cut_set(const std::set<int>& alpha, int n)
{
    if (alpha.empty()) {
        throw std::invalid_argument("cut set alpha must be non-empty");
    }
    if (*alpha.begin() < 1 || *alpha.rbegin() > n - 1) {
        throw std::invalid_argument("cut set " + format_cut_set(alpha) + " must lie in {1.." +
                                    std::to_string(n - 1) + "}");
    }
}

/// The union of the rectangles [a rows] x [n-a columns], a in alpha, all
/// sharing the upper-right corner.
///
/// Columns are numbered globally 1..n-1 from the left; the right edge of
/// every rectangle is column n-1, so the rectangle for a occupies rows 1..a
/// and columns a..n-1. Row r of the staircase starts at column
/// min{a in alpha : a >= r}.
class StaircaseShape {
public:
    StaircaseShape(std::set<int> alpha, int n) : alpha_(std::move(alpha)), n_(n)
    {
        check_cut_set(alpha_, n_);
        for (int r = 1; r <= *alpha_.rbegin(); ++r) {
            left_edges_.push_back(*alpha_.lower_bound(r));
        }
    }

    /// The complete flag staircase (n-1, n-2, ..., 1).
    static StaircaseShape full(int n)
    {
        std::set<int> alpha;
        for (int a = 1; a < n; ++a) {
            alpha.insert(a);
        }
        return StaircaseShape(std::move(alpha), n);
    }

    const std::set<int>& alpha() const noexcept { return alpha_; }
    int n() const noexcept { return n_; }
    int num_rows() const noexcept { return static_cast<int>(left_edges_.size()); }

    /// First column of row r (1-indexed); rows past the last are empty.
    int left_edge(int r) const { return left_edges_.at(static_cast<std::size_t>(r - 1)); }

    int row_length(int r) const { return r >= 1 && r <= num_rows() ? n_ - left_edge(r) : 0; }

    Partition rows() const
    {
        std::vector<int> out;
        for (int r = 1; r <= num_rows(); ++r) {
            out.push_back(row_length(r));
        }
        return Partition(std::move(out));
    }

    bool contains_box(int r, int c) const { return r >= 1 && r <= num_rows() && c >= left_edge(r) && c <= n_ - 1; }

    bool operator==(const StaircaseShape& o) const { return alpha_ == o.alpha_ && n_ == o.n_; }

private:
    std::set<int> alpha_;
    int n_;
    std::vector<int> left_edges_;
};

inline StaircaseShape staircase(const std::set<int>& alpha, int n) { return StaircaseShape(alpha, n); }

/// True iff the box (r, c) lies in the rectangle for cut a.
inline bool in_rectangle(int r, int c, int a) noexcept { return r <= a && c >= a; }

/// A northwest-justified set of boxes inside a staircase.
///
/// `rows()` counts boxes per row, each row starting at the staircase's left
/// edge for that row. Northwest justification means the boxes of row r sit
/// directly below boxes of row r-1, so a row may be no longer than the row
/// above minus the shift between their left edges.
class Shape {
public:
    Shape(Partition rows, StaircaseShape bound) : rows_(std::move(rows)), bound_(std::move(bound))
    {
        if (auto why = defect(rows_.rows(), bound_)) {
            throw std::invalid_argument("not a shape in the staircase: " + *why);
        }
    }

    static Shape empty(StaircaseShape bound) { return Shape(Partition{}, std::move(bound)); }

    static Shape whole(const StaircaseShape& bound) { return Shape(bound.rows(), bound); }

    /// Builds the shape whose global column c holds counts[c - 1] boxes, or
    /// nothing when those counts do not describe a shape in `bound`.
    static std::optional<Shape> from_column_counts(const std::vector<int>& counts, const StaircaseShape& bound)
    {
        std::vector<int> rows(static_cast<std::size_t>(bound.num_rows()), 0);
        for (std::size_t j = 0; j < counts.size(); ++j) {
            const int c = static_cast<int>(j) + 1;
            if (counts[j] < 0 || counts[j] > bound.num_rows()) {
                return std::nullopt;
            }
            for (int r = 1; r <= counts[j]; ++r) {
                if (!bound.contains_box(r, c)) {
                    return std::nullopt;
                }
                ++rows[static_cast<std::size_t>(r - 1)];
            }
        }
        if (!is_valid(rows, bound)) {
            return std::nullopt;
        }
        Shape s(Partition(rows), bound);
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (s.column_count(static_cast<int>(j) + 1) != counts[j]) {
                return std::nullopt;
            }
        }
        return s;
    }

    static bool is_valid(const std::vector<int>& rows, const StaircaseShape& bound) { return !defect(rows, bound); }

    const Partition& rows() const noexcept { return rows_; }
    const StaircaseShape& bound() const noexcept { return bound_; }
    int size() const noexcept { return rows_.size(); }

    /// Last occupied column of row r, or left_edge - 1 when the row is empty.
    int right_end(int r) const
    {
        if (r > bound_.num_rows()) {
            return 0;
        }
        return bound_.left_edge(r) + rows_.row(r - 1) - 1;
    }

    bool contains_box(int r, int c) const
    {
        return r >= 1 && r <= bound_.num_rows() && c >= bound_.left_edge(r) && c <= right_end(r);
    }

    bool contains(const Shape& other) const { return rows_.contains(other.rows_); }

    int column_count(int c) const
    {
        int count = 0;
        for (int r = 1; r <= bound_.num_rows(); ++r) {
            count += contains_box(r, c) ? 1 : 0;
        }
        return count;
    }

    /// The part of the shape inside the rectangle for cut b, as a partition
    /// in the rectangle's own coordinates (its column 1 is global column b).
    Partition restrict_to_rectangle(int b) const
    {
        if (!bound_.alpha().contains(b)) {
            throw std::invalid_argument("restriction cut " + std::to_string(b) + " is not in the staircase's cut set");
        }
        std::vector<int> out;
        for (int r = 1; r <= std::min(b, bound_.num_rows()); ++r) {
            out.push_back(std::max(0, right_end(r) - b + 1));
        }
        return Partition(std::move(out));
    }

    bool operator==(const Shape& o) const { return rows_ == o.rows_ && bound_ == o.bound_; }

private:
    static std::optional<std::string> defect(const std::vector<int>& rows, const StaircaseShape& bound)
    {
        if (static_cast<int>(rows.size()) > bound.num_rows()) {
            return "too many rows";
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int r = static_cast<int>(i) + 1;
            if (rows[i] < 0 || rows[i] > bound.row_length(r)) {
                return "row " + std::to_string(r) + " exceeds the staircase";
            }
            if (r > 1 && rows[i] > 0 &&
                bound.left_edge(r) + rows[i] > bound.left_edge(r - 1) + rows[i - 1]) {
                return "row " + std::to_string(r) + " is not covered by the row above";
            }
        }
        return std::nullopt;
    }

    Partition rows_;
    StaircaseShape bound_;
};

/// The restriction nu|_b of a shape in the complete staircase for n.
inline Partition restrict_shape(const Partition& nu, int b, int n)
{
    return Shape(nu, StaircaseShape::full(n)).restrict_to_rectangle(b);
}

} // namespace schubert_lr
