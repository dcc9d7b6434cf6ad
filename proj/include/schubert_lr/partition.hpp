#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert_lr {

/// A weakly decreasing sequence of row lengths, drawn as left-justified
/// rows of boxes (English orientation, rows numbered from the top).
///
/// Trailing zero rows are stripped at construction, so every partition has
/// exactly one representation; the empty partition has no rows.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows))
    {
        while (!rows_.empty() && rows_.back() == 0) {
            rows_.pop_back();
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0) {
                throw std::invalid_argument("partition rows must be non-negative");
            }
            if (i > 0 && rows_[i] > rows_[i - 1]) {
                throw std::invalid_argument("partition rows must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// Rectangular partition with `height` rows of `width` boxes.
    static Partition rectangle(int height, int width)
    {
        if (height < 0 || width < 0) {
            throw std::invalid_argument("rectangle dimensions must be non-negative");
        }
        return Partition(std::vector<int>(width == 0 ? 0 : height, width));
    }

    const std::vector<int>& rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }

    /// Length of row `i` (0-indexed); zero past the last row.
    int row(int i) const noexcept
    {
        return i >= 0 && i < num_rows() ? rows_[static_cast<std::size_t>(i)] : 0;
    }

    int first_row() const noexcept { return row(0); }

    int size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

    /// Number of boxes in column `j` (0-indexed).
    int column(int j) const noexcept
    {
        int count = 0;
        while (count < num_rows() && rows_[static_cast<std::size_t>(count)] > j) {
            ++count;
        }
        return count;
    }

    /// Componentwise containment: every box of `other` is a box of this.
    bool contains(const Partition& other) const noexcept
    {
        if (other.num_rows() > num_rows()) {
            return false;
        }
        for (int i = 0; i < other.num_rows(); ++i) {
            if (other.row(i) > row(i)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const
    {
        if (rows_.empty()) {
            return "-";
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << rows_[i];
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> rows_;
};

/// True iff `lambda` fits in the b x (n-b) rectangle indexing Schubert
/// classes of Gr(b, n).
inline bool fits_in_rectangle(const Partition& lambda, int b, int n)
{
    if (n < 2 || b < 1 || b > n - 1) {
        throw std::invalid_argument("rectangle height must lie in [1, n-1]");
    }
    return lambda.num_rows() <= b && lambda.first_row() <= n - b;
}

/// All partitions inside a `height` x `width` rectangle, in lexicographic
/// order of their row vectors.
inline std::vector<Partition> partitions_in_rectangle(int height, int width)
{
    std::vector<Partition> out;
    std::vector<int> rows(static_cast<std::size_t>(height), 0);
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == height) {
            out.emplace_back(rows);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            rows[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
        rows[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, width);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.rows() < b.rows(); });
    return out;
}

/// All partitions of `size` fitting in a `height` x `width` rectangle.
inline std::vector<Partition> partitions_of_size(int size, int height, int width)
{
    std::vector<Partition> out;
    for (auto& p : partitions_in_rectangle(height, width)) {
        if (p.size() == size) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace schubert_lr
