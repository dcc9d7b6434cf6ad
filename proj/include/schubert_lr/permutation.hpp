#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace schubert_lr {

/// A permutation of {1, ..., n} in one-line notation (w(1), ..., w(n)).
/// Positions and values are 1-indexed in the public interface.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word))
    {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("not a permutation of {1..n}");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// The longest permutation n, n-1, ..., 1.
    static Permutation longest(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            w[static_cast<std::size_t>(i)] = n - i;
        }
        return Permutation(std::move(w));
    }

    /// Simple transposition s_i swapping positions i and i+1.
    static Permutation simple(int i, int n)
    {
        if (i < 1 || i >= n) {
            throw std::invalid_argument("simple transposition index out of range");
        }
        auto w = identity(n);
        std::swap(w.word_[static_cast<std::size_t>(i - 1)], w.word_[static_cast<std::size_t>(i)]);
        return w;
    }

    /// Parses either a digit string ("531246", n <= 9) or a comma-separated
    /// list ("10,2,3,...").
    static Permutation parse(const std::string& text)
    {
        std::vector<int> w;
        if (text.find(',') != std::string::npos) {
            std::istringstream is(text);
            std::string item;
            while (std::getline(is, item, ',')) {
                if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
                    throw std::invalid_argument("malformed permutation: " + text);
                }
                w.push_back(std::stoi(item));
            }
        } else {
            if (text.empty() || text.find_first_not_of("123456789") != std::string::npos) {
                throw std::invalid_argument("malformed permutation: " + text);
            }
            for (char c : text) {
                w.push_back(c - '0');
            }
        }
        return Permutation(std::move(w));
    }

    int size() const noexcept { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const noexcept { return word_; }

    /// w(i) for 1-indexed position i.
    int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

    /// Number of inversions.
    int length() const noexcept
    {
        int count = 0;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            for (std::size_t j = i + 1; j < word_.size(); ++j) {
                count += word_[i] > word_[j] ? 1 : 0;
            }
        }
        return count;
    }

    Permutation inverse() const
    {
        std::vector<int> inv(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) {
            inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
        }
        return Permutation(std::move(inv));
    }

    /// Composition (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const
    {
        if (other.size() != size()) {
            throw std::invalid_argument("permutation size mismatch");
        }
        std::vector<int> w(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) {
            w[i] = word_[static_cast<std::size_t>(other.word_[i] - 1)];
        }
        return Permutation(std::move(w));
    }

    /// w * r_{jk}: swaps the entries in positions j and k.
    Permutation swap_positions(int j, int k) const
    {
        auto w = *this;
        std::swap(w.word_.at(static_cast<std::size_t>(j - 1)), w.word_.at(static_cast<std::size_t>(k - 1)));
        return w;
    }

    /// w0 * w: the index of the Poincare-dual Schubert class.
    Permutation dual() const
    {
        auto w = *this;
        const int n = size();
        for (int& v : w.word_) {
            v = n + 1 - v;
        }
        return w;
    }

    /// The same permutation viewed in S_m for m >= n (fixing n+1, ..., m).
    Permutation extended(int m) const
    {
        if (m < size()) {
            throw std::invalid_argument("cannot shrink a permutation");
        }
        auto w = word_;
        for (int v = size() + 1; v <= m; ++v) {
            w.push_back(v);
        }
        return Permutation(std::move(w));
    }

    /// Smallest m such that the permutation fixes every value above m.
    int support_size() const noexcept
    {
        int m = size();
        while (m > 0 && word_[static_cast<std::size_t>(m - 1)] == m) {
            --m;
        }
        return m;
    }

    /// Lehmer code: c_i = #{j > i : w(j) < w(i)}.
    std::vector<int> code() const
    {
        std::vector<int> c(word_.size(), 0);
        for (std::size_t i = 0; i < word_.size(); ++i) {
            for (std::size_t j = i + 1; j < word_.size(); ++j) {
                c[i] += word_[j] < word_[i] ? 1 : 0;
            }
        }
        return c;
    }

    /// The unique permutation of S_infinity with the given Lehmer code,
    /// returned in S_m with m the smallest size that holds it.
    static Permutation from_code(const std::vector<int>& code)
    {
        int m = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (code[i] > 0) {
                m = std::max(m, static_cast<int>(i) + 1 + code[i]);
            }
        }
        std::vector<int> available(static_cast<std::size_t>(m));
        std::iota(available.begin(), available.end(), 1);
        std::vector<int> w;
        for (int i = 0; i < m; ++i) {
            const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
            if (c < 0 || c >= static_cast<int>(available.size())) {
                throw std::invalid_argument("invalid Lehmer code");
            }
            w.push_back(available[static_cast<std::size_t>(c)]);
            available.erase(available.begin() + c);
        }
        return Permutation(std::move(w));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    /// Digit string for n <= 9, comma-separated otherwise.
    std::string to_string() const
    {
        std::ostringstream os;
        const bool commas = size() > 9;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (commas && i > 0) {
                os << ',';
            }
            os << word_[i];
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

private:
    std::vector<int> word_;
};

/// {i : w(i) > w(i+1)}, 1-indexed.
inline std::set<int> descent_set(const Permutation& w)
{
    std::set<int> out;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) {
            out.insert(i);
        }
    }
    return out;
}

/// Every permutation of {1..n}, in lexicographic order.
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// The Grassmannian permutation with descent at b and shape lambda:
/// w(i) = i + lambda(b+1-i) for i <= b, remaining values increasing.
inline Permutation grassmannian_permutation(int b, const Partition& lambda, int n)
{
    if (!fits_in_rectangle(lambda, b, n)) {
        throw std::invalid_argument("partition " + lambda.to_string() + " does not fit in the " +
                                    std::to_string(b) + "x" + std::to_string(n - b) + " rectangle");
    }
    std::vector<int> w;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= b; ++i) {
        const int v = i + lambda.row(b - i);
        w.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
            w.push_back(v);
        }
    }
    return Permutation(std::move(w));
}

/// Inverse of grassmannian_permutation: lambda(b+1-i) = w(i) - i.
inline Partition shape_of_grassmannian(const Permutation& w, int b)
{
    if (b < 1 || b > w.size()) {
        throw std::invalid_argument("descent position out of range");
    }
    for (int d : descent_set(w)) {
        if (d != b) {
            throw std::invalid_argument("permutation " + w.to_string() + " has a descent outside {" +
                                        std::to_string(b) + "}");
        }
    }
    std::vector<int> rows(static_cast<std::size_t>(b));
    for (int i = 1; i <= b; ++i) {
        rows[static_cast<std::size_t>(b - i)] = w(i) - i;
    }
    return Partition(std::move(rows));
}

/// The longest permutation whose descent set lies in `alpha`; its Schubert
/// class is the pullback of the point class of the partial flag manifold.
inline Permutation longest_with_descents_in(const std::set<int>& alpha, int n)
{
    auto w = Permutation::longest(n).word();
    int start = 0;
    std::vector<int> cuts(alpha.begin(), alpha.end());
    cuts.push_back(n);
    for (int cut : cuts) {
        std::sort(w.begin() + start, w.begin() + cut);
        start = cut;
    }
    return Permutation(std::move(w));
}

} // namespace schubert_lr
