#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "integer.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace schubert_lr {

/// Coefficients of a class in the Schubert basis.
using SchubertClassExpansion = std::map<Permutation, Integer>;

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
inline Monomial staircase_monomial(int n)
{
    std::vector<int> e;
    for (int i = 1; i < n; ++i) {
        e.push_back(n - i);
    }
    return make_monomial(e);
}

inline ExactPolynomial staircase_polynomial(int n)
{
    ExactPolynomial p;
    p.add_term(staircase_monomial(n), 1);
    return p;
}

/// A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}. Peels off
/// the first descent when `last_descent` is false, the last one otherwise,
/// so the two choices generally give different words.
inline std::vector<int> reduced_word(const Permutation& w, bool last_descent = false)
{
    std::vector<int> reversed;
    auto u = w;
    while (true) {
        const auto d = descent_set(u);
        if (d.empty()) {
            break;
        }
        const int i = last_descent ? *d.rbegin() : *d.begin();
        reversed.push_back(i);
        u = u.swap_positions(i, i + 1);
    }
    return {reversed.rbegin(), reversed.rend()};
}

/// Applies d_{i_1} d_{i_2} ... d_{i_l} (rightmost first) to the staircase
/// monomial for S_n, where `word` reduces w^{-1} w0.
inline ExactPolynomial schubert_polynomial_from_word(int n, const std::vector<int>& word)
{
    auto f = staircase_polynomial(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        f = f.divided_difference(*it);
    }
    return f;
}

namespace detail {

class SchubertCache {
public:
    ExactPolynomial get(const Permutation& w)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(w.word()); it != cache_.end()) {
                return it->second;
            }
        }
        ExactPolynomial result;
        const int n = w.size();
        if (w == Permutation::longest(n)) {
            result = staircase_polynomial(n);
        } else {
            // S_w = d_i S_{w s_i} at any ascent i of w.
            int i = 1;
            while (w(i) > w(i + 1)) {
                ++i;
            }
            result = get(w.swap_positions(i, i + 1)).divided_difference(i);
        }
        std::lock_guard lock(mutex_);
        cache_.emplace(w.word(), result);
        return result;
    }

private:
    std::mutex mutex_;
    std::map<std::vector<int>, ExactPolynomial> cache_;
};

inline SchubertCache& schubert_cache()
{
    static SchubertCache cache;
    return cache;
}

} // namespace detail

/// The Schubert polynomial of w: the staircase monomial pushed down by
/// divided differences along a reduced word of w^{-1} w0. Stable under
/// embedding S_n into S_{n+1}; homogeneous of degree length(w).
inline ExactPolynomial schubert_polynomial(const Permutation& w)
{
    if (w.size() > kMaxVariables) {
        throw std::invalid_argument("permutation too large for the polynomial representation");
    }
    if (w.size() <= 1) {
        return ExactPolynomial::constant(1);
    }
    // Work in the smallest S_m containing w; the polynomial does not change.
    const int m = std::max(1, w.support_size());
    std::vector<int> word(w.word().begin(), w.word().begin() + m);
    return detail::schubert_cache().get(Permutation(std::move(word)));
}

namespace detail {

/// h_d(x_1, ..., x_k) minus its leading monomial x_k^d, as exponent vectors.
inline const std::vector<Monomial>& coinvariant_tail(int k, int d)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<Monomial>> memo;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(k, d);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    std::vector<Monomial> out;
    Monomial m{};
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == k - 1) {
            m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
            if (left != d) {
                out.push_back(m);
            }
            m[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
            self(self, var + 1, left - e);
        }
        m[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace detail

/// Normal form of f in Z[x_1..x_n] / (symmetric polynomials without
/// constant term), the cohomology ring of the complete flag manifold.
///
/// The ideal has the Groebner basis h_{n-k+1}(x_1, ..., x_k), k = 1..n, for
/// the lexicographic order with x_n largest, with leading terms
/// x_k^{n-k+1}. Normal forms are spanned by the monomials with exponent of
/// x_k at most n-k; in that basis the Schubert polynomials of S_n are
/// already reduced.
inline ExactPolynomial reduce_mod_coinvariants(const ExactPolynomial& f, int n)
{
    if (f.num_variables() > n) {
        throw std::invalid_argument("polynomial involves variables beyond x_n");
    }
    ExactPolynomial::Terms pending = f.terms();
    ExactPolynomial out;
    while (!pending.empty()) {
        // Largest term first: every rewrite produces strictly smaller terms.
        auto it = std::prev(pending.end());
        const Monomial m = it->first;
        const Integer c = it->second;
        pending.erase(it);
        int k = n;
        while (k >= 1 && m[static_cast<std::size_t>(k - 1)] <= n - k) {
            --k;
        }
        if (k == 0) {
            out.add_term(m, c);
            continue;
        }
        const int d = n - k + 1;
        Monomial rest = m;
        rest[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(rest[static_cast<std::size_t>(k - 1)] - d);
        const Integer neg = checked_sub(0, c);
        for (const auto& t : detail::coinvariant_tail(k, d)) {
            Monomial r = rest;
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] = static_cast<std::uint8_t>(r[i] + t[i]);
            }
            auto [pos, inserted] = pending.try_emplace(r, neg);
            if (!inserted) {
                pos->second = checked_add(pos->second, neg);
                if (pos->second == 0) {
                    pending.erase(pos);
                }
            }
        }
    }
    return out;
}

/// Coefficient of the point class: the staircase-monomial coefficient of
/// the normal form modulo the coinvariant ideal. The input must be
/// homogeneous of degree n(n-1)/2.
inline Integer staircase_coefficient(const ExactPolynomial& poly, int n)
{
    const int top = n * (n - 1) / 2;
    const auto d = poly.homogeneous_degree(top);
    if (!d || *d != top) {
        throw std::invalid_argument("staircase_coefficient needs a homogeneous polynomial of degree " +
                                    std::to_string(top));
    }
    return reduce_mod_coinvariants(poly, n).coefficient(staircase_monomial(n));
}

/// Expands a polynomial in the Schubert basis of S_infinity by repeatedly
/// subtracting c * S_u, where u is the permutation whose Lehmer code is the
/// exponent vector of the leading term. Permutations are reported in S_m
/// with m = max(min_size, smallest size holding them).
inline SchubertClassExpansion expand_in_schubert_basis(ExactPolynomial f, int min_size = 0)
{
    SchubertClassExpansion out;
    while (auto lead = f.leading_term()) {
        const auto& [m, c] = *lead;
        std::vector<int> code(m.begin(), m.end());
        auto u = Permutation::from_code(code);
        const auto s = schubert_polynomial(u);
        if (s.leading_term()->first != m) {
            throw std::logic_error("Schubert polynomial leading term does not match its code");
        }
        f -= s.scaled(c);
        if (u.size() < min_size) {
            u = u.extended(min_size);
        }
        out[u] = checked_add(out[u], c);
    }
    return out;
}

/// Expansion of f in the Schubert basis of the cohomology of the complete
/// flag manifold of C^n (every term lies in S_n).
inline SchubertClassExpansion expand_in_flag_cohomology(const ExactPolynomial& f, int n)
{
    auto out = expand_in_schubert_basis(reduce_mod_coinvariants(f, n), n);
    for (const auto& [u, c] : out) {
        if (u.size() != n) {
            throw std::logic_error("reduced polynomial expanded outside S_n");
        }
    }
    return out;
}

} // namespace schubert_lr
