#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"

namespace schubert_lr {

inline constexpr int kMaxVariables = 16;

/// Exponent vector of a monomial x_1^{e_1} ... x_16^{e_16}.
using Monomial = std::array<std::uint8_t, kMaxVariables>;

inline Monomial make_monomial(const std::vector<int>& exponents)
{
    if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
        throw std::invalid_argument("too many variables in monomial");
    }
    Monomial m{};
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255) {
            throw std::invalid_argument("monomial exponent out of range");
        }
        m[i] = static_cast<std::uint8_t>(exponents[i]);
    }
    return m;
}

inline int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (auto e : m) {
        d += e;
    }
    return d;
}

/// Lexicographic order with x_16 > x_15 > ... > x_1: exponents are compared
/// starting from the last variable.
struct TermOrder {
    bool operator()(const Monomial& x, const Monomial& y) const noexcept
    {
        for (int i = kMaxVariables - 1; i >= 0; --i) {
            if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)]) {
                return x[static_cast<std::size_t>(i)] < y[static_cast<std::size_t>(i)];
            }
        }
        return false;
    }
};

/// Multivariate polynomial with exact integer coefficients. No zero
/// coefficient is ever stored; all arithmetic is overflow-checked.
class ExactPolynomial {
public:
    using Terms = std::map<Monomial, Integer, TermOrder>;

    ExactPolynomial() = default;

    static ExactPolynomial constant(Integer c)
    {
        ExactPolynomial p;
        p.add_term(Monomial{}, c);
        return p;
    }

    /// x_i, 1-indexed.
    static ExactPolynomial variable(int i)
    {
        if (i < 1 || i > kMaxVariables) {
            throw std::invalid_argument("variable index out of range");
        }
        Monomial m{};
        m[static_cast<std::size_t>(i - 1)] = 1;
        ExactPolynomial p;
        p.add_term(m, 1);
        return p;
    }

    static ExactPolynomial monomial(const std::vector<int>& exponents, Integer c = 1)
    {
        ExactPolynomial p;
        p.add_term(make_monomial(exponents), c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }

    Integer coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& m, Integer c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Largest term in TermOrder.
    std::optional<std::pair<Monomial, Integer>> leading_term() const
    {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return *terms_.rbegin();
    }

    /// The common degree of all terms, or nothing when the polynomial is not
    /// homogeneous. The zero polynomial is homogeneous of every degree and
    /// reports `fallback`.
    std::optional<int> homogeneous_degree(int fallback = 0) const
    {
        if (terms_.empty()) {
            return fallback;
        }
        const int d = monomial_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_) {
            if (monomial_degree(m) != d) {
                return std::nullopt;
            }
        }
        return d;
    }

    /// Highest variable index that occurs.
    int num_variables() const noexcept
    {
        int k = 0;
        for (const auto& [m, c] : terms_) {
            for (int i = kMaxVariables; i > k; --i) {
                if (m[static_cast<std::size_t>(i - 1)] != 0) {
                    k = i;
                    break;
                }
            }
        }
        return k;
    }

    ExactPolynomial& operator+=(const ExactPolynomial& o)
    {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    ExactPolynomial& operator-=(const ExactPolynomial& o)
    {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, checked_sub(0, c));
        }
        return *this;
    }

    ExactPolynomial scaled(Integer k) const
    {
        ExactPolynomial out;
        for (const auto& [m, c] : terms_) {
            out.add_term(m, checked_mul(c, k));
        }
        return out;
    }

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }

    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b)
    {
        ExactPolynomial out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    const int e = ma[i] + mb[i];
                    if (e > 255) {
                        throw std::overflow_error("monomial exponent overflow");
                    }
                    m[i] = static_cast<std::uint8_t>(e);
                }
                out.add_term(m, checked_mul(ca, cb));
            }
        }
        return out;
    }

    /// The divided difference (f - s_i f) / (x_i - x_{i+1}), 1-indexed.
    ExactPolynomial divided_difference(int i) const
    {
        if (i < 1 || i >= kMaxVariables) {
            throw std::invalid_argument("divided difference index out of range");
        }
        const auto xi = static_cast<std::size_t>(i - 1);
        const auto xj = static_cast<std::size_t>(i);
        ExactPolynomial out;
        for (const auto& [m, c] : terms_) {
            const int p = m[xi];
            const int q = m[xj];
            if (p == q) {
                continue;
            }
            // (x^p y^q - x^q y^p) / (x - y) = sign * sum_k x^{hi-1-k} y^{lo+k}
            const int hi = std::max(p, q);
            const int lo = std::min(p, q);
            const Integer coef = p > q ? c : checked_sub(0, c);
            for (int k = 0; k < hi - lo; ++k) {
                Monomial t = m;
                t[xi] = static_cast<std::uint8_t>(hi - 1 - k);
                t[xj] = static_cast<std::uint8_t>(lo + k);
                out.add_term(t, coef);
            }
        }
        return out;
    }

    bool operator==(const ExactPolynomial&) const = default;

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Integer mag = c;
            if (c < 0) {
                os << (first ? "-" : " - ");
                mag = -c;
            } else if (!first) {
                os << " + ";
            }
            const bool unit = monomial_degree(m) == 0;
            if (mag != 1 || unit) {
                os << mag;
            }
            bool need_star = mag != 1 && !unit;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) {
                    continue;
                }
                os << (need_star ? "*" : "") << 'x' << (i + 1);
                if (m[i] > 1) {
                    os << '^' << static_cast<int>(m[i]);
                }
                need_star = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    Terms terms_;
};

} // namespace schubert_lr
