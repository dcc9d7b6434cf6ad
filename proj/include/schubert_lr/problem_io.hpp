#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "filtered_tableau.hpp"
#include "partition.hpp"
#include "problem.hpp"

namespace schubert_lr {

/// Syntax error in a problem file, with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A parsed problem file. Terms are sorted stably by cut; `original_order[k]`
/// is the 0-based position in the file of the k-th sorted term.
struct ProblemDocument {
    int n = 0;
    std::vector<Term> terms;
    std::vector<std::size_t> original_order;
    std::optional<std::set<int>> alpha;

    SchubertProblem problem() const { return SchubertProblem{n, terms}; }
};

namespace detail {

class LineCursor {
public:
    LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_spaces()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    bool at_end()
    {
        skip_spaces();
        return pos_ >= text_.size();
    }

    bool peek(char c)
    {
        skip_spaces();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, const std::string& what)
    {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail("expected " + what);
        }
        ++pos_;
    }

    int integer(const std::string& what)
    {
        skip_spaces();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected " + what);
        }
        if (pos_ - start > 6) {
            pos_ = start;
            fail(what + " is too large");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    bool keyword(std::string_view word)
    {
        skip_spaces();
        if (text_.substr(pos_, word.size()) == word) {
            const std::size_t after = pos_ + word.size();
            if (after >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[after]))) {
                pos_ = after;
                return true;
            }
        }
        return false;
    }

    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

inline std::set<int> parse_cut_list(LineCursor& cur)
{
    std::set<int> alpha;
    const bool braces = cur.peek('{');
    if (braces) {
        cur.expect('{', "'{'");
    }
    if (!(braces && cur.peek('}'))) {
        do {
            alpha.insert(cur.integer("cut position"));
        } while (cur.peek(',') && (cur.expect(',', "','"), true));
    }
    if (braces) {
        cur.expect('}', "'}'");
    }
    return alpha;
}

} // namespace detail

/// Parses the text form of a cut set: "{2,3,5}" or "2,3,5".
inline std::set<int> parse_cut_set(const std::string& text)
{
    detail::LineCursor cur(text, 1);
    auto alpha = detail::parse_cut_list(cur);
    if (!cur.at_end()) {
        cur.fail("unexpected trailing characters");
    }
    return alpha;
}

/// Problem file grammar, one item per line:
///
///     n = <int>
///     alpha = {i,j,...}        (optional, before the first term)
///     <a> : <r1,r2,...>        (one per term; '-' is the empty partition)
///
/// '#' starts a comment; blank lines are ignored.
inline ProblemDocument parse_problem(std::string_view text)
{
    ProblemDocument doc;
    bool have_n = false;
    std::vector<std::pair<Term, std::size_t>> terms;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        detail::LineCursor cur(line, line_no);
        if (cur.at_end()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (!have_n) {
            if (!cur.keyword("n")) {
                cur.fail("expected 'n = <int>' as the first line");
            }
            cur.expect('=', "'='");
            doc.n = cur.integer("ambient dimension");
            have_n = true;
        } else if (cur.keyword("alpha")) {
            if (doc.alpha || !terms.empty()) {
                cur.fail("'alpha' must appear once, before the terms");
            }
            cur.expect('=', "'='");
            doc.alpha = detail::parse_cut_list(cur);
        } else {
            Term t;
            t.a = cur.integer("cut position");
            cur.expect(':', "':'");
            if (cur.peek('-')) {
                cur.expect('-', "'-'");
            } else {
                std::vector<int> rows;
                const int col = cur.column();
                do {
                    rows.push_back(cur.integer("row length"));
                } while (cur.peek(',') && (cur.expect(',', "','"), true));
                try {
                    t.lambda = Partition(std::move(rows));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(line_no, col, e.what());
                }
            }
            terms.emplace_back(std::move(t), terms.size());
        }
        if (!cur.at_end()) {
            cur.fail("unexpected trailing characters");
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!have_n) {
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'n = <int>' line");
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.a < y.first.a; });
    for (auto& [t, pos] : terms) {
        doc.terms.push_back(std::move(t));
        doc.original_order.push_back(pos);
    }
    return doc;
}

/// Renders a problem in the file grammar.
inline std::string format_problem(const SchubertProblem& p, const std::optional<std::set<int>>& alpha = {})
{
    std::ostringstream os;
    os << "n = " << p.n << '\n';
    if (alpha) {
        os << "alpha = " << format_cut_set(*alpha) << '\n';
    }
    for (const auto& t : p.terms) {
        os << t.a << ": " << t.lambda.to_string() << '\n';
    }
    return os.str();
}

/// Entry glyph: 1-9, then a, b, ... for 10 and up.
inline char entry_glyph(int v)
{
    if (v >= 1 && v <= 9) {
        return static_cast<char>('0' + v);
    }
    if (v >= 10 && v < 36) {
        return static_cast<char>('a' + (v - 10));
    }
    throw std::invalid_argument("tableau entry too large to render");
}

/// One skew step as left-justified rows: '.' for boxes of the inner
/// partition, entry glyphs for the filled boxes.
inline std::string render_skew_tableau(const SkewTableau& t)
{
    std::string out;
    const auto& sh = t.shape();
    for (int r = 1; r <= sh.num_rows(); ++r) {
        out.append(static_cast<std::size_t>(sh.inner().row(r - 1)), '.');
        for (int c = sh.first_column(r); c <= sh.last_column(r); ++c) {
            out += entry_glyph(t.at(r, c));
        }
        out += '\n';
    }
    return out;
}

/// Canonical text of an enumeration: one block per tableau, blank line
/// between blocks, then "count <N>".
inline std::string render_enumeration(const std::vector<FilteredTableau>& tableaux)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < tableaux.size(); ++k) {
        if (k > 0) {
            os << '\n';
        }
        const auto& t = tableaux[k];
        os << "tableau " << (k + 1) << '\n';
        for (std::size_t i = 0; i < t.fillings.size(); ++i) {
            os << "step " << (i + 1) << " a=" << t.cuts[i] << '\n';
            os << render_skew_tableau(t.fillings[i]);
        }
    }
    if (!tableaux.empty()) {
        os << '\n';
    }
    os << "count " << tableaux.size() << '\n';
    return os.str();
}

} // namespace schubert_lr
