/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cenda/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace cenda {

namespace {

constexpr unsigned kMaxExponent = 100000;

// Character scanner with 1-based source coordinates for diagnostics.
struct Scanner {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    explicit Scanner(const std::string& text, std::size_t line0 = 1, std::size_t col0 = 1)
        : s(text), line(line0), col(col0) {}

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    char take() {
        char c = s[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && (std::isspace(static_cast<unsigned char>(peek())) != 0)) take();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    unsigned long take_digits() {
        if (eof() || std::isdigit(static_cast<unsigned char>(peek())) == 0) fail("expected digits");
        unsigned long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            v = v * 10 + static_cast<unsigned long>(take() - '0');
            if (v > 1000000000UL) fail("number too large");
        }
        return v;
    }
};

// One parsed monomial: rational coefficient and one exponent per variable slot.
struct Monomial {
    Rat coeff = 1;
    unsigned exp[2] = {0, 0};
};

// Generic sum-of-terms parser. `slot_of` maps a variable letter to a slot
// index (0 or 1) or -1 when the letter is not allowed in this context.
template <class SlotOf, class Emit>
void parse_poly_generic(Scanner& sc, SlotOf slot_of, Emit emit) {
    sc.skip_ws();
    if (sc.eof()) sc.fail("empty polynomial");
    bool first = true;
    while (true) {
        sc.skip_ws();
        if (sc.eof()) {
            if (first) sc.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (sc.peek() == '+' || sc.peek() == '-') {
            sign = sc.peek() == '-' ? -1 : 1;
            sc.take();
        } else if (!first) {
            sc.fail("expected '+' or '-' between terms");
        }
        sc.skip_ws();

        Monomial m;
        if (sign < 0) m.coeff = -m.coeff;
        bool have_factor = false;
        while (true) {
            sc.skip_ws();
            if (!sc.eof() && std::isdigit(static_cast<unsigned char>(sc.peek())) != 0) {
                unsigned long num = sc.take_digits();
                unsigned long den = 1;
                if (!sc.eof() && sc.peek() == '/') {
                    sc.take();
                    sc.skip_ws();
                    den = sc.take_digits();
                    if (den == 0) sc.fail("zero denominator");
                }
                m.coeff *= Rat(static_cast<long>(num), static_cast<long>(den));
                have_factor = true;
            } else if (!sc.eof() && std::isalpha(static_cast<unsigned char>(sc.peek())) != 0) {
                char letter = sc.peek();
                int slot = slot_of(letter);
                if (slot < 0) sc.fail(std::string("unexpected variable '") + letter + "'");
                sc.take();
                unsigned long e = 1;
                sc.skip_ws();
                if (!sc.eof() && sc.peek() == '^') {
                    sc.take();
                    sc.skip_ws();
                    e = sc.take_digits();
                    if (e > kMaxExponent) sc.fail("exponent too large");
                }
                m.exp[slot] += static_cast<unsigned>(e);
                have_factor = true;
            } else {
                sc.fail("expected a coefficient or a variable");
            }
            sc.skip_ws();
            if (!sc.eof() && sc.peek() == '*') {
                sc.take();
                continue;
            }
            break;
        }
        if (!have_factor) sc.fail("empty term");
        emit(m);
        first = false;
    }
}

Poly2 parse_poly2_at(const std::string& text, std::size_t line0, std::size_t col0) {
    Scanner sc(text, line0, col0);
    Poly2 p;
    parse_poly_generic(
        sc,
        [](char c) -> int {
            if (c == 'D') return 0;
            if (c == 'x') return 1;
            return -1;
        },
        [&](const Monomial& m) { p += Poly2::monomial(m.exp[0], m.exp[1], m.coeff); });
    return p;
}

Poly1 parse_poly1_at(const std::string& text, const std::string& letters, Var tag, std::size_t line0,
                     std::size_t col0) {
    Scanner sc(text, line0, col0);
    Poly1 p(tag);
    std::optional<char> seen;
    parse_poly_generic(
        sc,
        [&](char c) -> int {
            if (letters.find(c) == std::string::npos) return -1;
            if (seen && *seen != c) return -1;  // one letter per polynomial
            seen = c;
            return 0;
        },
        [&](const Monomial& m) { p += Poly1::monomial(tag, m.exp[0], m.coeff); });
    return p;
}

// A statement with its source position: "N=2", "rows=3", or "[i,j]: poly".
struct Statement {
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::size_t line = 1;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t start = 0;
        while (start <= raw.size()) {
            auto semi = raw.find(';', start);
            std::string piece = raw.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            std::size_t lead = piece.find_first_not_of(" \t\r");
            if (lead != std::string::npos) {
                std::size_t tail = piece.find_last_not_of(" \t\r");
                out.push_back({piece.substr(lead, tail - lead + 1), line, start + lead + 1});
            }
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        ++line;
    }
    return out;
}

struct EntryStatement {
    std::size_t i, j;          // 1-based
    std::string poly;          // raw polynomial text
    std::size_t line, col;     // position of the polynomial text
};

// Parses "[i,j]: <poly>"; returns false when the statement has another shape.
bool match_entry(const Statement& st, EntryStatement& out) {
    Scanner sc(st.text, st.line, st.col);
    sc.skip_ws();
    if (sc.eof() || sc.peek() != '[') return false;
    sc.take();
    sc.skip_ws();
    out.i = sc.take_digits();
    sc.skip_ws();
    if (sc.eof() || sc.peek() != ',') sc.fail("expected ',' in entry index");
    sc.take();
    sc.skip_ws();
    out.j = sc.take_digits();
    sc.skip_ws();
    if (sc.eof() || sc.peek() != ']') sc.fail("expected ']' in entry index");
    sc.take();
    sc.skip_ws();
    if (sc.eof() || sc.peek() != ':') sc.fail("expected ':' after entry index");
    sc.take();
    out.poly = st.text.substr(sc.pos);
    out.line = sc.line;
    out.col = sc.col;
    return true;
}

// Parses "<key>=<number>"; returns false when the statement has another shape.
bool match_key_number(const Statement& st, const std::string& key, unsigned long& value) {
    Scanner sc(st.text, st.line, st.col);
    sc.skip_ws();
    for (char k : key) {
        if (sc.eof() || sc.peek() != k) return false;
        sc.take();
    }
    sc.skip_ws();
    if (sc.eof() || sc.peek() != '=') return false;
    sc.take();
    sc.skip_ws();
    value = sc.take_digits();
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing characters after " + key + "=<value>");
    return true;
}

}  // namespace

Poly2 parse_poly2(const std::string& text) { return parse_poly2_at(text, 1, 1); }

Poly1 parse_poly1(const std::string& text, const std::string& letters, Var tag) {
    return parse_poly1_at(text, letters, tag, 1, 1);
}

std::vector<ConformalElement> parse_elements(const std::string& text) {
    std::vector<ConformalElement> out;
    std::optional<Matrix<Poly2>> current;
    std::size_t current_n = 0;

    auto flush = [&]() {
        if (current) out.emplace_back(*current);
        current.reset();
    };

    for (const Statement& st : split_statements(text)) {
        unsigned long n = 0;
        EntryStatement entry;
        if (match_key_number(st, "N", n)) {
            flush();
            if (n == 0 || n > 64) throw parse_error("element size out of range", st.line, st.col);
            current_n = n;
            current.emplace(n, n);
        } else if (match_entry(st, entry)) {
            if (!current) throw parse_error("entry before N=<size> header", st.line, st.col);
            if (entry.i == 0 || entry.j == 0 || entry.i > current_n || entry.j > current_n)
                throw parse_error("entry index out of range", st.line, st.col);
            Poly2 p = parse_poly2_at(entry.poly, entry.line, entry.col);
            if (!current->at(entry.i - 1, entry.j - 1).is_zero())
                throw parse_error("duplicate entry", st.line, st.col);
            current->at(entry.i - 1, entry.j - 1) = p;
        } else {
            throw parse_error("expected N=<size> or [i,j]: <poly>", st.line, st.col);
        }
    }
    flush();
    if (out.empty()) throw parse_error("no elements found", 1, 1);
    return out;
}

ConformalElement parse_element(const std::string& text) {
    auto v = parse_elements(text);
    if (v.size() != 1) throw parse_error("expected exactly one element", 1, 1);
    return v.front();
}

Matrix<Poly1> parse_pmat(const std::string& text) {
    std::optional<unsigned long> rows, cols;
    std::optional<Matrix<Poly1>> m;
    for (const Statement& st : split_statements(text)) {
        unsigned long v = 0;
        EntryStatement entry;
        if (match_key_number(st, "rows", v)) {
            if (rows) throw parse_error("duplicate rows=", st.line, st.col);
            if (v == 0 || v > 64) throw parse_error("rows out of range", st.line, st.col);
            rows = v;
        } else if (match_key_number(st, "cols", v)) {
            if (cols) throw parse_error("duplicate cols=", st.line, st.col);
            if (v == 0 || v > 64) throw parse_error("cols out of range", st.line, st.col);
            cols = v;
        } else if (match_entry(st, entry)) {
            if (!rows || !cols) throw parse_error("entry before rows=/cols= header", st.line, st.col);
            if (!m) m.emplace(*rows, *cols, Poly1(Var::Y));
            if (entry.i == 0 || entry.j == 0 || entry.i > *rows || entry.j > *cols)
                throw parse_error("entry index out of range", st.line, st.col);
            if (!m->at(entry.i - 1, entry.j - 1).is_zero()) throw parse_error("duplicate entry", st.line, st.col);
            m->at(entry.i - 1, entry.j - 1) = parse_poly1_at(entry.poly, "yxt", Var::Y, entry.line, entry.col);
        } else {
            throw parse_error("expected rows=, cols= or [i,j]: <poly>", st.line, st.col);
        }
    }
    if (!rows || !cols) throw parse_error("missing rows=/cols= header", 1, 1);
    if (!m) m.emplace(*rows, *cols, Poly1(Var::Y));
    return *m;
}

std::string pmat_str(const Matrix<Poly1>& m) {
    std::ostringstream os;
    os << "rows=" << m.rows() << "\n"
       << "cols=" << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) os << "[" << i + 1 << "," << j + 1 << "]: " << m.at(i, j).str() << "\n";
    return os.str();
}

std::string pmat_str_inline(const Matrix<Poly1>& m) {
    std::ostringstream os;
    os << "rows=" << m.rows() << "; cols=" << m.cols();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) os << "; [" << i + 1 << "," << j + 1 << "]: " << m.at(i, j).str();
    return os.str();
}

}  // namespace cenda
