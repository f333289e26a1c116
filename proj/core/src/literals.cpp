/*
 * literals.cpp
 * ------------
 * Tokenizer, recursive-descent parser, and canonical printers.
 */
#include "weyltrace/literals.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace weyltrace {

namespace {

enum class Tok { number, ident, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Tok::end;
            tok_.text.clear();
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::number;
            tok_.text.clear();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                tok_.text.push_back(s_[pos_]);
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            tok_.kind = Tok::ident;
            tok_.text.clear();
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
                tok_.text.push_back(s_[pos_]);
                bump();
            }
            return;
        }
        if (std::string("+-/^[],;").find(c) != std::string::npos) {
            tok_.kind = Tok::punct;
            tok_.text.assign(1, c);
            bump();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    Parser(const std::string& text, int dim) : lx_(text), dim_(dim) {}

    Form element() {
        Form out(dim_);
        out += term();
        while (is_punct("+") || is_punct("-")) {
            const bool neg = lx_.take().text == "-";
            Form t = term();
            if (neg) t *= Rational(-1);
            out += t;
        }
        return out;
    }

    Matrix matrix() {
        expect_ident("mat");
        const long r = natural("matrix rank");
        if (r < 1) lx_.fail("matrix rank must be positive");
        Matrix m(dim_, static_cast<int>(r));
        expect_punct("[");
        for (int i = 0; i < r; ++i) {
            if (i > 0) expect_punct(",");
            expect_punct("[");
            for (int j = 0; j < r; ++j) {
                if (j > 0) expect_punct(",");
                m.at(i, j) = element();
            }
            expect_punct("]");
        }
        expect_punct("]");
        return m;
    }

    std::vector<Matrix> matrix_list(const std::string& keyword) {
        expect_ident(keyword);
        expect_punct("[");
        std::vector<Matrix> out;
        out.push_back(matrix());
        while (is_punct(";")) {
            lx_.take();
            out.push_back(matrix());
        }
        expect_punct("]");
        return out;
    }

    void finish() {
        if (lx_.peek().kind != Tok::end) lx_.fail("trailing input");
    }

  private:
    Form term() {
        Rational coeff = 1;
        bool any = false;
        if (is_punct("-")) {
            lx_.take();
            coeff = -1;
        }
        if (lx_.peek().kind == Tok::number) {
            const long num = natural("numerator");
            coeff *= Rational(num);
            if (is_punct("/")) {
                lx_.take();
                const long den = natural("denominator");
                if (den == 0) lx_.fail("zero denominator");
                coeff /= den;
            }
            any = true;
        }
        TermKey key;
        while (lx_.peek().kind == Tok::ident && lx_.peek().text != "mat" &&
               lx_.peek().text != "chain" && lx_.peek().text != "args") {
            factor(key);
            any = true;
        }
        if (!any) lx_.fail("expected a term");
        Form f(dim_);
        f.add_term(key, coeff);
        return f;
    }

    void factor(TermKey& key) {
        const Token t = lx_.take();
        const std::string& w = t.text;
        if (w == "h" || w == "u") {
            expect_punct("^");
            const long e = integer("exponent");
            if (w == "h")
                key.h = static_cast<std::int16_t>(key.h + e);
            else
                key.u = static_cast<std::int16_t>(key.u + e);
            return;
        }
        if (w.size() > 2 && w.compare(0, 2, "dy") == 0) {
            const int idx = var_index(w.substr(2), t);
            const std::uint8_t bit = static_cast<std::uint8_t>(1u << (idx - 1));
            if (key.dy & bit) throw ParseError(t.line, t.col, "repeated dy factor");
            key.dy |= bit;
            return;
        }
        if (w.size() > 1 && w[0] == 'y') {
            const int idx = var_index(w.substr(1), t);
            long e = 1;
            if (is_punct("^")) {
                lx_.take();
                e = natural("exponent");
            }
            key.y[static_cast<std::size_t>(idx - 1)] =
                static_cast<std::uint8_t>(key.y[static_cast<std::size_t>(idx - 1)] + e);
            return;
        }
        throw ParseError(t.line, t.col, "unknown factor '" + w + "'");
    }

    int var_index(const std::string& digits, const Token& t) const {
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(t.line, t.col, "bad variable index");
        const int idx = std::stoi(digits);
        if (idx < 1 || idx > dim_)
            throw ParseError(t.line, t.col,
                             "variable index " + std::to_string(idx) + " out of range 1.." +
                                 std::to_string(dim_));
        return idx;
    }

    long natural(const std::string& what) {
        if (lx_.peek().kind != Tok::number) lx_.fail("expected " + what);
        return std::stol(lx_.take().text);
    }
    long integer(const std::string& what) {
        long sign = 1;
        if (is_punct("-")) {
            lx_.take();
            sign = -1;
        }
        return sign * natural(what);
    }
    bool is_punct(const char* p) const {
        return lx_.peek().kind == Tok::punct && lx_.peek().text == p;
    }
    void expect_punct(const char* p) {
        if (!is_punct(p)) lx_.fail(std::string("expected '") + p + "'");
        lx_.take();
    }
    void expect_ident(const std::string& w) {
        if (lx_.peek().kind != Tok::ident || lx_.peek().text != w) lx_.fail("expected '" + w + "'");
        lx_.take();
    }

    Lexer lx_;
    int dim_;
};

void append_term_body(std::ostream& os, const Rational& c, const TermKey& k) {
    os << Rational(abs(c)).get_str();
    if (k.h != 0) os << " h^" << k.h;
    if (k.u != 0) os << " u^" << k.u;
    for (int i = 0; i < kMaxVars; ++i) {
        const int e = k.y[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        os << " y" << (i + 1);
        if (e > 1) os << "^" << e;
    }
    for (int i = 0; i < kMaxVars; ++i)
        if (k.dy & (1u << i)) os << " dy" << (i + 1);
}

}  // namespace

Form parse_form(const std::string& text, int dim) {
    Parser p(text, dim);
    Form f = p.element();
    p.finish();
    return f;
}

Matrix parse_matrix(const std::string& text, int dim) {
    Parser p(text, dim);
    Matrix m = p.matrix();
    p.finish();
    return m;
}

Chain parse_chain(const std::string& text, int dim) {
    Parser p(text, dim);
    std::vector<Matrix> ms = p.matrix_list("chain");
    p.finish();
    return Chain::from_matrices(ms);
}

std::vector<Matrix> parse_args(const std::string& text, int dim) {
    Parser p(text, dim);
    std::vector<Matrix> ms = p.matrix_list("args");
    p.finish();
    return ms;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        append_term_body(os, c, k);
    }
    return os.str();
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "mat " << m.rank() << " [";
    for (int i = 0; i < m.rank(); ++i) {
        if (i > 0) os << ", ";
        os << "[";
        for (int j = 0; j < m.rank(); ++j) {
            if (j > 0) os << ", ";
            os << to_string(m.at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_string(const Chain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : c.terms()) {
        if (!first) os << " + ";
        first = false;
        os << coeff.get_str();
        if (k.h != 0) os << " h^" << k.h;
        if (k.u != 0) os << " u^" << k.u;
        os << " [";
        for (std::size_t s = 0; s < k.slots.size(); ++s) {
            if (s > 0) os << " ; ";
            const SlotKey& sl = k.slots[s];
            os << "E" << static_cast<int>(sl.row) + 1 << static_cast<int>(sl.col) + 1;
            for (int i = 0; i < kMaxVars; ++i) {
                const int e = sl.y[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                os << " y" << (i + 1);
                if (e > 1) os << "^" << e;
            }
        }
        os << "]";
    }
    return os.str();
}

std::string ScalarValue::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << Rational(abs(c)).get_str();
        if (k.first != 0) os << " h^" << k.first;
        if (k.second != 0) os << " u^" << k.second;
    }
    return os.str();
}

}  // namespace weyltrace
