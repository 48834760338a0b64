#include "gengeo/scalar_expr.hpp"

#include <cctype>

namespace gengeo {
namespace {

// Recursive descent over:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | power
//   power  := base ('^' ('-')? digits)?
//   base   := digits | identifier | '(' expr ')'
class Parser {
public:
    Parser(const std::string& text, const ChartPtr& chart) : text_(text), chart_(chart) {}

    ScalarExpr run() {
        ScalarExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) { ++pos_; return true; }
        return false;
    }

    ScalarExpr expr() {
        ScalarExpr acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    ScalarExpr term() {
        ScalarExpr acc = factor();
        for (;;) {
            if (accept('*')) acc *= factor();
            else if (accept('/')) {
                size_t at = pos_;
                ScalarExpr d = factor();
                if (d.is_zero()) throw ParseError("division by the zero polynomial", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    ScalarExpr factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        return power();
    }

    ScalarExpr power() {
        ScalarExpr b = base();
        skip_ws();
        if (accept('^')) {
            bool neg = accept('-');
            long long k = integer_literal();
            if (neg && b.is_zero()) fail("zero raised to a negative power");
            return b.pow(static_cast<int>(neg ? -k : k));
        }
        return b;
    }

    ScalarExpr base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer_literal();
            return ScalarExpr::constant(chart_, Rational(v));
        }
        if (c == '(') {
            ++pos_;
            ScalarExpr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (valid_identifier(std::string(1, c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = chart_->index_of(name);
            if (idx < 0) throw ParseError("unknown identifier '" + name + "'", start);
            return ScalarExpr::coordinate(chart_, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long long integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    ChartPtr chart_;
    size_t pos_ = 0;
};

} // namespace

ScalarExpr parse_expr(const std::string& text, const ChartPtr& chart) {
    return Parser(text, chart).run();
}

} // namespace gengeo
