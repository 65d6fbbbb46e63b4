// Recursive-descent parser for field expressions.
//
//   expr   := term {("+" | "-") term}
//   term   := unary {("*" | "/") unary}
//   unary  := "-" unary | factor
//   factor := atom ["^" uint]
//   atom   := uint | "z" | "(" expr ")"
//
// Unary minus binds looser than "^", so "-z^2" is -(z^2).

#include <cctype>

#include "multinet/cyclo.hpp"
#include "multinet/errors.hpp"

namespace multinet {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, Field field) : text_(text), field_(field) {}

    FieldElem parse_all() {
        FieldElem value = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return value;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElem expr() {
        FieldElem value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    FieldElem term() {
        FieldElem value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                FieldElem divisor = unary();
                if (divisor.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                value *= divisor.inverse();
            } else {
                return value;
            }
        }
    }

    FieldElem unary() {
        if (accept('-')) return -unary();
        return factor();
    }

    FieldElem factor() {
        FieldElem base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const std::string digits = read_digits();
            if (digits.size() > 9) throw ParseError("exponent too large", at);
            return base.pow(std::stoull(digits));
        }
        return base;
    }

    FieldElem atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            return FieldElem::zeta_power(field_, 1);
        }
        if (c == '(') {
            ++pos_;
            FieldElem inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem(field_, Rational::parse(read_digits()));
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an unsigned integer", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_elem(std::string_view text, Field field) {
    if (!field.valid()) throw FieldMismatch("parse_elem needs a field");
    return ExprParser(text, field).parse_all();
}

}  // namespace multinet
