#include "orbizeta/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace orbizeta {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

    IntPolynomial parse()
    {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        IntPolynomial p = expr();
        if (pos_ != text_.size()) throw ParseError(unexpected(), pos_);
        return p;
    }

private:
    IntPolynomial expr()
    {
        IntPolynomial acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    IntPolynomial term()
    {
        IntPolynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    IntPolynomial unary()
    {
        if (accept('-')) return -unary();
        return power();
    }

    IntPolynomial power()
    {
        IntPolynomial base = atom();
        if (!accept('^')) return base;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", pos_);
        const std::size_t at = pos_;
        const BigInt n = integer();
        if (n > 1'000'000) throw ParseError("exponent too large", at);
        if (peek() == '^') throw ParseError("chained exponents need parentheses", pos_);
        return base.pow(static_cast<unsigned>(n.get_ui()));
    }

    IntPolynomial atom()
    {
        if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPolynomial::constant(vars_, integer());
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            skip_ws();
            return IntPolynomial::variable(vars_, std::string(1, c));
        }
        if (accept('(')) {
            IntPolynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(unexpected(), pos_);
    }

    BigInt integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        BigInt v(std::string(text_.substr(start, pos_ - start)));
        skip_ws();
        return v;
    }

    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        skip_ws();
        return true;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string unexpected() const
    {
        if (pos_ == text_.size()) return "unexpected end of expression";
        return std::string("unexpected character '") + text_[pos_] + "'";
    }

    std::string_view text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text)
{
    std::set<std::string> letters;
    for (char c : text)
        if (c >= 'a' && c <= 'z') letters.insert(std::string(1, c));
    return Parser(text, {letters.begin(), letters.end()}).parse();
}

IntPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        const std::string name(1, text[i]);
        if (text[i] >= 'a' && text[i] <= 'z' && std::find(variables.begin(), variables.end(), name) == variables.end())
            throw ParseError("variable '" + name + "' is not in the variable list", i);
    }
    return Parser(text, variables).parse();
}

}  // namespace orbizeta
