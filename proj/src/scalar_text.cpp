#include "qgr/scalar_text.hpp"

#include <cctype>
#include <stdexcept>

namespace qgr {

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : text_(text) {}

    RatFuncQ parse() {
        RatFuncQ value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return value;
    }

private:
    RatFuncQ expression() {
        RatFuncQ value = term();
        while (true) {
            skip_space();
            if (match('+')) {
                value += term();
            } else if (match('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    RatFuncQ term() {
        skip_space();
        bool negate = match('-');
        RatFuncQ value = factor();
        while (true) {
            skip_space();
            if (match('*')) {
                value *= factor();
            } else if (match('/')) {
                value /= factor();
            } else {
                break;
            }
        }
        return negate ? -value : value;
    }

    RatFuncQ factor() {
        RatFuncQ base = primary();
        skip_space();
        if (match('^')) {
            long exp = integer();
            RatFuncQ power(1);
            RatFuncQ b = exp < 0 ? base.inverse() : base;
            for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) power *= b;
            return power;
        }
        return base;
    }

    RatFuncQ primary() {
        skip_space();
        if (match('(')) {
            RatFuncQ value = expression();
            skip_space();
            if (!match(')')) fail("expected ')'");
            return value;
        }
        if (pos_ < text_.size() && text_[pos_] == 'q') {
            ++pos_;
            return RatFuncQ(PolyQ::monomial(rational(1), 1));
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            return RatFuncQ(rational(integer()));
        }
        fail("expected number, q, or '('");
    }

    long integer() {
        skip_space();
        bool negate = match('-');
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer");
        }
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negate ? -value : value;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool match(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos_) +
                                    ": " + what + " in \"" + text_ + "\"");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

RatFuncQ parse_ratfunc(const std::string& text) {
    return ScalarParser(text).parse();
}

LaurentQ parse_laurent(const std::string& text) {
    auto value = parse_ratfunc(text).as_laurent();
    if (!value) throw std::invalid_argument("not a Laurent polynomial: " + text);
    return *value;
}

} // namespace qgr
