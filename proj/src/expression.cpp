#include "odun/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "odun/power_sum.hpp"

namespace odun {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SchurPolynomial parse() {
        SchurPolynomial value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

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

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("integer too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    SchurPolynomial expr() {
        SchurPolynomial value = term();
        while (true) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    SchurPolynomial term() {
        SchurPolynomial value = factor();
        while (accept('*')) value = multiply(value, factor());
        return value;
    }

    SchurPolynomial factor() {
        skip_space();
        if (accept('-')) return -factor();
        if (accept('(')) {
            SchurPolynomial value = expr();
            expect(')');
            return value;
        }
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return SchurPolynomial::one() * BigInt(integer());
        if (c != 'h' && c != 'e' && c != 'p' && c != 's') fail("expected h[k], e[k], p[k], s[parts] or an integer");
        ++pos_;
        expect('[');
        if (c == 's') {
            const std::size_t close = text_.find(']', pos_);
            if (close == std::string_view::npos) fail("expected ']'");
            Partition lambda;
            try {
                lambda = parse_partition(text_.substr(pos_, close - pos_));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            pos_ = close + 1;
            return SchurPolynomial::schur(lambda);
        }
        const int k = integer();
        expect(']');
        switch (c) {
            case 'h': return SchurPolynomial::complete(k);
            case 'e': return SchurPolynomial::elementary(k);
            default:
                if (k == 0) return SchurPolynomial::one();
                return power_to_schur(PowerSumPolynomial::power(Partition{k}));
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SchurPolynomial parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace odun
