#include "qchow/poly_text.hpp"

#include <cctype>
#include <string>

#include "qchow/errors.hpp"

namespace qchow {

namespace {

class Parser {
public:
    Parser(std::string_view s, Varset vs) : s_(s), vs_(vs) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly expr() {
        SparsePoly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    SparsePoly term() {
        SparsePoly acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    SparsePoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        SparsePoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    SparsePoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return SparsePoly::constant(vs_, mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        const auto& names = variable_names(vs_);
        for (int i = 0; i < 4; ++i) {
            std::string_view n = names[i];
            if (s_.substr(pos_, n.size()) == n) {
                pos_ += n.size();
                return SparsePoly::variable(vs_, i);
            }
        }
        fail(std::string("unknown symbol '") + c + "'");
    }

    std::string_view s_;
    Varset vs_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, Varset fallback) {
    bool has_l = text.find('l') != std::string_view::npos;
    bool has_c = text.find('c') != std::string_view::npos;
    if (has_l && has_c) throw ParseError("expression mixes l and c variables");
    Varset vs = has_l ? Varset::L : has_c ? Varset::C : fallback;
    return Parser(text, vs).parse();
}

}  // namespace qchow
