#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "degloci/core/polynomial.hpp"

namespace degloci
{

namespace detail
{

// Recursive-descent reader for expressions such as "1 + 2c1 + c1^2 - 3/4 a1a2"
// or "(a1+a2)*(1+a1+a2)^2". Juxtaposition multiplies; variable names are
// matched greedily against the declared variable set.
class PolyReader
{
public:
    PolyReader(std::string_view s, Vars vars) : s_(s), vars_(std::move(vars)) {}

    Poly read()
    {
        Poly p = sum();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw error("cannot parse polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Poly sum()
    {
        Poly acc(vars_);
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        } else if (peek('+')) {
            ++pos_;
        }
        for (;;) {
            Poly t = product();
            acc += neg ? Poly(-t) : t;
            if (peek('+')) {
                ++pos_;
                neg = false;
            } else if (peek('-')) {
                ++pos_;
                neg = true;
            } else {
                return acc;
            }
        }
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size()) {
            return false;
        }
        const char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    Poly product()
    {
        Poly acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                Poly d = power();
                if (d.degree() != 0) {
                    fail("only division by constants is supported");
                }
                acc *= Rational(1 / d.constant_term());
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    Poly power()
    {
        Poly b = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            b = pow(b, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return b;
    }

    Poly atom()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end");
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = sum();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return Poly(vars_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        // Longest variable name matching at this position.
        std::size_t best = 0, best_len = 0;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const std::string &nm = vars_->name(i);
            if (nm.size() > best_len && s_.substr(pos_, nm.size()) == nm) {
                best = i;
                best_len = nm.size();
            }
        }
        if (best_len == 0) {
            fail("unknown variable");
        }
        pos_ += best_len;
        return Poly::variable(vars_, best);
    }

    std::string_view s_;
    Vars vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text, const Vars &vars)
{
    return detail::PolyReader(text, vars).read();
}

} // namespace degloci
