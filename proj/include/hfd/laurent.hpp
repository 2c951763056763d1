#pragma once

/**
 * Sparse integer Laurent polynomials and their text form.
 *
 * Grammar (whitespace may appear between any two tokens):
 *
 *   poly  :=  term ( ('+' | '-') term )*
 *   term  :=  sign? coefficient ('*'? monomial)?
 *          |  sign? monomial
 *   monomial := 't' ('^' sign? integer)?
 *
 * so "t^5 - t^4 + t^2 - t + 1 - t^-1", "3*t^-2 + 1" and "-7" all parse.
 * Like terms are combined silently and zero terms dropped.  Canonical
 * printing is in decreasing exponent order with explicit signs; print
 * followed by parse is the identity.
 */

#include "integers.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hfd {

/// Malformed polynomial text; position() is the 0-based offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class LaurentPoly {
public:
    LaurentPoly() = default;

    /// Adds c * t^exp, combining with any existing term and dropping zeros.
    void add_term(long long exp, const Int& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<long long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(long long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    long long degree_top() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }
    long long degree_bottom() const {
        require_nonzero();
        return terms_.begin()->first;
    }

    /// Sum of all coefficients (the value at t = 1).
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// True iff the coefficient of t^k equals the coefficient of t^-k for all k.
    bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

    /// b_i = sum of coefficients of t^k over k >= i.  Equals 0 above the top
    /// degree and eval_at_one() at or below the bottom degree.
    Int tail_sum(long long i) const {
        Int s = 0;
        for (auto it = terms_.lower_bound(i); it != terms_.end(); ++it) s += it->second;
        return s;
    }

    /// Canonical text: decreasing exponents, explicit signs, "c*t^e" terms.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool neg = c < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            Int mag = neg ? Int(-c) : c;
            if (e == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.str();
    }

private:
    std::map<long long, Int> terms_; // exponent -> nonzero coefficient

    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("LaurentPoly: degree of the zero polynomial");
    }
};

namespace detail {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : text_(text) {}

    LaurentPoly run() {
        LaurentPoly p;
        skip_ws();
        if (at_end()) throw parse_error("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-' between terms", pos_);
            }
            auto [exp, coeff] = term();
            p.add_term(exp, sign < 0 ? Int(-coeff) : coeff);
            first = false;
            skip_ws();
        }
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    bool at_digit() const { return !at_end() && peek() >= '0' && peek() <= '9'; }

    Int integer() {
        if (!at_digit()) throw parse_error("expected an integer", pos_);
        std::string digits;
        while (at_digit()) digits.push_back(text_[pos_++]);
        return Int(digits);
    }

    // One unsigned term: coefficient, monomial, or both.
    std::pair<long long, Int> term() {
        skip_ws();
        Int coeff = 1;
        bool saw_coeff = false;
        if (at_digit()) {
            coeff = integer();
            saw_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 't')
                    throw parse_error("expected 't' after '*'", pos_);
            }
        }
        if (!at_end() && peek() == 't') {
            ++pos_;
            skip_ws();
            long long exp = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                long long esign = 1;
                if (!at_end() && (peek() == '+' || peek() == '-')) {
                    if (peek() == '-') esign = -1;
                    ++pos_;
                    skip_ws();
                }
                std::size_t at = pos_;
                Int e = integer();
                if (e > 1'000'000'000) throw parse_error("exponent out of range", at);
                exp = esign * e.convert_to<long long>();
            }
            return {exp, coeff};
        }
        if (!saw_coeff) throw parse_error("expected a coefficient or 't'", pos_);
        return {0, coeff};
    }
};

} // namespace detail

/// Parses the grammar above; throws parse_error on malformed input.
inline LaurentPoly parse_laurent(std::string_view text) {
    return detail::LaurentParser(text).run();
}

} // namespace hfd
