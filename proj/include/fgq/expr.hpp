#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fgq/word.hpp"

namespace fgq {

/// Evaluates the word-expression grammar:
///
///   expr    := factor ('*' factor)*
///   factor  := '1' | '(' expr ')' | call | bare-word
///   call    := ('inv'|'pow'|'comm'|'conj') '(' args ')'
///
/// with inv(e), pow(e, n), comm(e1, e2), conj(e1, e2); bare words are in the
/// word grammar and end at '*', ',', '(' or ')'. '1' is the identity.
class ExprParser {
public:
    ExprParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    Word parse() {
        Word w = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return w;
    }

private:
    Word expr() {
        Word w = factor();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                w = mul(w, factor());
            } else {
                break;
            }
        }
        return w;
    }

    Word factor() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("expected a word expression", pos_);
        char c = text_[pos_];
        if (c == '1') {
            ++pos_;
            return Word(rank_);
        }
        if (c == '(') {
            ++pos_;
            Word w = expr();
            expect(')');
            return w;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t run_end = pos_;
            while (run_end < text_.size() && text_[run_end] >= 'a' && text_[run_end] <= 'z')
                ++run_end;
            std::size_t after = run_end;
            while (after < text_.size() && is_ws(text_[after]))
                ++after;
            if (after < text_.size() && text_[after] == '(')
                return call(text_.substr(pos_, run_end - pos_), after);
            return bare_word();
        }
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    Word call(std::string_view name, std::size_t paren) {
        std::size_t name_pos = pos_;
        pos_ = paren + 1;  // past '('
        if (name == "inv") {
            Word w = expr();
            expect(')');
            return inv(w);
        }
        if (name == "pow") {
            Word w = expr();
            expect(',');
            std::int64_t n = integer();
            expect(')');
            return pow(w, n);
        }
        if (name == "comm") {
            Word u = expr();
            expect(',');
            Word v = expr();
            expect(')');
            return comm(u, v);
        }
        if (name == "conj") {
            Word x = expr();
            expect(',');
            Word g = expr();
            expect(')');
            return conj(x, g);
        }
        throw parse_error("unknown function '" + std::string(name) + "'", name_pos);
    }

    // A bare word extends over word-grammar characters up to a delimiter.
    Word bare_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '^' || c == '-' ||
                c == '+' || is_ws(c))
                ++pos_;
            else
                break;
        }
        try {
            return parse_word(text_.substr(start, pos_ - start), rank_);
        } catch (const parse_error& e) {
            throw parse_error(e.message(), start + e.position());
        }
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        if (pos_ == digits)
            throw parse_error("expected integer", start);
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::exception&) {
            throw parse_error("integer out of range", start);
        }
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

    void skip_ws() {
        while (pos_ < text_.size() && is_ws(text_[pos_]))
            ++pos_;
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

inline Word eval_word_expr(std::string_view text, int rank = 2) {
    return ExprParser(text, rank).parse();
}

}  // namespace fgq
