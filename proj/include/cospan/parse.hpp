#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <variant>

#include "cospan/term.hpp"

namespace cospan {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    TermPtr parse_one_cell() {
        TermPtr t = term1();
        expect_end();
        return t;
    }

    Term2Ptr parse_two_cell() {
        Term2Ptr t = term2();
        expect_end();
        return t;
    }

    // term1 := atom { ";" atom } ; atom := factor { "+" factor }
    TermPtr term1() {
        TermPtr t = atom1();
        while (eat(';')) t = OneCellTerm::seq(t, atom1());
        return t;
    }

    // term2 := atom2 { ";" atom2 } ; atom2 := f2 { "*" f2 } ; f2 := f3 { "+" f3 }
    Term2Ptr term2() {
        Term2Ptr t = atom2();
        while (eat(';')) t = TwoCellTerm::vcomp(t, atom2());
        return t;
    }

private:
    TermPtr atom1() {
        TermPtr t = factor1();
        while (eat('+')) t = OneCellTerm::tens(t, factor1());
        return t;
    }

    TermPtr factor1() {
        skip_ws();
        if (eat('(')) {
            TermPtr t = term1();
            require(')');
            return t;
        }
        if (eat_word("id")) {
            require(':');
            return OneCellTerm::id(number());
        }
        if (eat_word("m")) return OneCellTerm::nabla();
        if (eat_word("d")) return OneCellTerm::delta();
        if (eat_word("s")) return OneCellTerm::s();
        if (eat_word("r")) return OneCellTerm::r();
        throw ParseError("expected term", pos_);
    }

    Term2Ptr atom2() {
        Term2Ptr t = f2();
        while (eat('*')) t = TwoCellTerm::hcomp(t, f2());
        return t;
    }

    Term2Ptr f2() {
        Term2Ptr t = f3();
        while (eat('+')) t = TwoCellTerm::tens(t, f3());
        return t;
    }

    Term2Ptr f3() {
        skip_ws();
        if (eat('(')) {
            Term2Ptr t = term2();
            require(')');
            return t;
        }
        if (eat_word("eta")) return TwoCellTerm::eta();
        if (eat_word("iota")) {
            require('(');
            TermPtr t = term1();
            require(')');
            return TwoCellTerm::iota(t);
        }
        throw ParseError("expected 2-cell term", pos_);
    }

    int number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected number", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw ParseError("number too large", pos_);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void require(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    bool eat_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < text_.size()) {
            char c = text_[end];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
        }
        pos_ = end;
        return true;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline TermPtr parse_one_cell(const std::string& text) {
    TermPtr t = detail::Parser(text).parse_one_cell();
    boundary(t);   // validate composition boundaries eagerly
    signature(t);  // reject mixed signatures
    return t;
}

inline Term2Ptr parse_two_cell(const std::string& text) {
    return detail::Parser(text).parse_two_cell();
}

}  // namespace cospan
