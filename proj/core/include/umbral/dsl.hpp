#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/expr.hpp"

namespace umbral {

enum class TokenKind {
    Name,
    Int,
    Slash,
    Dot,
    Plus,
    Minus,
    Caret,
    CaretDot,
    LParen,
    RParen,
    Comma,
    Prime,
    Keyword,
    End,
};

const char* token_kind_name(TokenKind k);

// `trivia` is the whitespace preceding the lexeme, so concatenating
// trivia + lexeme over the whole stream (End included) gives back the input.
struct Token {
    TokenKind kind = TokenKind::End;
    std::string lexeme;
    std::string trivia;
    SourcePos pos;
};

// Keywords of the expression language: inv cinv adj d dsum ddiff bar mul scale fresh.
bool is_keyword(std::string_view word);

// Throws SyntaxError on an illegal character or a ".." sequence.
std::vector<Token> tokenize(std::string_view input);

// Throws SyntaxError at the first token that does not fit the grammar.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view input);

// Canonical text; parse(pretty_print(e)) is structurally equal to e.
std::string pretty_print(const ExprPtr& e);

// Largest exponent accepted after ^ or ^.
inline constexpr unsigned max_exponent = 64;

} // namespace umbral
