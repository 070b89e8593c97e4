#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deltaarc/diagnostic.hpp"

namespace deltaarc::detail {

enum class Tok {
  Ident,
  Int,
  String,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Semi,
  Dot,
  Arrow,
  Assign,
  Not,
  AndAnd,
  OrOr,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier/number spelling; unescaped value for strings
  SourceLocation loc;
};

std::string_view describe(Tok kind);

/// Splits `text` into tokens. Comments (`//` and `/* */`) are dropped.
/// Throws Error(SYN-ERROR) on stray characters and unterminated literals.
std::vector<Token> tokenize(std::string_view text, const std::string& file);

}  // namespace deltaarc::detail
