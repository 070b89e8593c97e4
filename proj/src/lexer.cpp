#include "lexer.hpp"

#include <cctype>

namespace deltaarc::detail {

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::String: return "string";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Assign: return "'='";
    case Tok::Not: return "'!'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::End: return "end of file";
  }
  return "token";
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const std::string& file) : text_(text), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      SourceLocation loc = here();
      if (at_end()) {
        out.push_back(Token{Tok::End, {}, loc});
        return out;
      }
      char ch = peek();
      if (is_ident_start(ch)) {
        std::string word;
        while (!at_end() && is_ident_char(peek())) word += advance();
        out.push_back(Token{Tok::Ident, std::move(word), loc});
      } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                 (ch == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        std::string digits(1, advance());
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        out.push_back(Token{Tok::Int, std::move(digits), loc});
      } else if (ch == '"') {
        out.push_back(Token{Tok::String, string_literal(loc), loc});
      } else {
        out.push_back(Token{punctuation(loc), {}, loc});
      }
    }
  }

 private:
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourceLocation here() const { return SourceLocation{file_, line_, col_}; }

  [[noreturn]] void fail(const std::string& msg, SourceLocation loc) const {
    throw Error("SYN-ERROR", msg, std::move(loc));
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceLocation start = here();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) fail("unterminated block comment", start);
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string string_literal(const SourceLocation& start) {
    advance();
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string literal", start);
      char c = advance();
      if (c == '"') return value;
      if (c == '\\') {
        if (at_end()) fail("unterminated string literal", start);
        char e = advance();
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default: value += e; break;
        }
        continue;
      }
      value += c;
    }
  }

  Tok punctuation(const SourceLocation& loc) {
    char c = advance();
    switch (c) {
      case '{': return Tok::LBrace;
      case '}': return Tok::RBrace;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case ',': return Tok::Comma;
      case ';': return Tok::Semi;
      case '.': return Tok::Dot;
      case '=': return Tok::Assign;
      case '!': return Tok::Not;
      case '-':
        if (peek() == '>') {
          advance();
          return Tok::Arrow;
        }
        break;
      case '&':
        if (peek() == '&') {
          advance();
          return Tok::AndAnd;
        }
        break;
      case '|':
        if (peek() == '|') {
          advance();
          return Tok::OrOr;
        }
        break;
      default:
        break;
    }
    fail(std::string("unexpected character '") + c + "'", loc);
  }

  std::string_view text_;
  const std::string& file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  return Scanner(text, file).run();
}

}  // namespace deltaarc::detail
