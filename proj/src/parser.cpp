#include "deltaarc/parser.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "lexer.hpp"

namespace deltaarc {

using detail::Tok;
using detail::Token;

std::optional<SourceKind> kind_for_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".arc") return SourceKind::Component;
  if (ext == ".delta") return SourceKind::Delta;
  if (ext == ".deltacfg") return SourceKind::Config;
  if (ext == ".types") return SourceKind::Types;
  return std::nullopt;
}

std::string_view extension_for(SourceKind kind) {
  switch (kind) {
    case SourceKind::Component: return ".arc";
    case SourceKind::Delta: return ".delta";
    case SourceKind::Config: return ".deltacfg";
    case SourceKind::Types: return ".types";
  }
  return "";
}

SourceUnit read_source(const std::filesystem::path& path) {
  auto kind = kind_for_extension(path);
  if (!kind) {
    throw Error("SRC-KIND", "unrecognized file extension '" + path.extension().string() + "'",
                SourceLocation{path.string()});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO-READ", "cannot read file", SourceLocation{path.string()});
  std::ostringstream buf;
  buf << in.rdbuf();
  return SourceUnit{path.string(), *kind, buf.str()};
}

namespace {

void require_kind(const SourceUnit& unit, SourceKind kind) {
  if (unit.kind != kind) {
    throw Error("SRC-KIND", "expected a " + std::string(extension_for(kind)) + " source unit",
                SourceLocation{unit.path});
  }
}

std::string spelling(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
    case Tok::Int:
      return "'" + t.text + "'";
    case Tok::String:
      return "string \"" + t.text + "\"";
    default:
      return std::string(detail::describe(t.kind));
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::string& file) : tokens_(detail::tokenize(text, file)) {}

  // ---- components -------------------------------------------------------

  ComponentDefinition component() {
    ComponentDefinition c;
    c.loc = expect_keyword("component").loc;
    c.name = identifier("component name");
    if (accept(Tok::LParen)) {
      if (!check(Tok::RParen)) {
        do {
          const auto& tok = peek();
          c.parameters.push_back(ParameterDecl{identifier("parameter name"), tok.loc});
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen, "after parameter list");
    }
    expect(Tok::LBrace, "to open the component body");
    while (!check(Tok::RBrace)) element(c);
    expect(Tok::RBrace, "to close the component body");
    expect(Tok::End, "after the component definition");
    return c;
  }

  // ---- deltas -----------------------------------------------------------

  DeltaModel delta() {
    DeltaModel d;
    d.loc = expect_keyword("delta").loc;
    d.name = identifier("delta name");
    if (accept_keyword("after")) d.constraint = constraint_or();
    expect(Tok::LBrace, "to open the delta body");
    while (!check(Tok::RBrace)) {
      const Token& tok = peek();
      if (is_keyword(tok, "modify")) {
        d.body.push_back(modify_block());
      } else if (is_keyword(tok, "expand") || is_keyword(tok, "introduce") ||
                 is_keyword(tok, "remove")) {
        auto op = scope_free_op(/*global=*/true);
        d.body.push_back(DeltaBlock{std::nullopt, {op}, op.loc});
      } else if (tok.kind == Tok::Ident && is_operation_keyword(tok.text)) {
        fail("'" + tok.text + "' is only allowed inside a 'modify component' block", tok.loc);
      } else {
        unknown_operation(tok);
      }
    }
    expect(Tok::RBrace, "to close the delta body");
    expect(Tok::End, "after the delta model");
    return d;
  }

  OrderConstraint standalone_constraint() {
    auto e = constraint_or();
    expect(Tok::End, "after the constraint");
    return e;
  }

  // ---- product configurations ---------------------------------------------

  ProductConfiguration config() {
    ProductConfiguration cfg;
    cfg.loc = expect_keyword("deltaconfig").loc;
    cfg.name = identifier("configuration name");
    expect(Tok::LBrace, "to open the configuration body");
    std::set<std::string> seen;
    if (!check(Tok::RBrace)) {
      do {
        const auto loc = peek().loc;
        auto name = identifier("delta name");
        if (!seen.insert(name).second) {
          throw Error("CFG-DUP-DELTA",
                      "delta '" + name + "' is listed more than once in '" + cfg.name + "'", loc);
        }
        cfg.deltas.push_back(std::move(name));
      } while (accept(Tok::Comma));
    }
    expect(Tok::RBrace, "to close the configuration body");
    expect(Tok::End, "after the configuration");
    return cfg;
  }

  // ---- data types -------------------------------------------------------

  void types(TypeHierarchy& h) {
    while (!check(Tok::End)) {
      const auto loc = expect_keyword("type").loc;
      auto name = identifier("type name");
      h.declare(name);
      if (accept_keyword("extends")) {
        auto super = identifier("supertype name");
        try {
          h.add_supertype(name, super);
        } catch (const Error& e) {
          throw Error(e.code(), e.diagnostic().message, loc);
        }
      }
      expect(Tok::Semi, "after type declaration");
    }
  }

 private:
  // ---- component elements -----------------------------------------------

  void element(ComponentDefinition& c) {
    const Token& tok = peek();
    if (accept_keyword("autoconnect")) {
      c.autoconnect = autoconnect_mode(/*allow_off=*/true);
      expect(Tok::Semi, "after autoconnect statement");
    } else if (accept_keyword("port")) {
      do {
        c.ports.push_back(port_decl());
      } while (accept(Tok::Comma));
      expect(Tok::Semi, "after port declarations");
    } else if (accept_keyword("component")) {
      c.subcomponents.push_back(subcomponent_body(tok.loc));
      if (check(Tok::LBrace)) {
        fail("inner component definitions are not supported", peek().loc);
      }
      expect(Tok::Semi, "after subcomponent declaration");
    } else if (accept_keyword("connect")) {
      auto source = port_ref();
      expect(Tok::Arrow, "between connector source and target");
      auto target = port_ref();
      expect(Tok::Semi, "after connector");
      c.connectors.push_back(ConnectorDecl{std::move(source), std::move(target),
                                           ConnectorOrigin::Explicit, tok.loc});
    } else {
      fail("expected 'autoconnect', 'port', 'component' or 'connect', found " + spelling(tok),
           tok.loc);
    }
  }

  AutoconnectMode autoconnect_mode(bool allow_off) {
    const Token& tok = peek();
    if (accept_keyword("port")) return AutoconnectMode::Port;
    if (accept_keyword("type")) return AutoconnectMode::Type;
    if (allow_off && accept_keyword("off")) return AutoconnectMode::Off;
    fail(std::string("expected autoconnect mode 'port', 'type'") + (allow_off ? " or 'off'" : "") +
             ", found " + spelling(tok),
         tok.loc);
  }

  PortDecl port_decl() {
    PortDecl p;
    const Token& tok = peek();
    p.loc = tok.loc;
    if (accept_keyword("in")) {
      p.direction = Direction::In;
    } else if (accept_keyword("out")) {
      p.direction = Direction::Out;
    } else {
      fail("expected port direction 'in' or 'out', found " + spelling(tok), tok.loc);
    }
    p.type = identifier("port type");
    p.name = check(Tok::Ident) ? next().text : implicit_name(p.type);
    return p;
  }

  SubcomponentDecl subcomponent_body(const SourceLocation& loc) {
    SubcomponentDecl s;
    s.loc = loc;
    s.type = identifier("component type");
    if (accept(Tok::LParen)) {
      if (!check(Tok::RParen)) {
        do {
          s.args.push_back(config_arg());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen, "after argument list");
    }
    s.name = check(Tok::Ident) ? next().text : implicit_name(s.type);
    return s;
  }

  ConfigArg config_arg() {
    const Token& tok = next();
    switch (tok.kind) {
      case Tok::Int: {
        std::int64_t value = 0;
        const char* first = tok.text.data();
        const char* last = first + tok.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail("integer literal out of range", tok.loc);
        return value;
      }
      case Tok::String:
        return StringLiteral{tok.text};
      case Tok::Ident:
        return ParameterRef{tok.text};
      default:
        fail("expected integer, string or parameter name, found " + spelling(tok), tok.loc);
    }
  }

  PortRef port_ref() {
    auto first = identifier("port reference");
    if (accept(Tok::Dot)) return PortRef::of(std::move(first), identifier("port name"));
    return PortRef::local(std::move(first));
  }

  // ---- delta statements -------------------------------------------------

  static bool is_operation_keyword(std::string_view w) {
    static const std::set<std::string_view> kOps{"add", "connect", "disconnect", "rename", "replace"};
    return kOps.contains(w);
  }

  [[noreturn]] void unknown_operation(const Token& tok) {
    if (tok.kind == Tok::Ident) {
      throw Error("SYN-UNKNOWN-OP", "unknown operation '" + tok.text + "'", tok.loc);
    }
    fail("expected a modification operation, found " + spelling(tok), tok.loc);
  }

  DeltaBlock modify_block() {
    DeltaBlock block;
    block.loc = expect_keyword("modify").loc;
    expect_keyword("component");
    block.component = identifier("component name");
    if (check(Tok::LParen)) {
      fail("a configuration modification must appear inside a 'modify component' block",
           peek().loc);
    }
    expect(Tok::LBrace, "to open the modify block");
    while (!check(Tok::RBrace)) block.ops.push_back(op_statement());
    expect(Tok::RBrace, "to close the modify block");
    return block;
  }

  ModificationOp op_statement() {
    const Token& tok = peek();
    const auto loc = tok.loc;
    if (tok.kind != Tok::Ident) unknown_operation(tok);
    const std::string& kw = tok.text;

    if (kw == "expand" || kw == "introduce") return scope_free_op(/*global=*/false);
    if (kw == "remove" && (is_keyword(peek(1), "unreachable") || is_keyword(peek(1), "unreachables"))) {
      return scope_free_op(/*global=*/false);
    }

    next();
    ModificationOp op{ops::ExpandAutoconnect{}, loc};
    if (kw == "add") {
      op.kind = add_op();
    } else if (kw == "remove") {
      const Token& what = peek();
      if (accept_keyword("port")) {
        op.kind = ops::RemovePort{identifier("port name")};
      } else if (accept_keyword("component")) {
        op.kind = ops::RemoveSubcomponent{identifier("subcomponent name")};
      } else if (accept_keyword("parameter")) {
        op.kind = ops::RemoveParameter{identifier("parameter name")};
      } else {
        fail("expected 'port', 'component', 'parameter' or 'unreachable' after 'remove', found " +
                 spelling(what),
             what.loc);
      }
    } else if (kw == "connect" || kw == "disconnect") {
      auto source = port_ref();
      expect(Tok::Arrow, "between connector source and target");
      auto target = port_ref();
      if (kw == "connect") {
        op.kind = ops::Connect{std::move(source), std::move(target)};
      } else {
        op.kind = ops::Disconnect{std::move(source), std::move(target)};
      }
    } else if (kw == "rename") {
      ops::Rename r;
      const Token& what = peek();
      if (accept_keyword("port")) {
        r.kind = ops::RenameKind::Port;
      } else if (accept_keyword("component")) {
        r.kind = ops::RenameKind::Component;
      } else if (accept_keyword("parameter")) {
        r.kind = ops::RenameKind::Parameter;
      } else {
        fail("expected 'port', 'component' or 'parameter' after 'rename', found " + spelling(what),
             what.loc);
      }
      r.from = identifier("name to rename");
      expect_keyword("as");
      r.to = identifier("new name");
      op.kind = std::move(r);
    } else if (kw == "replace") {
      ops::Replace r;
      expect_keyword("component");
      r.name = identifier("subcomponent name");
      expect_keyword("with");
      r.with_type = identifier("component type");
      if (check(Tok::Ident)) r.new_name = next().text;
      op.kind = std::move(r);
    } else if (kw == "modify") {
      ops::ModifyConfig m;
      expect_keyword("component");
      m.subcomponent = identifier("subcomponent name");
      expect(Tok::LParen, "to open the parameter assignments");
      if (!check(Tok::RParen)) {
        do {
          ops::Assignment a;
          a.parameter = identifier("parameter name");
          expect(Tok::Assign, "in parameter assignment");
          a.value = config_arg();
          m.assignments.push_back(std::move(a));
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen, "after parameter assignments");
      op.kind = std::move(m);
    } else {
      throw Error("SYN-UNKNOWN-OP", "unknown operation '" + kw + "'", loc);
    }
    expect(Tok::Semi, "after operation");
    return op;
  }

  OpKind add_op() {
    const Token& tok = peek();
    if (accept_keyword("port")) return ops::AddPort{port_decl()};
    if (is_keyword(tok, "in") || is_keyword(tok, "out")) return ops::AddPort{port_decl()};
    if (accept_keyword("component")) return ops::AddSubcomponent{subcomponent_body(tok.loc)};
    if (accept_keyword("parameter")) return ops::AddParameter{identifier("parameter name")};
    if (accept_keyword("autoconnect")) return ops::SetAutoconnect{autoconnect_mode(true)};
    fail("expected 'port', 'component', 'parameter' or 'autoconnect' after 'add', found " +
             spelling(tok),
         tok.loc);
  }

  ModificationOp scope_free_op(bool global) {
    const Token& tok = next();
    ModificationOp op{ops::ExpandAutoconnect{}, tok.loc};
    if (tok.text == "expand") {
      expect_keyword("autoconnect");
    } else if (tok.text == "introduce") {
      expect_keyword("autoconnect");
      op.kind = ops::IntroduceAutoconnect{autoconnect_mode(/*allow_off=*/false)};
    } else {
      const Token& what = peek();
      if (!accept_keyword("unreachable") && !accept_keyword("unreachables")) {
        if (global) {
          fail("only 'remove unreachable' may appear outside a 'modify component' block", tok.loc);
        }
        fail("expected 'unreachable' after 'remove', found " + spelling(what), what.loc);
      }
      op.kind = ops::RemoveUnreachable{};
    }
    expect(Tok::Semi, "after operation");
    return op;
  }

  // ---- constraints ------------------------------------------------------

  OrderConstraint constraint_or() {
    std::vector<OrderConstraint> terms{constraint_and()};
    while (accept(Tok::OrOr)) terms.push_back(constraint_and());
    return OrderConstraint::any_of(std::move(terms));
  }

  OrderConstraint constraint_and() {
    std::vector<OrderConstraint> terms{constraint_unary()};
    while (accept(Tok::AndAnd)) terms.push_back(constraint_unary());
    return OrderConstraint::all_of(std::move(terms));
  }

  OrderConstraint constraint_unary() {
    if (accept(Tok::Not)) return OrderConstraint::negate(constraint_unary());
    if (accept(Tok::LParen)) {
      auto inner = constraint_or();
      expect(Tok::RParen, "to close the parenthesized constraint");
      return inner;
    }
    return OrderConstraint::leaf(identifier("delta name in constraint"));
  }

  // ---- token helpers ----------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool check(Tok kind) const { return peek().kind == kind; }
  bool accept(Tok kind) {
    if (!check(kind)) return false;
    next();
    return true;
  }
  static bool is_keyword(const Token& t, std::string_view kw) {
    return t.kind == Tok::Ident && t.text == kw;
  }
  bool accept_keyword(std::string_view kw) {
    if (!is_keyword(peek(), kw)) return false;
    next();
    return true;
  }
  const Token& expect_keyword(std::string_view kw) {
    if (!is_keyword(peek(), kw)) {
      fail("expected '" + std::string(kw) + "', found " + spelling(peek()), peek().loc);
    }
    return next();
  }
  const Token& expect(Tok kind, std::string_view context) {
    if (!check(kind)) {
      fail("expected " + std::string(detail::describe(kind)) + " " + std::string(context) +
               ", found " + spelling(peek()),
           peek().loc);
    }
    return next();
  }
  std::string identifier(std::string_view what) {
    if (!check(Tok::Ident)) {
      fail("expected " + std::string(what) + ", found " + spelling(peek()), peek().loc);
    }
    return next().text;
  }
  [[noreturn]] static void fail(const std::string& msg, const SourceLocation& loc) {
    throw Error("SYN-ERROR", msg, loc);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ComponentDefinition parse_component_text(const SourceUnit& unit) {
  require_kind(unit, SourceKind::Component);
  return Parser(unit.text, unit.path).component();
}

DeltaModel parse_delta_text(const SourceUnit& unit) {
  require_kind(unit, SourceKind::Delta);
  return Parser(unit.text, unit.path).delta();
}

ProductConfiguration parse_config_text(const SourceUnit& unit) {
  require_kind(unit, SourceKind::Config);
  return Parser(unit.text, unit.path).config();
}

void parse_types_text(const SourceUnit& unit, TypeHierarchy& types) {
  require_kind(unit, SourceKind::Types);
  Parser(unit.text, unit.path).types(types);
}

OrderConstraint parse_constraint_text(std::string_view text, const std::string& file) {
  return Parser(text, file).standalone_constraint();
}

}  // namespace deltaarc
