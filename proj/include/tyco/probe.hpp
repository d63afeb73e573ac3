#pragma once

// Character-prefix validity scanner. Every prefix of a file is checked with
// either a token-level checker (clean lex, balanced brackets, blocks opened
// and filled properly) or a recursive-descent parser for a declared Python
// subset (docs/grammar_subset.md).

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tyco/error.hpp"
#include "tyco/lexer.hpp"

namespace tyco::probe {

enum class Checker { Token, Grammar };
enum class Reason { None, LexError, UnbalancedBracket, DanglingIndent, GrammarReject };

inline const char* name(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::LexError: return "lex-error";
    case Reason::UnbalancedBracket: return "unbalanced-bracket";
    case Reason::DanglingIndent: return "dangling-indent";
    case Reason::GrammarReject: return "grammar-reject";
  }
  return "?";
}

inline Checker checker_from_name(std::string_view s) {
  if (s == "token") return Checker::Token;
  if (s == "grammar") return Checker::Grammar;
  throw ConfigError("unknown checker: " + std::string(s));
}

struct ParseStatus {
  bool parsable = true;
  Reason reason = Reason::None;
  bool operator==(const ParseStatus&) const = default;
};

namespace detail {

using lexer::RawKind;
using lexer::RawToken;
using lexer::TokenType;

inline bool is_open(TokenType t) { return t == TokenType::LPAR || t == TokenType::LSQB || t == TokenType::LBRACE; }
inline bool is_close(TokenType t) { return t == TokenType::RPAR || t == TokenType::RSQB || t == TokenType::RBRACE; }
inline TokenType closer(TokenType t) {
  return t == TokenType::LPAR ? TokenType::RPAR : t == TokenType::LSQB ? TokenType::RSQB : TokenType::RBRACE;
}

inline bool significant(const RawToken& t) { return t.kind != RawKind::Comment && t.kind != RawKind::Nl; }

inline ParseStatus token_level(std::span<const RawToken> toks) {
  for (const auto& t : toks)
    if (t.kind == RawKind::ErrorToken) return {false, Reason::LexError};
  std::vector<TokenType> stack;
  for (const auto& t : toks) {
    if (t.kind != RawKind::Op) continue;
    if (is_open(t.op)) stack.push_back(closer(t.op));
    else if (is_close(t.op)) {
      if (stack.empty() || stack.back() != t.op) return {false, Reason::UnbalancedBracket};
      stack.pop_back();
    }
  }
  if (!stack.empty()) return {false, Reason::UnbalancedBracket};
  // A logical line ending in ':' must be followed by an INDENT, and an
  // INDENT may only follow such a line.
  const RawToken* prev = nullptr;  // last significant token
  const RawToken* before = nullptr;
  for (const auto& t : toks) {
    if (!significant(t)) continue;
    const bool header = prev && prev->kind == RawKind::Newline && before && before->kind == RawKind::Op &&
                        before->op == TokenType::COLON;
    if (header && t.kind != RawKind::Indent) return {false, Reason::DanglingIndent};
    if (t.kind == RawKind::Indent && !header) return {false, Reason::DanglingIndent};
    before = prev;
    prev = &t;
  }
  if (prev && prev->kind == RawKind::Newline && before && before->kind == RawKind::Op &&
      before->op == TokenType::COLON)
    return {false, Reason::DanglingIndent};
  return {};
}

struct Reject {};

// Recursive descent over significant raw tokens.
class Parser {
 public:
  explicit Parser(std::span<const RawToken> toks) {
    for (const auto& t : toks)
      if (significant(t)) toks_.push_back(&t);
  }

  bool parse_module() {
    try {
      while (!at_end()) {
        if (peek_kind(RawKind::Newline)) {
          ++pos_;
          continue;
        }
        stmt();
      }
      return true;
    } catch (const Reject&) {
      return false;
    }
  }

 private:
  // -- token helpers
  bool at_end() const { return pos_ >= toks_.size(); }
  const RawToken* cur() const { return at_end() ? nullptr : toks_[pos_]; }
  bool peek_kind(RawKind k) const { return cur() && cur()->kind == k; }
  bool peek_op(TokenType op) const { return cur() && cur()->kind == RawKind::Op && cur()->op == op; }
  bool peek_op2(TokenType op) const {
    return pos_ + 1 < toks_.size() && toks_[pos_ + 1]->kind == RawKind::Op && toks_[pos_ + 1]->op == op;
  }
  bool peek_kw(std::string_view kw) const { return cur() && cur()->kind == RawKind::Name && cur()->text == kw; }
  bool peek_kw2(std::string_view kw) const {
    return pos_ + 1 < toks_.size() && toks_[pos_ + 1]->kind == RawKind::Name && toks_[pos_ + 1]->text == kw;
  }
  bool peek_name() const { return cur() && cur()->kind == RawKind::Name && !lexer::is_keyword(cur()->text); }
  bool accept_op(TokenType op) {
    if (!peek_op(op)) return false;
    ++pos_;
    return true;
  }
  bool accept_kw(std::string_view kw) {
    if (!peek_kw(kw)) return false;
    ++pos_;
    return true;
  }
  void expect_op(TokenType op) {
    if (!accept_op(op)) throw Reject{};
  }
  void expect_kw(std::string_view kw) {
    if (!accept_kw(kw)) throw Reject{};
  }
  void name() {
    if (!peek_name()) throw Reject{};
    ++pos_;
  }

  // -- statements
  void stmt() {
    if (peek_kw("if")) return if_stmt();
    if (peek_kw("while")) return while_stmt();
    if (peek_kw("for")) return for_stmt();
    if (peek_kw("try")) return try_stmt();
    if (peek_kw("with")) return with_stmt();
    if (peek_kw("def")) return funcdef();
    if (peek_kw("class")) return classdef();
    if (peek_op(TokenType::AT)) return decorated();
    if (peek_kw("async") && (peek_kw2("def") || peek_kw2("with") || peek_kw2("for"))) {
      ++pos_;
      return stmt();
    }
    simple_stmt();
  }

  void simple_stmt() {
    small_stmt();
    while (accept_op(TokenType::SEMI)) {
      if (peek_kind(RawKind::Newline) || at_end()) break;
      small_stmt();
    }
    end_of_line();
  }

  void end_of_line() {
    if (at_end()) return;  // a final line without a newline
    if (!peek_kind(RawKind::Newline)) throw Reject{};
    ++pos_;
  }

  void small_stmt() {
    if (accept_kw("pass") || accept_kw("break") || accept_kw("continue")) return;
    if (accept_kw("return")) {
      if (!line_end()) testlist_star_expr();
      return;
    }
    if (accept_kw("raise")) {
      if (!line_end()) {
        test();
        if (accept_kw("from")) test();
      }
      return;
    }
    if (accept_kw("global") || accept_kw("nonlocal")) {
      name();
      while (accept_op(TokenType::COMMA)) name();
      return;
    }
    if (accept_kw("del")) return exprlist();
    if (accept_kw("assert")) {
      test();
      if (accept_op(TokenType::COMMA)) test();
      return;
    }
    if (accept_kw("import")) {
      dotted_as_name();
      while (accept_op(TokenType::COMMA)) dotted_as_name();
      return;
    }
    if (accept_kw("from")) return import_from();
    expr_stmt();
  }

  bool line_end() const { return at_end() || peek_kind(RawKind::Newline) || peek_op(TokenType::SEMI); }

  void dotted_name() {
    name();
    while (accept_op(TokenType::DOT)) name();
  }
  void dotted_as_name() {
    dotted_name();
    if (accept_kw("as")) name();
  }
  void import_from() {
    bool dots = false;
    while (accept_op(TokenType::DOT) || accept_op(TokenType::ELLIPSIS)) dots = true;
    if (!peek_kw("import")) dotted_name();
    else if (!dots) throw Reject{};
    expect_kw("import");
    if (accept_op(TokenType::STAR)) return;
    const bool paren = accept_op(TokenType::LPAR);
    auto item = [&] {
      name();
      if (accept_kw("as")) name();
    };
    item();
    while (accept_op(TokenType::COMMA)) {
      if (paren && peek_op(TokenType::RPAR)) break;
      item();
    }
    if (paren) expect_op(TokenType::RPAR);
  }

  static bool is_augassign(TokenType t) {
    switch (t) {
      case TokenType::PLUSEQUAL: case TokenType::MINEQUAL: case TokenType::STAREQUAL:
      case TokenType::SLASHEQUAL: case TokenType::PERCENTEQUAL: case TokenType::AMPEREQUAL:
      case TokenType::VBAREQUAL: case TokenType::CIRCUMFLEXEQUAL: case TokenType::LEFTSHIFTEQUAL:
      case TokenType::RIGHTSHIFTEQUAL: case TokenType::DOUBLESTAREQUAL: case TokenType::DOUBLESLASHEQUAL:
      case TokenType::ATEQUAL:
        return true;
      default: return false;
    }
  }

  void expr_stmt() {
    if (peek_kw("yield")) return yield_expr();
    testlist_star_expr();
    if (accept_op(TokenType::COLON)) {
      test();
      if (accept_op(TokenType::EQUAL)) rhs();
      return;
    }
    if (cur() && cur()->kind == RawKind::Op && is_augassign(cur()->op)) {
      ++pos_;
      return rhs();
    }
    while (accept_op(TokenType::EQUAL)) rhs();
  }

  void rhs() {
    if (peek_kw("yield")) return yield_expr();
    testlist_star_expr();
  }

  void yield_expr() {
    expect_kw("yield");
    if (accept_kw("from")) return test();
    if (!line_end() && !peek_op(TokenType::RPAR) && !peek_op(TokenType::EQUAL)) testlist_star_expr();
  }

  void suite() {
    if (!peek_kind(RawKind::Newline)) return simple_stmt();
    ++pos_;
    if (!peek_kind(RawKind::Indent)) throw Reject{};
    ++pos_;
    do {
      stmt();
    } while (!peek_kind(RawKind::Dedent) && !at_end());
    if (!peek_kind(RawKind::Dedent)) throw Reject{};
    ++pos_;
  }

  void block() {
    expect_op(TokenType::COLON);
    suite();
  }

  void if_stmt() {
    expect_kw("if");
    test();
    block();
    while (accept_kw("elif")) {
      test();
      block();
    }
    if (accept_kw("else")) block();
  }
  void while_stmt() {
    expect_kw("while");
    test();
    block();
    if (accept_kw("else")) block();
  }
  void for_stmt() {
    expect_kw("for");
    exprlist();
    expect_kw("in");
    testlist();
    block();
    if (accept_kw("else")) block();
  }
  void try_stmt() {
    expect_kw("try");
    block();
    bool handlers = false;
    while (accept_kw("except")) {
      handlers = true;
      if (!peek_op(TokenType::COLON)) {
        test();
        if (accept_kw("as")) name();
      }
      block();
    }
    if (handlers && accept_kw("else")) block();
    if (accept_kw("finally")) block();
    else if (!handlers) throw Reject{};
  }
  void with_stmt() {
    expect_kw("with");
    do {
      test();
      if (accept_kw("as")) expr();
    } while (accept_op(TokenType::COMMA));
    block();
  }
  void funcdef() {
    expect_kw("def");
    name();
    expect_op(TokenType::LPAR);
    if (!peek_op(TokenType::RPAR)) arglist_def(TokenType::RPAR, true);
    expect_op(TokenType::RPAR);
    if (accept_op(TokenType::RARROW)) test();
    block();
  }
  void classdef() {
    expect_kw("class");
    name();
    if (accept_op(TokenType::LPAR)) {
      if (!peek_op(TokenType::RPAR)) arglist();
      expect_op(TokenType::RPAR);
    }
    block();
  }
  void decorated() {
    while (accept_op(TokenType::AT)) {
      test();
      if (!peek_kind(RawKind::Newline)) throw Reject{};
      ++pos_;
    }
    if (peek_kw("def")) return funcdef();
    if (peek_kw("class")) return classdef();
    if (accept_kw("async") && peek_kw("def")) return funcdef();
    throw Reject{};
  }

  // Parameters of def (annotations allowed) and lambda (not).
  void arglist_def(TokenType end, bool annotated) {
    auto param = [&] {
      name();
      if (annotated && accept_op(TokenType::COLON)) test();
    };
    do {
      if (peek_op(end)) break;
      if (accept_op(TokenType::DOUBLESTAR)) {
        param();
      } else if (accept_op(TokenType::STAR)) {
        if (peek_name()) param();
      } else if (accept_op(TokenType::SLASH)) {
      } else {
        param();
        if (accept_op(TokenType::EQUAL)) test();
      }
    } while (accept_op(TokenType::COMMA));
  }

  // -- expressions
  void testlist_star_expr() {
    test_or_star();
    while (accept_op(TokenType::COMMA)) {
      if (!starts_expr()) break;
      test_or_star();
    }
  }
  void testlist() {
    test();
    while (accept_op(TokenType::COMMA)) {
      if (!starts_expr()) break;
      test();
    }
  }
  void exprlist() {
    expr_or_star();
    while (accept_op(TokenType::COMMA)) {
      if (!starts_expr()) break;
      expr_or_star();
    }
  }
  void test_or_star() {
    if (accept_op(TokenType::STAR)) return expr();
    test();
  }
  void expr_or_star() {
    if (accept_op(TokenType::STAR)) return expr();
    expr();
  }

  bool starts_expr() const {
    const auto* t = cur();
    if (!t) return false;
    switch (t->kind) {
      case RawKind::Number:
      case RawKind::String: return true;
      case RawKind::Name:
        return !lexer::is_keyword(t->text) || t->text == "None" || t->text == "True" || t->text == "False" ||
               t->text == "not" || t->text == "lambda" || t->text == "await";
      case RawKind::Op:
        switch (t->op) {
          case TokenType::LPAR: case TokenType::LSQB: case TokenType::LBRACE: case TokenType::MINUS:
          case TokenType::PLUS: case TokenType::TILDE: case TokenType::STAR: case TokenType::ELLIPSIS:
            return true;
          default: return false;
        }
      default: return false;
    }
  }

  void test() {
    if (peek_kw("lambda")) return lambdef(true);
    or_test();
    if (accept_kw("if")) {
      or_test();
      expect_kw("else");
      test();
    }
  }
  void test_nocond() {
    if (peek_kw("lambda")) return lambdef(false);
    or_test();
  }
  void lambdef(bool cond) {
    expect_kw("lambda");
    if (!peek_op(TokenType::COLON)) arglist_def(TokenType::COLON, false);
    expect_op(TokenType::COLON);
    cond ? test() : test_nocond();
  }
  void or_test() {
    and_test();
    while (accept_kw("or")) and_test();
  }
  void and_test() {
    not_test();
    while (accept_kw("and")) not_test();
  }
  void not_test() {
    if (accept_kw("not")) return not_test();
    comparison();
  }
  bool comp_op() {
    if (cur() && cur()->kind == RawKind::Op) {
      switch (cur()->op) {
        case TokenType::LESS: case TokenType::GREATER: case TokenType::EQEQUAL: case TokenType::GREATEREQUAL:
        case TokenType::LESSEQUAL: case TokenType::NOTEQUAL:
          ++pos_;
          return true;
        default: return false;
      }
    }
    if (accept_kw("in")) return true;
    if (peek_kw("not") && peek_kw2("in")) {
      pos_ += 2;
      return true;
    }
    if (accept_kw("is")) {
      accept_kw("not");
      return true;
    }
    return false;
  }
  void comparison() {
    expr();
    while (comp_op()) expr();
  }
  void binary(void (Parser::*next)(), std::initializer_list<TokenType> ops) {
    (this->*next)();
    for (;;) {
      bool hit = false;
      for (auto op : ops)
        if (accept_op(op)) {
          hit = true;
          break;
        }
      if (!hit) return;
      (this->*next)();
    }
  }
  void expr() { binary(&Parser::xor_expr, {TokenType::VBAR}); }
  void xor_expr() { binary(&Parser::and_expr, {TokenType::CIRCUMFLEX}); }
  void and_expr() { binary(&Parser::shift_expr, {TokenType::AMPER}); }
  void shift_expr() { binary(&Parser::arith_expr, {TokenType::LEFTSHIFT, TokenType::RIGHTSHIFT}); }
  void arith_expr() { binary(&Parser::term, {TokenType::PLUS, TokenType::MINUS}); }
  void term() {
    binary(&Parser::factor,
           {TokenType::STAR, TokenType::AT, TokenType::SLASH, TokenType::PERCENT, TokenType::DOUBLESLASH});
  }
  void factor() {
    if (accept_op(TokenType::PLUS) || accept_op(TokenType::MINUS) || accept_op(TokenType::TILDE)) return factor();
    power();
  }
  void power() {
    accept_kw("await");
    atom();
    while (trailer()) {
    }
    if (accept_op(TokenType::DOUBLESTAR)) factor();
  }
  bool trailer() {
    if (accept_op(TokenType::LPAR)) {
      if (!peek_op(TokenType::RPAR)) arglist();
      expect_op(TokenType::RPAR);
      return true;
    }
    if (accept_op(TokenType::LSQB)) {
      subscript();
      while (accept_op(TokenType::COMMA)) {
        if (peek_op(TokenType::RSQB)) break;
        subscript();
      }
      expect_op(TokenType::RSQB);
      return true;
    }
    if (accept_op(TokenType::DOT)) {
      name();
      return true;
    }
    return false;
  }
  void subscript() {
    if (!peek_op(TokenType::COLON)) test();
    if (!accept_op(TokenType::COLON)) return;
    if (!peek_op(TokenType::COLON) && !peek_op(TokenType::COMMA) && !peek_op(TokenType::RSQB)) test();
    if (accept_op(TokenType::COLON) && !peek_op(TokenType::COMMA) && !peek_op(TokenType::RSQB)) test();
  }
  void arglist() {
    do {
      if (peek_op(TokenType::RPAR)) break;
      if (accept_op(TokenType::DOUBLESTAR) || accept_op(TokenType::STAR)) {
        test();
        continue;
      }
      test();
      if (accept_op(TokenType::EQUAL)) test();
      else if (peek_kw("for") || (peek_kw("async") && peek_kw2("for"))) comp_for();
    } while (accept_op(TokenType::COMMA));
  }
  void comp_for() {
    accept_kw("async");
    expect_kw("for");
    exprlist();
    expect_kw("in");
    or_test();
    for (;;) {
      if (accept_kw("if")) test_nocond();
      else if (peek_kw("for") || (peek_kw("async") && peek_kw2("for"))) comp_for();
      else return;
    }
  }
  // Items inside () or []: optional comprehension or comma list.
  void testlist_comp(TokenType close) {
    if (peek_op(close)) return;
    test_or_star();
    if (peek_kw("for") || (peek_kw("async") && peek_kw2("for"))) return comp_for();
    while (accept_op(TokenType::COMMA)) {
      if (peek_op(close)) break;
      test_or_star();
    }
  }
  void dictorsetmaker() {
    if (peek_op(TokenType::RBRACE)) return;
    auto item = [&](bool& is_dict, bool first) {
      if (accept_op(TokenType::DOUBLESTAR)) {
        if (!first && !is_dict) throw Reject{};
        is_dict = true;
        return expr();
      }
      if (accept_op(TokenType::STAR)) {
        if (!first && is_dict) throw Reject{};
        return expr();
      }
      test();
      if (first) is_dict = peek_op(TokenType::COLON);
      if (is_dict) {
        expect_op(TokenType::COLON);
        test();
      }
    };
    bool is_dict = false;
    item(is_dict, true);
    if (peek_kw("for") || (peek_kw("async") && peek_kw2("for"))) return comp_for();
    while (accept_op(TokenType::COMMA)) {
      if (peek_op(TokenType::RBRACE)) break;
      item(is_dict, false);
    }
  }
  void atom() {
    const auto* t = cur();
    if (!t) throw Reject{};
    if (t->kind == RawKind::Number) {
      ++pos_;
      return;
    }
    if (t->kind == RawKind::String) {
      while (peek_kind(RawKind::String)) ++pos_;
      return;
    }
    if (t->kind == RawKind::Name) {
      if (!lexer::is_keyword(t->text) || t->text == "None" || t->text == "True" || t->text == "False") {
        ++pos_;
        return;
      }
      throw Reject{};
    }
    if (accept_op(TokenType::ELLIPSIS)) return;
    if (accept_op(TokenType::LPAR)) {
      if (peek_kw("yield")) yield_expr();
      else testlist_comp(TokenType::RPAR);
      expect_op(TokenType::RPAR);
      return;
    }
    if (accept_op(TokenType::LSQB)) {
      testlist_comp(TokenType::RSQB);
      expect_op(TokenType::RSQB);
      return;
    }
    if (accept_op(TokenType::LBRACE)) {
      dictorsetmaker();
      expect_op(TokenType::RBRACE);
      return;
    }
    throw Reject{};
  }

  std::vector<const RawToken*> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// The grammar checker reports lex errors as such and everything else the
// parser refuses as grammar-reject; it never consults the token-level rules.
inline ParseStatus check_prefix(std::string_view prefix, Checker checker) {
  const auto toks = lexer::lex(prefix, lexer::LexMode::File);
  if (checker == Checker::Token) return detail::token_level(toks);
  for (const auto& t : toks)
    if (t.kind == lexer::RawKind::ErrorToken) return {false, Reason::LexError};
  if (!detail::Parser(toks).parse_module()) return {false, Reason::GrammarReject};
  return {};
}

struct ProbeReport {
  std::string file;
  std::size_t total_chars = 0;
  std::size_t parsable = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> reasons;

  nlohmann::ordered_json to_json() const {
    return {{"file", file}, {"total_chars", total_chars}, {"parsable", parsable}, {"failed", failed},
            {"reasons", reasons}};
  }
};

// Offsets just past each UTF-8 character.
inline std::vector<std::size_t> char_ends(std::string_view s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= s.size(); ++i)
    if (i == s.size() || (static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) out.push_back(i);
  return out;
}

// Calls visit(prefix_end, status) for every character prefix.
template <class Visit>
ProbeReport scan_file(std::string_view source, Checker checker, const std::string& file, Visit&& visit) {
  ProbeReport r;
  r.file = file;
  for (auto end : char_ends(source)) {
    const auto st = check_prefix(source.substr(0, end), checker);
    ++r.total_chars;
    if (st.parsable) ++r.parsable;
    else {
      ++r.failed;
      ++r.reasons[name(st.reason)];
    }
    visit(end, st);
  }
  return r;
}

inline ProbeReport scan_file(std::string_view source, Checker checker, const std::string& file = {}) {
  return scan_file(source, checker, file, [](std::size_t, const ParseStatus&) {});
}

struct Aggregate {
  std::size_t files = 0, total_chars = 0, parsable = 0, failed = 0;
  std::map<std::string, std::size_t> reasons;

  double success_fraction() const {
    return total_chars == 0 ? 0.0 : static_cast<double>(parsable) / static_cast<double>(total_chars);
  }
  double failure_fraction() const {
    return total_chars == 0 ? 0.0 : static_cast<double>(failed) / static_cast<double>(total_chars);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json reason_pct;
    for (const auto& [k, v] : reasons)
      reason_pct[k] = total_chars == 0 ? 0.0 : 100.0 * static_cast<double>(v) / static_cast<double>(total_chars);
    return {{"files", files},
            {"total_chars", total_chars},
            {"parsable", parsable},
            {"failed", failed},
            {"success_percent", 100.0 * success_fraction()},
            {"failure_percent", 100.0 * failure_fraction()},
            {"reasons", reasons},
            {"reason_percent", reason_pct}};
  }

  // Plain-text table: executions, successes, failures.
  std::string table() const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "| Measure               | Count      | Percent  |\n"
                  "|-----------------------|------------|----------|\n"
                  "| Files                 | %10zu |          |\n"
                  "| Total executions      | %10zu | 100.00%%  |\n"
                  "| Successful executions | %10zu | %6.2f%%  |\n"
                  "| Failed executions     | %10zu | %6.2f%%  |\n",
                  files, total_chars, parsable, 100.0 * success_fraction(), failed, 100.0 * failure_fraction());
    return buf;
  }
};

inline Aggregate aggregate(std::span<const ProbeReport> reports) {
  if (reports.empty()) throw ContractError("aggregate needs at least one report");
  Aggregate a;
  for (const auto& r : reports) {
    ++a.files;
    a.total_chars += r.total_chars;
    a.parsable += r.parsable;
    a.failed += r.failed;
    for (const auto& [k, v] : r.reasons) a.reasons[k] += v;
  }
  return a;
}

}  // namespace tyco::probe
