#pragma once

// Error-tolerant Python 3.7 lexer producing the normalized token-type
// alphabet used throughout the completion pipeline.
//
// The scanner mirrors the line-oriented state machine of the standard
// library tokenizer (indent stack, bracket depth, backslash continuation,
// multi-line strings) so that complete files reproduce its exact_type
// stream, while any prefix of a program still lexes: characters that cannot
// start a token and unterminated strings become ERRORTOKEN entries instead
// of exceptions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tyco::lexer {

enum class TokenType : std::uint8_t {
  NAME,
  KEYWORD,
  NUMBER,
  STRING,
  INDENT,
  DEDENT,
  EOL,
  ERRORTOKEN,
  // exact operator / delimiter types
  LPAR,
  RPAR,
  LSQB,
  RSQB,
  COLON,
  COMMA,
  SEMI,
  PLUS,
  MINUS,
  STAR,
  SLASH,
  VBAR,
  AMPER,
  LESS,
  GREATER,
  EQUAL,
  DOT,
  PERCENT,
  LBRACE,
  RBRACE,
  EQEQUAL,
  NOTEQUAL,
  LESSEQUAL,
  GREATEREQUAL,
  TILDE,
  CIRCUMFLEX,
  LEFTSHIFT,
  RIGHTSHIFT,
  DOUBLESTAR,
  PLUSEQUAL,
  MINEQUAL,
  STAREQUAL,
  SLASHEQUAL,
  PERCENTEQUAL,
  AMPEREQUAL,
  VBAREQUAL,
  CIRCUMFLEXEQUAL,
  LEFTSHIFTEQUAL,
  RIGHTSHIFTEQUAL,
  DOUBLESTAREQUAL,
  DOUBLESLASH,
  DOUBLESLASHEQUAL,
  AT,
  ATEQUAL,
  RARROW,
  ELLIPSIS,
};

inline constexpr std::size_t kTokenTypeCount = 54;
inline constexpr std::size_t kOperatorTypeCount = 46;

inline constexpr std::array<std::string_view, kTokenTypeCount> kTokenTypeNames = {
    "NAME",         "KEYWORD",          "NUMBER",         "STRING",
    "INDENT",       "DEDENT",           "EOL",            "ERRORTOKEN",
    "LPAR",         "RPAR",             "LSQB",           "RSQB",
    "COLON",        "COMMA",            "SEMI",           "PLUS",
    "MINUS",        "STAR",             "SLASH",          "VBAR",
    "AMPER",        "LESS",             "GREATER",        "EQUAL",
    "DOT",          "PERCENT",          "LBRACE",         "RBRACE",
    "EQEQUAL",      "NOTEQUAL",         "LESSEQUAL",      "GREATEREQUAL",
    "TILDE",        "CIRCUMFLEX",       "LEFTSHIFT",      "RIGHTSHIFT",
    "DOUBLESTAR",   "PLUSEQUAL",        "MINEQUAL",       "STAREQUAL",
    "SLASHEQUAL",   "PERCENTEQUAL",     "AMPEREQUAL",     "VBAREQUAL",
    "CIRCUMFLEXEQUAL", "LEFTSHIFTEQUAL", "RIGHTSHIFTEQUAL", "DOUBLESTAREQUAL",
    "DOUBLESLASH",  "DOUBLESLASHEQUAL", "AT",             "ATEQUAL",
    "RARROW",       "ELLIPSIS",
};

// Operator spellings, index-aligned with TokenType::LPAR onwards.
inline constexpr std::array<std::string_view, kOperatorTypeCount> kOperatorText = {
    "(",  ")",  "[",   "]",   ":",  ",",  ";",  "+",  "-",   "*",   "/",  "|",
    "&",  "<",  ">",   "=",   ".",  "%",  "{",  "}",  "==",  "!=",  "<=", ">=",
    "~",  "^",  "<<",  ">>",  "**", "+=", "-=", "*=", "/=",  "%=",  "&=", "|=",
    "^=", "<<=", ">>=", "**=", "//", "//=", "@",  "@=", "->", "...",
};

inline std::string_view name(TokenType t) {
  return kTokenTypeNames[static_cast<std::size_t>(t)];
}

inline std::optional<TokenType> type_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kTokenTypeCount; ++i) {
    if (kTokenTypeNames[i] == s) return static_cast<TokenType>(i);
  }
  return std::nullopt;
}

inline bool is_operator(TokenType t) { return t >= TokenType::LPAR; }

inline std::optional<TokenType> operator_type(std::string_view text) {
  for (std::size_t i = 0; i < kOperatorTypeCount; ++i) {
    if (kOperatorText[i] == text) {
      return static_cast<TokenType>(static_cast<std::size_t>(TokenType::LPAR) + i);
    }
  }
  return std::nullopt;
}

// Python 3.7 reserved words (keyword.kwlist), sorted for binary search.
inline constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async",
    "await", "break",  "class",   "continue", "def",      "del",    "elif",
    "else",  "except", "finally", "for",      "from",     "global", "if",
    "import", "in",    "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",  "raise",  "return",  "try",      "while",    "with",   "yield",
};

inline bool is_keyword(std::string_view name) {
  return std::binary_search(kKeywords.begin(), kKeywords.end(), name);
}

// Raw token categories before normalization; mirrors tokenize's generic
// types. Op tokens carry their exact type in RawToken::op.
enum class RawKind : std::uint8_t {
  Name,
  Number,
  String,
  Op,
  Indent,
  Dedent,
  Newline,
  Nl,
  Comment,
  ErrorToken,
  EndMarker,
};

struct RawToken {
  RawKind kind;
  TokenType op = TokenType::ERRORTOKEN;  // meaningful only for RawKind::Op
  std::string text;
  int line = 0;
  int col = 0;

  bool operator==(const RawToken&) const = default;
};

struct TypedToken {
  std::string text;  // empty for INDENT / DEDENT / EOL
  TokenType ttype;
  int line = 0;  // 1-based
  int col = 0;   // 0-based, in code points

  bool operator==(const TypedToken&) const = default;
};

// File: complete source; open indentation levels are closed with DEDENTs at
// end of input. Prefix: text being typed; no closing DEDENTs are invented.
enum class LexMode { File, Prefix };

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

// Each matcher returns the end offset of the match starting at `p`, if any.
// They replicate the first-match semantics of tokenize's Number regex.
using Match = std::optional<std::size_t>;

template <class Pred>
Match digits_with_underscores(std::string_view s, std::size_t p, Pred ok) {
  if (p >= s.size() || !ok(s[p])) return std::nullopt;
  ++p;
  while (p < s.size()) {
    if (ok(s[p])) {
      ++p;
    } else if (s[p] == '_' && p + 1 < s.size() && ok(s[p + 1])) {
      p += 2;
    } else {
      break;
    }
  }
  return p;
}

inline Match digitpart(std::string_view s, std::size_t p) {
  return digits_with_underscores(s, p, is_digit);
}

inline Match exponent(std::string_view s, std::size_t p) {
  if (p >= s.size() || (s[p] != 'e' && s[p] != 'E')) return std::nullopt;
  ++p;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  return digitpart(s, p);
}

inline Match pointfloat(std::string_view s, std::size_t p) {
  std::size_t q;
  if (auto d = digitpart(s, p)) {
    if (*d >= s.size() || s[*d] != '.') return std::nullopt;
    q = *d + 1;
    if (auto f = digitpart(s, q)) q = *f;
  } else {
    if (p >= s.size() || s[p] != '.') return std::nullopt;
    auto f = digitpart(s, p + 1);
    if (!f) return std::nullopt;
    q = *f;
  }
  if (auto e = exponent(s, q)) q = *e;
  return q;
}

inline Match floatnumber(std::string_view s, std::size_t p) {
  if (auto m = pointfloat(s, p)) return m;
  if (auto d = digitpart(s, p)) return exponent(s, *d);
  return std::nullopt;
}

inline Match intnumber(std::string_view s, std::size_t p) {
  if (p + 1 < s.size() && s[p] == '0') {
    const char k = s[p + 1];
    auto prefixed = [&](auto ok) -> Match {
      // 0x(?:_?h)+
      std::size_t q = p + 2;
      bool any = false;
      while (q < s.size()) {
        if (ok(s[q])) {
          ++q;
        } else if (s[q] == '_' && q + 1 < s.size() && ok(s[q + 1])) {
          q += 2;
        } else {
          break;
        }
        any = true;
      }
      return any ? Match(q) : std::nullopt;
    };
    Match m;
    if (k == 'x' || k == 'X') m = prefixed(is_hex);
    if (k == 'b' || k == 'B') m = prefixed([](char c) { return c == '0' || c == '1'; });
    if (k == 'o' || k == 'O') m = prefixed([](char c) { return c >= '0' && c <= '7'; });
    if (m) return m;
  }
  if (p >= s.size()) return std::nullopt;
  if (s[p] == '0') {
    return digits_with_underscores(s, p, [](char c) { return c == '0'; });
  }
  if (s[p] >= '1' && s[p] <= '9') return digitpart(s, p);
  return std::nullopt;
}

inline Match number(std::string_view s, std::size_t p) {
  auto imag = [&](Match m) -> Match {
    if (m && *m < s.size() && (s[*m] == 'j' || s[*m] == 'J')) return *m + 1;
    return std::nullopt;
  };
  if (auto m = imag(digitpart(s, p))) return m;
  if (auto m = imag(floatnumber(s, p))) return m;
  if (auto m = floatnumber(s, p)) return m;
  return intnumber(s, p);
}

// Length of a valid string prefix (r, b, u, f, br, rb, fr, rf in any case)
// followed by a quote at `p`, or nullopt.
inline std::optional<std::size_t> string_prefix(std::string_view s, std::size_t p) {
  std::size_t n = 0;
  char letters[2] = {0, 0};
  while (n < 2 && p + n < s.size() && std::string_view("rRbBuUfF").find(s[p + n]) != std::string_view::npos) {
    letters[n] = static_cast<char>(s[p + n] | 0x20);
    ++n;
  }
  for (std::size_t len = n + 1; len-- > 0;) {
    if (p + len >= s.size() || (s[p + len] != '\'' && s[p + len] != '"')) continue;
    std::string pre(letters, len);
    if (pre.empty() || pre == "r" || pre == "u" || pre == "b" || pre == "f" || pre == "br" ||
        pre == "rb" || pre == "fr" || pre == "rf") {
      return len;
    }
  }
  return std::nullopt;
}

// Scans for `quote` (one or three quote characters) from `p`, honoring
// backslash escapes; returns the offset just past the closing delimiter.
inline std::optional<std::size_t> find_string_end(std::string_view s, std::size_t p,
                                                  std::string_view quote) {
  while (p < s.size()) {
    if (s[p] == '\\') {
      p += 2;
      continue;
    }
    if (s.compare(p, quote.size(), quote) == 0) return p + quote.size();
    ++p;
  }
  return std::nullopt;
}

inline std::size_t match_operator(std::string_view s, std::size_t p, TokenType& out) {
  for (std::size_t len = 3; len >= 1; --len) {
    if (p + len > s.size()) continue;
    if (auto t = operator_type(s.substr(p, len))) {
      out = *t;
      return len;
    }
  }
  return 0;
}

class Scanner {
 public:
  Scanner(std::string_view source, LexMode mode) : src_(source), mode_(mode) {}

  std::vector<RawToken> run() {
    std::size_t offset = 0;
    std::size_t lnum = 0;
    std::string_view line;
    bool stop = false;
    while (!stop) {
      ++lnum;
      if (offset < src_.size()) {
        const auto nl = src_.find('\n', offset);
        const auto end = nl == std::string_view::npos ? src_.size() : nl + 1;
        line = src_.substr(offset, end - offset);
        offset = end;
      } else {
        line = {};
      }
      stop = scan_line(line, static_cast<int>(lnum));
    }
    finish(static_cast<int>(lnum));
    return std::move(out_);
  }

 private:
  void emit(RawKind kind, std::string_view text, int line, int col,
            TokenType op = TokenType::ERRORTOKEN) {
    out_.push_back(RawToken{kind, op, std::string(text), line, col});
  }

  int column(std::string_view line, std::size_t pos) const {
    if (ascii_line_) return static_cast<int>(pos);
    int col = 0;
    for (std::size_t i = 0; i < pos && i < line.size(); ++i) {
      if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
    }
    return col;
  }

  // Returns true when scanning must stop (end of input reached).
  bool scan_line(std::string_view line, int lnum) {
    std::size_t pos = 0;
    const std::size_t max = line.size();
    ascii_line_ = std::all_of(line.begin(), line.end(),
                              [](char c) { return static_cast<unsigned char>(c) < 0x80; });

    if (!contstr_.empty()) {
      if (line.empty()) return true;  // unterminated multi-line string
      if (auto end = find_string_end(line, 0, cont_quote_)) {
        contstr_.append(line.substr(0, *end));
        emit(RawKind::String, contstr_, str_line_, str_col_);
        contstr_.clear();
        pos = *end;
      } else if (needcont_ && !ends_with_backslash_newline(line)) {
        contstr_.append(line);
        emit(RawKind::ErrorToken, strip_newline(contstr_), str_line_, str_col_);
        contstr_.clear();
        return false;
      } else {
        contstr_.append(line);
        return false;
      }
    } else if (parenlev_ == 0 && !continued_) {
      if (line.empty()) return true;
      int col = 0;
      while (pos < max) {
        if (line[pos] == ' ') {
          ++col;
        } else if (line[pos] == '\t') {
          col = (col / 8 + 1) * 8;
        } else if (line[pos] == '\f') {
          col = 0;
        } else {
          break;
        }
        ++pos;
      }
      if (pos == max) return true;

      if (line[pos] == '#' || line[pos] == '\r' || line[pos] == '\n') {
        if (line[pos] == '#') {
          std::size_t end = line.find_first_of("\r\n", pos);
          if (end == std::string_view::npos) end = max;
          emit(RawKind::Comment, line.substr(pos, end - pos), lnum, column(line, pos));
          pos = end;
        }
        emit(RawKind::Nl, line.substr(pos), lnum, column(line, pos));
        return false;
      }

      if (col > indents_.back()) {
        indents_.push_back(col);
        emit(RawKind::Indent, line.substr(0, pos), lnum, 0);
      }
      const bool aligned = std::find(indents_.begin(), indents_.end(), col) != indents_.end();
      while (col < indents_.back()) {
        indents_.pop_back();
        emit(RawKind::Dedent, "", lnum, column(line, pos));
      }
      if (!aligned) emit(RawKind::ErrorToken, line.substr(0, pos), lnum, 0);
    } else {
      if (line.empty()) return true;  // end of input inside brackets
      continued_ = false;
    }

    while (pos < max) {
      while (pos < max && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\f')) ++pos;
      if (pos >= max) break;
      const std::size_t start = pos;
      const char c = line[pos];
      const int col = column(line, start);

      if (c == '\\') {
        if ((pos + 1 < max && line[pos + 1] == '\n') ||
            (pos + 2 < max && line[pos + 1] == '\r' && line[pos + 2] == '\n')) {
          continued_ = true;
          return false;
        }
        emit(RawKind::ErrorToken, line.substr(pos, 1), lnum, col);
        ++pos;
        continue;
      }
      if (c == '#') {
        std::size_t end = line.find_first_of("\r\n", pos);
        if (end == std::string_view::npos) end = max;
        emit(RawKind::Comment, line.substr(pos, end - pos), lnum, col);
        pos = end;
        continue;
      }
      if (auto pre = string_prefix(line, pos)) {
        const std::size_t q = pos + *pre;
        const char quote = line[q];
        const bool triple = q + 2 < max && line[q + 1] == quote && line[q + 2] == quote;
        if (triple) {
          const std::string_view delim = quote == '"' ? "\"\"\"" : "'''";
          if (auto end = find_string_end(line, q + 3, delim)) {
            emit(RawKind::String, line.substr(start, *end - start), lnum, col);
            pos = *end;
            continue;
          }
          begin_contstr(line.substr(start), delim, false, lnum, col);
          return false;
        }
        // Single-quoted: closes on this line, continues via backslash-newline,
        // or is left dangling.
        std::size_t i = q + 1;
        bool closed = false;
        bool continued_string = false;
        while (i < max) {
          const char ch = line[i];
          if (ch == quote) {
            closed = true;
            ++i;
            break;
          }
          if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && !(i + 1 < max && line[i + 1] == '\n')) {
              ++i;
              continue;
            }
            break;
          }
          if (ch == '\\') {
            if (i + 1 < max && line[i + 1] == '\n') {
              continued_string = true;
              break;
            }
            if (i + 2 < max && line[i + 1] == '\r' && line[i + 2] == '\n') {
              continued_string = true;
              break;
            }
            i += 2;
            continue;
          }
          ++i;
        }
        if (closed) {
          emit(RawKind::String, line.substr(start, i - start), lnum, col);
          pos = i;
          continue;
        }
        if (continued_string) {
          begin_contstr(line.substr(start), std::string_view(&line[q], 1), true, lnum, col);
          return false;
        }
        const std::size_t end = std::min(i, max);
        emit(RawKind::ErrorToken, line.substr(start, end - start), lnum, col);
        pos = end;
        continue;
      }
      if (is_digit(c) || (c == '.' && pos + 1 < max && is_digit(line[pos + 1]))) {
        if (auto end = number(line, pos)) {
          emit(RawKind::Number, line.substr(start, *end - start), lnum, col);
          pos = *end;
          continue;
        }
      }
      if (c == '\n' || (c == '\r' && pos + 1 < max && line[pos + 1] == '\n')) {
        emit(parenlev_ > 0 ? RawKind::Nl : RawKind::Newline, line.substr(pos), lnum, col);
        pos = max;
        continue;
      }
      TokenType op;
      if (std::size_t len = match_operator(line, pos, op)) {
        if (c == '(' || c == '[' || c == '{') {
          ++parenlev_;
        } else if ((c == ')' || c == ']' || c == '}') && parenlev_ > 0) {
          --parenlev_;
        }
        emit(RawKind::Op, line.substr(pos, len), lnum, col, op);
        pos += len;
        continue;
      }
      if (is_ident_start(c)) {
        std::size_t end = pos + 1;
        while (end < max && is_ident_char(line[end])) ++end;
        emit(RawKind::Name, line.substr(start, end - start), lnum, col);
        pos = end;
        continue;
      }
      emit(RawKind::ErrorToken, line.substr(pos, 1), lnum, col);
      ++pos;
    }
    return false;
  }

  static bool ends_with_backslash_newline(std::string_view line) {
    return line.ends_with("\\\n") || line.ends_with("\\\r\n");
  }
  static std::string_view strip_newline(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }

  void begin_contstr(std::string_view text, std::string_view quote, bool needcont, int line,
                     int col) {
    contstr_.assign(text);
    cont_quote_.assign(quote);
    needcont_ = needcont;
    str_line_ = line;
    str_col_ = col;
  }

  void finish(int lnum) {
    if (!contstr_.empty()) {
      emit(RawKind::ErrorToken, contstr_, str_line_, str_col_);
      contstr_.clear();
    }
    if (mode_ == LexMode::File) {
      for (std::size_t i = 1; i < indents_.size(); ++i) emit(RawKind::Dedent, "", lnum, 0);
    }
  }

  std::string_view src_;
  LexMode mode_;
  std::vector<RawToken> out_;
  std::vector<int> indents_{0};
  int parenlev_ = 0;
  bool continued_ = false;
  std::string contstr_;
  std::string cont_quote_;
  bool needcont_ = false;
  int str_line_ = 0;
  int str_col_ = 0;
  bool ascii_line_ = true;
};

}  // namespace detail

// Total over arbitrary text: never throws, malformed input degrades to
// ERRORTOKEN. Emits NEWLINE/NL/COMMENT raw tokens; see normalize. No
// ENDMARKER is produced (normalization would discard it).
inline std::vector<RawToken> lex(std::string_view source, LexMode mode = LexMode::File) {
  return detail::Scanner(source, mode).run();
}

inline std::vector<TypedToken> normalize(std::span<const RawToken> raw) {
  std::vector<TypedToken> out;
  out.reserve(raw.size());
  for (const RawToken& t : raw) {
    switch (t.kind) {
      case RawKind::Comment:
      case RawKind::EndMarker:
        break;
      case RawKind::Name:
        out.push_back({t.text, is_keyword(t.text) ? TokenType::KEYWORD : TokenType::NAME, t.line, t.col});
        break;
      case RawKind::Number:
        out.push_back({t.text, TokenType::NUMBER, t.line, t.col});
        break;
      case RawKind::String:
        out.push_back({t.text, TokenType::STRING, t.line, t.col});
        break;
      case RawKind::Op:
        out.push_back({t.text, t.op, t.line, t.col});
        break;
      case RawKind::Indent:
        out.push_back({"", TokenType::INDENT, t.line, t.col});
        break;
      case RawKind::Dedent:
        out.push_back({"", TokenType::DEDENT, t.line, t.col});
        break;
      case RawKind::Newline:
      case RawKind::Nl:
        out.push_back({"", TokenType::EOL, t.line, t.col});
        break;
      case RawKind::ErrorToken:
        out.push_back({t.text, TokenType::ERRORTOKEN, t.line, t.col});
        break;
    }
  }
  return out;
}

// Lifts a normalized stream back to raw form so it can be re-normalized.
inline std::vector<RawToken> to_raw(std::span<const TypedToken> tokens) {
  std::vector<RawToken> out;
  out.reserve(tokens.size());
  for (const TypedToken& t : tokens) {
    RawToken r{RawKind::Op, TokenType::ERRORTOKEN, t.text, t.line, t.col};
    switch (t.ttype) {
      case TokenType::NAME:
      case TokenType::KEYWORD: r.kind = RawKind::Name; break;
      case TokenType::NUMBER: r.kind = RawKind::Number; break;
      case TokenType::STRING: r.kind = RawKind::String; break;
      case TokenType::INDENT: r.kind = RawKind::Indent; break;
      case TokenType::DEDENT: r.kind = RawKind::Dedent; break;
      case TokenType::EOL: r.kind = RawKind::Newline; break;
      case TokenType::ERRORTOKEN: r.kind = RawKind::ErrorToken; break;
      default: r.op = t.ttype; break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TypedToken> tokenize(std::string_view source, LexMode mode = LexMode::File) {
  return normalize(lex(source, mode));
}

inline bool has_error(std::span<const TypedToken> tokens) {
  return std::any_of(tokens.begin(), tokens.end(),
                     [](const TypedToken& t) { return t.ttype == TokenType::ERRORTOKEN; });
}

}  // namespace tyco::lexer
