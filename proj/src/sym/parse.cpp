#include "phaselab/sym/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/canonical.hpp"
#include "phaselab/sym/errors.hpp"

namespace phaselab::sym {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  bool primed = false;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), false, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      Token t{Tok::ident, std::string(s.substr(start, i - start)), false, start};
      if (i < s.size() && s[i] == '\'') {
        t.primed = true;
        ++i;
      }
      out.push_back(std::move(t));
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({kind, std::string(1, ch), false, start});
    ++i;
  }
  out.push_back({Tok::end, "", false, s.size()});
  return out;
}

/// Axes named by a concatenation of derivative tokens ("dtdxdx"), or nullopt.
std::optional<std::vector<Axis>> derivative_axes(const std::string& name) {
  if (name.empty() || name.size() % 2 != 0) return std::nullopt;
  std::vector<Axis> axes;
  for (std::size_t k = 0; k < name.size(); k += 2) {
    if (name[k] != 'd') return std::nullopt;
    switch (name[k + 1]) {
      case 't': axes.push_back(Axis::t); break;
      case 'x': axes.push_back(Axis::x); break;
      case 'y': axes.push_back(Axis::y); break;
      case 'z': axes.push_back(Axis::z); break;
      default: return std::nullopt;
    }
  }
  return axes;
}

std::optional<Axis> coordinate_axis(const std::string& name) {
  if (name == "t") return Axis::t;
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  return std::nullopt;
}

Frame frame_of(const Token& t) { return t.primed ? Frame::primed : Frame::unprimed; }

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Expr run() {
    Expr e = expr();
    if (peek().kind != Tok::end) throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      if (peek().kind == Tok::end) throw ParseError(std::string("expected ") + what + ", got end of input", peek().pos);
      throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'", peek().pos);
    }
    ++pos_;
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Expr t = term();
      terms.push_back(minus ? -t : t);
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    bool negate = false;
    if (peek().kind == Tok::minus) {
      ++pos_;
      negate = true;
    }
    std::vector<Expr> factors{power()};
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      if (next().kind == Tok::star)
        factors.push_back(power());
      else
        factors.push_back(reciprocal());
    }
    Expr t = Expr::product(std::move(factors));
    return negate ? -t : t;
  }

  Expr reciprocal() {
    const std::size_t at = peek().pos;
    const CanonicalForm denom = normalize(power());
    if (denom.is_zero()) throw ParseError("division by zero", at);
    try {
      return to_expr(pow(denom, -1));
    } catch (const DomainError&) {
      throw ParseError("division is only allowed by rationals and parameters", at);
    }
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind != Tok::caret) return base;
    ++pos_;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      ++pos_;
      negative = true;
    }
    const Token& n = peek();
    expect(Tok::number, "integer exponent");
    const int k = std::stoi(n.text) * (negative ? -1 : 1);
    if (k < 0) {
      try {
        return to_expr(pow(normalize(base), k));
      } catch (const DomainError&) {
        throw ParseError("negative exponent on a non-parameter", n.pos);
      }
    }
    return Expr::power(base, k);
  }

  Expr parenthesized() {
    expect(Tok::lparen, "'('");
    Expr e = expr();
    expect(Tok::rparen, "')'");
    return e;
  }

  std::vector<Expr> arguments(std::size_t count) {
    expect(Tok::lparen, "'('");
    std::vector<Expr> args{expr()};
    while (args.size() < count) {
      expect(Tok::comma, "','");
      args.push_back(expr());
    }
    expect(Tok::rparen, "')'");
    return args;
  }

  Expr differentiate(const Expr& e, std::span<const std::pair<Axis, Frame>> chain, std::size_t at) {
    Expr out = e;
    try {
      for (auto [axis, frame] : chain) out = diff(out, Coordinate{axis, frame});
    } catch (const FrameError& err) {
      throw ParseError(err.what(), at);
    }
    return out;
  }

  Expr macro(const Token& name) {
    const Frame frame = frame_of(name);
    std::vector<Expr> terms;
    auto d = [&](const Expr& e, Axis a) {
      const std::pair<Axis, Frame> step{a, frame};
      return differentiate(e, std::span(&step, 1), name.pos);
    };
    if (name.text == "lap") {
      const Expr f = arguments(1)[0];
      for (Axis a : kSpatialAxes) terms.push_back(d(d(f, a), a));
    } else if (name.text == "gradsq") {
      const Expr f = arguments(1)[0];
      for (Axis a : kSpatialAxes) terms.push_back(pow(d(f, a), 2));
    } else if (name.text == "divg") {
      const auto args = arguments(2);
      for (Axis a : kSpatialAxes) terms.push_back(d(args[0] * d(args[1], a), a));
    } else {  // gdot
      const auto args = arguments(2);
      for (Axis a : kSpatialAxes) terms.push_back(d(args[0], a) * d(args[1], a));
    }
    return Expr::sum(std::move(terms));
  }

  Expr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::number: {
        ++pos_;
        return Expr(Rational(mpz_class(tok.text)));
      }
      case Tok::lparen: return parenthesized();
      case Tok::ident: break;
      case Tok::end: throw ParseError("unexpected end of input", tok.pos);
      default: throw ParseError("unexpected token '" + tok.text + "'", tok.pos);
    }
    ++pos_;
    const std::string& name = tok.text;

    if (auto axes = derivative_axes(name)) {
      std::vector<std::pair<Axis, Frame>> chain;
      for (Axis a : *axes) chain.emplace_back(a, frame_of(tok));
      while (peek().kind == Tok::ident) {
        auto more = derivative_axes(peek().text);
        if (!more) break;
        for (Axis a : *more) chain.emplace_back(a, frame_of(peek()));
        ++pos_;
      }
      return differentiate(parenthesized(), chain, tok.pos);
    }
    if (name == "lap" || name == "gradsq" || name == "divg" || name == "gdot") return macro(tok);
    if (auto f = field_from_name(name)) return field(*f, frame_of(tok));
    if (auto a = coordinate_axis(name)) return coordinate(*a, frame_of(tok));
    if (!tok.primed) {
      if (name == "i") return imag();
      if (auto p = param_from_name(name)) return param(*p);
    }
    throw UnknownIdentifierError(name + (tok.primed ? "'" : ""), tok.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace phaselab::sym
