#include "minkhelix/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <limits>
#include <sstream>
#include <system_error>

#include "minkhelix/errors.hpp"

namespace minkhelix {

struct Expr::Node {
  ExprKind kind = ExprKind::Number;
  double value = 0.0;
  int tag = 0;  // MathFunction or NamedConstant
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

constexpr std::array<std::pair<std::string_view, MathFunction>, 12> kFunctions{{
    {"sin", MathFunction::Sin},
    {"cos", MathFunction::Cos},
    {"tan", MathFunction::Tan},
    {"sec", MathFunction::Sec},
    {"sinh", MathFunction::Sinh},
    {"cosh", MathFunction::Cosh},
    {"tanh", MathFunction::Tanh},
    {"coth", MathFunction::Coth},
    {"exp", MathFunction::Exp},
    {"ln", MathFunction::Ln},
    {"sqrt", MathFunction::Sqrt},
    {"abs", MathFunction::Abs},
}};

constexpr double kPoleTolerance = 1e-12;
constexpr int kMaxNesting = 256;
// Left-deep chains ("1+1+...") are not depth-limited by nesting, so cap the length.
constexpr std::size_t kMaxLength = 4096;

bool is_binary(ExprKind k) {
  return k == ExprKind::Add || k == ExprKind::Sub || k == ExprKind::Mul || k == ExprKind::Div || k == ExprKind::Pow;
}

}  // namespace

Expr Expr::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Number;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Variable;
  return Expr(std::move(n));
}

Expr Expr::constant(NamedConstant c) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Constant;
  n->tag = static_cast<int>(c);
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Negate;
  n->a = std::move(operand.node_);
  return Expr(std::move(n));
}

Expr Expr::binary(ExprKind op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw std::invalid_argument("Expr::binary: not a binary operator");
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Expr(std::move(n));
}

Expr Expr::call(MathFunction fn, Expr argument) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Call;
  n->tag = static_cast<int>(fn);
  n->a = std::move(argument.node_);
  return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
NamedConstant Expr::named_constant() const { return static_cast<NamedConstant>(node_->tag); }
MathFunction Expr::function() const { return static_cast<MathFunction>(node_->tag); }
Expr Expr::operand() const { return Expr(node_->a); }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

bool operator==(const Expr& x, const Expr& y) {
  const Expr::Node* a = x.node_.get();
  const Expr::Node* b = y.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Number:
      return a->value == b->value;
    case ExprKind::Variable:
      return true;
    case ExprKind::Constant:
      return a->tag == b->tag;
    case ExprKind::Negate:
      return Expr(a->a) == Expr(b->a);
    case ExprKind::Call:
      return a->tag == b->tag && Expr(a->a) == Expr(b->a);
    default:
      return Expr(a->a) == Expr(b->a) && Expr(a->b) == Expr(b->b);
  }
}

std::string_view function_name(MathFunction fn) {
  for (const auto& [name, f] : kFunctions)
    if (f == fn) return name;
  return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) return t;

    const char c = text_[pos_];
    const auto single = [&](Tok k) {
      t.kind = k;
      t.text = text_.substr(pos_, 1);
      ++pos_;
      return t;
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      default: break;
    }
    if (is_digit(c) || c == '.') return lex_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      t.kind = Tok::Ident;
      t.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      return t;
    }
    throw ParseError(pos_, std::string("unexpected character '") + printable(c) + "'");
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    std::ostringstream os;
    os << "\\x" << std::hex << (static_cast<unsigned>(static_cast<unsigned char>(c)));
    return os.str();
  }

  Token lex_number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    std::size_t int_digits = 0;
    while (p < text_.size() && is_digit(text_[p])) ++p, ++int_digits;
    std::size_t frac_digits = 0;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (p < text_.size() && is_digit(text_[p])) ++p, ++frac_digits;
      if (frac_digits == 0) throw ParseError(start, "malformed number: expected digits after '.'");
    }
    if (int_digits == 0 && frac_digits == 0) throw ParseError(start, "malformed number");
    // An exponent needs at least one digit; otherwise 'e' is left for the identifier lexer.
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && is_digit(text_[q])) {
        while (q < text_.size() && is_digit(text_[q])) ++q;
        p = q;
      }
    }
    if (p < text_.size() && text_[p] == '.') throw ParseError(p, "malformed number: repeated '.'");

    Token t;
    t.kind = Tok::Number;
    t.offset = start;
    t.text = text_.substr(start, p - start);
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && !std::isfinite(t.number)))
      throw ParseError(start, "number out of range");
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw ParseError(start, "malformed number");
    pos_ = p;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Expr parse_all() {
    Expr e = parse_expr();
    if (current_.kind != Tok::End) {
      if (current_.kind == Tok::RParen) throw ParseError(current_.offset, "unbalanced ')'");
      throw ParseError(current_.offset, "unexpected '" + std::string(current_.text) + "' after complete expression");
    }
    return e;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p, std::size_t offset) : parser(p) {
      if (++parser.depth_ > kMaxNesting) throw ParseError(offset, "expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  void advance() { current_ = lexer_.next(); }

  Expr parse_expr() {
    DepthGuard guard(*this, current_.offset);
    Expr lhs = parse_term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const ExprKind op = current_.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      advance();
      lhs = Expr::binary(op, lhs, parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (current_.kind == Tok::Star || current_.kind == Tok::Slash) {
      const ExprKind op = current_.kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      advance();
      lhs = Expr::binary(op, lhs, parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    DepthGuard guard(*this, current_.offset);
    if (current_.kind == Tok::Minus) {
      advance();
      return Expr::negate(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (current_.kind == Tok::Caret) {
      advance();
      return Expr::binary(ExprKind::Pow, base, parse_unary());
    }
    return base;
  }

  Expr parse_primary() {
    const Token t = current_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        return Expr::number(t.number);
      case Tok::LParen: {
        advance();
        Expr inner = parse_expr();
        expect_rparen(t.offset);
        return inner;
      }
      case Tok::Ident:
        return parse_identifier(t);
      case Tok::End:
        throw ParseError(t.offset, "unexpected end of input");
      case Tok::RParen:
        throw ParseError(t.offset, "unbalanced ')'");
      default:
        throw ParseError(t.offset, "unexpected '" + std::string(t.text) + "'");
    }
  }

  Expr parse_identifier(const Token& t) {
    advance();
    if (t.text == "s") return Expr::variable();
    if (t.text == "pi") return Expr::constant(NamedConstant::Pi);
    if (t.text == "e") return Expr::constant(NamedConstant::E);
    for (const auto& [name, fn] : kFunctions) {
      if (name != t.text) continue;
      if (current_.kind != Tok::LParen)
        throw ParseError(current_.offset, "expected '(' after function '" + std::string(name) + "'");
      const std::size_t open = current_.offset;
      advance();
      Expr arg = parse_expr();
      expect_rparen(open);
      return Expr::call(fn, arg);
    }
    throw ParseError(t.offset, "unknown identifier '" + std::string(t.text) + "'");
  }

  void expect_rparen(std::size_t open_offset) {
    if (current_.kind == Tok::RParen) {
      advance();
      return;
    }
    if (current_.kind == Tok::End)
      throw ParseError(current_.offset, "unbalanced '(' opened at offset " + std::to_string(open_offset));
    throw ParseError(current_.offset, "expected ')' but found '" + std::string(current_.text) + "'");
  }

  Lexer lexer_;
  Token current_;
  int depth_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  if (text.size() > kMaxLength) throw ParseError(kMaxLength, "expression longer than " + std::to_string(kMaxLength) + " bytes");
  return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void domain_fail(std::string_view what, double s) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " at s = " << s;
  throw EvalError(msg.str());
}

double apply(MathFunction fn, double x, double s) {
  switch (fn) {
    case MathFunction::Sin: return std::sin(x);
    case MathFunction::Cos: return std::cos(x);
    case MathFunction::Tan: {
      const double c = std::cos(x);
      if (std::abs(c) < kPoleTolerance) domain_fail("tan at a pole", s);
      return std::tan(x);
    }
    case MathFunction::Sec: {
      const double c = std::cos(x);
      if (std::abs(c) < kPoleTolerance) domain_fail("sec at a pole", s);
      return 1.0 / c;
    }
    case MathFunction::Sinh: return std::sinh(x);
    case MathFunction::Cosh: return std::cosh(x);
    case MathFunction::Tanh: return std::tanh(x);
    case MathFunction::Coth: {
      if (x == 0.0) domain_fail("coth of zero", s);
      return 1.0 / std::tanh(x);
    }
    case MathFunction::Exp: return std::exp(x);
    case MathFunction::Ln: {
      if (!(x > 0.0)) domain_fail("ln of a non-positive value", s);
      return std::log(x);
    }
    case MathFunction::Sqrt: {
      if (x < 0.0) domain_fail("sqrt of a negative value", s);
      return std::sqrt(x);
    }
    case MathFunction::Abs: return std::abs(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double eval_node(const Expr& e, double s) {
  double r = 0.0;
  switch (e.kind()) {
    case ExprKind::Number: return e.value();
    case ExprKind::Variable: return s;
    case ExprKind::Constant:
      return e.named_constant() == NamedConstant::Pi ? std::numbers::pi : std::numbers::e;
    case ExprKind::Negate: return -eval_node(e.operand(), s);
    case ExprKind::Call: r = apply(e.function(), eval_node(e.operand(), s), s); break;
    case ExprKind::Add: r = eval_node(e.lhs(), s) + eval_node(e.rhs(), s); break;
    case ExprKind::Sub: r = eval_node(e.lhs(), s) - eval_node(e.rhs(), s); break;
    case ExprKind::Mul: r = eval_node(e.lhs(), s) * eval_node(e.rhs(), s); break;
    case ExprKind::Div: {
      const double num = eval_node(e.lhs(), s);
      const double den = eval_node(e.rhs(), s);
      if (den == 0.0) domain_fail("division by zero", s);
      r = num / den;
      break;
    }
    case ExprKind::Pow: {
      const double base = eval_node(e.lhs(), s);
      const double ex = eval_node(e.rhs(), s);
      if (base == 0.0 && ex < 0.0) domain_fail("division by zero in power", s);
      r = std::pow(base, ex);
      if (std::isnan(r)) domain_fail("power of a negative base with non-integer exponent", s);
      break;
    }
  }
  if (!std::isfinite(r)) domain_fail("non-finite result", s);
  return r;
}

void print_node(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Number: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, e.value());
      out.append(buf, res.ptr);
      return;
    }
    case ExprKind::Variable: out += 's'; return;
    case ExprKind::Constant: out += e.named_constant() == NamedConstant::Pi ? "pi" : "e"; return;
    case ExprKind::Negate:
      out += "(-";
      print_node(e.operand(), out);
      out += ')';
      return;
    case ExprKind::Call:
      out += function_name(e.function());
      out += '(';
      print_node(e.operand(), out);
      out += ')';
      return;
    default: break;
  }
  static constexpr char kSymbol[] = {'+', '-', '*', '/', '^'};
  out += '(';
  print_node(e.lhs(), out);
  out += kSymbol[static_cast<int>(e.kind()) - static_cast<int>(ExprKind::Add)];
  print_node(e.rhs(), out);
  out += ')';
}

}  // namespace

double eval(const Expr& expr, double s) { return eval_node(expr, s); }

std::string print_expr(const Expr& expr) {
  std::string out;
  print_node(expr, out);
  return out;
}

}  // namespace minkhelix
