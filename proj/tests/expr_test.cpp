#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "expr_corpus.hpp"
#include "minkhelix/errors.hpp"
#include "minkhelix/expr.hpp"

namespace minkhelix {
namespace {

Expr num(double v) { return Expr::number(v); }
Expr var() { return Expr::variable(); }

TEST(Parse, StructureOfExampleCurvature) {
  const Expr expected =
      Expr::binary(ExprKind::Div, Expr::call(MathFunction::Sinh, Expr::call(MathFunction::Ln, num(2))), var());
  EXPECT_EQ(parse("sinh(ln(2))/s"), expected);
}

TEST(Parse, StructureOfRationalTorsion) {
  const Expr expected = Expr::binary(
      ExprKind::Div, num(1), Expr::binary(ExprKind::Add, Expr::binary(ExprKind::Pow, var(), num(2)), num(1)));
  EXPECT_EQ(parse("1/(s^2+1)"), expected);
  EXPECT_EQ(print_expr(expected), "(1/((s^2)+1))");
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse("2^3^2"), Expr::binary(ExprKind::Pow, num(2), Expr::binary(ExprKind::Pow, num(3), num(2))));
  EXPECT_EQ(parse("-2^2"), Expr::negate(Expr::binary(ExprKind::Pow, num(2), num(2))));
  EXPECT_EQ(parse("1-2-3"), Expr::binary(ExprKind::Sub, Expr::binary(ExprKind::Sub, num(1), num(2)), num(3)));
  EXPECT_EQ(parse("1+2*3"), Expr::binary(ExprKind::Add, num(1), Expr::binary(ExprKind::Mul, num(2), num(3))));
  EXPECT_EQ(parse("-s*2"), Expr::binary(ExprKind::Mul, Expr::negate(var()), num(2)));
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(print_expr(var()), "s");
  EXPECT_EQ(print_expr(Expr::call(MathFunction::Sinh, Expr::call(MathFunction::Ln, num(2)))), "sinh(ln(2))");
  EXPECT_EQ(print_expr(parse("-pi*e")), "((-pi)*e)");
  EXPECT_EQ(print_expr(parse("1e-10+s")), "(1e-10+s)");
}

TEST(Parse, ErrorOffsets) {
  try {
    parse("2 + * 3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    parse("s + foo(1)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(e.detail().find("unknown identifier"), std::string::npos);
  }
  try {
    parse("(s+1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.detail().find("unbalanced"), std::string::npos);
  }
  try {
    parse("1.2.3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.detail().find("malformed number"), std::string::npos);
  }
}

TEST(Parse, NoImplicitMultiplication) {
  EXPECT_THROW(parse("2s"), ParseError);
  EXPECT_THROW(parse("2(s)"), ParseError);
  EXPECT_THROW(parse("s s"), ParseError);
}

TEST(Parse, RejectsOverflowAndDeepNesting) {
  EXPECT_THROW(parse("1e999"), ParseError);
  EXPECT_THROW(parse(std::string(1000, '(') + "s" + std::string(1000, ')')), ParseError);
  EXPECT_THROW(parse(std::string(5000, '-') + "s"), ParseError);
  EXPECT_NO_THROW(parse(std::string(100, '(') + "s" + std::string(100, ')')));
}

TEST(Corpus, EvaluatesToHandComputedValues) {
  for (const auto& entry : testing::expression_corpus()) {
    const double got = eval(parse(entry.text), entry.s);
    EXPECT_NEAR(got, entry.expected, 1e-15 * std::max(1.0, std::abs(entry.expected)) * 4) << entry.text;
  }
}

TEST(Corpus, RoundTripsThroughPrinter) {
  for (const auto& entry : testing::expression_corpus()) {
    const Expr once = parse(entry.text);
    const std::string printed = print_expr(once);
    const Expr twice = parse(printed);
    EXPECT_EQ(twice, once) << entry.text << " -> " << printed;
    EXPECT_EQ(print_expr(twice), printed);
  }
}

TEST(Corpus, MalformedInputsRaiseParseError) {
  for (const char* text : testing::malformed_corpus()) EXPECT_THROW(parse(text), ParseError) << text;
}

TEST(Eval, DomainViolations) {
  EXPECT_THROW(eval(parse("ln(s)"), -1.0), EvalError);
  EXPECT_THROW(eval(parse("ln(s)"), 0.0), EvalError);
  EXPECT_THROW(eval(parse("1/s"), 0.0), EvalError);
  EXPECT_THROW(eval(parse("sec(s)"), std::acos(0.0)), EvalError);
  EXPECT_THROW(eval(parse("tan(s)"), 3 * std::acos(0.0)), EvalError);
  EXPECT_THROW(eval(parse("sqrt(s)"), -0.5), EvalError);
  EXPECT_THROW(eval(parse("coth(s)"), 0.0), EvalError);
  EXPECT_THROW(eval(parse("s^0.5"), -2.0), EvalError);
  EXPECT_THROW(eval(parse("exp(s)"), 1000.0), EvalError);
  EXPECT_NO_THROW(eval(parse("sec(s)"), 1.0));
}

TEST(Eval, ExampleTwoCurvatureIsExact) { EXPECT_DOUBLE_EQ(eval(parse("sinh(ln(2))/s"), 2.0), 0.375); }

// Random well-formed trees print and reparse to the same tree.
Expr random_tree(std::mt19937_64& g, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  switch (pick(g)) {
    case 0: return Expr::number(std::uniform_real_distribution<double>(0.0, 100.0)(g));
    case 1: return Expr::variable();
    case 2: return Expr::constant(g() % 2 ? NamedConstant::Pi : NamedConstant::E);
    case 3: return Expr::negate(random_tree(g, depth - 1));
    case 4: return Expr::call(static_cast<MathFunction>(g() % 12), random_tree(g, depth - 1));
    default: {
      const auto op = static_cast<ExprKind>(static_cast<int>(ExprKind::Add) + static_cast<int>(g() % 5));
      return Expr::binary(op, random_tree(g, depth - 1), random_tree(g, depth - 1));
    }
  }
}

TEST(Property, RandomTreesRoundTrip) {
  std::mt19937_64 g(99);
  for (int i = 0; i < 2000; ++i) {
    const Expr tree = random_tree(g, 6);
    EXPECT_EQ(parse(print_expr(tree)), tree) << print_expr(tree);
  }
}

TEST(Property, RandomBytesNeverCrash) {
  std::mt19937_64 g(7);
  const std::string alphabet = "0123456789.eE+-*/^() sinhcotaperlqbx\t\n\x01\xff";
  for (int i = 0; i < 10000; ++i) {
    std::string text(g() % 40, ' ');
    for (char& c : text) c = (g() % 4 == 0) ? static_cast<char>(g() % 256) : alphabet[g() % alphabet.size()];
    try {
      const Expr e = parse(text);
      try {
        eval(e, 0.5);
      } catch (const EvalError&) {
      }
    } catch (const ParseError&) {
    }
  }
}

}  // namespace
}  // namespace minkhelix
