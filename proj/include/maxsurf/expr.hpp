#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "maxsurf/error.hpp"

namespace maxsurf::expr {

enum class Func { Exp, Log, Sin, Cos, Sinh, Cosh, Tanh, Sqrt };
enum class BinOp { Add, Sub, Mul, Div };

std::string_view func_name(Func f);

class Node;

/// Immutable handle to an expression tree in the variable `z`.
///
/// Expressions denote holomorphic functions of one complex variable. The
/// `sconj` node is the Schwarz conjugate z -> conj(e(conj z)); it is
/// holomorphic whenever `e` is. Handles share structure and are safe to
/// evaluate concurrently.
class Expr {
 public:
  Expr();  // the constant 0
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }

  cplx eval(cplx z) const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Constant {
  cplx value;
};
struct Variable {};
struct Negate {
  Expr arg;
};
struct Binary {
  BinOp op;
  Expr lhs, rhs;
};
struct Power {
  Expr base;
  int exponent;
};
struct Call {
  Func func;
  Expr arg;
};
struct Sconj {
  Expr arg;
};

class Node {
 public:
  using Variant = std::variant<Constant, Variable, Negate, Binary, Power, Call, Sconj>;

  explicit Node(Variant v) : v_(std::move(v)) {}
  const Variant& get() const { return v_; }

 private:
  Variant v_;
};

// Raw constructors: they build exactly the node asked for.
Expr constant(cplx c);
Expr variable();
Expr negate(Expr a);
Expr binary(BinOp op, Expr a, Expr b);
Expr power(Expr base, int exponent);
Expr call(Func f, Expr arg);

/// Schwarz conjugate. sconj(sconj(e)) collapses to e; nothing else is simplified.
Expr sconj(Expr e);

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

bool is_constant(const Expr& e, cplx value);

/// Parses the expression language. Throws ParseError.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' int | '^' '(' int ')')?
///   primary := number | number 'i' | 'i' | 'z' | 'pi' | name '(' expr ')' | '(' expr ')'
Expr parse(std::string_view text);

/// Canonical text. Re-parses to a pointwise-equal expression.
std::string format(const Expr& e);

/// Symbolic d/dz. Constant zeros and unit factors produced by the rules are
/// dropped; the input is otherwise left as written.
Expr differentiate(const Expr& e);

/// e with `z` replaced by `inner`. Under sconj the coefficient-conjugate of
/// `inner` is substituted, so the composite is still the pointwise composition.
Expr compose(const Expr& e, const Expr& inner);

/// An sconj-free expression equal to sconj(e): constants conjugated, sconj
/// nodes unwrapped.
Expr conjugate_coefficients(const Expr& e);

/// Pushes every sconj node down to the leaves and removes it.
Expr eliminate_sconj(const Expr& e);

}  // namespace maxsurf::expr
