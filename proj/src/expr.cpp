#include "maxsurf/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

namespace maxsurf::expr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Expr make(Node::Variant v) { return Expr(std::make_shared<const Node>(std::move(v))); }

const Constant* as_constant(const Expr& e) { return std::get_if<Constant>(&e.node().get()); }

}  // namespace

std::string_view func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
    case Func::Tanh: return "tanh";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

Expr::Expr() : node_(std::make_shared<const Node>(Constant{0.0})) {}

Expr constant(cplx c) { return make(Constant{c}); }
Expr variable() { return make(Variable{}); }
Expr negate(Expr a) { return make(Negate{std::move(a)}); }
Expr binary(BinOp op, Expr a, Expr b) { return make(Binary{op, std::move(a), std::move(b)}); }
Expr power(Expr base, int exponent) { return make(Power{std::move(base), exponent}); }
Expr call(Func f, Expr arg) { return make(Call{f, std::move(arg)}); }

Expr sconj(Expr e) {
  if (const auto* s = std::get_if<Sconj>(&e.node().get())) return s->arg;
  return make(Sconj{std::move(e)});
}

Expr operator+(Expr a, Expr b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return negate(std::move(a)); }

bool is_constant(const Expr& e, cplx value) {
  const auto* c = as_constant(e);
  return c != nullptr && c->value == value;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

cplx int_power(cplx base, int n, const Expr& node) {
  if (n == 0) return 1.0;
  if (n < 0 && base == cplx(0.0)) throw EvalError("negative power of zero", format(node));
  unsigned m = n < 0 ? static_cast<unsigned>(-(n + 1)) + 1u : static_cast<unsigned>(n);
  cplx result = 1.0;
  cplx b = base;
  while (m != 0) {
    if (m & 1u) result *= b;
    m >>= 1u;
    if (m != 0) b *= b;
  }
  return n < 0 ? 1.0 / result : result;
}

cplx eval_node(const Expr& e, cplx z) {
  return std::visit(
      overloaded{
          [](const Constant& c) { return c.value; },
          [z](const Variable&) { return z; },
          [z](const Negate& n) { return -eval_node(n.arg, z); },
          [z, &e](const Binary& b) {
            const cplx l = eval_node(b.lhs, z);
            const cplx r = eval_node(b.rhs, z);
            switch (b.op) {
              case BinOp::Add: return l + r;
              case BinOp::Sub: return l - r;
              case BinOp::Mul: return l * r;
              case BinOp::Div:
                if (r == cplx(0.0)) throw EvalError("division by zero", format(e));
                return l / r;
            }
            return cplx{};
          },
          [z, &e](const Power& p) { return int_power(eval_node(p.base, z), p.exponent, e); },
          [z, &e](const Call& c) {
            const cplx a = eval_node(c.arg, z);
            switch (c.func) {
              case Func::Exp: return std::exp(a);
              case Func::Log:
                if (a == cplx(0.0)) throw EvalError("log of zero", format(e));
                return std::log(a);
              case Func::Sin: return std::sin(a);
              case Func::Cos: return std::cos(a);
              case Func::Sinh: return std::sinh(a);
              case Func::Cosh: return std::cosh(a);
              case Func::Tanh: return std::tanh(a);
              case Func::Sqrt: return std::sqrt(a);
            }
            return cplx{};
          },
          [z](const Sconj& s) { return std::conj(eval_node(s.arg, std::conj(z))); },
      },
      e.node().get());
}

}  // namespace

cplx Expr::eval(cplx z) const { return eval_node(*this, z); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr run() {
    Expr e = expression();
    skip_space();
    if (pos_ != s_.size()) fail("operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = binary(BinOp::Add, lhs, term());
      else if (accept('-'))
        lhs = binary(BinOp::Sub, lhs, term());
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = binary(BinOp::Mul, lhs, unary());
      else if (accept('/'))
        lhs = binary(BinOp::Div, lhs, unary());
      else
        return lhs;
    }
  }

  Expr unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return power_expr();
  }

  Expr power_expr() {
    Expr base = primary();
    if (accept('^')) {
      const bool paren = accept('(');
      const int n = integer();
      if (paren) expect(')');
      return power(base, n);
    }
    return base;
  }

  int integer() {
    skip_space();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("integer exponent");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("integer exponent in range");
    }
    return neg ? -value : value;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("operand");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return named();
    fail("operand");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
        pos_ = p;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("decimal literal");
    }
    // `2i` is an imaginary literal; `2in` is not.
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        (pos_ + 1 == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_'))) {
      ++pos_;
      return constant(cplx(0.0, value));
    }
    return constant(value);
  }

  Expr named() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "z") return variable();
    if (name == "i") return constant(cplx(0.0, 1.0));
    if (name == "pi") return constant(std::numbers::pi);
    static constexpr Func funcs[] = {Func::Exp, Func::Log, Func::Sin, Func::Cos,
                                     Func::Sinh, Func::Cosh, Func::Tanh, Func::Sqrt};
    for (Func f : funcs) {
      if (name == func_name(f)) {
        expect('(');
        Expr arg = expression();
        expect(')');
        return call(f, arg);
      }
    }
    if (name == "sconj") {
      expect('(');
      Expr arg = expression();
      expect(')');
      return sconj(arg);
    }
    pos_ = start;
    fail("'z', 'i', 'pi' or a function name");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength: sum 1, product 2, unary minus 3, power 4, atom 5.
constexpr int kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5;

std::string real_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Printed {
  std::string text;
  int strength;
};

Printed print_constant(cplx c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return {real_text(re), re < 0 || std::signbit(re) ? kUnary : kAtom};
  std::string imag_part;
  int imag_strength = kProduct;
  const double mag = std::abs(im);
  if (mag == 1.0) {
    imag_part = "i";
    imag_strength = kAtom;
  } else {
    imag_part = real_text(mag) + "*i";
  }
  if (re == 0.0 && !std::signbit(re)) {
    if (im < 0) return {"-" + imag_part, imag_strength == kAtom ? kUnary : kProduct};
    return {imag_part, imag_strength};
  }
  return {real_text(re) + (im < 0 ? " - " : " + ") + imag_part, kSum};
}

Printed print(const Expr& e);

std::string wrap(const Expr& e, int min_strength) {
  Printed p = print(e);
  if (p.strength < min_strength) return "(" + p.text + ")";
  return p.text;
}

Printed print(const Expr& e) {
  return std::visit(
      overloaded{
          [](const Constant& c) { return print_constant(c.value); },
          [](const Variable&) { return Printed{"z", kAtom}; },
          [](const Negate& n) { return Printed{"-" + wrap(n.arg, kUnary), kUnary}; },
          [](const Binary& b) {
            switch (b.op) {
              case BinOp::Add: return Printed{wrap(b.lhs, kSum) + " + " + wrap(b.rhs, kProduct), kSum};
              case BinOp::Sub: return Printed{wrap(b.lhs, kSum) + " - " + wrap(b.rhs, kProduct), kSum};
              case BinOp::Mul: return Printed{wrap(b.lhs, kProduct) + "*" + wrap(b.rhs, kUnary), kProduct};
              case BinOp::Div: return Printed{wrap(b.lhs, kProduct) + "/" + wrap(b.rhs, kUnary), kProduct};
            }
            return Printed{};
          },
          [](const Power& p) {
            return Printed{wrap(p.base, kAtom) + "^" + std::to_string(p.exponent), kPower};
          },
          [](const Call& c) {
            return Printed{std::string(func_name(c.func)) + "(" + print(c.arg).text + ")", kAtom};
          },
          [](const Sconj& s) { return Printed{"sconj(" + print(s.arg).text + ")", kAtom}; },
      },
      e.node().get());
}

}  // namespace

std::string format(const Expr& e) { return print(e).text; }

// ---------------------------------------------------------------------------
// Differentiation

namespace {

Expr add(Expr a, Expr b) {
  if (is_constant(a, 0.0)) return b;
  if (is_constant(b, 0.0)) return a;
  return a + b;
}

Expr sub(Expr a, Expr b) {
  if (is_constant(b, 0.0)) return a;
  if (is_constant(a, 0.0)) return negate(b);
  return a - b;
}

Expr mul(Expr a, Expr b) {
  if (is_constant(a, 0.0) || is_constant(b, 0.0)) return constant(0.0);
  if (is_constant(a, 1.0)) return b;
  if (is_constant(b, 1.0)) return a;
  return a * b;
}

Expr neg(Expr a) {
  if (is_constant(a, 0.0)) return a;
  if (const auto* n = std::get_if<Negate>(&a.node().get())) return n->arg;
  return negate(a);
}

}  // namespace

Expr differentiate(const Expr& e) {
  return std::visit(
      overloaded{
          [](const Constant&) { return constant(0.0); },
          [](const Variable&) { return constant(1.0); },
          [](const Negate& n) { return neg(differentiate(n.arg)); },
          [](const Binary& b) {
            const Expr da = differentiate(b.lhs);
            const Expr db = differentiate(b.rhs);
            switch (b.op) {
              case BinOp::Add: return add(da, db);
              case BinOp::Sub: return sub(da, db);
              case BinOp::Mul: return add(mul(da, b.rhs), mul(b.lhs, db));
              case BinOp::Div: {
                // (a/b)' = a'/b - a b' / b^2
                Expr first = is_constant(da, 0.0) ? constant(0.0) : da / b.rhs;
                Expr second = is_constant(db, 0.0) ? constant(0.0) : mul(b.lhs, db) / power(b.rhs, 2);
                return sub(first, second);
              }
            }
            return constant(0.0);
          },
          [](const Power& p) {
            if (p.exponent == 0) return constant(0.0);
            const Expr da = differentiate(p.base);
            Expr outer = p.exponent == 1 ? constant(1.0)
                         : p.exponent == 2
                             ? mul(constant(2.0), p.base)
                             : mul(constant(static_cast<double>(p.exponent)), power(p.base, p.exponent - 1));
            return mul(outer, da);
          },
          [](const Call& c) {
            const Expr da = differentiate(c.arg);
            const Expr& a = c.arg;
            switch (c.func) {
              case Func::Exp: return mul(call(Func::Exp, a), da);
              case Func::Log: return is_constant(da, 0.0) ? constant(0.0) : da / a;
              case Func::Sin: return mul(call(Func::Cos, a), da);
              case Func::Cos: return neg(mul(call(Func::Sin, a), da));
              case Func::Sinh: return mul(call(Func::Cosh, a), da);
              case Func::Cosh: return mul(call(Func::Sinh, a), da);
              case Func::Tanh: return mul(constant(1.0) - power(call(Func::Tanh, a), 2), da);
              case Func::Sqrt:
                return is_constant(da, 0.0) ? constant(0.0) : da / (constant(2.0) * call(Func::Sqrt, a));
            }
            return constant(0.0);
          },
          [](const Sconj& s) {
            Expr d = differentiate(s.arg);
            if (as_constant(d) != nullptr) return conjugate_coefficients(d);
            return sconj(d);
          },
      },
      e.node().get());
}

// ---------------------------------------------------------------------------
// Structural transforms

Expr conjugate_coefficients(const Expr& e) {
  return std::visit(
      overloaded{
          [](const Constant& c) { return constant(std::conj(c.value)); },
          [&e](const Variable&) { return e; },
          [](const Negate& n) { return negate(conjugate_coefficients(n.arg)); },
          [](const Binary& b) {
            return binary(b.op, conjugate_coefficients(b.lhs), conjugate_coefficients(b.rhs));
          },
          [](const Power& p) { return power(conjugate_coefficients(p.base), p.exponent); },
          [](const Call& c) { return call(c.func, conjugate_coefficients(c.arg)); },
          [](const Sconj& s) { return eliminate_sconj(s.arg); },
      },
      e.node().get());
}

Expr eliminate_sconj(const Expr& e) {
  return std::visit(
      overloaded{
          [&e](const Constant&) { return e; },
          [&e](const Variable&) { return e; },
          [](const Negate& n) { return negate(eliminate_sconj(n.arg)); },
          [](const Binary& b) { return binary(b.op, eliminate_sconj(b.lhs), eliminate_sconj(b.rhs)); },
          [](const Power& p) { return power(eliminate_sconj(p.base), p.exponent); },
          [](const Call& c) { return call(c.func, eliminate_sconj(c.arg)); },
          [](const Sconj& s) { return conjugate_coefficients(s.arg); },
      },
      e.node().get());
}

Expr compose(const Expr& e, const Expr& inner) {
  return std::visit(
      overloaded{
          [&e](const Constant&) { return e; },
          [&inner](const Variable&) { return inner; },
          [&inner](const Negate& n) { return negate(compose(n.arg, inner)); },
          [&inner](const Binary& b) { return binary(b.op, compose(b.lhs, inner), compose(b.rhs, inner)); },
          [&inner](const Power& p) { return power(compose(p.base, inner), p.exponent); },
          [&inner](const Call& c) { return call(c.func, compose(c.arg, inner)); },
          // sconj(a)(k(z)) = conj(a(conj k(z))) = sconj(a o k~)(z) with k~ = conj_coeffs(k)
          [&inner](const Sconj& s) { return sconj(compose(s.arg, conjugate_coefficients(inner))); },
      },
      e.node().get());
}

}  // namespace maxsurf::expr
