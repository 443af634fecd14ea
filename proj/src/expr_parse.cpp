#include <cctype>
#include <optional>

#include "expnev/errors.hpp"
#include "expnev/expr.hpp"

namespace expnev::expr {

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.value == b.value && a.poly == b.poly && a.exponent == b.exponent &&
         a.name == b.name && a.children == b.children;
}

namespace {

using Kind = Node::Kind;

bool is_constant(const Node& n) { return n.kind == Kind::Integer || n.kind == Kind::Literal; }

Node make_constant(const GR& v, std::size_t begin, std::size_t end) {
  Node n;
  n.kind = (v.is_real() && v.real().get_den() == 1 && sgn(v.real()) >= 0) ? Kind::Integer : Kind::Literal;
  n.value = v;
  n.begin = begin;
  n.end = end;
  return n;
}

GR power(GR base, int e, std::size_t offset) {
  if (e < 0) {
    if (base.is_zero()) throw SyntaxError(offset, "zero raised to a negative power");
    base = base.inverse();
    e = -e;
  }
  GR acc(1);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

// Replaces n by a constant (or a power of z) when every operand allows it.
void fold(Node& n) {
  const auto& c = n.children;
  switch (n.kind) {
    case Kind::Sum:
    case Kind::Product:
      for (const auto& ch : c)
        if (!is_constant(ch)) return;
      {
        GR acc = n.kind == Kind::Sum ? GR(0) : GR(1);
        for (const auto& ch : c) acc = n.kind == Kind::Sum ? acc + ch.value : acc * ch.value;
        n = make_constant(acc, n.begin, n.end);
      }
      return;
    case Kind::Quotient:
      if (!is_constant(c[0]) || !is_constant(c[1])) return;
      if (c[1].value.is_zero()) throw SyntaxError(c[1].begin, "division by zero");
      n = make_constant(c[0].value / c[1].value, n.begin, n.end);
      return;
    case Kind::Negate:
      if (is_constant(c[0])) n = make_constant(-c[0].value, n.begin, n.end);
      return;
    case Kind::Power:
      if (is_constant(c[0])) {
        n = make_constant(power(c[0].value, n.exponent, c[0].begin), n.begin, n.end);
      } else if (c[0].kind == Kind::ZPoly && n.exponent >= 0) {
        if (n.exponent == 0) {
          n = make_constant(GR(1), n.begin, n.end);
        } else {
          expnev::ZPoly p = expnev::ZPoly::constant(GR(1));
          for (int k = 0; k < n.exponent; ++k) p = p * c[0].poly;
          Node z;
          z.kind = Kind::ZPoly;
          z.poly = std::move(p);
          z.begin = n.begin;
          z.end = n.end;
          n = std::move(z);
        }
      }
      return;
    default:
      return;
  }
}

// Value of a subtree that is a polynomial in z, if it is one.
std::optional<expnev::ZPoly> as_zpoly(const Node& n) {
  switch (n.kind) {
    case Kind::Integer:
    case Kind::Literal:
      return expnev::ZPoly::constant(n.value);
    case Kind::ZPoly:
      return n.poly;
    case Kind::Sum:
    case Kind::Product: {
      expnev::ZPoly acc = expnev::ZPoly::constant(GR(n.kind == Kind::Sum ? 0 : 1));
      for (const auto& ch : n.children) {
        auto p = as_zpoly(ch);
        if (!p) return std::nullopt;
        acc = n.kind == Kind::Sum ? acc + *p : acc * *p;
      }
      return acc;
    }
    case Kind::Negate: {
      auto p = as_zpoly(n.children[0]);
      if (!p) return std::nullopt;
      return -*p;
    }
    case Kind::Quotient: {
      auto p = as_zpoly(n.children[0]);
      auto q = as_zpoly(n.children[1]);
      if (!p || !q || q->degree() != 0) return std::nullopt;
      return p->scaled(GR(1) / q->leading());
    }
    case Kind::Power: {
      if (n.exponent < 0) return std::nullopt;
      auto p = as_zpoly(n.children[0]);
      if (!p) return std::nullopt;
      expnev::ZPoly acc = expnev::ZPoly::constant(GR(1));
      for (int k = 0; k < n.exponent; ++k) acc = acc * *p;
      return acc;
    }
    default:
      return std::nullopt;
  }
}

bool contains_exp(const Node& n) {
  if (n.kind == Kind::ExpUnit) return true;
  for (const auto& c : n.children)
    if (contains_exp(c)) return true;
  return false;
}

const std::vector<std::string> kOperand = {"number", "z", "i", "Y", "x<k>", "exp", "(", "-"};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Node parse() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty expression", kOperand);
    Node n = expression();
    skip_ws();
    if (pos_ < s_.size())
      throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'",
                        {"+", "-", "*", "/", "^", "end of input"});
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'", {std::string(1, c)});
    ++pos_;
  }

  Node expression() {
    skip_ws();
    const std::size_t begin = pos_;
    Node cur = term();
    bool own_sum = false;
    while (peek('+') || peek('-')) {
      const std::size_t op = pos_;
      const bool minus = s_[pos_++] == '-';
      Node t = term();
      if (minus) t = negate(std::move(t), op);
      if (!own_sum) {
        Node sum;
        sum.kind = Kind::Sum;
        sum.children.push_back(std::move(cur));
        cur = std::move(sum);
        own_sum = true;
      }
      cur.children.push_back(std::move(t));
      cur.begin = begin;
      cur.end = pos_;
      fold(cur);
      if (cur.kind != Kind::Sum) own_sum = false;
    }
    return cur;
  }

  Node term() {
    skip_ws();
    const std::size_t begin = pos_;
    Node cur = factor();
    bool own_product = false;
    while (peek('*') || peek('/')) {
      const bool div = s_[pos_++] == '/';
      Node f = factor();
      if (div) {
        Node q;
        q.kind = Kind::Quotient;
        q.children.push_back(std::move(cur));
        q.children.push_back(std::move(f));
        cur = std::move(q);
        own_product = false;
      } else if (own_product) {
        cur.children.push_back(std::move(f));
      } else {
        Node p;
        p.kind = Kind::Product;
        p.children.push_back(std::move(cur));
        p.children.push_back(std::move(f));
        cur = std::move(p);
        own_product = true;
      }
      cur.begin = begin;
      cur.end = pos_;
      fold(cur);
      if (cur.kind != Kind::Product) own_product = false;
    }
    return cur;
  }

  Node negate(Node operand, std::size_t op) {
    Node n;
    n.kind = Kind::Negate;
    n.begin = op;
    n.end = operand.end;
    n.children.push_back(std::move(operand));
    fold(n);
    return n;
  }

  Node factor() {
    skip_ws();
    const std::size_t begin = pos_;
    if (peek('-')) {
      ++pos_;
      return negate(factor(), begin);
    }
    Node b = base();
    if (peek('^')) {
      ++pos_;
      Node p;
      p.kind = Kind::Power;
      p.exponent = integer_exponent();
      p.children.push_back(std::move(b));
      p.begin = begin;
      p.end = pos_;
      fold(p);
      return p;
    }
    return b;
  }

  int integer_exponent() {
    skip_ws();
    const bool paren = peek('(');
    if (paren) ++pos_;
    skip_ws();
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')))
      throw SyntaxError(start == pos_ ? start : pos_, "power exponent must be an integer", {"integer"});
    if (pos_ - start > 6) throw SyntaxError(start, "power exponent too large", {"integer"});
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren) expect(')');
    return negative ? -v : v;
  }

  Node base() {
    skip_ws();
    const std::size_t begin = pos_;
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input", kOperand);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class v(mpz_class(std::string(s_.substr(begin, pos_ - begin))));
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        return make_constant(GR(mpq_class(0), v), begin, pos_);
      }
      if (pos_ < s_.size() && s_[pos_] == '.') throw SyntaxError(pos_, "floating-point literals are not supported");
      return make_constant(GR(v), begin, pos_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string id(s_.substr(begin, pos_ - begin));
      if (id == "exp") return exp_unit(begin);
      if (id == "z") {
        Node n;
        n.kind = Kind::ZPoly;
        n.poly = zpoly::z();
        n.begin = begin;
        n.end = pos_;
        return n;
      }
      if (id == "i") return make_constant(GR::i(), begin, pos_);
      if (id == "Y" || (id.size() > 1 && id[0] == 'x' &&
                        id.find_first_not_of("0123456789", 1) == std::string::npos && id.size() < 6)) {
        Node n;
        n.kind = Kind::Variable;
        n.name = id;
        n.begin = begin;
        n.end = pos_;
        return n;
      }
      throw SyntaxError(begin, "unknown identifier '" + id + "'", kOperand);
    }
    if (c == '(') {
      ++pos_;
      Node inner = expression();
      expect(')');
      return inner;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'", kOperand);
  }

  Node exp_unit(std::size_t begin) {
    expect('[');
    skip_ws();
    const std::size_t arg_begin = pos_;
    Node arg = expression();
    expect(']');
    if (contains_exp(arg)) throw SyntaxError(arg_begin, "nested exp is not supported", {"polynomial in z"});
    auto p = as_zpoly(arg);
    if (!p) throw SyntaxError(arg_begin, "exp argument must be a polynomial in z", {"polynomial in z"});
    Node n;
    n.kind = Kind::ExpUnit;
    n.poly = *std::move(p);
    n.children.push_back(std::move(arg));
    n.begin = begin;
    n.end = pos_;
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// ---- rendering --------------------------------------------------------------

bool atomic_literal(const std::string& s) {
  std::size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  if (s.substr(k) == "i") return true;
  std::size_t d = k;
  while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
  if (d == k) return false;
  return d == s.size() || (d + 1 == s.size() && s[d] == 'i');
}

bool top_level_sign(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    else if (s[k] == ')') --depth;
    else if (k > 0 && depth == 0 && (s[k] == '+' || s[k] == '-')) return true;
  }
  return false;
}

std::string literal_text(const GR& v, bool leading) {
  const std::string s = v.str();
  if (atomic_literal(s) || (leading && !top_level_sign(s))) return s;
  return "(" + s + ")";
}

bool negative_looking(const Node& n) { return n.kind == Kind::Literal && n.value.str()[0] == '-'; }

std::string sum_level(const Node& n);
std::string term_level(const Node& n, bool leading);

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string factor_level(const Node& n, bool leading) {
  switch (n.kind) {
    case Kind::Integer:
      return n.value.str();
    case Kind::Literal:
      return literal_text(n.value, leading);
    case Kind::ZPoly:
      return zpoly::render(n.poly);
    case Kind::Variable:
      return n.name;
    case Kind::ExpUnit:
      return "exp[" + sum_level(n.children[0]) + "]";
    case Kind::Power: {
      const Node& b = n.children[0];
      const bool bare = b.kind == Kind::Variable || b.kind == Kind::ExpUnit || b.kind == Kind::Integer ||
                        (b.kind == Kind::ZPoly && b.poly.degree() == 1);
      const std::string base = bare ? factor_level(b, false) : paren(sum_level(b));
      return base + "^" + std::to_string(n.exponent);
    }
    case Kind::Negate: {
      const Node& o = n.children[0];
      const bool wrap = o.kind == Kind::Sum || o.kind == Kind::Product || o.kind == Kind::Quotient;
      return "-" + (wrap ? paren(sum_level(o)) : factor_level(o, false));
    }
    default:
      return paren(sum_level(n));
  }
}

std::string term_level(const Node& n, bool leading) {
  if (n.kind == Kind::Product) {
    std::string out;
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      const Node& c = n.children[k];
      if (k > 0) out += " * ";
      if (k == 0 && c.kind == Kind::Quotient)
        out += term_level(c, leading);
      else
        out += factor_level(c, leading && k == 0);
    }
    return out;
  }
  if (n.kind == Kind::Quotient) {
    const Node& num = n.children[0];
    const std::string left = (num.kind == Kind::Product || num.kind == Kind::Quotient)
                                 ? term_level(num, leading)
                                 : factor_level(num, leading);
    return left + " / " + factor_level(n.children[1], false);
  }
  return factor_level(n, leading);
}

std::string sum_level(const Node& n) {
  if (n.kind != Kind::Sum) return term_level(n, true);
  std::string out;
  for (std::size_t k = 0; k < n.children.size(); ++k) {
    const Node& c = n.children[k];
    if (k == 0) {
      out += c.kind == Kind::Sum ? paren(sum_level(c)) : term_level(c, true);
    } else if (c.kind == Kind::Negate) {
      const Node& o = c.children[0];
      out += " - " + (o.kind == Kind::Sum ? paren(sum_level(o)) : term_level(o, true));
    } else if (negative_looking(c)) {
      out += " - " + literal_text(-c.value, true);
    } else {
      out += " + " + (c.kind == Kind::Sum ? paren(sum_level(c)) : term_level(c, true));
    }
  }
  return out;
}

}  // namespace

Node parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string render(const Node& node) { return sum_level(node); }

}  // namespace expnev::expr
