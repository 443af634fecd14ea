#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "expnev/laurent.hpp"
#include "expnev/unit_basis.hpp"
#include "expnev/ypoly.hpp"

namespace expnev::expr {

/// Parsed expression.  Numeric subtrees are folded into a single Integer or
/// Literal node and powers of z into a ZPoly node while parsing, so the tree
/// is canonical for its text up to whitespace and redundant parentheses.
struct Node {
  enum class Kind {
    Sum,       ///< children joined by "+"; subtraction appears as a Negate child
    Product,   ///< children joined by "*"
    Quotient,  ///< children[0] / children[1]
    Negate,    ///< unary minus of children[0]
    Power,     ///< children[0] ^ exponent
    ExpUnit,   ///< exp[children[0]]; poly holds the argument's value
    ZPoly,     ///< monic power of z held in poly
    Integer,   ///< nonnegative integer held in value
    Literal,   ///< any other Gaussian rational held in value
    Variable,  ///< "Y" or "x<k>" held in name
  };

  Kind kind = Kind::Integer;
  std::vector<Node> children;
  GR value;
  expnev::ZPoly poly;
  int exponent = 0;
  std::string name;
  std::size_t begin = 0;  ///< byte span [begin, end) in the source text
  std::size_t end = 0;

  /// Structural equality; spans are ignored.
  friend bool operator==(const Node& a, const Node& b);
};

using ExprAst = Node;

/// Throws SyntaxError with the byte offset and expected-token set.
Node parse_expression(std::string_view text);

/// Text that parses back to a structurally equal tree.
std::string render(const Node& node);

struct Lowered {
  LaurentPoly poly;
  UnitBasis basis;
};

struct LoweredY {
  MonicYPoly poly;
  UnitBasis basis;
};

struct LoweredMany {
  std::vector<LaurentPoly> polys;
  UnitBasis basis;
};

/// Exponential polynomial in z.  The basis generates the lattice of all
/// frequencies that occur, is independent, and is sorted by descending degree.
Lowered lower_to_symbolic(const Node& ast);
/// Several expressions over one common basis.
LoweredMany lower_jointly(const std::vector<Node>& asts);
/// Monic polynomial in Y with exponential-polynomial coefficients.
LoweredY lower_ypoly(const Node& ast);
/// Lowers over a fixed basis; every frequency must be an integer combination
/// of the basis frequencies.
LaurentPoly lower_over(const Node& ast, const UnitBasis& basis);
MonicYPoly lower_ypoly_over(const Node& ast, const UnitBasis& basis);
/// Polynomial in x0..x_{arity-1} with coefficients in Q(i)(z) (no exp, no Y).
/// arity 0 means one more than the largest index that occurs.
LaurentPoly lower_xpoly(const Node& ast, std::size_t arity = 0);

/// Splits a ';'-separated list, trimming whitespace.
std::vector<std::string> split_list(std::string_view text);
/// "exp[z]; exp[i*z]" (or bare frequencies "z; i*z") in the given order.
UnitBasis parse_basis_list(std::string_view text);

/// Expression text for f over the basis; each unit is written exp[Q_j].
std::string render_laurent(const LaurentPoly& f, const UnitBasis& basis);
std::string render_ypoly(const MonicYPoly& f, const UnitBasis& basis, const std::string& var = "Y");
/// Polynomial in x0..x_n.
std::string render_xpoly(const LaurentPoly& f);

}  // namespace expnev::expr
