#pragma once

// Exact integer polynomials, rational generating functions and the
// transfer-matrix formula
//
//   sum_n (A^n)_{s,s} x^n = det(I - xA with row/column s removed) / det(I - xA).
//
// No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "arcnest/automata.hpp"

namespace arcnest {

using BigInt = mpz_class;

class IntPoly {
 public:
  IntPoly() = default;
  // Ascending coefficients; trailing zeros are stripped.
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  // Nonnegative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  IntPoly primitive_part() const;
  BigInt evaluate(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Quotient a / b; throws ConsistencyError when b does not divide a in Z[x].
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
// Pseudo-remainder of a by b (b nonzero).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Greatest common divisor in Z[x] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Compact form, e.g. "1-4x+x^2"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p, char var = 'x');

class RationalFunction {
 public:
  // Normalizes: cancels the polynomial gcd (content included) and makes the
  // lowest nonzero denominator coefficient positive.
  RationalFunction(IntPoly numerator, IntPoly denominator);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

std::string to_string(const RationalFunction& rf);

// Integer linear factors (1 - a x) of a polynomial with constant term 1.
struct LinearFactorization {
  std::vector<BigInt> roots;  // each a, with multiplicity, ascending
  IntPoly rest;               // cofactor, constant term 1
};

LinearFactorization factor_linear(const IntPoly& p);
// "(1-2x)(1-6x)" followed by the cofactor when it is not 1.
std::string to_factored_string(const LinearFactorization& f);

enum class SeriesConvention {
  Plain,                // coefficient n counts objects of size n
  SetPartitionShifted,  // coefficient n counts objects of size n + 1
};

struct Series {
  std::vector<BigInt> coefficients;
  SeriesConvention convention = SeriesConvention::Plain;
};

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Fraction-free (Bareiss) elimination over Z[x]. det of the 0x0 matrix is 1.
IntPoly det(const PolyMatrix& m);

// det(I - xA) computed as the reversed characteristic polynomial of A,
// modulo enough word-size primes to cover a Hadamard-type coefficient bound,
// then lifted by Chinese remaindering.
IntPoly det_one_minus_x(const AdjacencyMatrix& a);

// I - xA as a polynomial matrix (the Bareiss input).
PolyMatrix one_minus_x(const AdjacencyMatrix& a);

// a with row and column `index` removed.
AdjacencyMatrix minor_matrix(const AdjacencyMatrix& a, std::size_t index);

inline constexpr std::size_t kDefaultDimensionCap = 200;

// Transfer-matrix generating function of closed walks at the start state.
// Throws GuardExceeded when the graph has more than `dimension_cap` states.
RationalFunction gf_from_graph(const Multigraph& g,
                               std::size_t dimension_cap = kDefaultDimensionCap);

// Coefficients 0..terms of the power series of rf. Throws InvalidInput when
// the denominator vanishes at 0 or a coefficient is not an integer.
Series series(const RationalFunction& rf, int terms,
              SeriesConvention convention = SeriesConvention::Plain);

// Coefficient n is (A^n)_{s,s}, by exact repeated multiplication.
Series series_by_power(const Multigraph& g, int terms);

SeriesConvention convention_for(Family family);

}  // namespace arcnest
