#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotfold {

using BigInt = boost::multiprecision::cpp_int;

enum class Variable : std::uint8_t { A, q };

/// Exact sparse Laurent polynomial with integer coefficients.
///
/// Exponents are stored in quarter units (stored = 4 * actual), which lets
/// the bracket variable A and the Jones variable q (including the half-integer
/// powers that show up for links) share one representation without rationals.
/// Terms are kept sorted by exponent and no stored coefficient is zero.
class LaurentPolynomial {
 public:
  using Term = std::pair<int, BigInt>;  // (quarter-unit exponent, coefficient)

  explicit LaurentPolynomial(Variable var = Variable::q) : var_(var) {}

  static LaurentPolynomial constant(Variable var, const BigInt& c);
  /// c * var^exponent for an integral exponent.
  static LaurentPolynomial monomial(Variable var, const BigInt& c, int exponent);
  static LaurentPolynomial monomial_quarter(Variable var, const BigInt& c, int quarter_exponent);
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static LaurentPolynomial from_terms(Variable var, std::vector<Term> terms);
  /// Integral exponents only: coefficients[i] multiplies var^(min_exponent + i).
  static LaurentPolynomial from_dense(Variable var, int min_exponent,
                                      const std::vector<std::int64_t>& coefficients);

  Variable variable() const noexcept { return var_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Precondition: nonzero.
  int min_quarter_exponent() const { return terms_.front().first; }
  int max_quarter_exponent() const { return terms_.back().first; }

  BigInt coefficient_quarter(int quarter_exponent) const;
  /// True iff every stored exponent is a multiple of 4.
  bool has_integral_exponents() const noexcept;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Multiplication by var^(quarter_offset / 4).
  LaurentPolynomial shifted(int quarter_offset) const;
  LaurentPolynomial scaled(const BigInt& factor) const;
  /// e -> -e on every term.
  LaurentPolynomial substitute_inverse() const;
  /// Multiplies every exponent by `factor` and relabels the variable.
  LaurentPolynomial rescaled_exponents(int factor, Variable target) const;
  /// Exact division; throws Error(InexactDivision) when a remainder is left.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  /// Text form: `c*q^e` terms, exponents descending, `q^(p/2)` for halves.
  std::string to_string() const;
  static LaurentPolynomial parse(std::string_view text, Variable var = Variable::q);

 private:
  void check_same_variable(const LaurentPolynomial& other) const;

  Variable var_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, multiply };

/// Throws Error(VariableMismatch) when the operands use different variables.
LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op);

/// J(q) -> J(q^-1).
inline LaurentPolynomial substitute_inverse(const LaurentPolynomial& p) { return p.substitute_inverse(); }

}  // namespace knotfold
