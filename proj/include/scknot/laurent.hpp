#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace scknot {

// Sparse Laurent polynomial with integer coefficients. Zero coefficients are
// never stored; the empty map is the zero polynomial.
class LaurentPoly {
 public:
  enum class Variable { A, t };

  explicit LaurentPoly(Variable var = Variable::t) : var_(var) {}
  static LaurentPoly monomial(std::int64_t coeff, int exponent, Variable var = Variable::t);
  static LaurentPoly constant(std::int64_t c, Variable var = Variable::t) { return monomial(c, 0, var); }

  Variable variable() const { return var_; }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // 0 for the zero polynomial
  int max_degree() const;

  void add_term(int exponent, std::int64_t coeff);
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly shifted(int by) const;  // multiply by var^by
  LaurentPoly scaled(std::int64_t c) const;

  // p(var) -> p(var^-1)
  LaurentPoly inverted() const;

  // "c*t^e" terms joined by " + " in increasing exponent; the constant term
  // renders as the bare coefficient and the zero polynomial as "0".
  std::string to_string() const;

  // Equality ignores the variable tag only when both are zero.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_ && (a.var_ == b.var_ || a.terms_.empty());
  }

 private:
  Variable var_;
  std::map<int, std::int64_t> terms_;
};

}  // namespace scknot
