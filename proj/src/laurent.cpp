#include "scknot/laurent.hpp"

namespace scknot {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent, Variable var) {
  LaurentPoly p(var);
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out(var_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(std::int64_t k) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * k);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char* name = var_ == Variable::A ? "A" : "t";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    if (e != 0) out += std::string("*") + name + "^" + std::to_string(e);
  }
  return out;
}

}  // namespace scknot
