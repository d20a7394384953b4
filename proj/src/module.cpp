#include "arr/module.hpp"

#include <sstream>

namespace arr {

bool ModuleVector::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

int ModuleVector::degree(const FreeModule& fm) const {
  int d = kZeroDegree;
  for (int i = 0; i < rank(); ++i) {
    if (comps_[i].is_zero()) continue;
    int di = comps_[i].degree() + fm.shifts[i];
    if (d == kZeroDegree) d = di;
    else if (d != di) throw std::logic_error("degree of non-homogeneous module vector");
  }
  return d;
}

bool ModuleVector::is_homogeneous(const FreeModule& fm) const {
  int d = kZeroDegree;
  for (int i = 0; i < rank(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!comps_[i].is_homogeneous()) return false;
    int di = comps_[i].degree() + fm.shifts[i];
    if (d == kZeroDegree) d = di;
    else if (d != di) return false;
  }
  return true;
}

std::optional<ModTerm> ModuleVector::leading(const Rat** coef_out) const {
  ModTerm best;
  const Rat* best_coef = nullptr;
  for (int i = 0; i < rank(); ++i) {
    if (comps_[i].is_zero()) continue;
    ModTerm cand{i, comps_[i].leading_monomial()};
    if (best.pos < 0 || modterm_cmp(cand, best) > 0) {
      best = cand;
      best_coef = &comps_[i].leading_coef();
    }
  }
  if (best.pos < 0) return std::nullopt;
  if (coef_out) *coef_out = best_coef;
  return best;
}

ModuleVector ModuleVector::operator+(const ModuleVector& b) const {
  ModuleVector r = *this;
  for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i] + b.comps_[i];
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& b) const {
  ModuleVector r = *this;
  for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i] - b.comps_[i];
  return r;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r = *this;
  for (auto& p : r.comps_) p = -p;
  return r;
}

ModuleVector ModuleVector::scaled(const Rat& c) const {
  ModuleVector r = *this;
  for (auto& p : r.comps_) p = p.scaled(c);
  return r;
}

ModuleVector ModuleVector::mul_term(const Monomial& m, const Rat& c) const {
  ModuleVector r = *this;
  for (auto& p : r.comps_) p = p.mul_term(m, c);
  return r;
}

ModuleVector ModuleVector::mul_poly(const Polynomial& p) const {
  ModuleVector r = *this;
  for (auto& q : r.comps_) q = q * p;
  return r;
}

void ModuleVector::sub_mul_term(const ModuleVector& g, const Monomial& m, const Rat& c) {
  for (int i = 0; i < rank(); ++i)
    if (!g.comps_[i].is_zero()) comps_[i].sub_mul_term(g.comps_[i], m, c);
}

Rat ModuleVector::normalize_content() {
  const Rat* lead_coef = nullptr;
  auto lt = leading(&lead_coef);
  if (!lt) return Rat(1);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& p : comps_)
    for (const auto& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (sign(*lead_coef) < 0) c = -c;
  Rat inv = 1 / c;
  for (auto& p : comps_) p = p.scaled(inv);
  return inv;
}

std::string ModuleVector::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ", ";
    out << comps_[i].to_string();
  }
  out << "]";
  return out.str();
}

} // namespace arr
