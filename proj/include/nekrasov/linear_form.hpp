#pragma once
#include <string>
#include <vector>

#include "nekrasov/rational.hpp"
#include "nekrasov/symbols.hpp"

namespace nekrasov {

// Exact linear combination of the generators of a SymbolTable (no constant term).
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(int n) : c_(n) {}
  static LinearForm generator(int n, int i) {
    LinearForm f(n);
    f.c_[i] = 1;
    return f;
  }
  static LinearForm eps(int n, const Rational& x1, const Rational& x2) {
    LinearForm f(n);
    f.c_[0] = x1;
    f.c_[1] = x2;
    return f;
  }

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  // True when only eps1, eps2 carry nonzero coefficients.
  bool eps_only() const {
    for (int i = 2; i < dim(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  LinearForm& operator+=(const LinearForm& o) {
    for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LinearForm& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    for (int i = 0; i < a.dim(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  std::string to_string(const SymbolTable& tab) const;

 private:
  std::vector<Rational> c_;
};

}  // namespace nekrasov
