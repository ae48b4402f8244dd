#pragma once
#include <string>
#include <vector>

namespace nekrasov {

constexpr int kMaxVars = 16;

// Generator layout: eps1, eps2, a1..ar, m1..mNf, [m]; the direction variable t sits after them.
class SymbolTable {
 public:
  SymbolTable(int rank, int n_fund = 0, bool adjoint = false);

  int size() const { return static_cast<int>(names_.size()); }
  int nvars() const { return size() + 1; }
  int eps1() const { return 0; }
  int eps2() const { return 1; }
  int a(int alpha) const { return 2 + alpha; }  // alpha is 0-based
  int m(int f) const { return 2 + rank_ + f; }  // f is 0-based
  int m_adj() const { return 2 + rank_ + n_fund_; }
  int t() const { return size(); }

  int rank() const { return rank_; }
  int n_fund() const { return n_fund_; }
  bool has_adjoint() const { return adjoint_; }

  const std::string& name(int i) const;
  int index_of(const std::string& name) const;  // -1 if absent
  std::vector<std::string> names_with_t() const;

  bool operator==(const SymbolTable& o) const {
    return rank_ == o.rank_ && n_fund_ == o.n_fund_ && adjoint_ == o.adjoint_;
  }

 private:
  int rank_;
  int n_fund_;
  bool adjoint_;
  std::vector<std::string> names_;
};

}  // namespace nekrasov
