#pragma once
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/linear_form.hpp"

namespace nekrasov {

// Young diagram stored by rows (weakly decreasing, positive); columns are cached at construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);

  int size() const { return size_; }
  int length() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& columns() const { return cols_; }
  int row(int i) const { return i < length() ? rows_[i] : 0; }
  int col(int j) const { return j < static_cast<int>(cols_.size()) ? cols_[j] : 0; }
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < row(i); }
  bool empty() const { return size_ == 0; }
  Partition transpose() const { return Partition(cols_); }

  std::string to_string() const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<int> rows_, cols_;
  int size_ = 0;
};

using PartitionTuple = std::vector<Partition>;

// (arm of the cell in S, leg of the cell relative to T), 0-based cells (row, col).
std::pair<int, int> arm_leg(const Partition& S, const Partition& T, int row, int col);

// Weights -l_T(s) w1 + (a_S(s)+1) w2 over s in S, then (l_S(t)+1) w1 - a_T(t) w2 over t in T.
std::vector<LinearForm> nst_weights(const Partition& S, const Partition& T, const LinearForm& w1,
                                    const LinearForm& w2);
// Weights -row(s) w1 - col(s) w2 over the cells of S.
std::vector<LinearForm> ns_weights(const Partition& S, const LinearForm& w1, const LinearForm& w2);

// Partitions of n, in decreasing lexicographic order of rows.
const std::vector<Partition>& partitions_of(int n);
// Nonnegative integer vectors of length r summing to n, in decreasing lexicographic order.
std::vector<std::vector<int>> compositions(int r, int n);
// r-tuples of partitions with total size n: size splits in decreasing lex order, then partitions in
// decreasing lex order with the first color varying slowest.
std::vector<PartitionTuple> enumerate_tuples(int r, int n);

}  // namespace nekrasov
