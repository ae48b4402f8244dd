#include "nekrasov/partitions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nekrasov {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (i && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition rows must not increase");
    size_ += rows_[i];
  }
  if (!rows_.empty()) {
    cols_.assign(rows_[0], 0);
    for (int r : rows_)
      for (int j = 0; j < r; ++j) ++cols_[j];
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
  return s + ")";
}

std::pair<int, int> arm_leg(const Partition& S, const Partition& T, int row, int col) {
  if (!S.contains(row, col)) throw std::out_of_range("cell is not in the partition");
  return {S.row(row) - col - 1, T.col(col) - row - 1};
}

std::vector<LinearForm> nst_weights(const Partition& S, const Partition& T, const LinearForm& w1,
                                    const LinearForm& w2) {
  std::vector<LinearForm> out;
  out.reserve(S.size() + T.size());
  for (int i = 0; i < S.length(); ++i)
    for (int j = 0; j < S.row(i); ++j) {
      int arm_s = S.row(i) - j - 1, leg_t = T.col(j) - i - 1;
      out.push_back(w1 * Rational(-leg_t) + w2 * Rational(arm_s + 1));
    }
  for (int i = 0; i < T.length(); ++i)
    for (int j = 0; j < T.row(i); ++j) {
      int arm_t = T.row(i) - j - 1, leg_s = S.col(j) - i - 1;
      out.push_back(w1 * Rational(leg_s + 1) - w2 * Rational(arm_t));
    }
  return out;
}

std::vector<LinearForm> ns_weights(const Partition& S, const LinearForm& w1, const LinearForm& w2) {
  std::vector<LinearForm> out;
  out.reserve(S.size());
  for (int i = 0; i < S.length(); ++i)
    for (int j = 0; j < S.row(i); ++j) out.push_back(w1 * Rational(-i) - w2 * Rational(j));
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int r, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur.push_back(k);
    gen_compositions(r, n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<std::vector<int>> compositions(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("compositions: need r >= 1 and n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_compositions(r, n, cur, out);
  return out;
}

std::vector<PartitionTuple> enumerate_tuples(int r, int n) {
  std::vector<PartitionTuple> out;
  for (const auto& split : compositions(r, n)) {
    std::vector<const std::vector<Partition>*> lists;
    for (int s : split) lists.push_back(&partitions_of(s));
    std::vector<std::size_t> idx(r, 0);
    for (;;) {
      PartitionTuple t;
      for (int a = 0; a < r; ++a) t.push_back((*lists[a])[idx[a]]);
      out.push_back(std::move(t));
      int a = r - 1;
      while (a >= 0 && ++idx[a] == lists[a]->size()) {
        idx[a] = 0;
        --a;
      }
      if (a < 0) break;
    }
  }
  return out;
}

}  // namespace nekrasov
