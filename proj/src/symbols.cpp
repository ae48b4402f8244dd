#include "nekrasov/symbols.hpp"

#include <algorithm>
#include <stdexcept>

#include "nekrasov/linear_form.hpp"
#include "nekrasov/rational.hpp"

namespace nekrasov {

SymbolTable::SymbolTable(int rank, int n_fund, bool adjoint)
    : rank_(rank), n_fund_(n_fund), adjoint_(adjoint) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (n_fund < 0) throw std::invalid_argument("negative number of flavours");
  names_ = {"eps1", "eps2"};
  for (int i = 1; i <= rank; ++i) names_.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n_fund; ++i) names_.push_back("m" + std::to_string(i));
  if (adjoint) names_.push_back("m");
  if (static_cast<int>(names_.size()) + 1 > kMaxVars)
    throw std::invalid_argument("too many symbols (limit " + std::to_string(kMaxVars - 1) + ")");
}

const std::string& SymbolTable::name(int i) const {
  static const std::string t_name = "t";
  if (i == size()) return t_name;
  return names_.at(i);
}

int SymbolTable::index_of(const std::string& n) const {
  if (n == "t") return size();
  auto it = std::find(names_.begin(), names_.end(), n);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::vector<std::string> SymbolTable::names_with_t() const {
  auto v = names_;
  v.push_back("t");
  return v;
}

std::string LinearForm::to_string(const SymbolTable& tab) const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += tab.name(i);
  }
  return out.empty() ? "0" : out;
}

Rational parse_rational(const std::string& s_in) {
  std::string s = s_in;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find_first_of("/eE") != std::string::npos)
      throw std::invalid_argument("unsupported rational literal: " + s_in);
    bool neg = s[0] == '-';
    std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad decimal: " + s_in);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  if (s[0] == '+') s = s.substr(1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s_in);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s_in);
  q.canonicalize();
  return q;
}

}  // namespace nekrasov
