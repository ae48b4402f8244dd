#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "nekrasov/linear_form.hpp"
#include "nekrasov/ratfunc.hpp"
#include "nekrasov/symbols.hpp"

namespace nekrasov {

// Integer combination x1*eps1 + x2*eps2.
struct EpsWeight {
  long x1 = 0, x2 = 0;
  EpsWeight operator+(const EpsWeight& o) const { return {x1 + o.x1, x2 + o.x2}; }
  EpsWeight operator-(const EpsWeight& o) const { return {x1 - o.x1, x2 - o.x2}; }
  EpsWeight operator-() const { return {-x1, -x2}; }
  EpsWeight operator*(long s) const { return {x1 * s, x2 * s}; }
  bool operator==(const EpsWeight& o) const = default;
  bool is_zero() const { return x1 == 0 && x2 == 0; }
  LinearForm form(const SymbolTable& tab) const { return LinearForm::eps(tab.size(), x1, x2); }
  SparsePoly poly(const SymbolTable& tab) const;
  std::string to_string() const;
};

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using DivisorVector = std::vector<long>;
using DivisorTuple = std::vector<DivisorVector>;

struct ChainVertex {
  EpsWeight w1, w2;
};

struct ChainEdge {
  long self_intersection = 0;
  std::vector<EpsWeight> weights_at;  // line-bundle weight of O(edge) at each vertex
};

struct LineAtInfinity {
  EpsWeight w, u;
  long k = 1;
  EpsWeight v() const { return u - w * k; }
};

// Torus fixed point with its pair of tangent weights.
struct FixedPoint {
  EpsWeight w1, w2;
};

class ToricChain {
 public:
  ToricChain(std::string name, std::vector<ChainVertex> vertices, std::vector<ChainEdge> edges,
             std::vector<std::vector<long>> intersections, LineAtInfinity linf);

  const std::string& name() const { return name_; }
  const std::vector<ChainVertex>& vertices() const { return vertices_; }
  const std::vector<ChainEdge>& edges() const { return edges_; }
  const std::vector<std::vector<long>>& intersections() const { return q_; }
  const LineAtInfinity& linf() const { return linf_; }
  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  long dot(const DivisorVector& a, const DivisorVector& b) const;
  long c1_dot(const DivisorVector& a) const;  // c1(X) . D, adjunction on each edge
  EpsWeight weight_at(const DivisorVector& d, int vertex) const;
  DivisorVector zero_divisor() const { return DivisorVector(edges_.size(), 0); }

  // Fixed points of the chain; with `compact` the two points on the line at infinity are added.
  std::vector<FixedPoint> fixed_points(bool compact) const;

  bool operator==(const ToricChain& o) const;

 private:
  void validate() const;
  std::string name_;
  std::vector<ChainVertex> vertices_;
  std::vector<ChainEdge> edges_;
  std::vector<std::vector<long>> q_;
  LineAtInfinity linf_;
};

// "C2", "F<k>" for k >= 1.
ToricChain builtin_surface(const std::string& name);
ToricChain load_surface(const std::string& path);
ToricChain parse_surface(const std::string& json_text, const std::string& name = "custom");
// Either a built-in name or a path to a JSON surface file.
ToricChain resolve_surface(const std::string& name_or_path);

// -1/2 sum_{a != b} (D_a - D_b)^2.
long dsq_norm(const ToricChain& chain, const DivisorTuple& t);
// Tuples (D_1..D_r) with sum d and dsq_norm <= bound, ordered by norm then decreasing lex order.
std::vector<DivisorTuple> enumerate_divisor_tuples(const ToricChain& chain, int r, const DivisorVector& d,
                                                   long bound);

// Localization sum of integrand[i] / (w1 w2) over the given fixed points.
RatFunc equivariant_integral(const std::vector<FixedPoint>& points, const std::vector<RatFunc>& integrand,
                             const SymbolTable& tab);

}  // namespace nekrasov
