#include "nekrasov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace nekrasov {

SparsePoly EpsWeight::poly(const SymbolTable& tab) const { return SparsePoly::from_linear(form(tab)); }

std::string EpsWeight::to_string() const {
  return "[" + std::to_string(x1) + "," + std::to_string(x2) + "]";
}

ToricChain::ToricChain(std::string name, std::vector<ChainVertex> vertices, std::vector<ChainEdge> edges,
                       std::vector<std::vector<long>> intersections, LineAtInfinity linf)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      q_(std::move(intersections)),
      linf_(linf) {
  validate();
}

namespace {

// Leading principal pivots of -Q by exact elimination; all positive iff Q is negative definite.
bool negative_definite(const std::vector<std::vector<long>>& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -q[i][j];
  for (std::size_t p = 0; p < n; ++p) {
    if (m[p][p] <= 0) return false;
    for (std::size_t i = p + 1; i < n; ++i) {
      Rational f = m[i][p] / m[p][p];
      for (std::size_t j = p; j < n; ++j) m[i][j] -= f * m[p][j];
    }
  }
  return true;
}

std::vector<std::vector<Rational>> inverse_of_negated(const std::vector<std::vector<long>>& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -q[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t piv = p;
    while (piv < n && a[piv][p] == 0) ++piv;
    if (piv == n) throw SurfaceError("intersection form is singular");
    std::swap(a[p], a[piv]);
    Rational inv = Rational(1) / a[p][p];
    for (auto& x : a[p]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p || a[i][p] == 0) continue;
      Rational f = a[i][p];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[p][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

void ToricChain::validate() const {
  const int nv = n_vertices(), ne = n_edges();
  if (nv == 0) throw SurfaceError("empty vertex list");
  if (linf_.k < 1) throw SurfaceError("line at infinity must have positive self-intersection k");
  if (nv - ne != 1) throw SurfaceError("fixed-point graph is not a chain: #vertices - #edges != 1");
  for (const auto& e : edges_)
    if (static_cast<int>(e.weights_at.size()) != nv)
      throw SurfaceError("edge weight list must have one entry per vertex");
  if (static_cast<int>(q_.size()) != ne) throw SurfaceError("intersection matrix has wrong size");
  for (int i = 0; i < ne; ++i) {
    if (static_cast<int>(q_[i].size()) != ne) throw SurfaceError("intersection matrix has wrong size");
    if (q_[i][i] != edges_[i].self_intersection)
      throw SurfaceError("intersection matrix diagonal disagrees with self_intersection");
    for (int j = 0; j < i; ++j)
      if (q_[i][j] != q_[j][i]) throw SurfaceError("intersection matrix is not symmetric");
  }
  if (!negative_definite(q_)) throw SurfaceError("intersection form is not negative definite");
  for (const auto& v : vertices_)
    if (v.w1.is_zero() || v.w2.is_zero()) throw SurfaceError("zero tangent weight at a vertex");
  if (linf_.w.is_zero() || linf_.u.is_zero() || linf_.v().is_zero())
    throw SurfaceError("zero tangent weight on the line at infinity");

  // Localization consistency: intersection numbers and the vanishing integral of 1 over X.
  SymbolTable tab(1);
  std::vector<RatFunc> ones;
  auto pts = fixed_points(true);
  for (std::size_t i = 0; i < pts.size(); ++i) ones.emplace_back(1);
  if (!equivariant_integral(pts, ones, tab).is_zero())
    throw SurfaceError("tangent weights are inconsistent: integral of 1 over the surface is nonzero");
  auto chain_pts = fixed_points(false);
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f <= e; ++f) {
      std::vector<RatFunc> integrand;
      for (int v = 0; v < nv; ++v)
        integrand.push_back(RatFunc(edges_[e].weights_at[v].poly(tab)) * RatFunc(edges_[f].weights_at[v].poly(tab)));
      RatFunc val = equivariant_integral(chain_pts, integrand, tab);
      if (val != RatFunc(Rational(q_[e][f])))
        throw SurfaceError("edge weights are inconsistent with the intersection matrix");
    }
}

long ToricChain::dot(const DivisorVector& a, const DivisorVector& b) const {
  long s = 0;
  for (int i = 0; i < n_edges(); ++i)
    for (int j = 0; j < n_edges(); ++j) s += a[i] * q_[i][j] * b[j];
  return s;
}

long ToricChain::c1_dot(const DivisorVector& a) const {
  long s = 0;
  for (int i = 0; i < n_edges(); ++i) s += a[i] * (2 + edges_[i].self_intersection);
  return s;
}

EpsWeight ToricChain::weight_at(const DivisorVector& d, int vertex) const {
  EpsWeight w;
  for (int i = 0; i < n_edges(); ++i) w = w + edges_[i].weights_at[vertex] * d[i];
  return w;
}

std::vector<FixedPoint> ToricChain::fixed_points(bool compact) const {
  std::vector<FixedPoint> pts;
  for (const auto& v : vertices_) pts.push_back({v.w1, v.w2});
  if (compact) {
    pts.push_back({linf_.w, linf_.u});
    pts.push_back({-linf_.w, linf_.v()});
  }
  return pts;
}

bool ToricChain::operator==(const ToricChain& o) const {
  if (vertices_.size() != o.vertices_.size() || edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!(vertices_[i].w1 == o.vertices_[i].w1) || !(vertices_[i].w2 == o.vertices_[i].w2)) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].self_intersection != o.edges_[i].self_intersection ||
        edges_[i].weights_at != o.edges_[i].weights_at)
      return false;
  return q_ == o.q_ && linf_.w == o.linf_.w && linf_.u == o.linf_.u && linf_.k == o.linf_.k;
}

ToricChain builtin_surface(const std::string& name) {
  if (name == "C2") return ToricChain("C2", {{{1, 0}, {0, 1}}}, {}, {}, {{1, -1}, {0, -1}, 1});
  static const std::regex fk(R"(F([0-9]+))");
  std::smatch m;
  if (std::regex_match(name, m, fk)) {
    long k = std::stol(m[1]);
    if (k < 1) throw SurfaceError("F_k requires k >= 1");
    return ToricChain(name, {{{1, 0}, {0, 1}}, {{-1, 0}, {k, 1}}}, {{-k, {{0, 1}, {k, 1}}}}, {{-k}},
                      {{1, 0}, {0, -1}, k});
  }
  throw SurfaceError("unknown surface: " + name);
}

namespace {

EpsWeight read_pair(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw SurfaceError(what + " must be a pair of integers");
  return {j[0].get<long>(), j[1].get<long>()};
}

}  // namespace

ToricChain parse_surface(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SurfaceError(std::string("surface file does not parse: ") + e.what());
  }
  try {
    std::vector<ChainVertex> vs;
    for (const auto& v : j.at("vertices")) vs.push_back({read_pair(v.at("w1"), "w1"), read_pair(v.at("w2"), "w2")});
    std::vector<ChainEdge> es;
    for (const auto& e : j.at("edges")) {
      ChainEdge ce;
      ce.self_intersection = e.at("self_intersection").get<long>();
      for (const auto& w : e.at("weights_at")) ce.weights_at.push_back(read_pair(w, "weights_at entry"));
      es.push_back(std::move(ce));
    }
    std::vector<std::vector<long>> q = j.value("intersections", std::vector<std::vector<long>>{});
    const auto& l = j.at("linf");
    LineAtInfinity linf{read_pair(l.at("w"), "linf.w"), read_pair(l.at("u"), "linf.u"), l.at("k").get<long>()};
    if (l.contains("v") && !(read_pair(l.at("v"), "linf.v") == linf.v()))
      throw SurfaceError("normal weight relation violated: v != u - k w");
    return ToricChain(j.value("name", name), std::move(vs), std::move(es), std::move(q), linf);
  } catch (const nlohmann::json::exception& e) {
    throw SurfaceError(std::string("malformed surface file: ") + e.what());
  }
}

ToricChain load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SurfaceError("cannot open surface file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return parse_surface(ss.str(), stem);
}

ToricChain resolve_surface(const std::string& name_or_path) {
  static const std::regex builtin(R"(C2|F[0-9]+)");
  if (std::regex_match(name_or_path, builtin)) return builtin_surface(name_or_path);
  return load_surface(name_or_path);
}

long dsq_norm(const ToricChain& chain, const DivisorTuple& t) {
  long s = 0;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      DivisorVector diff(t[a].size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = t[a][i] - t[b][i];
      s -= chain.dot(diff, diff);
    }
  return s;
}

std::vector<DivisorTuple> enumerate_divisor_tuples(const ToricChain& chain, int r, const DivisorVector& d,
                                                   long bound) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  if (static_cast<int>(d.size()) != chain.n_edges()) throw std::invalid_argument("divisor has wrong length");
  if (bound < 0) return {};
  if (r == 1) return {{d}};
  const int ne = chain.n_edges();
  if (ne == 0) return {DivisorTuple(r, DivisorVector{})};
  auto minv = inverse_of_negated(chain.intersections());
  // Each D_a - d/r has M-norm at most bound, so each coordinate lies within sqrt(bound * (M^-1)_ii).
  std::vector<long> lo(ne), hi(ne);
  for (int i = 0; i < ne; ++i) {
    double rad = std::sqrt(static_cast<double>(bound) * minv[i][i].get_d()) + 1.0;
    double c = static_cast<double>(d[i]) / r;
    lo[i] = static_cast<long>(std::floor(c - rad));
    hi[i] = static_cast<long>(std::ceil(c + rad));
  }
  std::vector<DivisorVector> box;
  DivisorVector cur(ne);
  for (int i = 0; i < ne; ++i) cur[i] = lo[i];
  for (;;) {
    box.push_back(cur);
    int i = ne - 1;
    while (i >= 0 && ++cur[i] > hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
  std::vector<std::pair<long, DivisorTuple>> found;
  std::vector<std::size_t> idx(r - 1, 0);
  for (;;) {
    DivisorTuple t;
    DivisorVector last = d;
    for (int a = 0; a < r - 1; ++a) {
      t.push_back(box[idx[a]]);
      for (int i = 0; i < ne; ++i) last[i] -= box[idx[a]][i];
    }
    t.push_back(last);
    long n = dsq_norm(chain, t);
    if (n <= bound) found.emplace_back(n, std::move(t));
    int a = r - 2;
    while (a >= 0 && ++idx[a] == box.size()) {
      idx[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  });
  std::vector<DivisorTuple> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

RatFunc equivariant_integral(const std::vector<FixedPoint>& points, const std::vector<RatFunc>& integrand,
                             const SymbolTable& tab) {
  if (points.size() != integrand.size()) throw std::invalid_argument("one integrand value per fixed point");
  std::vector<RatFunc> terms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].w1.is_zero() || points[i].w2.is_zero()) throw DivisionByZero("zero tangent weight");
    RatFunc euler = RatFunc(points[i].w1.poly(tab)) * RatFunc(points[i].w2.poly(tab));
    terms.push_back(integrand[i] / euler);
  }
  return sum_balanced(std::move(terms));
}

}  // namespace nekrasov
