#include "tlg/polyhedra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "tlg/errors.hpp"
#include "tlg/exactlinalg.hpp"
#include "tlg/lp.hpp"

namespace tlg {

namespace {

// Half-space key: primitive normal and the offset divided by the normal's content.
using HalfspaceKey = std::pair<IntVector, Rat>;

struct HalfspaceKeyLess {
  bool operator()(const HalfspaceKey& a, const HalfspaceKey& b) const {
    auto c = lex_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  }
};

HalfspaceKey halfspace_key(const IntVector& normal, const Rat& offset) {
  Int g = content(normal);
  IntVector p = normal;
  for (auto& x : p) x /= g;
  return {std::move(p), offset / Rat(g)};
}

// Calls f(indices) for each k-subset of {0..m-1} in lexicographic order.
void for_each_subset(std::size_t m, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool rat_vector_less(const RatVector& a, const RatVector& b) { return lex_compare(a, b) < 0; }

void sort_unique(std::vector<RatVector>& v) {
  std::sort(v.begin(), v.end(), rat_vector_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

RatVector row_as_rat(const IntMatrix& m, std::size_t i) { return to_rat(m.row(i)); }

}  // namespace

Polyhedron::Polyhedron(IntMatrix normals_, RatVector offsets_)
    : normals(std::move(normals_)), offsets(std::move(offsets_)) {
  if (normals.rows() != offsets.size()) {
    throw InputError("polyhedron has " + std::to_string(normals.rows()) + " normals but " +
                     std::to_string(offsets.size()) + " offsets");
  }
}

RatVector Polyhedron::slacks(const RatVector& xi) const {
  RatVector s = normals * xi;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += offsets[i];
  return s;
}

bool Polyhedron::contains(const RatVector& xi) const {
  auto s = slacks(xi);
  return std::all_of(s.begin(), s.end(), [](const Rat& x) { return x >= 0; });
}

InteriorResult interior_point(const Polyhedron& P) {
  const std::size_t n = P.dim();
  LinearProgram lp(n + 1);
  lp.objective.assign(n + 1, Rat(0));
  lp.objective[n] = 1;
  lp.maximize = true;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    IntVector normal = P.normals.row(i);
    if (is_zero(normal)) {
      if (P.offsets[i] < 0) return {InteriorStatus::Empty, {}, 0};
      continue;
    }
    RatVector coeffs = to_rat(normal);
    coeffs.push_back(-1);
    lp.add(std::move(coeffs), Relation::GreaterEqual, -P.offsets[i]);
  }
  RatVector cap(n + 1, Rat(0));
  cap[n] = 1;
  lp.add(cap, Relation::LessEqual, 1);
  LPResult r = solve_lp(lp);
  if (!r.optimal()) throw ConsistencyError("interior LP did not reach an optimum");
  InteriorResult out;
  out.slack = r.value;
  if (r.value < 0) return out;
  out.point.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
  out.status = r.value > 0 ? InteriorStatus::Interior : InteriorStatus::Degenerate;
  return out;
}

FacetResult facet_rows(const Polyhedron& P) {
  const std::size_t m = P.num_rows();
  FacetResult out;
  out.representative.assign(m, kDropped);

  std::map<HalfspaceKey, std::vector<std::size_t>, HalfspaceKeyLess> classes;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector normal = P.normals.row(i);
    if (is_zero(normal)) continue;
    classes[halfspace_key(normal, P.offsets[i])].push_back(i);
  }
  std::vector<std::size_t> survivors;
  for (const auto& [key, members] : classes) {
    std::size_t pick = members.front();
    for (std::size_t i : members)
      if (content(P.normals.row(i)) == 1) {
        pick = i;
        break;
      }
    for (std::size_t i : members) out.representative[i] = pick;
    survivors.push_back(pick);
  }
  std::sort(survivors.begin(), survivors.end());

  if (!interior_point(P).has_interior())
    throw EmptyInteriorError("facet computation needs a polyhedron with nonempty interior");

  const std::size_t n = P.dim();
  for (std::size_t s : survivors) {
    LinearProgram lp(n);
    lp.objective = row_as_rat(P.normals, s);
    for (std::size_t k : survivors) {
      if (k == s) continue;
      lp.add(row_as_rat(P.normals, k), Relation::GreaterEqual, -P.offsets[k]);
    }
    LPResult r = solve_lp(lp);
    if (r.status == LPStatus::Infeasible) throw ConsistencyError("facet LP infeasible");
    if (r.status == LPStatus::Unbounded || r.value + P.offsets[s] < 0) out.facets.push_back(s);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!std::binary_search(out.facets.begin(), out.facets.end(), i)) out.redundant.push_back(i);
  return out;
}

std::size_t dimension_cap() {
  if (const char* env = std::getenv("TLG_DIM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 8;
}

VertexResult vertices_and_rays(const Polyhedron& P) {
  const std::size_t n = P.dim();
  if (n > dimension_cap()) {
    throw DimensionCapError("vertex enumeration in dimension " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(dimension_cap()) +
                            " (set TLG_DIM_CAP to raise it)");
  }
  VertexResult out;

  // Distinct nonzero half-spaces.
  std::vector<IntVector> normals;
  RatVector offsets;
  std::set<HalfspaceKey, HalfspaceKeyLess> seen;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    IntVector normal = P.normals.row(i);
    if (is_zero(normal)) {
      if (P.offsets[i] < 0) return out;
      continue;
    }
    if (seen.insert(halfspace_key(normal, P.offsets[i])).second) {
      normals.push_back(normal);
      offsets.push_back(P.offsets[i]);
    }
  }
  const std::size_t m = normals.size();
  IntMatrix A = IntMatrix::from_rows(normals, n);

  IntMatrix lineality = kernel_basis(A);
  const std::size_t k = lineality.cols();
  out.pointed = (k == 0);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector l = lineality.column(j);
    out.generators.rays.push_back(l);
    for (auto& x : l) x = -x;
    out.generators.rays.push_back(l);
  }
  Polyhedron reduced(A, offsets);
  const std::size_t need = n - k;

  for_each_subset(m, need, [&](const std::vector<std::size_t>& subset) {
    IntMatrix M(n, n);
    RatVector rhs(n, Rat(0));
    for (std::size_t r = 0; r < need; ++r) {
      for (std::size_t c = 0; c < n; ++c) M(r, c) = normals[subset[r]][c];
      rhs[r] = -offsets[subset[r]];
    }
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < n; ++c) M(need + j, c) = lineality(c, j);
    if (determinant(M) == 0) return;
    auto x = solve_rational(M, rhs);
    if (x && reduced.contains(*x)) out.generators.points.push_back(*x);
  });

  if (need >= 1) {
    for_each_subset(m, need - 1, [&](const std::vector<std::size_t>& subset) {
      IntMatrix M(n - 1, n);
      for (std::size_t r = 0; r + 1 < need; ++r)
        for (std::size_t c = 0; c < n; ++c) M(r, c) = normals[subset[r]][c];
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c) M(need - 1 + j, c) = lineality(c, j);
      IntMatrix dir = kernel_basis(M);
      if (dir.cols() != 1) return;
      IntVector d = dir.column(0);
      for (int sign : {1, -1}) {
        IntVector v = d;
        if (sign < 0)
          for (auto& x : v) x = -x;
        IntVector image = A * v;
        if (std::all_of(image.begin(), image.end(), [](const Int& x) { return x >= 0; }))
          out.generators.rays.push_back(v);
      }
    });
  }
  sort_unique(out.generators.points);
  sort_unique(out.generators.rays);
  return out;
}

std::vector<RatVector> hull_vertices(const std::vector<RatVector>& points) {
  std::vector<RatVector> distinct;
  for (const auto& p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  PointSet S{distinct, {}};
  std::vector<RatVector> out;
  for (const auto& p : distinct)
    if (vertex_test_with_ray(S, p)) out.push_back(p);
  return out;
}

PointSet polar(const Polyhedron& P) {
  std::vector<RatVector> points;
  points.push_back(RatVector(P.dim(), Rat(0)));
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    IntVector normal = P.normals.row(i);
    const Rat& alpha = P.offsets[i];
    if (is_zero(normal)) {
      if (alpha < 0) throw NotInteriorError("polar: the polyhedron is empty");
      continue;
    }
    if (alpha <= 0) {
      throw NotInteriorError("polar: 0 is not an interior point (row " + std::to_string(i + 1) +
                             " has offset " + to_string(alpha) + ")");
    }
    RatVector p = to_rat(normal);
    for (auto& x : p) x /= alpha;
    points.push_back(std::move(p));
  }
  PointSet out{hull_vertices(points), {}};
  sort_unique(out.points);
  return out;
}

Polyhedron polar(const PointSet& S) {
  std::size_t n = 0;
  if (!S.points.empty()) n = S.points.front().size();
  else if (!S.rays.empty()) n = S.rays.front().size();
  std::vector<IntVector> normals;
  RatVector offsets;
  for (const auto& p : S.points) {
    if (is_zero(p)) continue;
    IntVector prim = primitive_direction(p);
    // p = s * prim with s > 0; p.xi + 1 >= 0 becomes prim.xi + 1/s >= 0.
    std::size_t j = 0;
    while (prim[j] == 0) ++j;
    Rat s = p[j] / Rat(prim[j]);
    normals.push_back(std::move(prim));
    offsets.push_back(1 / s);
  }
  for (const auto& r : S.rays) {
    if (is_zero(r)) continue;
    IntVector prim = r;
    Int g = content(prim);
    for (auto& x : prim) x /= g;
    normals.push_back(std::move(prim));
    offsets.push_back(0);
  }
  return Polyhedron(IntMatrix::from_rows(normals, n), offsets);
}

Polyhedron convex_hull(const PointSet& S) {
  if (S.points.empty()) throw InputError("convex hull of an empty point set");
  const std::size_t n = S.points.front().size();
  RatVector center(n, Rat(0));
  for (const auto& p : S.points)
    for (std::size_t i = 0; i < n; ++i) center[i] += p[i];
  for (auto& x : center) x /= Rat(static_cast<long>(S.points.size()));

  PointSet shifted;
  for (const auto& p : S.points) {
    RatVector q = p;
    for (std::size_t i = 0; i < n; ++i) q[i] -= center[i];
    shifted.points.push_back(std::move(q));
  }
  shifted.rays = S.rays;
  VertexResult dual = vertices_and_rays(polar(shifted));
  Polyhedron H = polar(PointSet{dual.generators.points, dual.generators.rays});
  return translate(H, center);
}

CanonicalForm canonical_form(const Polyhedron& P) {
  FacetResult f = facet_rows(P);
  std::vector<HalfspaceKey> rows;
  for (std::size_t i : f.facets) rows.push_back(halfspace_key(P.normals.row(i), P.offsets[i]));
  std::sort(rows.begin(), rows.end(), HalfspaceKeyLess{});
  CanonicalForm out;
  std::vector<IntVector> normals;
  for (auto& [normal, offset] : rows) {
    normals.push_back(normal);
    out.offsets.push_back(offset);
  }
  out.normals = IntMatrix::from_rows(normals, P.dim());
  return out;
}

Polyhedron to_polyhedron(const CanonicalForm& F) { return Polyhedron(F.normals, F.offsets); }

std::vector<IntVector> lattice_points(const Polyhedron& P) {
  const std::size_t n = P.dim();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (bool maximize : {false, true}) {
      LinearProgram lp(n);
      lp.objective.assign(n, Rat(0));
      lp.objective[j] = 1;
      lp.maximize = maximize;
      for (std::size_t i = 0; i < P.num_rows(); ++i)
        lp.add(row_as_rat(P.normals, i), Relation::GreaterEqual, -P.offsets[i]);
      LPResult r = solve_lp(lp);
      if (r.status == LPStatus::Infeasible) return {};
      if (r.status == LPStatus::Unbounded)
        throw UnboundedError("lattice points requested for an unbounded polyhedron");
      if (maximize) hi[j] = floor(r.value);
      else lo[j] = ceil(r.value);
    }
    if (lo[j] > hi[j]) return {};
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (P.contains(x)) out.push_back(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        for (std::size_t t = j + 1; t < n; ++t) x[t] = lo[t];
        break;
      }
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

bool is_reflexive(const Polyhedron& P) {
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    bool zero_row = is_zero(P.normals.row(i));
    if ((zero_row && P.offsets[i] < 0) || (!zero_row && P.offsets[i] <= 0))
      throw NotInteriorError("reflexivity: 0 is not an interior point");
  }
  VertexResult v = vertices_and_rays(P);
  if (!v.generators.rays.empty()) throw UnboundedError("reflexivity: polyhedron is unbounded");
  for (const auto& p : v.generators.points)
    if (!all_integral(p)) throw NotLatticeError("reflexivity: vertices not integral");
  for (const auto& q : polar(P).points)
    if (!all_integral(q)) return false;
  return true;
}

bool vertex_test_with_ray(const PointSet& S, const RatVector& p) {
  if (std::find(S.points.begin(), S.points.end(), p) == S.points.end())
    throw InputError("vertex test: point is not a member of the generating set");
  std::vector<const RatVector*> others;
  for (const auto& q : S.points)
    if (q != p) others.push_back(&q);
  if (others.empty()) return true;
  const std::size_t n = p.size();
  const std::size_t vars = others.size() + S.rays.size();
  LinearProgram lp(vars);
  lp.nonnegative.assign(vars, true);
  RatVector ones(vars, Rat(0));
  for (std::size_t k = 0; k < others.size(); ++k) ones[k] = 1;
  lp.add(ones, Relation::Equal, 1);
  for (std::size_t d = 0; d < n; ++d) {
    RatVector row(vars);
    for (std::size_t k = 0; k < others.size(); ++k) row[k] = (*others[k])[d];
    for (std::size_t l = 0; l < S.rays.size(); ++l) row[others.size() + l] = S.rays[l][d];
    lp.add(std::move(row), Relation::Equal, p[d]);
  }
  return solve_lp(lp).status == LPStatus::Infeasible;
}

Polyhedron translate(const Polyhedron& P, const RatVector& xi0) {
  if (xi0.size() != P.dim()) throw InputError("translation vector has the wrong length");
  RatVector shift = P.normals * xi0;
  RatVector offsets = P.offsets;
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] -= shift[i];
  return Polyhedron(P.normals, offsets);
}

bool angular_less(const IntVector& a, const IntVector& b) {
  auto coords = [](const IntVector& v) -> std::pair<Int, Int> {
    if (v.size() == 1) return {v[0], Int(0)};
    if (v.size() != 2) throw InputError("angular order needs points of dimension 1 or 2");
    return {v[0], v[1]};
  };
  auto [ax, ay] = coords(a);
  auto [bx, by] = coords(b);
  bool a_zero = ax == 0 && ay == 0, b_zero = bx == 0 && by == 0;
  if (a_zero || b_zero) return !a_zero && b_zero;
  auto half = [](const Int& x, const Int& y) { return (x > 0 || (x == 0 && y > 0)) ? 0 : 1; };
  int ha = half(ax, ay), hb = half(bx, by);
  if (ha != hb) return ha < hb;
  Int cross = ax * by - ay * bx;
  if (cross != 0) return cross < 0;
  return ax * ax + ay * ay < bx * bx + by * by;
}

}  // namespace tlg
