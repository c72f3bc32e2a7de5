#include "tlg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tlg/errors.hpp"
#include "tlg/lp.hpp"

namespace tlg {

namespace {

IntVector ones(std::size_t n) { return IntVector(n, Int(1)); }

void sort_lex(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return lex_compare(a, b) < 0; });
}

std::vector<IntVector> nonzero_points(const Polyhedron& P) {
  std::vector<IntVector> out;
  for (auto& p : lattice_points(P))
    if (!is_zero(p)) out.push_back(std::move(p));
  return out;
}

std::vector<IntVector> hull_vertex_points(const std::vector<IntVector>& pts) {
  std::vector<RatVector> rat;
  for (const auto& p : pts) rat.push_back(to_rat(p));
  std::vector<IntVector> out;
  for (const auto& v : hull_vertices(rat)) out.push_back(to_int(v));
  sort_lex(out);
  return out;
}

bool same_class(const CokernelPresentation& P, const IntVector& a, const IntVector& b) {
  IntVector diff = a;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= b[i];
  if (!is_zero(P.project(diff))) return false;
  return P.torsion.empty() || is_zero(P.project_torsion(diff));
}

}  // namespace

std::vector<IntVector> NefData::rays_of(std::size_t j) const {
  std::vector<IntVector> out;
  for (std::size_t v = 0; v < base.num_rays(); ++v)
    if (parts[j][v] > 0) out.push_back(base.div.row(v));
  return out;
}

NefCheck nef_subpartition_check(const NefData& N) {
  NefCheck out;
  const std::size_t r = N.base.num_rays();
  IntVector rest = ones(r);
  out.givental = true;
  for (std::size_t j = 0; j < N.num_parts(); ++j) {
    const IntVector& D = N.parts[j];
    if (D.size() != r) throw InputError("part " + std::to_string(j + 1) + " has the wrong length");
    if (is_zero(D) || std::any_of(D.begin(), D.end(), [](const Int& x) { return x < 0; })) {
      out.givental = false;
      out.reasons.push_back("D_" + std::to_string(j + 1) + " is not effective and nonzero");
    }
    for (std::size_t v = 0; v < r; ++v) rest[v] -= D[v];
  }
  if (std::any_of(rest.begin(), rest.end(), [](const Int& x) { return x < 0; })) {
    out.givental = false;
    out.reasons.push_back("-kappa - sum D_j is not effective");
  }
  out.calabi_yau = same_class(N.base.coker, rest, IntVector(r, Int(0)));
  if (!out.calabi_yau) out.reasons.push_back("sum D_j is not anticanonical");

  std::vector<IntVector> all_vertices, union_points;
  out.hulls_nonempty = true;
  for (std::size_t j = 0; j < N.num_parts(); ++j) {
    std::vector<IntVector> pts;
    try {
      pts = nonzero_points(section_polytope(N.base, N.parts[j]));
    } catch (const UnboundedError&) {
      out.reasons.push_back("P_{D_" + std::to_string(j + 1) + "} is unbounded");
    }
    if (pts.empty()) {
      out.hulls_nonempty = false;
      out.reasons.push_back("C_" + std::to_string(j + 1) + " is empty");
      continue;
    }
    for (auto& v : hull_vertex_points(pts)) all_vertices.push_back(v);
    union_points.insert(union_points.end(), pts.begin(), pts.end());
  }
  sort_lex(all_vertices);
  all_vertices.erase(std::unique(all_vertices.begin(), all_vertices.end()), all_vertices.end());
  out.vertex_union = out.hulls_nonempty && hull_vertex_points(union_points) == all_vertices;
  if (out.hulls_nonempty && !out.vertex_union) out.reasons.push_back("vert(C) differs from the union of vert(C_j)");
  return out;
}

namespace {

Rat phi(const NefData& N, std::size_t i, const IntVector& nu) {
  auto verts = vertices_and_rays(section_polytope(N.base, N.parts[i])).vertices();
  if (verts.empty()) throw InputError("P_{D_" + std::to_string(i + 1) + "} has no vertices");
  Rat best = dot(nu, verts.front());
  for (const auto& v : verts) best = std::min(best, dot(nu, v));
  return -best;
}

}  // namespace

bool phi_check(const NefData& N) {
  if (!is_reflexive(Polyhedron(N.base.div, to_rat(ones(N.base.num_rays())))))
    throw InputError("phi check needs a reflexive base polytope");
  for (std::size_t v = 0; v < N.base.num_rays(); ++v) {
    std::size_t owner = kNoPart;
    for (std::size_t j = 0; j < N.num_parts(); ++j)
      if (N.parts[j][v] > 0) owner = j;
    if (owner == kNoPart) continue;
    IntVector e = N.base.div.row(v);
    for (std::size_t i = 0; i < N.num_parts(); ++i)
      if (phi(N, i, e) != Rat(i == owner ? 1 : 0)) return false;
  }
  return true;
}

Polyhedron nabla_via_phi(const NefData& N, std::size_t j) {
  RatVector offsets;
  for (std::size_t v = 0; v < N.base.num_rays(); ++v) offsets.push_back(phi(N, j, N.base.div.row(v)));
  return Polyhedron(N.base.div, offsets);
}

BBDual bb_dual(const NefData& N) {
  NefCheck check = nef_subpartition_check(N);
  if (!check.valid() || !check.calabi_yau) {
    std::string why;
    for (const auto& r : check.reasons) why += (why.empty() ? "" : "; ") + r;
    throw InputError("not a Calabi-Yau nef sub-partition: " + why);
  }
  BBDual out;
  std::vector<RatVector> hull_points;
  std::vector<IntVector> rays;
  std::vector<std::size_t> owner;
  for (std::size_t j = 0; j < N.num_parts(); ++j) {
    Polyhedron nabla = section_polytope(N.base, N.parts[j]);
    for (const auto& v : vertices_and_rays(nabla).vertices()) hull_points.push_back(v);
    auto E = hull_vertex_points(nonzero_points(nabla));
    for (const auto& e : E) {
      rays.push_back(e);
      owner.push_back(j);
    }
    out.E_star.push_back(std::move(E));
    out.nabla.push_back(std::move(nabla));
  }
  out.p_star_polar = convex_hull(PointSet{hull_points, {}});
  bool reflexive = false;
  try {
    reflexive = is_reflexive(out.p_star_polar);
  } catch (const InputError&) {
  }
  if (!reflexive) throw ConsistencyError("conv of the nabla_j is not reflexive");
  out.p_star = polar(PointSet{hull_vertices(hull_points), {}});

  IntMatrix div = IntMatrix::from_rows(rays, N.base.rank());
  out.star.base = ToricVarietyData(div, {}, false, true, true);
  for (std::size_t j = 0; j < N.num_parts(); ++j) {
    IntVector D(rays.size(), Int(0));
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (owner[k] == j) D[k] = 1;
    out.star.parts.push_back(std::move(D));
  }
  return out;
}

std::vector<std::vector<IntVector>> partition_rays(const NefData& N) {
  std::vector<std::vector<IntVector>> out;
  for (std::size_t j = 0; j < N.num_parts(); ++j) {
    auto r = N.rays_of(j);
    sort_lex(r);
    out.push_back(std::move(r));
  }
  return out;
}

BBMirrorReport bb_mirror_via_duality(const NefData& N, const LiftVector& K_base) {
  BBMirrorReport out;
  out.bb = bb_dual(N);
  SectionSpec S = SectionSpec::generic_section();
  S.nonzero_lift = ComplexLift::imaginary(1);
  ToricLGModel M = build_lg(SplitBundleData(N.base, N.parts), K_base, S);
  out.analysis = analyze(M);
  const Analysis& a = out.analysis;
  if (a.yprime) {
    const YPrime& y = *a.yprime;
    Polyhedron Yp(y.div, apply_k(y.report, a.alpha_prime));
    out.yprime_matches_pstar = canonical_form(Yp) == canonical_form(out.bb.p_star);

    using Entry = std::pair<IntVector, IntVector>;
    std::vector<Entry> ours, theirs;
    for (std::size_t s = 0; s < y.div.rows(); ++s) {
      IntVector values;
      for (const auto& cls : y.D_classes) values.push_back(cls[s]);
      ours.emplace_back(y.div.row(s), values);
    }
    const NefData& star = out.bb.star;
    for (std::size_t s = 0; s < star.base.num_rays(); ++s) {
      IntVector values;
      for (const auto& D : star.parts) values.push_back(D[s]);
      theirs.emplace_back(star.base.div.row(s), values);
    }
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    out.classes_match = ours == theirs;
  }
  out.is_bundle = a.bundle && a.bundle->is_bundle;
  out.section_ok = a.section.ok();
  return out;
}

IntMatrix BHData::augmented() const {
  const std::size_t k = P.rows();
  IntMatrix out(k + 1, P.cols() + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < P.cols(); ++j) out(i, j) = P(i, j);
  for (std::size_t i = 0; i <= k; ++i) out(i, P.cols()) = 1;
  for (std::size_t j = 0; j < P.cols(); ++j) out(k, j) = 1;
  return out;
}

void validate(const BHData& B) {
  const std::size_t k = B.weights.size();
  if (k == 0) throw InputError("BH data needs at least one weight");
  if (B.P.rows() != k || B.P.cols() != k)
    throw InputError("BH exponent matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  for (const auto& l : B.weights)
    if (l <= 0) throw InputError("BH weights must be positive");
  for (std::size_t j = 0; j < k; ++j) {
    IntVector col = B.P.column(j);
    if (std::any_of(col.begin(), col.end(), [](const Int& x) { return x < 0; }))
      throw InputError("exponent column " + std::to_string(j + 1) + " has a negative entry");
    if (dot(B.weights, col) != B.degree)
      throw InputError("exponent column " + std::to_string(j + 1) + " is not of weighted degree d");
  }
}

std::pair<IntMatrix, IntMatrix> bh_factors(const BHData& B) {
  const std::size_t k = B.weights.size();
  IntMatrix K = kernel_basis(IntMatrix::from_rows({B.weights}, k));
  const std::size_t n = K.cols();
  IntMatrix A(k + 1, n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < n; ++c) A(i, c) = K(i, c);
    A(i, n) = 1;
  }
  A(k, n) = 1;
  std::vector<IntVector> rows;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector a = B.P.column(j);
    for (auto& x : a) x -= 1;
    auto nu = solve_integer(K, a);
    if (!nu) throw InputError("monomial " + std::to_string(j + 1) + " has degree different from sum l");
    nu->push_back(Int(1));
    rows.push_back(*nu);
  }
  IntVector constant(n + 1, Int(0));
  constant[n] = 1;
  rows.push_back(constant);
  return {A, IntMatrix::from_rows(rows, n + 1)};
}

BHDual bh_dual(const BHData& B) {
  validate(B);
  const std::size_t k = B.weights.size();
  IntMatrix L = left_kernel_basis(B.augmented().transpose());
  if (L.rows() != 1)
    throw InputError("the augmented transpose has a left kernel of rank " + std::to_string(L.rows()) +
                     ", expected 1");
  IntVector g = L.row(0);
  if (g[k] > 0)
    for (auto& x : g) x = -x;
  for (std::size_t i = 0; i < k; ++i)
    if (g[i] <= 0) throw InputError("the left kernel has no positive generator");
  if (g[k] >= 0) throw InputError("the left kernel has no positive generator");

  BHDual out;
  out.mirror.weights.assign(g.begin(), g.begin() + k);
  out.mirror.degree = -g[k];
  out.mirror.P = B.P.transpose();
  Int sum = 0;
  for (const auto& l : out.mirror.weights) sum += l;
  out.calabi_yau = sum == out.mirror.degree;

  Int base_sum = 0;
  for (const auto& l : B.weights) base_sum += l;
  if (base_sum == B.degree) {
    auto [A, Bm] = bh_factors(B);
    out.factorization = A * Bm.transpose() == B.augmented();
    IntVector annihilator = out.mirror.weights;
    annihilator.push_back(-out.mirror.degree);
    out.cokernel_of_B = is_zero(Bm.transpose() * annihilator);
  }
  return out;
}

std::vector<IntVector> degree_monomials(const IntVector& weights, const Int& degree) {
  for (const auto& l : weights)
    if (l <= 0) throw InputError("weights must be positive");
  std::vector<IntVector> out;
  IntVector a(weights.size(), Int(0));
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i + 1 == weights.size()) {
      if (left % weights[i] == 0) {
        a[i] = left / weights[i];
        out.push_back(a);
      }
      return;
    }
    for (Int e = 0; e * weights[i] <= left; ++e) {
      a[i] = e;
      rec(i + 1, left - e * weights[i]);
    }
  };
  if (!weights.empty() && degree >= 0) rec(0, degree);
  sort_lex(out);
  return out;
}

namespace {

struct RowRoles {
  std::vector<std::size_t> base;
  std::vector<std::size_t> fiber;
};

RowRoles roles_of(const ToricLGModel& M) {
  if (!M.blocks) throw BlockStructureError("a sigma-built model is required");
  RowRoles out;
  out.fiber.assign(M.blocks->parts, kNoPart);
  for (std::size_t i = 0; i < M.A.rows(); ++i) {
    const RowBlock& b = M.blocks->a_rows[i];
    if (b.kind == RowKind::Unit) out.fiber.at(b.part) = i;
    else out.base.push_back(i);
  }
  return out;
}

// Negates rows whose degree part is nonpositive and nonzero.
void normalize_signs(IntMatrix& m, IntMatrix& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any_neg = false, any_pos = false;
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d(i, j) < 0) any_neg = true;
      if (d(i, j) > 0) any_pos = true;
    }
    if (any_neg && !any_pos) {
      for (std::size_t v = 0; v < m.cols(); ++v) m(i, v) = -m(i, v);
      for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) = -d(i, j);
    }
  }
}

// Right inverse supported on k columns of m, preferring the rightmost columns
// and unimodular minors.
std::vector<RatVector> right_inverse(const IntMatrix& m) {
  const std::size_t k = m.rows(), r = m.cols();
  std::vector<RatVector> S(r, RatVector(k, Rat(0)));
  if (k == 0) return S;
  std::optional<std::vector<std::size_t>> chosen;
  bool unimodular = false;
  std::vector<std::size_t> cols;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (unimodular) return;
    if (cols.size() == k) {
      Int det = determinant(m.select_columns(cols));
      if (det == 0) return;
      if (det == 1 || det == -1) {
        chosen = cols;
        unimodular = true;
      } else if (!chosen) {
        chosen = cols;
      }
      return;
    }
    for (std::size_t c = next; c-- > 0;) {
      cols.push_back(c);
      rec(c);
      cols.pop_back();
      if (unimodular) return;
    }
  };
  rec(r);
  if (!chosen) throw InputError("the class matrix does not have full row rank");
  IntMatrix sub = m.select_columns(*chosen);
  for (std::size_t e = 0; e < k; ++e) {
    RatVector unit(k, Rat(0));
    unit[e] = 1;
    auto col = solve_rational(sub, unit);
    if (!col) throw ConsistencyError("right inverse: singular minor");
    for (std::size_t a = 0; a < k; ++a) S[(*chosen)[a]][e] = (*col)[a];
  }
  return S;
}

}  // namespace

GiventalPresentation givental_presentation(const ToricLGModel& M) {
  RowRoles roles = roles_of(M);
  bundle_of(M);  // validates a torsion-free base
  const CokernelPresentation& P = M.A.coker;
  P.require_torsion_free("Givental presentation");
  const std::size_t k = P.free_rank, r = roles.base.size(), c = roles.fiber.size();
  GiventalPresentation out;
  out.m = IntMatrix(k, r);
  out.d = IntMatrix(k, c);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = 0; v < r; ++v) out.m(i, v) = P.projection(i, roles.base[v]);
    for (std::size_t j = 0; j < c; ++j) out.d(i, j) = -P.projection(i, roles.fiber[j]);
  }
  normalize_signs(out.m, out.d);
  for (std::size_t i = 0; i < k; ++i) out.relations.push_back({out.m.row(i), out.d.row(i), i});
  for (std::size_t v = 0; v < r; ++v) out.F.push_back("x" + std::to_string(v + 1));
  for (std::size_t j = 0; j < c; ++j) out.F.push_back("y" + std::to_string(j + 1));

  out.t_hat = right_inverse(out.m);
  out.q_identity = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t e = 0; e < k; ++e) {
      Rat s = 0;
      for (std::size_t v = 0; v < r; ++v) s += Rat(out.m(i, v)) * out.t_hat[v][e];
      if (s != Rat(i == e ? 1 : 0)) out.q_identity = false;
    }
  for (std::size_t v = 0; v < r; ++v)
    out.variables.push_back({out.F[v], out.t_hat[v], M.A.matrix.row(roles.base[v])});
  for (std::size_t j = 0; j < c; ++j)
    out.variables.push_back({out.F[r + j], RatVector(k, Rat(0)), M.A.matrix.row(roles.fiber[j])});
  out.K_class = imaginary_parts(class_of(P, M.A.lift));
  return out;
}

HVPresentation hv_presentation(const ToricLGModel& M) {
  HVPresentation out;
  out.givental = givental_presentation(M);
  SplitBundleData B = bundle_of(M);
  out.frak_m = hermite_normal_form(left_kernel_basis(B.base.div)).H;
  const std::size_t k = out.frak_m.rows(), c = B.parts();
  out.frak_d = IntMatrix(k, c);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) out.frak_d(i, j) = dot(out.frak_m.row(i), B.divisors[j]);
  normalize_signs(out.frak_m, out.frak_d);
  out.certificate = out.frak_m == out.givental.m && out.frak_d == out.givental.d;
  if (!out.certificate)
    throw ConsistencyError("Hori-Vafa weights differ from the Givental relation exponents");
  return out;
}

std::string monomial_string(const std::vector<std::string>& names, const IntVector& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += names.at(i);
    if (exponents[i] != 1) out += "^" + to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

SemigroupVerdict semigroup_generation_check(const IntMatrix& rows, long bound) {
  SemigroupVerdict out;
  const std::size_t n = rows.cols(), g = rows.rows();
  if (bound < 0) throw InputError("semigroup bound must be nonnegative");

  // A functional positive on every generator.
  LinearProgram lp(n);
  for (std::size_t i = 0; i < g; ++i) lp.add(to_rat(rows.row(i)), Relation::GreaterEqual, 1);
  LPResult h = solve_lp(lp);
  if (!h.optimal()) {
    out.pointed = false;
    return out;
  }

  auto in_cone = [&](const IntVector& p) {
    LinearProgram f(g);
    f.nonnegative.assign(g, true);
    for (std::size_t d = 0; d < n; ++d) {
      RatVector row(g);
      for (std::size_t i = 0; i < g; ++i) row[i] = rows(i, d);
      f.add(std::move(row), Relation::Equal, Rat(p[d]));
    }
    return solve_lp(f).status == LPStatus::Optimal;
  };

  std::vector<IntVector> targets;
  Rat h_max = 0;
  IntVector p(n, Int(-bound));
  while (true) {
    if (in_cone(p)) {
      targets.push_back(p);
      h_max = std::max(h_max, dot(p, h.x));
    }
    std::size_t k = n;
    while (k > 0 && p[k - 1] == bound) p[--k] = -bound;
    if (k == 0) break;
    ++p[k - 1];
  }

  std::set<IntVector> reached{IntVector(n, Int(0))};
  std::vector<IntVector> frontier{IntVector(n, Int(0))};
  while (!frontier.empty()) {
    IntVector q = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < g; ++i) {
      IntVector s = q;
      for (std::size_t d = 0; d < n; ++d) s[d] += rows(i, d);
      if (dot(s, h.x) > h_max) continue;
      if (reached.insert(s).second) frontier.push_back(std::move(s));
    }
  }
  out.points_checked = targets.size();
  for (const auto& t : targets)
    if (!reached.count(t)) {
      out.counterexample = t;
      return out;
    }
  out.generated = true;
  return out;
}

}  // namespace tlg
