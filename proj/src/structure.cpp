#include "tlg/structure.hpp"

#include <algorithm>
#include <functional>

#include "tlg/errors.hpp"

namespace tlg {

IntMatrix DualBlocks::reassemble() const {
  IntMatrix out(d_prime.rows() + parts, base_cols + parts);
  for (std::size_t p = 0; p < d_prime.rows(); ++p) {
    for (std::size_t k = 0; k < base_cols; ++k) out(p, k) = d_prime(p, k);
    for (std::size_t j = 0; j < parts; ++j) out(p, base_cols + j) = D_prime(p, j);
  }
  for (std::size_t j = 0; j < parts; ++j) out(d_prime.rows() + j, base_cols + j) = 1;
  return out;
}

RatVector DualBlocks::full_alpha(const RatVector& alpha_x) const {
  RatVector out = alpha_x;
  out.resize(d_prime.rows() + parts);
  return out;
}

DualBlocks extract_blocks(const ToricLGModel& M) {
  if (!M.blocks) throw BlockStructureError("the model carries no block layout");
  const BlockLayout& L = *M.blocks;
  const std::size_t n = L.base_cols, c = L.parts;
  if (M.A.cols() != n + c) throw BlockStructureError("column count does not match the block layout");
  DualBlocks out;
  out.base_cols = n;
  out.parts = c;
  out.unit_rows.assign(c, kNoPart);
  std::vector<IntVector> d_rows, D_rows;
  for (std::size_t i = 0; i < M.A.rows(); ++i) {
    const RowBlock& b = L.a_rows[i];
    if (b.part >= c) throw BlockStructureError("row " + std::to_string(i + 1) + " has no part");
    IntVector row = M.A.matrix.row(i);
    if (b.kind == RowKind::Unit) {
      if (out.unit_rows[b.part] != kNoPart)
        throw BlockStructureError("part " + std::to_string(b.part + 1) + " has two unit rows");
      for (std::size_t k = 0; k < n + c; ++k) {
        Int expected = (k == n + b.part) ? 1 : 0;
        if (row[k] != expected)
          throw BlockStructureError("unit row " + std::to_string(i + 1) + " is not [0 | e_j]");
      }
      out.unit_rows[b.part] = i;
      continue;
    }
    out.lattice_rows.push_back(i);
    out.part_of.push_back(b.part);
    d_rows.emplace_back(row.begin(), row.begin() + n);
    D_rows.emplace_back(row.begin() + n, row.end());
  }
  for (std::size_t j = 0; j < c; ++j)
    if (out.unit_rows[j] == kNoPart)
      throw BlockStructureError("part " + std::to_string(j + 1) + " has no unit row");
  out.d_prime = IntMatrix::from_rows(d_rows, n);
  out.D_prime = IntMatrix::from_rows(D_rows, c);
  return out;
}

RatVector normalize_alpha_prime(const DualBlocks& blocks, const ToricLGModel& M_dual,
                                const RatVector& alpha) {
  const std::size_t m = blocks.d_prime.rows();
  if (alpha.size() == m) return alpha;
  if (alpha.size() != M_dual.A.rows()) {
    throw InputError("alpha' has length " + std::to_string(alpha.size()) + ", expected " +
                     std::to_string(m) + " or " + std::to_string(M_dual.A.rows()));
  }
  RatVector out(m);
  for (std::size_t p = 0; p < m; ++p) {
    out[p] = alpha[blocks.lattice_rows[p]];
    for (std::size_t j = 0; j < blocks.parts; ++j)
      out[p] -= Rat(blocks.D_prime(p, j)) * alpha[blocks.unit_rows[j]];
  }
  return out;
}

std::optional<RatVector> suggest_kopasetic_lift(const IntMatrix& d_prime) {
  RatVector alpha(d_prime.rows(), Rat(1));
  for (int round = 0; round < 16; ++round) {
    KopaseticReport r = kopasetic_check(d_prime, alpha);
    if (r.verdict) return alpha;
    if (r.reason != KopaseticReason::NonPrimitiveFacet) return std::nullopt;
    for (std::size_t i : r.primitivity_failures) alpha[i] *= 2;
  }
  return std::nullopt;
}

YPrime build_yprime(const DualBlocks& blocks, const RatVector& alpha_x) {
  KopaseticReport report = kopasetic_check(blocks.d_prime, alpha_x);
  if (!report.verdict) {
    throw KopaseticError("(d', alpha') is not kopasetic (" + to_string(report.reason) + ")",
                         std::move(report));
  }
  IntMatrix div = report.facet_matrix;
  CokernelPresentation coker = cokernel(div);
  std::vector<IntVector> classes;
  for (std::size_t j = 0; j < blocks.parts; ++j)
    classes.push_back(apply_k(report, blocks.D_prime.column(j)));
  return {std::move(report), std::move(div), std::move(coker), std::move(classes)};
}

std::string to_string(VjPath path) {
  return path == VjPath::ScaledPoints ? "scaled_points" : "facets";
}

VjResult compute_Vj(const DualBlocks& blocks, const RatVector& alpha_x) {
  const std::size_t m = blocks.d_prime.rows(), dim = blocks.base_cols + blocks.parts;
  if (alpha_x.size() != m) throw InputError("alpha' length does not match d'");
  for (const auto& a : alpha_x)
    if (a < 0) throw InputError("alpha' must be nonnegative on the nonzero section terms");
  VjResult out;
  out.parts.resize(blocks.parts);
  for (std::size_t p = 0; p < m; ++p) out.parts[blocks.part_of[p]].rows.push_back(p);
  bool positive = std::all_of(alpha_x.begin(), alpha_x.end(), [](const Rat& a) { return a > 0; });
  const IntMatrix A = blocks.reassemble();

  if (!positive) {
    out.path = VjPath::Facets;
    FacetResult f = facet_rows(Polyhedron(A, blocks.full_alpha(alpha_x)));
    for (auto& part : out.parts)
      for (std::size_t p : part.rows)
        if (std::binary_search(f.facets.begin(), f.facets.end(), p)) part.vertex_rows.push_back(p);
    return out;
  }

  out.path = VjPath::ScaledPoints;
  for (std::size_t j = 0; j < blocks.parts; ++j) {
    VjPart& part = out.parts[j];
    PointSet S;
    S.points.push_back(RatVector(dim, Rat(0)));
    IntVector sigma(dim, Int(0));
    sigma[blocks.base_cols + j] = 1;
    S.rays.push_back(sigma);
    for (std::size_t p : part.rows) {
      RatVector v = to_rat(A.row(p));
      for (auto& x : v) x /= alpha_x[p];
      part.points.push_back(v);
      S.points.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < part.rows.size(); ++k) {
      const RatVector& v = part.points[k];
      if (is_zero(v)) continue;
      if (vertex_test_with_ray(S, v)) part.vertex_rows.push_back(part.rows[k]);
    }
  }
  return out;
}

namespace {

RatVector project_base(const RatVector& v, std::size_t n) { return RatVector(v.begin(), v.begin() + n); }

}  // namespace

BundleReport is_bundle(const DualBlocks& blocks, const RatVector& alpha_x,
                       const KopaseticReport& yprime) {
  BundleReport out;
  out.vj = compute_Vj(blocks, alpha_x);
  const std::size_t n = blocks.base_cols, m = blocks.d_prime.rows();
  auto is_y_facet = [&](std::size_t p) { return yprime.duplicate_of[p] != kDropped; };

  if (out.vj.path == VjPath::ScaledPoints) {
    // conv({0} and every projected point) equals Q: the remaining points of C_j lie in its hull.
    PointSet Q;
    Q.points.push_back(RatVector(n, Rat(0)));
    std::vector<RatVector> projected(m);
    for (const auto& part : out.vj.parts)
      for (std::size_t k = 0; k < part.rows.size(); ++k) {
        projected[part.rows[k]] = project_base(part.points[k], n);
        Q.points.push_back(projected[part.rows[k]]);
      }
    std::vector<bool> q_vertex(m, false);
    for (std::size_t p = 0; p < m; ++p)
      q_vertex[p] = !is_zero(projected[p]) && vertex_test_with_ray(Q, projected[p]);
    bool agree = true;
    for (std::size_t p = 0; p < m; ++p)
      if (q_vertex[p] != is_y_facet(p)) agree = false;
    out.vertex_facet_agreement = agree;
    for (const auto& part : out.vj.parts)
      for (std::size_t p : part.vertex_rows)
        if (!q_vertex[p]) out.failing.push_back(p);
  } else {
    for (const auto& part : out.vj.parts)
      for (std::size_t p : part.vertex_rows)
        if (!is_y_facet(p)) out.failing.push_back(p);
  }
  std::sort(out.failing.begin(), out.failing.end());
  out.is_bundle = out.failing.empty();

  std::vector<IntVector> rows;
  RatVector e_alpha;
  for (std::size_t p : yprime.facet_indices) {
    IntVector row = blocks.d_prime.row(p);
    IntVector fiber = blocks.D_prime.row(p);
    row.insert(row.end(), fiber.begin(), fiber.end());
    rows.push_back(std::move(row));
    e_alpha.push_back(alpha_x[p]);
  }
  for (std::size_t j = 0; j < blocks.parts; ++j) {
    IntVector row(n + blocks.parts, Int(0));
    row[n + j] = 1;
    rows.push_back(std::move(row));
    e_alpha.emplace_back(0);
  }
  out.eprime_div = IntMatrix::from_rows(rows, n + blocks.parts);

  Polyhedron X(blocks.reassemble(), blocks.full_alpha(alpha_x));
  Polyhedron E(out.eprime_div, e_alpha);
  if (interior_point(X).has_interior() && interior_point(E).has_interior())
    out.facets_match_eprime = canonical_form(X) == canonical_form(E);
  FacetResult fx = facet_rows(X);
  out.x_local_cy = local_calabi_yau(X.normals.select_rows(fx.facets));
  out.e_local_cy = local_calabi_yau(out.eprime_div);
  return out;
}

bool local_calabi_yau(const IntMatrix& div) {
  return solve_integer(div, IntVector(div.rows(), Int(1))).has_value();
}

std::string to_string(SectionOutcome outcome) {
  switch (outcome) {
    case SectionOutcome::Found: return "found";
    case SectionOutcome::Absent: return "absent";
    case SectionOutcome::Truncated: return "truncated";
  }
  return "unknown";
}

SectionTestResult section_test(const SplitBundleData& B, std::uint64_t cap) {
  const std::size_t c = B.parts(), r = B.base.num_rays();
  std::vector<std::vector<IntVector>> xis(c), effective(c);
  for (std::size_t j = 0; j < c; ++j) {
    xis[j] = lattice_points(section_polytope(B.base, B.divisors[j]));
    for (const auto& xi : xis[j]) {
      IntVector e = B.base.div * xi;
      for (std::size_t i = 0; i < r; ++i) e[i] += B.divisors[j][i];
      effective[j].push_back(std::move(e));
    }
  }
  SectionTestResult out;
  std::vector<std::size_t> choice(c);
  IntVector partial(r, Int(0));
  bool truncated = false;
  std::function<bool(std::size_t)> search = [&](std::size_t j) -> bool {
    if (j == c) return std::all_of(partial.begin(), partial.end(), [](const Int& x) { return x == 1; });
    for (std::size_t k = 0; k < effective[j].size(); ++k) {
      if (++out.nodes_visited > cap) {
        truncated = true;
        return false;
      }
      const IntVector& e = effective[j][k];
      bool fits = true;
      for (std::size_t i = 0; i < r && fits; ++i) fits = partial[i] + e[i] <= 1;
      if (!fits) continue;
      for (std::size_t i = 0; i < r; ++i) partial[i] += e[i];
      choice[j] = k;
      if (search(j + 1)) return true;
      for (std::size_t i = 0; i < r; ++i) partial[i] -= e[i];
      if (truncated) return false;
    }
    return false;
  };
  if (search(0)) {
    out.outcome = SectionOutcome::Found;
    for (std::size_t j = 0; j < c; ++j) {
      out.witness.push_back(xis[j][choice[j]]);
      out.divisors.push_back(effective[j][choice[j]]);
    }
  } else {
    out.outcome = truncated ? SectionOutcome::Truncated : SectionOutcome::Absent;
  }
  return out;
}

SplitBundleData bundle_of(const ToricLGModel& M) {
  if (!M.blocks) throw BlockStructureError("the model carries no block layout");
  const BlockLayout& L = *M.blocks;
  const std::size_t n = L.base_cols, c = L.parts;
  if (M.A.cols() != n + c) throw BlockStructureError("column count does not match the block layout");
  std::vector<IntVector> base_rows;
  std::vector<IntVector> divisors(c);
  for (std::size_t i = 0; i < M.A.rows(); ++i) {
    IntVector row = M.A.matrix.row(i);
    if (L.a_rows[i].kind == RowKind::Unit) continue;
    base_rows.emplace_back(row.begin(), row.begin() + n);
    for (std::size_t j = 0; j < c; ++j) divisors[j].push_back(row[n + j]);
  }
  return SplitBundleData(ToricVarietyData(IntMatrix::from_rows(base_rows, n)), divisors);
}

SectionTestResult section_test(const ToricLGModel& M, std::uint64_t cap) {
  return section_test(bundle_of(M), cap);
}

Analysis analyze(const ToricLGModel& M, const std::optional<RatVector>& alpha_prime) {
  if (!M.blocks) throw BlockStructureError("analysis needs a sigma-built model");
  Analysis out;
  ToricLGModel swapped(M.B, M.A, M.blocks->swapped());
  out.blocks = extract_blocks(swapped);
  const DualBlocks& blocks = out.blocks;

  if (alpha_prime) {
    out.alpha_prime = normalize_alpha_prime(blocks, swapped, *alpha_prime);
  } else {
    out.alpha_prime = normalize_alpha_prime(blocks, swapped, imaginary_parts(M.B.lift));
    if (is_zero(out.alpha_prime)) {
      auto suggestion = suggest_kopasetic_lift(blocks.d_prime);
      if (!suggestion) throw InputError("no kopasetic lift found for d'; pass alpha' explicitly");
      out.alpha_prime = *suggestion;
      out.alpha_suggested = true;
    }
  }

  LiftVector lift = M.B.lift;
  for (auto& l : lift) l.im = 0;
  for (std::size_t p = 0; p < blocks.lattice_rows.size(); ++p)
    lift[blocks.lattice_rows[p]].im = out.alpha_prime[p];
  ToricLGModel with_alpha(M.A, LinearData(M.B.matrix, lift), M.blocks);

  out.dual = dualize(with_alpha);
  out.y_report = kopasetic_check(blocks.d_prime, out.alpha_prime);
  if (out.y_report.verdict) {
    try {
      out.yprime = build_yprime(blocks, out.alpha_prime);
    } catch (const InputError& e) {
      out.yprime_failure = e.what();
    }
  } else {
    out.yprime_failure = "(d', alpha') is not kopasetic (" + to_string(out.y_report.reason) + ")";
  }
  try {
    out.bundle = is_bundle(blocks, out.alpha_prime, out.y_report);
  } catch (const InputError& e) {
    out.bundle_failure = e.what();
  }
  out.section = section_test(M);
  try {
    out.double_dual = double_dual_diff(with_alpha);
  } catch (const KopaseticError& e) {
    out.double_dual_failure = e.what();
  }
  return out;
}

}  // namespace tlg
