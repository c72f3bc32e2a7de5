#include "tlg/lineardata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tlg {

LinearData::LinearData(IntMatrix m, LiftVector l) : matrix(std::move(m)), lift(std::move(l)) {
  if (lift.size() != matrix.rows()) {
    throw InputError("lift has length " + std::to_string(lift.size()) + " but the matrix has " +
                     std::to_string(matrix.rows()) + " rows");
  }
  coker = cokernel(matrix);
}

ToricLGModel::ToricLGModel(LinearData a, LinearData b, std::optional<BlockLayout> layout)
    : A(std::move(a)), B(std::move(b)), blocks(std::move(layout)) {
  if (A.cols() != B.cols()) {
    throw InputError("A-side has " + std::to_string(A.cols()) + " columns but the B-side has " +
                     std::to_string(B.cols()));
  }
  if (blocks && (blocks->a_rows.size() != A.rows() || blocks->b_rows.size() != B.rows()))
    throw InputError("block layout does not match the matrix shapes");
}

Polyhedron polytope_of(const LinearData& D) { return Polyhedron(D.matrix, D.alpha()); }

std::string to_string(KopaseticReason reason) {
  switch (reason) {
    case KopaseticReason::Kopasetic: return "kopasetic";
    case KopaseticReason::EmptySet: return "empty_set";
    case KopaseticReason::EmptyInterior: return "empty_interior";
    case KopaseticReason::NonPrimitiveFacet: return "non_primitive_facet";
  }
  return "unknown";
}

KopaseticReport kopasetic_check(const IntMatrix& C, const RatVector& alpha) {
  Polyhedron P(C, alpha);
  KopaseticReport out;
  out.k_row_map.assign(C.rows(), kDropped);
  out.duplicate_of.assign(C.rows(), kDropped);
  InteriorResult interior = interior_point(P);
  out.interior = interior.status;
  out.interior_witness = interior.point;
  if (interior.status == InteriorStatus::Empty) {
    out.reason = KopaseticReason::EmptySet;
    return out;
  }
  if (interior.status == InteriorStatus::Degenerate) {
    out.reason = KopaseticReason::EmptyInterior;
    return out;
  }
  FacetResult f = facet_rows(P);
  out.facet_indices = f.facets;
  std::vector<IntVector> rows;
  for (std::size_t s = 0; s < f.facets.size(); ++s) {
    std::size_t i = f.facets[s];
    out.k_row_map[i] = s;
    IntVector row = C.row(i);
    if (content(row) != 1) out.primitivity_failures.push_back(i);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < C.rows(); ++i) {
    std::size_t rep = f.representative[i];
    if (rep != kDropped && std::binary_search(f.facets.begin(), f.facets.end(), rep))
      out.duplicate_of[i] = rep;
  }
  out.facet_matrix = IntMatrix::from_rows(rows, C.cols());
  out.verdict = out.primitivity_failures.empty();
  out.reason = out.verdict ? KopaseticReason::Kopasetic : KopaseticReason::NonPrimitiveFacet;
  return out;
}

KopaseticReport kopasetic_check(const LinearData& D) {
  KopaseticReport r = kopasetic_check(D.matrix, D.alpha());
  r.pushed_lift = apply_k(r, D.lift);
  return r;
}

namespace {

template <typename V>
V apply_k_impl(const KopaseticReport& report, const V& v) {
  if (v.size() != report.k_row_map.size()) throw InputError("k map: vector length mismatch");
  V out(report.facet_indices.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t s = report.k_row_map[i];
    if (s != kDropped) out[s] = v[i];
  }
  return out;
}

}  // namespace

IntVector apply_k(const KopaseticReport& report, const IntVector& v) { return apply_k_impl(report, v); }
RatVector apply_k(const KopaseticReport& report, const RatVector& v) { return apply_k_impl(report, v); }
LiftVector apply_k(const KopaseticReport& report, const LiftVector& v) { return apply_k_impl(report, v); }

RegularityReport regularity_check(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols() != B.cols()) {
    throw InputError("regularity check: A has " + std::to_string(A.cols()) +
                     " columns, B has " + std::to_string(B.cols()));
  }
  RegularityReport out;
  out.product = A * B.transpose();
  for (std::size_t i = 0; i < out.product.rows(); ++i)
    for (std::size_t j = 0; j < out.product.cols(); ++j)
      if (out.product(i, j) < 0) out.negative_entries.emplace_back(i, j);
  out.regular = out.negative_entries.empty();
  return out;
}

PairReport pair_kopasetic(const ToricLGModel& M) {
  PairReport out;
  out.a_side = kopasetic_check(M.A);
  out.regularity = regularity_check(M.A.matrix, M.B.matrix);
  out.verdict = out.a_side.verdict && out.regularity.regular;
  return out;
}

DualResult dualize(const ToricLGModel& M) {
  std::optional<BlockLayout> swapped;
  if (M.blocks) swapped = M.blocks->swapped();
  ToricLGModel raw(M.B, M.A, swapped);
  KopaseticReport report = kopasetic_check(raw.A);
  if (!report.verdict) {
    throw KopaseticError("the dual A-side is not kopasetic (" + to_string(report.reason) + ")",
                         std::move(report));
  }
  std::optional<BlockLayout> realized_layout;
  if (swapped) {
    BlockLayout layout = *swapped;
    std::vector<RowBlock> kept;
    for (std::size_t i : report.facet_indices) kept.push_back(layout.a_rows[i]);
    layout.a_rows = std::move(kept);
    realized_layout = std::move(layout);
  }
  ToricLGModel realized(LinearData(report.facet_matrix, report.pushed_lift), raw.B,
                        realized_layout);
  return {std::move(raw), std::move(report), std::move(realized)};
}

DoubleDual double_dual_diff(const ToricLGModel& M) {
  DualResult first = dualize(M);
  DualResult second = dualize(first.realized);
  DoubleDual out{second.raw, {}};
  for (std::size_t i = 0; i < first.report.k_row_map.size(); ++i)
    if (first.report.k_row_map[i] == kDropped) out.deleted.push_back(i);
  return out;
}

std::vector<Term> superpotential_terms(const LinearData& D) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < D.rows(); ++i) out.push_back({D.lift[i], D.matrix.row(i)});
  return out;
}

std::complex<double> coefficient_value(const ComplexLift& lift) {
  const double two_pi = 2.0 * std::numbers::pi;
  double modulus = std::exp(-two_pi * lift.im.get_d());
  double angle = two_pi * lift.re.get_d();
  return std::polar(modulus, angle);
}

bool monomial_regular(const IntMatrix& div, const IntVector& xi) {
  IntVector v = div * xi;
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

IntVector anticanonical(const IntMatrix& div) { return IntVector(div.rows(), Int(1)); }

bool same_class(const LinearData& D, const LiftVector& other) {
  return torus_shift(D, other).has_value();
}

std::optional<std::pair<RatVector, RatVector>> torus_shift(const LinearData& D,
                                                           const LiftVector& other) {
  if (other.size() != D.rows()) throw InputError("torus shift: lift length mismatch");
  RatVector dre(D.rows()), dim(D.rows());
  for (std::size_t i = 0; i < D.rows(); ++i) {
    dre[i] = D.lift[i].re - other[i].re;
    dim[i] = D.lift[i].im - other[i].im;
  }
  auto t_im = solve_rational(D.matrix, dim);
  if (!t_im) return std::nullopt;
  RatVector w = D.coker.project(dre);
  if (!all_integral(w)) return std::nullopt;
  IntVector z = D.coker.section * to_int(w);
  for (std::size_t i = 0; i < dre.size(); ++i) dre[i] -= Rat(z[i]);
  auto t_re = solve_rational(D.matrix, dre);
  if (!t_re) throw ConsistencyError("torus shift: real part not in the image after reduction");
  return std::make_pair(*t_re, *t_im);
}

}  // namespace tlg
