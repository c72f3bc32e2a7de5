#include "tlg/sigma.hpp"

#include <algorithm>

#include "tlg/errors.hpp"

namespace tlg {

ToricVarietyData::ToricVarietyData(IntMatrix div_, std::vector<std::string> names, bool smooth_,
                                   bool complete_, bool allow_torsion)
    : ray_names(std::move(names)), div(std::move(div_)), smooth(smooth_), complete(complete_) {
  if (ray_names.empty()) {
    for (std::size_t i = 0; i < div.rows(); ++i) ray_names.push_back("rho" + std::to_string(i + 1));
  }
  if (ray_names.size() != div.rows()) {
    throw InputError("toric variety: " + std::to_string(ray_names.size()) + " ray names for " +
                     std::to_string(div.rows()) + " rays");
  }
  for (std::size_t i = 0; i < div.rows(); ++i) {
    IntVector row = div.row(i);
    if (is_zero(row) || content(row) != 1)
      throw InputError("toric variety: div row " + std::to_string(i + 1) + " is not primitive");
  }
  coker = cokernel(div);
  if (!allow_torsion) coker.require_torsion_free("toric variety");
}

SplitBundleData::SplitBundleData(ToricVarietyData b, std::vector<IntVector> d)
    : base(std::move(b)), divisors(std::move(d)) {
  for (std::size_t j = 0; j < divisors.size(); ++j)
    if (divisors[j].size() != base.num_rays())
      throw InputError("divisor " + std::to_string(j + 1) + " has length " +
                       std::to_string(divisors[j].size()) + ", expected " +
                       std::to_string(base.num_rays()));
}

Polyhedron section_polytope(const ToricVarietyData& base, const IntVector& D) {
  return Polyhedron(base.div, to_rat(D));
}

std::vector<IntVector> section_lattice_points(const ToricVarietyData& base, const IntVector& D,
                                              SectionOrder order) {
  auto pts = lattice_points(section_polytope(base, D));
  if (order == SectionOrder::Angular) {
    if (base.rank() > 2) throw InputError("angular order needs a base of rank at most 2");
    std::stable_sort(pts.begin(), pts.end(), angular_less);
  }
  return pts;
}

IntMatrix div_total_space(const SplitBundleData& B) {
  const std::size_t r = B.base.num_rays(), n = B.base.rank(), c = B.parts();
  IntMatrix out(r + c, n + c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < n; ++k) out(i, k) = B.base.div(i, k);
    for (std::size_t j = 0; j < c; ++j) out(i, n + j) = B.divisors[j][i];
  }
  for (std::size_t j = 0; j < c; ++j) out(r + j, n + j) = 1;
  return out;
}

std::vector<RowBlock> total_space_rows(const SplitBundleData& B) {
  std::vector<RowBlock> rows(B.base.num_rays(), RowBlock{RowKind::Lattice, kNoPart});
  for (std::size_t j = 0; j < B.parts(); ++j) rows.push_back({RowKind::Unit, j});
  return rows;
}

MonomialData mon_for_section(const SplitBundleData& B, const SectionSpec& S) {
  const std::size_t n = B.base.rank(), c = B.parts();
  std::vector<SectionTerm> nonzero, constant;
  if (S.generic) {
    for (std::size_t j = 0; j < c; ++j) {
      for (auto& nu : section_lattice_points(B.base, B.divisors[j], S.order)) {
        if (is_zero(nu)) constant.push_back({j, nu, S.zero_lift});
        else nonzero.push_back({j, nu, S.nonzero_lift});
      }
    }
  } else {
    std::vector<std::pair<std::size_t, IntVector>> seen;
    for (const auto& t : S.terms) {
      if (t.part >= c)
        throw InputError("section term refers to part " + std::to_string(t.part + 1) + " of " +
                         std::to_string(c));
      if (t.exponent.size() != n) throw InputError("section term exponent has the wrong length");
      if (!section_polytope(B.base, B.divisors[t.part]).contains(t.exponent))
        throw InputError("section term exponent lies outside P_D for part " +
                         std::to_string(t.part + 1));
      std::pair<std::size_t, IntVector> key{t.part, t.exponent};
      if (std::find(seen.begin(), seen.end(), key) != seen.end())
        throw InputError("duplicate section term");
      seen.push_back(key);
      (is_zero(t.exponent) ? constant : nonzero).push_back(t);
    }
    auto by_part = [](const SectionTerm& a, const SectionTerm& b) { return a.part < b.part; };
    std::stable_sort(nonzero.begin(), nonzero.end(), by_part);
    std::stable_sort(constant.begin(), constant.end(), by_part);
  }

  MonomialData out;
  std::vector<IntVector> rows;
  auto add = [&](const SectionTerm& t, RowKind kind) {
    IntVector row = t.exponent;
    for (std::size_t j = 0; j < c; ++j) row.emplace_back(j == t.part ? 1 : 0);
    rows.push_back(std::move(row));
    out.lifts.push_back(t.lift);
    out.rows.push_back({kind, t.part});
    out.terms.push_back(t);
  };
  for (const auto& t : nonzero) add(t, RowKind::Lattice);
  for (const auto& t : constant) add(t, RowKind::Unit);
  out.matrix = IntMatrix::from_rows(rows, n + c);
  return out;
}

ToricLGModel build_lg(const SplitBundleData& B, const LiftVector& K_base, const SectionSpec& S) {
  if (B.parts() == 0) throw InputError("an LG model needs at least one bundle summand (c >= 1)");
  if (K_base.size() != B.base.num_rays()) {
    throw InputError("K lift has length " + std::to_string(K_base.size()) + ", expected " +
                     std::to_string(B.base.num_rays()));
  }
  LiftVector K = K_base;
  K.resize(B.base.num_rays() + B.parts());
  MonomialData mon = mon_for_section(B, S);
  if (mon.matrix.rows() == 0) throw InputError("the section has no terms");
  BlockLayout layout{B.base.rank(), B.parts(), total_space_rows(B), mon.rows};
  return ToricLGModel(LinearData(div_total_space(B), K), LinearData(mon.matrix, mon.lifts),
                      layout);
}

std::string to_string(DualExistence d) {
  switch (d) {
    case DualExistence::Exists: return "exists";
    case DualExistence::NotKopasetic: return "not_kopasetic";
    case DualExistence::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

DualExistence dual_exists(const ToricLGModel& M) {
  if (!M.blocks || M.blocks->parts == 0) return DualExistence::NotApplicable;
  return kopasetic_check(M.B).verdict ? DualExistence::Exists : DualExistence::NotKopasetic;
}

ChowComparison chow_comparison(const SplitBundleData& B) {
  ChowComparison out;
  const CokernelPresentation& Y = B.base.coker;
  CokernelPresentation X = cokernel(div_total_space(B));
  out.torsion_base = Y.torsion;
  out.torsion_total = X.torsion;
  out.free_rank_base = Y.free_rank;
  out.free_rank_total = X.free_rank;
  const std::size_t r = B.base.num_rays();
  IntMatrix incl(r + B.parts(), r);
  for (std::size_t i = 0; i < r; ++i) incl(i, i) = 1;
  IntMatrix pushed = X.projection * incl;
  out.witness = pushed * Y.section;
  out.isomorphic = Y.free_rank == X.free_rank && X.torsion == Y.torsion &&
                   pushed == out.witness * Y.projection;
  if (out.isomorphic) {
    Int d = determinant(out.witness);
    out.isomorphic = d == 1 || d == -1;
  }
  return out;
}

}  // namespace tlg
