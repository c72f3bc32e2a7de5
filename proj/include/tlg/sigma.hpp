#pragma once

#include <string>
#include <vector>

#include "tlg/exactlinalg.hpp"
#include "tlg/lineardata.hpp"
#include "tlg/polyhedra.hpp"

namespace tlg {

/// A toric variety given by its character-to-divisor map (one primitive row
/// per ray). Smoothness and completeness are recorded as declared, not checked.
struct ToricVarietyData {
  std::vector<std::string> ray_names;
  IntMatrix div;
  CokernelPresentation coker;
  bool smooth = false;
  bool complete = false;

  ToricVarietyData() = default;
  /// Validates primitive rows and, unless allow_torsion, a torsion-free class
  /// group. Missing names default to rho1, rho2, ...
  explicit ToricVarietyData(IntMatrix div_, std::vector<std::string> names = {},
                            bool smooth_ = false, bool complete_ = false,
                            bool allow_torsion = false);

  std::size_t num_rays() const { return div.rows(); }
  std::size_t rank() const { return div.cols(); }
};

/// V = O(D_1) + ... + O(D_c) over the base.
struct SplitBundleData {
  ToricVarietyData base;
  std::vector<IntVector> divisors;

  SplitBundleData() = default;
  SplitBundleData(ToricVarietyData b, std::vector<IntVector> d);

  std::size_t parts() const { return divisors.size(); }
};

enum class SectionOrder { Lex, Angular };

struct SectionTerm {
  std::size_t part = 0;
  IntVector exponent;
  ComplexLift lift;
};

/// Generic sections use every lattice point of each P_{D_j}; explicit ones list terms.
struct SectionSpec {
  bool generic = true;
  SectionOrder order = SectionOrder::Lex;
  ComplexLift nonzero_lift;  // generic: lift of terms with a nonzero exponent
  ComplexLift zero_lift;     // generic: lift of the terms 0_j
  std::vector<SectionTerm> terms;

  static SectionSpec generic_section(SectionOrder order = SectionOrder::Lex) {
    SectionSpec s;
    s.order = order;
    return s;
  }
  static SectionSpec explicit_terms(std::vector<SectionTerm> t) {
    SectionSpec s;
    s.generic = false;
    s.terms = std::move(t);
    return s;
  }
};

/// P_D = {xi : div xi + D >= 0}.
Polyhedron section_polytope(const ToricVarietyData& base, const IntVector& D);

/// Lattice points of P_D in the requested order. Throws UnboundedError.
std::vector<IntVector> section_lattice_points(const ToricVarietyData& base, const IntVector& D,
                                              SectionOrder order);

/// [div_Y | D_1 ... D_c ; 0 | I_c].
IntMatrix div_total_space(const SplitBundleData& B);

/// Rows of div_total_space: base rays first, then the bundle rows X_1..X_c.
std::vector<RowBlock> total_space_rows(const SplitBundleData& B);

struct MonomialData {
  IntMatrix matrix;             // rows (nu, e_j)
  LiftVector lifts;
  std::vector<RowBlock> rows;   // Lattice rows (nu != 0) first, then the Unit rows 0_j
  std::vector<SectionTerm> terms;
};

/// Terms with nonzero exponent for j = 1..c in turn, then the constant terms 0_j.
MonomialData mon_for_section(const SplitBundleData& B, const SectionSpec& S);

/// The LG model (Tot(V^dual), W, K). K_base is the lift on the base rays; it is
/// extended by zeros on the bundle rows.
ToricLGModel build_lg(const SplitBundleData& B, const LiftVector& K_base, const SectionSpec& S);

enum class DualExistence { Exists, NotKopasetic, NotApplicable };

std::string to_string(DualExistence d);

DualExistence dual_exists(const ToricLGModel& M);

/// coker(div_X) against coker(div_Y): the map induced by the base-row inclusion.
struct ChowComparison {
  IntVector torsion_base;
  IntVector torsion_total;
  std::size_t free_rank_base = 0;
  std::size_t free_rank_total = 0;
  IntMatrix witness;  // W with proj_X o incl = W o proj_Y
  bool isomorphic = false;
};

ChowComparison chow_comparison(const SplitBundleData& B);

}  // namespace tlg
