#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/sigma.hpp"
#include "tlg/structure.hpp"

namespace tlg {

// ---- Batyrev-Borisov ----------------------------------------------------

/// A Fano base (rays = normals of the reflexive polytope P = P_{-kappa}) and
/// divisors D_1..D_c.
struct NefData {
  ToricVarietyData base;
  std::vector<IntVector> parts;

  std::size_t num_parts() const { return parts.size(); }
  /// Rays with D_j > 0, as vectors.
  std::vector<IntVector> rays_of(std::size_t j) const;
};

struct NefCheck {
  bool givental = false;      // D_j >= 0, D_j != 0, -kappa - sum D_j >= 0
  bool calabi_yau = false;    // [-kappa] = [sum D_j]
  bool hulls_nonempty = false;
  bool vertex_union = false;  // vert(C) = union of vert(C_j)
  std::vector<std::string> reasons;

  bool valid() const { return givental && hulls_nonempty && vertex_union; }
};

NefCheck nef_subpartition_check(const NefData& N);

/// phi_i(nu) = -min over P_{D_i} of nu; checks phi_i(e) = [e in E_i] on every ray in some E_j.
/// Throws InputError for a non-reflexive base.
bool phi_check(const NefData& N);

/// {mu : nu(mu) >= -phi_j(nu)} over the base rays.
Polyhedron nabla_via_phi(const NefData& N, std::size_t j);

struct BBDual {
  NefData star;                                // Y* rays ordered by part, then lex
  std::vector<Polyhedron> nabla;               // nabla_j = P_{D_j}
  std::vector<std::vector<IntVector>> E_star;  // vert(conv(nabla_j^x cap M)), lex order
  Polyhedron p_star_polar;                     // (P*)° = conv(union nabla_j)
  Polyhedron p_star;                           // polar of (P*)°
};

/// Throws InputError when N is not a Calabi-Yau nef sub-partition and
/// ConsistencyError when (P*)° is not reflexive.
BBDual bb_dual(const NefData& N);

/// Part data as sorted ray sets, for comparing N with bb_dual(bb_dual(N)).
std::vector<std::vector<IntVector>> partition_rays(const NefData& N);

struct BBMirrorReport {
  BBDual bb;
  Analysis analysis;
  bool yprime_matches_pstar = false;
  bool classes_match = false;
  bool is_bundle = false;
  bool section_ok = false;

  bool passed() const { return yprime_matches_pstar && classes_match && is_bundle && section_ok; }
};

/// The w_BB section (nonzero terms with lift i, constant terms 0), alpha' = 1
/// on the nonzero terms, then the structure analysis compared with bb_dual.
BBMirrorReport bb_mirror_via_duality(const NefData& N, const LiftVector& K_base);

// ---- Berglund-Hubsch ----------------------------------------------------

struct BHData {
  IntVector weights;  // l_0..l_n
  Int degree;         // d
  IntMatrix P;        // columns are exponent vectors

  /// [[P, 1], [1^T, 1]].
  IntMatrix augmented() const;
};

/// Checks l . column = d for every column and the shape of P.
void validate(const BHData& B);

struct BHDual {
  BHData mirror;
  bool calabi_yau = false;     // d^ = sum l^
  bool factorization = false;  // augmented = div_X mon^T for the all-monomial family
  bool cokernel_of_B = false;  // (l^, -d^) annihilates mon
};

/// Positive primitive generator of the left kernel of [[P^T, 1], [1^T, 1]].
BHDual bh_dual(const BHData& B);

/// The sigma-model factors A = div_X and B = mon of [[P, 1], [1^T, 1]].
std::pair<IntMatrix, IntMatrix> bh_factors(const BHData& B);

/// Exponent vectors a >= 0 with l . a = d, lex order.
std::vector<IntVector> degree_monomials(const IntVector& weights, const Int& degree);

// ---- Givental / Hori-Vafa -----------------------------------------------

/// prod_v x_v^{m_iv} = Q_i prod_j y_j^{d_ij}.
struct BinomialRelation {
  IntVector x_exponents;
  IntVector y_exponents;
  std::size_t parameter = 0;
};

/// x_v = (prod_i Q_i^{q_exponents_i}) * xi'^{character}.
struct VariableImage {
  std::string variable;
  RatVector q_exponents;
  IntVector character;
};

struct GiventalPresentation {
  IntMatrix m;  // (r - n) x r
  IntMatrix d;  // (r - n) x c
  std::vector<BinomialRelation> relations;
  std::vector<std::string> F;  // x1, ..., xr, y1, ..., yc
  std::vector<VariableImage> variables;
  std::vector<RatVector> t_hat;  // t^_v = sum_i t_hat[v][i] t_i
  bool q_identity = false;      // Q_i = prod_v q^_v^{m_iv} on lifts
  RatVector K_class;            // imaginary part of [K]; t = 2 pi i [K]
};

/// Requires a sigma-built model over a torsion-free base.
GiventalPresentation givental_presentation(const ToricLGModel& M);

struct HVPresentation {
  IntMatrix frak_m;
  IntMatrix frak_d;
  int t_sign = -1;  // frak t = -t
  GiventalPresentation givental;
  bool certificate = false;
};

/// Throws ConsistencyError when the two weight computations disagree.
HVPresentation hv_presentation(const ToricLGModel& M);

/// Monomial text such as "x1 x3" or "Q1 y1^2".
std::string monomial_string(const std::vector<std::string>& names, const IntVector& exponents);

// ---- semigroup ------------------------------------------------------------

struct SemigroupVerdict {
  bool generated = false;
  bool pointed = true;
  std::optional<IntVector> counterexample;
  std::size_t points_checked = 0;
};

/// Every lattice point of cone(rows) in [-bound, bound]^n is a nonnegative
/// integer combination of the rows.
SemigroupVerdict semigroup_generation_check(const IntMatrix& rows, long bound);

}  // namespace tlg
