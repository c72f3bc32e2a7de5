#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlg/lineardata.hpp"
#include "tlg/sigma.hpp"

namespace tlg {

/// A' = [[d' | D'], [0 | Id]] read off a dual model. Rows of d' are the
/// Lattice rows of A' in their original order.
struct DualBlocks {
  std::size_t base_cols = 0;
  std::size_t parts = 0;
  IntMatrix d_prime;
  IntMatrix D_prime;
  std::vector<std::size_t> lattice_rows;  // row of A' for each row of d'
  std::vector<std::size_t> part_of;       // part of each row of d'
  std::vector<std::size_t> unit_rows;     // row of A' holding [0 | e_j]

  /// [[d', D'], [0, Id]] with the Lattice rows first.
  IntMatrix reassemble() const;
  /// (alpha_x, 0): the lift on reassemble() rows.
  RatVector full_alpha(const RatVector& alpha_x) const;
};

/// Throws BlockStructureError when the layout is missing or the unit rows are not [0 | e_j].
DualBlocks extract_blocks(const ToricLGModel& M_dual);

/// Accepts a lift on the rows of d' or on all rows of A'. A full lift is
/// translated along the fiber directions so that the unit rows get 0; the
/// d' part is returned.
RatVector normalize_alpha_prime(const DualBlocks& blocks, const ToricLGModel& M_dual,
                                const RatVector& alpha);

/// Starts from all ones and pushes out non-primitive facets until (d', alpha')
/// is kopasetic. Empty when that does not happen within a few rounds.
std::optional<RatVector> suggest_kopasetic_lift(const IntMatrix& d_prime);

/// Y' as linear data. Its class group may carry torsion (the diamond has Z/2),
/// so it is recorded rather than rejected.
struct YPrime {
  KopaseticReport report;
  IntMatrix div;
  CokernelPresentation coker;
  std::vector<IntVector> D_classes;  // k(D'_j)
};

/// Throws KopaseticError when (d', alpha') is not kopasetic.
YPrime build_yprime(const DualBlocks& blocks, const RatVector& alpha_x);

enum class VjPath { ScaledPoints, Facets };

std::string to_string(VjPath path);

struct VjPart {
  std::vector<std::size_t> rows;         // rows of d' in part j
  std::vector<RatVector> points;         // (nu, sigma_j) / alpha' (scaled path only)
  std::vector<std::size_t> vertex_rows;  // V_j^x as rows of d'
};

struct VjResult {
  VjPath path = VjPath::ScaledPoints;
  std::vector<VjPart> parts;
};

/// Scaled points when alpha' > 0, facets of (A', (alpha', 0)) when some entry is 0.
/// Throws InputError on negative entries.
VjResult compute_Vj(const DualBlocks& blocks, const RatVector& alpha_x);

struct BundleReport {
  VjResult vj;
  bool is_bundle = false;
  std::vector<std::size_t> failing;  // rows of d' in V_j^x not giving a vertex of Q
  /// Scaled path: whether "nonzero vertex of Q" matches "row is a facet of (d', alpha')" row by row.
  std::optional<bool> vertex_facet_agreement;
  IntMatrix eprime_div;             // [[k d', k D'], [0, Id]]
  bool facets_match_eprime = false;  // canonical forms of X' and E' agree
  bool x_local_cy = false;
  bool e_local_cy = false;
};

/// `yprime` is kopasetic_check(d', alpha'), whatever its verdict.
BundleReport is_bundle(const DualBlocks& blocks, const RatVector& alpha_x,
                       const KopaseticReport& yprime);

/// Whether the all-ones vector is div(m) for an integral m.
bool local_calabi_yau(const IntMatrix& div);

enum class SectionOutcome { Found, Absent, Truncated };

std::string to_string(SectionOutcome outcome);

struct SectionTestResult {
  SectionOutcome outcome = SectionOutcome::Absent;
  std::vector<IntVector> witness;        // xi_1 .. xi_c
  std::vector<IntVector> divisors;       // D_j + div(xi_j)
  std::uint64_t nodes_visited = 0;

  bool ok() const { return outcome == SectionOutcome::Found; }
};

inline constexpr std::uint64_t kSectionSearchCap = 10'000'000;

/// Looks for xi_j in P_{D_j} with sum_j (D_j + div xi_j) = (1, ..., 1).
SectionTestResult section_test(const SplitBundleData& B, std::uint64_t cap = kSectionSearchCap);

/// Same, with the bundle read off a sigma-built model.
SectionTestResult section_test(const ToricLGModel& M, std::uint64_t cap = kSectionSearchCap);

/// The base and bundle of a sigma-built model.
SplitBundleData bundle_of(const ToricLGModel& M);

struct Analysis {
  RatVector alpha_prime;  // on the rows of d'
  bool alpha_suggested = false;
  DualResult dual;
  DualBlocks blocks;
  KopaseticReport y_report;
  std::optional<YPrime> yprime;
  std::string yprime_failure;
  std::optional<BundleReport> bundle;
  std::string bundle_failure;
  SectionTestResult section;
  std::optional<DoubleDual> double_dual;
  std::string double_dual_failure;
};

/// Dualizes M with Im of its B-side lift replaced by alpha' and runs the
/// analysis above. Without alpha', Im of the B-side lift is used unless it
/// vanishes on d', in which case a lift is suggested.
Analysis analyze(const ToricLGModel& M, const std::optional<RatVector>& alpha_prime = std::nullopt);

}  // namespace tlg
