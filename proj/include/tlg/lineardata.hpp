#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlg/arith.hpp"
#include "tlg/errors.hpp"
#include "tlg/exactlinalg.hpp"
#include "tlg/matrix.hpp"
#include "tlg/polyhedra.hpp"

namespace tlg {

/// A homomorphism C: Z^g -> Z^t with a lift of a class in coker(C) (x) C/Z.
struct LinearData {
  IntMatrix matrix;
  LiftVector lift;
  CokernelPresentation coker;

  LinearData() = default;
  LinearData(IntMatrix m, LiftVector l);

  std::size_t rows() const { return matrix.rows(); }
  std::size_t cols() const { return matrix.cols(); }
  /// Imaginary parts of the lift, the offsets of the associated polytope.
  RatVector alpha() const { return imaginary_parts(lift); }
};

/// How a row of a sigma-built matrix sits in the block decomposition.
/// Lattice rows carry a character of the base lattice, Unit rows are (0 | e_part).
enum class RowKind { Lattice, Unit };

inline constexpr std::size_t kNoPart = static_cast<std::size_t>(-1);

struct RowBlock {
  RowKind kind = RowKind::Lattice;
  std::size_t part = kNoPart;
  bool operator==(const RowBlock&) const = default;
};

struct BlockLayout {
  std::size_t base_cols = 0;  // rank of the base lattice; the last c columns are fiber columns
  std::size_t parts = 0;      // c
  std::vector<RowBlock> a_rows;
  std::vector<RowBlock> b_rows;

  BlockLayout swapped() const { return {base_cols, parts, b_rows, a_rows}; }
  bool operator==(const BlockLayout&) const = default;
};

struct ToricLGModel {
  LinearData A;
  LinearData B;
  std::optional<BlockLayout> blocks;

  ToricLGModel() = default;
  ToricLGModel(LinearData a, LinearData b, std::optional<BlockLayout> layout = std::nullopt);
};

Polyhedron polytope_of(const LinearData& D);

enum class KopaseticReason { Kopasetic, EmptySet, EmptyInterior, NonPrimitiveFacet };

std::string to_string(KopaseticReason reason);

struct KopaseticReport {
  bool verdict = false;
  KopaseticReason reason = KopaseticReason::EmptySet;
  InteriorStatus interior = InteriorStatus::Empty;
  RatVector interior_witness;
  std::vector<std::size_t> facet_indices;
  /// Per original row: position of its generator in facet_indices, or kDropped.
  /// Rows merged into a facet as duplicates also map to kDropped, so that
  /// k composed with the matrix equals the facet matrix.
  std::vector<std::size_t> k_row_map;
  /// Per original row: the facet row defining the same half-space, or kDropped.
  std::vector<std::size_t> duplicate_of;
  std::vector<std::size_t> primitivity_failures;
  IntMatrix facet_matrix;  // the div map of the constructed variety
  LiftVector pushed_lift;  // k applied to the lift
};

KopaseticReport kopasetic_check(const LinearData& D);
KopaseticReport kopasetic_check(const IntMatrix& C, const RatVector& alpha);

/// k applied to a vector indexed by the original rows.
IntVector apply_k(const KopaseticReport& report, const IntVector& v);
RatVector apply_k(const KopaseticReport& report, const RatVector& v);
LiftVector apply_k(const KopaseticReport& report, const LiftVector& v);

class KopaseticError : public InputError {
 public:
  KopaseticError(const std::string& what, KopaseticReport r)
      : InputError(what), report(std::move(r)) {}
  KopaseticReport report;
};

struct RegularityReport {
  bool regular = true;
  IntMatrix product;  // A * B^T
  std::vector<std::pair<std::size_t, std::size_t>> negative_entries;
};

RegularityReport regularity_check(const IntMatrix& A, const IntMatrix& B);

struct PairReport {
  KopaseticReport a_side;
  RegularityReport regularity;
  bool verdict = false;
};

PairReport pair_kopasetic(const ToricLGModel& M);

/// The swapped pair, the kopasetic report of its A-side, and the model
/// realized on the constructed variety: A-side (k o A', k(K')), B-side (A, K).
struct DualResult {
  ToricLGModel raw;
  KopaseticReport report;
  ToricLGModel realized;
};

/// Throws KopaseticError when the swapped A-side is not kopasetic.
DualResult dualize(const ToricLGModel& M);

struct DoubleDual {
  ToricLGModel model;                 // (A, K) with the B-side rows that survived k
  std::vector<std::size_t> deleted;   // original B-side rows removed
};

DoubleDual double_dual_diff(const ToricLGModel& M);

struct Term {
  ComplexLift coefficient;
  IntVector exponent;
};

std::vector<Term> superpotential_terms(const LinearData& D);

/// exp(2 pi i re) * exp(-2 pi im).
std::complex<double> coefficient_value(const ComplexLift& lift);

bool monomial_regular(const IntMatrix& div, const IntVector& xi);

IntVector anticanonical(const IntMatrix& div);

/// Equality of the classes of two lifts in coker(C) (x) C/Z.
bool same_class(const LinearData& D, const LiftVector& other);

/// A complex character t = (re, im) with C t = lift - other modulo integers
/// in the real part, or nullopt when the classes differ.
std::optional<std::pair<RatVector, RatVector>> torus_shift(const LinearData& D,
                                                           const LiftVector& other);

}  // namespace tlg
