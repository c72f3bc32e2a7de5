#pragma once

// JSON encoding of the library types. Integers are written as decimal strings
// and rationals as "p/q" strings; on input plain JSON integers are accepted too.

#include <string>

#include "json.hpp"
#include "tlg/constructions.hpp"
#include "tlg/lineardata.hpp"
#include "tlg/polyhedra.hpp"
#include "tlg/sigma.hpp"
#include "tlg/structure.hpp"

namespace tlg::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

enum class ModelKind { LGModel, SigmaInput, NefData, BHData, Polyhedron };

std::string to_string(ModelKind kind);

/// Parsed sigma-input payload.
struct SigmaInput {
  SplitBundleData bundle;
  LiftVector K_base;
  SectionSpec section;

  ToricLGModel build() const { return build_lg(bundle, K_base, section); }
};

struct NefInput {
  NefData nef;
  LiftVector K_base;
};

struct ModelFile {
  ModelKind kind = ModelKind::LGModel;
  Json data;
};

/// Parses {"format_version": "1", "kind": ..., "data": {...}}. Throws InputError
/// with the offending field on schema problems.
ModelFile parse_model_file(const std::string& text);
Json model_file(ModelKind kind, Json data);

// ---- scalars and arrays ----
Json to_json(const Int& v);
Json to_json(const Rat& v);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const ComplexLift& z);
Json to_json(const LiftVector& v);
Json to_json(const std::vector<std::size_t>& indices);  // 0-based, as JSON numbers
Json to_json(const std::vector<IntVector>& rows);
Json to_json(const std::vector<RatVector>& rows);

Int int_from(const Json& j, const std::string& field);
Rat rat_from(const Json& j, const std::string& field);
IntVector int_vector_from(const Json& j, const std::string& field);
RatVector rat_vector_from(const Json& j, const std::string& field);
IntMatrix int_matrix_from(const Json& j, const std::string& field);
ComplexLift lift_from(const Json& j, const std::string& field);
LiftVector lift_vector_from(const Json& j, const std::string& field);

/// Comma separated rationals, e.g. "0,2,5/2,0".
RatVector parse_rat_list(const std::string& text);

// ---- payloads ----
Json to_json(const LinearData& D);
Json to_json(const BlockLayout& L);
Json to_json(const ToricLGModel& M);
Json to_json(const Polyhedron& P);
Json to_json(const CanonicalForm& F);
Json to_json(const PointSet& S);
Json to_json(const ToricVarietyData& T);
Json to_json(const SectionSpec& S);
Json to_json(const BHData& B);

LinearData linear_data_from(const Json& j, const std::string& field);
ToricLGModel lg_model_from(const Json& j);
Polyhedron polyhedron_from(const Json& j);
ToricVarietyData variety_from(const Json& j, const std::string& field);
SectionSpec section_from(const Json& j, const std::string& field);
SigmaInput sigma_input_from(const Json& j);
NefInput nef_input_from(const Json& j);
BHData bh_data_from(const Json& j);

// ---- reports ----
Json to_json(const KopaseticReport& r);
Json to_json(const RegularityReport& r);
Json to_json(const PairReport& r);
Json to_json(const YPrime& y);
Json to_json(const VjResult& v);
Json to_json(const BundleReport& b);
Json to_json(const SectionTestResult& s);
Json to_json(const DoubleDual& d);
Json to_json(const Analysis& a);
Json to_json(const NefCheck& c);
Json to_json(const BBDual& d);
Json to_json(const BBMirrorReport& r);
Json to_json(const BHDual& d);
Json to_json(const GiventalPresentation& g);
Json to_json(const HVPresentation& h);
Json to_json(const SemigroupVerdict& s);

/// exp(2 pi i lift) at 15 significant digits, as {"re": "...", "im": "..."} strings.
Json numeric_coefficients(const LiftVector& v);

}  // namespace tlg::io
