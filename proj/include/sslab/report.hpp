#pragma once

#include <string>

#include "json.hpp"
#include "sslab/homcounts.hpp"
#include "sslab/regularize.hpp"
#include "sslab/sidorenko.hpp"
#include "sslab/spectra.hpp"
#include "sslab/supersat.hpp"

namespace sslab {

// Field order is part of the output format, so documents use ordered_json.
using Json = nlohmann::ordered_json;

// Every top-level document carries "schema": "sslab.<kind>/<version>".
inline constexpr const char* kSpectralSchema = "sslab.spectral/1";
inline constexpr const char* kHomSchema = "sslab.hom/1";
inline constexpr const char* kCheckSchema = "sslab.check/1";
inline constexpr const char* kP3Schema = "sslab.p3/1";
inline constexpr const char* kPruneSchema = "sslab.prune/1";
inline constexpr const char* kPartitionSchema = "sslab.partition/1";
inline constexpr const char* kRowCoverSchema = "sslab.rowcover/1";
inline constexpr const char* kRegularSchema = "sslab.regular/1";
inline constexpr const char* kPipelineSchema = "sslab.pipeline/1";
inline constexpr const char* kErrorSchema = "sslab.error/1";

Json to_json(const PerronData& pd, bool with_vector);
Json to_json(const OpNormEstimate& est);
Json to_json(const SingularTriple& st);
Json to_json(const CutDiagnostics& cd);
Json to_json(const IneqReport& rep);
Json to_json(const P3Report& rep);
Json to_json(const PruneTrace& tr);
Json to_json(const AcdPartition& p);
Json to_json(const RowCoverOutcome& rc);
Json to_json(const RegularBundle& b);
Json to_json(const PipelineReport& rep);

/// Exact integers are written as decimal strings.
Json exact(const BigInt& v);

/// Adds the schema tag in front of the body.
Json document(const char* schema, const Json& body);

/// Pretty-printed with two-space indent and a trailing newline.
std::string render(const Json& j);

}  // namespace sslab
