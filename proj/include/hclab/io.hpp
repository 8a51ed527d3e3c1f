#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hclab/constructions.hpp"
#include "hclab/criterion.hpp"
#include "hclab/orbit.hpp"

namespace hclab::io {

// Insertion-ordered so emitted documents keep a stable, readable layout.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kCertificateFormat = "hclab.certificate.v1";

// Scalars are JSON integers when they are integers that fit in 64 bits,
// otherwise canonical `p/2^e` strings. Decimal floats are rejected.
Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

// Vectors: list of [index, numerator, exponent] triples in index order.
Json to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j);

Json to_json(const WeightRule& w);
WeightRule weight_from_json(const Json& j);
Json to_json(const BiorthogonalSystem& s);
BiorthogonalSystem system_from_json(const Json& j);
Json to_json(const Operator& op);
Operator operator_from_json(const Json& j);
/// JSON text, or a bare tag such as `F` or `B`.
Operator parse_operator(std::string_view text);

Json to_json(const SubspaceSpec& m);
SubspaceSpec subspace_from_json(const Json& j);
Json to_json(const PowerSequence& s);
PowerSequence sequence_from_json(const Json& j);
/// Accepts `a,b` or `ak`, `ak+b`, `ak-b`.
PowerSequence parse_sequence(std::string_view text);
Json to_json(const DecayCertificate& d);
DecayCertificate decay_from_json(const Json& j);
Json to_json(const CriterionWitness& w);
CriterionWitness witness_from_json(const Json& j);

Json to_json(const SubseqSelection& s);
SubseqSelection selection_from_json(const Json& j);
Json to_json(const CertificateCheck& c);
CertificateCheck check_from_json(const Json& j);

/// Whole certificate document: {"format", "payload", "metadata"}. Only the
/// payload is certified content.
Json certificate_to_json(const HypercyclicCertificate& cert);
HypercyclicCertificate certificate_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const ConditionsReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const LeReport& r);
Json to_json(const OrbitReport& r);

/// Parses JSON text; malformed input raises ParseError.
Json parse_json(std::string_view text);

}  // namespace hclab::io
