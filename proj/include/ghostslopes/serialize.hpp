#pragma once

// JSON encoding of the library's records. Big integers are decimal strings and
// rationals are "num/den" strings, so every document parses back exactly.

#include <json.hpp>

#include "ghostslopes/dims.hpp"
#include "ghostslopes/ghost.hpp"
#include "ghostslopes/newton.hpp"
#include "ghostslopes/params.hpp"
#include "ghostslopes/steinberg.hpp"
#include "ghostslopes/valuation.hpp"
#include "ghostslopes/verify.hpp"

namespace ghostslopes {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Rational rational_from_json(const Json& j);
Json bigint_json(const BigInt& value);
BigInt bigint_from_json(const Json& j);

void to_json(Json& j, const Setting& s);
void from_json(const Json& j, Setting& s);
void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);
void to_json(Json& j, const DimTriple& d);
void from_json(const Json& j, DimTriple& d);
void to_json(Json& j, const ExtValuation& v);
void from_json(const Json& j, ExtValuation& v);
void to_json(Json& j, const Vertex& v);
void from_json(const Json& j, Vertex& v);
void to_json(Json& j, const Segment& seg);
void from_json(const Json& j, Segment& seg);
void to_json(Json& j, const NewtonPolygon& np);
void from_json(const Json& j, NewtonPolygon& np);
void to_json(Json& j, const SlopeEntry& e);
void from_json(const Json& j, SlopeEntry& e);
void to_json(Json& j, const TruncationCertificate& c);
void from_json(const Json& j, TruncationCertificate& c);
void to_json(Json& j, const SlopeMultiset& m);
void from_json(const Json& j, SlopeMultiset& m);
void to_json(Json& j, const DeltaProfile& d);
void from_json(const Json& j, DeltaProfile& d);
void to_json(Json& j, const NSRange& r);
void from_json(const Json& j, NSRange& r);
void to_json(Json& j, const CorrespondenceReport& r);
void from_json(const Json& j, CorrespondenceReport& r);
void to_json(Json& j, const Status& s);
void from_json(const Json& j, Status& s);
void to_json(Json& j, const CheckResult& c);
void from_json(const Json& j, CheckResult& c);
void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);
void to_json(Json& j, const MultisetComparison& c);
void from_json(const Json& j, MultisetComparison& c);
void to_json(Json& j, const LocalConstancyReport& r);
void from_json(const Json& j, LocalConstancyReport& r);
void to_json(Json& j, const MainPropositionReport& r);
void from_json(const Json& j, MainPropositionReport& r);
void to_json(Json& j, const FigureConstants& f);
void from_json(const Json& j, FigureConstants& f);

}  // namespace ghostslopes
