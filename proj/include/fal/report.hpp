#pragma once

#include <string>

#include "json.hpp"

#include "fal/classify.hpp"
#include "fal/geodesics.hpp"
#include "fal/sepsets.hpp"

namespace fal::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fal/1";

// {"schema": "fal/1", "kind": kind}; every payload starts this way.
Json envelope(const std::string& kind);

Json summary(const FalMap& m);
Json to_json(const ValidationReport& r);
Json to_json(const Code& c);
Json to_json(const FalMap& m, const DiskTrace& t);
Json to_json(const FalMap& m, const ReflectionFace& f);
Json to_json(const FalMap& m, const SignatureDecomposition& s);
Json to_json(const RewriteStep& s);
Json to_json(const ReflectionClass& c);
Json to_json(const EquivalenceVerdict& v);
Json to_json(const FalMap& m, const SymmetryReport& r);
Json to_json(const FalMap& m, const SeparatingPair& p);
Json to_json(const FalMap& m, const SeparatingQuadruple& q);
Json to_json(const FalMap& m, const std::vector<SeparatingQuadruple>& quads, const InsideOrder& o);
Json to_json(const FalMap& m, const std::vector<SeparatingQuadruple>& quads, const StandardBall& b);

}  // namespace fal::report
