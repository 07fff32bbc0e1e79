#pragma once

#include <string>

#include <json.hpp>

#include "a2b/triples.hpp"
#include "a2b/verify.hpp"

namespace a2b {

using Json = nlohmann::json;

/// {"point":["0","1","1"],"line":["1","0","0"]}; ParseError or
/// DegenerateInput on malformed text or a point off its line.
Flag flag_from_json(const Json& j, const Field& field);
/// {"flags":[flag, flag, flag]}. An optional "field" key must match `field`.
FlagTriple triple_from_json(const Json& j, const Field& field);
/// Reads and parses a triple file.
FlagTriple read_triple_file(const std::string& path, const Field& field);

Json to_json(const Val& v);
Json to_json(const Flag& f);
Json to_json(const FlagTriple& t);
/// {"coords":[v1,v2,v3],"simple_roots":[a1,a2]}.
Json to_json(const FlatVector& v);
/// {"basis":[b1,b2,b3],"weights":[c1,c2,c3]}, the b_i being basis vectors.
Json to_json(const BuildingPoint& x);
Json to_json(const TripleVal& z);
Json to_json(const Cell& c);
Json to_json(const PartitionReport& r);
Json to_json(const TripleType& t);

/// {"Z":[...],"triple_ratio":"...","ray_class":"..."}; triple_ratio is
/// "inf" when the algebraic triple ratio is infinite.
Json invariants_json(const TripleAnalysis& a);
Json report_json(const TripleReport& r);
Json cells_json(const TripleAnalysis& a);
Json two_points_json(const TwoPointsReport& r);
Json point_line_json(const PointLineReport& r);

/// Deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace a2b
