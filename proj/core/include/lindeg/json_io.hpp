#pragma once

#include <nlohmann/json.hpp>

#include "lindeg/arcs.hpp"
#include "lindeg/cells.hpp"
#include "lindeg/loci.hpp"
#include "lindeg/rep.hpp"

namespace lindeg {

using Json = nlohmann::json;

/// Parsers throw InvalidInput on malformed documents and validate the
/// decoded value.
Json to_json(const MatrixRep& rep);
MatrixRep matrix_rep_from_json(const Json& j);

/// {"n", "diag", "r"}; row i of r lists r_{i,i+1}..r_{i,n}.
Json to_json(const RankTuple& rt);
RankTuple rank_tuple_from_json(const Json& j);

/// {"n", "m": [{"i", "j", "mult"}]} with zero multiplicities omitted.
Json to_json(const IsoClass& iso);
IsoClass iso_class_from_json(const Json& j);

Json to_json(const ArcDiagram& a);
ArcDiagram arc_diagram_from_json(const Json& j);

/// witness is null, an index, or a pair.
Json to_json(const LocusReport& rep);
Json to_json(const Witness& w);

Json to_json(const FixedPoint& fp);

/// Compact, keys sorted.
std::string dump(const Json& j);

}  // namespace lindeg
