#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "logmut/decider.hpp"
#include "logmut/logdatum.hpp"
#include "logmut/wallfn.hpp"

namespace logmut::io {

using json = nlohmann::ordered_json;

/// {"edges":[{"e":[x,y],"nu":[...]}], "name"?: string, "comment"?: string}
struct DatumDocument {
  LogDatum datum;
  std::string name;
  std::string comment;
};

/// Throws Error(Parse) for malformed JSON or schema violations and the
/// datum's own ErrorKind when the edges do not form a valid log datum.
DatumDocument parse_datum_document(std::string_view text);
DatumDocument parse_datum_document(const json& j);

json to_json(const LogDatum& s);
json to_json(const DatumDocument& doc);
json to_json(const Partition& p);
json to_json(LatticeVec v);

/// {"steps":[{"edge":int,"part":int}],"terminal":<datum>}; "part" is the
/// value of the mutated part.
json to_json(const Certificate& c);
Certificate parse_certificate(const json& j);
Certificate parse_certificate(std::string_view text);

json to_json(const Verdict& v);

/// Polynomials as triples [[x_exp, u_exp, "p/q"], ...].
json to_json(const BiPoly& f);
/// Accepts the triple form or the text form "u^2 + 3/2*x".
BiPoly parse_bipoly(const json& j);

/// {"walls":[{"e"?:[x,y], "factors":[poly, ...]}]}. Walls carrying "e" are
/// matched to the edge with that vector; otherwise walls follow the datum's
/// counterclockwise order.
json to_json(const WallAssignment& w, const LogDatum& s);
WallAssignment parse_wall_assignment(const json& j, const LogDatum& s);
WallAssignment parse_wall_assignment(std::string_view text, const LogDatum& s);

json parse_json(std::string_view text);

}  // namespace logmut::io
