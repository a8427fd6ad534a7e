#ifndef CARTANPATH_JSON_IO_HPP
#define CARTANPATH_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "cartanpath/lie_algebra.hpp"
#include "cartanpath/path_structure.hpp"
#include "cartanpath/sl2.hpp"

namespace cartanpath {

using Json = nlohmann::ordered_json;

/// Wire formats. Rationals cross the boundary as strings only ("p/q" or "p");
/// every reader accepts exactly what the corresponding writer emits.

Json sc_to_json(const StructureConstants& sc);
StructureConstants sc_from_json(const Json& j);  // throws std::invalid_argument

Json ady_to_json(const AdYMatrix& A);
/// Accepts {"ad_Y": [[..],[..],[..]]} or a bare 3x2 array of rational strings.
AdYMatrix ady_from_json(const Json& j);

Json pair_to_json(const LinePair& p);
/// Accepts {"D1": ["h","e","f"], "D2": ["h","e","f"]}.
LinePair pair_from_json(const Json& j);

}  // namespace cartanpath

#endif
