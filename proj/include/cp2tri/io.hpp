#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cp2tri/complex.hpp"

namespace cp2 {

// Facet-list text format:
//
//   sc dim=<d> nverts=<n>
//   <label>,<label>,...      one facet per line, canonical order
//
// Pair, Mid and GridU tokens contain a comma themselves ("v:1,2"), so a piece
// starting with one of those tags swallows the following piece.
std::string serialize(const SimplicialComplex& k);
// Throws MalformedInput with "line L, column C" in the message.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex read_complex(std::istream& in);

nlohmann::json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

std::string to_string(const Simplex& s);

}  // namespace cp2
