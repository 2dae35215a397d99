#pragma once

// JSON encodings with a fixed field order. Element values of finite cardinals
// are 1-based; rationals are decimal strings {"num", "den"}.
//
//   FinMap      {"dom", "cod", "table"}
//   GenWord     {"dom", "cod", "gens": [{"kind", "n", "i"}]}
//   Poly        {"vars", "terms": [{"exp", "num", "den"}]}
//   PolyMap     {"dom", "cod", "components": [Poly]}
//   SectorForm  {"n", "m", "k", "body": PolyMap}
//
// Decoding failures throw ErrorCode::json; well-formed JSON describing an
// invalid object throws the code of the violated invariant.

#include <json.hpp>

#include "sectorform/fincard.hpp"
#include "sectorform/poly.hpp"
#include "sectorform/sector.hpp"
#include "sectorform/tangent.hpp"

namespace sf::json {

  using Json = nlohmann::ordered_json;

  Json encode(FinMap const&);
  Json encode(GenWord const&);
  Json encode(Poly const&);
  Json encode(PolyMap const&);
  Json encode(SectorForm const&);
  Json encode(ComplexReport const&);
  Json encode(std::vector<RelationReport> const&);
  Json encode(std::vector<AxiomReport> const&);

  FinMap     decode_finmap(Json const&);
  GenWord    decode_genword(Json const&);
  Poly       decode_poly(Json const&);
  PolyMap    decode_polymap(Json const&);
  SectorForm decode_form(Json const&);

  // Parses text, mapping syntax errors to ErrorCode::json.
  Json parse(std::string const& text);

}  // namespace sf::json
