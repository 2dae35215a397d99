#include "sectorform/json_io.hpp"

#include <limits>
#include <sstream>

#include "sectorform/error.hpp"

namespace sf::json {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      fail(ErrorCode::json, what);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object()) {
        bad(std::string("expected an object with field \"") + key + "\"");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t natural(Json const& j, char const* key) {
      Json const& v = field(j, key);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        bad(std::string("field \"") + key + "\" must be a natural number");
      }
      return v.get<std::size_t>();
    }

    Json const& array(Json const& j, char const* key) {
      Json const& v = field(j, key);
      if (!v.is_array()) {
        bad(std::string("field \"") + key + "\" must be an array");
      }
      return v;
    }

    Rational rational(Json const& term) {
      auto text = [&](char const* key) {
        Json const& v = field(term, key);
        if (v.is_string()) {
          return v.get<std::string>();
        }
        if (v.is_number_integer()) {
          return std::to_string(v.get<long long>());
        }
        bad(std::string("field \"") + key + "\" must be a decimal string");
      };
      mpz_class num, den;
      if (num.set_str(text("num"), 10) != 0 || den.set_str(text("den"), 10) != 0) {
        bad("coefficient is not a decimal integer");
      }
      if (den == 0) {
        bad("coefficient has zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return q;
    }

    GenKind kind_of(std::string const& s) {
      if (s == "epsilon") {
        return GenKind::epsilon;
      }
      if (s == "delta") {
        return GenKind::delta;
      }
      if (s == "sigma") {
        return GenKind::sigma;
      }
      bad("unknown generator kind \"" + s + "\"");
    }

    void encode_ranks(ComplexRanks const& r, Json& out, std::string const& prefix) {
      out[prefix + "dims"]    = r.dims;
      out[prefix + "ranks"]   = r.ranks;
      out[prefix + "kernels"] = r.kernels;
      out[prefix + "images"]  = r.images;
      out[prefix + "H"]       = r.H;
    }
  }  // namespace

  Json parse(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      bad(std::string("malformed JSON: ") + e.what());
    }
  }

  Json encode(FinMap const& f) {
    Json j;
    j["dom"]   = f.dom();
    j["cod"]   = f.cod();
    j["table"] = f.table1();
    return j;
  }

  Json encode(GenWord const& w) {
    Json j;
    j["dom"]  = w.dom();
    j["cod"]  = w.cod();
    j["gens"] = Json::array();
    for (auto const& g : w.gens()) {
      Json gj;
      gj["kind"] = to_string(g.kind);
      gj["n"]    = g.n;
      gj["i"]    = g.i;
      j["gens"].push_back(std::move(gj));
    }
    return j;
  }

  Json encode(Poly const& p) {
    Json j;
    j["vars"]  = p.nvars();
    j["terms"] = Json::array();
    for (auto const& [e, c] : p.terms()) {
      Json t;
      t["exp"] = e;
      t["num"] = c.get_num().get_str();
      t["den"] = c.get_den().get_str();
      j["terms"].push_back(std::move(t));
    }
    return j;
  }

  Json encode(PolyMap const& f) {
    Json j;
    j["dom"]        = f.dom();
    j["cod"]        = f.cod();
    j["components"] = Json::array();
    for (auto const& p : f.components()) {
      j["components"].push_back(encode(p));
    }
    return j;
  }

  Json encode(SectorForm const& w) {
    Json j;
    j["n"]    = w.n();
    j["m"]    = w.m();
    j["k"]    = w.k();
    j["body"] = encode(w.body());
    return j;
  }

  Json encode(ComplexReport const& r) {
    Json j;
    j["dim"]    = r.m;
    j["deg"]    = r.d;
    j["levels"] = r.n_max;
    encode_ranks(r.sector, j, "");
    encode_ranks(r.singular, j, "singular_");
    j["complex_verified"] = r.complex_verified;
    return j;
  }

  Json encode(std::vector<RelationReport> const& reports) {
    Json arr = Json::array();
    for (auto const& r : reports) {
      Json j;
      j["family"]   = r.family;
      j["bound"]    = r.bound;
      j["checked"]  = r.checked;
      j["failures"] = Json::array();
      for (auto const& f : r.failures) {
        Json fj;
        fj["lhs"]     = encode(f.lhs);
        fj["rhs"]     = encode(f.rhs);
        fj["lhs_map"] = encode(f.lhs_map);
        fj["rhs_map"] = encode(f.rhs_map);
        j["failures"].push_back(std::move(fj));
      }
      arr.push_back(std::move(j));
    }
    return arr;
  }

  Json encode(std::vector<AxiomReport> const& reports) {
    Json arr = Json::array();
    for (auto const& r : reports) {
      Json j;
      j["family"]   = r.family;
      j["depth"]    = r.depth;
      j["checked"]  = r.checked;
      j["failures"] = Json::array();
      for (auto const& f : r.failures) {
        Json fj;
        fj["name"]   = f.name;
        fj["detail"] = f.detail;
        j["failures"].push_back(std::move(fj));
      }
      arr.push_back(std::move(j));
    }
    return arr;
  }

  FinMap decode_finmap(Json const& j) {
    std::size_t const dom   = natural(j, "dom");
    std::size_t const cod   = natural(j, "cod");
    Json const&       table = array(j, "table");
    if (table.size() != dom) {
      bad("table length differs from dom");
    }
    std::vector<std::uint32_t> t;
    for (auto const& y : table) {
      if (!y.is_number_integer() || y.get<long long>() < 1
          || y.get<unsigned long long>() > std::numeric_limits<std::uint32_t>::max()) {
        bad("table entries must be positive integers");
      }
      t.push_back(y.get<std::uint32_t>());
    }
    return FinMap::of(cod, t);
  }

  GenWord decode_genword(Json const& j) {
    std::size_t const      dom = natural(j, "dom");
    std::size_t const      cod = natural(j, "cod");
    std::vector<Generator> gens;
    for (auto const& g : array(j, "gens")) {
      Json const& kind = field(g, "kind");
      if (!kind.is_string()) {
        bad("generator kind must be a string");
      }
      gens.push_back({kind_of(kind.get<std::string>()), natural(g, "n"), natural(g, "i")});
    }
    return GenWord(dom, cod, std::move(gens));
  }

  Poly decode_poly(Json const& j) {
    std::size_t const vars = natural(j, "vars");
    Poly              p(vars);
    for (auto const& t : array(j, "terms")) {
      Json const& exp = array(t, "exp");
      if (exp.size() != vars) {
        fail(ErrorCode::dimension, "exponent length differs from \"vars\"");
      }
      Exponent e;
      for (auto const& x : exp) {
        if (!x.is_number_integer() || x.get<long long>() < 0
            || x.get<long long>() > std::numeric_limits<std::uint16_t>::max()) {
          bad("exponents must be small natural numbers");
        }
        e.push_back(x.get<std::uint16_t>());
      }
      p.add_term(std::move(e), rational(t));
    }
    return p;
  }

  PolyMap decode_polymap(Json const& j) {
    std::size_t const dom   = natural(j, "dom");
    std::size_t const cod   = natural(j, "cod");
    Json const&       comps = array(j, "components");
    if (comps.size() != cod) {
      fail(ErrorCode::dimension, "component count differs from \"cod\"");
    }
    std::vector<Poly> c;
    for (auto const& p : comps) {
      c.push_back(decode_poly(p));
    }
    return PolyMap(dom, std::move(c));
  }

  SectorForm decode_form(Json const& j) {
    std::size_t const k = j.is_object() && j.contains("k") ? natural(j, "k") : 1;
    return SectorForm(natural(j, "n"), natural(j, "m"), k, decode_polymap(field(j, "body")));
  }

}  // namespace sf::json
