#include "sectorform/sectorform.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sectorform/error.hpp"
#include "sectorform/json_io.hpp"

struct sf_map {
  sf::FinMap value;
};
struct sf_word {
  sf::GenWord value;
};
struct sf_form {
  sf::SectorForm value;
};

namespace {

  thread_local std::string last_error;

  // Relation sweeps above this bound are refused rather than left to run.
  constexpr std::size_t relation_cap = 24;

  struct InputError {
    std::string what;
  };

  sf_status status_of(sf::ErrorCode code) {
    switch (code) {
      case sf::ErrorCode::json:
        return SF_ERR_JSON;
      case sf::ErrorCode::arity:
      case sf::ErrorCode::dimension:
        return SF_ERR_DIMENSION;
      case sf::ErrorCode::index_range:
        return SF_ERR_INDEX;
      case sf::ErrorCode::domain:
      case sf::ErrorCode::word:
      case sf::ErrorCode::precondition:
        return SF_ERR_DOMAIN;
      case sf::ErrorCode::resource:
        return SF_ERR_RESOURCE;
    }
    return SF_ERR_INTERNAL;
  }

  template <typename Body>
  sf_status guarded(Body&& body) {
    try {
      last_error.clear();
      return body();
    } catch (InputError const& e) {
      last_error = e.what;
      return SF_ERR_INPUT;
    } catch (sf::Error const& e) {
      last_error = std::string(sf::to_string(e.code())) + ": " + e.what();
      return status_of(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return SF_ERR_RESOURCE;
    } catch (std::exception const& e) {
      last_error = e.what();
      return SF_ERR_INTERNAL;
    } catch (...) {
      last_error = "unknown failure";
      return SF_ERR_INTERNAL;
    }
  }

  template <typename T>
  void need(T const* p, char const* what) {
    if (p == nullptr) {
      throw InputError{std::string("null ") + what};
    }
  }

  char* dup(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  sf::Limits limits_of(sf_limits const* l) {
    sf::Limits out;
    if (l != nullptr) {
      out = {l->max_n, l->max_m, l->max_d, l->max_candidates};
    }
    return out;
  }

  template <typename Reports>
  bool all_passed(Reports const& reports) {
    for (auto const& r : reports) {
      if (!r.passed()) {
        return false;
      }
    }
    return true;
  }

}  // namespace

extern "C" {

void sf_limits_default(sf_limits* out) {
  if (out != nullptr) {
    sf::Limits l;
    *out = {l.max_n, l.max_m, l.max_d, l.max_candidates};
  }
}

const char* sf_last_error(void) {
  return last_error.c_str();
}

const char* sf_status_name(sf_status s) {
  switch (s) {
    case SF_OK:
      return "ok";
    case SF_CHECK_FAILED:
      return "check_failed";
    case SF_ERR_INPUT:
      return "input";
    case SF_ERR_RESOURCE:
      return "resource";
    case SF_ERR_JSON:
      return "json";
    case SF_ERR_DIMENSION:
      return "dimension";
    case SF_ERR_INDEX:
      return "index";
    case SF_ERR_DOMAIN:
      return "domain";
    case SF_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void sf_string_free(char* s) {
  std::free(s);
}

sf_status sf_map_from_json(const char* json, sf_map** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output");
    *out = new sf_map{sf::json::decode_finmap(sf::json::parse(json))};
    return SF_OK;
  });
}

sf_status sf_map_to_json(const sf_map* f, char** out) {
  return guarded([&] {
    need(f, "map");
    need(out, "output");
    *out = dup(sf::json::encode(f->value).dump());
    return SF_OK;
  });
}

void sf_map_free(sf_map* f) {
  delete f;
}

sf_status sf_word_from_json(const char* json, sf_word** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output");
    *out = new sf_word{sf::json::decode_genword(sf::json::parse(json))};
    return SF_OK;
  });
}

sf_status sf_word_to_json(const sf_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "output");
    *out = dup(sf::json::encode(w->value).dump());
    return SF_OK;
  });
}

void sf_word_free(sf_word* w) {
  delete w;
}

sf_status sf_form_from_json(const char* json, sf_form** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output");
    *out = new sf_form{sf::json::decode_form(sf::json::parse(json))};
    return SF_OK;
  });
}

sf_status sf_form_to_json(const sf_form* w, char** out) {
  return guarded([&] {
    need(w, "form");
    need(out, "output");
    *out = dup(sf::json::encode(w->value).dump());
    return SF_OK;
  });
}

void sf_form_free(sf_form* w) {
  delete w;
}

sf_status sf_factor(const sf_map* f, int full, sf_word** out) {
  return guarded([&] {
    need(f, "map");
    need(out, "output");
    *out = new sf_word{full ? sf::factor_map(f->value) : sf::factor_surjection(f->value)};
    return SF_OK;
  });
}

sf_status sf_word_eval(const sf_word* w, sf_map** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "output");
    *out = new sf_map{sf::eval_word(w->value)};
    return SF_OK;
  });
}

sf_status sf_form_check(const sf_form* w, int* is_sector) {
  return guarded([&] {
    need(w, "form");
    need(is_sector, "output");
    *is_sector = sf::is_sector_form(w->value).ok ? 1 : 0;
    return SF_OK;
  });
}

sf_status sf_form_derive(const sf_form* w, size_t position, sf_form** out) {
  return guarded([&] {
    need(w, "form");
    need(out, "output");
    *out = new sf_form{position == 0 ? sf::exterior_derivative(w->value)
                                     : sf::coface(w->value, position)};
    return SF_OK;
  });
}

sf_status sf_form_apply(const sf_form* w, const sf_map* f, sf_form** out) {
  return guarded([&] {
    need(w, "form");
    need(f, "map");
    need(out, "output");
    *out = new sf_form{sf::apply_cardinal_map(w->value, f->value)};
    return SF_OK;
  });
}

sf_status sf_verify_relations(size_t max_n, size_t jobs, char** report) {
  return guarded([&] {
    need(report, "output");
    if (max_n < 2) {
      throw InputError{"max_n must be at least 2"};
    }
    if (max_n > relation_cap) {
      sf::fail(sf::ErrorCode::resource,
               "max_n exceeds the relation sweep cap " + std::to_string(relation_cap));
    }
    auto const reports = sf::check_relations(max_n, jobs == 0 ? 1 : jobs);
    *report            = dup(sf::json::encode(reports).dump());
    return all_passed(reports) ? SF_OK : SF_CHECK_FAILED;
  });
}

sf_status sf_verify_axioms(size_t dim, size_t depth, const sf_limits* limits, char** report) {
  return guarded([&] {
    need(report, "output");
    if (dim == 0) {
      throw InputError{"dim must be positive"};
    }
    sf::Limits const l = limits_of(limits);
    if (dim > l.max_m || depth > l.max_n) {
      sf::fail(sf::ErrorCode::resource, "dim or depth exceeds its cap");
    }
    auto reports = sf::verify_tangent_axioms(dim, depth);
    for (auto& r : sf::verify_differential_object(dim)) {
      reports.push_back(std::move(r));
    }
    *report = dup(sf::json::encode(reports).dump());
    return all_passed(reports) ? SF_OK : SF_CHECK_FAILED;
  });
}

sf_status sf_complex_report(size_t           dim,
                            size_t           deg,
                            size_t           levels,
                            const sf_limits* limits,
                            char**           report) {
  return guarded([&] {
    need(report, "output");
    if (dim == 0) {
      throw InputError{"dim must be positive"};
    }
    auto const r = sf::complex_report(dim, deg, levels, limits_of(limits));
    *report      = dup(sf::json::encode(r).dump());
    return r.complex_verified ? SF_OK : SF_CHECK_FAILED;
  });
}

sf_status sf_sector_basis(size_t           n,
                          size_t           dim,
                          size_t           deg,
                          const sf_limits* limits,
                          char**           report) {
  return guarded([&] {
    need(report, "output");
    if (dim == 0) {
      throw InputError{"dim must be positive"};
    }
    auto const     basis = sf::sector_basis(n, dim, deg, limits_of(limits));
    sf::json::Json j;
    j["n"]         = n;
    j["dim"]       = dim;
    j["deg"]       = deg;
    j["dimension"] = basis.size();
    j["basis"]     = sf::json::Json::array();
    for (auto const& w : basis) {
      j["basis"].push_back(sf::json::encode(w));
    }
    *report = dup(j.dump());
    return SF_OK;
  });
}

}  // extern "C"
