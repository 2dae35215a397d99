// sfcalc: command-line front end over the C interface. JSON results go to
// stdout, or to the --out file; the one-line human summary then goes to
// stdout, and to stderr otherwise so that stdout stays pure JSON.
//
// Exit status: 0 success, 1 a verified property failed, 2 input error,
// 3 resource cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sectorform/sectorform.h"

namespace {

  using Json = nlohmann::ordered_json;

  int exit_code(sf_status s) {
    switch (s) {
      case SF_OK:
        return 0;
      case SF_CHECK_FAILED:
        return 1;
      case SF_ERR_RESOURCE:
        return 3;
      default:
        return 2;
    }
  }

  struct Failure {
    sf_status status;
  };

  // Owns a C string returned by the library.
  struct Text {
    char* p = nullptr;
    ~Text() {
      sf_string_free(p);
    }
    std::string str() const {
      return p ? p : "";
    }
  };

  void check(sf_status s, char const* what) {
    if (s != SF_OK && s != SF_CHECK_FAILED) {
      std::cerr << "sfcalc: " << what << ": " << sf_status_name(s) << " error: "
                << sf_last_error() << "\n";
      throw Failure{s};
    }
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "sfcalc: cannot read " << path << "\n";
      throw Failure{SF_ERR_INPUT};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  struct Output {
    std::string path;

    std::ostream& summary() const {
      return path.empty() ? std::cerr : std::cout;
    }

    void emit(std::string const& json) const {
      if (path.empty()) {
        std::cout << json << "\n";
        return;
      }
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "sfcalc: cannot write " << path << "\n";
        throw Failure{SF_ERR_INPUT};
      }
      out << json << "\n";
    }
  };

  template <typename Handle, typename Free>
  struct Owned {
    Handle* p = nullptr;
    Free    release;
    explicit Owned(Free f) : release(f) {}
    ~Owned() {
      release(p);
    }
  };

  std::size_t count_failures(Json const& reports, std::size_t& checked) {
    std::size_t failures = 0;
    checked              = 0;
    for (auto const& r : reports) {
      checked += r["checked"].get<std::size_t>();
      failures += r["failures"].size();
    }
    return failures;
  }

  std::string list(Json const& arr) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
      os << (i ? ", " : "") << arr[i].get<std::size_t>();
    }
    os << "]";
    return os.str();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-cardinal combinatorics, tangent structure and sector forms"};
  app.require_subcommand(1);

  Output    out;
  sf_limits caps;
  sf_limits_default(&caps);
  app.add_option("--out", out.path, "write the JSON result to this file");
  app.add_option("--max-n-cap", caps.max_n, "cap on form degree / tangent depth")
      ->capture_default_str();
  app.add_option("--max-dim-cap", caps.max_m, "cap on base dimension")->capture_default_str();
  app.add_option("--max-deg-cap", caps.max_d, "cap on coefficient degree")
      ->capture_default_str();
  app.add_option("--max-candidates", caps.max_candidates, "cap on basis ansatz size")
      ->capture_default_str();

  std::size_t max_n = 0, jobs = 1;
  auto*       rel = app.add_subcommand("verify-relations", "check every relation family");
  rel->add_option("--max-n", max_n, "largest level")->required();
  rel->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::size_t dim = 0, depth = 0;
  auto*       ax = app.add_subcommand("verify-axioms", "check the tangent structure");
  ax->add_option("--dim", dim, "base dimension m")->required();
  ax->add_option("--depth", depth, "tangent depth")->required();

  std::string in_path, gens = "full";
  auto*       fac = app.add_subcommand("factor", "factor a map into generators");
  fac->add_option("--in", in_path, "map JSON")->required();
  fac->add_option("--gens", gens, "surj or full")
      ->check(CLI::IsMember({"surj", "full"}))
      ->capture_default_str();

  std::string form_path, map_path;
  auto*       ap = app.add_subcommand("apply", "act on a sector form by a map of cardinals");
  ap->add_option("--form", form_path, "sector form JSON")->required();
  ap->add_option("--map", map_path, "map JSON")->required();

  std::size_t position = 0;
  auto*       der      = app.add_subcommand("derive", "exterior derivative or a coface");
  der->add_option("--form", form_path, "sector form JSON")->required();
  der->add_option("--position", position, "coface position (omit for the full derivative)");

  std::size_t deg = 0, levels = 0;
  auto*       dr = app.add_subcommand("derham", "degree-bounded sector cohomology");
  dr->add_option("--dim", dim, "base dimension m")->required();
  dr->add_option("--deg", deg, "coefficient degree bound")->required();
  dr->add_option("--levels", levels, "top form degree")->required();

  std::size_t n = 0;
  auto*       sb = app.add_subcommand("sector-basis", "basis of degree-bounded sector forms");
  sb->add_option("--n", n, "form degree")->required();
  sb->add_option("--dim", dim, "base dimension m")->required();
  sb->add_option("--deg", deg, "coefficient degree bound")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sf_status status = SF_OK;
    Text      text;

    if (rel->parsed()) {
      status = sf_verify_relations(max_n, jobs, &text.p);
      check(status, "verify-relations");
      Json const  r        = Json::parse(text.str());
      std::size_t checked  = 0;
      std::size_t failures = count_failures(r, checked);
      out.emit(text.str());
      out.summary() << "verify-relations: " << r.size() << " families, " << checked
                << " instances, " << failures << " failures\n";
    } else if (ax->parsed()) {
      status = sf_verify_axioms(dim, depth, &caps, &text.p);
      check(status, "verify-axioms");
      Json const  r        = Json::parse(text.str());
      std::size_t checked  = 0;
      std::size_t failures = count_failures(r, checked);
      out.emit(text.str());
      out.summary() << "verify-axioms: " << r.size() << " families, " << checked
                << " equations, " << failures << " failures\n";
    } else if (fac->parsed()) {
      Owned<sf_map, void (*)(sf_map*)>   f(sf_map_free);
      Owned<sf_word, void (*)(sf_word*)> w(sf_word_free);
      check(sf_map_from_json(read_file(in_path).c_str(), &f.p), "reading map");
      check(sf_factor(f.p, gens == "full", &w.p), "factor");
      check(sf_word_to_json(w.p, &text.p), "factor");
      out.emit(text.str());
      out.summary() << "factor: " << Json::parse(text.str())["gens"].size() << " generators\n";
    } else if (ap->parsed()) {
      Owned<sf_form, void (*)(sf_form*)> w(sf_form_free), r(sf_form_free);
      Owned<sf_map, void (*)(sf_map*)>   f(sf_map_free);
      check(sf_form_from_json(read_file(form_path).c_str(), &w.p), "reading form");
      check(sf_map_from_json(read_file(map_path).c_str(), &f.p), "reading map");
      check(sf_form_apply(w.p, f.p, &r.p), "apply");
      check(sf_form_to_json(r.p, &text.p), "apply");
      out.emit(text.str());
      out.summary() << "apply: " << Json::parse(text.str())["n"].get<std::size_t>()
                << "-form\n";
    } else if (der->parsed()) {
      Owned<sf_form, void (*)(sf_form*)> w(sf_form_free), r(sf_form_free);
      check(sf_form_from_json(read_file(form_path).c_str(), &w.p), "reading form");
      check(sf_form_derive(w.p, position, &r.p), "derive");
      check(sf_form_to_json(r.p, &text.p), "derive");
      out.emit(text.str());
      Json const j    = Json::parse(text.str());
      bool       zero = true;
      for (auto const& c : j["body"]["components"]) {
        zero = zero && c["terms"].empty();
      }
      out.summary() << "derive: " << j["n"].get<std::size_t>() << "-form"
                << (zero ? " (zero)" : "") << "\n";
    } else if (dr->parsed()) {
      status = sf_complex_report(dim, deg, levels, &caps, &text.p);
      check(status, "derham");
      Json const j = Json::parse(text.str());
      out.emit(text.str());
      out.summary() << "derham: H = " << list(j["H"]) << ", singular H = "
                << list(j["singular_H"]) << ", complex "
                << (j["complex_verified"].get<bool>() ? "verified" : "NOT verified") << "\n";
    } else if (sb->parsed()) {
      status = sf_sector_basis(n, dim, deg, &caps, &text.p);
      check(status, "sector-basis");
      out.emit(text.str());
      out.summary() << "sector-basis: dimension "
                << Json::parse(text.str())["dimension"].get<std::size_t>() << "\n";
    }
    return exit_code(status);
  } catch (Failure const& f) {
    return exit_code(f.status);
  }
}
