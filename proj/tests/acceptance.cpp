// Acceptance run: one PASS/FAIL line per criterion. All equalities are exact
// (rational arithmetic, tolerance zero); the only numeric limits are the
// wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sectorform/fincard.hpp"
#include "sectorform/sector.hpp"
#include "sectorform/tangent.hpp"

using namespace sf;

namespace {

  constexpr double relations_budget_s  = 5.0;
  constexpr double roundtrip_budget_s  = 30.0;
  constexpr double axioms_budget_s     = 10.0;
  constexpr double complex_budget_s    = 60.0;
  constexpr double cohomology_budget_s = 60.0;

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  int failed = 0;

  void criterion(char const* id, double budget_s, std::function<Outcome()> const& body) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool const   in_time = budget_s <= 0 || s < budget_s;
    bool const   pass    = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %-26s %s; %.2f s", pass ? "PASS" : "FAIL", id, o.detail.c_str(), s);
    if (budget_s > 0) {
      std::printf(" (limit %.0f s)", budget_s);
    }
    std::printf("\n");
    std::fflush(stdout);
  }

  Poly var(std::size_t nv, std::size_t j) {
    return Poly::var(nv, j);
  }

  SectorForm on_r(std::size_t n, Poly body) {
    std::size_t const nv = body.nvars();
    return SectorForm(n, 1, 1, PolyMap(nv, {std::move(body)}));
  }

  // permutation of coordinates given as the list of source indices
  PolyMap perm(std::vector<std::size_t> const& src) {
    return PolyMap::coordinate(src.size(), src);
  }

}  // namespace

int main() {
  criterion("presentation-relations", relations_budget_s, [] {
    auto const  reports  = check_relations(8);
    std::size_t checked  = 0;
    std::size_t failures = 0;
    bool        covered  = reports.size() == 10;
    for (auto const& r : reports) {
      checked += r.checked;
      failures += r.failures.size();
      covered = covered && r.checked > 0;
    }
    std::ostringstream os;
    os << reports.size() << " families, " << checked << " instances at n <= 8, " << failures
       << " failures";
    return Outcome{covered && failures == 0, os.str()};
  });

  criterion("factorization-round-trips", roundtrip_budget_s, [] {
    std::size_t surj = 0, maps = 0, bad = 0;
    for (std::size_t a = 0; a <= 6; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        for (auto const& f : all_surjections(a, b)) {
          auto const w = factor_surjection(f);
          bool       ok = eval_word(w) == f;
          for (auto const& g : w.gens()) {
            ok = ok && g.kind != GenKind::delta;
          }
          bad += ok ? 0 : 1;
          ++surj;
        }
      }
    }
    for (std::size_t a = 0; a <= 5; ++a) {
      for (std::size_t b = 0; b <= 5; ++b) {
        for (auto const& f : all_maps(a, b)) {
          bad += eval_word(factor_map(f)) == f ? 0 : 1;
          ++maps;
        }
      }
    }
    std::ostringstream os;
    os << surj << " surjections (dom <= 6), " << maps << " maps (dom, cod <= 5), " << bad
       << " failures";
    return Outcome{bad == 0, os.str()};
  });

  criterion("tangent-axioms", axioms_budget_s, [] {
    std::size_t checked = 0, failures = 0;
    for (std::size_t m = 1; m <= 2; ++m) {
      for (auto const& r : verify_tangent_axioms(m, 3)) {
        checked += r.checked;
        failures += r.failures.size();
      }
    }
    for (std::size_t k = 1; k <= 2; ++k) {
      for (auto const& r : verify_differential_object(k)) {
        checked += r.checked;
        failures += r.failures.size();
      }
    }
    std::ostringstream os;
    os << checked << " equations at m, k <= 2, depth 3, " << failures << " failures";
    return Outcome{checked > 0 && failures == 0, os.str()};
  });

  criterion("coordinate-tuples", 0, [] {
    constexpr auto npos = PolyMap::npos;
    // <x,v> -> <x,0,0,v>
    bool const ell = structural(Structural::ell, 1) == PolyMap::coordinate(2, {0, npos, npos, 1});
    // <x,v1,v2,d> -> <x,v2,v1,d>
    bool const c = structural(Structural::flip, 1) == perm({0, 2, 1, 3});
    // <x,v1,v2,d1,v3,d2,d3,t> -> <x,v1,v3,d2,v2,d1,d3,t>
    bool const cT = whisker(Whisker::c_i, 1, 3, 1) == perm({0, 1, 4, 5, 2, 3, 6, 7});
    // <x,v1,v2,d1,v3,d2,d3,t> -> <x,v2,v1,d1,v3,d3,d2,t>
    bool const Tc = whisker(Whisker::c_i, 1, 3, 2) == perm({0, 2, 1, 3, 4, 6, 5, 7});
    std::ostringstream os;
    os << "ell " << (ell ? "ok" : "MISMATCH") << ", c " << (c ? "ok" : "MISMATCH") << ", cT "
       << (cT ? "ok" : "MISMATCH") << ", Tc " << (Tc ? "ok" : "MISMATCH");
    return Outcome{ell && c && cT && Tc, os.str()};
  });

  criterion("worked-derivatives", 0, [] {
    std::mt19937_64 rng(0xacce);
    std::size_t     bad = 0, cases = 0;
    enum : std::size_t { X, V1, V2, D1, V3, D2, D3, T };
    for (int trial = 0; trial < 20; ++trial) {
      auto const f = oracle::random_poly(rng, 1, 5, 4);
      auto const g = oracle::random_poly(rng, 1, 5, 4);
      auto const h = oracle::random_poly(rng, 1, 5, 4);
      // delta_1 (f v) = f' v1 v2 + f d
      auto const w1 = on_r(1, f.lift(2) * var(2, 1));
      auto const e1
          = on_r(2, f.derivative(0).lift(4) * var(4, V1) * var(4, V2) + f.lift(4) * var(4, 3));
      bad += fundamental_derivative(w1) == e1 ? 0 : 1;
      bad += exterior_derivative(w1).is_zero() ? 0 : 1;
      // d (g v1 v2 + h d) = g' v1 v2 v3 + h' v3 d1 + (2g - h') v2 d2 + h' v1 d3 + h t
      auto const w2 = on_r(2, g.lift(4) * var(4, 1) * var(4, 2) + h.lift(4) * var(4, 3));
      auto const G = g.lift(8), Gp = g.derivative(0).lift(8), H = h.lift(8),
                 Hp = h.derivative(0).lift(8);
      auto const e2 = on_r(3, Gp * var(8, V1) * var(8, V2) * var(8, V3) + Hp * var(8, V3) * var(8, D1)
                                  + (Rational(2) * G - Hp) * var(8, V2) * var(8, D2)
                                  + Hp * var(8, V1) * var(8, D3) + H * var(8, T));
      bad += exterior_derivative(w2) == e2 ? 0 : 1;
      cases += 3;
    }
    // every 1-form: it suffices to check a basis, the derivative being linear
    std::size_t basis_forms = 0;
    for (auto const& w : sector_basis(1, 1, 8)) {
      bad += exterior_derivative(w).is_zero() ? 0 : 1;
      ++basis_forms;
    }
    std::ostringstream os;
    os << cases << " random instances + " << basis_forms << " basis 1-forms, " << bad
       << " mismatches";
    return Outcome{bad == 0, os.str()};
  });

  criterion("complex-property", complex_budget_s, [] {
    std::mt19937_64 rng(0xdd0);
    std::size_t     bad = 0, total = 0;
    for (std::size_t m = 1; m <= 2; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        auto const basis = sector_basis(n, m, 3);
        // 100 forms in all: 17 per (m, n) pair, 15 for the last
        int const count = (m == 2 && n == 2) ? 15 : 17;
        for (int k = 0; k < count; ++k) {
          auto const w = oracle::random_combination(rng, basis, SectorForm::zero(n, m));
          bad += exterior_derivative(exterior_derivative(w)).is_zero() ? 0 : 1;
          ++total;
        }
      }
    }
    std::ostringstream os;
    os << total << " random forms (degree <= 2, R and R^2, coefficient degree <= 3), " << bad
       << " nonzero dd";
    return Outcome{bad == 0 && total == 100, os.str()};
  });

  criterion("cosimplicial-functoriality", 0, [] {
    std::mt19937_64                             rng(0xf00);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    std::size_t                                 bad = 0;
    std::vector<std::vector<SectorForm>>        bases;
    for (std::size_t n = 0; n <= 4; ++n) {
      bases.push_back(sector_basis(n, 1, 1));
    }
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t const a = size(rng), b = size(rng), c = size(rng);
      auto const        f = oracle::random_map_of(rng, a, b);
      auto const        g = oracle::random_map_of(rng, b, c);
      auto const        w = oracle::random_combination(rng, bases[a], SectorForm::zero(a, 1));
      bad += apply_cardinal_map(w, compose(f, g)) == apply_cardinal_map(apply_cardinal_map(w, f), g)
                 ? 0
                 : 1;
      bad += apply_word(w, oracle::alternative_word(rng, f)) == apply_cardinal_map(w, f) ? 0 : 1;
    }
    std::ostringstream os;
    os << "100 random pairs at sizes <= 4, composition and alternative factorization, " << bad
       << " mismatches";
    return Outcome{bad == 0, os.str()};
  });

  criterion("cohomology-of-R", cohomology_budget_s, [] {
    auto const r  = complex_report(1, 4, 2);
    bool const ok = r.complex_verified && r.sector.H == std::vector<std::size_t>{1, 0, 0}
                    && r.sector.kernels.size() == 3 && r.sector.kernels[2] == 0
                    && r.singular.dims.size() == 3 && r.singular.dims[2] == 0;
    std::ostringstream os;
    os << "H = [" << r.sector.H[0] << ", " << r.sector.H[1] << ", " << r.sector.H[2]
       << "], ker d2 = " << r.sector.kernels[2] << ", singular 2-forms = " << r.singular.dims[2]
       << ", complex " << (r.complex_verified ? "verified" : "NOT verified");
    return Outcome{ok, os.str()};
  });

  criterion("basis-dimensions", 0, [] {
    std::ostringstream os;
    bool               ok = true;
    os << "d = 0..4: n=1";
    for (std::size_t d = 0; d <= 4; ++d) {
      auto const k = sector_basis(1, 1, d).size();
      ok           = ok && k == d + 1;
      os << " " << k;
    }
    os << "; n=2";
    for (std::size_t d = 0; d <= 4; ++d) {
      auto const k = sector_basis(2, 1, d).size();
      ok           = ok && k == 2 * (d + 1);
      os << " " << k;
    }
    return Outcome{ok, os.str()};
  });

  std::printf("%s\n", failed == 0 ? "all criteria passed" : "some criteria FAILED");
  return failed == 0 ? 0 : 1;
}
