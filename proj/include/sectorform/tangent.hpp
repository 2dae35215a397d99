#pragma once

// The tangent structure on Cartesian spaces with polynomial maps.
//
// Coordinate layout: T^n R^m = R^(m * 2^n). The coordinate (j, S), with
// 0 <= j < m and S a subset of the levels {1, ..., n} encoded as the bitmask
// whose bit k-1 is level k, sits at flat index mask * m + j. Level n is the
// outermost T, so the first half of T^n R^m is T^(n-1) R^m (the base point)
// and the second half is its tangent vector. For m = 1, n = 3 the order is
//   x, v1, v2, d1, v3, d2, d3, t.
//
// T2 R^m (the fibre product of two tangent vectors over one base point) is
// laid out as (x, u, w), three blocks of m.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sectorform/fincard.hpp"
#include "sectorform/poly.hpp"

namespace sf {

  // m * 2^n, guarded against overflow.
  std::size_t tangent_dim(std::size_t m, std::size_t n);
  std::size_t coord_index(std::size_t m, std::size_t j, std::size_t mask);

  // Tf(x, v) = (f(x), Jf(x) v).
  PolyMap tangent_of_map(PolyMap const& f);
  PolyMap iterate_tangent(PolyMap const& f, std::size_t n);

  // T2 f(x, u, w) = (f(x), Jf(x) u, Jf(x) w).
  PolyMap tangent2_of_map(PolyMap const& f);

  enum class Structural {
    ell,   // T -> T^2,  (x, v) |-> (x, 0, 0, v)
    flip,  // T^2 -> T^2, (x, v1, v2, d) |-> (x, v2, v1, d)
    proj,  // T -> 1, (x, v) |-> x
    zero,  // 1 -> T, x |-> (x, 0)
    add    // T2 -> T, (x, u, w) |-> (x, u + w)
  };

  char const* to_string(Structural);

  PolyMap structural(Structural kind, std::size_t m);

  enum class Whisker {
    ell_i,      // T^(i-1) ell T^(n-i) : T^n -> T^(n+1), 1 <= i <= n
    c_i,        // T^(i-1) c T^(n-i-1) : T^n -> T^n, 1 <= i <= n-1
    c_cycle_i,  // c_(i) = c_(i-1) ; ... ; c_1 : T^n -> T^n, 1 <= i <= n
    a_i         // ell^n_i ; c^(n+1)_(i) : T^n -> T^(n+1), 1 <= i <= n
  };

  char const* to_string(Whisker);

  // Component at R^m; results are cached and shared between threads.
  PolyMap const& whisker(Whisker kind, std::size_t m, std::size_t n, std::size_t i);

  // Differential-object structure on R^k; tangent vectors are written with
  // the base point first, so lambda(x) = (0, x) and p_hat(b, t) = t.
  PolyMap lambda_lift(std::size_t k);
  PolyMap principal_projection(std::size_t k);

  // v = <pi1 ; ell, pi2 ; 0_T> ; T(+) : T2 R^m -> T^2 R^m.
  PolyMap vertical_universal(std::size_t m);

  // The symmetric degenerative object: a word in epsilon / sigma from a to b
  // is realized contravariantly as a map T^b R^m -> T^a R^m, sending
  // epsilon^n_i to ell^n_i and sigma^n_i to c^n_i.
  PolyMap realize_word(GenWord const& w, std::size_t m);
  PolyMap realize_surjection(FinMap const& u, std::size_t m);

  struct AxiomFailure {
    std::string name;
    std::string detail;
  };

  struct AxiomReport {
    std::string               family;
    std::size_t               depth = 0;
    std::size_t               checked = 0;
    std::vector<AxiomFailure> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  // Overrides for the structural maps, so that a deliberately broken model
  // can be fed through the same checks.
  struct TangentModel {
    std::function<PolyMap(Structural, std::size_t)> structural
        = [](Structural s, std::size_t m) { return sf::structural(s, m); };
  };

  // Every equation is checked as an exact equality, both at the objects
  // T^j R^m and after applying T^j to both sides, for 0 <= j <= depth.
  // Naturality squares use a fixed seeded panel of polynomial maps and are
  // checked at the objects only.
  std::vector<AxiomReport> verify_tangent_axioms(std::size_t         m,
                                                 std::size_t         depth,
                                                 TangentModel const& model = {});

  // Differential-object identities on R^k.
  std::vector<AxiomReport> verify_differential_object(std::size_t k);

}  // namespace sf
