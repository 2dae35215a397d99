#pragma once

// Sector forms T^n R^m -> R^k and the symmetric cosimplicial operators on
// them: cofaces (derivatives in a position), codegeneracies, symmetries,
// the action of arbitrary maps of finite cardinals, the exterior derivative
// and degree-bounded cohomology.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sectorform/fincard.hpp"
#include "sectorform/poly.hpp"

namespace sf {

  class SectorForm {
   public:
    // body : R^(m * 2^n) -> R^k; throws ErrorCode::dimension otherwise.
    // Construction does not check the linearity conditions.
    SectorForm(std::size_t n, std::size_t m, std::size_t k, PolyMap body);

    static SectorForm zero(std::size_t n, std::size_t m, std::size_t k = 1);

    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t m() const noexcept {
      return _m;
    }
    std::size_t k() const noexcept {
      return _k;
    }
    PolyMap const& body() const noexcept {
      return _body;
    }

    SectorForm& operator+=(SectorForm const& w);
    SectorForm& operator-=(SectorForm const& w);
    SectorForm& operator*=(Rational const& c);
    SectorForm  operator-() const;
    friend SectorForm operator+(SectorForm a, SectorForm const& b) {
      return a += b;
    }
    friend SectorForm operator-(SectorForm a, SectorForm const& b) {
      return a -= b;
    }
    friend SectorForm operator*(Rational const& c, SectorForm a) {
      return a *= c;
    }

    bool is_zero() const noexcept {
      return _body.is_zero();
    }

    bool operator==(SectorForm const&) const = default;

   private:
    void check_same(SectorForm const& w) const;

    std::size_t _n;
    std::size_t _m;
    std::size_t _k;
    PolyMap     _body;
  };

  std::ostream& operator<<(std::ostream&, SectorForm const&);

  struct SectorCheck {
    bool              ok = true;
    std::vector<bool> linear_in;  // linear_in[i-1]: the equation at index i
  };

  // a^n_i ; T(w) = w ; lambda for each i in 1..n.
  SectorCheck is_sector_form(SectorForm const& w);

  // Every operator below except is_alternating throws ErrorCode::precondition
  // when its input is not a sector form.

  // T(w) ; p_hat.
  SectorForm fundamental_derivative(SectorForm const& w);
  // c^(n+1)_(i) ; T(w) ; p_hat, 1 <= i <= n+1.
  SectorForm coface(SectorForm const& w, std::size_t i);
  // ell^(n-1)_i ; w for w of degree n, 1 <= i <= n-1.
  SectorForm codegeneracy(SectorForm const& w, std::size_t i);
  // c^n_i ; w, 1 <= i <= n-1.
  SectorForm symmetry(SectorForm const& w, std::size_t i);

  // The action of a map f : n -> n' of finite cardinals, through the
  // factorization into epsilon, sigma and delta_1.
  SectorForm apply_cardinal_map(SectorForm const& w, FinMap const& f);
  // The action of an explicit word; delta_i acts as coface(., i).
  SectorForm apply_word(SectorForm const& w, GenWord const& word);

  // sum_{i=1}^{n+1} (-1)^(i-1) coface(w, i).
  SectorForm exterior_derivative(SectorForm const& w);

  // symmetry(w, i) = -w for every i in 1..n-1.
  bool is_alternating(SectorForm const& w);

  // T^n(phi) ; w for phi : R^m' -> R^m.
  SectorForm pullback(SectorForm const& w, PolyMap const& phi);

  // Caps against combinatorial blow-up; exceeding one is ErrorCode::resource.
  struct Limits {
    std::size_t max_n          = 4;
    std::size_t max_m          = 4;
    std::size_t max_d          = 12;
    std::size_t max_candidates = 60000;
  };

  // Basis of the real-valued sector n-forms on R^m whose base-point
  // dependence has degree at most d, in reduced echelon form over monomials.
  // Candidates are x^a * (one tangent coordinate per block of a set partition
  // of the levels), deg a <= d; every sector form is a combination of these,
  // and the linearity equations cut them down exactly.
  std::vector<SectorForm> sector_basis(std::size_t   n,
                                       std::size_t   m,
                                       std::size_t   d,
                                       Limits const& limits = {});

  struct ComplexRanks {
    std::vector<std::size_t> dims;     // dim V_n(d)
    std::vector<std::size_t> ranks;    // rank of the derivative on V_n(d)
    std::vector<std::size_t> kernels;  // dim ker
    std::vector<std::size_t> images;   // dim of d(V_{n-1}(d+1)) inside V_n(d)
    std::vector<std::size_t> H;        // kernels[n] - images[n]
  };

  // V_n(d) is the span of sector_basis(n, m, d); the image at level n is
  // taken from level n-1 with bound d+1 so that truncation does not create
  // cohomology at the top of the filtration. `singular` is the same
  // computation on the alternating forms.
  struct ComplexReport {
    std::size_t  m;
    std::size_t  d;
    std::size_t  n_max;
    ComplexRanks sector;
    ComplexRanks singular;
    // The matrices of the derivative in the bases of V_n(d) compose to zero.
    bool complex_verified;
  };

  ComplexReport complex_report(std::size_t   m,
                               std::size_t   d,
                               std::size_t   n_max,
                               Limits const& limits = {});

}  // namespace sf
