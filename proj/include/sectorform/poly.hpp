#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and
// componentwise polynomial maps R^a -> R^b.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sf {

  using Rational = mpq_class;
  using Exponent = std::vector<std::uint16_t>;

  class Poly {
   public:
    using Terms = std::map<Exponent, Rational>;

    explicit Poly(std::size_t nvars = 0) : _nvars(nvars) {}

    static Poly constant(std::size_t nvars, Rational const& c);
    // x_j, 0-based.
    static Poly var(std::size_t nvars, std::size_t j);
    static Poly monomial(std::size_t nvars, Exponent e, Rational const& c);

    std::size_t nvars() const noexcept {
      return _nvars;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    // Total degree; -1 for the zero polynomial.
    long degree() const noexcept;

    // Adds c * x^e, dropping the term if the coefficient cancels.
    void add_term(Exponent const& e, Rational const& c);
    void add_term(Exponent&& e, Rational const& c);

    Poly& operator+=(Poly const& q);
    Poly& operator-=(Poly const& q);
    Poly& operator*=(Rational const& c);

    Poly operator-() const;
    friend Poly operator+(Poly p, Poly const& q) {
      return p += q;
    }
    friend Poly operator-(Poly p, Poly const& q) {
      return p -= q;
    }
    friend Poly operator*(Poly p, Rational const& c) {
      return p *= c;
    }
    friend Poly operator*(Rational const& c, Poly p) {
      return p *= c;
    }
    friend Poly operator*(Poly const& p, Poly const& q);

    // Formal partial derivative in x_j.
    Poly derivative(std::size_t j) const;

    // The same polynomial viewed in `nvars` >= nvars() variables, the new
    // ones appended after the existing ones.
    Poly lift(std::size_t nvars) const;

    bool operator==(Poly const& q) const {
      return _nvars == q._nvars && _terms == q._terms;
    }

   private:
    void check_same(Poly const& q) const;

    std::size_t _nvars;
    Terms       _terms;
  };

  std::ostream& operator<<(std::ostream&, Poly const&);

  // p(vals[0], ..., vals[nvars-1]); every value lives in `nvars_out` variables.
  Poly substitute(Poly const& p, std::vector<Poly> const& vals, std::size_t nvars_out);

  class PolyMap {
   public:
    PolyMap() = default;
    // Throws ErrorCode::dimension if a component has the wrong variable count.
    PolyMap(std::size_t dom, std::vector<Poly> components);

    static PolyMap identity(std::size_t n);
    // The constant zero map a -> b.
    static PolyMap zero(std::size_t a, std::size_t b);
    // Linear map sending output coordinate r to input coordinate src[r], or
    // to 0 where src[r] is npos.
    static PolyMap coordinate(std::size_t dom, std::vector<std::size_t> const& src);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t dom() const noexcept {
      return _dom;
    }
    std::size_t cod() const noexcept {
      return _comps.size();
    }
    std::vector<Poly> const& components() const noexcept {
      return _comps;
    }
    Poly const& operator[](std::size_t r) const {
      return _comps[r];
    }

    PolyMap& operator+=(PolyMap const& g);
    PolyMap& operator-=(PolyMap const& g);
    PolyMap& operator*=(Rational const& c);
    PolyMap  operator-() const;
    friend PolyMap operator+(PolyMap f, PolyMap const& g) {
      return f += g;
    }
    friend PolyMap operator-(PolyMap f, PolyMap const& g) {
      return f -= g;
    }
    friend PolyMap operator*(Rational const& c, PolyMap f) {
      return f *= c;
    }

    bool is_zero() const noexcept;

    bool operator==(PolyMap const&) const = default;

   private:
    void check_same(PolyMap const& g) const;

    std::size_t       _dom = 0;
    std::vector<Poly> _comps;
  };

  std::ostream& operator<<(std::ostream&, PolyMap const&);

  // Diagrammatic composite f;g (apply f first).
  PolyMap compose(PolyMap const& f, PolyMap const& g);

  // <f, g>: X -> A x B.
  PolyMap pairing(PolyMap const& f, PolyMap const& g);

  // Output coordinates `rows` of f, in that order.
  PolyMap select(PolyMap const& f, std::vector<std::size_t> const& rows);

}  // namespace sf
