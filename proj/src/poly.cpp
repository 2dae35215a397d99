#include "sectorform/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sectorform/error.hpp"

namespace sf {

  ////////////////////////////////////////////////////////////////////////
  // Poly
  ////////////////////////////////////////////////////////////////////////

  Poly Poly::constant(std::size_t nvars, Rational const& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  Poly Poly::var(std::size_t nvars, std::size_t j) {
    if (j >= nvars) {
      fail(ErrorCode::dimension, "variable index outside the polynomial ring");
    }
    Exponent e(nvars, 0);
    e[j] = 1;
    Poly p(nvars);
    p.add_term(std::move(e), 1);
    return p;
  }

  Poly Poly::monomial(std::size_t nvars, Exponent e, Rational const& c) {
    if (e.size() != nvars) {
      fail(ErrorCode::dimension, "exponent length differs from the variable count");
    }
    Poly p(nvars);
    p.add_term(std::move(e), c);
    return p;
  }

  long Poly::degree() const noexcept {
    long d = -1;
    for (auto const& [e, c] : _terms) {
      long s = 0;
      for (auto k : e) {
        s += k;
      }
      d = std::max(d, s);
    }
    return d;
  }

  void Poly::add_term(Exponent const& e, Rational const& c) {
    add_term(Exponent(e), c);
  }

  void Poly::add_term(Exponent&& e, Rational const& c) {
    if (c == 0) {
      return;
    }
    // callers may hand in mpq values built from an unreduced num/den pair
    Rational k = c;
    k.canonicalize();
    auto [it, inserted] = _terms.try_emplace(std::move(e), std::move(k));
    if (!inserted) {
      it->second += k;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  void Poly::check_same(Poly const& q) const {
    if (_nvars != q._nvars) {
      std::ostringstream os;
      os << "polynomials in " << _nvars << " and " << q._nvars << " variables";
      fail(ErrorCode::dimension, os.str());
    }
  }

  Poly& Poly::operator+=(Poly const& q) {
    check_same(q);
    for (auto const& [e, c] : q._terms) {
      add_term(e, c);
    }
    return *this;
  }

  Poly& Poly::operator-=(Poly const& q) {
    check_same(q);
    for (auto const& [e, c] : q._terms) {
      add_term(e, -c);
    }
    return *this;
  }

  Poly& Poly::operator*=(Rational const& c) {
    if (c == 0) {
      _terms.clear();
    } else {
      Rational k = c;
      k.canonicalize();
      for (auto& [e, a] : _terms) {
        a *= k;
      }
    }
    return *this;
  }

  Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& [e, a] : p._terms) {
      a = -a;
    }
    return p;
  }

  Poly operator*(Poly const& p, Poly const& q) {
    p.check_same(q);
    Poly     r(p.nvars());
    Exponent e(p.nvars());
    for (auto const& [ep, cp] : p.terms()) {
      for (auto const& [eq, cq] : q.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
          e[j] = ep[j] + eq[j];
        }
        r.add_term(e, cp * cq);
      }
    }
    return r;
  }

  Poly Poly::derivative(std::size_t j) const {
    if (j >= _nvars) {
      fail(ErrorCode::dimension, "derivative in a variable outside the ring");
    }
    Poly r(_nvars);
    for (auto const& [e, c] : _terms) {
      if (e[j] == 0) {
        continue;
      }
      Exponent f(e);
      --f[j];
      r.add_term(std::move(f), c * e[j]);
    }
    return r;
  }

  Poly Poly::lift(std::size_t nvars) const {
    if (nvars < _nvars) {
      fail(ErrorCode::dimension, "cannot lift into fewer variables");
    }
    Poly r(nvars);
    for (auto const& [e, c] : _terms) {
      Exponent f(e);
      f.resize(nvars, 0);
      r._terms.emplace_hint(r._terms.end(), std::move(f), c);
    }
    return r;
  }

  std::ostream& operator<<(std::ostream& os, Poly const& p) {
    if (p.is_zero()) {
      return os << "0";
    }
    bool first = true;
    for (auto const& [e, c] : p.terms()) {
      os << (first ? "" : " + ") << c;
      first = false;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 1) {
          os << "*x" << j;
        } else if (e[j] > 1) {
          os << "*x" << j << "^" << e[j];
        }
      }
    }
    return os;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Each value is 0 or c * x_j: substitution only relabels exponents.
    bool all_scaled_vars(std::vector<Poly> const& vals) {
      for (auto const& v : vals) {
        if (v.is_zero()) {
          continue;
        }
        if (v.terms().size() != 1 || v.degree() != 1) {
          return false;
        }
      }
      return true;
    }

    Poly substitute_scaled_vars(Poly const&              p,
                                std::vector<Poly> const& vals,
                                std::size_t              nvars_out) {
      std::vector<std::size_t> target(vals.size(), PolyMap::npos);
      std::vector<Rational>    scale(vals.size());
      for (std::size_t j = 0; j < vals.size(); ++j) {
        if (vals[j].is_zero()) {
          continue;
        }
        auto const& [e, c] = *vals[j].terms().begin();
        for (std::size_t r = 0; r < e.size(); ++r) {
          if (e[r] != 0) {
            target[j] = r;
          }
        }
        scale[j] = c;
      }
      Poly     out(nvars_out);
      Exponent f(nvars_out);
      for (auto const& [e, c] : p.terms()) {
        std::fill(f.begin(), f.end(), 0);
        Rational coeff = c;
        bool     dead  = false;
        for (std::size_t j = 0; j < e.size() && !dead; ++j) {
          if (e[j] == 0) {
            continue;
          }
          if (target[j] == PolyMap::npos) {
            dead = true;
            break;
          }
          f[target[j]] += e[j];
          if (scale[j] != 1) {
            for (std::uint16_t k = 0; k < e[j]; ++k) {
              coeff *= scale[j];
            }
          }
        }
        if (!dead) {
          out.add_term(f, coeff);
        }
      }
      return out;
    }
  }  // namespace

  Poly substitute(Poly const& p, std::vector<Poly> const& vals, std::size_t nvars_out) {
    if (vals.size() != p.nvars()) {
      fail(ErrorCode::dimension, "substitution needs one value per variable");
    }
    for (auto const& v : vals) {
      if (v.nvars() != nvars_out) {
        fail(ErrorCode::dimension, "substituted values live in different rings");
      }
    }
    if (all_scaled_vars(vals)) {
      return substitute_scaled_vars(p, vals, nvars_out);
    }
    // powers[j][k] = vals[j]^k, filled on demand
    std::vector<std::vector<Poly>> powers(vals.size());
    auto power = [&](std::size_t j, std::uint16_t k) -> Poly const& {
      auto& pw = powers[j];
      if (pw.empty()) {
        pw.push_back(Poly::constant(nvars_out, 1));
      }
      while (pw.size() <= k) {
        pw.push_back(pw.back() * vals[j]);
      }
      return pw[k];
    };
    Poly out(nvars_out);
    for (auto const& [e, c] : p.terms()) {
      Poly t = Poly::constant(nvars_out, c);
      for (std::size_t j = 0; j < e.size() && !t.is_zero(); ++j) {
        if (e[j] != 0) {
          t = t * power(j, e[j]);
        }
      }
      out += t;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PolyMap
  ////////////////////////////////////////////////////////////////////////

  PolyMap::PolyMap(std::size_t dom, std::vector<Poly> components)
      : _dom(dom), _comps(std::move(components)) {
    for (auto const& p : _comps) {
      if (p.nvars() != _dom) {
        std::ostringstream os;
        os << "component in " << p.nvars() << " variables for a map out of R^"
           << _dom;
        fail(ErrorCode::dimension, os.str());
      }
    }
  }

  PolyMap PolyMap::identity(std::size_t n) {
    std::vector<Poly> c;
    c.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      c.push_back(Poly::var(n, j));
    }
    return PolyMap(n, std::move(c));
  }

  PolyMap PolyMap::zero(std::size_t a, std::size_t b) {
    return PolyMap(a, std::vector<Poly>(b, Poly(a)));
  }

  PolyMap PolyMap::coordinate(std::size_t dom, std::vector<std::size_t> const& src) {
    std::vector<Poly> c;
    c.reserve(src.size());
    for (auto s : src) {
      c.push_back(s == npos ? Poly(dom) : Poly::var(dom, s));
    }
    return PolyMap(dom, std::move(c));
  }

  void PolyMap::check_same(PolyMap const& g) const {
    if (_dom != g._dom || cod() != g.cod()) {
      fail(ErrorCode::dimension, "polynomial maps of different shapes");
    }
  }

  PolyMap& PolyMap::operator+=(PolyMap const& g) {
    check_same(g);
    for (std::size_t r = 0; r < _comps.size(); ++r) {
      _comps[r] += g._comps[r];
    }
    return *this;
  }

  PolyMap& PolyMap::operator-=(PolyMap const& g) {
    check_same(g);
    for (std::size_t r = 0; r < _comps.size(); ++r) {
      _comps[r] -= g._comps[r];
    }
    return *this;
  }

  PolyMap& PolyMap::operator*=(Rational const& c) {
    for (auto& p : _comps) {
      p *= c;
    }
    return *this;
  }

  PolyMap PolyMap::operator-() const {
    PolyMap f(*this);
    for (auto& p : f._comps) {
      p = -p;
    }
    return f;
  }

  bool PolyMap::is_zero() const noexcept {
    for (auto const& p : _comps) {
      if (!p.is_zero()) {
        return false;
      }
    }
    return true;
  }

  std::ostream& operator<<(std::ostream& os, PolyMap const& f) {
    os << "R^" << f.dom() << " -> R^" << f.cod() << " (";
    for (std::size_t r = 0; r < f.cod(); ++r) {
      os << (r == 0 ? "" : "; ") << f[r];
    }
    return os << ")";
  }

  PolyMap compose(PolyMap const& f, PolyMap const& g) {
    if (f.cod() != g.dom()) {
      std::ostringstream os;
      os << "cannot compose R^" << f.dom() << " -> R^" << f.cod() << " with R^"
         << g.dom() << " -> R^" << g.cod();
      fail(ErrorCode::arity, os.str());
    }
    std::vector<Poly> c;
    c.reserve(g.cod());
    for (auto const& p : g.components()) {
      c.push_back(substitute(p, f.components(), f.dom()));
    }
    return PolyMap(f.dom(), std::move(c));
  }

  PolyMap pairing(PolyMap const& f, PolyMap const& g) {
    if (f.dom() != g.dom()) {
      fail(ErrorCode::dimension, "pairing maps with different domains");
    }
    std::vector<Poly> c(f.components());
    c.insert(c.end(), g.components().begin(), g.components().end());
    return PolyMap(f.dom(), std::move(c));
  }

  PolyMap select(PolyMap const& f, std::vector<std::size_t> const& rows) {
    std::vector<Poly> c;
    c.reserve(rows.size());
    for (auto r : rows) {
      if (r >= f.cod()) {
        fail(ErrorCode::dimension, "selected row outside the codomain");
      }
      c.push_back(f[r]);
    }
    return PolyMap(f.dom(), std::move(c));
  }

}  // namespace sf
