#include "sectorform/sector.hpp"

#include <ostream>
#include <sstream>
#include <tuple>

#include "sectorform/error.hpp"
#include "sectorform/linalg.hpp"
#include "sectorform/tangent.hpp"

namespace sf {

  ////////////////////////////////////////////////////////////////////////
  // SectorForm
  ////////////////////////////////////////////////////////////////////////

  SectorForm::SectorForm(std::size_t n, std::size_t m, std::size_t k, PolyMap body)
      : _n(n), _m(m), _k(k), _body(std::move(body)) {
    if (_body.dom() != tangent_dim(m, n) || _body.cod() != k) {
      std::ostringstream os;
      os << "a " << n << "-form on R^" << m << " with values in R^" << k
         << " needs a body R^" << tangent_dim(m, n) << " -> R^" << k << ", got R^"
         << _body.dom() << " -> R^" << _body.cod();
      fail(ErrorCode::dimension, os.str());
    }
  }

  SectorForm SectorForm::zero(std::size_t n, std::size_t m, std::size_t k) {
    return SectorForm(n, m, k, PolyMap::zero(tangent_dim(m, n), k));
  }

  void SectorForm::check_same(SectorForm const& w) const {
    if (_n != w._n || _m != w._m || _k != w._k) {
      fail(ErrorCode::dimension, "forms of different shapes");
    }
  }

  SectorForm& SectorForm::operator+=(SectorForm const& w) {
    check_same(w);
    _body += w._body;
    return *this;
  }

  SectorForm& SectorForm::operator-=(SectorForm const& w) {
    check_same(w);
    _body -= w._body;
    return *this;
  }

  SectorForm& SectorForm::operator*=(Rational const& c) {
    _body *= c;
    return *this;
  }

  SectorForm SectorForm::operator-() const {
    return SectorForm(_n, _m, _k, -_body);
  }

  std::ostream& operator<<(std::ostream& os, SectorForm const& w) {
    return os << w.n() << "-form on R^" << w.m() << ": " << w.body();
  }

  ////////////////////////////////////////////////////////////////////////
  // Linearity and the operators
  ////////////////////////////////////////////////////////////////////////

  SectorCheck is_sector_form(SectorForm const& w) {
    SectorCheck   out;
    PolyMap const Tw  = tangent_of_map(w.body());
    PolyMap const rhs = compose(w.body(), lambda_lift(w.k()));
    for (std::size_t i = 1; i <= w.n(); ++i) {
      bool const ok = compose(whisker(Whisker::a_i, w.m(), w.n(), i), Tw) == rhs;
      out.linear_in.push_back(ok);
      out.ok = out.ok && ok;
    }
    return out;
  }

  namespace {
    void require_sector(SectorForm const& w, char const* op) {
      auto const check = is_sector_form(w);
      if (!check.ok) {
        std::ostringstream os;
        os << op << ": input is not a sector form (fails linearity at index";
        for (std::size_t i = 0; i < check.linear_in.size(); ++i) {
          if (!check.linear_in[i]) {
            os << " " << i + 1;
          }
        }
        os << ")";
        fail(ErrorCode::precondition, os.str());
      }
    }

    void require_index(bool ok, char const* op, std::size_t i, std::size_t n) {
      if (!ok) {
        std::ostringstream os;
        os << op << ": index " << i << " out of range for a " << n << "-form";
        fail(ErrorCode::index_range, os.str());
      }
    }

    SectorForm raw_fundamental(SectorForm const& w) {
      return SectorForm(w.n() + 1,
                        w.m(),
                        w.k(),
                        compose(tangent_of_map(w.body()), principal_projection(w.k())));
    }

    SectorForm raw_coface(SectorForm const& w, std::size_t i) {
      SectorForm d = raw_fundamental(w);
      if (i == 1) {
        return d;
      }
      return SectorForm(d.n(),
                        d.m(),
                        d.k(),
                        compose(whisker(Whisker::c_cycle_i, w.m(), w.n() + 1, i), d.body()));
    }

    SectorForm raw_codegeneracy(SectorForm const& w, std::size_t i) {
      return SectorForm(w.n() - 1,
                        w.m(),
                        w.k(),
                        compose(whisker(Whisker::ell_i, w.m(), w.n() - 1, i), w.body()));
    }

    SectorForm raw_symmetry(SectorForm const& w, std::size_t i) {
      return SectorForm(
          w.n(), w.m(), w.k(), compose(whisker(Whisker::c_i, w.m(), w.n(), i), w.body()));
    }

    SectorForm raw_exterior(SectorForm const& w) {
      SectorForm out = SectorForm::zero(w.n() + 1, w.m(), w.k());
      for (std::size_t i = 1; i <= w.n() + 1; ++i) {
        if (i % 2 == 1) {
          out += raw_coface(w, i);
        } else {
          out -= raw_coface(w, i);
        }
      }
      return out;
    }

    SectorForm raw_apply_word(SectorForm w, GenWord const& word) {
      for (auto const& g : word.gens()) {
        switch (g.kind) {
          case GenKind::epsilon:
            w = raw_codegeneracy(w, g.i);
            break;
          case GenKind::delta:
            w = raw_coface(w, g.i);
            break;
          case GenKind::sigma:
            w = raw_symmetry(w, g.i);
            break;
        }
      }
      return w;
    }
  }  // namespace

  SectorForm fundamental_derivative(SectorForm const& w) {
    require_sector(w, "fundamental_derivative");
    return raw_fundamental(w);
  }

  SectorForm coface(SectorForm const& w, std::size_t i) {
    require_index(1 <= i && i <= w.n() + 1, "coface", i, w.n());
    require_sector(w, "coface");
    return raw_coface(w, i);
  }

  SectorForm codegeneracy(SectorForm const& w, std::size_t i) {
    require_index(1 <= i && i + 1 <= w.n(), "codegeneracy", i, w.n());
    require_sector(w, "codegeneracy");
    return raw_codegeneracy(w, i);
  }

  SectorForm symmetry(SectorForm const& w, std::size_t i) {
    require_index(1 <= i && i + 1 <= w.n(), "symmetry", i, w.n());
    require_sector(w, "symmetry");
    return raw_symmetry(w, i);
  }

  SectorForm apply_word(SectorForm const& w, GenWord const& word) {
    if (word.dom() != w.n()) {
      std::ostringstream os;
      os << "word out of " << word.dom() << " applied to a " << w.n() << "-form";
      fail(ErrorCode::arity, os.str());
    }
    require_sector(w, "apply_word");
    return raw_apply_word(w, word);
  }

  SectorForm apply_cardinal_map(SectorForm const& w, FinMap const& f) {
    if (f.dom() != w.n()) {
      std::ostringstream os;
      os << "map out of " << f.dom() << " applied to a " << w.n() << "-form";
      fail(ErrorCode::arity, os.str());
    }
    require_sector(w, "apply_cardinal_map");
    return raw_apply_word(w, factor_map(f));
  }

  SectorForm exterior_derivative(SectorForm const& w) {
    require_sector(w, "exterior_derivative");
    return raw_exterior(w);
  }

  bool is_alternating(SectorForm const& w) {
    SectorForm const neg = -w;
    for (std::size_t i = 1; i + 1 <= w.n(); ++i) {
      if (!(raw_symmetry(w, i) == neg)) {
        return false;
      }
    }
    return true;
  }

  SectorForm pullback(SectorForm const& w, PolyMap const& phi) {
    if (phi.cod() != w.m()) {
      std::ostringstream os;
      os << "pullback along R^" << phi.dom() << " -> R^" << phi.cod() << " of a form on R^"
         << w.m();
      fail(ErrorCode::dimension, os.str());
    }
    require_sector(w, "pullback");
    return SectorForm(
        w.n(), phi.dom(), w.k(), compose(iterate_tangent(phi, w.n()), w.body()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Bases
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void guard(Limits const& limits, std::size_t n, std::size_t m, std::size_t d) {
      std::ostringstream os;
      if (n > limits.max_n) {
        os << "degree " << n << " exceeds the cap " << limits.max_n;
      } else if (m > limits.max_m) {
        os << "dimension " << m << " exceeds the cap " << limits.max_m;
      } else if (d > limits.max_d) {
        os << "coefficient degree " << d << " exceeds the cap " << limits.max_d;
      } else {
        return;
      }
      fail(ErrorCode::resource, os.str());
    }

    // Exponents in m variables of total degree <= d, graded then lex.
    std::vector<Exponent> base_exponents(std::size_t m, std::size_t d) {
      std::vector<Exponent> out;
      Exponent              e(m, 0);
      // recursive fill of the remaining budget
      auto rec = [&](auto&& self, std::size_t j, std::size_t budget) -> void {
        if (j == m) {
          out.push_back(e);
          return;
        }
        for (std::size_t a = 0; a <= budget; ++a) {
          e[j] = static_cast<std::uint16_t>(a);
          self(self, j + 1, budget - a);
        }
        e[j] = 0;
      };
      rec(rec, 0, d);
      return out;
    }

    // Keys (slot, component, exponent) -> dense indices.
    class MonomialIndex {
     public:
      std::size_t of(std::size_t slot, std::size_t comp, Exponent const& e) {
        auto [it, inserted] = _index.try_emplace({slot, comp, e}, _index.size());
        return it->second;
      }
      SparseVec vec(PolyMap const& f, std::size_t slot = 0) {
        SparseVec v;
        for (std::size_t r = 0; r < f.cod(); ++r) {
          for (auto const& [e, c] : f[r].terms()) {
            v.emplace(of(slot, r, e), c);
          }
        }
        return v;
      }

     private:
      std::map<std::tuple<std::size_t, std::size_t, Exponent>, std::size_t> _index;
    };

    void add_into(SparseVec& v, SparseVec const& w) {
      axpy(v, 1, w);
    }

    // Reduced echelon combinations of `forms` spanning the common kernel of
    // the linear map b |-> residual(b).
    template <typename Residual>
    std::vector<SectorForm> kernel_forms(std::vector<SectorForm> const& forms,
                                         SectorForm const&              zero,
                                         Residual&&                     residual) {
      Echelon       e(true);
      MonomialIndex index;
      for (auto const& b : forms) {
        e.insert(residual(b, index));
      }
      Echelon combos;
      for (auto const& c : e.kernel()) {
        combos.insert(c);
      }
      std::vector<SectorForm> out;
      for (auto const& row : combos.reduced_basis()) {
        SectorForm w = zero;
        for (auto const& [label, c] : row) {
          w += c * forms[label];
        }
        out.push_back(std::move(w));
      }
      return out;
    }
  }  // namespace

  std::vector<SectorForm> sector_basis(std::size_t   n,
                                       std::size_t   m,
                                       std::size_t   d,
                                       Limits const& limits) {
    guard(limits, n, m, d);
    std::size_t const     N     = tangent_dim(m, n);
    std::size_t const     masks = std::size_t{1} << n;
    std::vector<Exponent> bases = base_exponents(m, d);

    // Linearity in level i makes every monomial homogeneous of degree one in
    // the coordinates whose mask contains i. So the tangent factor of a
    // candidate is one coordinate per block of a set partition of the levels.
    std::size_t const all = masks - 1;
    auto partitions = [&](auto&& self, std::size_t rest) -> std::size_t {
      if (rest == 0) {
        return 1;
      }
      std::size_t const low = rest & (~rest + 1);
      std::size_t       total = 0;
      for (std::size_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
        if (sub & low) {
          total += m * self(self, rest & ~sub);
        }
      }
      return total;
    };
    std::size_t const per_base = partitions(partitions, all);
    if (per_base > limits.max_candidates / bases.size()) {
      std::ostringstream os;
      os << "sector_basis(" << n << ", " << m << ", " << d << ") needs "
         << per_base * bases.size() << " candidate monomials, more than "
         << limits.max_candidates;
      fail(ErrorCode::resource, os.str());
    }

    std::vector<SectorForm> candidates;
    candidates.reserve(per_base * bases.size());
    Exponent e(N, 0);
    auto     rec = [&](auto&& self, std::size_t rest) -> void {
      if (rest == 0) {
        candidates.emplace_back(n, m, 1, PolyMap(N, {Poly::monomial(N, e, 1)}));
        return;
      }
      std::size_t const low = rest & (~rest + 1);
      for (std::size_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
        if (!(sub & low)) {
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
          e[coord_index(m, j, sub)] = 1;
          self(self, rest & ~sub);
          e[coord_index(m, j, sub)] = 0;
        }
      }
    };
    for (auto const& b : bases) {
      std::copy(b.begin(), b.end(), e.begin());
      rec(rec, all);
    }

    PolyMap const lam = lambda_lift(1);
    return kernel_forms(
        candidates, SectorForm::zero(n, m), [&](SectorForm const& t, MonomialIndex& index) {
          SparseVec     v;
          PolyMap const Tt  = tangent_of_map(t.body());
          PolyMap const rhs = compose(t.body(), lam);
          for (std::size_t i = 1; i <= n; ++i) {
            PolyMap const diff = compose(whisker(Whisker::a_i, m, n, i), Tt) - rhs;
            add_into(v, index.vec(diff, i));
          }
          return v;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // The complex
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<SectorForm> alternating_part(std::vector<SectorForm> const& basis,
                                             std::size_t n,
                                             std::size_t m) {
      if (n < 2) {
        return basis;
      }
      return kernel_forms(
          basis, SectorForm::zero(n, m), [&](SectorForm const& b, MonomialIndex& index) {
            SparseVec v;
            for (std::size_t i = 1; i + 1 <= n; ++i) {
              add_into(v, index.vec((raw_symmetry(b, i) + b).body(), i));
            }
            return v;
          });
    }

    // Coordinates of v in the span of the reduced rows; false if v is not in it.
    bool coordinates(std::vector<SparseVec> const& rows,
                     SparseVec const&              v,
                     std::vector<Rational>&        out) {
      out.assign(rows.size(), 0);
      SparseVec rebuilt;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = v.find(rows[r].begin()->first);
        if (it != v.end()) {
          out[r] = it->second;
          axpy(rebuilt, it->second, rows[r]);
        }
      }
      return rebuilt == v;
    }

    // levels[n] = V_n(d), wider[n] = V_n(d+1) for n < n_max.
    ComplexRanks ranks_of(std::vector<std::vector<SectorForm>> const& levels,
                          std::vector<std::vector<SectorForm>> const& wider,
                          std::vector<MonomialIndex>&                 index) {
      ComplexRanks out;
      std::size_t  top = levels.size();
      for (std::size_t n = 0; n < top; ++n) {
        Echelon img;
        for (auto const& b : levels[n]) {
          img.insert(index[n + 1].vec(raw_exterior(b).body()));
        }
        out.dims.push_back(levels[n].size());
        out.ranks.push_back(img.rank());
        out.kernels.push_back(levels[n].size() - img.rank());

        std::size_t image = 0;
        if (n > 0) {
          Echelon a;
          for (auto const& b : wider[n - 1]) {
            a.insert(index[n].vec(raw_exterior(b).body()));
          }
          std::size_t const rank_a = a.rank();
          for (auto const& b : levels[n]) {
            a.insert(index[n].vec(b.body()));
          }
          image = rank_a + levels[n].size() - a.rank();
        }
        out.images.push_back(image);
        out.H.push_back(out.kernels.back() - image);
      }
      return out;
    }
  }  // namespace

  ComplexReport complex_report(std::size_t   m,
                               std::size_t   d,
                               std::size_t   n_max,
                               Limits const& limits) {
    guard(limits, n_max, m, d + 1);
    std::vector<std::vector<SectorForm>> levels, wider, alt_levels, alt_wider;
    for (std::size_t n = 0; n <= n_max; ++n) {
      levels.push_back(sector_basis(n, m, d, limits));
      alt_levels.push_back(alternating_part(levels.back(), n, m));
      if (n < n_max) {
        wider.push_back(sector_basis(n, m, d + 1, limits));
        alt_wider.push_back(alternating_part(wider.back(), n, m));
      }
    }

    ComplexReport report{m, d, n_max, {}, {}, true};
    {
      std::vector<MonomialIndex> index(n_max + 2);
      report.sector = ranks_of(levels, wider, index);
    }
    {
      std::vector<MonomialIndex> index(n_max + 2);
      report.singular = ranks_of(alt_levels, alt_wider, index);
    }

    // Matrices D_n : V_n(d) -> V_{n+1}(d) in row convention; D_n D_{n+1} = 0.
    std::vector<MonomialIndex> index(n_max + 2);
    std::vector<Matrix>        D;
    for (std::size_t n = 0; n < n_max; ++n) {
      Echelon target;
      for (auto const& b : levels[n + 1]) {
        target.insert(index[n + 1].vec(b.body()));
      }
      auto const rows = target.reduced_basis();
      Matrix     Dn;
      for (auto const& b : levels[n]) {
        std::vector<Rational> coords;
        if (!coordinates(rows, index[n + 1].vec(raw_exterior(b).body()), coords)) {
          report.complex_verified = false;
        }
        Dn.push_back(std::move(coords));
      }
      D.push_back(std::move(Dn));
    }
    for (std::size_t n = 0; n + 1 < D.size(); ++n) {
      for (auto const& row : multiply(D[n], D[n + 1])) {
        for (auto const& x : row) {
          if (x != 0) {
            report.complex_verified = false;
          }
        }
      }
    }
    // the last composite lands outside the computed levels
    if (n_max > 0) {
      for (auto const& b : levels[n_max - 1]) {
        if (!raw_exterior(raw_exterior(b)).is_zero()) {
          report.complex_verified = false;
        }
      }
    }
    return report;
  }

}  // namespace sf
