#include "sectorform/fincard.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "sectorform/error.hpp"

namespace sf {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::arity:
        return "arity";
      case ErrorCode::index_range:
        return "index_range";
      case ErrorCode::domain:
        return "domain";
      case ErrorCode::word:
        return "word";
      case ErrorCode::precondition:
        return "precondition";
      case ErrorCode::dimension:
        return "dimension";
      case ErrorCode::json:
        return "json";
      case ErrorCode::resource:
        return "resource";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // FinMap
  ////////////////////////////////////////////////////////////////////////

  FinMap::FinMap(std::size_t cod, std::vector<std::uint32_t> table0)
      : _cod(cod), _table(std::move(table0)) {
    for (auto y : _table) {
      if (y >= _cod) {
        std::ostringstream os;
        os << "table entry " << (y + 1) << " outside codomain 1.." << _cod;
        fail(ErrorCode::domain, os.str());
      }
    }
  }

  FinMap FinMap::of(std::size_t cod, std::vector<std::uint32_t> const& table1) {
    std::vector<std::uint32_t> t;
    t.reserve(table1.size());
    for (auto y : table1) {
      if (y == 0) {
        fail(ErrorCode::domain, "table entries are 1-based");
      }
      t.push_back(y - 1);
    }
    return FinMap(cod, std::move(t));
  }

  FinMap FinMap::of(std::size_t cod, std::initializer_list<std::uint32_t> table1) {
    return of(cod, std::vector<std::uint32_t>(table1));
  }

  FinMap FinMap::identity(std::size_t n) {
    std::vector<std::uint32_t> t(n);
    std::iota(t.begin(), t.end(), 0u);
    return FinMap(n, std::move(t));
  }

  std::uint32_t FinMap::operator()(std::uint32_t x) const {
    if (x == 0 || x > _table.size()) {
      fail(ErrorCode::index_range, "element outside the domain");
    }
    return _table[x - 1] + 1;
  }

  std::vector<std::uint32_t> FinMap::table1() const {
    std::vector<std::uint32_t> t(_table);
    for (auto& y : t) {
      ++y;
    }
    return t;
  }

  std::ostream& operator<<(std::ostream& os, FinMap const& f) {
    os << f.dom() << "->" << f.cod() << " [";
    for (std::size_t x = 0; x < f.dom(); ++x) {
      os << (x == 0 ? "" : ",") << f.table0()[x] + 1;
    }
    return os << "]";
  }

  FinMap compose(FinMap const& f, FinMap const& g) {
    if (f.cod() != g.dom()) {
      std::ostringstream os;
      os << "cannot compose " << f << " with " << g;
      fail(ErrorCode::arity, os.str());
    }
    std::vector<std::uint32_t> t(f.dom());
    for (std::size_t x = 0; x < f.dom(); ++x) {
      t[x] = g.table0()[f.table0()[x]];
    }
    return FinMap(g.cod(), std::move(t));
  }

  FinMap monoidal_sum(FinMap const& f, FinMap const& g) {
    std::vector<std::uint32_t> t(f.table0());
    auto const                 shift = static_cast<std::uint32_t>(f.cod());
    for (auto y : g.table0()) {
      t.push_back(y + shift);
    }
    return FinMap(f.cod() + g.cod(), std::move(t));
  }

  Classification classify(FinMap const& f) {
    std::vector<std::size_t> hits(f.cod(), 0);
    for (auto y : f.table0()) {
      ++hits[y];
    }
    bool const surj = std::none_of(hits.begin(), hits.end(),
                                   [](std::size_t h) { return h == 0; });
    bool const inj  = std::none_of(hits.begin(), hits.end(),
                                   [](std::size_t h) { return h > 1; });
    bool const mono = std::is_sorted(f.table0().begin(), f.table0().end());
    return {surj, surj && inj, mono, inj};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(GenKind k) {
    switch (k) {
      case GenKind::epsilon:
        return "epsilon";
      case GenKind::delta:
        return "delta";
      case GenKind::sigma:
        return "sigma";
    }
    return "?";
  }

  std::size_t Generator::dom() const noexcept {
    return kind == GenKind::epsilon ? n + 1 : n;
  }

  std::size_t Generator::cod() const noexcept {
    return kind == GenKind::delta ? n + 1 : n;
  }

  bool Generator::valid() const noexcept {
    switch (kind) {
      case GenKind::epsilon:
        return 1 <= i && i <= n;
      case GenKind::delta:
        return 1 <= i && i <= n + 1;
      case GenKind::sigma:
        return 1 <= i && i + 1 <= n;
    }
    return false;
  }

  namespace {
    Generator checked(Generator g) {
      if (!g.valid()) {
        std::ostringstream os;
        os << "invalid generator " << g;
        fail(ErrorCode::index_range, os.str());
      }
      return g;
    }
  }  // namespace

  Generator epsilon(std::size_t n, std::size_t i) {
    return checked({GenKind::epsilon, n, i});
  }
  Generator delta(std::size_t n, std::size_t i) {
    return checked({GenKind::delta, n, i});
  }
  Generator sigma(std::size_t n, std::size_t i) {
    return checked({GenKind::sigma, n, i});
  }

  std::ostream& operator<<(std::ostream& os, Generator const& g) {
    return os << to_string(g.kind) << "^" << g.n << "_" << g.i;
  }

  FinMap generator_map(Generator const& g) {
    checked(g);
    std::vector<std::uint32_t> t(g.dom());
    // 1-based element x sits at index x - 1
    for (std::uint32_t x = 1; x <= g.dom(); ++x) {
      std::uint32_t y = x;
      switch (g.kind) {
        case GenKind::epsilon:
          y = x <= g.i ? x : x - 1;
          break;
        case GenKind::delta:
          y = x < g.i ? x : x + 1;
          break;
        case GenKind::sigma:
          y = x == g.i ? x + 1 : (x == g.i + 1 ? x - 1 : x);
          break;
      }
      t[x - 1] = y - 1;
    }
    return FinMap(g.cod(), std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  GenWord::GenWord(std::size_t dom, std::size_t cod, std::vector<Generator> gens)
      : _dom(dom), _cod(cod), _gens(std::move(gens)) {
    std::size_t at = dom;
    for (auto const& g : _gens) {
      if (!g.valid()) {
        std::ostringstream os;
        os << "invalid generator " << g << " in word";
        fail(ErrorCode::index_range, os.str());
      }
      if (g.dom() != at) {
        std::ostringstream os;
        os << "generator " << g << " does not compose at cardinal " << at;
        fail(ErrorCode::word, os.str());
      }
      at = g.cod();
    }
    if (at != cod) {
      std::ostringstream os;
      os << "word ends at " << at << " but declares codomain " << cod;
      fail(ErrorCode::word, os.str());
    }
  }

  std::ostream& operator<<(std::ostream& os, GenWord const& w) {
    os << "[" << w.dom() << ":";
    for (auto const& g : w.gens()) {
      os << " " << g;
    }
    return os << " :" << w.cod() << "]";
  }

  GenWord chain(std::size_t dom, std::vector<Step> const& steps) {
    std::vector<Generator> gens;
    std::size_t            at = dom;
    for (auto const& s : steps) {
      Generator g{s.kind, 0, s.i};
      switch (s.kind) {
        case GenKind::epsilon:
          if (at == 0) {
            fail(ErrorCode::word, "epsilon cannot start at cardinal 0");
          }
          g.n = at - 1;
          break;
        case GenKind::delta:
        case GenKind::sigma:
          g.n = at;
          break;
      }
      gens.push_back(checked(g));
      at = g.cod();
    }
    return GenWord(dom, at, std::move(gens));
  }

  GenWord chain(std::size_t dom, std::initializer_list<Step> steps) {
    return chain(dom, std::vector<Step>(steps));
  }

  FinMap eval_word(GenWord const& w, Realizer const& realize) {
    FinMap result = FinMap::identity(w.dom());
    for (auto const& g : w.gens()) {
      result = compose(result, realize(g));
    }
    return result;
  }

  FinMap eval_word(GenWord const& w) {
    return eval_word(w, generator_map);
  }

  FinMap sigma_cycle(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
      fail(ErrorCode::index_range, "sigma_cycle index outside 1..n");
    }
    std::vector<std::uint32_t> t(n);
    for (std::uint32_t x = 1; x <= n; ++x) {
      std::uint32_t y = x;
      if (x == 1) {
        y = static_cast<std::uint32_t>(i);
      } else if (x <= i) {
        y = x - 1;
      }
      t[x - 1] = y - 1;
    }
    return FinMap(n, std::move(t));
  }

  GenWord sigma_cycle_word(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
      fail(ErrorCode::index_range, "sigma_cycle index outside 1..n");
    }
    std::vector<Generator> gens;
    for (std::size_t j = 1; j < i; ++j) {
      gens.push_back(sigma(n, j));
    }
    return GenWord(n, n, std::move(gens));
  }

  FinMap alpha(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) {
      fail(ErrorCode::index_range, "alpha index outside 1..n");
    }
    return compose(sigma_cycle(n + 1, j), generator_map(epsilon(n, j)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  GenWord factor_surjection(FinMap const& f) {
    if (!classify(f).surjective) {
      std::ostringstream os;
      os << "factor_surjection: " << f << " is not surjective";
      fail(ErrorCode::domain, os.str());
    }
    std::size_t const n = f.dom();
    auto const&       t = f.table0();

    // tau sends x to its rank in the stable order by (f(x), x); then the
    // order-preserving surjection collapses the consecutive fibres.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&t](auto a, auto b) { return t[a] < t[b]; });
    std::vector<std::uint32_t> tau(n);
    for (std::uint32_t r = 0; r < n; ++r) {
      tau[order[r]] = r;
    }

    // Insertion sort by adjacent position swaps: if the swaps s_1, ..., s_k
    // sort tau then tau = s_1 ; ... ; s_k.
    std::vector<Generator> gens;
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = x; y > 0 && tau[y - 1] > tau[y]; --y) {
        std::swap(tau[y - 1], tau[y]);
        gens.push_back(sigma(n, y));
      }
    }

    std::vector<std::size_t> fibre(f.cod(), 0);
    for (auto y : t) {
      ++fibre[y];
    }
    std::size_t at = n;
    for (std::size_t k = 0; k < fibre.size(); ++k) {
      for (std::size_t r = 1; r < fibre[k]; ++r) {
        gens.push_back(epsilon(at - 1, k + 1));
        --at;
      }
    }
    return GenWord(n, f.cod(), std::move(gens));
  }

  GenWord factor_map(FinMap const& f) {
    std::vector<bool> hit(f.cod(), false);
    for (auto y : f.table0()) {
      hit[y] = true;
    }
    std::vector<std::uint32_t> rank(f.cod(), 0);
    std::uint32_t              r = 0;
    for (std::size_t y = 0; y < f.cod(); ++y) {
      rank[y] = r;
      r += hit[y] ? 1 : 0;
    }
    std::vector<std::uint32_t> onto(f.dom());
    for (std::size_t x = 0; x < f.dom(); ++x) {
      onto[x] = rank[f.table0()[x]];
    }
    GenWord                surj = factor_surjection(FinMap(r, std::move(onto)));
    std::vector<Generator> gens = surj.gens();

    // The order-preserving injection r -> cod skips the missing values in
    // increasing order; delta^c_i = delta^c_1 ; sigma^{c+1}_(i).
    std::size_t at = r;
    for (std::size_t y = 0; y < f.cod(); ++y) {
      if (hit[y]) {
        continue;
      }
      std::size_t const i = y + 1;
      gens.push_back(delta(at, 1));
      for (std::size_t j = 1; j < i; ++j) {
        gens.push_back(sigma(at + 1, j));
      }
      ++at;
    }
    return GenWord(f.dom(), f.cod(), std::move(gens));
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr GenKind E = GenKind::epsilon;
    constexpr GenKind D = GenKind::delta;
    constexpr GenKind S = GenKind::sigma;

    std::vector<std::string> const families = {
        "pure-codegeneracy",
        "pure-coface",
        "coface-codegeneracy",
        "moore",
        "codegeneracy-symmetry",
        "coface-symmetry",
        "fundamental-coface-unit",
        "fundamental-coface-codegeneracy",
        "fundamental-coface-square",
        "fundamental-coface-symmetry"};
  }  // namespace

  std::vector<std::string> const& relation_families() {
    return families;
  }

  std::vector<RelationInstance> relation_instances(std::size_t N) {
    std::vector<RelationInstance> out;
    auto add = [&out](std::size_t fam, GenWord lhs, GenWord rhs) {
      out.push_back({families[fam], std::move(lhs), std::move(rhs)});
    };

    // eps_i ; eps_j = eps_{j+1} ; eps_i   (i <= j), eps^n_i : n+1 -> n
    for (std::size_t n = 2; n <= N; ++n) {
      for (std::size_t j = 1; j <= n - 1; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
          add(0, chain(n + 1, {{E, i}, {E, j}}), chain(n + 1, {{E, j + 1}, {E, i}}));
        }
      }
    }
    // delta_j ; delta_i = delta_i ; delta_{j+1}   (i <= j)
    for (std::size_t n = 0; n <= N; ++n) {
      for (std::size_t j = 1; j <= n + 1; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
          add(1, chain(n, {{D, j}, {D, i}}), chain(n, {{D, i}, {D, j + 1}}));
        }
      }
    }
    // delta_i ; eps_j, delta^n_i : n -> n+1, eps^n_j : n+1 -> n
    for (std::size_t n = 1; n <= N; ++n) {
      for (std::size_t i = 1; i <= n + 1; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          GenWord lhs = chain(n, {{D, i}, {E, j}});
          if (i < j) {
            add(2, lhs, chain(n, {{E, j - 1}, {D, i}}));
          } else if (i == j || i == j + 1) {
            add(2, lhs, GenWord::identity(n));
          } else {
            add(2, lhs, chain(n, {{E, j}, {D, i - 1}}));
          }
        }
      }
    }
    // Moore relations at level n
    for (std::size_t n = 2; n <= N; ++n) {
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        add(3, chain(n, {{S, i}, {S, i}}), GenWord::identity(n));
      }
      for (std::size_t i = 1; i + 2 <= n; ++i) {
        add(3, chain(n, {{S, i}, {S, i + 1}, {S, i}}),
            chain(n, {{S, i + 1}, {S, i}, {S, i + 1}}));
      }
      for (std::size_t j = 1; j + 1 <= n; ++j) {
        for (std::size_t i = 1; i + 1 < j; ++i) {
          add(3, chain(n, {{S, j}, {S, i}}), chain(n, {{S, i}, {S, j}}));
        }
      }
    }
    // codegeneracy-symmetry, eps^n_j : n+1 -> n
    for (std::size_t n = 1; n <= N; ++n) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i + 1 <= n; ++i) {
          GenWord lhs = chain(n + 1, {{E, j}, {S, i}});
          if (i + 1 < j) {
            add(4, lhs, chain(n + 1, {{S, i}, {E, j}}));
          } else if (i > j) {
            add(4, lhs, chain(n + 1, {{S, i + 1}, {E, j}}));
          } else if (i == j) {
            add(4, lhs, chain(n + 1, {{S, i + 1}, {S, i}, {E, i + 1}}));
          }
        }
        add(4, chain(n + 1, {{S, j}, {E, j}}), chain(n + 1, {{E, j}}));
      }
    }
    // coface-symmetry, delta^n_j : n -> n+1, sigma^{n+1}_i
    for (std::size_t n = 1; n <= N; ++n) {
      for (std::size_t j = 1; j <= n + 1; ++j) {
        for (std::size_t i = 1; i <= n; ++i) {
          GenWord lhs = chain(n, {{D, j}, {S, i}});
          if (i + 1 < j) {
            add(5, lhs, chain(n, {{S, i}, {D, j}}));
          } else if (i == j) {
            add(5, lhs, chain(n, {{D, i + 1}}));
          } else if (i > j) {
            add(5, lhs, chain(n, {{S, i - 1}, {D, j}}));
          }
        }
      }
    }
    // delta_1 ; eps_1 = 1
    for (std::size_t n = 1; n <= N; ++n) {
      add(6, chain(n, {{D, 1}, {E, 1}}), GenWord::identity(n));
    }
    // delta_1 ; eps_{j+1} = eps_j ; delta_1, starting at n+1
    for (std::size_t n = 1; n + 1 <= N; ++n) {
      for (std::size_t j = 1; j <= n; ++j) {
        add(7, chain(n + 1, {{D, 1}, {E, j + 1}}), chain(n + 1, {{E, j}, {D, 1}}));
      }
    }
    // delta_1 ; delta_1 ; sigma_1 = delta_1 ; delta_1
    for (std::size_t n = 0; n + 2 <= N; ++n) {
      add(8, chain(n, {{D, 1}, {D, 1}, {S, 1}}), chain(n, {{D, 1}, {D, 1}}));
    }
    // delta_1 ; sigma_{i+1} = sigma_i ; delta_1
    for (std::size_t n = 2; n <= N; ++n) {
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        add(9, chain(n, {{D, 1}, {S, i + 1}}), chain(n, {{S, i}, {D, 1}}));
      }
    }
    return out;
  }

  std::vector<RelationReport> check_relations(std::size_t max_n, std::size_t jobs) {
    return check_relations(max_n, generator_map, jobs);
  }

  std::vector<RelationReport> check_relations(std::size_t     max_n,
                                              Realizer const& realize,
                                              std::size_t     jobs) {
    auto const instances = relation_instances(max_n);

    // failed[k] is set iff instance k fails; workers own disjoint strides.
    std::vector<char>   failed(instances.size(), 0);
    std::vector<FinMap> lhs_maps(instances.size()), rhs_maps(instances.size());
    auto                work = [&](std::size_t start, std::size_t stride) {
      for (std::size_t k = start; k < instances.size(); k += stride) {
        lhs_maps[k] = eval_word(instances[k].lhs, realize);
        rhs_maps[k] = eval_word(instances[k].rhs, realize);
        failed[k]   = lhs_maps[k] == rhs_maps[k] ? 0 : 1;
      }
    };
    jobs = std::max<std::size_t>(1, jobs);
    if (jobs == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back(work, t, jobs);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::vector<RelationReport> reports;
    for (auto const& fam : families) {
      reports.push_back({fam, max_n, 0, {}});
    }
    for (std::size_t k = 0; k < instances.size(); ++k) {
      auto const idx = static_cast<std::size_t>(
          std::find(families.begin(), families.end(), instances[k].family)
          - families.begin());
      auto& rep = reports[idx];
      ++rep.checked;
      if (failed[k]) {
        rep.failures.push_back(
            {instances[k].lhs, instances[k].rhs, lhs_maps[k], rhs_maps[k]});
      }
    }
    return reports;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<FinMap> all_maps(std::size_t dom, std::size_t cod) {
    std::vector<FinMap> out;
    if (cod == 0 && dom > 0) {
      return out;
    }
    std::vector<std::uint32_t> t(dom, 0);
    while (true) {
      out.emplace_back(cod, t);
      std::size_t k = dom;
      while (k > 0) {
        --k;
        if (++t[k] < cod) {
          break;
        }
        t[k] = 0;
        if (k == 0) {
          return out;
        }
      }
      if (dom == 0) {
        return out;
      }
    }
  }

  std::vector<FinMap> all_surjections(std::size_t dom, std::size_t cod) {
    std::vector<FinMap> out;
    for (auto& f : all_maps(dom, cod)) {
      if (classify(f).surjective) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

}  // namespace sf
