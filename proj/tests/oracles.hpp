#pragma once

// Test-only reference implementations. None of these call the library code
// they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sectorform/fincard.hpp"
#include "sectorform/poly.hpp"
#include "sectorform/sector.hpp"

namespace oracle {

  using sf::Exponent;
  using sf::FinMap;
  using sf::Poly;
  using sf::PolyMap;
  using sf::Rational;

  inline Rational eval(Poly const& p, std::vector<Rational> const& at) {
    Rational s = 0;
    for (auto const& [e, c] : p.terms()) {
      Rational t = c;
      for (std::size_t j = 0; j < e.size(); ++j) {
        for (std::uint16_t k = 0; k < e[j]; ++k) {
          t *= at[j];
        }
      }
      s += t;
    }
    return s;
  }

  // Truncated polynomial algebra Q[e_1, ..., e_n] / (e_k^2): the element is
  // indexed by the subset mask of the e_k present.
  struct HyperDual {
    std::vector<Rational> c;

    explicit HyperDual(std::size_t n) : c(std::size_t{1} << n, 0) {}

    HyperDual operator*(HyperDual const& o) const {
      HyperDual r(0);
      r.c.assign(c.size(), 0);
      for (std::size_t a = 0; a < c.size(); ++a) {
        if (c[a] == 0) {
          continue;
        }
        for (std::size_t b = 0; b < c.size(); ++b) {
          if ((a & b) == 0 && o.c[b] != 0) {
            r.c[a | b] += c[a] * o.c[b];
          }
        }
      }
      return r;
    }
  };

  // f evaluated on hyper-dual inputs: the coefficient of e^S in f_r(x) is
  // the output coordinate (r, S) of T^n f at the flat point `at`.
  inline std::vector<Rational> eval_iterated_tangent(PolyMap const&               f,
                                                     std::size_t                  n,
                                                     std::vector<Rational> const& at) {
    std::size_t const      m     = f.dom();
    std::size_t const      masks = std::size_t{1} << n;
    std::vector<HyperDual> x(m, HyperDual(n));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t s = 0; s < masks; ++s) {
        x[j].c[s] = at[s * m + j];
      }
    }
    std::vector<Rational> out(f.cod() * masks, 0);
    for (std::size_t r = 0; r < f.cod(); ++r) {
      HyperDual acc(n);
      for (auto const& [e, c] : f[r].terms()) {
        HyperDual t(n);
        t.c[0] = c;
        for (std::size_t j = 0; j < m; ++j) {
          for (std::uint16_t k = 0; k < e[j]; ++k) {
            t = t * x[j];
          }
        }
        for (std::size_t s = 0; s < masks; ++s) {
          acc.c[s] += t.c[s];
        }
      }
      for (std::size_t s = 0; s < masks; ++s) {
        out[s * f.cod() + r] = acc.c[s];
      }
    }
    return out;
  }

  inline std::vector<Rational> eval_map(PolyMap const& f, std::vector<Rational> const& at) {
    std::vector<Rational> out;
    for (auto const& p : f.components()) {
      out.push_back(eval(p, at));
    }
    return out;
  }

  // The realization of a surjection u : a -> b on T^b R^m -> T^a R^m,
  // written down directly: element x of cardinal c is tangent level c+1-x,
  // and output coordinate (j, u^-1(S)) copies input coordinate (j, S); all
  // other outputs are zero.
  inline PolyMap realize_closed_form(FinMap const& u, std::size_t m) {
    std::size_t const a = u.dom();
    std::size_t const b = u.cod();
    std::vector<std::size_t> src((m << a), PolyMap::npos);
    for (std::size_t S = 0; S < (std::size_t{1} << b); ++S) {
      std::size_t R = 0;
      for (std::size_t x = 1; x <= a; ++x) {
        std::size_t const y       = u(static_cast<std::uint32_t>(x));
        std::size_t const level_y = b + 1 - y;
        if (S & (std::size_t{1} << (level_y - 1))) {
          R |= std::size_t{1} << (a + 1 - x - 1);
        }
      }
      for (std::size_t j = 0; j < m; ++j) {
        src[R * m + j] = S * m + j;
      }
    }
    return PolyMap::coordinate(m << b, src);
  }

  inline Poly random_poly(std::mt19937_64& rng,
                          std::size_t      nvars,
                          int              max_deg,
                          int              max_terms) {
    std::uniform_int_distribution<int>         coef(-5, 5);
    std::uniform_int_distribution<int>         den(1, 3);
    std::uniform_int_distribution<int>         nt(0, max_terms);
    std::uniform_int_distribution<int>         deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, nvars == 0 ? 0 : nvars - 1);
    Poly                                       p(nvars);
    int const                                  terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
      Exponent e(nvars, 0);
      int      d = deg(rng);
      for (int k = 0; k < d && nvars > 0; ++k) {
        ++e[var(rng)];
      }
      p.add_term(std::move(e), Rational(coef(rng), den(rng)));
    }
    return p;
  }

  inline PolyMap random_map(std::mt19937_64& rng,
                            std::size_t      a,
                            std::size_t      b,
                            int              max_deg   = 2,
                            int              max_terms = 3) {
    std::vector<Poly> comps;
    for (std::size_t r = 0; r < b; ++r) {
      comps.push_back(random_poly(rng, a, max_deg, max_terms));
    }
    return PolyMap(a, std::move(comps));
  }

  inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational>              p;
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      p.push_back(q);
    }
    return p;
  }

  inline FinMap random_map_of(std::mt19937_64& rng, std::size_t dom, std::size_t cod) {
    std::uniform_int_distribution<std::uint32_t> y(1, static_cast<std::uint32_t>(cod));
    std::vector<std::uint32_t>                   t;
    for (std::size_t x = 0; x < dom; ++x) {
      t.push_back(y(rng));
    }
    return FinMap::of(cod, t);
  }

  inline FinMap random_surjection(std::mt19937_64& rng, std::size_t dom, std::size_t cod) {
    // every value once, then random fill, then shuffle
    std::vector<std::uint32_t> t;
    for (std::uint32_t y = 1; y <= cod; ++y) {
      t.push_back(y);
    }
    std::uniform_int_distribution<std::uint32_t> y(1, static_cast<std::uint32_t>(cod));
    while (t.size() < dom) {
      t.push_back(y(rng));
    }
    std::shuffle(t.begin(), t.end(), rng);
    return FinMap::of(cod, t);
  }

  // A second factorization of a surjection into epsilon / sigma, built from
  // random choices: a random permutation within each fibre, bubble swaps in
  // random order, and merges in random block order.
  inline sf::GenWord random_factorization(std::mt19937_64& rng, FinMap const& u) {
    std::size_t const n = u.dom();
    // target ranks: fibre order, shuffled inside each fibre
    std::vector<std::vector<std::uint32_t>> fibres(u.cod());
    for (std::uint32_t x = 1; x <= n; ++x) {
      fibres[u(x) - 1].push_back(x);
    }
    std::vector<std::uint32_t> rank(n + 1, 0);
    std::vector<std::size_t>   block_size;
    std::uint32_t              r = 1;
    for (auto& fib : fibres) {
      std::shuffle(fib.begin(), fib.end(), rng);
      for (auto x : fib) {
        rank[x] = r++;
      }
      block_size.push_back(fib.size());
    }
    // tau(x) = rank[x]; sort the table of tau by random adjacent swaps
    std::vector<std::uint32_t> table(rank.begin() + 1, rank.end());
    std::vector<sf::Generator> gens;
    while (true) {
      std::vector<std::size_t> inversions;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        if (table[p] > table[p + 1]) {
          inversions.push_back(p);
        }
      }
      if (inversions.empty()) {
        break;
      }
      std::size_t const p
          = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
      std::swap(table[p], table[p + 1]);
      gens.push_back(sf::sigma(n, p + 1));
    }
    std::size_t at = n;
    while (true) {
      std::vector<std::size_t> open;
      for (std::size_t k = 0; k < block_size.size(); ++k) {
        if (block_size[k] > 1) {
          open.push_back(k);
        }
      }
      if (open.empty()) {
        break;
      }
      std::size_t const k
          = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      std::size_t start = 1;
      for (std::size_t q = 0; q < k; ++q) {
        start += block_size[q];
      }
      gens.push_back(sf::epsilon(at - 1, start));
      --block_size[k];
      --at;
    }
    return sf::GenWord(n, u.cod(), std::move(gens));
  }

  // A word for an arbitrary map f that differs from the library's: a random
  // factorization of the surjection onto the image, then delta^k_y inserting
  // each missing value y directly, in ascending order.
  inline sf::GenWord alternative_word(std::mt19937_64& rng, FinMap const& f) {
    std::vector<bool> hit(f.cod() + 1, false);
    for (std::uint32_t x = 1; x <= f.dom(); ++x) {
      hit[f(x)] = true;
    }
    std::vector<std::uint32_t> rank(f.cod() + 1, 0);
    std::uint32_t              r = 0;
    for (std::uint32_t y = 1; y <= f.cod(); ++y) {
      if (hit[y]) {
        rank[y] = ++r;
      }
    }
    std::vector<std::uint32_t> t;
    for (std::uint32_t x = 1; x <= f.dom(); ++x) {
      t.push_back(rank[f(x)]);
    }
    auto gens = random_factorization(rng, FinMap::of(r, t)).gens();
    std::size_t at = r;
    for (std::uint32_t y = 1; y <= f.cod(); ++y) {
      if (!hit[y]) {
        gens.push_back(sf::delta(at, y));
        ++at;
      }
    }
    return sf::GenWord(f.dom(), f.cod(), std::move(gens));
  }

  // Random rational combination of a basis.
  inline sf::SectorForm random_combination(std::mt19937_64&                   rng,
                                           std::vector<sf::SectorForm> const& basis,
                                           sf::SectorForm                     zero) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (auto const& b : basis) {
      Rational c(coef(rng), den(rng));
      c.canonicalize();
      zero += c * b;
    }
    return zero;
  }

}  // namespace oracle
