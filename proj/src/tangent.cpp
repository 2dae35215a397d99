#include "sectorform/tangent.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "sectorform/error.hpp"

namespace sf {

  std::size_t tangent_dim(std::size_t m, std::size_t n) {
    if (n >= 8 * sizeof(std::size_t) - 1
        || m > (std::numeric_limits<std::size_t>::max() >> n)) {
      fail(ErrorCode::resource, "tangent dimension overflows");
    }
    return m << n;
  }

  std::size_t coord_index(std::size_t m, std::size_t j, std::size_t mask) {
    if (j >= m) {
      fail(ErrorCode::index_range, "coordinate outside the base dimension");
    }
    return mask * m + j;
  }

  ////////////////////////////////////////////////////////////////////////
  // The tangent functor
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Adds sum_j (d f / d x_j) * y_{offset + j} to `out`, where f lives in
    // the first a variables of out's ring.
    void add_directional(Poly const& f, std::size_t a, std::size_t offset, Poly& out) {
      std::size_t const N = out.nvars();
      for (auto const& [e, c] : f.terms()) {
        for (std::size_t j = 0; j < a; ++j) {
          if (e[j] == 0) {
            continue;
          }
          Exponent g(N, 0);
          std::copy(e.begin(), e.end(), g.begin());
          --g[j];
          ++g[offset + j];
          out.add_term(std::move(g), c * e[j]);
        }
      }
    }
  }  // namespace

  PolyMap tangent_of_map(PolyMap const& f) {
    std::size_t const a = f.dom();
    std::size_t const b = f.cod();
    std::vector<Poly> comps;
    comps.reserve(2 * b);
    for (auto const& p : f.components()) {
      comps.push_back(p.lift(2 * a));
    }
    for (auto const& p : f.components()) {
      Poly t(2 * a);
      add_directional(p, a, a, t);
      comps.push_back(std::move(t));
    }
    return PolyMap(2 * a, std::move(comps));
  }

  PolyMap iterate_tangent(PolyMap const& f, std::size_t n) {
    PolyMap g = f;
    for (std::size_t k = 0; k < n; ++k) {
      g = tangent_of_map(g);
    }
    return g;
  }

  PolyMap tangent2_of_map(PolyMap const& f) {
    std::size_t const a = f.dom();
    std::vector<Poly> comps;
    for (auto const& p : f.components()) {
      comps.push_back(p.lift(3 * a));
    }
    for (std::size_t block = 1; block <= 2; ++block) {
      for (auto const& p : f.components()) {
        Poly t(3 * a);
        add_directional(p, a, block * a, t);
        comps.push_back(std::move(t));
      }
    }
    return PolyMap(3 * a, std::move(comps));
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural transformations
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Structural s) {
    switch (s) {
      case Structural::ell:
        return "ell";
      case Structural::flip:
        return "flip";
      case Structural::proj:
        return "proj";
      case Structural::zero:
        return "zero";
      case Structural::add:
        return "add";
    }
    return "?";
  }

  namespace {
    constexpr std::size_t npos = PolyMap::npos;

    // Output block b of width m reads input block blocks[b] (npos: zero).
    PolyMap block_map(std::size_t                     m,
                      std::size_t                     in_blocks,
                      std::vector<std::size_t> const& blocks) {
      std::vector<std::size_t> src;
      for (auto b : blocks) {
        for (std::size_t j = 0; j < m; ++j) {
          src.push_back(b == npos ? npos : b * m + j);
        }
      }
      return PolyMap::coordinate(in_blocks * m, src);
    }
  }  // namespace

  PolyMap structural(Structural kind, std::size_t m) {
    switch (kind) {
      case Structural::ell:
        return block_map(m, 2, {0, npos, npos, 1});
      case Structural::flip:
        return block_map(m, 4, {0, 2, 1, 3});
      case Structural::proj:
        return block_map(m, 2, {0});
      case Structural::zero:
        return block_map(m, 1, {0, npos});
      case Structural::add: {
        std::vector<Poly> c;
        for (std::size_t j = 0; j < m; ++j) {
          c.push_back(Poly::var(3 * m, j));
        }
        for (std::size_t j = 0; j < m; ++j) {
          c.push_back(Poly::var(3 * m, m + j) + Poly::var(3 * m, 2 * m + j));
        }
        return PolyMap(3 * m, std::move(c));
      }
    }
    fail(ErrorCode::index_range, "unknown structural transformation");
  }

  char const* to_string(Whisker w) {
    switch (w) {
      case Whisker::ell_i:
        return "ell_i";
      case Whisker::c_i:
        return "c_i";
      case Whisker::c_cycle_i:
        return "c_cycle_i";
      case Whisker::a_i:
        return "a_i";
    }
    return "?";
  }

  namespace {
    using WhiskerKey = std::tuple<Whisker, std::size_t, std::size_t, std::size_t>;

    std::mutex                         whisker_mutex;
    std::map<WhiskerKey, PolyMap> whisker_cache;

    PolyMap compute_whisker(Whisker kind, std::size_t m, std::size_t n, std::size_t i) {
      switch (kind) {
        case Whisker::ell_i:
          return iterate_tangent(structural(Structural::ell, tangent_dim(m, n - i)),
                                 i - 1);
        case Whisker::c_i:
          return iterate_tangent(
              structural(Structural::flip, tangent_dim(m, n - i - 1)), i - 1);
        case Whisker::c_cycle_i: {
          PolyMap r = PolyMap::identity(tangent_dim(m, n));
          for (std::size_t j = i - 1; j >= 1; --j) {
            r = compose(r, whisker(Whisker::c_i, m, n, j));
          }
          return r;
        }
        case Whisker::a_i:
          return compose(whisker(Whisker::ell_i, m, n, i),
                         whisker(Whisker::c_cycle_i, m, n + 1, i));
      }
      fail(ErrorCode::index_range, "unknown whisker kind");
    }
  }  // namespace

  PolyMap const& whisker(Whisker kind, std::size_t m, std::size_t n, std::size_t i) {
    bool ok = false;
    switch (kind) {
      case Whisker::ell_i:
      case Whisker::c_cycle_i:
      case Whisker::a_i:
        ok = 1 <= i && i <= n;
        break;
      case Whisker::c_i:
        ok = 1 <= i && i + 1 <= n;
        break;
    }
    if (!ok) {
      std::ostringstream os;
      os << "whisker " << to_string(kind) << " at n = " << n << " has no index " << i;
      fail(ErrorCode::index_range, os.str());
    }
    WhiskerKey const key{kind, m, n, i};
    {
      std::lock_guard<std::mutex> lock(whisker_mutex);
      auto                        it = whisker_cache.find(key);
      if (it != whisker_cache.end()) {
        return it->second;
      }
    }
    PolyMap                     value = compute_whisker(kind, m, n, i);
    std::lock_guard<std::mutex> lock(whisker_mutex);
    return whisker_cache.try_emplace(key, std::move(value)).first->second;
  }

  PolyMap lambda_lift(std::size_t k) {
    return block_map(k, 1, {npos, 0});
  }

  PolyMap principal_projection(std::size_t k) {
    return block_map(k, 2, {1});
  }

  namespace {
    // f, g : X -> T(TM) with equal Tp-images, i.e. equal blocks 0 and 2.
    // Result X -> T(T2 M) laid out as (x, a1, a2, b, c1, c2).
    PolyMap pair_over_Tp(PolyMap const& f, PolyMap const& g, std::size_t m) {
      PolyMap both = pairing(f, g);
      // blocks of both: f = 0..3, g = 4..7
      for (auto [bf, bg] : {std::pair{0, 4}, std::pair{2, 6}}) {
        for (std::size_t j = 0; j < m; ++j) {
          if (!(both[bf * m + j] == both[bg * m + j])) {
            fail(ErrorCode::domain, "maps do not agree after Tp");
          }
        }
      }
      std::vector<std::size_t> rows;
      for (std::size_t b : {0, 1, 5, 2, 3, 7}) {
        for (std::size_t j = 0; j < m; ++j) {
          rows.push_back(b * m + j);
        }
      }
      return select(both, rows);
    }

    // f, g : X -> TN with equal base points. Result X -> T2 N.
    PolyMap pair_over_p(PolyMap const& f, PolyMap const& g, std::size_t N) {
      PolyMap both = pairing(f, g);
      for (std::size_t j = 0; j < N; ++j) {
        if (!(both[j] == both[2 * N + j])) {
          fail(ErrorCode::domain, "maps do not agree after p");
        }
      }
      std::vector<std::size_t> rows;
      for (std::size_t b : {0, 1, 3}) {
        for (std::size_t j = 0; j < N; ++j) {
          rows.push_back(b * N + j);
        }
      }
      return select(both, rows);
    }
  }  // namespace

  PolyMap vertical_universal(std::size_t m) {
    PolyMap const pi1 = block_map(m, 3, {0, 1});
    PolyMap const pi2 = block_map(m, 3, {0, 2});
    PolyMap const lhs = compose(pi1, structural(Structural::ell, m));
    PolyMap const rhs = compose(pi2, structural(Structural::zero, 2 * m));
    return compose(pair_over_Tp(lhs, rhs, m),
                   tangent_of_map(structural(Structural::add, m)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Realization of surjections
  ////////////////////////////////////////////////////////////////////////

  PolyMap realize_word(GenWord const& w, std::size_t m) {
    PolyMap r = PolyMap::identity(tangent_dim(m, w.cod()));
    auto const& gens = w.gens();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      switch (it->kind) {
        case GenKind::epsilon:
          r = compose(r, whisker(Whisker::ell_i, m, it->n, it->i));
          break;
        case GenKind::sigma:
          r = compose(r, whisker(Whisker::c_i, m, it->n, it->i));
          break;
        case GenKind::delta:
          fail(ErrorCode::domain, "cofaces have no realization on T^(-)");
      }
    }
    return r;
  }

  PolyMap realize_surjection(FinMap const& u, std::size_t m) {
    return realize_word(factor_surjection(u), m);
  }

  ////////////////////////////////////////////////////////////////////////
  // Axiom checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Equation {
      std::string name;
      PolyMap     lhs;
      PolyMap     rhs;
    };

    void record(AxiomReport& rep, std::string const& where, Equation const& eq) {
      ++rep.checked;
      if (eq.lhs == eq.rhs) {
        return;
      }
      std::ostringstream os;
      os << where << ": lhs " << eq.lhs << " rhs " << eq.rhs;
      rep.failures.push_back({eq.name, os.str()});
    }

    using StructFn = std::function<PolyMap(Structural, std::size_t)>;

    std::vector<Equation> coherence(StructFn const& S, std::size_t M) {
      PolyMap const ell  = S(Structural::ell, M);
      PolyMap const c    = S(Structural::flip, M);
      PolyMap const Tell = tangent_of_map(ell);
      PolyMap const ellT = S(Structural::ell, 2 * M);
      PolyMap const Tc   = tangent_of_map(c);
      PolyMap const cT   = S(Structural::flip, 2 * M);
      return {
          {"c;c = 1", compose(c, c), PolyMap::identity(4 * M)},
          {"ell;c = ell", compose(ell, c), ell},
          {"ell;T(ell) = ell;ellT", compose(ell, Tell), compose(ell, ellT)},
          {"Tc;cT;Tc = cT;Tc;cT",
           compose(compose(Tc, cT), Tc),
           compose(compose(cT, Tc), cT)},
          {"ellT;Tc;cT = c;T(ell)", compose(compose(ellT, Tc), cT), compose(c, Tell)}};
    }

    std::vector<Equation> additive_bundle(StructFn const& S, std::size_t M) {
      PolyMap const p    = S(Structural::proj, M);
      PolyMap const z    = S(Structural::zero, M);
      PolyMap const add  = S(Structural::add, M);
      PolyMap const pi1  = block_map(M, 3, {0, 1});
      PolyMap const swap = block_map(M, 3, {0, 2, 1});
      PolyMap const unit = block_map(M, 2, {0, 1, npos});
      // T3 = (x, u, v, w)
      PolyMap const uv_w
          = pairing(compose(block_map(M, 4, {0, 1, 2}), add), block_map(M, 4, {3}));
      PolyMap const u_vw
          = pairing(block_map(M, 4, {0, 1}), compose(block_map(M, 4, {0, 2, 3}), add));
      PolyMap const u_vw_sel = select(
          u_vw, [&] {
            std::vector<std::size_t> rows;
            for (std::size_t b : {0, 1, 3}) {
              for (std::size_t j = 0; j < M; ++j) {
                rows.push_back(b * M + j);
              }
            }
            return rows;
          }());
      return {{"0;p = 1", compose(z, p), PolyMap::identity(M)},
              {"+;p = pi1;p", compose(add, p), compose(pi1, p)},
              {"swap;+ = +", compose(swap, add), add},
              {"<1,p;0>;+ = 1", compose(unit, add), PolyMap::identity(2 * M)},
              {"(+ x 1);+ = (1 x +);+", compose(uv_w, add), compose(u_vw_sel, add)}};
    }

    std::vector<Equation> ell_bundle_morphism(StructFn const& S, std::size_t M) {
      PolyMap const ell = S(Structural::ell, M);
      PolyMap const p   = S(Structural::proj, M);
      PolyMap const z   = S(Structural::zero, M);
      PolyMap const add = S(Structural::add, M);
      PolyMap const pi1 = block_map(M, 3, {0, 1});
      PolyMap const pi2 = block_map(M, 3, {0, 2});
      return {{"ell;Tp = p;0", compose(ell, tangent_of_map(p)), compose(p, z)},
              {"0;ell = 0;T0", compose(z, ell), compose(z, tangent_of_map(z))},
              {"<pi1;ell,pi2;ell>;T(+) = +;ell",
               compose(pair_over_Tp(compose(pi1, ell), compose(pi2, ell), M),
                       tangent_of_map(add)),
               compose(add, ell)}};
    }

    std::vector<Equation> flip_bundle_morphism(StructFn const& S, std::size_t M) {
      PolyMap const c    = S(Structural::flip, M);
      PolyMap const p    = S(Structural::proj, M);
      PolyMap const z    = S(Structural::zero, M);
      PolyMap const add  = S(Structural::add, M);
      PolyMap const pT   = S(Structural::proj, 2 * M);
      PolyMap const zT   = S(Structural::zero, 2 * M);
      PolyMap const addT = S(Structural::add, 2 * M);
      PolyMap const Tpi1 = tangent_of_map(block_map(M, 3, {0, 1}));
      PolyMap const Tpi2 = tangent_of_map(block_map(M, 3, {0, 2}));
      return {{"c;p_T = Tp", compose(c, pT), tangent_of_map(p)},
              {"T0;c = 0_T", compose(tangent_of_map(z), c), zT},
              {"<Tpi1;c,Tpi2;c>;+_T = T(+);c",
               compose(pair_over_p(compose(Tpi1, c), compose(Tpi2, c), 2 * M), addT),
               compose(tangent_of_map(add), c)}};
    }

    std::vector<Equation> vertical_square(StructFn const& S, std::size_t M) {
      PolyMap const v = vertical_universal(M);
      PolyMap const p = S(Structural::proj, M);
      return {{"v;Tp = pi1;p;0",
               compose(v, tangent_of_map(p)),
               compose(compose(block_map(M, 3, {0, 1}), p), S(Structural::zero, M))}};
    }

    // Seeded panel of small polynomial maps R^a -> R^b.
    PolyMap random_poly_map(std::mt19937_64& rng, std::size_t a, std::size_t b) {
      std::uniform_int_distribution<int> coef(-3, 3);
      std::uniform_int_distribution<int> ex(0, 2);
      std::uniform_int_distribution<int> nterms(1, 3);
      std::vector<Poly>                  comps;
      for (std::size_t r = 0; r < b; ++r) {
        Poly p(a);
        int  t = nterms(rng);
        for (int s = 0; s < t; ++s) {
          Exponent e(a, 0);
          // at most two variables carry an exponent
          for (int q = 0; q < 2; ++q) {
            e[std::uniform_int_distribution<std::size_t>(0, a - 1)(rng)]
                += static_cast<std::uint16_t>(ex(rng));
          }
          p.add_term(std::move(e), Rational(coef(rng), 1 + (s % 2)));
        }
        comps.push_back(std::move(p));
      }
      return PolyMap(a, std::move(comps));
    }

    std::vector<Equation> naturality(StructFn const& S, std::size_t M, std::uint64_t seed) {
      std::mt19937_64       rng(seed);
      std::vector<Equation> out;
      for (std::size_t b = 1; b <= 2; ++b) {
        PolyMap const f   = random_poly_map(rng, M, b);
        PolyMap const Tf  = tangent_of_map(f);
        PolyMap const TTf = tangent_of_map(Tf);
        std::string   tag = " [f: R^" + std::to_string(M) + " -> R^" + std::to_string(b) + "]";
        out.push_back({"ell natural" + tag,
                       compose(S(Structural::ell, M), TTf),
                       compose(Tf, S(Structural::ell, b))});
        out.push_back({"c natural" + tag,
                       compose(S(Structural::flip, M), TTf),
                       compose(TTf, S(Structural::flip, b))});
        out.push_back({"p natural" + tag,
                       compose(S(Structural::proj, M), f),
                       compose(Tf, S(Structural::proj, b))});
        out.push_back({"0 natural" + tag,
                       compose(S(Structural::zero, M), Tf),
                       compose(f, S(Structural::zero, b))});
        out.push_back({"+ natural" + tag,
                       compose(S(Structural::add, M), Tf),
                       compose(tangent2_of_map(f), S(Structural::add, b))});
      }
      return out;
    }
  }  // namespace

  std::vector<AxiomReport> verify_tangent_axioms(std::size_t         m,
                                                 std::size_t         depth,
                                                 TangentModel const& model) {
    using Family = std::vector<Equation> (*)(StructFn const&, std::size_t);
    std::vector<std::pair<char const*, Family>> const families
        = {{"coherence", coherence},
           {"additive-bundle", additive_bundle},
           {"ell-bundle-morphism", ell_bundle_morphism},
           {"flip-bundle-morphism", flip_bundle_morphism},
           {"vertical-lift-square", vertical_square}};

    // A broken model can violate the fibre condition of a pairing while the
    // equations are being built; that counts as one failed check.
    auto build = [&](AxiomReport& rep, Family family, std::size_t M, std::string const& where) {
      try {
        return family(model.structural, M);
      } catch (Error const& e) {
        if (e.code() != ErrorCode::domain) {
          throw;
        }
        ++rep.checked;
        rep.failures.push_back({"ill-formed pairing", where + ": " + e.what()});
        return std::vector<Equation>{};
      }
    };

    std::vector<AxiomReport> reports;
    for (auto const& [name, family] : families) {
      AxiomReport rep{name, depth, 0, {}};
      for (std::size_t j = 0; j <= depth; ++j) {
        std::string const where = "at T^" + std::to_string(j) + " R^" + std::to_string(m);
        for (auto const& eq : build(rep, family, tangent_dim(m, j), where)) {
          record(rep, where, eq);
        }
      }
      for (std::size_t j = 1; j <= depth; ++j) {
        for (auto const& eq : build(rep, family, m, "under T^" + std::to_string(j))) {
          record(rep,
                 "under T^" + std::to_string(j),
                 {eq.name, iterate_tangent(eq.lhs, j), iterate_tangent(eq.rhs, j)});
        }
      }
      reports.push_back(std::move(rep));
    }

    AxiomReport nat{"naturality", depth, 0, {}};
    for (std::size_t j = 0; j <= depth; ++j) {
      for (auto const& eq : naturality(model.structural, tangent_dim(m, j), 0x5eed + j)) {
        record(nat, "at T^" + std::to_string(j) + " R^" + std::to_string(m), eq);
      }
    }
    reports.push_back(std::move(nat));
    return reports;
  }

  std::vector<AxiomReport> verify_differential_object(std::size_t k) {
    PolyMap const lam   = lambda_lift(k);
    PolyMap const phat  = principal_projection(k);
    PolyMap const p     = structural(Structural::proj, k);
    PolyMap const z     = structural(Structural::zero, k);
    PolyMap const ell   = structural(Structural::ell, k);
    PolyMap const c     = structural(Structural::flip, k);
    PolyMap const add   = structural(Structural::add, k);
    PolyMap const Tphat = tangent_of_map(phat);
    PolyMap const zeroE = PolyMap::zero(k, k);
    // monoid structure on E = R^k
    PolyMap const mu
        = compose(compose(block_map(k, 2, {npos, 0, 1}), add), principal_projection(k));
    PolyMap const eta = PolyMap::zero(0, k);
    PolyMap const pi1 = block_map(k, 2, {0});
    PolyMap const pi2 = block_map(k, 2, {1});
    PolyMap const Tmu = tangent_of_map(mu);
    // T(E x E) = (e1, e2, t1, t2)
    PolyMap const Tpi1 = tangent_of_map(pi1);
    PolyMap const Tpi2 = tangent_of_map(pi2);
    PolyMap const nu
        = compose(block_map(k, 2, {npos, 1, 0, npos}), Tmu);  // <pi1 lam, pi2 0>
    PolyMap const nu_inv     = pairing(phat, p);
    PolyMap const lam_x_lam  = block_map(k, 2, {npos, npos, 0, 1});
    PolyMap const lam_pair_p = pair_over_p(compose(pi1, lam), compose(pi2, lam), k);

    std::vector<Equation> defn
        = {{"lambda;p = 0", compose(lam, p), zeroE},
           {"eta;lambda = eta;0", compose(eta, lam), compose(eta, z)},
           {"mu;lambda = <pi1 lambda, pi2 lambda>;+", compose(mu, lam), compose(lam_pair_p, add)},
           {"mu;lambda = (lambda x lambda);T(mu)", compose(mu, lam), compose(lam_x_lam, Tmu)},
           {"eta;lambda = T(eta)", compose(eta, lam), tangent_of_map(eta)},
           {"lambda;T(lambda) = lambda;ell", compose(lam, tangent_of_map(lam)), compose(lam, ell)},
           {"nu;<p_hat,p> = 1", compose(nu, nu_inv), PolyMap::identity(2 * k)},
           {"<p_hat,p>;nu = 1", compose(nu_inv, nu), PolyMap::identity(2 * k)}};

    std::vector<Equation> props
        = {{"(i) T(mu);p_hat = <Tpi1;p_hat, Tpi2;p_hat>;mu",
            compose(Tmu, phat),
            compose(pairing(compose(Tpi1, phat), compose(Tpi2, phat)), mu)},
           {"(i) T(eta);p_hat = 0", compose(tangent_of_map(eta), phat), PolyMap::zero(0, k)},
           {"(ii) lambda;p_hat = 1", compose(lam, phat), PolyMap::identity(k)},
           {"(iii) 0;p_hat = 0", compose(z, phat), zeroE},
           {"(iv) ell;T(p_hat);p_hat = p_hat", compose(compose(ell, Tphat), phat), phat},
           {"(v) c;T(p_hat);p_hat = T(p_hat);p_hat",
            compose(compose(c, Tphat), phat),
            compose(Tphat, phat)},
           {"(vi) ell;T(p_hat) = p_hat;lambda", compose(ell, Tphat), compose(phat, lam)},
           {"(vii) T(lambda);c;T(p_hat) = p_hat;lambda",
            compose(compose(tangent_of_map(lam), c), Tphat),
            compose(phat, lam)}};

    std::vector<AxiomReport> reports;
    for (auto const& [name, eqs] :
         {std::pair{"differential-object", &defn}, std::pair{"principal-projection", &props}}) {
      AxiomReport rep{name, 0, 0, {}};
      for (auto const& eq : *eqs) {
        record(rep, "at R^" + std::to_string(k), eq);
      }
      reports.push_back(std::move(rep));
    }
    return reports;
  }

}  // namespace sf
