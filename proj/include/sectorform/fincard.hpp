#pragma once

// Finite cardinals and the maps between them, the generators epsilon / delta /
// sigma of the symmetric cosimplicial presentation, words in those generators,
// and exhaustive checking of the relation families.
//
// Elements of the cardinal n are 1, ..., n in every public interface that
// takes or returns element values (FinMap::of, FinMap::operator(), JSON).
// The table is stored 0-based.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace sf {

  class FinMap {
   public:
    FinMap() = default;

    // `table0[x]` is the 0-based image of the 0-based element x.
    FinMap(std::size_t cod, std::vector<std::uint32_t> table0);

    // 1-based convenience constructor: FinMap::of(2, {1, 1, 2}) is 3 -> 2.
    static FinMap of(std::size_t cod, std::initializer_list<std::uint32_t> table1);
    static FinMap of(std::size_t cod, std::vector<std::uint32_t> const& table1);

    static FinMap identity(std::size_t n);

    std::size_t dom() const noexcept {
      return _table.size();
    }
    std::size_t cod() const noexcept {
      return _cod;
    }

    // 1-based evaluation.
    std::uint32_t operator()(std::uint32_t x) const;

    std::vector<std::uint32_t> const& table0() const noexcept {
      return _table;
    }
    std::vector<std::uint32_t> table1() const;

    bool operator==(FinMap const&) const = default;

   private:
    std::size_t                _cod = 0;
    std::vector<std::uint32_t> _table;
  };

  std::ostream& operator<<(std::ostream&, FinMap const&);

  // Diagrammatic composite f;g (apply f first).
  FinMap compose(FinMap const& f, FinMap const& g);

  // f + g: the first block maps via f, the second via g shifted by f.cod().
  FinMap monoidal_sum(FinMap const& f, FinMap const& g);

  struct Classification {
    bool surjective;
    bool bijective;
    bool order_preserving;
    bool injective;

    bool operator==(Classification const&) const = default;
  };

  Classification classify(FinMap const& f);

  enum class GenKind : std::uint8_t { epsilon, delta, sigma };

  char const* to_string(GenKind);

  // epsilon^n_i : n+1 -> n (1 <= i <= n)
  // delta^n_i   : n -> n+1 (1 <= i <= n+1)
  // sigma^n_i   : n -> n   (1 <= i <= n-1)
  struct Generator {
    GenKind     kind;
    std::size_t n;
    std::size_t i;

    std::size_t dom() const noexcept;
    std::size_t cod() const noexcept;
    bool        valid() const noexcept;

    bool operator==(Generator const&) const = default;
  };

  Generator epsilon(std::size_t n, std::size_t i);
  Generator delta(std::size_t n, std::size_t i);
  Generator sigma(std::size_t n, std::size_t i);

  std::ostream& operator<<(std::ostream&, Generator const&);

  FinMap generator_map(Generator const& g);

  class GenWord {
   public:
    GenWord() = default;
    // Throws ErrorCode::word unless the generators compose from dom to cod.
    GenWord(std::size_t dom, std::size_t cod, std::vector<Generator> gens);

    static GenWord identity(std::size_t n) {
      return GenWord(n, n, {});
    }

    std::size_t dom() const noexcept {
      return _dom;
    }
    std::size_t cod() const noexcept {
      return _cod;
    }
    std::vector<Generator> const& gens() const noexcept {
      return _gens;
    }
    bool empty() const noexcept {
      return _gens.empty();
    }

    bool operator==(GenWord const&) const = default;

   private:
    std::size_t            _dom = 0;
    std::size_t            _cod = 0;
    std::vector<Generator> _gens;
  };

  std::ostream& operator<<(std::ostream&, GenWord const&);

  // Composable chain of generators starting at cardinal `dom`; the level of
  // each generator is inferred from the running cardinal.
  struct Step {
    GenKind     kind;
    std::size_t i;
  };
  GenWord chain(std::size_t dom, std::initializer_list<Step> steps);
  GenWord chain(std::size_t dom, std::vector<Step> const& steps);

  using Realizer = std::function<FinMap(Generator const&)>;

  FinMap eval_word(GenWord const& w);
  FinMap eval_word(GenWord const& w, Realizer const& realize);

  // sigma^n_(i) = (i (i-1) ... 2 1) in cycle notation.
  FinMap sigma_cycle(std::size_t n, std::size_t i);

  // The word sigma_1 ; sigma_2 ; ... ; sigma_{i-1} at cardinal n.
  GenWord sigma_cycle_word(std::size_t n, std::size_t i);

  // alpha^n_j = sigma^{n+1}_(j) ; epsilon^n_j : n+1 -> n.
  FinMap alpha(std::size_t n, std::size_t j);

  // Permutation (adjacent transpositions) followed by an order-preserving
  // surjection (codegeneracies).
  GenWord factor_surjection(FinMap const& f);

  // Surjection onto the image followed by cofaces, each coface rewritten as
  // delta_1 ; sigma_(i). Only epsilon, sigma and delta with i = 1 occur.
  GenWord factor_map(FinMap const& f);

  // Both sides of one instance of a relation family.
  struct RelationInstance {
    std::string family;
    GenWord     lhs;
    GenWord     rhs;
  };

  std::vector<std::string> const& relation_families();

  // Every instance of every family whose generators have level at most
  // max_n (and at least the smallest level where the family is non-vacuous).
  std::vector<RelationInstance> relation_instances(std::size_t max_n);

  struct RelationFailure {
    GenWord lhs;
    GenWord rhs;
    FinMap  lhs_map;
    FinMap  rhs_map;
  };

  struct RelationReport {
    std::string                  family;
    std::size_t                  bound;
    std::size_t                  checked = 0;
    std::vector<RelationFailure> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  // One report per family in the order of relation_families(). Instances
  // may be split across `jobs` threads; the merged report is identical for
  // every job count.
  std::vector<RelationReport> check_relations(std::size_t max_n,
                                              std::size_t jobs = 1);
  std::vector<RelationReport> check_relations(std::size_t     max_n,
                                              Realizer const& realize,
                                              std::size_t     jobs = 1);

  // All maps / surjections dom -> cod, in lexicographic table order.
  std::vector<FinMap> all_maps(std::size_t dom, std::size_t cod);
  std::vector<FinMap> all_surjections(std::size_t dom, std::size_t cod);

}  // namespace sf
