#pragma once

// Exact sparse linear algebra over the rationals.

#include <cstddef>
#include <map>
#include <vector>

#include "sectorform/poly.hpp"

namespace sf {

  using SparseVec = std::map<std::size_t, Rational>;

  // v += c * w
  void axpy(SparseVec& v, Rational const& c, SparseVec const& w);

  // Incremental row echelon form. Each stored row has leading coefficient 1
  // at its pivot, the smallest key of the row.
  class Echelon {
   public:
    // With `track`, every inserted vector is labelled by its insertion
    // number, and each vector that reduces to zero yields a kernel relation:
    // a combination of labels summing to zero.
    explicit Echelon(bool track = false) : _track(track) {}

    // True iff v was independent of the rows so far.
    bool insert(SparseVec v);

    // Reduces v against the rows; v lies in the span iff the result is empty.
    SparseVec reduce(SparseVec v) const;
    bool      contains(SparseVec const& v) const {
      return reduce(v).empty();
    }

    std::size_t rank() const noexcept {
      return _rows.size();
    }
    std::vector<SparseVec> const& kernel() const noexcept {
      return _kernel;
    }

    // Reduced row echelon basis of the span, ordered by pivot.
    std::vector<SparseVec> reduced_basis() const;

   private:
    struct Row {
      SparseVec vec;
      SparseVec combo;
    };

    bool                       _track;
    std::size_t                _inserted = 0;
    std::map<std::size_t, Row> _rows;  // keyed by pivot
    std::vector<SparseVec>     _kernel;
  };

  // Dense exact matrices for the small coordinate computations.
  using Matrix = std::vector<std::vector<Rational>>;

  std::size_t rank(Matrix const& a);
  Matrix      multiply(Matrix const& a, Matrix const& b);

}  // namespace sf
