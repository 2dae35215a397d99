#include "sectorform/linalg.hpp"

#include <iterator>

#include "sectorform/error.hpp"

namespace sf {

  void axpy(SparseVec& v, Rational const& c, SparseVec const& w) {
    if (c == 0) {
      return;
    }
    for (auto const& [k, x] : w) {
      auto [it, inserted] = v.try_emplace(k, c * x);
      if (!inserted) {
        it->second += c * x;
        if (it->second == 0) {
          v.erase(it);
        }
      }
    }
  }

  bool Echelon::insert(SparseVec v) {
    SparseVec combo;
    if (_track) {
      combo.emplace(_inserted, 1);
    }
    ++_inserted;
    auto it = v.begin();
    while (it != v.end()) {
      auto row = _rows.find(it->first);
      if (row == _rows.end()) {
        ++it;
        continue;
      }
      std::size_t const key = it->first;
      Rational const    c   = -it->second;
      axpy(v, c, row->second.vec);
      if (_track) {
        axpy(combo, c, row->second.combo);
      }
      // keys below the pivot are untouched
      it = v.lower_bound(key);
    }
    if (v.empty()) {
      if (_track) {
        _kernel.push_back(std::move(combo));
      }
      return false;
    }
    Rational const lead = v.begin()->second;
    if (lead != 1) {
      Rational const inv = 1 / lead;
      for (auto& [k, x] : v) {
        x *= inv;
      }
      for (auto& [k, x] : combo) {
        x *= inv;
      }
    }
    std::size_t const pivot = v.begin()->first;
    _rows.emplace(pivot, Row{std::move(v), std::move(combo)});
    return true;
  }

  SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = _rows.find(it->first);
      if (row == _rows.end()) {
        ++it;
        continue;
      }
      std::size_t const key = it->first;
      axpy(v, -it->second, row->second.vec);
      it = v.lower_bound(key);
    }
    return v;
  }

  std::vector<SparseVec> Echelon::reduced_basis() const {
    std::vector<SparseVec> out;
    out.reserve(_rows.size());
    // back substitution from the last pivot
    std::map<std::size_t, SparseVec> done;
    for (auto it = _rows.rbegin(); it != _rows.rend(); ++it) {
      SparseVec v = it->second.vec;
      for (auto jt = std::next(v.begin()); jt != v.end();) {
        auto d = done.find(jt->first);
        if (d == done.end()) {
          ++jt;
          continue;
        }
        std::size_t const key = jt->first;
        axpy(v, -jt->second, d->second);
        jt = v.upper_bound(key);
      }
      done.emplace(it->first, std::move(v));
    }
    for (auto& [pivot, v] : done) {
      out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t rank(Matrix const& a) {
    Echelon e;
    for (auto const& row : a) {
      SparseVec v;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) {
          v.emplace(j, row[j]);
        }
      }
      e.insert(std::move(v));
    }
    return e.rank();
  }

  Matrix multiply(Matrix const& a, Matrix const& b) {
    std::size_t const inner = b.size();
    std::size_t const cols  = b.empty() ? 0 : b[0].size();
    Matrix            c(a.size(), std::vector<Rational>(cols, 0));
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a[r].size() != inner) {
        fail(ErrorCode::dimension, "matrix shapes do not match");
      }
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[r][k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
          c[r][j] += a[r][k] * b[k][j];
        }
      }
    }
    return c;
  }

}  // namespace sf
