#include "prerad/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace prerad {

namespace {

class Reducer {
 public:
  Reducer(IntMatrix a, std::size_t cols) : a_(std::move(a)), rows_(a_.size()), cols_(cols) {
    v_.assign(cols, std::vector<long long>(cols, 0));
    vinv_ = v_;
    for (std::size_t i = 0; i < cols; ++i) v_[i][i] = vinv_[i][i] = 1;
  }

  SmithForm run() {
    const std::size_t steps = std::min(rows_, cols_);
    std::vector<long long> diag(cols_, 0);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!bring_pivot(t)) break;
      while (true) {
        clear_cross(t);
        // Divisibility: fold an offending row into row t and clear again.
        std::size_t bad_row = rows_;
        for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_[i][j] % a_[t][t] != 0) {
              bad_row = i;
              break;
            }
        if (bad_row == rows_) break;
        for (std::size_t j = t; j < cols_; ++j) a_[t][j] += a_[bad_row][j];
      }
      if (a_[t][t] < 0) negate_column(t);
      diag[t] = a_[t][t];
    }
    return SmithForm{std::move(diag), std::move(v_), std::move(vinv_)};
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool bring_pivot(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (a_[i][j] != 0 && (bi == rows_ || std::llabs(a_[i][j]) < std::llabs(a_[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows_) return false;
    std::swap(a_[t], a_[bi]);
    swap_columns(t, bj);
    return true;
  }

  void clear_cross(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        const long long q = a_[i][t] / a_[t][t];
        for (std::size_t j = t; j < cols_; ++j) a_[i][j] -= q * a_[t][j];
        if (a_[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        const long long q = a_[t][j] / a_[t][t];
        add_column_multiple(j, t, -q);
        if (a_[t][j] != 0) dirty = true;
      }
      if (dirty) bring_pivot(t);
    }
  }

  // col_dst += k * col_src, mirrored into V and V^-1.
  void add_column_multiple(std::size_t dst, std::size_t src, long long k) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][dst] += k * a_[i][src];
    for (std::size_t i = 0; i < cols_; ++i) v_[i][dst] += k * v_[i][src];
    for (std::size_t j = 0; j < cols_; ++j) vinv_[src][j] -= k * vinv_[dst][j];
  }

  void swap_columns(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a_) std::swap(row[x], row[y]);
    for (auto& row : v_) std::swap(row[x], row[y]);
    std::swap(vinv_[x], vinv_[y]);
  }

  void negate_column(std::size_t x) {
    for (auto& row : a_) row[x] = -row[x];
    for (auto& row : v_) row[x] = -row[x];
    for (auto& e : vinv_[x]) e = -e;
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix v_;
  IntMatrix vinv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t columns) { return Reducer(std::move(a), columns).run(); }

}  // namespace prerad
