#pragma once

// Exact linear algebra over Q, plus a mod-p rank used only as a pre-screen.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "finst/chow.hpp"

namespace finst::linalg {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column, no zeros

/// Row-major sparse matrix with exact rational entries.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const SparseRow& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  /// Stacks the rows of `below` under this matrix; column counts must agree.
  void append_rows(const SparseMatrix& below);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Exact rank over Q.
std::size_t rank(const SparseMatrix& m);

/// Rank over F_p for p = 2^31 - 1 after reducing entries; never exceeds the
/// rational rank. nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_p(const SparseMatrix& m);

/// Solves x * A = b (row-vector convention, x has A.rows() entries).
/// Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_left(const SparseMatrix& a, const std::vector<Rational>& b);

}  // namespace finst::linalg
