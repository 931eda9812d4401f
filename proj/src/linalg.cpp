#include "finst/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "finst/errors.hpp"
#include "finst/modp.hpp"

namespace finst::linalg {

namespace {

// a - f * b, both sorted.
SparseRow sub_scaled(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t to_mod_p(const Rational& q, bool& ok) {
  const unsigned long p = static_cast<unsigned long>(modp::kPrime);
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    ok = false;
    return 0;
  }
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return modp::mul(num, modp::inverse(den));
}

}  // namespace

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= data_.size() || c >= cols_) throw std::out_of_range("SparseMatrix::add");
  if (sgn(v) == 0) return;
  SparseRow& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (sgn(it->second) == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const SparseRow& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

std::size_t SparseMatrix::nonzeros() const {
  return std::accumulate(data_.begin(), data_.end(), std::size_t{0},
                         [](std::size_t n, const SparseRow& r) { return n + r.size(); });
}

void SparseMatrix::append_rows(const SparseMatrix& below) {
  if (below.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : a.row(r))
      for (const auto& [c, w] : b.row(k)) acc[c] += v * w;
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) out.data_[r].emplace_back(c, v);
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.cols_ == b.cols_ && a.data_ == b.data_; }

std::size_t rank(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m.row(x).size() < m.row(y).size(); });

  // Leading column -> pivot row with leading coefficient 1.
  std::map<std::size_t, SparseRow> pivots;
  for (std::size_t r : order) {
    SparseRow row = m.row(r);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Rational f = row.front().second;
      row = sub_scaled(row, f, it->second);
    }
    if (row.empty()) continue;
    Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    std::size_t col = row.front().first;
    pivots.emplace(col, std::move(row));
  }
  return pivots.size();
}

std::optional<std::size_t> rank_mod_p(const SparseMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> dense(rows * cols, 0);
  bool ok = true;
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : m.row(r)) dense[r * cols + c] = to_mod_p(v, ok);
  if (!ok) return std::nullopt;

  auto row_span = [&](std::size_t r) { return std::span<std::uint64_t>(dense.data() + r * cols, cols); };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && dense[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap_ranges(row_span(piv).begin(), row_span(piv).end(), row_span(rank).begin());
    modp::scale(row_span(rank), modp::inverse(dense[rank * cols + c]));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t x = dense[r * cols + c];
      if (x != 0) modp::axpy(row_span(r), row_span(rank), modp::kPrime - x);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_left(const SparseMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.cols()) throw std::invalid_argument("solve_left: right-hand side has wrong length");
  // Transposed augmented system: one equation per column of A.
  const std::size_t n = a.rows();
  const std::size_t eqs = a.cols();
  std::vector<std::vector<Rational>> aug(eqs, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : a.row(r)) aug[c][r] = v;
  for (std::size_t c = 0; c < eqs; ++c) aug[c][n] = b[c];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < eqs; ++col) {
    std::size_t piv = row;
    while (piv < eqs && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == eqs) continue;
    std::swap(aug[piv], aug[row]);
    Rational lead = aug[row][col];
    for (std::size_t k = col; k <= n; ++k) aug[row][k] /= lead;
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || sgn(aug[r][col]) == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t k = col; k <= n; ++k)
        if (sgn(aug[row][k]) != 0) aug[r][k] -= f * aug[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < eqs; ++r)
    if (sgn(aug[r][n]) != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][n];
  return x;
}

}  // namespace finst::linalg
