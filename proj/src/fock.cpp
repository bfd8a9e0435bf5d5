#include "vdw/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdw {

FockSpace::FockSpace(int n_oscillators, int n_max)
    : n_oscillators_(n_oscillators), n_max_(n_max), dimension_(1) {
  if (n_oscillators < 1)
    throw std::invalid_argument("FockSpace: need at least one oscillator");
  if (n_max < 1)
    throw std::invalid_argument("FockSpace: n_max must be >= 1");
  stride_.assign(n_oscillators, 0);
  for (int k = n_oscillators - 1; k >= 0; --k) {
    stride_[k] = dimension_;
    dimension_ *= static_cast<std::size_t>(n_max + 1);
    if (dimension_ > max_dimension)
      throw std::invalid_argument("FockSpace: dimension exceeds 1e6");
  }
}

std::size_t FockSpace::index(std::span<const int> occupations) const {
  if (occupations.size() != static_cast<std::size_t>(n_oscillators_))
    throw std::invalid_argument("FockSpace::index: wrong number of occupations");
  std::size_t idx = 0;
  for (int k = 0; k < n_oscillators_; ++k) {
    if (occupations[k] < 0 || occupations[k] > n_max_)
      throw std::out_of_range("FockSpace::index: occupation out of range");
    idx += stride_[k] * static_cast<std::size_t>(occupations[k]);
  }
  return idx;
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  std::vector<int> occ(n_oscillators_);
  for (int k = 0; k < n_oscillators_; ++k)
    occ[k] = occupation(index, k);
  return occ;
}

int FockSpace::occupation(std::size_t index, int oscillator) const {
  return static_cast<int>((index / stride_[oscillator]) %
                          static_cast<std::size_t>(n_max_ + 1));
}

FockOperator::FockOperator(const FockSpace &space, std::vector<Triplet> entries)
    : space_(space) {
  const std::size_t dim = space.dimension();
  std::sort(entries.begin(), entries.end(), [](const auto &x, const auto &y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) <
           std::tie(std::get<0>(y), std::get<1>(y));
  });
  row_start_.assign(dim + 1, 0);
  for (std::size_t i = 0; i < entries.size();) {
    const auto [row, col, first] = entries[i];
    if (row >= dim || col >= dim)
      throw std::out_of_range("FockOperator: entry outside the space");
    double sum = first;
    std::size_t j = i + 1;
    for (; j < entries.size() && std::get<0>(entries[j]) == row &&
           std::get<1>(entries[j]) == col;
         ++j)
      sum += std::get<2>(entries[j]);
    if (sum != 0.0) {
      columns_.push_back(col);
      values_.push_back(sum);
      ++row_start_[row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < dim; ++r)
    row_start_[r + 1] += row_start_[r];
}

FockOperator FockOperator::zero(const FockSpace &space) { return {space, {}}; }

FockOperator FockOperator::identity(const FockSpace &space) {
  std::vector<Triplet> t;
  t.reserve(space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i)
    t.emplace_back(i, i, 1.0);
  return {space, std::move(t)};
}

namespace {
void check_oscillator(const FockSpace &space, int oscillator) {
  if (oscillator < 0 || oscillator >= space.n_oscillators())
    throw std::out_of_range("FockOperator: no such oscillator");
}
} // namespace

FockOperator FockOperator::annihilation(const FockSpace &space, int oscillator) {
  check_oscillator(space, oscillator);
  std::vector<Triplet> t;
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    auto occ = space.occupations(col);
    const int n = occ[oscillator];
    if (n == 0)
      continue;
    occ[oscillator] = n - 1;
    t.emplace_back(space.index(occ), col, std::sqrt(static_cast<double>(n)));
  }
  return {space, std::move(t)};
}

FockOperator FockOperator::creation(const FockSpace &space, int oscillator) {
  return annihilation(space, oscillator).transpose();
}

FockOperator FockOperator::number(const FockSpace &space, int oscillator) {
  check_oscillator(space, oscillator);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < space.dimension(); ++i)
    t.emplace_back(i, i, space.occupation(i, oscillator));
  return {space, std::move(t)};
}

FockOperator FockOperator::position(const FockSpace &space, int oscillator) {
  const auto a = annihilation(space, oscillator);
  return (1.0 / std::sqrt(2.0)) * (a + a.transpose());
}

double FockOperator::at(std::size_t row, std::size_t col) const {
  const auto begin = columns_.begin() + row_start_.at(row);
  const auto end = columns_.begin() + row_start_.at(row + 1);
  const auto it = std::lower_bound(begin, end, col);
  return (it != end && *it == col) ? values_[it - columns_.begin()] : 0.0;
}

std::vector<double> FockOperator::apply(std::span<const double> v) const {
  if (v.size() != dimension())
    throw std::invalid_argument("FockOperator::apply: size mismatch");
  std::vector<double> out(dimension(), 0.0);
  for (std::size_t r = 0; r < dimension(); ++r) {
    double acc = 0.0;
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
      acc += values_[k] * v[columns_[k]];
    out[r] = acc;
  }
  return out;
}

double FockOperator::row_dot(std::size_t row,
                             std::span<const double> v) const {
  if (v.size() != dimension())
    throw std::invalid_argument("FockOperator::row_dot: size mismatch");
  double acc = 0.0;
  for (std::size_t k = row_start_.at(row); k < row_start_[row + 1]; ++k)
    acc += values_[k] * v[columns_[k]];
  return acc;
}

bool FockOperator::is_diagonal() const {
  for (std::size_t r = 0; r < dimension(); ++r)
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
      if (columns_[k] != r)
        return false;
  return true;
}

std::vector<double> FockOperator::diagonal() const {
  std::vector<double> d(dimension(), 0.0);
  for (std::size_t r = 0; r < dimension(); ++r)
    d[r] = at(r, r);
  return d;
}

bool FockOperator::is_symmetric(double tol) const {
  for (std::size_t r = 0; r < dimension(); ++r)
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
      if (std::abs(values_[k] - at(columns_[k], r)) > tol)
        return false;
  return true;
}

std::vector<FockOperator::Triplet> FockOperator::triplets() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (std::size_t r = 0; r < dimension(); ++r)
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k)
      t.emplace_back(r, columns_[k], values_[k]);
  return t;
}

FockOperator FockOperator::transpose() const {
  auto t = triplets();
  for (auto &[r, c, v] : t)
    std::swap(r, c);
  return {space_, std::move(t)};
}

namespace {
void check_same_space(const FockOperator &a, const FockOperator &b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("FockOperator: operands live on different spaces");
}
} // namespace

FockOperator operator+(const FockOperator &a, const FockOperator &b) {
  check_same_space(a, b);
  auto t = a.triplets();
  auto tb = b.triplets();
  t.insert(t.end(), tb.begin(), tb.end());
  return {a.space_, std::move(t)};
}

FockOperator operator-(const FockOperator &a, const FockOperator &b) {
  return a + (-1.0) * b;
}

FockOperator operator*(double s, const FockOperator &a) {
  auto t = a.triplets();
  for (auto &entry : t)
    std::get<2>(entry) *= s;
  return {a.space_, std::move(t)};
}

FockOperator operator*(const FockOperator &a, const FockOperator &b) {
  check_same_space(a, b);
  std::vector<FockOperator::Triplet> t;
  for (std::size_t r = 0; r < a.dimension(); ++r)
    for (std::size_t k = a.row_start_[r]; k < a.row_start_[r + 1]; ++k) {
      const std::size_t mid = a.columns_[k];
      for (std::size_t l = b.row_start_[mid]; l < b.row_start_[mid + 1]; ++l)
        t.emplace_back(r, b.columns_[l], a.values_[k] * b.values_[l]);
    }
  return {a.space_, std::move(t)};
}

} // namespace vdw
