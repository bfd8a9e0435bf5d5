#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace vdw {

/// Occupation-number basis of `n_oscillators` modes, each truncated at
/// `n_max` quanta. States are enumerated lexicographically in the occupation
/// tuple, the first oscillator being the most significant digit.
class FockSpace {
public:
  static constexpr std::size_t max_dimension = 1000000;

  /// Throws std::invalid_argument if n_oscillators < 1, n_max < 1, or the
  /// dimension (n_max+1)^n_oscillators exceeds max_dimension.
  FockSpace(int n_oscillators, int n_max);

  int n_oscillators() const { return n_oscillators_; }
  int n_max() const { return n_max_; }
  std::size_t dimension() const { return dimension_; }

  std::size_t index(std::span<const int> occupations) const;
  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, int oscillator) const;

  bool operator==(const FockSpace &) const = default;

private:
  int n_oscillators_;
  int n_max_;
  std::size_t dimension_;
  std::vector<std::size_t> stride_;
};

/// Sparse real operator on a FockSpace, stored in compressed-row form.
class FockOperator {
public:
  using Triplet = std::tuple<std::size_t, std::size_t, double>;

  /// Duplicate entries are summed; exact zeros are dropped.
  FockOperator(const FockSpace &space, std::vector<Triplet> entries);

  static FockOperator zero(const FockSpace &space);
  static FockOperator identity(const FockSpace &space);
  static FockOperator annihilation(const FockSpace &space, int oscillator);
  static FockOperator creation(const FockSpace &space, int oscillator);
  static FockOperator number(const FockSpace &space, int oscillator);
  /// Dimensionless coordinate (a + a^dagger) / sqrt(2).
  static FockOperator position(const FockSpace &space, int oscillator);

  const FockSpace &space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  std::size_t nonzeros() const { return values_.size(); }

  double at(std::size_t row, std::size_t col) const;
  std::vector<double> apply(std::span<const double> v) const;
  /// <row| O |v>
  double row_dot(std::size_t row, std::span<const double> v) const;

  bool is_diagonal() const;
  std::vector<double> diagonal() const;
  bool is_symmetric(double tol = 0.0) const;
  FockOperator transpose() const;

  friend FockOperator operator+(const FockOperator &a, const FockOperator &b);
  friend FockOperator operator-(const FockOperator &a, const FockOperator &b);
  friend FockOperator operator*(double s, const FockOperator &a);
  friend FockOperator operator*(const FockOperator &a, const FockOperator &b);

private:
  std::vector<Triplet> triplets() const;

  FockSpace space_;
  std::vector<std::size_t> row_start_;
  std::vector<std::size_t> columns_;
  std::vector<double> values_;
};

} // namespace vdw
