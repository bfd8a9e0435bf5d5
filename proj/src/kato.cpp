#include "vdw/kato.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdw {

namespace {

FockOperator unperturbed(const FockSpace &space) {
  auto h0 = FockOperator::zero(space);
  for (int k = 0; k < space.n_oscillators(); ++k)
    h0 = h0 + FockOperator::number(space, k);
  return h0;
}

CoupledPair build_channels(double g, int n_max, std::span<const double> weights) {
  if (n_max < 2)
    throw std::invalid_argument("build_coupled_pair: n_max must be >= 2");
  if (!(g >= 0.0) || !std::isfinite(g))
    throw std::invalid_argument("build_coupled_pair: coupling must be >= 0");
  const int channels = static_cast<int>(weights.size());
  const FockSpace space(2 * channels, n_max);
  auto hint = FockOperator::zero(space);
  for (int c = 0; c < channels; ++c) {
    const auto xa = FockOperator::position(space, c);
    const auto xb = FockOperator::position(space, channels + c);
    hint = hint + (g * weights[c]) * (xa * xb);
  }
  return {unperturbed(space), hint};
}

// Diagonal of H0 and the index of its vacuum.
struct Spectrum {
  std::vector<double> levels;
  std::size_t vacuum;
};

Spectrum unperturbed_spectrum(const FockOperator &h0) {
  if (!h0.is_diagonal())
    throw std::invalid_argument("H0 must be diagonal in the Fock basis");
  auto levels = h0.diagonal();
  const auto it = std::min_element(levels.begin(), levels.end());
  if (*it != 0.0)
    throw std::invalid_argument("H0 ground eigenvalue must be exactly zero");
  const std::size_t vacuum = static_cast<std::size_t>(it - levels.begin());
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (i != vacuum && levels[i] <= 0.0)
      throw std::invalid_argument("H0 ground state must be nondegenerate");
  return {std::move(levels), vacuum};
}

// v <- S^k v, in place.
void apply_s(const Spectrum &spec, int k, std::vector<double> &v) {
  if (k == 0) {
    const double amplitude = v[spec.vacuum];
    std::fill(v.begin(), v.end(), 0.0);
    v[spec.vacuum] = -amplitude;
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (i == spec.vacuum) ? 0.0 : v[i] / std::pow(spec.levels[i], k);
}

// <0| V S^{k_1} V ... S^{k_m} V |0>
double chain(const Spectrum &spec, const FockOperator &hint,
             std::span<const int> ks) {
  std::vector<double> v(hint.dimension(), 0.0);
  v[spec.vacuum] = 1.0;
  v = hint.apply(v);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    apply_s(spec, *it, v);
    if (it + 1 == ks.rend())
      return hint.row_dot(spec.vacuum, v);
    v = hint.apply(v);
  }
  return v[spec.vacuum]; // no S factors: <0|V|0>
}

void check_pair(const FockOperator &h0, const FockOperator &hint) {
  if (!(h0.space() == hint.space()))
    throw std::invalid_argument("H0 and Hint live on different Fock spaces");
}

} // namespace

CoupledPair build_coupled_pair(double g, int n_max) {
  const double single[] = {1.0};
  return build_channels(g, n_max, single);
}

CoupledPair build_three_channel_pair(double g, int n_max) {
  const double weights[] = {-1.0, -1.0, 2.0};
  return build_channels(g, n_max, weights);
}

FockOperator s_operator(const FockOperator &h0, int k) {
  if (k < 0)
    throw std::invalid_argument("s_operator: k must be >= 0");
  const auto spec = unperturbed_spectrum(h0);
  std::vector<FockOperator::Triplet> t;
  if (k == 0) {
    t.emplace_back(spec.vacuum, spec.vacuum, -1.0);
  } else {
    for (std::size_t i = 0; i < spec.levels.size(); ++i)
      if (i != spec.vacuum)
        t.emplace_back(i, i, 1.0 / std::pow(spec.levels[i], k));
  }
  return {h0.space(), std::move(t)};
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  if (total < 0 || parts < 0)
    throw std::invalid_argument("compositions: negative argument");
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0)
      out.emplace_back();
    return out;
  }
  // Stars and bars, lexicographic: (0,..,0,total) up to (total,0,..,0).
  std::vector<int> ks(parts, 0);
  ks.back() = total;
  while (true) {
    out.push_back(ks);
    if (parts == 1)
      break;
    if (ks.back() > 0) {
      ++ks[parts - 2];
      --ks.back();
      continue;
    }
    int j = parts - 2;
    while (j >= 0 && ks[j] == 0)
      --j;
    if (j <= 0)
      break;
    ks.back() = ks[j] - 1;
    ks[j] = 0;
    ++ks[j - 1];
  }
  return out;
}

std::vector<KatoTerm> kato_terms(const FockOperator &h0,
                                 const FockOperator &hint, int n) {
  if (n < 1)
    throw std::invalid_argument("kato_terms: order must be >= 1");
  check_pair(h0, hint);
  const auto spec = unperturbed_spectrum(h0);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^(n-1)
  std::vector<KatoTerm> terms;
  for (auto &ks : compositions(n - 1, n - 1)) {
    const auto zeros = std::count(ks.begin(), ks.end(), 0);
    KatoTerm term;
    term.value = chain(spec, hint, ks);
    term.weight = sign / static_cast<double>(1 + zeros);
    term.ks = std::move(ks);
    terms.push_back(std::move(term));
  }
  return terms;
}

double kato_energy_coefficient(const FockOperator &h0, const FockOperator &hint,
                               int n) {
  double sum = 0.0;
  for (const auto &term : kato_terms(h0, hint, n))
    sum += term.weight * term.value;
  return sum;
}

FourthOrderCheck verify_fourth_order_subtraction(const FockOperator &h0,
                                                 const FockOperator &hint) {
  check_pair(h0, hint);
  const auto spec = unperturbed_spectrum(h0);
  const int three_ones[] = {1, 1, 1};
  const int one[] = {1};
  const int two[] = {2};
  FourthOrderCheck out{};
  out.direct = kato_energy_coefficient(h0, hint, 4);
  out.chained = -chain(spec, hint, three_ones);
  out.subtraction = -chain(spec, hint, one) * chain(spec, hint, two);
  return out;
}

} // namespace vdw
