#pragma once

// Rayleigh-Schroedinger vacuum-energy coefficients from the resolvent
// (Kato) expansion, on truncated Fock spaces.
//
// With H(lambda) = H0 + lambda V, H0 diagonal with a nondegenerate zero
// ground state |0>, P = |0><0|, Q = 1 - P and S^0 = -P, S^k = Q H0^-k Q,
// the order-n coefficient is
//
//   E(n) = (-1)^(n-1) sum_{k_1+...+k_{n-1} = n-1}
//            <0| V S^{k_1} V ... S^{k_{n-1}} V |0> / (1 + #{i : k_i = 0}).
//
// The sign collects the -1 carried by every regular term of the Laurent
// series of (z - H0)^-1. The weight removes the overcounting of disconnected
// vacuum-to-vacuum pieces: a term with z inner projectors is the same trace
// cut open at each of its z + 1 projectors. At fourth order with <0|V|0> = 0
// this reduces to
//
//   E(4) = <0|V R V R V R V> - <0|V R V><0|V R^2 V>,   R = -S^1,
//
// the chained term minus a single subtraction.

#include "vdw/fock.hpp"

#include <vector>

namespace vdw {

struct CoupledPair {
  FockOperator h0;
  FockOperator hint;
};

/// One Cartesian channel: oscillators (A, B), H0 = n_A + n_B and
/// Hint = g x_A x_B with x = (a + a^dagger)/sqrt(2), in units of hbar*omega.
/// Throws std::invalid_argument if n_max < 2 or g < 0.
CoupledPair build_coupled_pair(double g, int n_max);

/// Three Cartesian channels per atom: oscillators (A_x, A_y, A_z, B_x, B_y,
/// B_z) and Hint = g sum_c w_c x_{A,c} x_{B,c} with w = (-1, -1, 2).
CoupledPair build_three_channel_pair(double g, int n_max);

/// S^0 = -P for k = 0, otherwise the diagonal Q H0^-k Q.
/// Throws std::invalid_argument unless H0 is diagonal with a unique zero
/// minimum, or if k < 0.
FockOperator s_operator(const FockOperator &h0, int k);

/// Compositions of `total` into `parts` nonnegative entries, in
/// lexicographic order. parts == 0 yields one empty composition iff total == 0.
std::vector<std::vector<int>> compositions(int total, int parts);

struct KatoTerm {
  std::vector<int> ks;   ///< exponents k_1 .. k_{n-1}
  double value = 0.0;    ///< <0| V S^{k_1} V ... V |0>
  double weight = 0.0;   ///< (-1)^(n-1) / (1 + zeros)
};

/// All terms of order n, in the lexicographic order of `compositions`.
std::vector<KatoTerm> kato_terms(const FockOperator &h0,
                                 const FockOperator &hint, int n);

/// Weighted sum of `kato_terms`. Throws std::invalid_argument for n < 1 or
/// mismatched operator spaces.
double kato_energy_coefficient(const FockOperator &h0, const FockOperator &hint,
                               int n);

struct FourthOrderCheck {
  double direct;      ///< kato_energy_coefficient(h0, hint, 4)
  double chained;     ///< <0|V R V R V R V>, R = -S^1
  double subtraction; ///< <0|V R V> <0|V R^2 V>

  double residual() const { return direct - (chained - subtraction); }
};

/// Fourth-order coefficient split into its chained and subtraction parts.
/// Meaningful when <0|V|0> = 0 and the space holds at least 4 quanta.
FourthOrderCheck verify_fourth_order_subtraction(const FockOperator &h0,
                                                 const FockOperator &hint);

} // namespace vdw
