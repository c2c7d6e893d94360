#pragma once

#include "framemult/frames.hpp"
#include "framemult/multiplier.hpp"
#include "framemult/types.hpp"

namespace framemult {

/// Rectangular time-frequency lattice on C^L: cyclic time shifts in steps of
/// a, M modulation channels. Both a and M must divide L. Redundancy below 1
/// is constructible but can never satisfy the frame predicate.
struct GaborLattice {
  Index signal_length = 0;  // L
  Index time_shift = 0;     // a
  Index num_channels = 0;   // M

  GaborLattice(Index L, Index a, Index M);

  Index freq_step() const { return signal_length / num_channels; }
  Index time_steps() const { return signal_length / time_shift; }
  Index count() const { return num_channels * time_steps(); }
  double redundancy() const {
    return static_cast<double>(count()) / static_cast<double>(signal_length);
  }
};

/// Lattice plus window. Expands to the frame of all time-frequency shifted
/// window copies, atom index i = k + M*n for channel k and time frame n.
struct GaborSystem {
  GaborLattice lattice;
  CVec window;

  GaborSystem(GaborLattice lat, CVec win);
};

/// (E_k T_n f)[l] = exp(2 pi i k l / M) * f[(l - n a) mod L].
CVec tf_shift(const GaborLattice& lattice, Index k, Index n, const CVec& f);

/// Unitary matrix of the modulation generator (k = 1, n = 0).
CMat modulation_generator(const GaborLattice& lattice);

/// Unitary matrix of the translation generator (k = 0, n = 1).
CMat translation_generator(const GaborLattice& lattice);

FiniteFrame gabor_frame(const GaborSystem& system);

/// Periodic Hann bump of length wlen, whole-point-even centered, zero padded
/// to length L, unit Euclidean norm.
CVec hann_window(Index L, Index wlen);

/// Periodized Gaussian with time width matched to the lattice hop,
/// w[l] = sum_j exp(-pi (l' + jL)^2 / a^2) on centered representatives,
/// unit norm. The periodization is truncated once terms drop below 1e-17.
CVec gauss_window(Index L, const GaborLattice& lattice);

/// Unit impulse at sample 0.
CVec delta_window(Index L);

/// True when V commutes with both lattice generators to within
/// tol * ||V|| in spectral norm; the generators generate the lattice group,
/// so this is equivalent to commuting with every lattice shift.
bool commutes_with_lattice(const CMat& v, const GaborLattice& lattice,
                           double tol);

/// Constant-symbol multiplier M_{(1), Phi, Psi} of two Gabor systems on the
/// same lattice. Commutes with all lattice shifts.
MultiplierOp frame_type_operator(const GaborSystem& phi_sys,
                                 const GaborSystem& psi_sys);

/// Window of the canonical dual Gabor frame: S^{-1} g.
CVec gabor_dual_window(const GaborSystem& system);

/// For V commuting with the lattice shifts, recovers the window u such that
/// V = M_{(1), Phi, (E_k T_n u)}: u = V^H S_Phi^{-1} g.
CVec solve_frame_type_window(const CMat& v, const GaborSystem& phi_sys);

}  // namespace framemult
