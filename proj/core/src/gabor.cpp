#include "framemult/gabor.hpp"

#include <cmath>
#include <numbers>

#include "framemult/linalg.hpp"

namespace framemult {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GaborLattice::GaborLattice(Index L, Index a, Index M)
    : signal_length(L), time_shift(a), num_channels(M) {
  if (L < 1 || a < 1 || M < 1) {
    throw ShapeError("lattice parameters must be positive");
  }
  if (L % a != 0) throw ShapeError("time shift must divide the signal length");
  if (L % M != 0) {
    throw ShapeError("channel count must divide the signal length");
  }
}

GaborSystem::GaborSystem(GaborLattice lat, CVec win)
    : lattice(lat), window(std::move(win)) {
  if (window.size() != lattice.signal_length) {
    throw ShapeError("window length must equal the signal length");
  }
  if (window.norm() == 0.0) throw ConditionError("window is identically zero");
}

CVec tf_shift(const GaborLattice& lattice, Index k, Index n, const CVec& f) {
  const Index L = lattice.signal_length;
  if (f.size() != L) throw ShapeError("tf_shift: vector length mismatch");
  if (k < 0 || k >= lattice.num_channels || n < 0 || n >= lattice.time_steps()) {
    throw ShapeError("tf_shift: lattice index out of range");
  }
  const Index shift = n * lattice.time_shift;
  CVec out(L);
  for (Index l = 0; l < L; ++l) {
    const double phase = kTwoPi * static_cast<double>(k) *
                         static_cast<double>(l) /
                         static_cast<double>(lattice.num_channels);
    const Index src = (l - shift % L + L) % L;
    out[l] = std::polar(1.0, phase) * f[src];
  }
  return out;
}

CMat modulation_generator(const GaborLattice& lattice) {
  const Index L = lattice.signal_length;
  CMat w = CMat::Zero(L, L);
  for (Index l = 0; l < L; ++l) {
    w(l, l) = std::polar(1.0, kTwoPi * static_cast<double>(l) /
                                  static_cast<double>(lattice.num_channels));
  }
  return w;
}

CMat translation_generator(const GaborLattice& lattice) {
  const Index L = lattice.signal_length;
  CMat w = CMat::Zero(L, L);
  for (Index l = 0; l < L; ++l) {
    w(l, (l - lattice.time_shift % L + L) % L) = 1.0;
  }
  return w;
}

FiniteFrame gabor_frame(const GaborSystem& system) {
  const GaborLattice& lat = system.lattice;
  const Index L = lat.signal_length;
  const Index M = lat.num_channels;
  const Index nt = lat.time_steps();
  CMat atoms(L, lat.count());
  for (Index n = 0; n < nt; ++n) {
    // Shared time shift of the window for all M modulations.
    CVec shifted(L);
    const Index off = n * lat.time_shift;
    for (Index l = 0; l < L; ++l) shifted[l] = system.window[(l - off + L) % L];
    for (Index k = 0; k < M; ++k) {
      const Index i = k + M * n;
      for (Index l = 0; l < L; ++l) {
        atoms(l, i) = std::polar(1.0, kTwoPi * static_cast<double>(k) *
                                          static_cast<double>(l) /
                                          static_cast<double>(M)) *
                      shifted[l];
      }
    }
  }
  return FiniteFrame(std::move(atoms));
}

CVec hann_window(Index L, Index wlen) {
  if (wlen < 1 || wlen > L) throw ShapeError("hann_window: wlen out of range");
  CVec w = CVec::Zero(L);
  for (Index j = 0; j < wlen; ++j) {
    const double v =
        0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(j) /
                              static_cast<double>(wlen)));
    const Index idx = ((j - wlen / 2) % L + L) % L;
    w[idx] = v;
  }
  const double norm = w.norm();
  if (norm == 0.0) {
    // wlen == 1 has a single zero sample; fall back to the impulse.
    w[0] = 1.0;
    return w;
  }
  return w / norm;
}

CVec gauss_window(Index L, const GaborLattice& lattice) {
  const double s = static_cast<double>(lattice.time_shift) *
                   static_cast<double>(lattice.time_shift);
  Index big_j = 1;
  while (std::exp(-std::numbers::pi *
                  (static_cast<double>(big_j) * L - 0.5 * L) *
                  (static_cast<double>(big_j) * L - 0.5 * L) / s) >= 1e-17) {
    ++big_j;
  }
  CVec w(L);
  for (Index l = 0; l < L; ++l) {
    // Centered representative of l in (-L/2, L/2].
    const double lc = (l <= L / 2) ? static_cast<double>(l)
                                   : static_cast<double>(l - L);
    double acc = 0.0;
    for (Index j = -big_j; j <= big_j; ++j) {
      const double t = lc + static_cast<double>(j) * static_cast<double>(L);
      acc += std::exp(-std::numbers::pi * t * t / s);
    }
    w[l] = acc;
  }
  return w / w.norm();
}

CVec delta_window(Index L) {
  if (L < 1) throw ShapeError("delta_window: length must be positive");
  CVec w = CVec::Zero(L);
  w[0] = 1.0;
  return w;
}

bool commutes_with_lattice(const CMat& v, const GaborLattice& lattice,
                           double tol) {
  if (v.rows() != lattice.signal_length || v.cols() != lattice.signal_length) {
    throw ShapeError("commutes_with_lattice: operator shape mismatch");
  }
  const double scale = spectral_norm(v);
  if (scale == 0.0) return true;
  const CMat mod = modulation_generator(lattice);
  const CMat tra = translation_generator(lattice);
  const double r1 = spectral_norm(v * mod - mod * v);
  const double r2 = spectral_norm(v * tra - tra * v);
  return std::max(r1, r2) <= tol * scale;
}

MultiplierOp frame_type_operator(const GaborSystem& phi_sys,
                                 const GaborSystem& psi_sys) {
  const GaborLattice& a = phi_sys.lattice;
  const GaborLattice& b = psi_sys.lattice;
  if (a.signal_length != b.signal_length || a.time_shift != b.time_shift ||
      a.num_channels != b.num_channels) {
    throw ShapeError("frame_type_operator: lattices differ");
  }
  const FiniteFrame phi = gabor_frame(phi_sys);
  const FiniteFrame psi = gabor_frame(psi_sys);
  return build(Symbol::ones(phi.count()), phi, psi);
}

CVec gabor_dual_window(const GaborSystem& system) {
  const FiniteFrame frame = gabor_frame(system);
  if (!is_frame(frame)) {
    throw ConditionError("gabor_dual_window: system is not a frame");
  }
  const CMat s_inv = hpd_inverse(frame_operator(frame));
  return s_inv * system.window;
}

CVec solve_frame_type_window(const CMat& v, const GaborSystem& phi_sys) {
  if (v.rows() != phi_sys.lattice.signal_length ||
      v.cols() != phi_sys.lattice.signal_length) {
    throw ShapeError("solve_frame_type_window: operator shape mismatch");
  }
  return v.adjoint() * gabor_dual_window(phi_sys);
}

}  // namespace framemult
