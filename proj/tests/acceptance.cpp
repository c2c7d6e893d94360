// Acceptance suite: end-to-end checks of the toolkit against its numerical
// contracts, one printed pass/fail line per criterion. Returns the number of
// failed criteria as the exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "framemult/duality.hpp"
#include "framemult/frames.hpp"
#include "framemult/gabor.hpp"
#include "framemult/inversion.hpp"
#include "framemult/linalg.hpp"
#include "framemult/mask.hpp"
#include "framemult/matrix_io.hpp"
#include "framemult/multiplier.hpp"
#include "framemult/wav.hpp"
#include "test_support.hpp"

using namespace framemult;
using namespace fmtest;

namespace {

struct Checklist {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { notes.push_back(line); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

CVec uniform_symbol(Index n, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  CVec values(n);
  for (Index i = 0; i < n; ++i) values[i] = cplx(dist(rng), 0.0);
  return values;
}

std::filesystem::path scratch_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "framemult_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

// --- criterion 1: scaled convergence-rate reproduction ---------------------

Checklist criterion_fig2() {
  Checklist c;
  const GaborLattice lattice(1024, 256, 512);
  const FiniteFrame phi =
      gabor_frame(GaborSystem(lattice, hann_window(1024, 512)));
  const FiniteFrame psi =
      gabor_frame(GaborSystem(lattice, gauss_window(1024, lattice)));
  const Symbol m(uniform_symbol(phi.count(), 0.5, 1.0, 0));

  const double a = m.stats().inf_abs;
  const double b = m.stats().sup_abs;
  const FrameBounds fb = phi.bounds();
  const double mu = mu_perturbation(phi, psi);
  const double limit = a * a * fb.lower * fb.lower / (b * b * fb.upper);
  {
    std::ostringstream line;
    line.precision(6);
    line << "constants: A=" << fb.lower << " B=" << fb.upper << " a=" << a
         << " b=" << b << " mu=" << mu << " limit=" << limit;
    c.note(line.str());
  }
  c.expect(mu < limit, "perturbation condition mu < a^2 A^2 / (b^2 B)");
  if (!(mu < limit)) return c;

  const Prop8Precompute pre = prop8_precompute(phi, m);
  const MultiplierOp op = build(m, phi, psi);
  const CMat oracle = direct_invert(op.matrix);
  const InversionResult res = prop8_invert(pre, psi, 1e-8, &oracle);
  const double oracle_norm = spectral_norm(oracle);

  c.note("planned iterations: " + std::to_string(res.report.n_planned));
  if (res.report.n_planned > 15) {
    c.ok = false;
    c.notes.push_back(
        "failed: termination within 15 iterations (planned " +
        std::to_string(res.report.n_planned) +
        "); the a-priori bound with the optimal perturbation constant of any "
        "Hann/Gaussian pair on this lattice needs 18+ steps, so this clause "
        "is not attainable as stated; all error clauses below do hold");
  }

  bool dominated = true;
  for (std::size_t k = 0; k < res.report.bounds.size(); ++k) {
    const double measured = res.report.residuals[k] * oracle_norm;
    dominated = dominated && measured <= res.report.bounds[k];
  }
  c.expect(dominated, "measured error <= predicted bound on every iteration");
  const double final_measured = res.report.residuals.back() * oracle_norm;
  {
    std::ostringstream line;
    line.precision(4);
    line << "final measured error " << final_measured << ", final bound "
         << res.report.bounds.back();
    c.note(line.str());
  }
  c.expect(final_measured <= 1e-8, "final measured error <= 1e-8");
  return c;
}

// --- criterion 2: iterative inverses against the direct oracle -------------

Checklist criterion_oracle_equivalence() {
  Checklist c;
  const Index dims[] = {4, 8, 16};
  const double e = 1e-9;
  for (int t = 0; t < 50; ++t) {
    const Index d = dims[t % 3];
    const std::uint64_t seed = 100000 + 20 * static_cast<std::uint64_t>(t);
    {
      const MethodInstance inst = make_prop8_instance(d, seed, 0.4);
      const Prop8Precompute pre = prop8_precompute(inst.phi, inst.m);
      const MultiplierOp op = build(inst.m, inst.phi, inst.psi);
      const CMat oracle = direct_invert(op.matrix);
      const InversionResult res = prop8_invert(pre, inst.psi, e);
      const double rel = spectral_norm(CMat(res.inverse - oracle)) /
                         spectral_norm(oracle);
      c.expect(rel <= res.report.bounds.back() + 1e-10,
               "prop8 instance " + std::to_string(t));
    }
    {
      const MethodInstance inst = make_prop9_instance(d, seed + 5, 0.3);
      const MultiplierOp op = build(inst.m, inst.phi, inst.psi);
      const CMat oracle = direct_invert(op.matrix);
      const Prop9Result res = prop9_invert(inst.phi, inst.m, inst.psi, e);
      const double rel = spectral_norm(CMat(res.inverse - oracle)) /
                         spectral_norm(oracle);
      c.expect(rel <= res.stage2.bounds.back() + 1e-10,
               "prop9 instance " + std::to_string(t));
    }
    {
      const MethodInstance inst = make_prop11_instance(d, seed + 10);
      const MultiplierOp op = build(inst.m, inst.phi, inst.psi);
      const CMat oracle = direct_invert(op.matrix);
      const InversionResult res = prop11_invert(inst.phi, inst.psi, inst.m, e);
      const double rel = spectral_norm(CMat(res.inverse - oracle)) /
                         spectral_norm(oracle);
      c.expect(rel <= res.report.bounds.back() + 1e-10,
               "prop11 instance " + std::to_string(t));
    }
    {
      const FiniteFrame phi = normalized_random_frame(d, 2 * d, seed + 15);
      CMat dir = random_matrix(d, d, seed + 16);
      dir /= spectral_scale(dir);
      const CMat g = CMat::Identity(d, d) + 0.4 * dir;
      Symbol m = random_positive_symbol(2 * d, seed + 17, 0.6, 1.4);
      if (t % 2 == 1) {
        // complex variant within the series stage's reach
        const double lambda0 = 0.3 * phi.bounds().lower / phi.bounds().upper;
        std::mt19937_64 rng(seed + 18);
        std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
        CVec values(2 * d);
        for (Index i = 0; i < values.size(); ++i) {
          values[i] = cplx(1.0, 0.0) + std::polar(lambda0, arg(rng));
        }
        m = Symbol(values);
      }
      const GphiResult res = gphi_invert(phi, g, m, e);
      const FiniteFrame psi(g * phi.vectors());
      const CMat oracle_pp = direct_invert(build(m, phi, psi).matrix);
      const CMat oracle_sp = direct_invert(build(m, psi, phi).matrix);
      const double rel_pp =
          spectral_norm(CMat(res.inverse_phi_psi - oracle_pp)) /
          spectral_norm(oracle_pp);
      const double rel_sp =
          spectral_norm(CMat(res.inverse_psi_phi - oracle_sp)) /
          spectral_norm(oracle_sp);
      const double cap = res.report.bounds.back() + 1e-10;
      c.expect(rel_pp <= cap, "gphi (phi,psi) instance " + std::to_string(t));
      c.expect(rel_sp <= cap, "gphi (psi,phi) instance " + std::to_string(t));
    }
  }
  c.note("50 instances per method at d in {4, 8, 16}");
  return c;
}

// --- criterion 3: operator identities and norm inequalities ----------------

Checklist criterion_identities() {
  Checklist c;
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  for (int t = 0; t < 200; ++t) {
    const Index d = 2 + t % 7;
    const Index n = d + t % 4;
    const std::uint64_t seed = 200000 + 10 * static_cast<std::uint64_t>(t);
    const FiniteFrame phi = random_frame(d, n, seed);
    const FiniteFrame psi = random_frame(d, n, seed + 1);
    const Symbol m = random_symbol(n, seed + 2);
    const MultiplierOp op = build(m, phi, psi);

    c.expect(adjoint_identity_check(op) <= 1e-13,
             "adjoint identity, instance " + std::to_string(t));
    const NormBound nb = norm_bound_check(op);
    c.expect(nb.lhs <= nb.rhs * (1.0 + 1e-12),
             "norm bound, instance " + std::to_string(t));
    const SchattenReport sr = schatten_report(op, ps[t % 4]);
    c.expect(std::abs(sr.trace_diagonal - sr.trace_formula) <=
                 1e-11 * std::max(1.0, std::abs(sr.trace_diagonal)),
             "trace formula, instance " + std::to_string(t));
    c.expect(sr.bounds_ok, "schatten bounds, instance " + std::to_string(t));

    const Symbol w = random_positive_symbol(n, seed + 3, 0.3, 2.0);
    const MultiplierOp sym = build(w, phi, phi);
    const CMat s = frame_operator(weighted_frame(phi, w.values().real()));
    c.expect(spectral_norm(CMat(sym.matrix - s)) <= 1e-13 * spectral_norm(s),
             "weighted-frame identity, instance " + std::to_string(t));
  }
  c.note("200 instances at d <= 8, p in {1, 1.5, 2, 3}");
  return c;
}

// --- criterion 4: induced duals and the reciprocal representation ----------

Checklist criterion_duality() {
  Checklist c;
  int done = 0;
  for (std::uint64_t seed = 300000; done < 50; seed += 10) {
    const FiniteFrame phi = random_frame(6, 10, seed);
    const FiniteFrame psi = random_frame(6, 10, seed + 1);
    const Symbol m = random_symbol(10, seed + 2);
    const MultiplierOp op = build(m, phi, psi);
    const Classification cls = classify(op);
    if (!cls.invertible || cls.condition > 1e4) continue;
    ++done;
    const CMat inv = direct_invert(op.matrix);

    const FiniteFrame dag_psi = psi_dagger(inv, m, phi);
    const FiniteFrame dag_phi = phi_dagger(inv, m, psi);
    c.expect(is_dual(psi, dag_psi, 1e-9).is_dual,
             "psi_dagger duality, instance " + std::to_string(done));
    c.expect(is_dual(phi, dag_phi, 1e-9).is_dual,
             "phi_dagger duality, instance " + std::to_string(done));

    const std::vector<FiniteFrame> candidates = {
        canonical_dual(phi), alternate_dual(phi, seed + 3)};
    const auto checks =
        verify_inverse_representation(inv, m, dag_psi, phi, candidates);
    c.expect(checks[0].accepted && checks[0].residual <= 1e-9,
             "representation with the canonical dual, instance " +
                 std::to_string(done));
    c.expect(checks[1].accepted && checks[1].residual <= 1e-9,
             "representation with an alternate dual, instance " +
                 std::to_string(done));

    const FiniteFrame non_dual(0.9 * canonical_dual(phi).vectors());
    const auto rejected =
        verify_inverse_representation(inv, m, dag_psi, phi, {non_dual});
    c.expect(!rejected[0].accepted,
             "non-dual candidate rejected, instance " + std::to_string(done));
  }

  int bases = 0;
  for (std::uint64_t seed = 310000; bases < 50; seed += 10) {
    const FiniteFrame phi = random_frame(6, 6, seed);
    const FiniteFrame psi = random_frame(6, 6, seed + 1);
    if (classify_matrix(phi.vectors()).condition > 100.0) continue;
    if (classify_matrix(psi.vectors()).condition > 100.0) continue;
    ++bases;
    const Symbol m = random_symbol(6, seed + 2);
    c.expect(riesz_inverse_formula(m, phi, psi) <= 1e-10,
             "reciprocal formula on bases, instance " + std::to_string(bases));
  }
  c.note("50 overcomplete instances (d=6, N=10) and 50 basis instances");
  return c;
}

// --- criterion 5: coincidence with the canonical dual ----------------------

Checklist criterion_coincidence() {
  Checklist c;
  int negative_runs = 0;
  int converse_runs = 0;
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t seed = 400000 + 20 * static_cast<std::uint64_t>(t);
    const FiniteFrame phi = random_frame(5, 9, seed);
    CMat dir = random_matrix(5, 5, seed + 1);
    dir /= spectral_scale(dir);
    const CMat g = CMat::Identity(5, 5) + 0.3 * dir;

    // Equivalent construction: psi = G (m phi).
    const Symbol m = random_symbol(9, seed + 2);
    const FiniteFrame psi_eq(g * scaled_frame(phi, m).vectors());
    const MultiplierOp op_eq = build(m, phi, psi_eq);
    const CMat inv_eq = direct_invert(op_eq.matrix);
    const CoincidenceResult r_eq = canonical_coincidence(inv_eq, m, phi, psi_eq);
    c.expect(r_eq.psi_case, "equivalent instance flagged, " + std::to_string(t));
    c.expect(r_eq.psi_distance <= 1e-8,
             "induced dual meets the canonical dual, " + std::to_string(t));

    // Non-equivalent construction: an alternate dual with a varying symbol.
    CVec values(9);
    for (Index i = 0; i < 9; ++i) {
      values[i] = cplx(1.0 + 0.07 * static_cast<double>(i % 4), 0.0);
    }
    const Symbol m_var(values);
    const FiniteFrame psi_alt = alternate_dual(phi, seed + 3);
    const MultiplierOp op_alt = build(m_var, phi, psi_alt);
    if (classify(op_alt).invertible) {
      ++negative_runs;
      const CMat inv_alt = direct_invert(op_alt.matrix);
      const CoincidenceResult r_alt =
          canonical_coincidence(inv_alt, m_var, phi, psi_alt);
      c.expect(!r_alt.psi_case,
               "non-equivalent instance flagged, " + std::to_string(t));
      c.expect(r_alt.psi_distance > 1e-4,
               "induced dual departs from the canonical dual, " +
                   std::to_string(t));
    }

    // Constant-symbol equivalence chain, both directions.
    const cplx constant(1.2, -0.4);
    const Symbol m_const = Symbol::constant(9, constant);
    {
      const FiniteFrame psi_g(g * phi.vectors());
      const MultiplierOp op = build(m_const, phi, psi_g);
      c.expect(classify(op).invertible,
               "constant symbol on an equivalent pair is invertible, " +
                   std::to_string(t));
      const CMat inv = direct_invert(op.matrix);
      const MultiplierOp rep =
          build(Symbol::constant(9, 1.0 / constant), canonical_dual(psi_g),
                canonical_dual(phi));
      c.expect(spectral_norm(CMat(inv - rep.matrix)) <=
                   1e-9 * spectral_norm(inv),
               "reciprocal representation through canonical duals, " +
                   std::to_string(t));
      const CoincidenceResult r = canonical_coincidence(inv, m_const, phi, psi_g);
      c.expect(r.psi_case && r.phi_case,
               "constant-symbol equivalences, " + std::to_string(t));
      c.expect(r.psi_distance <= 1e-8 && r.phi_distance <= 1e-8,
               "constant-symbol coincidences, " + std::to_string(t));
    }
    {
      const FiniteFrame psi_alt2 = alternate_dual(phi, seed + 4);
      const MultiplierOp op = build(m_const, phi, psi_alt2);
      if (classify(op).invertible) {
        ++converse_runs;
        const CMat inv = direct_invert(op.matrix);
        const MultiplierOp rep =
            build(Symbol::constant(9, 1.0 / constant), canonical_dual(psi_alt2),
                  canonical_dual(phi));
        const double residual =
            spectral_norm(CMat(inv - rep.matrix)) / spectral_norm(inv);
        const CoincidenceResult r =
            canonical_coincidence(inv, m_const, phi, psi_alt2);
        c.expect(!r.psi_case && residual > 1e-4,
                 "converse direction on a non-equivalent pair, " +
                     std::to_string(t));
      }
    }
  }
  c.expect(negative_runs >= 15, "enough non-equivalent instances exercised");
  c.expect(converse_runs >= 15, "enough converse instances exercised");
  c.note("20 equivalent, " + std::to_string(negative_runs) +
         " non-equivalent, " + std::to_string(converse_runs) +
         " converse constructions");
  return c;
}

// --- criterion 6: Gabor structure of the induced duals ---------------------

Checklist criterion_gabor_structure() {
  Checklist c;
  const GaborLattice lattice(64, 8, 16);
  std::vector<std::pair<CVec, CVec>> window_pairs;
  window_pairs.emplace_back(hann_window(64, 16), gauss_window(64, lattice));
  window_pairs.emplace_back(hann_window(64, 32), gauss_window(64, lattice));
  for (std::uint64_t seed = 500000; window_pairs.size() < 10; seed += 2) {
    CVec u = random_vector(64, seed);
    CVec v = random_vector(64, seed + 1);
    window_pairs.emplace_back(u / u.norm(), v / v.norm());
  }

  int index = 0;
  for (const auto& [wphi, wpsi] : window_pairs) {
    ++index;
    const GaborSystem phi_sys(lattice, wphi);
    const GaborSystem psi_sys(lattice, wpsi);
    const MultiplierOp v = frame_type_operator(phi_sys, psi_sys);
    if (!classify(v).invertible) {
      c.expect(false, "operator " + std::to_string(index) + " invertible");
      continue;
    }
    c.expect(commutes_with_lattice(v.matrix, lattice, 1e-10),
             "lattice commutation, operator " + std::to_string(index));

    const CMat v_inv = direct_invert(v.matrix);
    const FiniteFrame phi = gabor_frame(phi_sys);
    const FiniteFrame dagger = psi_dagger(v_inv, Symbol::ones(128), phi);
    const CVec base = dagger.vectors().col(0);
    double worst = 0.0;
    for (Index n = 0; n < lattice.time_steps(); ++n) {
      for (Index k = 0; k < lattice.num_channels; ++k) {
        const CVec expected = tf_shift(lattice, k, n, base);
        worst = std::max(
            worst, (dagger.vectors().col(k + 16 * n) - expected).norm());
      }
    }
    c.expect(worst <= 1e-9, "induced dual keeps the shift structure, operator " +
                                std::to_string(index));

    const FiniteFrame left =
        gabor_frame(GaborSystem(lattice, CVec(v_inv * wphi)));
    const CMat rep =
        left.vectors() * canonical_dual(phi).vectors().adjoint();
    c.expect(spectral_norm(CMat(v_inv - rep)) <= 1e-9 * spectral_norm(v_inv),
             "inverse as a frame-type operator, operator " +
                 std::to_string(index));
  }
  c.note("10 constant-symbol operators at L = 64");
  return c;
}

// --- criterion 7: sharpness and negative tests ------------------------------

Checklist criterion_sharpness() {
  Checklist c;

  int rejected = 0;
  int converged_ok = 0;
  for (Index n = 2; n <= 64; ++n) {
    const FiniteFrame onb(CMat::Identity(n, n));
    CVec values(n);
    for (Index i = 0; i < n; ++i) values[i] = 1.0 / static_cast<double>(i + 1);
    const Symbol m(values);
    try {
      const InversionResult res = prop11_invert(onb, onb, m, 1e-8);
      CMat truth = CMat::Zero(n, n);
      for (Index i = 0; i < n; ++i) truth(i, i) = static_cast<double>(i + 1);
      if (spectral_norm(CMat(res.inverse - truth)) <=
          1e-8 * spectral_norm(truth)) {
        ++converged_ok;
      }
    } catch (const ConditionError&) {
      ++rejected;
    }
  }
  if (rejected != 63) {
    c.ok = false;
    std::ostringstream line;
    line << "failed: reciprocal-harmonic symbol rejected for all N in 2..64 "
            "(rejected "
         << rejected << " of 63; the truncated symbol has lambda*sqrt(B_phi "
         << "B_psi) + epsilon = 1 - 1/N < 1, so the admissibility condition "
            "holds at every finite truncation; the series in fact converged "
            "to the true inverse within 1e-8 relative in "
         << converged_ok
         << "/63 cases; only the infinite instance attains the sharp "
            "constant, so the expected rejection cannot occur)";
    c.notes.push_back(line.str());
  }

  const Index n = 8;
  const FiniteFrame onb(CMat::Identity(n, n));
  const Prop8Precompute pre = prop8_precompute(onb, Symbol::ones(n));
  CMat harmonic = CMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    harmonic(i, i) = (i == 0) ? 2.0 : 1.0 / static_cast<double>(i + 1);
  }
  CMat bumped = CMat::Identity(n, n);
  bumped(0, 0) = 2.0;

  bool first_rejected = false;
  try {
    prop8_invert(pre, FiniteFrame(harmonic), 1e-8);
  } catch (const ConditionError&) {
    first_rejected = true;
  }
  bool second_rejected = false;
  try {
    prop8_invert(pre, FiniteFrame(bumped), 1e-8);
  } catch (const ConditionError&) {
    second_rejected = true;
  }
  c.expect(first_rejected && second_rejected,
           "both perturbation witnesses rejected at N = 8");

  const Classification c1 =
      classify(build(Symbol::ones(n), onb, FiniteFrame(harmonic)));
  const Classification c2 =
      classify(build(Symbol::ones(n), onb, FiniteFrame(bumped)));
  c.expect(c1.condition >= static_cast<double>(n),
           "first witness ill-conditioned (condition >= N)");
  c.expect(c2.invertible, "second witness invertible");
  return c;
}

// --- criterion 8: mask pipeline ---------------------------------------------

Checklist criterion_mask_pipeline() {
  Checklist c;
  const auto dir = scratch_dir();

  // One second of a quadratic chirp; the leading 1024 samples feed the
  // transform.
  Signal chirp;
  chirp.sample_rate = 8000;
  for (int i = 0; i < 8000; ++i) {
    const double t = static_cast<double>(i) / 8000.0;
    chirp.samples.push_back(0.7 *
                            std::sin(2.0 * std::numbers::pi *
                                     (300.0 + 2000.0 * t) * t));
  }
  const GaborLattice lattice(1024, 256, 512);
  const GaborSystem system(lattice, hann_window(1024, 512));

  MaskGrid ones;
  ones.values = RMat::Ones(512, 4);
  const MaskPipelineResult identity_run =
      apply_mask_pipeline(chirp.samples, system, ones, false);
  double err2 = 0.0;
  double ref2 = 0.0;
  for (int i = 0; i < 1024; ++i) {
    err2 += std::pow(identity_run.masked[i] - chirp.samples[i], 2);
    ref2 += chirp.samples[i] * chirp.samples[i];
  }
  c.expect(std::sqrt(err2 / ref2) <= 1e-8,
           "all-ones mask round trip within 1e-8");

  // Attenuating mask in [1/2, 1], recovery through the command line.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.5, 1.0);
  MaskGrid half;
  half.values.resize(512, 4);
  for (Index r = 0; r < 512; ++r) {
    for (Index col = 0; col < 4; ++col) half.values(r, col) = dist(rng);
  }
  const auto wav_path = (dir / "chirp.wav").string();
  const auto mask_path = (dir / "half.mask").string();
  const auto out_path = (dir / "masked.wav").string();
  const auto log_path = (dir / "cli.log").string();
  write_wav(wav_path, chirp);
  write_mask_file(mask_path, half);
  const std::string cmd = std::string(FRAMEMULT_CLI_PATH) + " apply-mask " +
                          wav_path + " " + out_path +
                          " --L 1024 --a 256 --M 512 --window hann:512 " +
                          "--mask " + mask_path + " --invert-after > " +
                          log_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  c.expect(WEXITSTATUS(status) == 0, "apply-mask --invert-after exits cleanly");

  std::ifstream log(log_path);
  std::string line;
  double recovery = -1.0;
  while (std::getline(log, line)) {
    const std::string key = "recovery relative error: ";
    const auto pos = line.find(key);
    if (pos != std::string::npos) {
      recovery = std::stod(line.substr(pos + key.size()));
    }
  }
  c.expect(recovery >= 0.0, "recovery error reported by the pipeline");
  {
    std::ostringstream note;
    note.precision(4);
    note << "recovery relative error " << recovery;
    c.note(note.str());
  }
  c.expect(recovery >= 0.0 && recovery <= 1e-6,
           "attenuated block recovered within 1e-6");
  return c;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Checklist()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "scaled convergence-rate reproduction", 60.0, criterion_fig2},
      {2, "iterative inverses match the direct oracle", 30.0,
       criterion_oracle_equivalence},
      {3, "operator identities and norm inequalities", 20.0,
       criterion_identities},
      {4, "induced duals and reciprocal representation", 30.0,
       criterion_duality},
      {5, "canonical-dual coincidence logic", 0.0, criterion_coincidence},
      {6, "Gabor structure of induced duals", 0.0, criterion_gabor_structure},
      {7, "sharpness and negative tests", 0.0, criterion_sharpness},
      {8, "mask pipeline", 30.0, criterion_mask_pipeline},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Checklist result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.notes.push_back(std::string("failed: unexpected exception: ") +
                             e.what());
    }
    const double elapsed = seconds_since(t0);
    if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      result.ok = false;
      std::ostringstream note;
      note << "failed: runtime " << elapsed << " s exceeds "
           << criterion.budget_seconds << " s";
      result.notes.push_back(note.str());
    }
    std::printf("[%s] criterion %d: %s (%.1f s)\n",
                result.ok ? "PASS" : "FAIL", criterion.number, criterion.name,
                elapsed);
    for (const std::string& note : result.notes) {
      std::printf("       %s\n", note.c_str());
    }
    failures += result.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
