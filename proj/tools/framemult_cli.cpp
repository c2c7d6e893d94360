// Command-line front end: frame diagnostics, multiplier inversion with
// iteration reports, the convergence benchmark, and the spectrogram-mask
// pipeline. Exit codes: 0 success, 2 condition violated, 3 I/O or parse
// failure, 4 shape mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framemult/duality.hpp"
#include "framemult/errors.hpp"
#include "framemult/frames.hpp"
#include "framemult/gabor.hpp"
#include "framemult/inversion.hpp"
#include "framemult/linalg.hpp"
#include "framemult/mask.hpp"
#include "framemult/matrix_io.hpp"
#include "framemult/multiplier.hpp"
#include "framemult/wav.hpp"

namespace fm = framemult;

namespace {

constexpr int kExitCondition = 2;
constexpr int kExitIo = 3;
constexpr int kExitShape = 4;

fm::CVec parse_window(const std::string& spec, fm::Index L,
                      const fm::GaborLattice& lattice) {
  if (spec.rfind("hann:", 0) == 0) {
    const long wlen = std::stol(spec.substr(5));
    return fm::hann_window(L, static_cast<fm::Index>(wlen));
  }
  if (spec == "gauss") return fm::gauss_window(L, lattice);
  if (spec == "delta") return fm::delta_window(L);
  if (spec.rfind("file:", 0) == 0) {
    fm::CVec w = fm::read_symbol_file(spec.substr(5));
    if (w.size() != L) {
      throw fm::ShapeError("window file length does not match L");
    }
    return w;
  }
  throw fm::IoError("unknown window spec '" + spec +
                    "' (expected hann:<wlen>|gauss|delta|file:<path>)");
}

fm::CVec uniform_symbol(fm::Index n, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  fm::CVec values(n);
  for (fm::Index i = 0; i < n; ++i) values[i] = fm::cplx(dist(rng), 0.0);
  return values;
}

struct SymbolSpec {
  std::string file;
  std::string uniform;  // "lo,hi"
  std::string constant; // "re" or "re,im"
};

fm::Symbol resolve_symbol(const SymbolSpec& spec, fm::Index n,
                          std::uint64_t seed) {
  if (!spec.file.empty()) {
    fm::CVec v = fm::read_symbol_file(spec.file);
    if (v.size() != n) {
      throw fm::ShapeError("symbol length " + std::to_string(v.size()) +
                           " does not match frame count " + std::to_string(n));
    }
    return fm::Symbol(std::move(v));
  }
  if (!spec.uniform.empty()) {
    const auto comma = spec.uniform.find(',');
    if (comma == std::string::npos) {
      throw fm::IoError("--symbol-uniform expects lo,hi");
    }
    const double lo = std::stod(spec.uniform.substr(0, comma));
    const double hi = std::stod(spec.uniform.substr(comma + 1));
    return fm::Symbol(uniform_symbol(n, lo, hi, seed));
  }
  if (!spec.constant.empty()) {
    const auto comma = spec.constant.find(',');
    const double re = std::stod(spec.constant.substr(0, comma == std::string::npos
                                                            ? spec.constant.size()
                                                            : comma));
    const double im =
        comma == std::string::npos ? 0.0 : std::stod(spec.constant.substr(comma + 1));
    return fm::Symbol::constant(n, fm::cplx(re, im));
  }
  throw fm::IoError("no symbol given (use --symbol, --symbol-uniform, or "
                    "--symbol-const)");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw fm::IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw fm::IoError("write to '" + path + "' failed");
}

int run_framecheck(const std::string& path) {
  const fm::FiniteFrame frame(fm::read_matrix_file(path));
  const fm::FrameBounds b = frame.bounds();
  const bool ok = fm::is_frame(frame);
  std::printf("d: %lld\n", static_cast<long long>(frame.dim()));
  std::printf("N: %lld\n", static_cast<long long>(frame.count()));
  std::printf("A: %.17g\n", b.lower);
  std::printf("B: %.17g\n", b.upper);
  std::printf("is_frame: %s\n", ok ? "true" : "false");
  if (b.lower > 0.0) {
    std::printf("condition: %.17g\n", b.upper / b.lower);
  } else {
    std::printf("condition: inf\n");
  }
  return 0;
}

struct GaborSpec {
  long L = 0;
  long a = 0;
  long M = 0;
};

struct InvertArgs {
  std::string phi_file;
  std::string psi_file;
  GaborSpec gabor;
  std::string window_phi;
  std::string window_psi;
  SymbolSpec symbol;
  std::string method = "prop8";
  double e = 1e-8;
  std::uint64_t seed = 0;
  std::string out;
  std::string report;
};

fm::FiniteFrame resolve_frame(const std::string& file,
                              const std::string& window_spec,
                              const GaborSpec& gabor, const char* which) {
  if (!file.empty()) return fm::FiniteFrame(fm::read_matrix_file(file));
  if (!window_spec.empty()) {
    if (gabor.L <= 0) {
      throw fm::IoError(std::string("window spec for ") + which +
                        " needs --L/--a/--M");
    }
    const fm::GaborLattice lattice(gabor.L, gabor.a, gabor.M);
    return fm::gabor_frame(fm::GaborSystem(
        lattice, parse_window(window_spec, lattice.signal_length, lattice)));
  }
  throw fm::IoError(std::string("no source for ") + which +
                    " (give a matrix file or a lattice window spec)");
}

int run_invert(const InvertArgs& args) {
  const fm::FiniteFrame phi =
      resolve_frame(args.phi_file, args.window_phi, args.gabor, "phi");
  const fm::FiniteFrame psi =
      resolve_frame(args.psi_file, args.window_psi, args.gabor, "psi");
  const fm::Symbol m = resolve_symbol(args.symbol, phi.count(), args.seed);

  fm::CMat inverse;
  std::string report_text;
  if (args.method == "prop8") {
    const fm::Prop8Precompute pre = fm::prop8_precompute(phi, m);
    fm::InversionResult res = fm::prop8_invert(pre, psi, args.e);
    inverse = std::move(res.inverse);
    report_text = fm::format_report(res.report);
  } else if (args.method == "prop9") {
    fm::Prop9Result res = fm::prop9_invert(phi, m, psi, args.e);
    inverse = std::move(res.inverse);
    report_text = fm::format_report(res.stage1) + fm::format_report(res.stage2);
  } else if (args.method == "prop11") {
    fm::InversionResult res = fm::prop11_invert(phi, psi, m, args.e);
    inverse = std::move(res.inverse);
    report_text = fm::format_report(res.report);
  } else if (args.method == "direct") {
    const fm::MultiplierOp op = fm::build(m, phi, psi);
    const fm::Classification cls = fm::classify(op);
    if (!cls.invertible) {
      throw fm::SingularMatrixError("multiplier is numerically singular");
    }
    inverse = fm::direct_invert(op.matrix);
    fm::InversionReport report;
    report.method = fm::InversionMethod::kDirect;
    report.converged = true;
    report_text = fm::format_report(report);
  } else {
    throw fm::IoError("unknown method '" + args.method + "'");
  }

  if (!args.out.empty()) fm::write_matrix_file(args.out, inverse);
  if (!args.report.empty()) write_text_file(args.report, report_text);
  std::fputs(report_text.c_str(), stdout);
  return 0;
}

struct BenchArgs {
  GaborSpec gabor;
  std::string window_phi;
  std::string window_psi = "gauss";
  std::string symbol_uniform = "0.5,1";
  std::uint64_t seed = 0;
  double e = 1e-8;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  const fm::GaborLattice lattice(args.gabor.L, args.gabor.a, args.gabor.M);
  const fm::FiniteFrame phi = fm::gabor_frame(fm::GaborSystem(
      lattice, parse_window(args.window_phi, lattice.signal_length, lattice)));
  const fm::FiniteFrame psi = fm::gabor_frame(fm::GaborSystem(
      lattice, parse_window(args.window_psi, lattice.signal_length, lattice)));
  SymbolSpec spec;
  spec.uniform = args.symbol_uniform;
  const fm::Symbol m = resolve_symbol(spec, phi.count(), args.seed);

  const fm::Prop8Precompute pre = fm::prop8_precompute(phi, m);
  const fm::MultiplierOp op = fm::build(m, phi, psi);
  const fm::CMat oracle = fm::direct_invert(op.matrix);
  const fm::InversionResult res = fm::prop8_invert(pre, psi, args.e, &oracle);

  const double oracle_norm = fm::spectral_norm(oracle);
  std::string csv = "iteration,measured_error,predicted_bound\n";
  for (std::size_t k = 0; k < res.report.bounds.size(); ++k) {
    char line[96];
    std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g\n", k,
                  res.report.residuals[k] * oracle_norm, res.report.bounds[k]);
    csv += line;
  }
  if (!args.out.empty()) write_text_file(args.out, csv);
  std::fputs(csv.c_str(), stdout);
  return 0;
}

struct MaskArgs {
  std::string in_wav;
  std::string out_wav;
  GaborSpec gabor;
  std::string window;
  std::string mask_file;
  bool invert_after = false;
  double e = 1e-10;
  std::string recovered_out;
};

int run_apply_mask(const MaskArgs& args) {
  const fm::Signal in = fm::read_wav(args.in_wav);
  const fm::GaborLattice lattice(args.gabor.L, args.gabor.a, args.gabor.M);
  const fm::GaborSystem system(
      lattice, parse_window(args.window, lattice.signal_length, lattice));
  const fm::MaskGrid mask = fm::read_mask_file(args.mask_file);

  const fm::MaskPipelineResult result =
      fm::apply_mask_pipeline(in.samples, system, mask, args.invert_after, args.e);

  fm::Signal masked;
  masked.sample_rate = in.sample_rate;
  masked.samples = result.masked;
  fm::write_wav(args.out_wav, masked);
  std::printf("masked block written to %s\n", args.out_wav.c_str());

  if (args.invert_after) {
    if (result.recovered_valid) {
      std::string rec_path = args.recovered_out.empty()
                                 ? args.out_wav + ".recovered.wav"
                                 : args.recovered_out;
      fm::Signal rec;
      rec.sample_rate = in.sample_rate;
      rec.samples = result.recovered;
      fm::write_wav(rec_path, rec);
      std::printf("recovered block written to %s\n", rec_path.c_str());
      std::printf("inversion method: %s\n", result.inversion_method.c_str());
      std::printf("recovery relative error: %.17g\n", result.recovery_rel_error);
    } else {
      std::printf("warning: recovery skipped: %s\n", result.skip_reason.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite frame multiplier toolkit"};
  app.require_subcommand(1);

  std::string framecheck_path;
  CLI::App* framecheck =
      app.add_subcommand("framecheck", "print frame diagnostics for a matrix file");
  framecheck->add_option("frame", framecheck_path, "matrix file")->required();

  InvertArgs invert_args;
  CLI::App* invert = app.add_subcommand("invert", "invert a frame multiplier");
  invert->add_option("--phi", invert_args.phi_file, "synthesis matrix file of phi");
  invert->add_option("--psi", invert_args.psi_file, "synthesis matrix file of psi");
  invert->add_option("--L", invert_args.gabor.L, "signal length (gabor route)");
  invert->add_option("--a", invert_args.gabor.a, "time shift");
  invert->add_option("--M", invert_args.gabor.M, "number of channels");
  invert->add_option("--window-phi", invert_args.window_phi,
                     "hann:<wlen>|gauss|delta|file:<path>");
  invert->add_option("--window-psi", invert_args.window_psi, "window spec for psi");
  invert->add_option("--symbol", invert_args.symbol.file, "symbol file");
  invert->add_option("--symbol-uniform", invert_args.symbol.uniform,
                     "uniform random symbol 'lo,hi' (see --seed)");
  invert->add_option("--symbol-const", invert_args.symbol.constant,
                     "constant symbol 're[,im]'");
  invert->add_option("--method", invert_args.method, "prop8|prop9|prop11|direct")
      ->required();
  invert->add_option("--e", invert_args.e, "target n-term error bound");
  invert->add_option("--seed", invert_args.seed, "seed for random symbols");
  invert->add_option("--out", invert_args.out, "output matrix file");
  invert->add_option("--report", invert_args.report, "iteration report file");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench-convergence", "per-iteration error vs predicted bound as CSV");
  bench->add_option("--L", bench_args.gabor.L)->required();
  bench->add_option("--a", bench_args.gabor.a)->required();
  bench->add_option("--M", bench_args.gabor.M)->required();
  bench->add_option("--window-phi", bench_args.window_phi)->required();
  bench->add_option("--window-psi", bench_args.window_psi);
  bench->add_option("--symbol-uniform", bench_args.symbol_uniform);
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--e", bench_args.e);
  bench->add_option("--out", bench_args.out, "CSV output path");

  MaskArgs mask_args;
  CLI::App* mask = app.add_subcommand(
      "apply-mask", "apply a time-frequency mask to a wav file");
  mask->add_option("input", mask_args.in_wav, "input wav")->required();
  mask->add_option("output", mask_args.out_wav, "masked output wav")->required();
  mask->add_option("--L", mask_args.gabor.L)->required();
  mask->add_option("--a", mask_args.gabor.a)->required();
  mask->add_option("--M", mask_args.gabor.M)->required();
  mask->add_option("--window", mask_args.window, "window spec")->required();
  mask->add_option("--mask", mask_args.mask_file, "mask grid file")->required();
  mask->add_flag("--invert-after", mask_args.invert_after,
                 "undo the multiplier and write the recovered block");
  mask->add_option("--e", mask_args.e, "inversion accuracy");
  mask->add_option("--recovered-out", mask_args.recovered_out,
                   "recovered output wav (default: <output>.recovered.wav)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (framecheck->parsed()) return run_framecheck(framecheck_path);
    if (invert->parsed()) return run_invert(invert_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (mask->parsed()) return run_apply_mask(mask_args);
  } catch (const fm::ShapeError& e) {
    std::fprintf(stderr, "shape error: %s\n", e.what());
    return kExitShape;
  } catch (const fm::ConditionError& e) {
    std::fprintf(stderr, "condition violated: %s\n", e.what());
    return kExitCondition;
  } catch (const fm::SingularMatrixError& e) {
    std::fprintf(stderr, "singular matrix: %s\n", e.what());
    return kExitCondition;
  } catch (const fm::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return 0;
}
