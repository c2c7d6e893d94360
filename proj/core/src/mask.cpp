#include "framemult/mask.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "framemult/inversion.hpp"
#include "framemult/multiplier.hpp"

namespace framemult {

MaskGrid read_mask(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v = 0.0;
    while (ls >> v) {
      if (v < 0.0) {
        throw IoError("mask line " + std::to_string(line_no) +
                      ": negative value");
      }
      row.push_back(v);
    }
    if (!ls.eof()) {
      throw IoError("mask line " + std::to_string(line_no) + ": parse error");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError("mask line " + std::to_string(line_no) +
                    ": ragged row length");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("mask file has no rows");
  MaskGrid mask;
  mask.values.resize(static_cast<Index>(rows.size()),
                     static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < mask.rows(); ++r) {
    for (Index c = 0; c < mask.cols(); ++c) {
      mask.values(r, c) = rows[static_cast<std::size_t>(r)]
                              [static_cast<std::size_t>(c)];
    }
  }
  return mask;
}

MaskGrid read_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_mask(in);
}

void write_mask(std::ostream& out, const MaskGrid& mask) {
  for (Index r = 0; r < mask.rows(); ++r) {
    for (Index c = 0; c < mask.cols(); ++c) {
      if (c > 0) out << ' ';
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", mask.values(r, c));
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("mask write failed");
}

void write_mask_file(const std::string& path, const MaskGrid& mask) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mask(out, mask);
}

Symbol flatten_mask(const MaskGrid& mask) {
  CVec values(mask.rows() * mask.cols());
  for (Index n = 0; n < mask.cols(); ++n) {
    for (Index k = 0; k < mask.rows(); ++k) {
      values[k + mask.rows() * n] = cplx(mask.values(k, n), 0.0);
    }
  }
  return Symbol(std::move(values));
}

MaskPipelineResult apply_mask_pipeline(const std::vector<double>& samples,
                                       const GaborSystem& system,
                                       const MaskGrid& mask, bool invert_after,
                                       double e) {
  const Index L = system.lattice.signal_length;
  if (static_cast<Index>(samples.size()) < L) {
    throw ShapeError("signal shorter than the transform length");
  }
  if (mask.rows() != system.lattice.num_channels ||
      mask.cols() != system.lattice.time_steps()) {
    throw ShapeError("mask shape does not match the lattice grid");
  }

  CVec block(L);
  for (Index l = 0; l < L; ++l) block[l] = cplx(samples[static_cast<std::size_t>(l)], 0.0);

  const FiniteFrame parseval = canonical_tight(gabor_frame(system));
  const Symbol m = flatten_mask(mask);
  const MultiplierOp op = build(m, parseval, parseval);
  const CVec masked = framemult::apply(op, block);

  MaskPipelineResult result;
  result.masked.resize(static_cast<std::size_t>(L));
  for (Index l = 0; l < L; ++l) {
    result.masked[static_cast<std::size_t>(l)] = masked[l].real();
  }
  if (!invert_after) return result;

  // Recovery runs on the exact complex block. Strictly positive masks take
  // the weighted-frame route (mu = 0, vector iteration); otherwise fall back
  // to the dual-pair power series when its condition holds.
  CVec recovered;
  try {
    if (m.stats().sign == SymbolSign::kAllPositiveReal && !m.stats().has_zero) {
      const Prop8Precompute pre = prop8_precompute(parseval, m);
      recovered = prop8_apply(pre, parseval, masked, e).value;
      result.inversion_method = "prop8";
    } else {
      const InversionResult inv = prop11_invert(parseval, parseval, m, e);
      recovered = inv.inverse * masked;
      result.inversion_method = "prop11";
    }
  } catch (const ConditionError& err) {
    result.skip_reason = err.what();
    return result;
  }

  result.recovered.resize(static_cast<std::size_t>(L));
  double err2 = 0.0;
  double ref2 = 0.0;
  for (Index l = 0; l < L; ++l) {
    const double r = recovered[l].real();
    result.recovered[static_cast<std::size_t>(l)] = r;
    const double in = samples[static_cast<std::size_t>(l)];
    err2 += (r - in) * (r - in) + recovered[l].imag() * recovered[l].imag();
    ref2 += in * in;
  }
  result.recovered_valid = true;
  result.recovery_rel_error = ref2 > 0.0 ? std::sqrt(err2 / ref2) : std::sqrt(err2);
  return result;
}

}  // namespace framemult
