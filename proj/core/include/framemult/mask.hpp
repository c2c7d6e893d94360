#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "framemult/frames.hpp"
#include "framemult/gabor.hpp"
#include "framemult/types.hpp"

namespace framemult {

/// Nonnegative time-frequency weights on the lattice grid: one row per
/// frequency channel (M rows), one column per time frame (L/a columns).
/// Flattening order matches the gabor atom index i = k + M*n.
struct MaskGrid {
  RMat values;

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

/// Text grid: M lines of L/a space-separated floats.
MaskGrid read_mask(std::istream& in);
MaskGrid read_mask_file(const std::string& path);
void write_mask(std::ostream& out, const MaskGrid& mask);
void write_mask_file(const std::string& path, const MaskGrid& mask);

/// Column-by-column flattening into a symbol of length M * (L/a).
Symbol flatten_mask(const MaskGrid& mask);

struct MaskPipelineResult {
  std::vector<double> masked;     // real part of the masked block
  std::vector<double> recovered;  // real part of the recovered block (if any)
  bool recovered_valid = false;
  double recovery_rel_error = 0.0;  // ||recovered - input|| / ||input||
  std::string inversion_method;     // "prop8", "prop11", or "" when skipped
  std::string skip_reason;          // set when inversion was not possible
};

/// Masking pipeline on the leading L samples of a signal: Parseval-izes the
/// Gabor frame, applies the mask multiplier M_{m, P, P}, and optionally
/// undoes it with whichever series applies (weighted-frame route for
/// strictly positive masks, the dual-pair power series otherwise). Recovery
/// runs on the in-memory complex masked block, so it is exact up to solver
/// accuracy. Inversion failure downgrades to a skip with reason; the masked
/// output is always produced.
MaskPipelineResult apply_mask_pipeline(const std::vector<double>& samples,
                                       const GaborSystem& system,
                                       const MaskGrid& mask, bool invert_after,
                                       double e = 1e-10);

}  // namespace framemult
