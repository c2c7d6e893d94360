#include "framemult/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "framemult/errors.hpp"

namespace framemult {

namespace {

std::string format_entry(cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
  return buf;
}

cplx parse_entry(const std::string& token, int line_no) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    throw IoError("line " + std::to_string(line_no) +
                  ": entry is not re,im: '" + token + "'");
  }
  // strtod instead of stod: subnormals must parse, not raise out_of_range.
  const std::string re_text = token.substr(0, comma);
  const std::string im_text = token.substr(comma + 1);
  char* end = nullptr;
  const double re = std::strtod(re_text.c_str(), &end);
  const bool re_ok = !re_text.empty() && end == re_text.c_str() + re_text.size();
  const double im = std::strtod(im_text.c_str(), &end);
  const bool im_ok = !im_text.empty() && end == im_text.c_str() + im_text.size();
  if (!re_ok || !im_ok) {
    throw IoError("line " + std::to_string(line_no) +
                  ": malformed number in '" + token + "'");
  }
  return cplx(re, im);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

CMat read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw IoError("line 1: missing header");
  std::istringstream hs(header);
  Index rows = 0;
  Index cols = 0;
  if (!(hs >> rows >> cols) || rows < 1 || cols < 1) {
    throw IoError("line 1: header must be 'd N' with positive integers");
  }
  std::string trailing;
  if (hs >> trailing) throw IoError("line 1: unexpected trailing content");

  CMat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const int line_no = static_cast<int>(r) + 2;
    std::string line;
    if (!std::getline(in, line)) {
      throw IoError("line " + std::to_string(line_no) + ": missing row");
    }
    std::istringstream ls(line);
    std::string token;
    for (Index c = 0; c < cols; ++c) {
      if (!(ls >> token)) {
        throw IoError("line " + std::to_string(line_no) + ": row has " +
                      std::to_string(c) + " of " + std::to_string(cols) +
                      " entries");
      }
      m(r, c) = parse_entry(token, line_no);
    }
    if (ls >> token) {
      throw IoError("line " + std::to_string(line_no) + ": extra entries");
    }
  }
  return m;
}

CMat read_matrix_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMat& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_entry(m(r, c));
    }
    out << '\n';
  }
  if (!out) throw IoError("matrix write failed");
}

void write_matrix_file(const std::string& path, const CMat& m) {
  std::ofstream out = open_output(path);
  write_matrix(out, m);
}

CVec read_symbol(std::istream& in) {
  std::vector<cplx> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    values.push_back(parse_entry(line, line_no));
  }
  if (values.empty()) throw IoError("symbol file has no entries");
  CVec v(static_cast<Index>(values.size()));
  for (Index i = 0; i < v.size(); ++i) v[i] = values[static_cast<std::size_t>(i)];
  return v;
}

CVec read_symbol_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_symbol(in);
}

void write_symbol(std::ostream& out, const CVec& values) {
  for (Index i = 0; i < values.size(); ++i) {
    out << format_entry(values[i]) << '\n';
  }
  if (!out) throw IoError("symbol write failed");
}

void write_symbol_file(const std::string& path, const CVec& values) {
  std::ofstream out = open_output(path);
  write_symbol(out, values);
}

}  // namespace framemult
