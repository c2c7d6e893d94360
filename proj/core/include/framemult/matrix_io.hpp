#pragma once

#include <iosfwd>
#include <string>

#include "framemult/types.hpp"

namespace framemult {

// Matrix text format: first line `d N`, then d lines of N entries, each
// entry `re,im` with 17 significant digits and no spaces inside an entry,
// entries separated by single spaces. Round-trips are value-exact for
// doubles. Symbol files carry one `re,im` entry per line.

CMat read_matrix(std::istream& in);
CMat read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CMat& m);
void write_matrix_file(const std::string& path, const CMat& m);

CVec read_symbol(std::istream& in);
CVec read_symbol_file(const std::string& path);
void write_symbol(std::ostream& out, const CVec& values);
void write_symbol_file(const std::string& path, const CVec& values);

}  // namespace framemult
