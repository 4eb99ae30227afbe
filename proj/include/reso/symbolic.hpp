#pragma once

#include <string>
#include <vector>

#include "reso/cuts.hpp"

namespace reso {

/// Integer linear parameterization of the orthogonal complement of a cut's
/// span: coordinate i carries the form sum_j coeffs[i][j] * params[j].
struct SymbolicResonance {
  int n = 0;
  std::vector<char> params;                    // 'a', 'b', ...
  std::vector<std::vector<long long>> coeffs;  // n rows, one per coordinate

  std::string str() const;  // e.g. "a+b,b,2b-a"
};

SymbolicResonance to_symbolic(const Cut& s);

// Recover the cut a parameterization describes: all sign vectors orthogonal
// to every generic weight assignment, i.e. to each coefficient column.
Cut from_symbolic(const SymbolicResonance& sym, int bound = kDefaultScanBound);

// Parse comma-separated integer linear forms in letters a..z, e.g.
// "a+b, b+c, c, 2a-b".
SymbolicResonance parse_symbolic(const std::string& text);

}  // namespace reso
