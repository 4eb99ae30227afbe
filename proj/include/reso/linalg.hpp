#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace reso {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Reduced row echelon form: rows are nonzero, each with leading 1 at
// pivots[r], and pivot columns are cleared in the other rows.
struct Rref {
  RatMat rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
};

Rref rref(RatMat m);

// Membership of v in the row space of an Rref.
bool in_row_space(const Rref& basis, RatVec v);

int rank_of(const RatMat& m);

// Basis of { x | row . x = 0 for every row }, via the standard
// free-variable parameterization of the Rref.
RatMat nullspace(const RatMat& rows, int ncols);

// Clears denominators and common factors; first nonzero entry positive.
std::vector<long long> primitive_integer(const RatVec& v);

// A strictly positive integer vector inside the row space of `rows`
// (ncols-dimensional), or nullopt if none exists.  Solved exactly by
// Fourier-Motzkin elimination on the combination coefficients.
std::optional<std::vector<long long>> positive_row_space_vector(const RatMat& rows, int ncols);

}  // namespace reso
