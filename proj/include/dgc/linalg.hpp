#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "dgc/common.hpp"
#include "dgc/modp.hpp"

namespace dgc {

// Dense Eigen carriers over exact scalars.  Expressions convert implicitly,
// so the free functions below accept any Eigen expression of matching scalar.
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatI = Mat<Int>;
using MatQ = Mat<Rat>;
using VecI = Vec<Int>;
using VecQ = Vec<Rat>;

// Carrier for mod-p rank computations.  Entries are canonical residues.
struct PrimePolyMatrix {
  std::int64_t p;
  Mat<std::int64_t> entries;

  PrimePolyMatrix(std::int64_t prime, Mat<std::int64_t> m);
};

// Carrier for exact rational elimination.
struct RationalMatrix {
  MatQ entries;
};

struct BareissResult {
  int rank = 0;
  Int det;         // square input only; 0 when singular
  Int last_pivot;  // +- the rank-sized nonzero minor on pivot_rows x pivot_cols; 1 for rank 0
  std::vector<int> pivot_rows, pivot_cols;
};

// Fraction-free elimination with full pivoting (first nonzero scan order).
BareissResult bareiss(MatI a);

Int det_exact(const MatI& a);
int rank_exact(const MatI& a);

int rank_mod_p(const PrimePolyMatrix& m);
int rank_mod_p(Mat<std::int64_t> a, std::int64_t p);

// Kernel basis over Q: one vector per free column in ascending column order,
// each scaled to integer entries with gcd 1 and positive first nonzero entry.
std::vector<VecI> nullspace_rational(const RationalMatrix& m);
std::vector<VecI> nullspace_rational(const MatQ& a);
std::vector<VecI> nullspace_of_int(const MatI& a);

}  // namespace dgc
