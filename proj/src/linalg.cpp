#include "dgc/linalg.hpp"

namespace dgc {

PrimePolyMatrix::PrimePolyMatrix(std::int64_t prime, Mat<std::int64_t> m)
    : p(prime), entries(std::move(m)) {
  if (p < 2 || !is_prime_u64((std::uint64_t)p)) throw Error("modulus not prime");
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      entries(i, j) = mod_reduce(entries(i, j), p);
}

BareissResult bareiss(MatI a) {
  const int rows = (int)a.rows(), cols = (int)a.cols();
  BareissResult res;
  res.det = 0;
  res.last_pivot = 1;
  Int prev = 1;
  int sign = 1;
  std::vector<int> rperm(rows), cperm(cols);
  for (int i = 0; i < rows; ++i) rperm[i] = i;
  for (int j = 0; j < cols; ++j) cperm[j] = j;

  int k = 0;
  for (; k < rows && k < cols; ++k) {
    // full pivot: first nonzero entry of the trailing block, row-major
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) {
      a.row(pi).swap(a.row(k));
      std::swap(rperm[pi], rperm[k]);
      sign = -sign;
    }
    if (pj != k) {
      a.col(pj).swap(a.col(k));
      std::swap(cperm[pj], cperm[k]);
      sign = -sign;
    }
    // one fraction-free step: entries stay k+1 x k+1 minors of the original
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  res.rank = k;
  if (k > 0) res.last_pivot = sign < 0 ? Int(-a(k - 1, k - 1)) : a(k - 1, k - 1);
  res.pivot_rows.assign(rperm.begin(), rperm.begin() + k);
  res.pivot_cols.assign(cperm.begin(), cperm.begin() + k);
  if (rows == cols) res.det = (k == rows) ? res.last_pivot : Int(0);
  return res;
}

Int det_exact(const MatI& a) {
  if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  return bareiss(a).det;
}

int rank_exact(const MatI& a) { return bareiss(a).rank; }

int rank_mod_p(const PrimePolyMatrix& m) { return rank_mod_p(m.entries, m.p); }

int rank_mod_p(Mat<std::int64_t> a, std::int64_t p) {
  const int rows = (int)a.rows(), cols = (int)a.cols();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = mod_reduce(a(i, j), p);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) a.row(piv).swap(a.row(rank));
    std::int64_t inv = inv_mod(a(rank, col), p);
    for (int i = rank + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      std::int64_t m = mul_mod(a(i, col), inv, p);
      for (int j = col; j < cols; ++j)
        a(i, j) = sub_mod(a(i, j), mul_mod(m, a(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

std::vector<VecI> nullspace_rational(const RationalMatrix& m) {
  return nullspace_rational(m.entries);
}

namespace {

VecI scale_to_primitive(const VecQ& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    l = lcm(l, denominator(v[i]));
  VecI w(v.size());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  if (g == 0) return w;
  if (g < 0) g = -g;
  Int lead = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    w[i] /= g;
    if (lead == 0) lead = w[i];
  }
  if (lead < 0) w = -w;
  return w;
}

}  // namespace

std::vector<VecI> nullspace_rational(const MatQ& a) {
  const int rows = (int)a.rows(), cols = (int)a.cols();
  MatQ r = a;
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot_col(cols, false);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) r.row(piv).swap(r.row(rank));
    Rat pv = r(rank, col);
    r.row(rank) /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || r(i, col) == 0) continue;
      Rat m = r(i, col);
      r.row(i) -= m * r.row(rank);
    }
    pivot_col_of_row.push_back(col);
    is_pivot_col[col] = true;
    ++rank;
  }
  std::vector<VecI> basis;
  for (int col = 0; col < cols; ++col) {
    if (is_pivot_col[col]) continue;
    VecQ v = VecQ::Zero(cols);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col_of_row[i]] = -r(i, col);
    basis.push_back(scale_to_primitive(v));
  }
  return basis;
}

std::vector<VecI> nullspace_of_int(const MatI& a) {
  MatQ q(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
  return nullspace_rational(q);
}

}  // namespace dgc
