#include "soft7/linalg.hpp"

#include <Eigen/Dense>

namespace soft7 {

template <Scalar T>
std::vector<T> SpanBasis<T>::residual(std::vector<T> v) const {
  for (const auto& row : rows_) {
    const T c = v[row.pivot];
    if (is_zero(c)) continue;
    for (std::size_t n = 0; n < dim_; ++n)
      if (!is_zero(row.v[n])) v[n] -= c * row.v[n];
  }
  return v;
}

template <Scalar T>
bool SpanBasis<T>::insert(std::vector<T> v) {
  v = residual(std::move(v));
  if (is_zero_vector(v)) return false;

  std::size_t pivot = 0;
  if constexpr (is_exact_v<T>) {
    while (is_zero(v[pivot])) ++pivot;
  } else {
    for (std::size_t n = 1; n < dim_; ++n)
      if (magnitude(v[n]) > magnitude(v[pivot])) pivot = n;
  }
  const T inv = T(1) / v[pivot];
  for (auto& x : v) x *= inv;

  // keep earlier rows reduced at the new pivot so residual() stays one pass
  for (auto& row : rows_) {
    const T c = row.v[pivot];
    if (is_zero(c)) continue;
    for (std::size_t n = 0; n < dim_; ++n) row.v[n] -= c * v[n];
  }
  rows_.push_back({pivot, std::move(v)});
  return true;
}

namespace {

template <Scalar T>
std::size_t exact_rank(const std::vector<std::vector<T>>& vecs) {
  if (vecs.empty()) return 0;
  SpanBasis<T> basis(vecs.front().size());
  for (const auto& v : vecs) basis.insert(v);
  return basis.rank();
}

std::size_t svd_rank(const std::vector<std::vector<double>>& vecs) {
  if (vecs.empty()) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(vecs.size()),
                    static_cast<Eigen::Index>(vecs.front().size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      m(r, c) = vecs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  std::size_t rank = 0;
  for (Eigen::Index n = 0; n < svd.singularValues().size(); ++n)
    if (svd.singularValues()(n) > kRankThreshold) ++rank;
  return rank;
}

template <Scalar T, typename M>
std::size_t rank_of(const std::vector<M>& mats) {
  std::vector<std::vector<T>> vecs;
  vecs.reserve(mats.size());
  for (const auto& m : mats) vecs.push_back(flatten(m));
  if constexpr (is_exact_v<T>)
    return exact_rank(vecs);
  else
    return svd_rank(vecs);
}

}  // namespace

template <Scalar T>
std::size_t mat_rank(const std::vector<Mat8<T>>& mats) {
  return rank_of<T>(mats);
}

template <Scalar T>
std::size_t mat_rank(const std::vector<Mat8C<T>>& mats) {
  return rank_of<T>(mats);
}

template <Scalar T>
std::optional<std::vector<T>> solve_square(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (is_exact_v<T>) {
      while (pivot < n && is_zero(a[pivot][col])) ++pivot;
      if (pivot == n) return std::nullopt;
    } else {
      for (std::size_t r = col + 1; r < n; ++r)
        if (magnitude(a[r][col]) > magnitude(a[pivot][col])) pivot = r;
      if (magnitude(a[pivot][col]) <= kRankThreshold) return std::nullopt;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);

    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }

  std::vector<T> x(n);
  for (std::size_t r = n; r-- > 0;) {
    T s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

template class SpanBasis<Rational>;
template class SpanBasis<double>;
template std::size_t mat_rank<Rational>(const std::vector<Mat8<Rational>>&);
template std::size_t mat_rank<double>(const std::vector<Mat8<double>>&);
template std::size_t mat_rank<Rational>(const std::vector<Mat8C<Rational>>&);
template std::size_t mat_rank<double>(const std::vector<Mat8C<double>>&);
template std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>>,
                                                           std::vector<Rational>);
template std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>>,
                                                         std::vector<double>);

}  // namespace soft7
