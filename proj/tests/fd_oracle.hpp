#pragma once

#include <Eigen/QR>

// Taylor coefficients of f around 0 from a least-squares polynomial fit on
// 2m+1 equispaced samples in [-h, h] (or [0, h] when one_sided).
template <typename F>
Eigen::VectorXd taylor_by_fit(F &&f, double h, int degree, int m, bool one_sided = false) {
  const int n = one_sided ? m + 1 : 2 * m + 1;
  Eigen::MatrixXd v(n, degree + 1);
  Eigen::VectorXd y(n);
  for (int k = 0; k < n; ++k) {
    const double u = one_sided ? double(k) / m : double(k - m) / m;
    double pw = 1.0;
    for (int j = 0; j <= degree; ++j) {
      v(k, j) = pw;
      pw *= u;
    }
    y(k) = f(u * h);
  }
  Eigen::VectorXd c = v.colPivHouseholderQr().solve(y);
  double scale = 1.0;
  for (int j = 0; j <= degree; ++j) {
    c(j) /= scale;
    scale *= h;
  }
  return c;
}
