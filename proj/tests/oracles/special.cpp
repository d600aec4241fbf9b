#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"

namespace oracle {

double stirling_gamma(double x) {
  long double z = x, scale = 1;
  while (z < 20) {
    scale *= z;
    z += 1;
  }
  long double z2 = z * z;
  long double series = 1 / (12 * z) - 1 / (360 * z * z2) + 1 / (1260 * z * z2 * z2) - 1 / (1680 * z * z2 * z2 * z2) +
                       1 / (1188 * z * z2 * z2 * z2 * z2);
  long double lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::numbers::pi_v<long double>) + series;
  return static_cast<double>(std::exp(lg) / scale);
}

std::complex<double> eta_zeta(double sigma, double t) {
  using cl = std::complex<long double>;
  long M = std::max(400L, static_cast<long>(20 * std::fabs(t)));
  const int K = 10;
  std::vector<cl> partial;
  cl acc = 0;
  for (long n = 1; n <= M + K; ++n) {
    long double ln = std::log(static_cast<long double>(n));
    long double mag = std::exp(-sigma * ln);
    cl term = std::polar(mag, -static_cast<long double>(t) * ln);
    acc += (n % 2 == 1) ? term : -term;
    if (n >= M) partial.push_back(acc);
  }
  for (int level = 0; level < K; ++level) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = (partial[i] + partial[i + 1]) / 2.0L;
    partial.pop_back();
  }
  cl eta = partial.front();
  cl s(sigma, t);
  cl denom = 1.0L - std::exp((1.0L - s) * std::log(2.0L));
  cl z = eta / denom;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double y_of_x_bisect(int64_t k, double x) {
  long double kk = static_cast<long double>(k);
  auto xf = [&](long double y) { return -y + 2 * kk - (kk + 1) * (kk + 1) * std::log(1 - 2 * (y - kk) / (kk * kk - kk)); };
  long double lo = kk, hi = kk * (kk + 1) / 2;
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    if (xf(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace oracle
