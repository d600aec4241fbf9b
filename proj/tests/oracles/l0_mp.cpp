#include <boost/multiprecision/cpp_dec_float.hpp>

#include "oracles.hpp"

namespace oracle {

int64_t l0_multiprecision(int64_t k) {
  using big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<30>>;
  big kk = k;
  big y = kk * kk / 2;
  big x = -y + 2 * kk - (kk + 1) * (kk + 1) * log(1 - 2 * (y - kk) / (kk * kk - kk));
  return static_cast<int64_t>(ceil(x));
}

}  // namespace oracle
