#include <cmath>
#include <stdexcept>

#include "qround/reductions.hpp"

namespace qround {

double w(double x) { return x * std::log2(x); }

double w_inverse(double x) {
  if (!(x > 0)) throw std::domain_error("w_inverse is defined for x > 0 on the branch y > 1");
  double lo = 1.0;
  double hi = std::max(2.0, 2.0 * x);
  while (hi - lo > 1e-10) {
    double mid = lo + (hi - lo) / 2;
    if (w(mid) < x) lo = mid; else hi = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace qround
