#include "sturmlab/hamiltonian/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace sturmlab::hamiltonian {

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: s must exceed 1");
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
  // B_{2j} / (2j)!
  static constexpr double kB[] = {
      1.0 / 12.0,           -1.0 / 720.0,          1.0 / 30240.0,        -1.0 / 1209600.0,
      1.0 / 47900160.0,     -691.0 / 1307674368000.0, 1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0};
  const int N = a >= 16.0 ? 0 : static_cast<int>(std::ceil(16.0 - a));
  double head = 0.0;
  for (int n = N - 1; n >= 0; --n) head += std::pow(n + a, -s);
  const double x = N + a;
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // Term j: B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
  double rising = s;
  double xp = std::pow(x, -s - 1.0);
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 0; j < 8; ++j) {
    tail += kB[j] * rising * xp;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    xp *= inv_x2;
  }
  return head + tail;
}

}  // namespace sturmlab::hamiltonian
