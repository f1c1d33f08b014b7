#pragma once

namespace sturmlab::hamiltonian {

/// Hurwitz zeta sum_{n>=0} (n + a)^{-s} for s > 1, a > 0, by Euler-Maclaurin
/// with relative error below 1e-14.
double hurwitz_zeta(double s, double a);

inline double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

/// sum_{n >= N} n^{-s}, N >= 1.
inline double zeta_tail(double s, double N) { return hurwitz_zeta(s, N); }

}  // namespace sturmlab::hamiltonian
