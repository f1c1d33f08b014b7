#include "sturmlab/torus/continued_fraction.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sturmlab::torus {

const Int& ContinuedFraction::quotient(std::size_t i) const {
  if (i < partial_quotients.size()) return partial_quotients[i];
  if (!periodic_tail) throw std::out_of_range("continued fraction: index beyond computed depth");
  const auto& t = *periodic_tail;
  return partial_quotients[t.start + (i - t.start) % t.length];
}

std::size_t ContinuedFraction::available_depth() const {
  return periodic_tail ? std::numeric_limits<std::size_t>::max() : partial_quotients.size();
}

Int ContinuedFraction::max_quotient() const {
  Int m = 0;
  for (std::size_t i = 1; i < partial_quotients.size(); ++i) {
    if (partial_quotients[i] > m) m = partial_quotients[i];
  }
  return m;
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < partial_quotients.size(); ++i) {
    if (i == 1) os << "; ";
    if (i > 1) os << ", ";
    const bool open = periodic_tail && i == periodic_tail->start;
    if (open) os << "(";
    os << partial_quotients[i];
    if (periodic_tail && i + 1 == periodic_tail->start + periodic_tail->length) os << ")";
  }
  if (!periodic_tail) os << ", ...";
  os << "]";
  return os.str();
}

ContinuedFraction cf_expand(const Quad& x, std::size_t max_depth) {
  if (x.is_rational()) {
    throw std::invalid_argument("cf_expand: input " + x.to_string() + " is rational");
  }
  Int p = x.p(), q = x.q(), r = x.r();
  if (q < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  const Int ar = r < 0 ? Int(-r) : r;
  // x = (P + sqrt(D)) / Q with Q | D - P^2.
  Int P = p * ar;
  const Int D = q * q * x.d() * r * r;
  Int Q = r * ar;
  const Int s = isqrt(D);

  ContinuedFraction cf;
  std::map<std::pair<Int, Int>, std::size_t> seen;
  for (std::size_t i = 0; i < max_depth; ++i) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
    if (!fresh) {
      cf.periodic_tail = PeriodicTail{it->second, i - it->second};
      return cf;
    }
    Int a = Q > 0 ? floor_div(P + s, Q) : Int(-(floor_div(P + s, Int(-Q)) + 1));
    cf.partial_quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return cf;
}

std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction& cf, std::size_t n) {
  std::vector<std::pair<Int, Int>> out;
  out.reserve(n + 1);
  Int p_prev = 1, q_prev = 0;
  Int p = cf.quotient(0), q = 1;
  out.emplace_back(p, q);
  for (std::size_t i = 1; i <= n; ++i) {
    const Int& a = cf.quotient(i);
    Int pn = a * p + p_prev;
    Int qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<Int> convergent_denominators(const ContinuedFraction& cf, const Int& q_max) {
  std::vector<Int> out;
  Int q_prev = 0, q = 1;
  for (std::size_t i = 0; q <= q_max; ++i) {
    if (out.empty() || out.back() != q) out.push_back(q);
    if (i + 1 >= cf.available_depth()) break;
    Int qn = cf.quotient(i + 1) * q + q_prev;
    q_prev = std::move(q);
    q = std::move(qn);
  }
  return out;
}

}  // namespace sturmlab::torus
