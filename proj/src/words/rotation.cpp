#include "sturmlab/words/rotation.hpp"

#include <algorithm>
#include <stdexcept>

#include "sturmlab/errors.hpp"

namespace sturmlab::words {

using torus::FieldFrame;
using torus::OrbitCursor;

FiniteWord Word::window(std::int64_t a, std::int64_t b) const {
  if (a > b + 1) throw std::invalid_argument("window: a must be <= b");
  FiniteWord w(static_cast<std::size_t>(b - a + 1), a);
  for (std::int64_t n = a; n <= b; ++n) w.set(static_cast<std::size_t>(n - a), symbol_at(n));
  return w;
}

void require_rotation_number(const Quad& phi) {
  if (phi.is_rational()) throw HypothesisError("phi must be irrational");
  if (phi.sign() <= 0 || phi >= Quad::integer(1, phi.d())) {
    throw HypothesisError("phi must lie in (0, 1), got " + phi.to_string());
  }
}

RotationWord::RotationWord(Quad phi, Quad x0, torus::Arc zero_arc)
    : phi_(std::move(phi)), x0_(std::move(x0)), arc_(std::move(zero_arc)) {
  require_rotation_number(phi_);
  if (x0_.sign() < 0 || x0_ >= Quad::integer(1, phi_.d())) {
    throw std::invalid_argument("x0 must lie in [0, 1)");
  }
  frame_ = FieldFrame::common({&phi_, &x0_, &arc_.lo, &arc_.hi});
  phi_pt_ = frame_.embed(phi_);
  x0_pt_ = frame_.embed(x0_);
  lo_pt_ = frame_.embed(arc_.lo);
  hi_pt_ = frame_.embed(arc_.hi);
  wraps_ = arc_.wraps();
}

FieldFrame::Point RotationWord::orbit_point(std::int64_t n) const {
  return frame_.frac(frame_.add(x0_pt_, frame_.scale(phi_pt_, n)));
}

bool RotationWord::in_zero_arc(const FieldFrame::Point& x) const {
  const int cl = frame_.cmp(x, lo_pt_);
  const int ch = frame_.cmp(x, hi_pt_);
  const bool above = cl > 0 || (cl == 0 && arc_.lo_closed);
  const bool below = ch < 0 || (ch == 0 && arc_.hi_closed);
  return wraps_ ? (above || below) : (above && below);
}

int RotationWord::symbol_at(std::int64_t n) const { return in_zero_arc(orbit_point(n)) ? 0 : 1; }

int RotationWord::symbol_at_reference(std::int64_t n) const {
  const Quad x = (x0_ + phi_ * Int(n)).frac();
  return arc_.contains(x) ? 0 : 1;
}

FiniteWord RotationWord::window(std::int64_t a, std::int64_t b) const {
  if (a > b + 1) throw std::invalid_argument("window: a must be <= b");
  FiniteWord w(static_cast<std::size_t>(b - a + 1), a);
  OrbitCursor orbit(frame_, orbit_point(a), phi_pt_);
  for (std::size_t i = 0; i < w.size(); ++i, orbit.advance()) {
    if (!in_zero_arc(orbit.point())) w.set(i, 1);
  }
  return w;
}

namespace {

torus::Arc sturmian_arc(const Quad& phi, Convention c) {
  const Quad zero = Quad::integer(0, phi.d());
  return c == Convention::left_closed ? torus::Arc::make(zero, phi, true, false)
                                      : torus::Arc::make(zero, phi, false, true);
}

}  // namespace

SturmianWord::SturmianWord(const Quad& phi, const Quad& x0, Convention convention)
    : RotationWord(phi, x0, (require_rotation_number(phi), sturmian_arc(phi, convention))),
      convention_(convention) {}

PeriodicWord::PeriodicWord(FiniteWord period_word, std::int64_t phase, bool sturmian_tagged)
    : period_(std::move(period_word)), phase_(phase), tagged_(sturmian_tagged) {
  if (period_.empty()) throw std::invalid_argument("periodic word: period must be nonempty");
  period_.set_origin(0);
}

PeriodicWord PeriodicWord::tagged(FiniteWord period_word, std::int64_t phase, const Quad& phi) {
  if (!is_sturmian_factor(phi, period_word)) {
    throw std::invalid_argument("periodic word: period " + period_word.to_string() +
                                " is not a Sturmian factor");
  }
  return PeriodicWord(std::move(period_word), phase, true);
}

int PeriodicWord::symbol_at(std::int64_t n) const {
  const std::int64_t k = this->k();
  std::int64_t r = (n - phase_) % k;
  if (r < 0) r += k;
  return period_[static_cast<std::size_t>(r)];
}

FiniteWord PeriodicWord::window(std::int64_t a, std::int64_t b) const {
  if (a > b + 1) throw std::invalid_argument("window: a must be <= b");
  FiniteWord w(static_cast<std::size_t>(b - a + 1), a);
  const std::int64_t k = this->k();
  std::int64_t r = (a - phase_) % k;
  if (r < 0) r += k;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (period_[static_cast<std::size_t>(r)]) w.set(i, 1);
    if (++r == k) r = 0;
  }
  return w;
}

PeriodicWord periodic_sturmian(const Quad& phi, std::int64_t k, const Quad& x0,
                               std::int64_t phase) {
  if (k < 1) throw std::invalid_argument("periodic_sturmian: k must be >= 1");
  SturmianWord x(phi, x0);
  return PeriodicWord(x.window(0, k - 1), phase, true);
}

std::vector<Factor> sturmian_factors(const Quad& phi, std::int64_t k) {
  require_rotation_number(phi);
  if (k < 1) throw std::invalid_argument("sturmian_factors: k must be >= 1");
  const SturmianWord base(phi, Quad::integer(0, phi.d()));
  const FieldFrame& f = base.frame();
  const auto phi_pt = f.embed(phi);
  // Symbol j of the window starting at y is 0 iff y lies in [-j phi, -(j-1) phi).
  std::vector<FieldFrame::Point> cuts;
  cuts.reserve(static_cast<std::size_t>(k + 1));
  for (std::int64_t j = -1; j <= k - 1; ++j) cuts.push_back(f.frac(f.scale(phi_pt, -j)));
  std::sort(cuts.begin(), cuts.end(),
            [&](const auto& a, const auto& b) { return f.cmp(a, b) < 0; });

  std::vector<Factor> out;
  out.reserve(cuts.size());
  for (const auto& y : cuts) {
    Factor fac;
    fac.start = f.to_quad(y);
    const SturmianWord w(phi, fac.start);
    fac.word = w.window(0, k - 1);
    out.push_back(std::move(fac));
  }
  return out;
}

bool is_sturmian_factor(const Quad& phi, const FiniteWord& w) {
  if (w.empty()) return true;
  const auto factors = sturmian_factors(phi, static_cast<std::int64_t>(w.size()));
  return std::any_of(factors.begin(), factors.end(),
                     [&](const Factor& f) { return f.word == w; });
}

}  // namespace sturmlab::words
