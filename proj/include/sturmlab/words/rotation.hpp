#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sturmlab/torus/arc.hpp"
#include "sturmlab/torus/field.hpp"
#include "sturmlab/words/finite_word.hpp"

namespace sturmlab::words {

using torus::Quad;

/// A bi-infinite 0/1 sequence with exact random access.
class Word {
 public:
  virtual ~Word() = default;
  virtual int symbol_at(std::int64_t n) const = 0;
  /// Symbols a..b inclusive, origin a.
  virtual FiniteWord window(std::int64_t a, std::int64_t b) const;
  /// The least period, when the word is known to be periodic.
  virtual std::optional<std::int64_t> period() const { return std::nullopt; }
};

/// Coding of the orbit {x0 + n*phi} against an arc: symbol 0 inside the arc,
/// 1 outside. Decisions run on the 128-bit exact kernel; symbol_at_reference
/// repeats them on the bignum path.
class RotationWord : public Word {
 public:
  RotationWord(Quad phi, Quad x0, torus::Arc zero_arc);

  int symbol_at(std::int64_t n) const override;
  FiniteWord window(std::int64_t a, std::int64_t b) const override;
  int symbol_at_reference(std::int64_t n) const;

  const Quad& phi() const { return phi_; }
  const Quad& x0() const { return x0_; }
  const torus::Arc& zero_arc() const { return arc_; }
  const torus::FieldFrame& frame() const { return frame_; }

  /// {x0 + n*phi} on the exact kernel.
  torus::FieldFrame::Point orbit_point(std::int64_t n) const;
  bool in_zero_arc(const torus::FieldFrame::Point& x) const;

 private:
  Quad phi_;
  Quad x0_;
  torus::Arc arc_;
  torus::FieldFrame frame_;
  torus::FieldFrame::Point phi_pt_, x0_pt_, lo_pt_, hi_pt_;
  bool wraps_ = false;
};

enum class Convention { left_closed, right_closed };

/// X(n) = 0 iff {x0 + n*phi} lies in P = [0, phi) (left_closed) or (0, phi].
class SturmianWord : public RotationWord {
 public:
  SturmianWord(const Quad& phi, const Quad& x0, Convention convention = Convention::left_closed);
  Convention convention() const { return convention_; }

 private:
  Convention convention_;
};

class PeriodicWord : public Word {
 public:
  /// symbol_at(n) = period_word[(n - phase) mod k].
  PeriodicWord(FiniteWord period_word, std::int64_t phase = 0, bool sturmian_tagged = false);

  /// Tags the word after checking that its period is a factor of the Sturmian
  /// language of phi. Throws std::invalid_argument otherwise.
  static PeriodicWord tagged(FiniteWord period_word, std::int64_t phase, const Quad& phi);

  int symbol_at(std::int64_t n) const override;
  FiniteWord window(std::int64_t a, std::int64_t b) const override;
  std::optional<std::int64_t> period() const override { return k(); }

  std::int64_t k() const { return static_cast<std::int64_t>(period_.size()); }
  std::int64_t phase() const { return phase_; }
  const FiniteWord& period_word() const { return period_; }
  bool sturmian_tagged() const { return tagged_; }

 private:
  FiniteWord period_;
  std::int64_t phase_;
  bool tagged_;
};

/// Periodic word whose period is the Sturmian window X([0, k-1]) for x0.
PeriodicWord periodic_sturmian(const Quad& phi, std::int64_t k, const Quad& x0,
                               std::int64_t phase = 0);

struct Factor {
  FiniteWord word;
  Quad start;  // an orbit point whose length-k window is `word`
};

/// All k + 1 distinct length-k factors of the Sturmian language of phi, one per
/// cell of the circle cut at {-j*phi}, j = -1..k-1, ordered by cell position.
std::vector<Factor> sturmian_factors(const Quad& phi, std::int64_t k);

bool is_sturmian_factor(const Quad& phi, const FiniteWord& w);

/// Validates phi irrational with 0 < phi < 1.
void require_rotation_number(const Quad& phi);

}  // namespace sturmlab::words
