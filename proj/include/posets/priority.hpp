#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/*
 * Finite-injury construction of a poset on {x_n, y_n} whose x_n form an
 * antichain while every requirement R_e pins one witness y_n either below
 * or above almost everything.
 *
 * Elements are coded as naturals: x_n = 2n, y_n = 2n + 1. Evaluators are
 * queried on these codes.
 */

inline constexpr std::uint64_t code_x(std::size_t n) { return 2 * static_cast<std::uint64_t>(n); }
inline constexpr std::uint64_t code_y(std::size_t n) { return 2 * static_cast<std::uint64_t>(n) + 1; }

/// Stage-indexed partial 0/1 functions, one program per requirement.
///
/// A program is a list of clauses; a clause matches the inputs lo..hi
/// (inclusive, open-ended when unset) and answers `value` from stage `from`
/// on. A query is defined once some matching clause has started. Convergence
/// is monotone by construction unless two started clauses disagree on the
/// same input, which is reported as a value flip.
class Evaluator {
 public:
  struct Clause {
    std::optional<std::uint64_t> lo;
    std::optional<std::uint64_t> hi;
    std::size_t from = 0;
    std::uint8_t value = 0;
  };
  using Program = std::vector<Clause>;

  Evaluator() = default;
  explicit Evaluator(std::vector<Program> programs);

  std::size_t programs() const { return programs_.size(); }
  const std::vector<Program>& all() const { return programs_; }

  /// Value of program e on `input` at `stage`, or nullopt while undefined.
  /// Requirements without a program never converge. Throws
  /// MonotonicityError on a flip.
  std::optional<std::uint8_t> eval(std::size_t e, std::uint64_t input, std::size_t stage) const;

 private:
  std::vector<Program> programs_;
};

enum class Polarity { kLow, kHigh };

struct Activation {
  std::size_t n;            ///< activated witness index (y_n)
  std::size_t stage;        ///< stage s+1 at which it happened
  Polarity polarity;
  std::size_t requirement;  ///< e that received attention
  friend bool operator==(const Activation&, const Activation&) = default;
};

struct StageState {
  std::vector<std::size_t> witnesses;      ///< n_{e,s}
  std::vector<std::uint8_t> flags;         ///< r(e,s)
  std::optional<std::size_t> attention;    ///< requirement acting at this stage
  friend bool operator==(const StageState&, const StageState&) = default;
};

/// Complete transcript: stages[s] is the state after stage s.
struct PriorityLog {
  std::size_t horizon = 0;  ///< number of requirements simulated
  std::vector<StageState> stages;
  std::vector<Activation> activations;

  std::size_t final_stage() const { return stages.size() - 1; }
  const StageState& current() const { return stages.back(); }
  /// Activation of witness n, if it has happened.
  std::optional<Activation> activation_of(std::size_t n) const;
  friend bool operator==(const PriorityLog&, const PriorityLog&) = default;
};

/// Stage 0: n_{e,0} = e and r(e,0) = 0 for e < horizon.
PriorityLog prio_init(std::size_t horizon);

/// Stage s+1. R_e requires attention iff e <= s, n_{e,s} <= s, r(e,s) = 0 and
/// the evaluator has converged on y_{n_{e,s}} at stage s. The least such e
/// activates its witness (low on 0, high on 1) and sets its flag; every
/// weaker R_i moves to witness s + i - e with its flag cleared.
PriorityLog prio_step(PriorityLog log, const Evaluator& ev);

PriorityLog prio_run(std::size_t horizon, std::size_t stages, const Evaluator& ev);

enum class Verdict { kEqual, kBelow, kAbove, kIncomparable };
enum class Kind { kX, kY };

/// Order between z_n and z_m read off the activations:
///  * x_n is incomparable with y_n, x_m and y_m;
///  * for n < m, y_n <= z_m (resp. >=) iff n was activated low (high) at a
///    stage s with n < s <= m and no k < n was activated at a stage t with
///    s < t <= m.
/// kBelow means the first argument is below the second.
Verdict prio_order(const PriorityLog& log, std::size_t n, Kind kn, std::size_t m, Kind km);

/// Carrier {x_n, y_n : n < count} with ids 2n, 2n+1 and labels "xN", "yN".
/// Throws InvariantViolation if the result is not a partial order.
Poset prio_poset(const PriorityLog& log, std::size_t count);

struct PriorityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

enum class GuessStatus { kVerified, kNotApplicable, kUnresolved, kFailed };

/// Outcome of reading program e as a guess for an initial interval I.
struct GuessReport {
  std::size_t requirement;
  GuessStatus status;
  std::string reason;
  std::vector<std::string> generators;  ///< finite F with Down(F) = I
};

struct PriorityReport {
  std::vector<PriorityCheck> checks;
  std::vector<GuessReport> guesses;
  std::size_t last_change_stage = 0;  ///< last stage whose state differed from its predecessor

  bool ok() const;
};

/// Verifies, on the slice of `count` pairs:
///  (a) the relation is a partial order;
///  (b) the x_n are pairwise incomparable;
///  (c) every n is activated at most once, and after n is activated at
///      stage s no m with n < m < s is activated;
///  (d) each satisfied requirement's witness is below (low) or above (high)
///      every z_m with m >= its activation stage;
///  (e) each program that is total and interval-valued on the slice
///      describes Down(F) for an explicit F whose members other than the
///      witness all sit below the activation stage;
/// plus the finite-injury bookkeeping: between two attentions of R_e some
/// stronger requirement acts.
PriorityReport prio_verify(const PriorityLog& log, const Evaluator& ev, std::size_t count);

}  // namespace posets
