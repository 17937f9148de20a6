#include "posets/priority.hpp"

#include <algorithm>
#include <sstream>

#include "posets/errors.hpp"

namespace posets {

Evaluator::Evaluator(std::vector<Program> programs) : programs_(std::move(programs)) {
  for (const auto& program : programs_)
    for (const auto& c : program) {
      if (c.value > 1) throw PreconditionError("evaluator clause value must be 0 or 1");
      if (c.lo && c.hi && *c.lo > *c.hi) throw PreconditionError("evaluator clause has empty input range");
    }
}

std::optional<std::uint8_t> Evaluator::eval(std::size_t e, std::uint64_t input, std::size_t stage) const {
  if (e >= programs_.size()) return std::nullopt;
  std::optional<std::uint8_t> out;
  for (const auto& c : programs_[e]) {
    if (c.from > stage) continue;
    if (c.lo && input < *c.lo) continue;
    if (c.hi && input > *c.hi) continue;
    if (out && *out != c.value) {
      std::ostringstream os;
      os << "program " << e << " flips on input " << input << " by stage " << stage;
      throw MonotonicityError(os.str());
    }
    out = c.value;
  }
  return out;
}

std::optional<Activation> PriorityLog::activation_of(std::size_t n) const {
  for (const auto& a : activations)
    if (a.n == n) return a;
  return std::nullopt;
}

PriorityLog prio_init(std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("priority horizon must be at least 1");
  PriorityLog log;
  log.horizon = horizon;
  StageState zero;
  zero.witnesses.resize(horizon);
  for (std::size_t e = 0; e < horizon; ++e) zero.witnesses[e] = e;
  zero.flags.assign(horizon, 0);
  log.stages.push_back(std::move(zero));
  return log;
}

PriorityLog prio_step(PriorityLog log, const Evaluator& ev) {
  if (log.stages.empty()) throw PreconditionError("priority log has no stage 0");
  const std::size_t s = log.final_stage();
  StageState next = log.current();
  next.attention.reset();
  for (std::size_t e = 0; e < log.horizon && e <= s; ++e) {
    const std::size_t n = next.witnesses[e];
    if (n > s || next.flags[e] != 0) continue;
    const auto value = ev.eval(e, code_y(n), s);
    if (!value) continue;
    log.activations.push_back({n, s + 1, *value == 0 ? Polarity::kLow : Polarity::kHigh, e});
    next.attention = e;
    next.flags[e] = 1;
    for (std::size_t i = e + 1; i < log.horizon; ++i) {
      next.witnesses[i] = s + i - e;
      next.flags[i] = 0;
    }
    break;
  }
  log.stages.push_back(std::move(next));
  return log;
}

PriorityLog prio_run(std::size_t horizon, std::size_t stages, const Evaluator& ev) {
  PriorityLog log = prio_init(horizon);
  for (std::size_t s = 0; s < stages; ++s) log = prio_step(std::move(log), ev);
  return log;
}

namespace {

// Activation lookup by witness index, shared across many order queries.
class OrderOracle {
 public:
  explicit OrderOracle(const PriorityLog& log) : acts_(log.activations) {
    for (const auto& a : acts_) {
      if (a.n >= by_n_.size()) by_n_.resize(a.n + 1);
      if (!by_n_[a.n]) by_n_[a.n] = a;
    }
  }

  Verdict compare(std::size_t n, Kind kn, std::size_t m, Kind km) const {
    if (n == m) return kn == km ? Verdict::kEqual : Verdict::kIncomparable;
    if (n > m) return flip(compare(m, km, n, kn));
    if (kn == Kind::kX) return Verdict::kIncomparable;
    if (n >= by_n_.size() || !by_n_[n]) return Verdict::kIncomparable;
    const Activation& a = *by_n_[n];
    if (!(n < a.stage && a.stage <= m)) return Verdict::kIncomparable;
    for (const auto& b : acts_)
      if (b.n < n && a.stage < b.stage && b.stage <= m) return Verdict::kIncomparable;
    return a.polarity == Polarity::kLow ? Verdict::kBelow : Verdict::kAbove;
  }

 private:
  static Verdict flip(Verdict v) {
    if (v == Verdict::kBelow) return Verdict::kAbove;
    if (v == Verdict::kAbove) return Verdict::kBelow;
    return v;
  }

  const std::vector<Activation>& acts_;
  std::vector<std::optional<Activation>> by_n_;
};

Kind kind_of(std::size_t index) { return index % 2 == 0 ? Kind::kX : Kind::kY; }

Relation slice_relation(const OrderOracle& oracle, std::size_t count) {
  const std::size_t size = 2 * count;
  Relation rel(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const Verdict v = oracle.compare(i / 2, kind_of(i), j / 2, kind_of(j));
      rel[i][j] = v == Verdict::kEqual || v == Verdict::kBelow;
    }
  return rel;
}

std::vector<Id> slice_ids(std::size_t count) {
  std::vector<Id> ids(2 * count);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

std::vector<std::string> slice_labels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(2 * count);
  for (std::size_t n = 0; n < count; ++n) {
    labels.push_back("x" + std::to_string(n));
    labels.push_back("y" + std::to_string(n));
  }
  return labels;
}

}  // namespace

Verdict prio_order(const PriorityLog& log, std::size_t n, Kind kn, std::size_t m, Kind km) {
  return OrderOracle(log).compare(n, kn, m, km);
}

Poset prio_poset(const PriorityLog& log, std::size_t count) {
  OrderOracle oracle(log);
  auto checked = validate(slice_relation(oracle, count), slice_ids(count), slice_labels(count));
  if (!checked.ok()) throw InvariantViolation("priority order is not a partial order: " + checked.violation().message());
  return checked.poset();
}

bool PriorityReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  for (const auto& g : guesses)
    if (g.status == GuessStatus::kFailed) return false;
  return true;
}

namespace {

PriorityCheck check_log_properties(const PriorityLog& log) {
  std::ostringstream bad;
  std::vector<std::size_t> seen;
  for (const auto& a : log.activations) {
    if (std::count(seen.begin(), seen.end(), a.n)) bad << "n=" << a.n << " activated twice; ";
    seen.push_back(a.n);
  }
  for (const auto& a : log.activations)
    for (const auto& b : log.activations)
      if (b.stage > a.stage && a.n < b.n && b.n < a.stage)
        bad << "n=" << b.n << " activated at " << b.stage << " after n=" << a.n << " at " << a.stage << "; ";
  const std::string detail = bad.str();
  return {"(c) activation properties", detail.empty(), detail};
}

PriorityCheck check_injury(const PriorityLog& log) {
  std::ostringstream bad;
  std::vector<std::optional<std::size_t>> last(log.horizon);
  for (std::size_t s = 1; s < log.stages.size(); ++s) {
    const auto who = log.stages[s].attention;
    if (!who) continue;
    if (last[*who]) {
      bool injured = false;
      for (std::size_t t = *last[*who] + 1; t < s && !injured; ++t) {
        const auto other = log.stages[t].attention;
        injured = other && *other < *who;
      }
      if (!injured) bad << "R" << *who << " acted at " << *last[*who] << " and " << s << " without reset; ";
    }
    last[*who] = s;
  }
  const std::string detail = bad.str();
  return {"finite injury epochs", detail.empty(), detail};
}

GuessReport check_guess(const PriorityLog& log, const Evaluator& ev, const Poset& p, std::size_t e) {
  const std::size_t count = p.size() / 2;
  const std::size_t S = log.final_stage();
  GuessReport out{e, GuessStatus::kNotApplicable, {}, {}};
  ElemSet interval(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto v = ev.eval(e, i, S);
    if (!v) {
      out.reason = "partial on the slice";
      return out;
    }
    if (*v == 1) interval.insert(i);
  }
  if (down_closure(p, interval) != interval) {
    out.reason = "not an initial interval";
    return out;
  }
  const StageState& st = log.current();
  if (st.flags[e] == 0) {
    out.status = GuessStatus::kUnresolved;
    out.reason = "requirement has not acted";
    return out;
  }
  const std::size_t n = st.witnesses[e];
  const auto act = log.activation_of(n);
  if (n >= count || !act) {
    out.status = GuessStatus::kUnresolved;
    out.reason = "witness outside the slice";
    return out;
  }
  const Elem y = 2 * n + 1;
  ElemSet gens = interval;
  if (interval.contains(y)) {
    gens -= p.down(y);
    gens.insert(y);
  }
  const bool low = act->polarity == Polarity::kLow;
  std::ostringstream bad;
  if (interval.contains(y) == low) bad << "witness value disagrees with polarity; ";
  if (down_closure(p, gens) != interval) bad << "generators do not recover the interval; ";
  gens.for_each([&](Elem g) {
    if (g != y && g / 2 >= act->stage) bad << p.label(g) << " beyond activation stage; ";
    out.generators.push_back(p.label(g));
  });
  out.reason = bad.str();
  out.status = out.reason.empty() ? GuessStatus::kVerified : GuessStatus::kFailed;
  return out;
}

}  // namespace

PriorityReport prio_verify(const PriorityLog& log, const Evaluator& ev, std::size_t count) {
  PriorityReport report;
  OrderOracle oracle(log);
  auto checked = validate(slice_relation(oracle, count), slice_ids(count), slice_labels(count));
  report.checks.push_back({"(a) partial order", checked.ok(), checked.ok() ? "" : checked.violation().message()});

  {
    std::ostringstream bad;
    for (std::size_t n = 0; n < count; ++n)
      for (std::size_t m = n + 1; m < count; ++m)
        if (oracle.compare(n, Kind::kX, m, Kind::kX) != Verdict::kIncomparable) bad << "x" << n << " ~ x" << m << "; ";
    report.checks.push_back({"(b) x antichain", bad.str().empty(), bad.str()});
  }

  report.checks.push_back(check_log_properties(log));
  report.checks.push_back(check_injury(log));

  {
    std::ostringstream bad;
    const StageState& st = log.current();
    for (std::size_t e = 0; e < log.horizon; ++e) {
      if (st.flags[e] == 0) continue;
      const std::size_t n = st.witnesses[e];
      const auto act = log.activation_of(n);
      if (!act || act->requirement != e) {
        bad << "R" << e << " satisfied without activating its witness; ";
        continue;
      }
      const Verdict want = act->polarity == Polarity::kLow ? Verdict::kBelow : Verdict::kAbove;
      for (std::size_t m = act->stage; m < count; ++m)
        for (Kind k : {Kind::kX, Kind::kY})
          if (oracle.compare(n, Kind::kY, m, k) != want)
            bad << "y" << n << " vs " << (k == Kind::kX ? "x" : "y") << m << "; ";
    }
    report.checks.push_back({"(d) cofinite shadow", bad.str().empty(), bad.str()});
  }

  if (checked.ok()) {
    const Poset& p = checked.poset();
    for (std::size_t e = 0; e < log.horizon; ++e) report.guesses.push_back(check_guess(log, ev, p, e));
  }

  for (std::size_t s = 1; s < log.stages.size(); ++s)
    if (log.stages[s].witnesses != log.stages[s - 1].witnesses || log.stages[s].flags != log.stages[s - 1].flags)
      report.last_change_stage = s;
  return report;
}

}  // namespace posets
