#ifndef PACBR_ENTRENCHMENT_HPP
#define PACBR_ENTRENCHMENT_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/generator.hpp"
#include "pacbr/parse.hpp"
#include "pacbr/report.hpp"
#include "pacbr/semantics.hpp"

namespace pacbr {

// A degree of believability: an integer level in [0, T+1] for the session
// ceiling T. 0 is the minimum b (the epistemic value of absurdities) and
// T+1 is the maximum t (reserved for tautologies). Base ranks live strictly
// between the two, in [1, T].
struct Value {
  int level = 0;

  static Value bottom() { return Value{0}; }
  static Value top(int ceiling) { return Value{ceiling + 1}; }

  auto operator<=>(const Value&) const = default;
};

inline std::string to_string(Value v) { return std::to_string(v.level); }

struct RankedEntry {
  Formula formula;
  int rank;  // in [1, ceiling]
};

// A finite set of ranked formulas standing for the belief set
// K = Cn({formulas}). The ranks induce the epistemic function: see
// epistemic_value below.
class RankedBase {
 public:
  RankedBase(Signature sig, int ceiling, std::vector<RankedEntry> entries = {})
      : sig_(std::move(sig)), ceiling_(ceiling), entries_(std::move(entries)) {
    if (ceiling_ < 1) throw ConfigError("ceiling must be at least 1");
    for (const auto& e : entries_) check_rank(e.rank);
  }

  const Signature& sig() const { return sig_; }
  int ceiling() const { return ceiling_; }
  const std::vector<RankedEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  Value top() const { return Value::top(ceiling_); }

  RankedBase with_entry(const Formula& f, int rank) const {
    check_rank(rank);
    RankedBase out = *this;
    out.entries_.push_back(RankedEntry{f, rank});
    return out;
  }

  std::vector<Formula> formulas() const {
    std::vector<Formula> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.formula);
    return out;
  }

  // Formulas of rank >= r. For r above the ceiling this is empty, so
  // entailment from it holds exactly for tautologies.
  std::vector<Formula> cut_at_least(int r) const {
    std::vector<Formula> out;
    for (const auto& e : entries_)
      if (e.rank >= r) out.push_back(e.formula);
    return out;
  }

  std::vector<Formula> cut_above(Value v) const { return cut_at_least(v.level + 1); }

 private:
  void check_rank(int rank) const {
    if (rank < 1 || rank > ceiling_)
      throw ConfigError("rank " + std::to_string(rank) +
                        " outside [1, " + std::to_string(ceiling_) + "]");
  }

  Signature sig_;
  int ceiling_;
  std::vector<RankedEntry> entries_;
};

// The epistemic function induced by a ranked base:
//
//   E(f) = t            if f is a tautology
//   E(f) = b            if f is not a consequence of the base
//   E(f) = max { r in [1,T] : cut>=r |= f }   otherwise
//
// The cuts shrink as r grows, so the satisfying set of r is an initial
// segment and the maximum is well defined (r = 1 always works for members).
// This construction satisfies dominance, conjunctiveness, minimality and
// maximality; the validators below and the harness keep it honest.
inline Value epistemic_value(const Semantics& sem, const RankedBase& rb,
                             const Formula& f) {
  if (sem.is_tautology(f, rb.sig())) return rb.top();
  if (!sem.cn_member(rb.formulas(), f, rb.sig())) return Value::bottom();
  for (int r = rb.ceiling(); r >= 2; --r)
    if (sem.entails(rb.cut_at_least(r), f, rb.sig())) return Value{r};
  return Value{1};
}

// -- inputs and reliability ---------------------------------------------------

struct Source {
  std::string id;
  Value trust;
};

class SourceRegistry {
 public:
  void add(const std::string& id, Value trust) {
    if (trust_.count(id)) throw ConfigError("source '" + id + "' already registered");
    if (trust.level < 0) throw ConfigError("trust must be >= 0");
    trust_[id] = trust;
  }

  bool contains(const std::string& id) const { return trust_.count(id) != 0; }

  Value trust(const std::string& id) const {
    auto it = trust_.find(id);
    if (it == trust_.end()) throw UnknownSourceError(id);
    return it->second;
  }

  std::vector<Source> sources() const {
    std::vector<Source> out;
    for (const auto& [id, trust] : trust_) out.push_back(Source{id, trust});
    return out;
  }

  std::size_t size() const { return trust_.size(); }

 private:
  std::map<std::string, Value> trust_;  // ordered for deterministic listings
};

// An utterance: a proposition plus the source claiming it.
struct Input {
  Formula proposition;
  std::string source;
};

// The companion input (~p, s) used when revision contracts the negation.
// Purely syntactic: no simplification of double negations.
inline Input bar_input(const Input& i) {
  return Input{neg(i.proposition), i.source};
}

enum class ReliabilityMode { Constant, AbsurdityAware };

inline std::string to_string(ReliabilityMode m) {
  return m == ReliabilityMode::Constant ? "constant" : "absurdity-aware";
}

// Reliability of an input. Constant mode returns the source's trust
// unchanged. Absurdity-aware mode additionally sends inputs whose
// proposition has no designating valuation to b, which blocks expansion
// into the trivial belief set. Both modes satisfy same-source dominance
// (p |= q implies R(p,s) <= R(q,s)): when p is absurd the left side is b,
// and when p is not absurd neither is q, so both sides equal the trust.
inline Value reliability(const Semantics& sem, const SourceRegistry& registry,
                         const Input& input, ReliabilityMode mode,
                         const Signature& sig) {
  const Value trust = registry.trust(input.source);
  if (mode == ReliabilityMode::AbsurdityAware &&
      sem.entails({input.proposition}, bottom(), sig))
    return Value::bottom();
  return trust;
}

// -- property validators ------------------------------------------------------

struct ValidateConfig {
  long samples = 200;
  std::uint64_t seed = 1;
  int max_depth = 3;
};

// Samples formula pairs and checks the four epistemic-function axioms
// against the derived E. Minimality is asserted in both directions, and
// only when the base is not trivial; maximality is unconditional.
inline PostulateReport validate_epistemic(const Semantics& sem,
                                          const RankedBase& rb,
                                          const ValidateConfig& cfg = {}) {
  PostulateReport report;
  Rng rng(cfg.seed);
  const Signature& sig = rb.sig();
  const bool trivial = sem.is_trivial(rb.formulas(), sig);
  GenConfig gen;
  gen.max_depth = cfg.max_depth;

  auto& e1 = report.stat("epistemic", "e1", "dominance");
  auto& e2 = report.stat("epistemic", "e2", "conjunctiveness");
  auto& e3 = report.stat("epistemic", "e3", "minimality");
  auto& e4 = report.stat("epistemic", "e4", "maximality");
  auto& skipped = report.stat("epistemic", "e3-skipped", "minimality (trivial base)");

  for (long i = 0; i < cfg.samples; ++i) {
    const Formula p = gen_formula(gen, rng, sig);
    // bias dominance toward guaranteed-entailing pairs half the time
    Formula q = gen_formula(gen, rng, sig);
    if (rng.chance(1, 2)) q = disj(p, q);

    const Value ep = epistemic_value(sem, rb, p);
    const Value eq = epistemic_value(sem, rb, q);
    const std::string detail = render(p) + " / " + render(q);

    if (sem.entails({p}, q, sig)) e1.record(ep <= eq, cfg.seed, i, detail);

    const Value epq = epistemic_value(sem, rb, conj(p, q));
    e2.record(ep <= epq || eq <= epq, cfg.seed, i, detail);

    if (!trivial) {
      const bool in_k = sem.cn_member(rb.formulas(), p, sig);
      e3.record(in_k == (ep > Value::bottom()), cfg.seed, i, render(p));
    } else {
      skipped.record(true, cfg.seed, i, "");
    }

    if (ep == rb.top())
      e4.record(sem.is_tautology(p, sig), cfg.seed, i, render(p));
  }
  return report;
}

// Samples same-source pairs with p |= q certified by the kernel and checks
// reliability dominance in the given mode.
inline PostulateReport validate_reliability(const Semantics& sem,
                                            const SourceRegistry& registry,
                                            ReliabilityMode mode,
                                            const Signature& sig,
                                            const ValidateConfig& cfg = {}) {
  PostulateReport report;
  Rng rng(cfg.seed);
  GenConfig gen;
  gen.max_depth = cfg.max_depth;
  auto& r = report.stat("reliability", "r", "same-source dominance");
  const auto sources = registry.sources();
  if (sources.empty()) return report;

  for (long i = 0; i < cfg.samples; ++i) {
    const Source& s = sources[rng.below(sources.size())];
    const Formula p = gen_formula(gen, rng, sig);
    Formula q;
    switch (rng.below(4)) {
      case 0: q = disj(p, gen_formula(gen, rng, sig)); break;
      case 1: q = neg(neg(p)); break;
      case 2: q = implies(gen_formula(gen, rng, sig), p); break;
      default: q = gen_formula(gen, rng, sig); break;
    }
    if (!sem.entails({p}, q, sig)) continue;
    const Value rp = reliability(sem, registry, Input{p, s.id}, mode, sig);
    const Value rq = reliability(sem, registry, Input{q, s.id}, mode, sig);
    r.record(rp <= rq, cfg.seed, i, render(p) + " / " + render(q) + " @" + s.id);
  }
  return report;
}

}  // namespace pacbr

#endif  // PACBR_ENTRENCHMENT_HPP
