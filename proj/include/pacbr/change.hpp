#ifndef PACBR_CHANGE_HPP
#define PACBR_CHANGE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/entrenchment.hpp"
#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/semantics.hpp"

namespace pacbr {

enum class ChangeKind { Expand, Contract, ReviseLevi, ReviseReverseLevi };

inline std::string to_string(ChangeKind k) {
  switch (k) {
    case ChangeKind::Expand: return "expand";
    case ChangeKind::Contract: return "contract";
    case ChangeKind::ReviseLevi: return "revise";
    case ChangeKind::ReviseReverseLevi: return "revise-rl";
  }
  return "?";
}

// One evaluated guard comparison, lhs < rhs. `label` names the two sides,
// e.g. "E<R" for a contraction guard.
struct GuardEval {
  std::string label;
  Value lhs;
  Value rhs;
  bool holds() const { return lhs < rhs; }
};

// The decision-plus-action trace of one applied operator: what was asked,
// which comparisons were made, and whether the change was accepted.
struct ChangeRecord {
  ChangeKind kind;
  Input input;
  bool accepted = false;
  std::vector<GuardEval> guards;

  std::string describe() const {
    std::string out = to_string(kind);
    out += accepted ? ": accepted [" : ": rejected [";
    for (std::size_t i = 0; i < guards.size(); ++i) {
      const auto& g = guards[i];
      if (i) out += "; ";
      out += g.label + ": " + to_string(g.lhs) + (g.holds() ? " < " : " >= ") +
             to_string(g.rhs);
    }
    out += "]";
    return out;
  }
};

// The result of contracting a belief set by a pivot proposition, kept
// intensionally. When accepted, membership uses the cut form
//
//   f in K - I   iff   K |= f  and  cut>E(pivot) |= pivot | f
//
// which agrees with the defining filter E(pivot) < E(pivot | f): both say
// the disjunction clears one more entrenchment level than the pivot. The
// harness re-verifies that equivalence exhaustively on small bases.
struct ContractedView {
  RankedBase origin;
  Formula pivot;
  Value cutlevel;  // E(pivot) at decision time
  bool accepted;

  bool member(const Semantics& sem, const Formula& f) const {
    if (!sem.cn_member(origin.formulas(), f, origin.sig())) return false;
    if (!accepted) return true;
    return sem.entails(origin.cut_above(cutlevel), disj(pivot, f), origin.sig());
  }
};

// A queryable belief set: a ranked base, optionally one pending accepted
// contraction, and propositions accepted by expansion since. Membership is
// decidable throughout; with a pending contraction a query for f reduces to
// the view query for (pending_1 & ... & pending_k) -> f via the deduction
// theorem.
class BeliefState {
 public:
  static BeliefState from_base(RankedBase base) {
    return BeliefState(std::move(base));
  }

  const RankedBase& base() const { return base_; }
  const std::optional<ContractedView>& view() const { return view_; }
  const std::vector<Formula>& pending() const { return pending_; }
  const std::vector<ChangeRecord>& provenance() const { return provenance_; }

  bool base_backed() const { return !view_ && pending_.empty(); }

  bool member(const Semantics& sem, const Formula& f) const {
    if (!view_) {
      std::vector<Formula> premises = base_.formulas();
      premises.insert(premises.end(), pending_.begin(), pending_.end());
      return sem.cn_member(premises, f, base_.sig());
    }
    const Formula target = pending_.empty() ? f : implies(conj_all(pending_), f);
    return view_->member(sem, target);
  }

  bool is_trivial(const Semantics& sem) const { return member(sem, bottom()); }

  // Folds the state into a plain ranked base: surviving base entries keep
  // their ranks, expansions enter at rank 1. This drops whatever part of a
  // contracted set is not generated by surviving entries; it is the
  // flagged "naive" policy, not a faithful re-ranking.
  RankedBase materialize_naive(const Semantics& sem) const {
    std::vector<RankedEntry> kept;
    for (const auto& e : base_.entries()) {
      if (!view_ || view_->member(sem, e.formula)) kept.push_back(e);
    }
    for (const auto& f : pending_) kept.push_back(RankedEntry{f, 1});
    return RankedBase(base_.sig(), base_.ceiling(), std::move(kept));
  }

 private:
  explicit BeliefState(RankedBase base) : base_(std::move(base)) {}

  RankedBase base_;
  std::optional<ContractedView> view_;
  std::vector<Formula> pending_;
  std::vector<ChangeRecord> provenance_;

  friend std::pair<BeliefState, ChangeRecord> expand(
      const Semantics&, const BeliefState&, const Input&, const SourceRegistry&,
      ReliabilityMode);
  friend std::pair<BeliefState, ChangeRecord> contract(
      const Semantics&, const BeliefState&, const Input&, const SourceRegistry&,
      ReliabilityMode);
  friend std::pair<BeliefState, ChangeRecord> revise_levi(
      const Semantics&, const BeliefState&, const Input&, const SourceRegistry&,
      ReliabilityMode);
  friend std::pair<BeliefState, ChangeRecord> revise_reverse_levi(
      const Semantics&, const RankedBase&, const Input&, const SourceRegistry&,
      ReliabilityMode);
};

inline bool member(const Semantics& sem, const BeliefState& st, const Formula& f) {
  return st.member(sem, f);
}
inline bool member(const Semantics& sem, const ContractedView& v, const Formula& f) {
  return v.member(sem, f);
}

// Source-sensitive expansion: accept the proposition whenever the input is
// more reliable than the bottom degree, otherwise leave the set unchanged.
inline std::pair<BeliefState, ChangeRecord> expand(const Semantics& sem,
                                                   const BeliefState& state,
                                                   const Input& input,
                                                   const SourceRegistry& registry,
                                                   ReliabilityMode mode) {
  if (state.view_)
    throw StateError("expansion requires a state with no pending contraction");
  const Value r = reliability(sem, registry, input, mode, state.base().sig());
  GuardEval g{"b<R", Value::bottom(), r};
  ChangeRecord rec{ChangeKind::Expand, input, g.holds(), {g}};
  BeliefState next = state;
  if (rec.accepted) next.pending_.push_back(input.proposition);
  next.provenance_.push_back(rec);
  return {std::move(next), std::move(rec)};
}

// Source-sensitive contraction: remove the pivot when the input outranks
// its entrenchment, strictly. Ties reject the change.
inline std::pair<BeliefState, ChangeRecord> contract(const Semantics& sem,
                                                     const BeliefState& state,
                                                     const Input& input,
                                                     const SourceRegistry& registry,
                                                     ReliabilityMode mode) {
  if (!state.base_backed())
    throw StateError("contraction requires a base-backed state; materialize first");
  const Value e = epistemic_value(sem, state.base(), input.proposition);
  const Value r = reliability(sem, registry, input, mode, state.base().sig());
  GuardEval g{"E<R", e, r};
  ChangeRecord rec{ChangeKind::Contract, input, g.holds(), {g}};
  BeliefState next = state;
  if (rec.accepted)
    next.view_ = ContractedView{state.base(), input.proposition, e, true};
  next.provenance_.push_back(rec);
  return {std::move(next), std::move(rec)};
}

// Levi-style source-sensitive revision: contract by the barred input, then
// expand by the input, provided both guards hold up front; otherwise leave
// the set unchanged. Both guard evaluations are recorded.
inline std::pair<BeliefState, ChangeRecord> revise_levi(const Semantics& sem,
                                                        const BeliefState& state,
                                                        const Input& input,
                                                        const SourceRegistry& registry,
                                                        ReliabilityMode mode) {
  if (!state.base_backed())
    throw StateError("revision requires a base-backed state; materialize first");
  const Signature& sig = state.base().sig();
  const Input barred = bar_input(input);
  const Value e_neg = epistemic_value(sem, state.base(), barred.proposition);
  const Value r_neg = reliability(sem, registry, barred, mode, sig);
  const Value r_in = reliability(sem, registry, input, mode, sig);
  GuardEval g1{"E(~p)<R(~p)", e_neg, r_neg};
  GuardEval g2{"b<R", Value::bottom(), r_in};
  ChangeRecord rec{ChangeKind::ReviseLevi, input, g1.holds() && g2.holds(),
                   {g1, g2}};
  BeliefState next = state;
  if (rec.accepted) {
    next.view_ = ContractedView{state.base(), barred.proposition, e_neg, true};
    next.pending_.push_back(input.proposition);
  }
  next.provenance_.push_back(rec);
  return {std::move(next), std::move(rec)};
}

// EXPERIMENTAL reverse-Levi revision over a belief base (not a closed set):
// add the proposition at rank 1, then contract the enlarged base by the
// negated proposition if that contraction's guard holds on the new base.
// The contraction filters the base entries themselves, so the result is
// again a plain ranked base. Behavior beyond the defining equation
// K * p = (K + p) - ~p is one reading among several.
inline std::pair<BeliefState, ChangeRecord> revise_reverse_levi(
    const Semantics& sem, const RankedBase& base, const Input& input,
    const SourceRegistry& registry, ReliabilityMode mode) {
  const Signature& sig = base.sig();
  const Value r_in = reliability(sem, registry, input, mode, sig);
  GuardEval g1{"b<R", Value::bottom(), r_in};
  if (!g1.holds()) {
    ChangeRecord rec{ChangeKind::ReviseReverseLevi, input, false, {g1}};
    BeliefState st = BeliefState::from_base(base);
    st.provenance_.push_back(rec);
    return {std::move(st), std::move(rec)};
  }
  const RankedBase grown = base.with_entry(input.proposition, 1);
  const Input barred = bar_input(input);
  const Value e_neg = epistemic_value(sem, grown, barred.proposition);
  const Value r_neg = reliability(sem, registry, barred, mode, sig);
  GuardEval g2{"E(~p)<R(~p)", e_neg, r_neg};
  RankedBase result = grown;
  if (g2.holds()) {
    std::vector<RankedEntry> kept;
    for (const auto& e : grown.entries()) {
      const Value lifted =
          epistemic_value(sem, grown, disj(barred.proposition, e.formula));
      if (e_neg < lifted) kept.push_back(e);
    }
    result = RankedBase(sig, base.ceiling(), std::move(kept));
  }
  ChangeRecord rec{ChangeKind::ReviseReverseLevi, input, true, {g1, g2}};
  BeliefState st = BeliefState::from_base(result);
  st.provenance_.push_back(rec);
  return {std::move(st), std::move(rec)};
}

}  // namespace pacbr

#endif  // PACBR_CHANGE_HPP
