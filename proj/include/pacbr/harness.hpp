#ifndef PACBR_HARNESS_HPP
#define PACBR_HARNESS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/change.hpp"
#include "pacbr/entrenchment.hpp"
#include "pacbr/generator.hpp"
#include "pacbr/parse.hpp"
#include "pacbr/proof.hpp"
#include "pacbr/report.hpp"
#include "pacbr/semantics.hpp"

namespace pacbr {

// Randomized verification of the framework's laws at desk scale: the
// consequence-operator conditions, the epistemic and reliability axioms,
// the expansion postulates (+1)-(+6), the contraction postulates (-1)-(-8),
// revision relative success, and the cut/entrenchment guard equivalence.
//
// Every case is regenerated from (cfg.seed, suite, case index) alone, so a
// stored counterexample can be replayed standalone with replay_case.

namespace harness_detail {

constexpr std::uint64_t salt(const char* s) {
  std::uint64_t h = 1469598103934665603ull;
  while (*s) {
    h ^= static_cast<unsigned char>(*s++);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::size_t kDefaultProbeCap = 600;

inline Formula substitute(const Formula& f,
                          const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = subst.find(f.atom_name());
      return it == subst.end() ? f : it->second;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top: return f;
    case Formula::Kind::Not: return neg(substitute(f.lhs(), subst));
    case Formula::Kind::And:
      return conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Formula::Kind::Or:
      return disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case Formula::Kind::Implies:
      return implies(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
  }
  return f;
}

struct Scenario {
  Signature sig;
  RankedBase base;
  SourceRegistry sources;
  ReliabilityMode mode;
  Input input;
};

// One source per trust level, so guard-boundary inputs are easy to build.
inline SourceRegistry ladder_registry(int ceiling) {
  SourceRegistry reg;
  for (int lvl = 0; lvl <= ceiling + 1; ++lvl)
    reg.add("s" + std::to_string(lvl), Value{lvl});
  return reg;
}

inline RankedBase gen_base(const Semantics&, const GenConfig& cfg, Rng& rng,
                           const Signature& sig) {
  std::vector<RankedEntry> entries;
  const int n = rng.range(0, cfg.base_size);
  for (int i = 0; i < n; ++i) {
    const Formula f =
        rng.chance(1, 14) ? bottom() : gen_formula_depth(rng, sig, cfg.max_depth);
    entries.push_back(RankedEntry{f, rng.range(1, cfg.ceiling)});
  }
  return RankedBase(sig, cfg.ceiling, std::move(entries));
}

// Proposition choices lean on the interesting spots: members of the base,
// easy consequences, negations, and tautological pivots. Uniform sampling
// almost never lands on a guard boundary.
inline Formula gen_pivot(const GenConfig& cfg, Rng& rng, const Signature& sig,
                         const RankedBase& base) {
  const auto& entries = base.entries();
  if (!entries.empty()) {
    switch (rng.below(6)) {
      case 0: return entries[rng.below(entries.size())].formula;
      case 1:
        return disj(entries[rng.below(entries.size())].formula,
                    gen_formula_depth(rng, sig, 1));
      case 2: return neg(entries[rng.below(entries.size())].formula);
      default: break;
    }
  }
  if (rng.chance(1, 8)) {
    const Formula a = atom(sig.atoms()[rng.below(sig.size())]);
    return disj(a, neg(a));
  }
  return gen_formula_depth(rng, sig, cfg.max_depth);
}

inline Input gen_input(const Semantics& sem, const GenConfig& cfg, Rng& rng,
                       const Signature& sig, const RankedBase& base) {
  const Formula p = gen_pivot(cfg, rng, sig, base);
  const int t = base.ceiling() + 1;
  const int e = epistemic_value(sem, base, p).level;
  int lvl;
  switch (rng.below(6)) {
    case 0: lvl = e; break;                       // tie: guard must reject
    case 1: lvl = e < t ? e + 1 : t; break;       // just above
    case 2: lvl = e > 0 ? e - 1 : 0; break;       // just below
    case 3: lvl = 0; break;                       // forced rejection
    case 4: lvl = t; break;
    default: lvl = rng.range(0, t); break;
  }
  lvl = std::max(cfg.trust_lo, std::min(lvl, cfg.trust_ceiling()));
  return Input{p, "s" + std::to_string(lvl)};
}

inline Scenario gen_scenario(const Semantics& sem, const GenConfig& cfg,
                             Rng& rng) {
  Signature sig = make_signature(cfg.atoms);
  RankedBase base = gen_base(sem, cfg, rng, sig);
  SourceRegistry sources = ladder_registry(cfg.ceiling);
  const ReliabilityMode mode = rng.chance(1, 2) ? ReliabilityMode::Constant
                                                : ReliabilityMode::AbsurdityAware;
  Input input = gen_input(sem, cfg, rng, sig, base);
  return Scenario{std::move(sig), std::move(base), std::move(sources), mode,
                  std::move(input)};
}

inline std::vector<char> memberships(const Semantics& sem, const BeliefState& st,
                                     const std::vector<Formula>& probes) {
  std::vector<char> out(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i)
    out[i] = st.member(sem, probes[i]) ? 1 : 0;
  return out;
}

// Sampled closure probe shared by (+1) and (-1): a handful of members must
// not entail a non-member.
inline void check_closure_sampled(const Semantics& sem, const BeliefState& st,
                                  const std::vector<Formula>& probes,
                                  const std::vector<char>& mem, Rng& rng,
                                  PostulateStat& stat, std::uint64_t cseed,
                                  long idx) {
  std::vector<Formula> g;
  for (int tries = 0; tries < 12 && g.size() < 3; ++tries) {
    const std::size_t i = rng.below(probes.size());
    if (mem[i]) g.push_back(probes[i]);
  }
  if (g.empty()) return;
  for (int k = 0; k < 4; ++k) {
    const std::size_t i = rng.below(probes.size());
    if (!sem.entails(g, probes[i], st.base().sig())) continue;
    stat.record(mem[i] != 0, cseed, idx, render(probes[i]));
  }
}

}  // namespace harness_detail

// -- per-case runners ---------------------------------------------------------
//
// Each returns the number of failed checks in that one case, recording all
// verdicts into the report.

inline long run_hilbert_case(const Semantics& sem, const GenConfig& cfg,
                             long idx, PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("hilbert"), idx);
  Rng rng(cseed);
  const Signature sig3 = make_signature(3);
  const auto& schemata = axiom_schemata();
  long failed_before = rep.total_failed();

  for (std::size_t s = 0; s < schemata.size(); ++s) {
    auto& stat = rep.stat("hilbert", "ax" + std::to_string(s + 1),
                          "schema " + std::to_string(s + 1) + " sound");
    Formula instance = schemata[s];
    if (idx > 0) {
      std::map<std::string, Formula> subst;
      for (const char* v : {"p", "q", "r"})
        subst.emplace(v, gen_formula_depth(rng, sig3,
                                           std::min(cfg.max_depth, 4)));
      instance = harness_detail::substitute(instance, subst);
    }
    stat.record(sem.is_tautology(instance, sig3), cseed, idx, render(instance));
  }

  // modus ponens preserves designation
  auto& mp = rep.stat("hilbert", "mp", "modus ponens preserves designation");
  if (idx == 0) {
    const Signature sig2 = make_signature(2);
    const Formula p = atom("p"), q = atom("q");
    sem.for_each_valuation(sig2, [&](const Valuation& v) {
      if (designated(sem.eval(v, p)) && designated(sem.eval(v, implies(p, q))))
        mp.record(designated(sem.eval(v, q)), cseed, idx, "identity MP");
      return true;
    });
  } else {
    const Formula f = gen_formula_depth(rng, sig3, cfg.max_depth);
    const Formula g = gen_formula_depth(rng, sig3, cfg.max_depth);
    bool ok = true;
    sem.for_each_valuation(sig3, [&](const Valuation& v) {
      if (designated(sem.eval(v, f)) && designated(sem.eval(v, implies(f, g))) &&
          !designated(sem.eval(v, g)))
        ok = false;
      return ok;
    });
    mp.record(ok, cseed, idx, render(f) + " / " + render(g));
  }
  return rep.total_failed() - failed_before;
}

inline long run_deduction_case(const Semantics& sem, const GenConfig& cfg,
                               long idx, PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("deduction"), idx);
  Rng rng(cseed);
  const int atoms = std::min(cfg.atoms, 3);
  const Signature sig = make_signature(atoms);
  auto& dt = rep.stat("deduction", "dt", "A,p |= q iff A |= p -> q");
  long failed_before = rep.total_failed();

  auto check = [&](const std::vector<Formula>& a, const Formula& p,
                   const Formula& q) {
    std::vector<Formula> ap = a;
    ap.push_back(p);
    const bool lhs = sem.entails(ap, q, sig);
    const bool rhs = sem.entails(a, implies(p, q), sig);
    dt.record(lhs == rhs, cseed, idx,
              "p=" + render(p) + " q=" + render(q));
  };

  if (idx == 0) {
    for (const auto& name : sig.atoms()) {
      check({}, atom(name), atom(name));
      check({}, atom(name), atom(sig.atoms()[0]));
    }
    return rep.total_failed() - failed_before;
  }
  std::vector<Formula> a;
  const int n = rng.range(0, 3);
  for (int i = 0; i < n; ++i) a.push_back(gen_formula_depth(rng, sig, cfg.max_depth));
  check(a, gen_formula_depth(rng, sig, cfg.max_depth),
        gen_formula_depth(rng, sig, cfg.max_depth));
  return rep.total_failed() - failed_before;
}

inline long run_cn_case(const Semantics& sem, const GenConfig& cfg, long idx,
                        PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("cn"), idx);
  Rng rng(cseed);
  const Signature sig = make_signature(cfg.atoms);
  long failed_before = rep.total_failed();

  auto& cn1 = rep.stat("cn", "cn1", "inclusion");
  auto& cn2 = rep.stat("cn", "cn2", "iteration (sampled)");
  auto& cn3 = rep.stat("cn", "cn3", "monotony");
  auto& cn4 = rep.stat("cn", "cn4", "compactness");
  auto& cn5 = rep.stat("cn", "cn5", "disjunction in premises");

  if (idx == 0) {
    // degenerate corner: q = r, and the goal is the very disjunct
    for (const auto& name : sig.atoms()) {
      const Formula a = atom(name);
      const std::vector<Formula> with_disj = {disj(a, a)};
      const std::vector<Formula> just_a = {a};
      const bool both = sem.cn_member(just_a, a, sig);
      if (both) cn5.record(sem.cn_member(with_disj, a, sig), cseed, idx,
                           "q=r=" + name);
    }
    return rep.total_failed() - failed_before;
  }

  std::vector<Formula> a;
  const int n = rng.range(0, cfg.base_size);
  for (int i = 0; i < n; ++i) a.push_back(gen_formula_depth(rng, sig, cfg.max_depth));
  const Formula p = gen_formula_depth(rng, sig, cfg.max_depth);

  for (const auto& g : a) cn1.record(sem.cn_member(a, g, sig), cseed, idx, render(g));

  {  // iteration, on a sampled subset G of Cn(A)
    std::vector<Formula> g;
    for (int i = 0; i < 3 && !a.empty(); ++i) {
      const Formula& pick = a[rng.below(a.size())];
      const Formula cand =
          rng.chance(1, 2) ? pick : disj(pick, gen_formula_depth(rng, sig, 1));
      if (sem.cn_member(a, cand, sig)) g.push_back(cand);
    }
    if (!g.empty() && sem.entails(g, p, sig))
      cn2.record(sem.cn_member(a, p, sig), cseed, idx, render(p));
  }

  {  // monotony
    std::vector<Formula> b = a;
    b.push_back(gen_formula_depth(rng, sig, cfg.max_depth));
    if (sem.cn_member(a, p, sig))
      cn3.record(sem.cn_member(b, p, sig), cseed, idx, render(p));
  }

  if (sem.cn_member(a, p, sig)) {  // compactness: some finite subset suffices
    bool found = false;
    const std::size_t subsets = std::size_t{1} << a.size();
    for (std::size_t mask = 0; mask < subsets && !found; ++mask) {
      std::vector<Formula> sub;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
      found = sem.entails(sub, p, sig);
    }
    cn4.record(found, cseed, idx, render(p));
  }

  {  // disjunction in premises
    Formula q = gen_formula_depth(rng, sig, cfg.max_depth);
    Formula r = gen_formula_depth(rng, sig, cfg.max_depth);
    if (rng.chance(1, 2)) {  // make the premise likely
      q = conj(p, q);
      r = rng.chance(1, 3) ? q : conj(p, r);
    }
    std::vector<Formula> aq = a, ar = a, aqr = a;
    aq.push_back(q);
    ar.push_back(r);
    aqr.push_back(disj(q, r));
    if (sem.cn_member(aq, p, sig) && sem.cn_member(ar, p, sig))
      cn5.record(sem.cn_member(aqr, p, sig), cseed, idx,
                 "p=" + render(p) + " q=" + render(q) + " r=" + render(r));
  }
  return rep.total_failed() - failed_before;
}

inline long run_epistemic_case(const Semantics& sem, const GenConfig& cfg,
                               long idx, PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("epistemic"), idx);
  Rng rng(cseed);
  const Signature sig = make_signature(cfg.atoms);
  const RankedBase base = harness_detail::gen_base(sem, cfg, rng, sig);
  long failed_before = rep.total_failed();

  ValidateConfig vc;
  vc.samples = 30;
  vc.seed = cseed;
  vc.max_depth = std::min(cfg.max_depth, 3);
  rep.merge(validate_epistemic(sem, base, vc));

  // argmax ladder: E(f) >= r iff the cut at r entails f
  auto& ladder = rep.stat("epistemic", "ladder", "E(f) >= r iff cut(r) |= f");
  for (int k = 0; k < 4; ++k) {
    const Formula f = gen_formula_depth(rng, sig, vc.max_depth);
    if (sem.is_tautology(f, sig)) continue;
    if (!sem.cn_member(base.formulas(), f, sig)) continue;
    const Value e = epistemic_value(sem, base, f);
    bool ok = true;
    for (int r = 1; r <= base.ceiling(); ++r)
      if ((e.level >= r) != sem.entails(base.cut_at_least(r), f, sig)) ok = false;
    ladder.record(ok, cseed, idx, render(f));
  }

  // equivalent formulas get equal epistemic value
  auto& inv = rep.stat("epistemic", "equiv", "equivalence invariance");
  const Formula f = gen_formula_depth(rng, sig, vc.max_depth);
  Formula variant;
  switch (rng.below(4)) {
    case 0: variant = conj(f, f); break;
    case 1: variant = disj(f, f); break;
    case 2: variant = neg(neg(f)); break;
    default: variant = conj(f, top()); break;
  }
  if (sem.equivalent(f, variant, sig))
    inv.record(epistemic_value(sem, base, f) == epistemic_value(sem, base, variant),
               cseed, idx, render(f));
  return rep.total_failed() - failed_before;
}

inline long run_reliability_case(const Semantics& sem, const GenConfig& cfg,
                                 long idx, PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("reliability"), idx);
  const Signature sig = make_signature(cfg.atoms);
  const SourceRegistry reg = harness_detail::ladder_registry(cfg.ceiling);
  const ReliabilityMode mode =
      idx % 2 ? ReliabilityMode::AbsurdityAware : ReliabilityMode::Constant;
  long failed_before = rep.total_failed();
  ValidateConfig vc;
  vc.samples = 20;
  vc.seed = cseed;
  vc.max_depth = std::min(cfg.max_depth, 3);
  rep.merge(validate_reliability(sem, reg, mode, sig, vc));
  return rep.total_failed() - failed_before;
}

inline long run_expansion_case(const Semantics& sem, const GenConfig& cfg,
                               long idx, const std::vector<Formula>& probes,
                               PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("expansion"), idx);
  Rng rng(cseed);
  harness_detail::Scenario sc = harness_detail::gen_scenario(sem, cfg, rng);
  long failed_before = rep.total_failed();

  const BeliefState k = BeliefState::from_base(sc.base);
  auto [k1, rec] = expand(sem, k, sc.input, sc.sources, sc.mode);
  const Formula& p = sc.input.proposition;
  const std::string detail = render(p) + " @" + sc.input.source;

  const auto m0 = harness_detail::memberships(sem, k, probes);
  const auto m1 =
      rec.accepted ? harness_detail::memberships(sem, k1, probes) : m0;

  if (rec.guards[0].rhs == Value::bottom())
    rep.stat("expansion", "coverage-rejected", "scenarios with R = b")
        .record(true, cseed, idx, "");

  // (+2) relative success: accepted runs must contain the proposition;
  // rejected runs return the very same state.
  rep.stat("expansion", "+2", "relative success")
      .record(!rec.accepted || k1.member(sem, p), cseed, idx, detail);

  // (+3) inclusion
  {
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m0[i] && !m1[i]) ok = false;
    rep.stat("expansion", "+3", "inclusion").record(ok, cseed, idx, detail);
  }

  // (+4) vacuity
  if (k.member(sem, p)) {
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m0[i] != m1[i]) ok = false;
    rep.stat("expansion", "+4", "vacuity").record(ok, cseed, idx, detail);
    rep.stat("expansion", "coverage-vacuous", "scenarios with P in K")
        .record(true, cseed, idx, "");
  }

  // (+5) monotony, against a superset base
  {
    RankedBase bigger = sc.base;
    const int extra = rng.range(1, 2);
    for (int i = 0; i < extra; ++i)
      bigger = bigger.with_entry(
          gen_formula_depth(rng, sc.sig, cfg.max_depth), rng.range(1, cfg.ceiling));
    const BeliefState k2 = BeliefState::from_base(bigger);
    auto [k2e, rec2] = expand(sem, k2, sc.input, sc.sources, sc.mode);
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m1[i] && !k2e.member(sem, probes[i])) ok = false;
    rep.stat("expansion", "+5", "monotony").record(ok, cseed, idx, detail);
  }

  // (+6) minimality: the accepted result is exactly Cn(base + P)
  if (rec.accepted) {
    std::vector<Formula> with_p = sc.base.formulas();
    with_p.push_back(p);
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m1[i] != (sem.cn_member(with_p, probes[i], sc.sig) ? 1 : 0)) ok = false;
    rep.stat("expansion", "+6", "minimality").record(ok, cseed, idx, detail);
  }

  // (+1) closure, sampled
  harness_detail::check_closure_sampled(
      sem, k1, probes, m1, rng, rep.stat("expansion", "+1", "closure (sampled)"),
      cseed, idx);
  return rep.total_failed() - failed_before;
}

inline long run_contraction_case(const Semantics& sem, const GenConfig& cfg,
                                 long idx, const std::vector<Formula>& probes,
                                 PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("contraction"), idx);
  Rng rng(cseed);
  harness_detail::Scenario sc = harness_detail::gen_scenario(sem, cfg, rng);
  long failed_before = rep.total_failed();

  const BeliefState k = BeliefState::from_base(sc.base);
  auto [k1, rec] = contract(sem, k, sc.input, sc.sources, sc.mode);
  const Formula& p = sc.input.proposition;
  const std::string detail = render(p) + " @" + sc.input.source;

  const auto m0 = harness_detail::memberships(sem, k, probes);
  const auto m1 =
      rec.accepted ? harness_detail::memberships(sem, k1, probes) : m0;

  // (-2) relative success
  rep.stat("contraction", "-2", "relative success")
      .record(!rec.accepted || !k1.member(sem, p), cseed, idx, detail);

  // (-3) inclusion
  {
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m1[i] && !m0[i]) ok = false;
    rep.stat("contraction", "-3", "inclusion").record(ok, cseed, idx, detail);
  }

  // (-4) vacuity
  if (!k.member(sem, p)) {
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m0[i] != m1[i]) ok = false;
    rep.stat("contraction", "-4", "vacuity").record(ok, cseed, idx, detail);
  }

  // (-6) recovery via the deduction-theorem reduction:
  // f in K implies (P -> f) in K - I, hence f back after re-expansion.
  {
    bool ok = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m0[i] && !k1.member(sem, implies(p, probes[i]))) ok = false;
    rep.stat("contraction", "-6", "recovery").record(ok, cseed, idx, detail);
  }

  // (-1) closure, sampled
  harness_detail::check_closure_sampled(
      sem, k1, probes, m1, rng,
      rep.stat("contraction", "-1", "closure (sampled)"), cseed, idx);

  // (-5) extensionality on a same-source equivalent variant
  {
    Formula variant;
    switch (rng.below(4)) {
      case 0: variant = conj(p, p); break;
      case 1: variant = disj(p, p); break;
      case 2: variant = neg(neg(p)); break;
      default: variant = implies(top(), p); break;
    }
    if (sem.equivalent(p, variant, sc.sig)) {
      auto [k1v, recv] =
          contract(sem, k, Input{variant, sc.input.source}, sc.sources, sc.mode);
      bool ok = recv.accepted == rec.accepted;
      const auto mv =
          recv.accepted ? harness_detail::memberships(sem, k1v, probes) : m0;
      for (std::size_t i = 0; ok && i < probes.size(); ++i)
        if (m1[i] != mv[i]) ok = false;
      rep.stat("contraction", "-5", "extensionality").record(ok, cseed, idx, detail);
    }
  }

  // (-7) conjunctive overlap and (-8) conjunctive inclusion, on same-source
  // triples with P3 = P1 & P2
  {
    const Formula p2 = harness_detail::gen_pivot(cfg, rng, sc.sig, sc.base);
    const Formula p3 = conj(p, p2);
    const Input i2{p2, sc.input.source};
    const Input i3{p3, sc.input.source};
    auto [kb, recb] = contract(sem, k, i2, sc.sources, sc.mode);
    auto [kc, recc] = contract(sem, k, i3, sc.sources, sc.mode);
    const auto mb = recb.accepted ? harness_detail::memberships(sem, kb, probes) : m0;
    const auto mc = recc.accepted ? harness_detail::memberships(sem, kc, probes) : m0;

    bool overlap = true;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (m1[i] && mb[i] && !mc[i]) overlap = false;
    rep.stat("contraction", "-7", "conjunctive overlap")
        .record(overlap, cseed, idx, detail + " / " + render(p2));

    if (!kc.member(sem, p)) {
      bool incl = true;
      for (std::size_t i = 0; i < probes.size(); ++i)
        if (mc[i] && !m1[i]) incl = false;
      rep.stat("contraction", "-8", "conjunctive inclusion")
          .record(incl, cseed, idx, detail + " / " + render(p2));
    }
  }
  return rep.total_failed() - failed_before;
}

inline long run_revision_case(const Semantics& sem, const GenConfig& cfg,
                              long idx, const std::vector<Formula>& probes,
                              PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("revision"), idx);
  Rng rng(cseed);
  harness_detail::Scenario sc = harness_detail::gen_scenario(sem, cfg, rng);
  long failed_before = rep.total_failed();

  const BeliefState k = BeliefState::from_base(sc.base);
  auto [k1, rec] = revise_levi(sem, k, sc.input, sc.sources, sc.mode);
  const std::string detail = render(sc.input.proposition) + " @" + sc.input.source;

  // relative success: either the proposition is in, or the set is unchanged
  bool ok = true;
  if (rec.accepted) {
    ok = k1.member(sem, sc.input.proposition);
  } else {
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (k1.member(sem, probes[i]) != k.member(sem, probes[i])) ok = false;
  }
  rep.stat("revision", "rel-success", "relative success")
      .record(ok, cseed, idx, detail);
  return rep.total_failed() - failed_before;
}

inline long run_guard_case(const Semantics& sem, const GenConfig& cfg, long idx,
                           PostulateReport& rep) {
  using harness_detail::salt;
  const std::uint64_t cseed = Rng::mix(cfg.seed, salt("guard"), idx);
  Rng rng(cseed);
  const Signature sig = make_signature(cfg.atoms);
  const RankedBase base = harness_detail::gen_base(sem, cfg, rng, sig);
  long failed_before = rep.total_failed();

  auto& eq = rep.stat("guard", "equiv",
                      "E(p) < E(p|q) iff cut>E(p) |= p|q, for E(p) < t");
  for (int k = 0; k < 6; ++k) {
    const Formula p = harness_detail::gen_pivot(cfg, rng, sig, base);
    const Formula q = gen_formula_depth(rng, sig, cfg.max_depth);
    const Value ep = epistemic_value(sem, base, p);
    if (ep == base.top()) continue;  // tautological pivot: no guard can pass
    const bool lhs = epistemic_value(sem, base, disj(p, q)) > ep;
    const bool rhs = sem.entails(base.cut_above(ep), disj(p, q), sig);
    eq.record(lhs == rhs, cseed, idx, render(p) + " / " + render(q));
  }
  return rep.total_failed() - failed_before;
}

// -- suites -------------------------------------------------------------------

inline PostulateReport check_hilbert_soundness(const Semantics& sem,
                                               const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_hilbert_case(sem, cfg, i, rep);
  return rep;
}

inline PostulateReport check_deduction_theorem(const Semantics& sem,
                                               const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_deduction_case(sem, cfg, i, rep);
  return rep;
}

inline PostulateReport check_cn_properties(const Semantics& sem,
                                           const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_cn_case(sem, cfg, i, rep);
  return rep;
}

inline PostulateReport check_epistemic_axioms(const Semantics& sem,
                                              const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_epistemic_case(sem, cfg, i, rep);
  return rep;
}

inline PostulateReport check_reliability_axiom(const Semantics& sem,
                                               const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_reliability_case(sem, cfg, i, rep);
  return rep;
}

inline std::vector<Formula> probe_family(const Semantics& sem,
                                         const GenConfig& cfg) {
  const Signature sig = make_signature(cfg.atoms);
  return FormulaFamily::build(sem, sig, 2)
      .probe_set(harness_detail::kDefaultProbeCap);
}

inline PostulateReport check_expansion_postulates(const Semantics& sem,
                                                  const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  const auto probes = probe_family(sem, cfg);
  for (long i = 0; i < cfg.cases; ++i)
    run_expansion_case(sem, cfg, i, probes, rep);
  return rep;
}

inline PostulateReport check_contraction_postulates(const Semantics& sem,
                                                    const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  const auto probes = probe_family(sem, cfg);
  for (long i = 0; i < cfg.cases; ++i)
    run_contraction_case(sem, cfg, i, probes, rep);
  return rep;
}

inline PostulateReport check_revision_success(const Semantics& sem,
                                              const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  const auto probes = probe_family(sem, cfg);
  for (long i = 0; i < cfg.cases; ++i)
    run_revision_case(sem, cfg, i, probes, rep);
  return rep;
}

inline PostulateReport check_guard_equivalence(const Semantics& sem,
                                               const GenConfig& cfg) {
  cfg.validate();
  PostulateReport rep;
  for (long i = 0; i < cfg.cases; ++i) run_guard_case(sem, cfg, i, rep);
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hilbert", "deduction", "cn",       "epistemic", "reliability",
      "expansion", "contraction", "revision", "guard"};
  return names;
}

// Runs the selected suites (all of them when `which` is empty) and merges
// their reports. Unknown names raise ConfigError.
inline PostulateReport run_suite(const Semantics& sem, const GenConfig& cfg,
                                 const std::set<std::string>& which = {}) {
  for (const auto& name : which) {
    bool known = false;
    for (const auto& n : suite_names()) known = known || n == name;
    if (!known) throw ConfigError("unknown suite '" + name + "'");
  }
  auto selected = [&](const char* name) {
    return which.empty() || which.count(name) != 0;
  };
  PostulateReport rep;
  if (selected("hilbert")) rep.merge(check_hilbert_soundness(sem, cfg));
  if (selected("deduction")) rep.merge(check_deduction_theorem(sem, cfg));
  if (selected("cn")) rep.merge(check_cn_properties(sem, cfg));
  if (selected("epistemic")) rep.merge(check_epistemic_axioms(sem, cfg));
  if (selected("reliability")) rep.merge(check_reliability_axiom(sem, cfg));
  if (selected("expansion")) rep.merge(check_expansion_postulates(sem, cfg));
  if (selected("contraction")) rep.merge(check_contraction_postulates(sem, cfg));
  if (selected("revision")) rep.merge(check_revision_success(sem, cfg));
  if (selected("guard")) rep.merge(check_guard_equivalence(sem, cfg));
  return rep;
}

// Re-runs a single stored case; true iff it fails again.
inline bool replay_case(const Semantics& sem, const GenConfig& cfg,
                        const std::string& suite, long case_index) {
  PostulateReport rep;
  if (suite == "hilbert") return run_hilbert_case(sem, cfg, case_index, rep) > 0;
  if (suite == "deduction") return run_deduction_case(sem, cfg, case_index, rep) > 0;
  if (suite == "cn") return run_cn_case(sem, cfg, case_index, rep) > 0;
  if (suite == "epistemic") return run_epistemic_case(sem, cfg, case_index, rep) > 0;
  if (suite == "reliability")
    return run_reliability_case(sem, cfg, case_index, rep) > 0;
  if (suite == "expansion") {
    const auto probes = probe_family(sem, cfg);
    return run_expansion_case(sem, cfg, case_index, probes, rep) > 0;
  }
  if (suite == "contraction") {
    const auto probes = probe_family(sem, cfg);
    return run_contraction_case(sem, cfg, case_index, probes, rep) > 0;
  }
  if (suite == "revision") {
    const auto probes = probe_family(sem, cfg);
    return run_revision_case(sem, cfg, case_index, probes, rep) > 0;
  }
  if (suite == "guard") return run_guard_case(sem, cfg, case_index, rep) > 0;
  throw ConfigError("unknown suite '" + suite + "'");
}

}  // namespace pacbr

#endif  // PACBR_HARNESS_HPP
