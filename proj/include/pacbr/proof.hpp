#ifndef PACBR_PROOF_HPP
#define PACBR_PROOF_HPP

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pacbr/formula.hpp"
#include "pacbr/parse.hpp"

namespace pacbr {

// The 14 axiom schemata of PAC's Hilbert system, written over the schema
// variables p, q, r. Biconditionals are kept in their expanded &-of-> form,
// so the matcher only ever sees the four core connectives.
inline const std::vector<Formula>& axiom_schemata() {
  static const std::vector<Formula> schemata = [] {
    const char* text[] = {
        "p -> (q -> p)",
        "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
        "((p -> q) -> p) -> p",
        "p & q -> p",
        "p & q -> q",
        "p -> (q -> p & q)",
        "p -> p | q",
        "q -> p | q",
        "(p -> r) -> ((q -> r) -> (p | q -> r))",
        "~(p | q) <-> ~p & ~q",
        "~(p & q) <-> ~p | ~q",
        "~~p <-> p",
        "~(p -> q) <-> p & ~q",
        "p | ~p",
    };
    std::vector<Formula> out;
    for (const char* t : text) out.push_back(parse_free(t));
    return out;
  }();
  return schemata;
}

// True iff `candidate` arises from `schema` by simultaneous substitution of
// formulas for the schema's variables.
inline bool matches_schema(const Formula& schema, const Formula& candidate) {
  std::map<std::string, Formula> bind;
  auto walk = [&](auto&& self, const Formula& s, const Formula& c) -> bool {
    if (s.kind() == Formula::Kind::Atom) {
      auto [it, inserted] = bind.emplace(s.atom_name(), c);
      return inserted || it->second == c;
    }
    if (s.kind() != c.kind()) return false;
    switch (s.kind()) {
      case Formula::Kind::Bottom:
      case Formula::Kind::Top: return true;
      case Formula::Kind::Not: return self(self, s.lhs(), c.lhs());
      default:
        return self(self, s.lhs(), c.lhs()) && self(self, s.rhs(), c.rhs());
    }
  };
  return walk(walk, schema, candidate);
}

// Instance of axiom schema `schema` (1-based, 1..14).
struct AxiomInstance {
  int schema;
};
struct Premise {};
// Modus ponens from two earlier lines: `antecedent` holds A and
// `implication` holds A -> B, where B is the current line. 1-based.
struct ModusPonens {
  int antecedent;
  int implication;
};

using Justification = std::variant<AxiomInstance, Premise, ModusPonens>;

struct ProofLine {
  Formula formula;
  Justification just;
};

using Proof = std::vector<ProofLine>;

struct ProofCheck {
  bool ok = true;
  int line = 0;  // 1-based index of the first invalid line when !ok
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline ProofCheck check_proof(const Proof& proof,
                              std::span<const Formula> premises) {
  const auto& schemata = axiom_schemata();
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const ProofLine& line = proof[i];
    const int lineno = static_cast<int>(i) + 1;
    ProofCheck bad{false, lineno, ""};
    if (const auto* ax = std::get_if<AxiomInstance>(&line.just)) {
      if (ax->schema < 1 || ax->schema > static_cast<int>(schemata.size())) {
        bad.reason = "axiom schema id out of range";
        return bad;
      }
      if (!matches_schema(schemata[ax->schema - 1], line.formula)) {
        bad.reason = "formula is not an instance of schema " +
                     std::to_string(ax->schema);
        return bad;
      }
    } else if (std::holds_alternative<Premise>(line.just)) {
      bool found = false;
      for (const Formula& p : premises)
        if (p == line.formula) { found = true; break; }
      if (!found) {
        bad.reason = "formula is not among the premises";
        return bad;
      }
    } else {
      const auto& mp = std::get<ModusPonens>(line.just);
      if (mp.antecedent < 1 || mp.antecedent > static_cast<int>(i) ||
          mp.implication < 1 || mp.implication > static_cast<int>(i)) {
        bad.reason = "modus ponens must reference earlier lines";
        return bad;
      }
      const Formula& a = proof[mp.antecedent - 1].formula;
      const Formula& ab = proof[mp.implication - 1].formula;
      if (ab.kind() != Formula::Kind::Implies || ab.lhs() != a ||
          ab.rhs() != line.formula) {
        bad.reason = "line " + std::to_string(mp.implication) +
                     " is not (line " + std::to_string(mp.antecedent) +
                     " -> this line)";
        return bad;
      }
    }
  }
  return ProofCheck{};
}

inline ProofCheck check_proof(const Proof& proof,
                              const std::vector<Formula>& premises) {
  return check_proof(proof, std::span<const Formula>(premises));
}

}  // namespace pacbr

#endif  // PACBR_PROOF_HPP
