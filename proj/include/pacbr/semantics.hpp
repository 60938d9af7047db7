#ifndef PACBR_SEMANTICS_HPP
#define PACBR_SEMANTICS_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/truth.hpp"

namespace pacbr {

// The ordered, finite set of atom names a session works over. Every formula
// handled by a Semantics call must draw its atoms from here.
class Signature {
 public:
  explicit Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ConfigError("signature must be nonempty");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!index_.emplace(atoms_[i], static_cast<int>(i)).second)
        throw ConfigError("duplicate atom '" + atoms_[i] + "' in signature");
    }
  }

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MissingAtomError(name);
    return it->second;
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, int> index_;
};

// A total assignment of truth values to the atoms of one signature. Holds a
// non-owning pointer to the signature; keep the signature alive while the
// valuation is in use.
class Valuation {
 public:
  Valuation(const Signature& sig, TruthValue fill = TruthValue::False)
      : sig_(&sig), values_(sig.size(), fill) {}

  const Signature& signature() const { return *sig_; }

  TruthValue at(int index) const { return values_[static_cast<std::size_t>(index)]; }
  TruthValue of(const std::string& atom) const { return values_[sig_->index_of(atom)]; }
  void set(int index, TruthValue v) { values_[static_cast<std::size_t>(index)] = v; }
  void set(const std::string& atom, TruthValue v) { values_[sig_->index_of(atom)] = v; }

 private:
  const Signature* sig_;
  std::vector<TruthValue> values_;
};

// Three-valued evaluation and the designated-value consequence relation,
// decided by exhaustive enumeration of the 3^n valuations of the signature.
// All operations are pure; a Semantics object is just the truth matrices
// plus the enumeration cap, so corrupted-table variants can be studied
// side by side with the real logic.
class Semantics {
 public:
  explicit Semantics(Matrices m = Matrices::pac(), std::size_t atom_cap = 12)
      : matrices_(m), atom_cap_(atom_cap) {}

  const Matrices& matrices() const { return matrices_; }
  std::size_t atom_cap() const { return atom_cap_; }

  TruthValue eval(const Valuation& v, const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Atom: return v.of(f.atom_name());
      case Formula::Kind::Bottom: return TruthValue::False;
      case Formula::Kind::Top: return TruthValue::True;
      case Formula::Kind::Not:
        return matrices_.apply(Connective::Not, eval(v, f.lhs()),
                               TruthValue::False);
      case Formula::Kind::And:
        return matrices_.apply(Connective::And, eval(v, f.lhs()), eval(v, f.rhs()));
      case Formula::Kind::Or:
        return matrices_.apply(Connective::Or, eval(v, f.lhs()), eval(v, f.rhs()));
      case Formula::Kind::Implies:
        return matrices_.apply(Connective::Implies, eval(v, f.lhs()),
                               eval(v, f.rhs()));
    }
    return TruthValue::False;
  }

  // Calls fn(const Valuation&) for every valuation of sig, in a fixed order
  // (atom 0 cycles fastest through -1, 0, 1). Stops early when fn returns
  // false. Returns false iff stopped early.
  template <class Fn>
  bool for_each_valuation(const Signature& sig, Fn&& fn) const {
    if (sig.size() > atom_cap_) throw AtomCapError(sig.size(), atom_cap_);
    Valuation v(sig, TruthValue::False);
    const int n = static_cast<int>(sig.size());
    while (true) {
      if (!fn(static_cast<const Valuation&>(v))) return false;
      int i = 0;
      for (; i < n; ++i) {
        if (v.at(i) != TruthValue::True) {
          v.set(i, value_from_index(value_index(v.at(i)) + 1));
          break;
        }
        v.set(i, TruthValue::False);
      }
      if (i == n) return true;
    }
  }

  // premises |= goal : every valuation designating all premises designates
  // the goal.
  bool entails(const std::vector<Formula>& premises, const Formula& goal,
               const Signature& sig) const {
    return entails_range(premises.data(), premises.size(), goal, sig);
  }
  bool entails(std::initializer_list<Formula> premises, const Formula& goal,
               const Signature& sig) const {
    return entails_range(premises.begin(), premises.size(), goal, sig);
  }

  bool is_tautology(const Formula& f, const Signature& sig) const {
    return entails_range(nullptr, 0, f, sig);
  }

  bool equivalent(const Formula& f, const Formula& g, const Signature& sig) const {
    return entails_range(&f, 1, g, sig) && entails_range(&g, 1, f, sig);
  }

  // Membership in the consequence operator of a finite base. For finite
  // bases this coincides with semantic entailment from the whole set.
  bool cn_member(const std::vector<Formula>& base, const Formula& f,
                 const Signature& sig) const {
    return entails(base, f, sig);
  }
  bool cn_member(std::initializer_list<Formula> base, const Formula& f,
                 const Signature& sig) const {
    return entails(base, f, sig);
  }

  // True iff the base has no designating valuation, i.e. its belief set is
  // the trivial one containing every proposition.
  bool is_trivial(const std::vector<Formula>& base, const Signature& sig) const {
    return entails(base, bottom(), sig);
  }
  bool is_trivial(std::initializer_list<Formula> base, const Signature& sig) const {
    return entails(base, bottom(), sig);
  }

 private:
  bool entails_range(const Formula* premises, std::size_t n, const Formula& goal,
                     const Signature& sig) const {
    return for_each_valuation(sig, [&](const Valuation& v) {
      for (std::size_t i = 0; i < n; ++i)
        if (!designated(eval(v, premises[i]))) return true;  // premise refuted
      return designated(eval(v, goal));
    });
  }

  Matrices matrices_;
  std::size_t atom_cap_;
};

}  // namespace pacbr

#endif  // PACBR_SEMANTICS_HPP
