#ifndef PACBR_GENERATOR_HPP
#define PACBR_GENERATOR_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/parse.hpp"
#include "pacbr/semantics.hpp"

namespace pacbr {

// splitmix64. Tiny, seedable, and identical on every platform, which keeps
// stored counterexamples replayable across builds (the std:: distributions
// are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform-ish integer in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // True with probability num/den.
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

  // Derives an independent stream for (this run, purpose, index); used to
  // give every generated case its own replayable seed.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt,
                           std::uint64_t index) {
    Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ull) ^ (index + 0x61c8864680b583ebull));
    r.next();
    return r.next();
  }

 private:
  std::uint64_t state_;
};

// Knobs for randomized scenario generation. Same seed, same stream.
struct GenConfig {
  int atoms = 2;        // 1..4
  int max_depth = 3;    // 1..5
  int base_size = 4;    // 0..6
  int ceiling = 3;      // 1..5
  int trust_lo = 0;     // >= 0 (b)
  int trust_hi = -1;    // -1 means ceiling + 1 (t)
  std::uint64_t seed = 1;
  long cases = 500;

  void validate() const {
    if (atoms < 1 || atoms > 4) throw ConfigError("atoms must be in 1..4");
    if (max_depth < 1 || max_depth > 5)
      throw ConfigError("max_depth must be in 1..5");
    if (base_size < 0 || base_size > 6)
      throw ConfigError("base_size must be in 0..6");
    if (ceiling < 1 || ceiling > 5) throw ConfigError("ceiling must be in 1..5");
    if (cases < 0) throw ConfigError("cases must be >= 0");
    const int hi = trust_ceiling();
    if (trust_lo < 0 || trust_lo > hi || (trust_hi != -1 && trust_hi < trust_lo))
      throw ConfigError("bad trust range");
  }

  int trust_ceiling() const { return trust_hi == -1 ? ceiling + 1 : trust_hi; }
};

// Atom names used by generated signatures: p, q, r, s.
inline Signature make_signature(int atoms) {
  static const char* names[] = {"p", "q", "r", "s"};
  if (atoms < 1 || atoms > 4) throw ConfigError("atoms must be in 1..4");
  std::vector<std::string> v(names, names + atoms);
  return Signature(std::move(v));
}

inline Formula gen_formula_depth(Rng& rng, const Signature& sig, int depth) {
  if (depth <= 0 || rng.chance(1, 6)) {
    // leaf: mostly atoms, occasionally a constant
    if (rng.chance(1, 10)) return rng.chance(1, 2) ? bottom() : top();
    return atom(sig.atoms()[rng.below(sig.size())]);
  }
  switch (rng.below(4)) {
    case 0: return neg(gen_formula_depth(rng, sig, depth - 1));
    case 1:
      return conj(gen_formula_depth(rng, sig, depth - 1),
                  gen_formula_depth(rng, sig, depth - 1));
    case 2:
      return disj(gen_formula_depth(rng, sig, depth - 1),
                  gen_formula_depth(rng, sig, depth - 1));
    default:
      return implies(gen_formula_depth(rng, sig, depth - 1),
                     gen_formula_depth(rng, sig, depth - 1));
  }
}

inline Formula gen_formula(const GenConfig& cfg, Rng& rng, const Signature& sig) {
  return gen_formula_depth(rng, sig, cfg.max_depth);
}

// -- exhaustive formula families --------------------------------------------

// Designation bitmask over the valuations of a signature, in the
// for_each_valuation order.
struct Bitmask {
  std::vector<std::uint64_t> words;
  std::size_t bits = 0;

  static Bitmask zeros(std::size_t n) {
    Bitmask m;
    m.bits = n;
    m.words.assign((n + 63) / 64, 0);
    return m;
  }
  static Bitmask ones(std::size_t n) {
    Bitmask m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i);
    return m;
  }
  void set(std::size_t i) { words[i / 64] |= (1ull << (i % 64)); }
  bool get(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  bool subset_of(const Bitmask& other) const {
    for (std::size_t w = 0; w < words.size(); ++w)
      if (words[w] & ~other.words[w]) return false;
    return true;
  }
  Bitmask intersect(const Bitmask& other) const {
    Bitmask m = *this;
    for (std::size_t w = 0; w < words.size(); ++w) m.words[w] &= other.words[w];
    return m;
  }
  friend bool operator==(const Bitmask& a, const Bitmask& b) {
    return a.bits == b.bits && a.words == b.words;
  }
};

// Every structurally distinct formula over `sig` up to the given depth,
// bucketed into semantic classes (formulas with identical value vectors).
// Depth-2 families over two atoms already hold every distinct semantics the
// harness needs, while staying a few thousand strong.
class FormulaFamily {
 public:
  static FormulaFamily build(const Semantics& sem, const Signature& sig,
                             int depth) {
    FormulaFamily fam;
    fam.sig_atoms_ = static_cast<int>(sig.size());

    // structurally distinct ASTs, level by level
    std::vector<Formula> level;
    std::set<std::string> seen;
    auto add = [&](const Formula& f) {
      if (seen.insert(render(f)).second) level.push_back(f);
    };
    for (const auto& a : sig.atoms()) add(atom(a));
    add(bottom());
    add(top());
    for (int d = 0; d < depth; ++d) {
      const std::vector<Formula> prev = level;
      for (const auto& f : prev) add(neg(f));
      for (const auto& f : prev)
        for (const auto& g : prev) {
          add(conj(f, g));
          add(disj(f, g));
          add(implies(f, g));
        }
    }
    fam.all_ = std::move(level);

    // value vectors and semantic classes
    std::size_t val_count = 1;
    for (std::size_t i = 0; i < sig.size(); ++i) val_count *= 3;
    fam.valuations_ = val_count;
    std::map<std::vector<TruthValue>, int> class_ids;
    fam.class_of_.resize(fam.all_.size());
    for (std::size_t i = 0; i < fam.all_.size(); ++i) {
      std::vector<TruthValue> vec = value_vector(sem, sig, fam.all_[i]);
      auto [it, inserted] =
          class_ids.emplace(vec, static_cast<int>(fam.reps_.size()));
      if (inserted) {
        fam.reps_.push_back(fam.all_[i]);
        fam.rep_vec_.push_back(it->first);
        Bitmask mask = Bitmask::zeros(val_count);
        for (std::size_t k = 0; k < val_count; ++k)
          if (designated(it->first[k])) mask.set(k);
        fam.rep_des_.push_back(std::move(mask));
      }
      fam.class_of_[i] = it->second;
    }
    return fam;
  }

  static std::vector<TruthValue> value_vector(const Semantics& sem,
                                              const Signature& sig,
                                              const Formula& f) {
    std::vector<TruthValue> vec;
    sem.for_each_valuation(sig, [&](const Valuation& v) {
      vec.push_back(sem.eval(v, f));
      return true;
    });
    return vec;
  }

  const std::vector<Formula>& all() const { return all_; }
  const std::vector<Formula>& representatives() const { return reps_; }
  int class_of(std::size_t ast_index) const { return class_of_[ast_index]; }
  const std::vector<TruthValue>& class_values(int cls) const {
    return rep_vec_[cls];
  }
  const Bitmask& class_designation(int cls) const { return rep_des_[cls]; }
  std::size_t classes() const { return reps_.size(); }
  std::size_t valuations() const { return valuations_; }

  // Deterministic evenly-strided selection of at most `cap` representatives.
  std::vector<Formula> probe_set(std::size_t cap) const {
    if (reps_.size() <= cap) return reps_;
    std::vector<Formula> out;
    out.reserve(cap);
    const double step = static_cast<double>(reps_.size()) / static_cast<double>(cap);
    for (std::size_t i = 0; i < cap; ++i)
      out.push_back(reps_[static_cast<std::size_t>(i * step)]);
    return out;
  }

 private:
  int sig_atoms_ = 0;
  std::size_t valuations_ = 0;
  std::vector<Formula> all_;
  std::vector<int> class_of_;
  std::vector<Formula> reps_;
  std::vector<std::vector<TruthValue>> rep_vec_;
  std::vector<Bitmask> rep_des_;
};

}  // namespace pacbr

#endif  // PACBR_GENERATOR_HPP
