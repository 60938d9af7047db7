#ifndef PACBR_FORMULA_HPP
#define PACBR_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/errors.hpp"

namespace pacbr {

// Immutable propositional formula over the connectives ~, &, |, -> plus the
// constants _|_ and top. Value semantics: copying shares the tree.
// p <-> q is not a node kind; it is expanded to (p -> q) & (q -> p) by the
// builders and the parser.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Not, And, Or, Implies, Bottom, Top };

  struct Node {
    Kind kind;
    std::string atom;  // Kind::Atom only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;  // binary kinds only
  };

  Formula() : node_(bottom_node()) {}

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->atom; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  bool is_binary() const {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return equal_nodes(a.node_.get(), b.node_.get());
  }
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

  int depth() const { return node_depth(node_.get()); }

  // Number of AST nodes.
  int size() const { return node_size(node_.get()); }

  // Atom names occurring in the formula, each once, in first-occurrence order.
  std::vector<std::string> atoms() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_atoms(node_.get(), out, seen);
    return out;
  }

  // -- factories ------------------------------------------------------------

  static Formula atom(std::string name) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula bottom() { return Formula(bottom_node()); }
  static Formula top() {
    static const auto n =
        std::make_shared<const Node>(Node{Kind::Top, "", nullptr, nullptr});
    return Formula(n);
  }

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> bottom_node() {
    static const auto n =
        std::make_shared<const Node>(Node{Kind::Bottom, "", nullptr, nullptr});
    return n;
  }

  static bool equal_nodes(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Atom: return a->atom == b->atom;
      case Kind::Bottom:
      case Kind::Top: return true;
      case Kind::Not: return equal_nodes(a->lhs.get(), b->lhs.get());
      default:
        return equal_nodes(a->lhs.get(), b->lhs.get()) &&
               equal_nodes(a->rhs.get(), b->rhs.get());
    }
  }

  static int node_depth(const Node* n) {
    switch (n->kind) {
      case Kind::Atom:
      case Kind::Bottom:
      case Kind::Top: return 0;
      case Kind::Not: return 1 + node_depth(n->lhs.get());
      default:
        return 1 + std::max(node_depth(n->lhs.get()), node_depth(n->rhs.get()));
    }
  }

  static int node_size(const Node* n) {
    switch (n->kind) {
      case Kind::Atom:
      case Kind::Bottom:
      case Kind::Top: return 1;
      case Kind::Not: return 1 + node_size(n->lhs.get());
      default: return 1 + node_size(n->lhs.get()) + node_size(n->rhs.get());
    }
  }

  static void collect_atoms(const Node* n, std::vector<std::string>& out,
                            std::set<std::string>& seen) {
    switch (n->kind) {
      case Kind::Atom:
        if (seen.insert(n->atom).second) out.push_back(n->atom);
        return;
      case Kind::Bottom:
      case Kind::Top: return;
      case Kind::Not: collect_atoms(n->lhs.get(), out, seen); return;
      default:
        collect_atoms(n->lhs.get(), out, seen);
        collect_atoms(n->rhs.get(), out, seen);
        return;
    }
  }

  friend Formula make_binary(Formula::Kind, const Formula&, const Formula&);
  friend Formula neg(const Formula&);

  std::shared_ptr<const Node> node_;
};

inline Formula make_binary(Formula::Kind k, const Formula& a,
                           const Formula& b) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{k, "", a.node_, b.node_}));
}

inline Formula atom(std::string name) { return Formula::atom(std::move(name)); }
inline Formula bottom() { return Formula::bottom(); }
inline Formula top() { return Formula::top(); }

inline Formula neg(const Formula& f) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::Not, "", f.node_, nullptr}));
}
inline Formula conj(const Formula& a, const Formula& b) {
  return make_binary(Formula::Kind::And, a, b);
}
inline Formula disj(const Formula& a, const Formula& b) {
  return make_binary(Formula::Kind::Or, a, b);
}
inline Formula implies(const Formula& a, const Formula& b) {
  return make_binary(Formula::Kind::Implies, a, b);
}
inline Formula iff(const Formula& a, const Formula& b) {
  return conj(implies(a, b), implies(b, a));
}

// Left fold of a nonempty list under &.
inline Formula conj_all(const std::vector<Formula>& fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

}  // namespace pacbr

#endif  // PACBR_FORMULA_HPP
