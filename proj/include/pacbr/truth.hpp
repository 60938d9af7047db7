#ifndef PACBR_TRUTH_HPP
#define PACBR_TRUTH_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <string>

namespace pacbr {

// The three truth values of PAC: true (1), "both true and false" (0),
// false (-1). The designated values are {True, Both}.
enum class TruthValue : std::int8_t {
  False = -1,
  Both = 0,
  True = 1,
};

constexpr bool designated(TruthValue v) { return v != TruthValue::False; }

// Array index for a value: -1 -> 0, 0 -> 1, 1 -> 2.
constexpr int value_index(TruthValue v) { return static_cast<int>(v) + 1; }

constexpr TruthValue value_from_index(int i) {
  return static_cast<TruthValue>(i - 1);
}

inline std::string to_string(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "1";
    case TruthValue::Both: return "0";
    case TruthValue::False: return "-1";
  }
  return "?";
}

enum class Connective : std::uint8_t { And, Or, Implies, Not };

// The truth matrices of the PAC connectives. Rows and columns are indexed
// by value_index, i.e. in the order -1, 0, 1. Kept as mutable data (rather
// than burned into the evaluator) so test code can study corrupted variants.
struct Matrices {
  using Row = std::array<TruthValue, 3>;
  using Table = std::array<Row, 3>;

  Table conj;
  Table disj;
  Table impl;
  Row neg;

  static constexpr Matrices pac() {
    constexpr TruthValue F = TruthValue::False;
    constexpr TruthValue B = TruthValue::Both;
    constexpr TruthValue T = TruthValue::True;
    Matrices m{};
    // conjunction: minimum in the order -1 < 0 < 1
    m.conj = Table{Row{F, F, F},   // lhs = -1
                   Row{F, B, B},   // lhs = 0
                   Row{F, B, T}};  // lhs = 1
    // disjunction: maximum
    m.disj = Table{Row{F, B, T},
                   Row{B, B, T},
                   Row{T, T, T}};
    // implication: value of the consequent when the antecedent is
    // designated, 1 otherwise
    m.impl = Table{Row{T, T, T},
                   Row{F, B, T},
                   Row{F, B, T}};
    // negation: 1 and -1 swap, 0 is a fixed point
    m.neg = Row{T, B, F};
    return m;
  }

  constexpr TruthValue apply(Connective c, TruthValue a, TruthValue b) const {
    switch (c) {
      case Connective::And: return conj[value_index(a)][value_index(b)];
      case Connective::Or: return disj[value_index(a)][value_index(b)];
      case Connective::Implies: return impl[value_index(a)][value_index(b)];
      case Connective::Not: return neg[value_index(a)];
    }
    return TruthValue::False;
  }

  // Mutable access to one table cell, for mutation studies. For Not the
  // column index is ignored.
  TruthValue& entry(Connective c, TruthValue row, TruthValue col) {
    switch (c) {
      case Connective::And: return conj[value_index(row)][value_index(col)];
      case Connective::Or: return disj[value_index(row)][value_index(col)];
      case Connective::Implies: return impl[value_index(row)][value_index(col)];
      case Connective::Not: break;
    }
    return neg[value_index(row)];
  }
};

// Text dump of the four matrices, laid out side by side with rows and
// columns in the order 1, 0, -1.
inline std::string truth_table_dump(const Matrices& m = Matrices::pac()) {
  const TruthValue order[3] = {TruthValue::True, TruthValue::Both,
                               TruthValue::False};
  auto pad = [](const std::string& s) {
    return std::string(3 - s.size(), ' ') + s;
  };
  auto cell = [&](TruthValue v) { return pad(to_string(v)); };
  const std::string gap = "   ";
  std::ostringstream out;
  out << pad("&") << " |  1  0 -1" << gap << pad("|") << " |  1  0 -1" << gap
      << pad("->") << " |  1  0 -1" << gap << pad("~") << " |\n";
  out << "----+---------" << gap << "----+---------" << gap
      << "----+---------" << gap << "----+---\n";
  for (TruthValue a : order) {
    out << cell(a) << " |";
    for (TruthValue b : order) out << cell(m.apply(Connective::And, a, b));
    out << gap << cell(a) << " |";
    for (TruthValue b : order) out << cell(m.apply(Connective::Or, a, b));
    out << gap << cell(a) << " |";
    for (TruthValue b : order) out << cell(m.apply(Connective::Implies, a, b));
    out << gap << cell(a) << " |" << cell(m.apply(Connective::Not, a, a));
    out << "\n";
  }
  return out.str();
}

}  // namespace pacbr

#endif  // PACBR_TRUTH_HPP
