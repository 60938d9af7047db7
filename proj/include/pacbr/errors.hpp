#ifndef PACBR_ERRORS_HPP
#define PACBR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pacbr {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `position` is a 0-based byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// An atom token that is not part of the session signature.
struct UnknownAtomError : ParseError {
  UnknownAtomError(const std::string& atom, std::size_t position)
      : ParseError("unknown atom '" + atom + "'", position), atom(atom) {}
  std::string atom;
};

// Evaluation met an atom the valuation does not cover.
struct MissingAtomError : Error {
  explicit MissingAtomError(const std::string& atom)
      : Error("valuation does not assign atom '" + atom + "'"), atom(atom) {}
  std::string atom;
};

// Model enumeration was asked to sweep more atoms than the configured cap.
struct AtomCapError : Error {
  AtomCapError(std::size_t atoms, std::size_t cap)
      : Error("signature has " + std::to_string(atoms) +
              " atoms, above the enumeration cap of " + std::to_string(cap)) {}
};

struct UnknownSourceError : Error {
  explicit UnknownSourceError(const std::string& id)
      : Error("unknown source '" + id + "'"), id(id) {}
  std::string id;
};

// A belief-change operator was applied to a state in the wrong shape
// (e.g. contraction on a state with pending, unmaterialized changes).
struct StateError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace pacbr

#endif  // PACBR_ERRORS_HPP
