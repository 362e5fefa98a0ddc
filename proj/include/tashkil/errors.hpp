#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tashkil {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A diacritic pattern was applied to a word of a different length.
struct LengthMismatch : Error {
  using Error::Error;
};

// A character outside the supported alphabet was fed to the Buckwalter codec.
struct UnmappableChar : Error {
  UnmappableChar(const std::string& what, std::size_t at)
      : Error(what + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

struct IoFailure : Error {
  using Error::Error;
};

struct EmptyCorpus : Error {
  using Error::Error;
};

struct FormatVersionMismatch : Error {
  using Error::Error;
};

struct CorruptTable : Error {
  using Error::Error;
};

// Reference and hypothesis words disagree on their base letters.
struct LetterMismatch : Error {
  using Error::Error;
};

struct EmptyColumn : Error {
  using Error::Error;
};

// Every path through the lattice scored -inf (hard emission constraints).
struct AllPathsImpossible : Error {
  using Error::Error;
};

struct UnknownState : Error {
  using Error::Error;
};

}  // namespace tashkil
