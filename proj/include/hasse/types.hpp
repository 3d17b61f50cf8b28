#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hasse {

// Dense element index into a lattice's carrier set. Indices are stable for
// the lifetime of a lattice instance; display names live at I/O boundaries.
using Element = std::uint32_t;

// Operation counts for one instrumented run. Values only grow while a
// counting wrapper is attached; reset between runs. Not thread-safe: a
// wrapper plus its counters belong to a single run on a single thread.
struct OpCounters {
  std::uint64_t leq_calls = 0;
  std::uint64_t join_calls = 0;
  std::uint64_t meet_calls = 0;
  std::uint64_t f_calls = 0;

  void reset() { *this = OpCounters{}; }
  std::uint64_t total() const { return leq_calls + join_calls + meet_calls + f_calls; }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator parameter exceeds the supported range (powerset k, divisor N,
// partition k, attribute universe width).
struct ParameterTooLarge : Error {
  using Error::Error;
};

// Malformed input text. line/column are 1-based; 0 means unknown.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(format(msg, line, column)), line(line), column(column) {}
  std::size_t line;
  std::size_t column;

 private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column);
};

struct UnknownAttribute : Error {
  using Error::Error;
};

// Input relation has a pair without a unique least upper bound (or is not
// even a partial order), so it cannot be completed into a lattice.
struct InputNotJoinSemilattice : Error {
  using Error::Error;
};

// A sequence handed to an algorithm is not a permutation of the carrier.
struct NotAPermutation : Error {
  using Error::Error;
};

// A user-supplied rank key popped an element above an earlier one.
struct InvalidRankKey : Error {
  using Error::Error;
};

// Debug verification of a traversal order failed.
struct InvalidOrder : Error {
  using Error::Error;
};

// An embedding failed validation (injectivity, join preservation, bottom
// preservation, or codomain distributivity).
struct EmbeddingInvalid : Error {
  using Error::Error;
};

}  // namespace hasse
