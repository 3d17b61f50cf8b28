#pragma once

#include <string>
#include <vector>

#include "hasse/types.hpp"

namespace hasse {

// Outcome of a structural check. `failures` decide ok(); `notes` carry
// informational observations (for example meet-preservation probes on a
// join-only embedding) that do not invalidate the subject.
struct ValidationReport {
  struct Item {
    std::string law;                    // short law tag, e.g. "lub-unique"
    std::vector<std::string> witness;   // element names involved
    std::string detail;                 // human-readable explanation
  };

  std::vector<Item> failures;
  std::vector<Item> notes;

  bool ok() const { return failures.empty(); }

  void fail(std::string law, std::vector<std::string> witness, std::string detail) {
    failures.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
  void note(std::string law, std::vector<std::string> witness, std::string detail) {
    notes.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  // One line per item, failures first.
  std::string summary() const;
};

// Lattice input failed validation; the report names the first offending
// pair or triple.
struct LatticeValidationError : Error {
  explicit LatticeValidationError(ValidationReport r)
      : Error(r.summary()), report(std::move(r)) {}
  ValidationReport report;
};

}  // namespace hasse
