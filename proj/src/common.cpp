#include <sstream>

#include "hasse/lattice.hpp"
#include "hasse/report.hpp"
#include "hasse/types.hpp"

namespace hasse {

std::string SyntaxError::format(const std::string& msg, std::size_t line, std::size_t column) {
  std::ostringstream os;
  os << "syntax error";
  if (line > 0) {
    os << " at line " << line;
    if (column > 0) os << ", column " << column;
  }
  os << ": " << msg;
  return os.str();
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  auto emit = [&os](const char* kind, const Item& item) {
    os << kind << " " << item.law;
    if (!item.witness.empty()) {
      os << " [";
      for (std::size_t i = 0; i < item.witness.size(); ++i) {
        if (i > 0) os << ", ";
        os << item.witness[i];
      }
      os << "]";
    }
    if (!item.detail.empty()) os << ": " << item.detail;
    os << "\n";
  };
  if (ok() && notes.empty()) {
    os << "ok\n";
  }
  for (const auto& f : failures) emit("violated", f);
  for (const auto& n : notes) emit("note", n);
  return os.str();
}

std::optional<Element> Lattice::find(std::string_view wanted) const {
  for (Element x = 0; x < size(); ++x) {
    if (name(x) == wanted) return x;
  }
  return std::nullopt;
}

}  // namespace hasse
