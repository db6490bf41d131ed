#include "projlab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace projlab {

const Verdict* PropertyReport::find(const std::string& property) const {
  auto it = std::find_if(verdicts_.begin(), verdicts_.end(),
                         [&](const Verdict& v) { return v.property == property; });
  return it == verdicts_.end() ? nullptr : &*it;
}

const Verdict& PropertyReport::at(const std::string& property) const {
  if (const auto* v = find(property)) return *v;
  throw std::out_of_range("property " + property + " was not checked");
}

bool PropertyReport::all_pass() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.pass; });
}

std::string PropertyReport::summary() const {
  std::ostringstream os;
  for (const auto& v : verdicts_) {
    os << v.property << ": " << (v.pass ? "pass" : "FAIL");
    if (!v.pass && !v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace projlab
