#include "ccspace/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccspace {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::discrepancy: return "discrepancy";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::not_evaluated: return "not_evaluated";
  }
  return "unknown";
}

const Check* CheckReport::find(std::string_view id) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

const Check& CheckReport::at(std::string_view id) const {
  if (const Check* c = find(id)) return *c;
  throw std::out_of_range("no check named '" + std::string(id) + "'");
}

bool CheckReport::clean() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.failed(); });
}

}  // namespace ccspace
