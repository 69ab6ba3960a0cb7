#ifndef PACKDENSE_VERDICT_HPP
#define PACKDENSE_VERDICT_HPP

#include <string_view>

namespace packdense {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

}  // namespace packdense

#endif  // PACKDENSE_VERDICT_HPP
