#include "dtwavg/mean_result.hpp"

namespace dtwavg {

std::string_view to_string(MeanMethod method) {
  switch (method) {
    case MeanMethod::ExactDp: return "exact";
    case MeanMethod::ExactBruteforce: return "exact-bruteforce";
    case MeanMethod::Dba: return "dba";
    case MeanMethod::Ssg: return "ssg";
  }
  return "unknown";
}

std::optional<MeanMethod> parse_method(std::string_view name) {
  for (const auto m : {MeanMethod::ExactDp, MeanMethod::ExactBruteforce, MeanMethod::Dba,
                       MeanMethod::Ssg}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

}  // namespace dtwavg
