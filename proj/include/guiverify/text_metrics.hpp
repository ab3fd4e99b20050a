#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace guiverify {

// Levenshtein distance over bytes.
inline std::size_t edit_distance(std::string_view s1, std::string_view s2) {
  if (s1.size() < s2.size()) std::swap(s1, s2);
  std::vector<std::size_t> prev(s2.size() + 1);
  std::vector<std::size_t> curr(s2.size() + 1);
  for (std::size_t j = 0; j <= s2.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= s1.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= s2.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (s1[i - 1] == s2[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[s2.size()];
}

// Normalized similarity: 1 - distance / max length; two empty strings are
// identical by definition.
inline double text_similarity(std::string_view s1, std::string_view s2) {
  if (s1.empty() && s2.empty()) return 1.0;
  const std::size_t longest = std::max(s1.size(), s2.size());
  return 1.0 - static_cast<double>(edit_distance(s1, s2)) / static_cast<double>(longest);
}

// Absent on both sides means nothing to compare (similar); absent on exactly
// one side is a full mismatch.
inline double text_similarity(const std::optional<std::string>& t1,
                              const std::optional<std::string>& t2) {
  if (!t1 && !t2) return 1.0;
  if (!t1 || !t2) return 0.0;
  return text_similarity(std::string_view(*t1), std::string_view(*t2));
}

}  // namespace guiverify
