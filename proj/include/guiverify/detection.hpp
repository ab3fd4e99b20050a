#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "guiverify/config.hpp"
#include "guiverify/matching.hpp"
#include "guiverify/report.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/violations.hpp"

namespace guiverify {

// Full per-screen comparison: match leaves, run the per-pair detectors
// (layout always; text or resource by the mock-up component's type — the
// mock-up is the specification side), then presence detection. Violations
// are ordered by severity descending, ties by mock-up pre-order position.
inline ViolationReport run_detection(const ScreenPair& mockup, const ScreenPair& impl,
                                     const Config& cfg) {
  const auto mock_leaves = leaf_components(mockup.hierarchy);
  const auto impl_leaves = leaf_components(impl.hierarchy);
  const MatchResult match = match_components(mock_leaves, impl_leaves, cfg);

  std::map<std::string, std::size_t> mock_index;
  std::map<std::string, std::size_t> impl_index;
  for (std::size_t k = 0; k < mock_leaves.size(); ++k) mock_index[mock_leaves[k]->id] = k;
  for (std::size_t k = 0; k < impl_leaves.size(); ++k) impl_index[impl_leaves[k]->id] = k;

  std::vector<Violation> found;
  for (const ComponentMatch& pair : match.matches) {
    const GuiComponent& m = *mock_leaves[mock_index[pair.mockup_id]];
    const GuiComponent& i = *impl_leaves[impl_index[pair.impl_id]];
    for (Violation& v : detect_layout(m, i, cfg)) found.push_back(std::move(v));
    if (is_text_like(m.ctype)) {
      const ScreenImage crop_m = crop(mockup.image, m.bounds);
      const ScreenImage crop_i = crop(impl.image, i.bounds);
      for (Violation& v : detect_text(m, i, crop_m, crop_i, cfg))
        found.push_back(std::move(v));
    } else if (m.ctype == ComponentType::Image || m.ctype == ComponentType::Other) {
      const ScreenImage crop_m = crop(mockup.image, m.bounds);
      const ScreenImage crop_i = crop(impl.image, i.bounds);
      for (Violation& v : detect_resource(m, i, crop_m, crop_i, cfg))
        found.push_back(std::move(v));
    }
  }
  for (Violation& v : detect_presence(match, mockup.hierarchy, impl.hierarchy))
    found.push_back(std::move(v));

  const auto order_key = [&](const Violation& v) {
    const std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::size_t mk = kNone, ik = kNone;
    if (v.mockup_id) {
      auto it = mock_index.find(*v.mockup_id);
      if (it != mock_index.end()) mk = it->second;
    }
    if (v.impl_id) {
      auto it = impl_index.find(*v.impl_id);
      if (it != impl_index.end()) ik = it->second;
    }
    return std::tuple<double, std::size_t, std::size_t, int>(
        -v.severity, mk, ik, static_cast<int>(v.category));
  };
  std::stable_sort(found.begin(), found.end(),
                   [&](const Violation& a, const Violation& b) {
                     return order_key(a) < order_key(b);
                   });

  ViolationReport report;
  report.timestamp = current_timestamp();
  report.config = cfg;
  report.match_stats.matched = static_cast<int>(match.matches.size());
  report.match_stats.unmatched_mockup = static_cast<int>(match.unmatched_mockup.size());
  report.match_stats.unmatched_impl = static_cast<int>(match.unmatched_impl.size());
  for (Violation& v : found) report.add_violation(std::move(v));
  return report;
}

}  // namespace guiverify
