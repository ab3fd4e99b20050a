#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "guiverify/config.hpp"
#include "guiverify/geometry.hpp"
#include "guiverify/screen.hpp"
#include "guiverify/text_metrics.hpp"

namespace guiverify {

struct ComponentMatch {
  std::string mockup_id;
  std::string impl_id;
  double score = 0.0;

  bool operator==(const ComponentMatch&) const = default;
};

// Correspondence between the two screens' leaves. Every leaf id appears in
// exactly one of the three collections.
struct MatchResult {
  std::vector<ComponentMatch> matches;
  std::vector<std::string> unmatched_mockup;
  std::vector<std::string> unmatched_impl;
};

// Weighted blend of spatial overlap, type agreement, and text similarity.
inline double similarity(const GuiComponent& a, const GuiComponent& b, const Config& cfg) {
  const double spatial = iou(a.bounds, b.bounds);
  const double type_term = a.ctype == b.ctype ? 1.0 : 0.0;
  const double text_term = text_similarity(a.text, b.text);
  return cfg.weight_spatial * spatial + cfg.weight_type * type_term +
         cfg.weight_text * text_term;
}

// Greedy maximum-score matching: candidate pairs at or above the threshold,
// taken in (score desc, mockup pre-order, impl pre-order) order, accepted
// while both sides are unused. With match_by_id set, leaves pair by exact id
// instead and the recorded score is informational.
inline MatchResult match_components(const std::vector<const GuiComponent*>& mockup,
                                    const std::vector<const GuiComponent*>& impl,
                                    const Config& cfg) {
  MatchResult result;
  std::vector<char> mock_used(mockup.size(), 0);
  std::vector<char> impl_used(impl.size(), 0);

  if (cfg.match_by_id) {
    for (std::size_t mi = 0; mi < mockup.size(); ++mi) {
      for (std::size_t ii = 0; ii < impl.size(); ++ii) {
        if (impl_used[ii] || mockup[mi]->id != impl[ii]->id) continue;
        result.matches.push_back(ComponentMatch{
            mockup[mi]->id, impl[ii]->id, similarity(*mockup[mi], *impl[ii], cfg)});
        mock_used[mi] = 1;
        impl_used[ii] = 1;
        break;
      }
    }
  } else {
    struct Candidate {
      double score;
      std::size_t mock_index;
      std::size_t impl_index;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(mockup.size() * impl.size());
    for (std::size_t mi = 0; mi < mockup.size(); ++mi)
      for (std::size_t ii = 0; ii < impl.size(); ++ii) {
        const double score = similarity(*mockup[mi], *impl[ii], cfg);
        if (score >= cfg.match_threshold)
          candidates.push_back(Candidate{score, mi, ii});
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.score != b.score) return a.score > b.score;
                if (a.mock_index != b.mock_index) return a.mock_index < b.mock_index;
                return a.impl_index < b.impl_index;
              });
    for (const Candidate& c : candidates) {
      if (mock_used[c.mock_index] || impl_used[c.impl_index]) continue;
      result.matches.push_back(
          ComponentMatch{mockup[c.mock_index]->id, impl[c.impl_index]->id, c.score});
      mock_used[c.mock_index] = 1;
      impl_used[c.impl_index] = 1;
    }
  }

  for (std::size_t mi = 0; mi < mockup.size(); ++mi)
    if (!mock_used[mi]) result.unmatched_mockup.push_back(mockup[mi]->id);
  for (std::size_t ii = 0; ii < impl.size(); ++ii)
    if (!impl_used[ii]) result.unmatched_impl.push_back(impl[ii]->id);
  return result;
}

}  // namespace guiverify
