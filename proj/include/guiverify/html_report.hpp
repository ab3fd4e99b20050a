#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "guiverify/error.hpp"
#include "guiverify/image.hpp"
#include "guiverify/png_io.hpp"
#include "guiverify/report.hpp"
#include "guiverify/violations.hpp"

namespace guiverify {

// Stroke palette, one color per violation family (documented in the HTML
// legend): layout red, text orange, resource purple.
inline Rgb family_stroke_color(ViolationFamily f) {
  switch (f) {
    case ViolationFamily::Layout: return Rgb{229, 57, 53};
    case ViolationFamily::Text: return Rgb{251, 140, 0};
    case ViolationFamily::Resource: return Rgb{142, 36, 170};
  }
  return Rgb{0, 0, 0};
}

namespace detail {

// 3 px frame just inside the box, clipped to the image. Boxes thinner than
// twice the stroke are filled solid.
inline void stroke_rect(ScreenImage& img, const BoundingBox& box, Rgb color) {
  constexpr int kStroke = 3;
  const int x0 = std::max(0, box.x);
  const int y0 = std::max(0, box.y);
  const int x1 = std::min(img.width(), box.right());
  const int y1 = std::min(img.height(), box.bottom());
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) {
      const bool on_frame = x - box.x < kStroke || box.right() - 1 - x < kStroke ||
                            y - box.y < kStroke || box.bottom() - 1 - y < kStroke;
      if (on_frame) img.at(x, y) = color;
    }
}

inline std::string html_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

// Copy of the screenshot with each violation's region outlined. Later
// entries stroke over earlier ones, in list order.
inline ScreenImage annotate_image(const ScreenImage& img,
                                  const std::vector<Violation>& violations,
                                  ScreenOrigin side) {
  ScreenImage out = img;
  for (const Violation& v : violations) {
    const BoundingBox& box =
        side == ScreenOrigin::Mockup ? v.mockup_region : v.impl_region;
    detail::stroke_rect(out, box, family_stroke_color(category_family(v.category)));
  }
  return out;
}

// Static, dependency-free report page: index.html plus annotated
// screenshots and per-violation evidence crops. Returns the written paths.
inline std::vector<std::filesystem::path> render_html(const ViolationReport& report,
                                                      const ScreenImage& mock_img,
                                                      const ScreenImage& impl_img,
                                                      const std::filesystem::path& outdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec || !fs::is_directory(outdir))
    throw Error(ErrorCode::IoError, "cannot create output directory '" + outdir.string() + "'");

  std::vector<fs::path> written;
  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
       << "<title>GUI conformance report</title>\n</head>\n"
       << "<body style=\"font-family:sans-serif;margin:24px;color:#212121\">\n"
       << "<h1>GUI conformance report</h1>\n"
       << "<p>" << kToolName << " " << detail::html_escape(report.tool_version) << " &mdash; "
       << format_timestamp(report.timestamp) << "</p>\n"
       << "<p>Mock-up: <code>" << detail::html_escape(report.mockup_image)
       << "</code><br>Implementation: <code>" << detail::html_escape(report.impl_image)
       << "</code></p>\n"
       << "<p>Matched components: " << report.match_stats.matched
       << ", unmatched mock-up: " << report.match_stats.unmatched_mockup
       << ", unmatched implementation: " << report.match_stats.unmatched_impl << "</p>\n";

  if (!report.warnings.empty()) {
    html << "<h2>Warnings</h2>\n<ul>\n";
    for (const std::string& w : report.warnings)
      html << "<li>" << detail::html_escape(w) << "</li>\n";
    html << "</ul>\n";
  }

  html << "<h2>Annotated screens</h2>\n"
       << "<p>Legend: <span style=\"color:#e53935\">&#9632;</span> layout "
       << "<span style=\"color:#fb8c00\">&#9632;</span> text "
       << "<span style=\"color:#8e24aa\">&#9632;</span> resource</p>\n"
       << "<table><tr><th>Mock-up</th><th>Implementation</th></tr>\n"
       << "<tr><td><img src=\"annotated_mockup.png\" style=\"max-width:420px\"></td>"
       << "<td><img src=\"annotated_impl.png\" style=\"max-width:420px\"></td></tr></table>\n";

  if (report.violations.empty()) {
    html << "<h2>Result</h2>\n<p><strong>The implementation conforms to the "
            "mock-up: no design violations detected.</strong></p>\n";
  } else {
    html << "<h2>" << report.violations.size() << " violation"
         << (report.violations.size() == 1 ? "" : "s") << "</h2>\n";
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      const Violation& v = report.violations[k];
      html << "<div style=\"border:1px solid #bdbdbd;padding:12px;margin:12px 0\">\n"
           << "<h3>" << (k + 1) << ". " << category_name(v.category)
           << " (severity " << detail::format_real(v.severity) << ")</h3>\n<p>";
      if (v.mockup_id) html << "mock-up id <code>" << detail::html_escape(*v.mockup_id) << "</code> ";
      if (v.impl_id) html << "implementation id <code>" << detail::html_escape(*v.impl_id) << "</code>";
      html << "</p>\n";
      if (!v.metrics.empty()) {
        html << "<p>";
        for (std::size_t mi = 0; mi < v.metrics.size(); ++mi) {
          if (mi) html << ", ";
          html << v.metrics[mi].first << " = " << detail::format_real(v.metrics[mi].second);
        }
        html << "</p>\n";
      }
      html << "<table><tr><th>Mock-up</th><th>Implementation</th></tr>\n"
           << "<tr><td><img src=\"evidence/" << k << "_mock.png\" style=\"max-width:320px\"></td>"
           << "<td><img src=\"evidence/" << k << "_impl.png\" style=\"max-width:320px\"></td></tr>"
           << "</table>\n</div>\n";
    }
  }
  html << "</body>\n</html>\n";

  const fs::path index_path = outdir / "index.html";
  {
    std::ofstream out(index_path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + index_path.string() + "'");
    out << html.str();
    if (!out) throw Error(ErrorCode::IoError, "write failed for '" + index_path.string() + "'");
  }
  written.push_back(index_path);

  const fs::path mock_annot = outdir / "annotated_mockup.png";
  const fs::path impl_annot = outdir / "annotated_impl.png";
  save_png(annotate_image(mock_img, report.violations, ScreenOrigin::Mockup), mock_annot.string());
  save_png(annotate_image(impl_img, report.violations, ScreenOrigin::Implementation),
           impl_annot.string());
  written.push_back(mock_annot);
  written.push_back(impl_annot);

  if (!report.violations.empty()) {
    const fs::path evidence_dir = outdir / "evidence";
    fs::create_directories(evidence_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create '" + evidence_dir.string() + "'");
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      const Violation& v = report.violations[k];
      const fs::path mock_path = evidence_dir / (std::to_string(k) + "_mock.png");
      const fs::path impl_path = evidence_dir / (std::to_string(k) + "_impl.png");
      save_png(crop(mock_img, v.mockup_region), mock_path.string());
      save_png(crop(impl_img, v.impl_region), impl_path.string());
      written.push_back(mock_path);
      written.push_back(impl_path);
    }
  }
  return written;
}

}  // namespace guiverify
