#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "guiverify/error.hpp"
#include "guiverify/injector.hpp"
#include "guiverify/meta.hpp"
#include "guiverify/png_io.hpp"

namespace guiverify {

// On-disk layout of an injection suite:
//   <dir>/mockup.png, <dir>/mockup.json        — shared clean mock-up
//   <dir>/cases/<name>.png, <name>.json        — one mutated impl per case
//   <dir>/manifest.json                        — case list with ground truth
struct SuiteCaseEntry {
  std::string name;
  std::string impl_img;
  std::string impl_meta;
  std::vector<GroundTruth> ground_truth;
};

struct SuiteManifest {
  std::string mock_img;
  std::string mock_meta;
  std::vector<SuiteCaseEntry> cases;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_suite(const std::filesystem::path& dir,
                        const std::vector<InjectedCase>& suite) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir / "cases", ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create suite directory '" + dir.string() + "'");

  nlohmann::ordered_json manifest;
  manifest["mock_img"] = "mockup.png";
  manifest["mock_meta"] = "mockup.json";
  manifest["cases"] = nlohmann::ordered_json::array();

  if (!suite.empty()) {
    save_png(suite.front().mockup.image, (dir / "mockup.png").string());
    write_text_file(dir / "mockup.json", write_screen_meta(suite.front().mockup.hierarchy));
  }
  for (const InjectedCase& c : suite) {
    const std::string img_rel = "cases/" + c.name + ".png";
    const std::string meta_rel = "cases/" + c.name + ".json";
    save_png(c.impl.image, (dir / img_rel).string());
    write_text_file(dir / meta_rel, write_screen_meta(c.impl.hierarchy));
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["impl_img"] = img_rel;
    entry["impl_meta"] = meta_rel;
    entry["ground_truth"] = nlohmann::ordered_json::array();
    for (const GroundTruth& gt : c.ground_truth) {
      nlohmann::ordered_json g;
      g["category"] = category_name(gt.category);
      g["mockup_id"] = gt.mockup_id ? nlohmann::ordered_json(*gt.mockup_id)
                                    : nlohmann::ordered_json(nullptr);
      g["impl_id"] =
          gt.impl_id ? nlohmann::ordered_json(*gt.impl_id) : nlohmann::ordered_json(nullptr);
      entry["ground_truth"].push_back(std::move(g));
    }
    manifest["cases"].push_back(std::move(entry));
  }
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

inline SuiteManifest read_suite_manifest(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  SuiteManifest m;
  m.mock_img = doc.value("mock_img", "");
  m.mock_meta = doc.value("mock_meta", "");
  if (doc.contains("cases"))
    for (const auto& entry : doc["cases"]) {
      SuiteCaseEntry e;
      e.name = entry.value("name", "");
      e.impl_img = entry.value("impl_img", "");
      e.impl_meta = entry.value("impl_meta", "");
      if (entry.contains("ground_truth"))
        for (const auto& g : entry["ground_truth"]) {
          GroundTruth gt;
          gt.category = parse_category(g["category"].get<std::string>());
          if (g.contains("mockup_id") && g["mockup_id"].is_string())
            gt.mockup_id = g["mockup_id"].get<std::string>();
          if (g.contains("impl_id") && g["impl_id"].is_string())
            gt.impl_id = g["impl_id"].get<std::string>();
          e.ground_truth.push_back(std::move(gt));
        }
      m.cases.push_back(std::move(e));
    }
  return m;
}

}  // namespace guiverify
