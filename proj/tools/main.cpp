// gui-verify: checks an implemented app screen against its design mock-up
// and reports categorized design violations.
//
// Exit codes: 0 = conforming, 1 = violations found, 2 = error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "guiverify/guiverify.hpp"

namespace fs = std::filesystem;
using namespace guiverify;

namespace {

constexpr int kExitConforming = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

Config resolve_config(const std::string& config_path) {
  if (!config_path.empty()) return load_config(config_path);
  if (const char* env = std::getenv("GUI_VERIFY_CONFIG"); env && *env)
    return load_config(env);
  return Config{};
}

ScreenPair load_pair(const std::string& img_path, const std::string& meta_path,
                     ScreenOrigin origin, std::vector<std::string>& warnings) {
  ScreenHierarchy h = parse_screen_meta(read_text_file(meta_path), &warnings);
  ScreenImage img = load_png(img_path);
  return validate_pair(std::move(h), std::move(img), origin);
}

struct CompareResult {
  ViolationReport report;
  ScreenImage mock_img;
  ScreenImage impl_img;
};

CompareResult compare_screens(const std::string& mock_img, const std::string& mock_meta,
                              const std::string& impl_img, const std::string& impl_meta,
                              const Config& cfg) {
  std::vector<std::string> mock_warnings, impl_warnings;
  ScreenPair mockup = load_pair(mock_img, mock_meta, ScreenOrigin::Mockup, mock_warnings);
  ScreenPair impl =
      load_pair(impl_img, impl_meta, ScreenOrigin::Implementation, impl_warnings);
  CompareResult result{run_detection(mockup, impl, cfg), std::move(mockup.image),
                       std::move(impl.image)};
  result.report.mockup_image = mock_img;
  result.report.mockup_meta = mock_meta;
  result.report.impl_image = impl_img;
  result.report.impl_meta = impl_meta;
  for (const std::string& w : mock_warnings)
    result.report.warnings.push_back("mockup: " + w);
  for (const std::string& w : impl_warnings)
    result.report.warnings.push_back("impl: " + w);
  return result;
}

int cmd_compare(const std::string& mock_img, const std::string& mock_meta,
                const std::string& impl_img, const std::string& impl_meta,
                const std::string& out_dir, bool html, const std::string& config_path) {
  const Config cfg = resolve_config(config_path);
  CompareResult result = compare_screens(mock_img, mock_meta, impl_img, impl_meta, cfg);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create output directory '" + out_dir + "'");
  write_text_file(fs::path(out_dir) / "report.json", to_json(result.report));
  if (html) render_html(result.report, result.mock_img, result.impl_img, out_dir);

  const std::size_t n = result.report.violations.size();
  std::cout << (n == 0 ? "conforming: no design violations detected"
                       : "found " + std::to_string(n) + " design violation" +
                             (n == 1 ? "" : "s"))
            << " (report: " << (fs::path(out_dir) / "report.json").string() << ")\n";
  return n == 0 ? kExitConforming : kExitViolations;
}

struct BatchEntry {
  std::string name;
  std::string mock_img, mock_meta, impl_img, impl_meta;
};

struct BatchOutcome {
  bool ok = false;
  int violations = 0;
  std::string error;
};

int cmd_batch(const std::string& manifest_path, const std::string& out_dir, int jobs,
              const std::string& config_path) {
  const Config cfg = resolve_config(config_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    throw Error(ErrorCode::SchemaViolation, "manifest must contain a 'pairs' array");

  const fs::path manifest_dir = fs::path(manifest_path).parent_path();
  std::vector<BatchEntry> entries;
  for (const auto& p : doc["pairs"]) {
    BatchEntry e;
    e.name = p.value("name", "pair_" + std::to_string(entries.size()));
    // relative paths resolve against the manifest's directory
    const auto resolve = [&](const std::string& raw) {
      const fs::path path(raw);
      return path.is_absolute() ? path.string() : (manifest_dir / path).string();
    };
    e.mock_img = resolve(p.value("mock_img", ""));
    e.mock_meta = resolve(p.value("mock_meta", ""));
    e.impl_img = resolve(p.value("impl_img", ""));
    e.impl_meta = resolve(p.value("impl_meta", ""));
    entries.push_back(std::move(e));
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create output directory '" + out_dir + "'");

  std::vector<BatchOutcome> outcomes(entries.size());
  std::atomic<std::size_t> next{0};
  const int worker_count =
      std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  const auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= entries.size()) return;
      const BatchEntry& e = entries[k];
      try {
        CompareResult result =
            compare_screens(e.mock_img, e.mock_meta, e.impl_img, e.impl_meta, cfg);
        write_text_file(fs::path(out_dir) / (e.name + ".json"), to_json(result.report));
        outcomes[k].ok = true;
        outcomes[k].violations = static_cast<int>(result.report.violations.size());
      } catch (const std::exception& ex) {
        outcomes[k].error = ex.what();
      }
    }
  };
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  nlohmann::ordered_json summary;
  summary["pairs"] = nlohmann::ordered_json::array();
  int total_violations = 0, errors = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    nlohmann::ordered_json row;
    row["name"] = entries[k].name;
    if (outcomes[k].ok) {
      row["status"] = "ok";
      row["violations"] = outcomes[k].violations;
      row["report"] = entries[k].name + ".json";
      total_violations += outcomes[k].violations;
    } else {
      row["status"] = "error";
      row["error"] = outcomes[k].error;
      ++errors;
    }
    summary["pairs"].push_back(std::move(row));
  }
  summary["totals"] = {{"pairs", entries.size()},
                       {"ok", entries.size() - errors},
                       {"errors", errors},
                       {"violations", total_violations}};
  write_text_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");

  std::cout << "batch: " << entries.size() << " pairs, " << errors << " errors, "
            << total_violations << " violations (summary: "
            << (fs::path(out_dir) / "summary.json").string() << ")\n";
  if (errors > 0) return kExitError;
  return total_violations > 0 ? kExitViolations : kExitConforming;
}

struct CategoryTally {
  int cases = 0;
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

int cmd_selftest(std::uint64_t seed, int per_category, const std::string& config_path,
                 std::string out_dir) {
  // The corpus is fixed ground truth: mutation magnitudes come from the
  // default tolerances. The supplied config drives detection only, so a
  // misconfigured detector shows up as lost recall instead of a generation
  // failure.
  const Config detect_cfg = resolve_config(config_path);
  const Config corpus_cfg;
  const auto t0 = std::chrono::steady_clock::now();

  bool keep_artifacts = !out_dir.empty();
  if (!keep_artifacts) {
    std::string tmpl = (fs::temp_directory_path() / "guiverify-selftest-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data()))
      throw Error(ErrorCode::IoError, "cannot create a temporary suite directory");
    out_dir.assign(buf.data());
  }

  const ScreenPair clean = build_fixture_pair();
  std::map<ViolationCategory, int> counts;
  for (ViolationCategory c : kAllCategories) counts[c] = per_category;
  const std::vector<InjectedCase> suite = generate_suite(clean, counts, seed, corpus_cfg);
  write_suite(out_dir, suite);

  // Read everything back through the file pipeline so the self-test
  // exercises the same path a real comparison does.
  const SuiteManifest manifest = read_suite_manifest(fs::path(out_dir) / "manifest.json");
  std::map<ViolationCategory, CategoryTally> tally;
  for (ViolationCategory c : kAllCategories) tally[c] = CategoryTally{};

  for (std::size_t k = 0; k < manifest.cases.size(); ++k) {
    const SuiteCaseEntry& entry = manifest.cases[k];
    std::vector<std::string> warnings;
    ScreenPair mockup = load_pair((fs::path(out_dir) / manifest.mock_img).string(),
                                  (fs::path(out_dir) / manifest.mock_meta).string(),
                                  ScreenOrigin::Mockup, warnings);
    ScreenPair impl = load_pair((fs::path(out_dir) / entry.impl_img).string(),
                                (fs::path(out_dir) / entry.impl_meta).string(),
                                ScreenOrigin::Implementation, warnings);
    const ViolationReport report = run_detection(mockup, impl, detect_cfg);

    for (const GroundTruth& gt : entry.ground_truth) ++tally[gt.category].cases;
    std::vector<bool> claimed(entry.ground_truth.size(), false);
    for (const Violation& v : report.violations) {
      bool matched = false;
      for (std::size_t g = 0; g < entry.ground_truth.size(); ++g) {
        const GroundTruth& gt = entry.ground_truth[g];
        if (claimed[g] || gt.category != v.category || gt.mockup_id != v.mockup_id ||
            gt.impl_id != v.impl_id)
          continue;
        claimed[g] = true;
        matched = true;
        ++tally[v.category].tp;
        break;
      }
      if (!matched) ++tally[v.category].fp;
    }
    for (std::size_t g = 0; g < entry.ground_truth.size(); ++g)
      if (!claimed[g]) ++tally[entry.ground_truth[g].category].fn;
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double wall_s = std::chrono::duration<double>(t1 - t0).count();

  constexpr double kThreshold = 0.95;
  bool all_pass = true;
  std::printf("%-20s %6s %10s %8s\n", "category", "cases", "precision", "recall");
  int total_cases = 0;
  for (ViolationCategory c : kAllCategories) {
    const CategoryTally& t = tally[c];
    const double precision =
        t.tp + t.fp == 0 ? 1.0 : static_cast<double>(t.tp) / (t.tp + t.fp);
    const double recall = t.tp + t.fn == 0 ? 1.0 : static_cast<double>(t.tp) / (t.tp + t.fn);
    if (precision < kThreshold || recall < kThreshold) all_pass = false;
    total_cases += t.cases;
    std::printf("%-20s %6d %10.3f %8.3f\n", category_name(c), t.cases, precision, recall);
  }
  std::printf("wall_time_s %.2f\n", wall_s);
  if (total_cases == 0) {
    std::printf("selftest: PASS (no cases requested; vacuous)\n");
  } else {
    std::printf("selftest: %s (thresholds: precision >= %.2f, recall >= %.2f)\n",
                all_pass ? "PASS" : "FAIL", kThreshold, kThreshold);
  }
  if (keep_artifacts)
    std::printf("suite artifacts kept in %s\n", out_dir.c_str());
  else
    fs::remove_all(out_dir);
  return all_pass ? kExitConforming : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design-conformance checker for app screens: compares a "
               "mock-up against an implementation screenshot and reports "
               "categorized GUI design violations."};
  app.require_subcommand(1);

  std::string mock_img, mock_meta, impl_img, impl_meta, out_dir, config_path;
  bool html = false;
  CLI::App* compare = app.add_subcommand("compare", "Compare one mock-up/implementation pair");
  compare->add_option("--mock-img", mock_img, "Mock-up screenshot (PNG)")->required();
  compare->add_option("--mock-meta", mock_meta, "Mock-up metadata (JSON)")->required();
  compare->add_option("--impl-img", impl_img, "Implementation screenshot (PNG)")->required();
  compare->add_option("--impl-meta", impl_meta, "Implementation metadata (JSON)")->required();
  compare->add_option("--out", out_dir, "Output directory")->required();
  compare->add_flag("--html", html, "Also render the HTML report");
  compare->add_option("--config", config_path, "Config document (JSON)");

  std::string manifest_path;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  CLI::App* batch = app.add_subcommand("batch", "Compare every pair in a manifest");
  batch->add_option("--manifest", manifest_path, "Manifest (JSON)")->required();
  batch->add_option("--out", out_dir, "Output directory")->required();
  batch->add_option("--jobs", jobs, "Concurrent comparisons")->check(CLI::PositiveNumber);
  batch->add_option("--config", config_path, "Config document (JSON)");

  std::uint64_t seed = 42;
  int per_category = 10;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Inject known violations into the bundled "
                                     "fixture screen and verify recovery");
  selftest->add_option("--seed", seed, "Suite generation seed");
  selftest->add_option("--per-category", per_category, "Cases per violation category")
      ->check(CLI::NonNegativeNumber);
  selftest->add_option("--config", config_path, "Config document (JSON)");
  selftest->add_option("--out", out_dir, "Keep suite artifacts in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (compare->parsed())
      return cmd_compare(mock_img, mock_meta, impl_img, impl_meta, out_dir, html, config_path);
    if (batch->parsed()) return cmd_batch(manifest_path, out_dir, jobs, config_path);
    return cmd_selftest(seed, per_category, config_path, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "gui-verify: " << e.what() << "\n";
    return kExitError;
  }
}
