#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "guiverify/error.hpp"
#include "guiverify/screen.hpp"

namespace guiverify {

// Screen metadata document:
//   {"screen": {"width": int, "height": int, "root": COMPONENT}}
//   COMPONENT = {"id": str, "type": str, "bounds": [x,y,w,h],
//                "text": str?, "visible": bool?, "children": [COMPONENT]?}
//
// Components with visible=false are dropped along with their subtrees.
// Bounds reaching past the screen edge are clamped to the screen rectangle
// and a warning is recorded; a clamp that would collapse a box to zero
// width or height is a schema violation.

namespace detail {

inline std::string box_str(const BoundingBox& b) {
  return "[" + std::to_string(b.x) + "," + std::to_string(b.y) + "," +
         std::to_string(b.w) + "," + std::to_string(b.h) + "]";
}

inline BoundingBox parse_bounds(const nlohmann::json& node, const std::string& id) {
  if (!node.contains("bounds") || !node["bounds"].is_array() ||
      node["bounds"].size() != 4)
    throw Error(ErrorCode::SchemaViolation,
                "component '" + id + "': bounds must be [x,y,w,h]");
  for (const auto& v : node["bounds"])
    if (!v.is_number_integer())
      throw Error(ErrorCode::SchemaViolation,
                  "component '" + id + "': bounds entries must be integers");
  BoundingBox b{node["bounds"][0].get<int>(), node["bounds"][1].get<int>(),
                node["bounds"][2].get<int>(), node["bounds"][3].get<int>()};
  if (b.w < 1 || b.h < 1)
    throw Error(ErrorCode::SchemaViolation,
                "component '" + id + "': nonpositive width or height in " + box_str(b));
  return b;
}

// Returns false when the component is invisible and should be dropped.
inline bool parse_component(const nlohmann::json& node, int screen_w, int screen_h,
                            std::set<std::string>& seen_ids,
                            std::vector<std::string>* warnings,
                            GuiComponent& out) {
  if (!node.is_object())
    throw Error(ErrorCode::SchemaViolation, "component must be an object");
  if (!node.contains("id") || !node["id"].is_string() ||
      node["id"].get<std::string>().empty())
    throw Error(ErrorCode::SchemaViolation, "component is missing a non-empty id");
  out.id = node["id"].get<std::string>();
  if (!seen_ids.insert(out.id).second)
    throw Error(ErrorCode::SchemaViolation, "duplicate component id '" + out.id + "'");

  if (node.contains("visible") && node["visible"].is_boolean() &&
      !node["visible"].get<bool>())
    return false;

  if (!node.contains("type") || !node["type"].is_string())
    throw Error(ErrorCode::SchemaViolation,
                "component '" + out.id + "': type must be a string");
  out.ctype = parse_component_type(node["type"].get<std::string>());

  BoundingBox b = parse_bounds(node, out.id);
  BoundingBox clamped = b;
  clamped.x = std::max(0, b.x);
  clamped.y = std::max(0, b.y);
  clamped.w = std::min(b.right(), screen_w) - clamped.x;
  clamped.h = std::min(b.bottom(), screen_h) - clamped.y;
  if (clamped.w < 1 || clamped.h < 1)
    throw Error(ErrorCode::SchemaViolation,
                "component '" + out.id + "': bounds " + box_str(b) +
                    " lie entirely outside the screen");
  if (clamped != b && warnings)
    warnings->push_back("component '" + out.id + "': bounds clamped from " +
                        box_str(b) + " to " + box_str(clamped));
  out.bounds = clamped;

  if (node.contains("text")) {
    if (!node["text"].is_string())
      throw Error(ErrorCode::SchemaViolation,
                  "component '" + out.id + "': text must be a string");
    if (is_text_like(out.ctype)) {
      out.text = node["text"].get<std::string>();
    } else if (warnings) {
      warnings->push_back("component '" + out.id + "': text ignored on " +
                          std::string(component_type_name(out.ctype)) +
                          " component");
    }
  }

  if (node.contains("children")) {
    if (!node["children"].is_array())
      throw Error(ErrorCode::SchemaViolation,
                  "component '" + out.id + "': children must be an array");
    for (const auto& child_node : node["children"]) {
      GuiComponent child;
      if (parse_component(child_node, screen_w, screen_h, seen_ids, warnings, child))
        out.children.push_back(std::move(child));
    }
  }
  return true;
}

}  // namespace detail

inline ScreenHierarchy parse_screen_meta(std::string_view text,
                                         std::vector<std::string>* warnings = nullptr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("screen") || !doc["screen"].is_object())
    throw Error(ErrorCode::SchemaViolation, "document must contain a 'screen' object");
  const nlohmann::json& screen = doc["screen"];
  if (!screen.contains("width") || !screen["width"].is_number_integer() ||
      !screen.contains("height") || !screen["height"].is_number_integer())
    throw Error(ErrorCode::SchemaViolation, "screen width/height must be integers");
  ScreenHierarchy h;
  h.screen_w = screen["width"].get<int>();
  h.screen_h = screen["height"].get<int>();
  if (h.screen_w < 1 || h.screen_h < 1)
    throw Error(ErrorCode::SchemaViolation, "screen dimensions must be positive");

  if (!screen.contains("root")) throw Error(ErrorCode::EmptyScreen, "screen has no root");
  std::set<std::string> seen_ids;
  if (!detail::parse_component(screen["root"], h.screen_w, h.screen_h, seen_ids,
                               warnings, h.root))
    throw Error(ErrorCode::EmptyScreen, "root component is invisible");
  if (h.root.bounds != BoundingBox{0, 0, h.screen_w, h.screen_h})
    throw Error(ErrorCode::SchemaViolation,
                "root bounds " + detail::box_str(h.root.bounds) +
                    " must cover the whole screen");
  return h;
}

namespace detail {

inline nlohmann::ordered_json component_to_json(const GuiComponent& c) {
  nlohmann::ordered_json node;
  node["id"] = c.id;
  node["type"] = component_type_name(c.ctype);
  node["bounds"] = {c.bounds.x, c.bounds.y, c.bounds.w, c.bounds.h};
  if (c.text) node["text"] = *c.text;
  if (!c.children.empty()) {
    nlohmann::ordered_json kids = nlohmann::ordered_json::array();
    for (const GuiComponent& child : c.children)
      kids.push_back(component_to_json(child));
    node["children"] = std::move(kids);
  }
  return node;
}

}  // namespace detail

// Inverse of parse_screen_meta for validated hierarchies.
inline std::string write_screen_meta(const ScreenHierarchy& h) {
  nlohmann::ordered_json doc;
  doc["screen"]["width"] = h.screen_w;
  doc["screen"]["height"] = h.screen_h;
  doc["screen"]["root"] = detail::component_to_json(h.root);
  return doc.dump(2) + "\n";
}

}  // namespace guiverify
