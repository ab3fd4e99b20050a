#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guiverify/error.hpp"
#include "guiverify/geometry.hpp"
#include "guiverify/image.hpp"

namespace guiverify {

enum class ComponentType { Text, Button, Image, Input, Container, Other };

inline const char* component_type_name(ComponentType t) {
  switch (t) {
    case ComponentType::Text: return "TEXT";
    case ComponentType::Button: return "BUTTON";
    case ComponentType::Image: return "IMAGE";
    case ComponentType::Input: return "INPUT";
    case ComponentType::Container: return "CONTAINER";
    case ComponentType::Other: return "OTHER";
  }
  return "OTHER";
}

// Closed label set; anything else maps to OTHER. Matching is
// case-insensitive so "button" and "BUTTON" mean the same thing.
inline ComponentType parse_component_type(std::string_view label) {
  std::string upper(label);
  for (char& c : upper)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  if (upper == "TEXT") return ComponentType::Text;
  if (upper == "BUTTON") return ComponentType::Button;
  if (upper == "IMAGE") return ComponentType::Image;
  if (upper == "INPUT") return ComponentType::Input;
  if (upper == "CONTAINER") return ComponentType::Container;
  return ComponentType::Other;
}

inline bool is_text_like(ComponentType t) {
  return t == ComponentType::Text || t == ComponentType::Button ||
         t == ComponentType::Input;
}

struct GuiComponent {
  std::string id;
  ComponentType ctype = ComponentType::Other;
  BoundingBox bounds;
  std::optional<std::string> text;
  std::vector<GuiComponent> children;

  // A node with children is structural only: it owns no pixels of its own
  // and is excluded from matching and detection.
  bool is_container() const { return !children.empty(); }

  bool operator==(const GuiComponent&) const = default;
};

struct ScreenHierarchy {
  int screen_w = 0;
  int screen_h = 0;
  GuiComponent root;

  bool operator==(const ScreenHierarchy&) const = default;
};

enum class ScreenOrigin { Mockup, Implementation };

struct ScreenPair {
  ScreenHierarchy hierarchy;
  ScreenImage image;
  ScreenOrigin origin = ScreenOrigin::Mockup;
};

namespace detail {
inline void collect_leaves(const GuiComponent& node,
                           std::vector<const GuiComponent*>& out) {
  if (!node.is_container()) {
    out.push_back(&node);
    return;
  }
  for (const GuiComponent& child : node.children) collect_leaves(child, out);
}
}  // namespace detail

// Leaves in pre-order. A bare root yields an empty list: the root of a
// screen is structural even when childless.
inline std::vector<const GuiComponent*> leaf_components(const ScreenHierarchy& h) {
  std::vector<const GuiComponent*> leaves;
  if (h.root.is_container())
    detail::collect_leaves(h.root, leaves);
  return leaves;
}

inline std::size_t count_nodes(const GuiComponent& node) {
  std::size_t n = 1;
  for (const GuiComponent& child : node.children) n += count_nodes(child);
  return n;
}

inline ScreenPair validate_pair(ScreenHierarchy hierarchy, ScreenImage image,
                                ScreenOrigin origin) {
  if (hierarchy.screen_w != image.width() || hierarchy.screen_h != image.height())
    throw Error(ErrorCode::DimensionMismatch,
                "hierarchy is " + std::to_string(hierarchy.screen_w) + "x" +
                    std::to_string(hierarchy.screen_h) + " but image is " +
                    std::to_string(image.width()) + "x" +
                    std::to_string(image.height()));
  return ScreenPair{std::move(hierarchy), std::move(image), origin};
}

}  // namespace guiverify
