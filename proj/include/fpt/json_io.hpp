#pragma once

#include <string>

#include "fpt/box_union.hpp"
#include "fpt/growth.hpp"
#include "fpt/tree.hpp"

namespace fpt {

// JSON document formats (schemas/ carries the formal versions):
//   tree       {"children": [<node>, ...]}            nodes nest recursively
//   growth     {"prefix": [1,2,...], "tail": {"kind": ..., ...}}
//   box union  {"dim": n, "boxes": [{"lo": ["p/q", ...], "hi": [...]}, ...]}
// Parse failures raise ParseError carrying a JSON-pointer locator.

RootedTree tree_from_json(const std::string& text,
                          std::size_t vertex_cap = kDefaultVertexCap);
std::string tree_to_json(const RootedTree& t);

GrowthFunction growth_from_json(const std::string& text);
std::string growth_to_json(const GrowthFunction& f);

BoxUnion box_union_from_json(const std::string& text);
std::string box_union_to_json(const BoxUnion& u);

// Whole-file helpers; failures raise ParseError naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fpt
