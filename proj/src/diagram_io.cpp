#include "piso/diagram_io.hpp"

#include <json.hpp>

#include "piso/errors.hpp"
#include "piso/termlang.hpp"

namespace piso {

using nlohmann::json;

Diagram load_diagram(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("diagram document: ") + ex.what());
  }
  Diagram d;
  try {
    for (const json& n : doc.at("nodes")) {
      DiagramNode node;
      node.id = n.at("id").get<std::string>();
      if (n.contains("tree")) {
        std::string t = n.at("tree").get<std::string>();
        if (t != "untyped") node.tree = Tree::parse(t);
      }
      d.nodes.push_back(std::move(node));
    }
    for (const json& e : doc.at("edges")) {
      Expr expr = parse_expr(e.at("term").get<std::string>());
      auto term = to_canonical(expr);
      if (!term)
        throw ParseError("edge term is outside the diagram toolkit: " +
                         e.at("term").get<std::string>());
      d.edges.push_back({e.at("src").get<std::string>(),
                         e.at("dst").get<std::string>(), std::move(*term)});
    }
    if (doc.contains("asserts")) {
      for (const json& a : doc.at("asserts")) {
        if (!a.is_array() || a.size() != 2)
          throw ParseError("an assert is a pair of paths");
        DiagramAssert as;
        for (const json& i : a.at(0)) as.lhs.push_back(i.get<std::size_t>());
        for (const json& i : a.at(1)) as.rhs.push_back(i.get<std::size_t>());
        d.asserts.push_back(std::move(as));
      }
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("diagram document: ") + ex.what());
  }
  validate(d);
  return d;
}

std::string diagram_to_json(const Diagram& d) {
  json doc;
  doc["nodes"] = json::array();
  for (const DiagramNode& n : d.nodes) {
    json node{{"id", n.id}};
    node["tree"] = n.tree ? n.tree->str() : "untyped";
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = json::array();
  for (const DiagramEdge& e : d.edges)
    doc["edges"].push_back(
        {{"src", e.src}, {"dst", e.dst}, {"term", e.term.str()}});
  doc["asserts"] = json::array();
  for (const DiagramAssert& a : d.asserts)
    doc["asserts"].push_back(json::array({a.lhs, a.rhs}));
  return doc.dump(2);
}

}  // namespace piso
