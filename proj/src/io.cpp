#include "strongedge/io.hpp"

#include <charconv>
#include <sstream>

#include "strongedge/errors.hpp"

namespace strongedge {

nlohmann::json colouring_to_json(const Graph& g, const PartialColouring& c) {
  nlohmann::json colours = nlohmann::json::object();
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (c.at(i) != uncoloured) colours[edge_key(g, g.edge(i))] = c.at(i);
  return {{"palette", c.palette().size}, {"colours", colours}};
}

namespace {

Label parse_label(std::string_view s, const std::string& key) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    throw PreconditionError("malformed edge key '" + key + "'");
  return value;
}

}  // namespace

PartialColouring colouring_from_json(const Graph& g, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("palette") || !doc.contains("colours"))
    throw PreconditionError("colouring document needs 'palette' and 'colours'");
  auto positive = [](const nlohmann::json& j) { return j.is_number_integer() && j.get<long long>() >= 1; };
  if (!positive(doc["palette"])) throw PreconditionError("'palette' must be a positive integer");
  PartialColouring c(g, Palette(doc["palette"].get<Colour>()), PartialColouring::Mode::unchecked);
  for (const auto& [key, value] : doc["colours"].items()) {
    auto dash = key.find('-');
    if (dash == std::string::npos) throw PreconditionError("malformed edge key '" + key + "'");
    auto a = g.vertex_of(parse_label(std::string_view(key).substr(0, dash), key));
    auto b = g.vertex_of(parse_label(std::string_view(key).substr(dash + 1), key));
    if (!a || !b || !g.has_edge(*a, *b)) throw PreconditionError("edge " + key + " is not in the graph");
    if (!positive(value)) throw PreconditionError("colour of " + key + " must be a positive integer");
    c.assign(make_edge(*a, *b), value.get<Colour>());
  }
  return c;
}

std::string to_dot(const Graph& g, const PartialColouring* c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out << "  " << g.label(v) << ";\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Edge e = g.edge(i);
    out << "  " << g.label(e.u) << " -- " << g.label(e.v);
    if (c && c->at(i) != uncoloured) out << " [label=\"" << c->at(i) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace strongedge
