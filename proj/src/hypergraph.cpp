#include "hq/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hq {

namespace {

std::vector<int> to_sorted_indices(const std::vector<std::string>& labels,
                                   const std::map<std::string, int>& index,
                                   const std::string& edge_label) {
  std::set<int> out;
  for (const auto& l : labels) {
    auto it = index.find(l);
    if (it == index.end()) {
      throw std::runtime_error("unknown vertex '" + l + "' in edge '" + edge_label + "'");
    }
    out.insert(it->second);
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       std::vector<std::string> edges,
                       const std::vector<std::vector<std::string>>& src,
                       const std::vector<std::vector<std::string>>& rng)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (src.size() != edges_.size() || rng.size() != edges_.size()) {
    throw std::runtime_error("src/rng size does not match edge count");
  }
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second) {
      throw std::runtime_error("duplicate vertex label '" + vertices_[i] + "'");
    }
  }
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (!edge_index_.emplace(edges_[i], static_cast<int>(i)).second) {
      throw std::runtime_error("duplicate edge label '" + edges_[i] + "'");
    }
  }
  src_.reserve(edges_.size());
  rng_.reserve(edges_.size());
  for (size_t i = 0; i < edges_.size(); ++i) {
    src_.push_back(to_sorted_indices(src[i], vertex_index_, edges_[i]));
    rng_.push_back(to_sorted_indices(rng[i], vertex_index_, edges_[i]));
  }
}

int Hypergraph::vertex_index(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) throw std::runtime_error("unknown vertex '" + label + "'");
  return it->second;
}

int Hypergraph::edge_index(const std::string& label) const {
  auto it = edge_index_.find(label);
  if (it == edge_index_.end()) throw std::runtime_error("unknown edge '" + label + "'");
  return it->second;
}

bool Hypergraph::src_contains(int e, int v) const {
  return std::binary_search(src_[e].begin(), src_[e].end(), v);
}

bool Hypergraph::rng_contains(int e, int v) const {
  return std::binary_search(rng_[e].begin(), rng_[e].end(), v);
}

Json Hypergraph::to_json() const {
  Json doc;
  doc["vertices"] = vertices_;
  doc["edges"] = Json::array();
  for (int e = 0; e < num_edges(); ++e) {
    Json je;
    je["id"] = edges_[e];
    std::vector<std::string> s, r;
    for (int v : src_[e]) s.push_back(vertices_[v]);
    for (int v : rng_[e]) r.push_back(vertices_[v]);
    std::sort(s.begin(), s.end());
    std::sort(r.begin(), r.end());
    je["s"] = s;
    je["r"] = r;
    doc["edges"].push_back(je);
  }
  return doc;
}

Hypergraph Hypergraph::from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw std::runtime_error("malformed hypergraph document: need 'vertices' and 'edges'");
  }
  std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
  std::vector<std::string> edges;
  std::vector<std::vector<std::string>> src, rng;
  for (const auto& je : doc.at("edges")) {
    if (!je.is_object() || !je.contains("id") || !je.contains("s") || !je.contains("r")) {
      throw std::runtime_error("malformed edge entry: need 'id', 's', 'r'");
    }
    edges.push_back(je.at("id").get<std::string>());
    src.push_back(je.at("s").get<std::vector<std::string>>());
    rng.push_back(je.at("r").get<std::vector<std::string>>());
  }
  return Hypergraph(std::move(vertices), std::move(edges), src, rng);
}

Hypergraph Hypergraph::parse(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& ex) {
    throw std::runtime_error(std::string("malformed document: ") + ex.what());
  }
  return from_json(doc);
}

IncidencePair incidence(const Hypergraph& h) {
  IncidencePair out;
  out.a_s.assign(h.num_vertices(), std::vector<int>(h.num_edges(), 0));
  out.a_r.assign(h.num_vertices(), std::vector<int>(h.num_edges(), 0));
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.src(e)) out.a_s[v][e] = 1;
    for (int v : h.rng(e)) out.a_r[v][e] = 1;
  }
  return out;
}

PropertyReport classify(const Hypergraph& h) {
  PropertyReport rep;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::optional<int> k;
  bool k_ok = true;
  for (int e = 0; e < h.num_edges(); ++e) {
    auto key = std::make_pair(h.src(e), h.rng(e));
    if (!seen.insert(key).second) rep.no_multi_edges = false;
    if (h.src(e) != h.rng(e)) rep.undirected = false;
    int ks = static_cast<int>(h.src(e).size());
    int kr = static_cast<int>(h.rng(e).size());
    if (ks != kr) {
      k_ok = false;
    } else if (!k.has_value()) {
      k = ks;
    } else if (*k != ks) {
      k_ok = false;
    }
  }
  if (k_ok && h.num_edges() > 0) rep.k_uniform = k;
  std::vector<int> ns(h.num_vertices(), 0), nr(h.num_vertices(), 0);
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.src(e)) ++ns[v];
    for (int v : h.rng(e)) ++nr[v];
  }
  for (int v = 0; v < h.num_vertices(); ++v) {
    rep.n_s[h.vertex(v)] = ns[v];
    rep.n_r[h.vertex(v)] = nr[v];
    // A source never occurs in a range set, a sink never in a source set.
    if (nr[v] == 0) rep.sources.push_back(h.vertex(v));
    if (ns[v] == 0) rep.sinks.push_back(h.vertex(v));
    if (ns[v] == 0 && nr[v] == 0) rep.isolated.push_back(h.vertex(v));
  }
  return rep;
}

Json PropertyReport::to_json() const {
  Json doc;
  doc["no_multi_edges"] = no_multi_edges;
  doc["undirected"] = undirected;
  if (k_uniform.has_value()) {
    doc["k_uniform"] = *k_uniform;
  } else {
    doc["k_uniform"] = nullptr;
  }
  doc["sources"] = sources;
  doc["sinks"] = sinks;
  doc["isolated"] = isolated;
  doc["N_s"] = n_s;
  doc["N_r"] = n_r;
  return doc;
}

std::string graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Simple: return "simple";
    case GraphKind::Directed: return "directed";
    case GraphKind::Multi: return "multi";
    case GraphKind::None: return "none";
  }
  return "none";
}

Hypergraph encode(const Json& graph, GraphKind kind) {
  std::vector<std::string> vertices = graph.at("vertices").get<std::vector<std::string>>();
  std::vector<std::string> edges;
  std::vector<std::vector<std::string>> src, rng;
  switch (kind) {
    case GraphKind::Simple: {
      for (const auto& je : graph.at("edges")) {
        auto pair = je.get<std::vector<std::string>>();
        if (pair.size() != 2) throw std::runtime_error("simple-graph edge must have exactly 2 vertices");
        if (pair[0] == pair[1]) throw std::runtime_error("self-loop not allowed in simple graph");
        std::vector<std::string> vs = pair;
        std::sort(vs.begin(), vs.end());
        edges.push_back("{" + vs[0] + "," + vs[1] + "}");
        src.push_back(vs);
        rng.push_back(vs);
      }
      break;
    }
    case GraphKind::Directed: {
      for (const auto& je : graph.at("edges")) {
        auto pair = je.get<std::vector<std::string>>();
        if (pair.size() != 2) throw std::runtime_error("directed-graph edge must be a vertex pair");
        edges.push_back("(" + pair[0] + "," + pair[1] + ")");
        src.push_back({pair[0]});
        rng.push_back({pair[1]});
      }
      break;
    }
    case GraphKind::Multi: {
      for (const auto& je : graph.at("edges")) {
        edges.push_back(je.at("id").get<std::string>());
        src.push_back({je.at("s").get<std::string>()});
        rng.push_back({je.at("r").get<std::string>()});
      }
      break;
    }
    case GraphKind::None:
      throw std::runtime_error("cannot encode kind 'none'");
  }
  return Hypergraph(std::move(vertices), std::move(edges), src, rng);
}

DecodeResult decode(const Hypergraph& h) {
  PropertyReport rep = classify(h);
  DecodeResult out;
  out.graph = Json::object();
  bool two_uniform = h.num_edges() == 0 ||
                     (rep.k_uniform.has_value() && *rep.k_uniform == 2);
  bool one_uniform = h.num_edges() == 0 ||
                     (rep.k_uniform.has_value() && *rep.k_uniform == 1);
  if (two_uniform && rep.undirected && rep.no_multi_edges) {
    out.kind = GraphKind::Simple;
    out.graph["vertices"] = h.vertices();
    Json edges = Json::array();
    for (int e = 0; e < h.num_edges(); ++e) {
      edges.push_back(std::vector<std::string>{h.vertex(h.src(e)[0]), h.vertex(h.src(e)[1])});
    }
    out.graph["edges"] = edges;
    return out;
  }
  if (one_uniform && rep.no_multi_edges) {
    out.kind = GraphKind::Directed;
    out.graph["vertices"] = h.vertices();
    Json edges = Json::array();
    for (int e = 0; e < h.num_edges(); ++e) {
      edges.push_back(std::vector<std::string>{h.vertex(h.src(e)[0]), h.vertex(h.rng(e)[0])});
    }
    out.graph["edges"] = edges;
    return out;
  }
  if (one_uniform) {
    out.kind = GraphKind::Multi;
    out.graph["vertices"] = h.vertices();
    Json edges = Json::array();
    for (int e = 0; e < h.num_edges(); ++e) {
      Json je;
      je["id"] = h.edge(e);
      je["s"] = h.vertex(h.src(e)[0]);
      je["r"] = h.vertex(h.rng(e)[0]);
      edges.push_back(je);
    }
    out.graph["edges"] = edges;
    return out;
  }
  out.kind = GraphKind::None;
  return out;
}

Hypergraph transform(const Hypergraph& h, Transform which) {
  if (which == Transform::Opposite) {
    std::vector<std::vector<std::string>> src, rng;
    for (int e = 0; e < h.num_edges(); ++e) {
      std::vector<std::string> s, r;
      for (int v : h.src(e)) s.push_back(h.vertex(v));
      for (int v : h.rng(e)) r.push_back(h.vertex(v));
      src.push_back(r);
      rng.push_back(s);
    }
    return Hypergraph(h.vertices(), h.edges(), src, rng);
  }
  if (which == Transform::Dual) {
    for (const auto& e : h.edges()) {
      for (const auto& v : h.vertices()) {
        if (e == v) throw std::runtime_error("label collision: '" + e + "' is both a vertex and an edge");
      }
    }
    std::vector<std::vector<std::string>> src(h.num_vertices()), rng(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v) {
      for (int e = 0; e < h.num_edges(); ++e) {
        if (h.src_contains(e, v)) src[v].push_back(h.edge(e));
        if (h.rng_contains(e, v)) rng[v].push_back(h.edge(e));
      }
    }
    return Hypergraph(h.edges(), h.vertices(), src, rng);
  }
  return transform(transform(h, Transform::Opposite), Transform::Dual);
}

Hypergraph build_gamma_nm(int n, int m) {
  if (n < 1 || m < 1) throw std::runtime_error("gamma_nm requires n >= 1 and m >= 1");
  std::vector<std::string> vertices, edges;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i <= m; ++i) edges.push_back("e" + std::to_string(i));
  std::vector<std::vector<std::string>> src(m, vertices), rng(m, vertices);
  return Hypergraph(std::move(vertices), std::move(edges), src, rng);
}

Hypergraph build_complete(const std::vector<std::string>& vertices) {
  if (vertices.empty()) throw std::runtime_error("complete hypergraph requires a nonempty vertex set");
  int n = static_cast<int>(vertices.size());
  std::vector<std::string> edges;
  std::vector<std::vector<std::string>> src, rng;
  auto subset_name = [&](unsigned mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        if (!first) out += ",";
        out += vertices[i];
        first = false;
      }
    }
    return out + "}";
  };
  auto subset_list = [&](unsigned mask) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) out.push_back(vertices[i]);
    }
    return out;
  };
  for (unsigned x = 0; x < (1u << n); ++x) {
    for (unsigned y = 0; y < (1u << n); ++y) {
      edges.push_back("(" + subset_name(x) + "," + subset_name(y) + ")");
      src.push_back(subset_list(x));
      rng.push_back(subset_list(y));
    }
  }
  return Hypergraph(vertices, std::move(edges), src, rng);
}

}  // namespace hq
