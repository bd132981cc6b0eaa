#ifndef HQ_HYPERGRAPH_HPP_
#define HQ_HYPERGRAPH_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hq {

using Json = nlohmann::ordered_json;

// Finite directed hypergraph. Vertices and edges are labeled by strings and
// keep their document order; source/range sets are stored as sorted index
// lists into the vertex table.
class Hypergraph {
 public:
  Hypergraph() = default;

  // src/rng are per-edge vertex label sets, parallel to `edges`.
  // Throws on duplicate labels or unknown vertex references.
  Hypergraph(std::vector<std::string> vertices,
             std::vector<std::string> edges,
             const std::vector<std::vector<std::string>>& src,
             const std::vector<std::vector<std::string>>& rng);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& edges() const { return edges_; }
  const std::string& vertex(int i) const { return vertices_[i]; }
  const std::string& edge(int i) const { return edges_[i]; }

  int vertex_index(const std::string& label) const;  // throws if unknown
  int edge_index(const std::string& label) const;

  // Sorted vertex index lists.
  const std::vector<int>& src(int e) const { return src_[e]; }
  const std::vector<int>& rng(int e) const { return rng_[e]; }

  bool src_contains(int e, int v) const;
  bool rng_contains(int e, int v) const;

  Json to_json() const;
  static Hypergraph from_json(const Json& doc);
  static Hypergraph parse(const std::string& text);

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> edges_;
  std::vector<std::vector<int>> src_;
  std::vector<std::vector<int>> rng_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
};

struct IncidencePair {
  // Row-by-vertex, column-by-edge 0/1 matrices.
  std::vector<std::vector<int>> a_s;
  std::vector<std::vector<int>> a_r;
};

struct PropertyReport {
  bool no_multi_edges = true;
  bool undirected = true;
  std::optional<int> k_uniform;
  std::vector<std::string> sources;
  std::vector<std::string> sinks;
  std::vector<std::string> isolated;
  std::map<std::string, int> n_s;
  std::map<std::string, int> n_r;

  Json to_json() const;
};

IncidencePair incidence(const Hypergraph& h);
PropertyReport classify(const Hypergraph& h);

enum class GraphKind { Simple, Directed, Multi, None };

std::string graph_kind_name(GraphKind k);

// graph-description documents:
//   simple:   {"vertices":[...], "edges":[["v","w"],...]}
//   directed: {"vertices":[...], "edges":[["v","w"],...]}  (ordered pairs)
//   multi:    {"vertices":[...], "edges":[{"id":"e","s":"v","r":"w"},...]}
Hypergraph encode(const Json& graph, GraphKind kind);

struct DecodeResult {
  GraphKind kind = GraphKind::None;
  Json graph;  // reconstructed description, empty object for None
};

DecodeResult decode(const Hypergraph& h);

enum class Transform { Opposite, Dual, GammaPrime };

Hypergraph transform(const Hypergraph& h, Transform which);

// n vertices v1..vn, m edges e1..em with s(e) = r(e) = V.
Hypergraph build_gamma_nm(int n, int m);

// One edge per ordered pair (X, Y) of vertex subsets, 4^|V| edges.
Hypergraph build_complete(const std::vector<std::string>& vertices);

}  // namespace hq

#endif  // HQ_HYPERGRAPH_HPP_
