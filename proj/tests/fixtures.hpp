#ifndef HQ_TESTS_FIXTURES_HPP_
#define HQ_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hq/hypergraph.hpp"

namespace hqtest {

using hq::GraphKind;
using hq::Hypergraph;
using hq::Json;

inline Hypergraph simple_graph(const std::vector<std::string>& vs,
                               const std::vector<std::pair<std::string, std::string>>& es) {
  Json edges = Json::array();
  for (const auto& [a, b] : es) edges.push_back(Json::array({a, b}));
  return hq::encode(Json{{"vertices", vs}, {"edges", edges}}, GraphKind::Simple);
}

inline Hypergraph directed_graph(const std::vector<std::string>& vs,
                                 const std::vector<std::pair<std::string, std::string>>& es) {
  Json edges = Json::array();
  for (const auto& [a, b] : es) edges.push_back(Json::array({a, b}));
  return hq::encode(Json{{"vertices", vs}, {"edges", edges}}, GraphKind::Directed);
}

inline Hypergraph multigraph(const std::vector<std::string>& vs,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& es) {
  Json edges = Json::array();
  for (const auto& [id, s, r] : es) edges.push_back(Json{{"id", id}, {"s", s}, {"r", r}});
  return hq::encode(Json{{"vertices", vs}, {"edges", edges}}, GraphKind::Multi);
}

inline Hypergraph single_directed_edge() { return directed_graph({"a", "b"}, {{"a", "b"}}); }

inline Hypergraph directed_path2() { return directed_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

inline Hypergraph directed_3cycle() {
  return directed_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

inline Hypergraph two_parallel_edges() {
  return multigraph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}});
}

inline Hypergraph simple_triangle() {
  return simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// |V|, |E| <= 4 throughout; covers the three encodings, empty edges,
// multi-edges, loops, mixed arities and the full-incidence family.
inline const std::vector<std::pair<std::string, Hypergraph>>& fixtures() {
  static const std::vector<std::pair<std::string, Hypergraph>> fs = [] {
    std::vector<std::pair<std::string, Hypergraph>> out;
    out.emplace_back("empty", Hypergraph({}, {}, {}, {}));
    out.emplace_back("one vertex", Hypergraph({"a"}, {}, {}, {}));
    out.emplace_back("one empty edge", Hypergraph({"a"}, {"e"}, {{}}, {{}}));
    out.emplace_back("two empty edges", Hypergraph({"a", "b"}, {"e1", "e2"}, {{}, {}}, {{}, {}}));
    out.emplace_back("single directed edge", single_directed_edge());
    out.emplace_back("directed path 2", directed_path2());
    out.emplace_back("directed 3-cycle", directed_3cycle());
    out.emplace_back("directed 4-cycle",
                     directed_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
    out.emplace_back("simple edge", simple_graph({"a", "b"}, {{"a", "b"}}));
    out.emplace_back("simple path 2", simple_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    out.emplace_back("simple triangle", simple_triangle());
    out.emplace_back("simple 4-cycle",
                     simple_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}));
    out.emplace_back("two parallel edges", two_parallel_edges());
    out.emplace_back("loop", multigraph({"a"}, {{"e", "a", "a"}}));
    out.emplace_back("parallel plus loop",
                     multigraph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "a"}}));
    out.emplace_back("gamma 2,1", hq::build_gamma_nm(2, 1));
    out.emplace_back("gamma 2,2", hq::build_gamma_nm(2, 2));
    out.emplace_back("gamma 2,3", hq::build_gamma_nm(2, 3));
    out.emplace_back("gamma 3,2", hq::build_gamma_nm(3, 2));
    out.emplace_back("mixed arity",
                     Hypergraph({"a", "b", "c"}, {"e1", "e2"}, {{"a", "b"}, {"c"}}, {{"c"}, {"a", "b", "c"}}));
    out.emplace_back("source only edge", Hypergraph({"a", "b"}, {"e"}, {{"a", "b"}}, {{}}));
    out.emplace_back("hyper multi-edge pair",
                     Hypergraph({"a", "b", "c"}, {"e1", "e2"}, {{"a", "b"}, {"a", "b"}}, {{"c"}, {"c"}}));
    return out;
  }();
  return fs;
}

}  // namespace hqtest

#endif  // HQ_TESTS_FIXTURES_HPP_
