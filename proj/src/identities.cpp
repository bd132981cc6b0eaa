#include "hq/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

namespace {

// Sum over w in s(e) (or r(e)) of uV[v,w].
NCPoly vertex_row_sum(const Hypergraph& h, int v, int e, bool use_rng) {
  NCPoly out;
  for (int w : (use_rng ? h.rng(e) : h.src(e))) out += NCPoly::gen(Generator::uV(v, w));
  return out;
}

// Sum over f with s(f) = X (or r(f) = X) of uE[f,e].
NCPoly edge_sum_equal(const Hypergraph& h, const std::vector<int>& x, int e, bool use_rng) {
  NCPoly out;
  for (int f = 0; f < h.num_edges(); ++f) {
    if ((use_rng ? h.rng(f) : h.src(f)) == x) out += NCPoly::gen(Generator::uE(f, e));
  }
  return out;
}

// Inclusion-exclusion expression: sum over Y with X <= Y <= V of
// (-1)^(|Y|-|X|) * product over v in Y of vertex_row_sum(v, e).
NCPoly inclusion_exclusion_sum(const Hypergraph& h, const std::vector<int>& x, int e, bool use_rng) {
  int nv = h.num_vertices();
  std::vector<int> rest;
  for (int v = 0; v < nv; ++v) {
    if (std::find(x.begin(), x.end(), v) == x.end()) rest.push_back(v);
  }
  NCPoly out;
  for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
    std::vector<int> y = x;
    for (size_t b = 0; b < rest.size(); ++b) {
      if (mask & (1u << b)) y.push_back(rest[b]);
    }
    std::sort(y.begin(), y.end());
    NCPoly prod = NCPoly::one();
    for (int v : y) prod = prod * vertex_row_sum(h, v, e, use_rng);
    int sign = (y.size() - x.size()) % 2 == 0 ? 1 : -1;
    out += prod.scaled(sign);
  }
  return out;
}

std::vector<std::vector<int>> vertex_subsets(int nv) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    std::vector<int> x;
    for (int v = 0; v < nv; ++v) {
      if (mask & (1u << v)) x.push_back(v);
    }
    out.push_back(std::move(x));
  }
  return out;
}

void run_instance(IdealEngine& engine, const std::string& desc, const NCPoly& q, IdentityReport& rep) {
  IdentityInstance inst;
  inst.description = desc;
  inst.query = q;
  MemberResult res = engine.member(q);
  inst.yes = res.status == Membership::Yes;
  inst.cert = std::move(res.cert);
  rep.instances.push_back(std::move(inst));
}

std::string map_name(bool use_rng) { return use_rng ? "r" : "s"; }

std::string set_str(const Hypergraph& h, const std::vector<int>& x) {
  std::string out = "{";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += h.vertex(x[i]);
  }
  return out + "}";
}

void check_product_commutes(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  for (bool use_rng : {false, true}) {
    for (int e = 0; e < h.num_edges(); ++e) {
      for (int v1 = 0; v1 < h.num_vertices(); ++v1) {
        for (int v2 = v1 + 1; v2 < h.num_vertices(); ++v2) {
          NCPoly a = vertex_row_sum(h, v1, e, use_rng);
          NCPoly b = vertex_row_sum(h, v2, e, use_rng);
          NCPoly q = a * b - b * a;
          run_instance(engine,
                       map_name(use_rng) + ", e=" + h.edge(e) + ", v1=" + h.vertex(v1) + ", v2=" + h.vertex(v2),
                       q, rep);
        }
      }
    }
  }
}

void check_inclusion_exclusion(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  if (h.num_vertices() > 5) throw std::runtime_error("vertex count exceeds the subset-enumeration limit of 5");
  auto subsets = vertex_subsets(h.num_vertices());
  for (bool use_rng : {false, true}) {
    for (int e = 0; e < h.num_edges(); ++e) {
      for (const auto& x : subsets) {
        NCPoly q = edge_sum_equal(h, x, e, use_rng) - inclusion_exclusion_sum(h, x, e, use_rng);
        run_instance(engine, map_name(use_rng) + ", e=" + h.edge(e) + ", X=" + set_str(h, x), q, rep);
      }
    }
  }
}

void check_no_multiedge_reduction(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  if (!classify(h).no_multi_edges) throw std::runtime_error("hypergraph without multi-edges required");
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int f = 0; f < h.num_edges(); ++f) {
      NCPoly q = NCPoly::gen(Generator::uE(e, f)) -
                 inclusion_exclusion_sum(h, h.src(e), f, false) * inclusion_exclusion_sum(h, h.rng(e), f, true);
      run_instance(engine, "e=" + h.edge(e) + ", f=" + h.edge(f), q, rep);
    }
  }
}

void check_directed_edge_formula(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  if (decode(h).kind != GraphKind::Directed) throw std::runtime_error("directed graph required");
  for (int e1 = 0; e1 < h.num_edges(); ++e1) {
    for (int e2 = 0; e2 < h.num_edges(); ++e2) {
      int v1 = h.src(e1)[0], w1 = h.rng(e1)[0];
      int v2 = h.src(e2)[0], w2 = h.rng(e2)[0];
      NCPoly vv = NCPoly::gen(Generator::uV(v1, v2));
      NCPoly ww = NCPoly::gen(Generator::uV(w1, w2));
      run_instance(engine, "e1=" + h.edge(e1) + ", e2=" + h.edge(e2),
                   NCPoly::gen(Generator::uE(e1, e2)) - vv * ww, rep);
      run_instance(engine, "e1=" + h.edge(e1) + ", e2=" + h.edge(e2) + ", commuted",
                   vv * ww - ww * vv, rep);
    }
  }
}

void check_simple_edge_formula(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  if (decode(h).kind != GraphKind::Simple) throw std::runtime_error("simple graph required");
  for (int e1 = 0; e1 < h.num_edges(); ++e1) {
    for (int e2 = 0; e2 < h.num_edges(); ++e2) {
      int v1 = h.src(e1)[0], w1 = h.src(e1)[1];
      int v2 = h.src(e2)[0], w2 = h.src(e2)[1];
      NCPoly q = NCPoly::gen(Generator::uE(e1, e2)) -
                 NCPoly::gen(Generator::uV(v1, v2)) * NCPoly::gen(Generator::uV(w1, w2)) -
                 NCPoly::gen(Generator::uV(v1, w2)) * NCPoly::gen(Generator::uV(w1, v2));
      run_instance(engine, "e1=" + h.edge(e1) + ", e2=" + h.edge(e2), q, rep);
    }
  }
}

void check_multigraph_intertwiner(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  if (decode(h).kind != GraphKind::Multi) throw std::runtime_error("multigraph required");
  for (bool use_rng : {false, true}) {
    for (int e = 0; e < h.num_edges(); ++e) {
      int ve = use_rng ? h.rng(e)[0] : h.src(e)[0];
      for (int v = 0; v < h.num_vertices(); ++v) {
        NCPoly q;
        for (int f = 0; f < h.num_edges(); ++f) {
          if ((use_rng ? h.rng(f)[0] : h.src(f)[0]) == v) q += NCPoly::gen(Generator::uE(e, f));
        }
        q -= NCPoly::gen(Generator::uV(ve, v));
        run_instance(engine, map_name(use_rng) + ", e=" + h.edge(e) + ", v=" + h.vertex(v), q, rep);
      }
    }
  }
}

void check_degree_vanishing(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  PropertyReport props = classify(h);
  for (bool use_rng : {false, true}) {
    const auto& counts = use_rng ? props.n_r : props.n_s;
    for (int v = 0; v < h.num_vertices(); ++v) {
      for (int w = 0; w < h.num_vertices(); ++w) {
        if (v == w || counts.at(h.vertex(v)) == counts.at(h.vertex(w))) continue;
        run_instance(engine, "N_" + map_name(use_rng) + ", v=" + h.vertex(v) + ", w=" + h.vertex(w),
                     NCPoly::gen(Generator::uV(v, w)), rep);
      }
    }
  }
}

void check_gamma_nm_triviality(const Hypergraph& h, IdentityReport& rep) {
  std::vector<int> full;
  for (int v = 0; v < h.num_vertices(); ++v) full.push_back(v);
  for (int e = 0; e < h.num_edges(); ++e) {
    if (h.src(e) != full || h.rng(e) != full) {
      throw std::runtime_error("hypergraph with s(e) = r(e) = V required");
    }
  }
  Presentation qaut = present(h, Flavor::QautHypergraph);
  std::vector<int> sum_rels;
  for (int i = 0; i < static_cast<int>(rep.pres.relations.size()); ++i) {
    const std::string& label = rep.pres.relations[i].label;
    if (label.find("row-sum") != std::string::npos || label.find("col-sum") != std::string::npos) {
      sum_rels.push_back(i);
    }
  }
  for (const Relation& r : qaut.relations) {
    if (r.label.rfind("intertwiner", 0) != 0) continue;
    IdentityInstance inst;
    inst.description = r.label;
    inst.query = r.poly;
    // Each intertwiner relation must be the difference of two full-sum
    // relations; no linear algebra beyond that is allowed here.
    for (int a : sum_rels) {
      for (int b : sum_rels) {
        if (rep.pres.relations[a].poly - rep.pres.relations[b].poly == r.poly) {
          inst.yes = true;
          inst.cert.combination = {{{}, a, {}, 1}, {{}, b, {}, -1}};
          break;
        }
      }
      if (inst.yes) break;
    }
    rep.instances.push_back(std::move(inst));
  }
}

void check_bic_sum_one(const Hypergraph& h, IdealEngine& engine, IdentityReport& rep) {
  DecodeResult dec = decode(h);
  int nv = h.num_vertices();
  std::vector<std::vector<int>> adj(nv, std::vector<int>(nv, 0));
  for (int e = 0; e < h.num_edges(); ++e) {
    if (dec.kind == GraphKind::Simple) {
      adj[h.src(e)[0]][h.src(e)[1]] = adj[h.src(e)[1]][h.src(e)[0]] = 1;
    } else {
      adj[h.src(e)[0]][h.rng(e)[0]] = 1;
    }
  }
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (!adj[i][j]) continue;
      NCPoly row, col;
      for (int k = 0; k < nv; ++k) {
        for (int l = 0; l < nv; ++l) {
          if (!adj[k][l]) continue;
          row += NCPoly::gen(Generator::uV(i, k)) * NCPoly::gen(Generator::uV(j, l));
          col += NCPoly::gen(Generator::uV(k, i)) * NCPoly::gen(Generator::uV(l, j));
        }
      }
      run_instance(engine, "rows, i=" + h.vertex(i) + ", j=" + h.vertex(j), row - NCPoly::one(), rep);
      run_instance(engine, "columns, i=" + h.vertex(i) + ", j=" + h.vertex(j), col - NCPoly::one(), rep);
    }
  }
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "product_commutes",      "inclusion_exclusion",   "no_multiedge_reduction",
      "directed_edge_formula", "simple_edge_formula",   "multigraph_intertwiner",
      "degree_vanishing",      "gamma_nm_triviality",   "bic_sum_one",
  };
  return ids;
}

IdentityReport verify_identity(const Hypergraph& h, const std::string& identity_id, int degree_bound) {
  IdentityReport rep;
  rep.identity_id = identity_id;
  rep.degree_bound = degree_bound;
  if (identity_id == "gamma_nm_triviality") {
    rep.pres = present(h, Flavor::FreeProduct);
    check_gamma_nm_triviality(h, rep);
  } else if (identity_id == "bic_sum_one") {
    rep.pres = present(h, Flavor::Bichon);
    IdealEngine engine(rep.pres, degree_bound);
    check_bic_sum_one(h, engine, rep);
  } else {
    rep.pres = present(h, Flavor::QautHypergraph);
    IdealEngine engine(rep.pres, degree_bound);
    if (identity_id == "product_commutes") check_product_commutes(h, engine, rep);
    else if (identity_id == "inclusion_exclusion") check_inclusion_exclusion(h, engine, rep);
    else if (identity_id == "no_multiedge_reduction") check_no_multiedge_reduction(h, engine, rep);
    else if (identity_id == "directed_edge_formula") check_directed_edge_formula(h, engine, rep);
    else if (identity_id == "simple_edge_formula") check_simple_edge_formula(h, engine, rep);
    else if (identity_id == "multigraph_intertwiner") check_multigraph_intertwiner(h, engine, rep);
    else if (identity_id == "degree_vanishing") check_degree_vanishing(h, engine, rep);
    else throw std::runtime_error("unknown identity id: " + identity_id);
  }
  rep.pass = std::all_of(rep.instances.begin(), rep.instances.end(),
                         [](const IdentityInstance& i) { return i.yes; });
  return rep;
}

}  // namespace hq
