#include "hq/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hq/autsearch.hpp"

namespace hq {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::QautHypergraph: return "qaut_hypergraph";
    case Flavor::SPlus: return "s_plus";
    case Flavor::Bichon: return "bichon";
    case Flavor::Banica: return "banica";
    case Flavor::GH: return "gh";
    case Flavor::CstarEqualities: return "cstar_equalities";
    case Flavor::FreeProduct: return "free_product";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& name) {
  for (Flavor f : {Flavor::QautHypergraph, Flavor::SPlus, Flavor::Bichon, Flavor::Banica,
                   Flavor::GH, Flavor::CstarEqualities, Flavor::FreeProduct}) {
    if (flavor_name(f) == name) return f;
  }
  return std::nullopt;
}

bool Presentation::has_generator(Generator g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

std::string Presentation::generator_label(const Generator& g) const {
  const auto& vs = hypergraph.vertices();
  const auto& es = hypergraph.edges();
  switch (g.sort) {
    case Sort::UV: return "uV[" + vs[g.i] + "," + vs[g.j] + "]";
    case Sort::UE: return "uE[" + es[g.i] + "," + es[g.j] + "]";
    case Sort::P: return "p[" + vs[g.i] + "]";
    case Sort::S: return "s[" + es[g.i] + "]";
    case Sort::SStar: return "s[" + es[g.i] + "]*";
  }
  return "?";
}

namespace {

Generator family_gen(Sort sort, int i, int j) {
  return sort == Sort::UV ? Generator::uV(i, j) : Generator::uE(i, j);
}

void add_magic_family(Sort sort, int n, const std::string& name, Presentation& p) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.generators.push_back(family_gen(sort, i, j));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NCPoly g = NCPoly::gen(family_gen(sort, i, j));
      p.relations.push_back({name + " idempotent[" + std::to_string(i) + "," + std::to_string(j) + "]",
                             g * g - g});
      // Formally self-adjoint generators make this the zero polynomial; the
      // entry is kept so the relation list matches the defining presentation.
      p.relations.push_back({name + " self-adjoint[" + std::to_string(i) + "," + std::to_string(j) + "]",
                             g.adjoint() - g});
    }
  }
  for (int i = 0; i < n; ++i) {
    NCPoly row, col;
    for (int j = 0; j < n; ++j) {
      row += NCPoly::gen(family_gen(sort, i, j));
      col += NCPoly::gen(family_gen(sort, j, i));
    }
    p.relations.push_back({name + " row-sum[" + std::to_string(i) + "]", row - NCPoly::one()});
    p.relations.push_back({name + " col-sum[" + std::to_string(i) + "]", col - NCPoly::one()});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (j == k) continue;
        p.derived.push_back({name + " row-orth[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]",
                             NCPoly::gen(family_gen(sort, i, j)) * NCPoly::gen(family_gen(sort, i, k)),
                             true});
        p.derived.push_back({name + " col-orth[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]",
                             NCPoly::gen(family_gen(sort, j, i)) * NCPoly::gen(family_gen(sort, k, i)),
                             true});
      }
    }
  }
}

void add_intertwiners(const Hypergraph& h, Presentation& p) {
  int nv = h.num_vertices(), ne = h.num_edges();
  for (int v = 0; v < nv; ++v) {
    for (int e = 0; e < ne; ++e) {
      NCPoly src_lhs, src_rhs, rng_lhs, rng_rhs;
      for (int f = 0; f < ne; ++f) {
        if (h.src_contains(f, v)) src_lhs += NCPoly::gen(Generator::uE(f, e));
        if (h.rng_contains(f, v)) rng_lhs += NCPoly::gen(Generator::uE(f, e));
      }
      for (int w : h.src(e)) src_rhs += NCPoly::gen(Generator::uV(v, w));
      for (int w : h.rng(e)) rng_rhs += NCPoly::gen(Generator::uV(v, w));
      p.relations.push_back({"intertwiner As[" + std::to_string(v) + "," + std::to_string(e) + "]",
                             src_lhs - src_rhs});
      p.relations.push_back({"intertwiner Ar[" + std::to_string(v) + "," + std::to_string(e) + "]",
                             rng_lhs - rng_rhs});
      NCPoly src_star_lhs, src_star_rhs, rng_star_lhs, rng_star_rhs;
      for (int w : h.src(e)) src_star_lhs += NCPoly::gen(Generator::uV(w, v));
      for (int w : h.rng(e)) rng_star_lhs += NCPoly::gen(Generator::uV(w, v));
      for (int f = 0; f < ne; ++f) {
        if (h.src_contains(f, v)) src_star_rhs += NCPoly::gen(Generator::uE(e, f));
        if (h.rng_contains(f, v)) rng_star_rhs += NCPoly::gen(Generator::uE(e, f));
      }
      p.relations.push_back({"intertwiner As*[" + std::to_string(e) + "," + std::to_string(v) + "]",
                             src_star_lhs - src_star_rhs});
      p.relations.push_back({"intertwiner Ar*[" + std::to_string(e) + "," + std::to_string(v) + "]",
                             rng_star_lhs - rng_star_rhs});
    }
  }
}

std::vector<std::vector<int>> adjacency(const Hypergraph& h, GraphKind kind) {
  int nv = h.num_vertices();
  std::vector<std::vector<int>> adj(nv, std::vector<int>(nv, 0));
  for (int e = 0; e < h.num_edges(); ++e) {
    if (kind == GraphKind::Simple) {
      int v = h.src(e)[0], w = h.src(e)[1];
      adj[v][w] = adj[w][v] = 1;
    } else {
      adj[h.src(e)[0]][h.rng(e)[0]] = 1;
    }
  }
  return adj;
}

void add_graph_flavor(const Hypergraph& h, bool with_commutation, Presentation& p) {
  DecodeResult dec = decode(h);
  if (dec.kind != GraphKind::Simple && dec.kind != GraphKind::Directed) {
    throw std::runtime_error("simple or directed graph required");
  }
  int nv = h.num_vertices();
  add_magic_family(Sort::UV, nv, "uV", p);
  auto adj = adjacency(h, dec.kind);
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) {
      NCPoly rel;
      for (int k = 0; k < nv; ++k) {
        if (adj[v][k]) rel += NCPoly::gen(Generator::uV(k, w));
        if (adj[k][w]) rel -= NCPoly::gen(Generator::uV(v, k));
      }
      if (!rel.is_zero()) {
        p.relations.push_back({"adjacency[" + std::to_string(v) + "," + std::to_string(w) + "]", rel});
      }
    }
  }
  if (with_commutation) {
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        if (adj[i][j])
          for (int k = 0; k < nv; ++k)
            for (int l = 0; l < nv; ++l)
              if (adj[k][l]) {
                NCPoly a = NCPoly::gen(Generator::uV(i, k)) * NCPoly::gen(Generator::uV(j, l));
                NCPoly b = NCPoly::gen(Generator::uV(j, l)) * NCPoly::gen(Generator::uV(i, k));
                p.relations.push_back({"commutation[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + "," + std::to_string(l) + "]",
                                       a - b});
              }
  }
}

void add_gh_flavor(const Hypergraph& h, Presentation& p) {
  PropertyReport rep = classify(h);
  bool one_uniform = rep.k_uniform.has_value() && *rep.k_uniform == 1;
  if (!one_uniform || !rep.isolated.empty()) {
    throw std::runtime_error("multigraph without isolated vertices required");
  }
  int ne = h.num_edges();
  add_magic_family(Sort::UE, ne, "uE", p);
  auto is_source = [&](int v) { return rep.n_r.at(h.vertex(v)) == 0; };
  auto is_sink = [&](int v) { return rep.n_s.at(h.vertex(v)) == 0; };
  auto src_of = [&](int e) { return h.src(e)[0]; };
  auto rng_of = [&](int e) { return h.rng(e)[0]; };

  auto sum_over = [&](int e1, bool use_src, int v) {
    NCPoly out;
    for (int f = 0; f < ne; ++f) {
      if ((use_src ? src_of(f) : rng_of(f)) == v) out += NCPoly::gen(Generator::uE(e1, f));
    }
    return out;
  };

  for (int e1 = 0; e1 < ne; ++e1) {
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      for (int v = 0; v < h.num_vertices(); ++v) {
        if (src_of(e1) == src_of(e2)) {
          p.relations.push_back({"gh2s[" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(v) + "]",
                                 sum_over(e1, true, v) - sum_over(e2, true, v)});
        }
        if (rng_of(e1) == rng_of(e2)) {
          p.relations.push_back({"gh2r[" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(v) + "]",
                                 sum_over(e1, false, v) - sum_over(e2, false, v)});
        }
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    for (int f = 0; f < ne; ++f) {
      bool kill = (!is_source(src_of(e)) && !is_sink(src_of(e)) && is_source(src_of(f))) ||
                  (!is_source(rng_of(e)) && !is_sink(rng_of(e)) && is_sink(rng_of(f)));
      if (kill) {
        p.relations.push_back({"gh3[" + std::to_string(e) + "," + std::to_string(f) + "]",
                               NCPoly::gen(Generator::uE(e, f))});
      }
    }
  }
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (is_source(v) || is_sink(v)) continue;
    for (int e1 = 0; e1 < ne; ++e1) {
      for (int e2 = 0; e2 < ne; ++e2) {
        int x = src_of(e1);
        if (x != rng_of(e2) || is_source(x) || is_sink(x)) continue;
        NCPoly rel = sum_over(e1, true, v) - sum_over(e2, false, v);
        if (!rel.is_zero()) {
          p.relations.push_back({"gh4[" + std::to_string(v) + "," + std::to_string(e1) + "," + std::to_string(e2) + "]",
                                 rel});
        }
      }
    }
  }
  p.notes.push_back("relation set follows the variant with the idempotency relation added and the two vanishing conditions swapped relative to the original multigraph definition");
  p.notes.push_back("source/range vertices of an edge are the unique elements of the 1-uniform source/range sets");
}

void add_cstar_flavor(const Hypergraph& h, Presentation& p) {
  int nv = h.num_vertices(), ne = h.num_edges();
  for (int v = 0; v < nv; ++v) p.generators.push_back(Generator::p(v));
  for (int e = 0; e < ne; ++e) p.generators.push_back(Generator::s(e));
  for (int e = 0; e < ne; ++e) p.generators.push_back(Generator::sStar(e));
  for (int v = 0; v < nv; ++v) {
    NCPoly g = NCPoly::gen(Generator::p(v));
    p.relations.push_back({"p self-adjoint[" + std::to_string(v) + "]", g.adjoint() - g});
  }
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) {
      NCPoly rel = NCPoly::gen(Generator::p(v)) * NCPoly::gen(Generator::p(w));
      if (v == w) rel -= NCPoly::gen(Generator::p(v));
      p.relations.push_back({"p orthogonal[" + std::to_string(v) + "," + std::to_string(w) + "]", rel});
    }
  }
  for (int e = 0; e < ne; ++e) {
    NCPoly s = NCPoly::gen(Generator::s(e));
    p.relations.push_back({"s partial-isometry[" + std::to_string(e) + "]",
                           s * s.adjoint() * s - s});
  }
  for (int e = 0; e < ne; ++e) {
    for (int f = 0; f < ne; ++f) {
      NCPoly rel = NCPoly::gen(Generator::sStar(e)) * NCPoly::gen(Generator::s(f));
      if (e == f) {
        for (int v : h.rng(e)) rel -= NCPoly::gen(Generator::p(v));
      }
      p.relations.push_back({"range[" + std::to_string(e) + "," + std::to_string(f) + "]", rel});
    }
  }
}

}  // namespace

Presentation present(const Hypergraph& h, Flavor flavor) {
  Presentation p;
  p.flavor = flavor;
  p.hypergraph = h;
  switch (flavor) {
    case Flavor::SPlus:
      add_magic_family(Sort::UV, h.num_vertices(), "uV", p);
      break;
    case Flavor::FreeProduct:
      add_magic_family(Sort::UV, h.num_vertices(), "uV", p);
      add_magic_family(Sort::UE, h.num_edges(), "uE", p);
      break;
    case Flavor::QautHypergraph:
      add_magic_family(Sort::UV, h.num_vertices(), "uV", p);
      add_magic_family(Sort::UE, h.num_edges(), "uE", p);
      add_intertwiners(h, p);
      break;
    case Flavor::Bichon:
      add_graph_flavor(h, true, p);
      break;
    case Flavor::Banica:
      add_graph_flavor(h, false, p);
      break;
    case Flavor::GH:
      add_gh_flavor(h, p);
      break;
    case Flavor::CstarEqualities:
      add_cstar_flavor(h, p);
      break;
  }
  return p;
}

std::optional<Rational> counit(const NCPoly& p) {
  Rational out = 0;
  for (const auto& [w, c] : p.terms()) {
    bool keep = true;
    for (const Generator& g : w) {
      if (g.sort != Sort::UV && g.sort != Sort::UE) return std::nullopt;
      if (g.i != g.j) {
        keep = false;
        break;
      }
    }
    if (keep) out += c;
  }
  return out;
}

NCPoly permute_labels(const NCPoly& p, const std::vector<int>& sigma, const std::vector<int>& tau) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word img;
    img.reserve(w.size());
    for (Generator g : w) {
      switch (g.sort) {
        case Sort::UV:
          g.i = static_cast<int16_t>(sigma[g.i]);
          g.j = static_cast<int16_t>(sigma[g.j]);
          break;
        case Sort::UE:
          g.i = static_cast<int16_t>(tau[g.i]);
          g.j = static_cast<int16_t>(tau[g.j]);
          break;
        case Sort::P:
          g.i = static_cast<int16_t>(sigma[g.i]);
          break;
        case Sort::S:
        case Sort::SStar:
          g.i = static_cast<int16_t>(tau[g.i]);
          break;
      }
      img.push_back(g);
    }
    out.add_term(img, c);
  }
  return out;
}

SymmetryCheckReport presentation_symmetry_check(const Hypergraph& h) {
  SymmetryCheckReport rep;
  AutGroup aut = enumerate_aut(h, AutMethod::Backtrack);
  for (Flavor flavor : {Flavor::QautHypergraph, Flavor::CstarEqualities}) {
    Presentation p = present(h, flavor);
    std::multiset<std::string> base;
    for (const auto& r : p.relations) base.insert(r.poly.str());
    for (const auto& g : aut.elements) {
      std::multiset<std::string> image;
      for (const auto& r : p.relations) {
        image.insert(permute_labels(r.poly, g.sigma, g.tau).str());
      }
      if (image != base) {
        rep.pass = false;
        rep.failures.push_back(flavor_name(flavor) + " relation set not fixed by an automorphism");
      }
    }
  }
  return rep;
}

}  // namespace hq
