#include "hq/tensor_checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hq {

namespace {

TensorPoly generator_coproduct(Generator g, int nv, int ne) {
  TensorPoly out;
  if (g.sort == Sort::UV) {
    for (int k = 0; k < nv; ++k) out.add_term({Generator::uV(g.i, k)}, {Generator::uV(k, g.j)}, 1);
  } else if (g.sort == Sort::UE) {
    for (int k = 0; k < ne; ++k) out.add_term({Generator::uE(g.i, k)}, {Generator::uE(k, g.j)}, 1);
  } else {
    throw std::runtime_error("coproduct is defined on the magic generators only");
  }
  return out;
}

TensorPoly generator_coaction(Generator g, int nv, int ne) {
  TensorPoly out;
  switch (g.sort) {
    case Sort::P:
      for (int w = 0; w < nv; ++w) out.add_term({Generator::p(w)}, {Generator::uV(w, g.i)}, 1);
      break;
    case Sort::S:
      for (int f = 0; f < ne; ++f) out.add_term({Generator::s(f)}, {Generator::uE(f, g.i)}, 1);
      break;
    case Sort::SStar:
      for (int f = 0; f < ne; ++f) out.add_term({Generator::sStar(f)}, {Generator::uE(f, g.i)}, 1);
      break;
    default:
      throw std::runtime_error("coaction is defined on the algebra generators only");
  }
  return out;
}

TensorPoly substitute(const NCPoly& p, int nv, int ne, TensorPoly (*image)(Generator, int, int)) {
  TensorPoly out;
  for (const auto& [w, c] : p.terms()) {
    TensorPoly prod;
    prod.add_term({}, {}, c);
    for (const Generator& g : w) prod = prod * image(g, nv, ne);
    out = out + prod;
  }
  return out;
}

// Groups by one leg and reduces the other leg's coefficient polynomials.
TensorPoly reduce_leg(const TensorPoly& t, IdealEngine& engine, bool reduce_right) {
  std::map<Word, NCPoly, WordOrder> groups;
  for (const auto& [key, c] : t.terms()) {
    const Word& fixed = reduce_right ? key.first : key.second;
    const Word& moving = reduce_right ? key.second : key.first;
    groups[fixed].add_term(moving, c);
  }
  TensorPoly out;
  for (auto& [fixed, poly] : groups) {
    NCPoly rem = engine.reduce_mod_ideal(poly).first;
    for (const auto& [w, c] : rem.terms()) {
      if (reduce_right) out.add_term(fixed, w, c);
      else out.add_term(w, fixed, c);
    }
  }
  return out;
}

}  // namespace

TensorPoly coproduct_image(const NCPoly& p, int nv, int ne) {
  return substitute(p, nv, ne, generator_coproduct);
}

TensorPoly coaction_image(const NCPoly& p, int nv, int ne) {
  return substitute(p, nv, ne, generator_coaction);
}

NCPoly apply_counit_right(const TensorPoly& t) {
  NCPoly out;
  for (const auto& [key, c] : t.terms()) {
    bool keep = true;
    for (const Generator& g : key.second) {
      if ((g.sort != Sort::UV && g.sort != Sort::UE) || g.i != g.j) {
        keep = false;
        break;
      }
    }
    if (keep) out.add_term(key.first, c);
  }
  return out;
}

bool tensor_reduces_to_zero(const TensorPoly& t, IdealEngine& left_engine, IdealEngine& right_engine,
                            int max_rounds) {
  TensorPoly cur = t;
  for (int round = 0; round < max_rounds; ++round) {
    if (cur.is_zero()) return true;
    TensorPoly before = cur;
    cur = reduce_leg(cur, right_engine, true);
    cur = reduce_leg(cur, left_engine, false);
    if (cur == before) break;
  }
  return cur.is_zero();
}

TensorCheckReport coproduct_check(const Hypergraph& h, int degree_bound) {
  TensorCheckReport rep;
  rep.degree_bound = degree_bound;
  Presentation pres = present(h, Flavor::QautHypergraph);
  int nv = h.num_vertices(), ne = h.num_edges();
  for (const Relation& r : pres.relations) {
    std::optional<Rational> eps = counit(r.poly);
    rep.items.push_back({"counit " + r.label, eps.has_value() && *eps == 0});
  }
  IdealEngine engine(pres, degree_bound);
  for (const Relation& r : pres.relations) {
    if (r.poly.is_zero()) continue;
    TensorPoly image = coproduct_image(r.poly, nv, ne);
    rep.items.push_back({"coproduct " + r.label, tensor_reduces_to_zero(image, engine, engine)});
  }
  rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                         [](const TensorCheckItem& i) { return i.pass; });
  return rep;
}

TensorCheckReport coaction_check(const Hypergraph& h, int degree_bound) {
  TensorCheckReport rep;
  rep.degree_bound = degree_bound;
  int nv = h.num_vertices(), ne = h.num_edges();
  Presentation cstar = present(h, Flavor::CstarEqualities);
  Presentation qaut = present(h, Flavor::QautHypergraph);
  Presentation magic = present(h, Flavor::FreeProduct);
  IdealEngine left(cstar, degree_bound);
  IdealEngine right(qaut, degree_bound);
  IdealEngine magic_engine(magic, degree_bound);

  auto alpha = [&](const NCPoly& p) { return coaction_image(p, nv, ne); };

  // (i) The coaction images satisfy the source/range relation.
  for (int e = 0; e < ne; ++e) {
    for (int f = 0; f < ne; ++f) {
      NCPoly rel = NCPoly::gen(Generator::sStar(e)) * NCPoly::gen(Generator::s(f));
      if (e == f) {
        for (int v : h.rng(e)) rel -= NCPoly::gen(Generator::p(v));
      }
      rep.items.push_back({"relation-1 image[" + h.edge(e) + "," + h.edge(f) + "]",
                           tensor_reduces_to_zero(alpha(rel), left, right)});
    }
  }

  // (ii) Projection and partial-isometry identities for the images.
  for (int v = 0; v < nv; ++v) {
    NCPoly pv = NCPoly::gen(Generator::p(v));
    rep.items.push_back({"projection image[" + h.vertex(v) + "]",
                         tensor_reduces_to_zero(alpha(pv * pv - pv), left, right)});
  }
  for (int e = 0; e < ne; ++e) {
    NCPoly se = NCPoly::gen(Generator::s(e));
    rep.items.push_back({"partial-isometry image[" + h.edge(e) + "]",
                         tensor_reduces_to_zero(alpha(se * se.adjoint() * se - se), left, right)});
  }

  // (iii) Derived direction: the coefficient of each p_w in the left-reduced
  // relation-1 image is the corresponding intertwiner entry, modulo the
  // magic relations alone.
  for (int e = 0; e < ne; ++e) {
    NCPoly q = NCPoly::gen(Generator::sStar(e)) * NCPoly::gen(Generator::s(e));
    TensorPoly t = alpha(q);
    for (int v : h.rng(e)) t = t - alpha(NCPoly::gen(Generator::p(v)));
    t = reduce_leg(t, left, false);
    std::map<int, NCPoly> coeffs;
    bool shape_ok = true;
    for (const auto& [key, c] : t.terms()) {
      if (key.first.size() != 1 || key.first[0].sort != Sort::P) {
        shape_ok = false;
        break;
      }
      coeffs[key.first[0].i].add_term(key.second, c);
    }
    bool ok = shape_ok;
    if (shape_ok) {
      for (int w = 0; w < nv && ok; ++w) {
        NCPoly expected;
        for (int f = 0; f < ne; ++f) {
          if (h.rng_contains(f, w)) expected += NCPoly::gen(Generator::uE(f, e));
        }
        for (int v : h.rng(e)) expected -= NCPoly::gen(Generator::uV(w, v));
        NCPoly diff = coeffs[w] - expected;
        ok = magic_engine.member(diff).status == Membership::Yes;
      }
    }
    rep.items.push_back({"derived intertwiner[" + h.edge(e) + "]", ok});
  }

  // (iv) (id (x) counit) after the coaction returns each generator.
  bool counit_ok = true;
  for (const Generator& g : cstar.generators) {
    NCPoly back = apply_counit_right(alpha(NCPoly::gen(g)));
    if (!(back == NCPoly::gen(g))) counit_ok = false;
  }
  rep.items.push_back({"counit after coaction", counit_ok});

  rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                         [](const TensorCheckItem& i) { return i.pass; });
  return rep;
}

}  // namespace hq
