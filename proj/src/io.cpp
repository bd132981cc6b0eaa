#include "hq/io.hpp"

#include <stdexcept>

namespace hq {

namespace {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::UV: return "uV";
    case Sort::UE: return "uE";
    case Sort::P: return "p";
    case Sort::S: return "s";
    case Sort::SStar: return "s*";
  }
  return "?";
}

Sort sort_from_name(const std::string& name) {
  if (name == "uV") return Sort::UV;
  if (name == "uE") return Sort::UE;
  if (name == "p") return Sort::P;
  if (name == "s") return Sort::S;
  if (name == "s*") return Sort::SStar;
  throw std::runtime_error("unknown generator sort: " + name);
}

std::string poly_to_free_algebra(const Presentation& pres, const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out += "- ";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    if (w.empty()) {
      out += rational_to_string(coeff);
      continue;
    }
    if (coeff != 1) out += rational_to_string(coeff) + " ";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ".";
      out += pres.generator_label(w[i]);
    }
  }
  return out;
}

}  // namespace

Json generator_to_json(const Generator& g) {
  return Json{{"sort", sort_name(g.sort)}, {"i", g.i}, {"j", g.j}};
}

Generator generator_from_json(const Json& doc) {
  Generator g;
  g.sort = sort_from_name(doc.at("sort").get<std::string>());
  g.i = static_cast<int16_t>(doc.at("i").get<int>());
  g.j = static_cast<int16_t>(doc.at("j").get<int>());
  return g;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const Generator& g : w) out.push_back(generator_to_json(g));
  return out;
}

Word word_from_json(const Json& doc) {
  Word w;
  for (const Json& g : doc) w.push_back(generator_from_json(g));
  return w;
}

Json poly_to_json(const NCPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) {
    out.push_back(Json{{"coeff", rational_to_string(c)}, {"word", word_to_json(w)}});
  }
  return out;
}

NCPoly poly_from_json(const Json& doc) {
  NCPoly p;
  for (const Json& t : doc) {
    p.add_term(word_from_json(t.at("word")), rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

Json certificate_to_json(const MembershipCertificate& cert) {
  Json comb = Json::array();
  for (const CertTerm& t : cert.combination) {
    comb.push_back(Json{{"left", word_to_json(t.left)},
                        {"rel", t.rel},
                        {"right", word_to_json(t.right)},
                        {"coeff", rational_to_string(t.coeff)}});
  }
  return Json{{"degree_bound", cert.degree_bound}, {"combination", std::move(comb)}};
}

MembershipCertificate certificate_from_json(const Json& doc) {
  MembershipCertificate cert;
  cert.degree_bound = doc.at("degree_bound").get<int>();
  for (const Json& t : doc.at("combination")) {
    cert.combination.push_back({word_from_json(t.at("left")), t.at("rel").get<int>(),
                                word_from_json(t.at("right")),
                                rational_from_string(t.at("coeff").get<std::string>())});
  }
  return cert;
}

Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const Generator& g : p.generators) {
    Json gj = generator_to_json(g);
    gj["name"] = p.generator_label(g);
    gens.push_back(std::move(gj));
  }
  auto relation_list = [&](const std::vector<Relation>& rels) {
    Json out = Json::array();
    for (const Relation& r : rels) {
      out.push_back(Json{{"label", r.label}, {"poly", poly_to_json(r.poly)},
                         {"text", poly_to_free_algebra(p, r.poly)}});
    }
    return out;
  };
  return Json{{"flavor", flavor_name(p.flavor)},
              {"hypergraph", p.hypergraph.to_json()},
              {"generators", std::move(gens)},
              {"relations", relation_list(p.relations)},
              {"derived", relation_list(p.derived)},
              {"notes", p.notes}};
}

std::string presentation_to_text(const Presentation& p) {
  std::string out = "flavor: " + flavor_name(p.flavor) + "\n";
  out += "generators (" + std::to_string(p.generators.size()) + "):";
  for (const Generator& g : p.generators) out += " " + p.generator_label(g);
  out += "\nrelations (" + std::to_string(p.relations.size()) + "):\n";
  for (const Relation& r : p.relations) {
    out += "  " + r.label + ": " + poly_to_free_algebra(p, r.poly) + " = 0\n";
  }
  if (!p.derived.empty()) {
    out += "derived (" + std::to_string(p.derived.size()) + "):\n";
    for (const Relation& r : p.derived) {
      out += "  " + r.label + ": " + poly_to_free_algebra(p, r.poly) + " = 0\n";
    }
  }
  for (const std::string& note : p.notes) out += "note: " + note + "\n";
  return out;
}

std::string presentation_to_free_algebra(const Presentation& p) {
  std::string out;
  for (const Relation& r : p.relations) {
    out += poly_to_free_algebra(p, r.poly) + "\n";
  }
  return out;
}

Json aut_group_to_json(const AutGroup& g, const Hypergraph& h) {
  Json elems = Json::array();
  for (const BiPermutation& b : g.elements) {
    elems.push_back(Json{{"sigma", b.sigma},
                         {"tau", b.tau},
                         {"vertex_cycles", cycle_notation(b.sigma, h.vertices())},
                         {"edge_cycles", cycle_notation(b.tau, h.edges())}});
  }
  return Json{{"order", g.order}, {"elements", std::move(elems)}};
}

Json identity_report_to_json(const IdentityReport& rep) {
  Json insts = Json::array();
  for (const IdentityInstance& inst : rep.instances) {
    insts.push_back(Json{{"description", inst.description},
                         {"status", inst.yes ? "yes" : "unknown_at(" + std::to_string(rep.degree_bound) + ")"},
                         {"query", poly_to_json(inst.query)},
                         {"certificate", inst.yes ? certificate_to_json(inst.cert) : Json(nullptr)}});
  }
  return Json{{"identity", rep.identity_id},
              {"degree_bound", rep.degree_bound},
              {"flavor", flavor_name(rep.pres.flavor)},
              {"pass", rep.pass},
              {"instances", std::move(insts)}};
}

Json tensor_report_to_json(const TensorCheckReport& rep) {
  Json items = Json::array();
  for (const TensorCheckItem& i : rep.items) {
    items.push_back(Json{{"description", i.description}, {"pass", i.pass}});
  }
  return Json{{"degree_bound", rep.degree_bound}, {"pass", rep.pass}, {"items", std::move(items)}};
}

Json rep_to_json(const MatrixRep& rep, const Presentation& pres) {
  Json assign = Json::array();
  for (const auto& [g, m] : rep.assign) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) {
        row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
      }
      rows.push_back(std::move(row));
    }
    assign.push_back(Json{{"generator", generator_to_json(g)},
                          {"name", pres.generator_label(g)},
                          {"matrix", std::move(rows)}});
  }
  return Json{{"dim", rep.dim}, {"tolerance", rep.tolerance}, {"assign", std::move(assign)}};
}

MatrixRep rep_from_json(const Json& doc) {
  MatrixRep rep;
  rep.dim = doc.at("dim").get<int>();
  rep.tolerance = doc.at("tolerance").get<double>();
  for (const Json& entry : doc.at("assign")) {
    const Json& rows = entry.at("matrix");
    Eigen::MatrixXcd m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
      for (size_t c = 0; c < rows[r].size(); ++c) {
        m(r, c) = std::complex<double>(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
      }
    }
    rep.assign[generator_from_json(entry.at("generator"))] = std::move(m);
  }
  return rep;
}

Json witness_report_to_json(const WitnessReport& rep, const Presentation& pres) {
  Json out{{"rep", rep_to_json(rep.rep, pres)},
           {"max_relation_residual", rep.max_relation_residual}};
  if (rep.noncommutativity) {
    out["noncommutativity"] = Json{{"a", pres.generator_label(rep.noncommutativity->a)},
                                   {"b", pres.generator_label(rep.noncommutativity->b)},
                                   {"commutator_norm", rep.noncommutativity->commutator_norm}};
  } else {
    out["noncommutativity"] = nullptr;
  }
  return out;
}

}  // namespace hq
