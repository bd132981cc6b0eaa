#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hq/autsearch.hpp"
#include "hq/hypergraph.hpp"
#include "hq/identities.hpp"
#include "hq/io.hpp"
#include "hq/presentation.hpp"
#include "hq/tensor_checks.hpp"
#include "hq/witness.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const hq::Json& doc) {
  write_output(path, doc.dump(2) + "\n");
}

hq::Hypergraph load_hypergraph(const std::string& path) {
  return hq::Hypergraph::parse(read_file(path));
}

hq::GraphKind kind_from_name(const std::string& name) {
  if (name == "simple") return hq::GraphKind::Simple;
  if (name == "directed") return hq::GraphKind::Directed;
  if (name == "multi") return hq::GraphKind::Multi;
  throw std::runtime_error("unknown graph kind: " + name);
}

hq::Flavor flavor_or_throw(const std::string& name) {
  auto f = hq::flavor_from_name(name);
  if (!f) throw std::runtime_error("unknown flavor: " + name);
  return *f;
}

std::string present_in_format(const hq::Presentation& pres, const std::string& format) {
  if (format == "text") return hq::presentation_to_text(pres);
  if (format == "object") return hq::presentation_to_json(pres).dump(2) + "\n";
  if (format == "free-algebra") return hq::presentation_to_free_algebra(pres);
  throw std::runtime_error("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite directed hypergraphs: classical and quantum automorphism toolkit"};
  app.require_subcommand(1);

  std::string input, output, graph_kind = "multi", which = "opposite";
  std::string family = "gamma", vertex_list, flavor = "qaut_hypergraph", format = "text";
  std::string method = "backtrack", identity, cert_out, rep_path, pres_path;
  int degree = 6, gamma_n = 2, gamma_m = 2, dim = 1;
  double theta = std::acos(-1.0) / 4;
  bool do_search = false;
  uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "classify a hypergraph");
  info->add_option("input", input)->required();
  info->add_option("-o,--output", output);

  auto* encode_cmd = app.add_subcommand("encode", "encode a graph description as a hypergraph");
  encode_cmd->add_option("input", input)->required();
  encode_cmd->add_option("--kind", graph_kind);
  encode_cmd->add_option("-o,--output", output);

  auto* decode_cmd = app.add_subcommand("decode", "recover the graph kind and description");
  decode_cmd->add_option("input", input)->required();
  decode_cmd->add_option("-o,--output", output);

  auto* transform_cmd = app.add_subcommand("transform", "opposite, dual or their composition");
  transform_cmd->add_option("input", input)->required();
  transform_cmd->add_option("--which", which)->check(CLI::IsMember({"opposite", "dual", "gamma-prime"}));
  transform_cmd->add_option("-o,--output", output);

  auto* build_cmd = app.add_subcommand("build", "construct a named hypergraph family");
  build_cmd->add_option("--family", family)->check(CLI::IsMember({"gamma", "complete"}));
  build_cmd->add_option("--n", gamma_n);
  build_cmd->add_option("--m", gamma_m);
  build_cmd->add_option("--vertices", vertex_list, "comma-separated labels for --family complete");
  build_cmd->add_option("-o,--output", output);

  auto* aut_cmd = app.add_subcommand("aut", "enumerate the automorphism group");
  aut_cmd->add_option("input", input)->required();
  aut_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "backtrack", "both"}));
  aut_cmd->add_option("-o,--output", output);

  auto* present_cmd = app.add_subcommand("present", "emit a presentation");
  present_cmd->add_option("input", input)->required();
  present_cmd->add_option("--flavor", flavor);
  present_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "object", "free-algebra"}));
  present_cmd->add_option("-o,--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "verify a polynomial identity");
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("identity", identity)->required();
  verify_cmd->add_option("--degree", degree);
  verify_cmd->add_option("--cert-out", cert_out);
  verify_cmd->add_option("-o,--output", output);

  auto* coprod_cmd = app.add_subcommand("coproduct-check", "counit and coproduct compatibility");
  coprod_cmd->add_option("input", input)->required();
  coprod_cmd->add_option("--degree", degree);
  coprod_cmd->add_option("-o,--output", output);

  auto* coact_cmd = app.add_subcommand("coaction-check", "coaction compatibility");
  coact_cmd->add_option("input", input)->required();
  coact_cmd->add_option("--degree", degree);
  coact_cmd->add_option("-o,--output", output);

  auto* witness_cmd = app.add_subcommand("witness", "noncommutativity witness or numerical search");
  witness_cmd->add_option("input", input)->required();
  witness_cmd->add_option("--theta", theta);
  witness_cmd->add_flag("--search", do_search);
  witness_cmd->add_option("--dim", dim);
  witness_cmd->add_option("--seed", seed);
  witness_cmd->add_option("-o,--output", output);

  auto* check_rep_cmd = app.add_subcommand("check-rep", "re-verify a stored representation");
  check_rep_cmd->add_option("rep", rep_path)->required();
  check_rep_cmd->add_option("presentation", pres_path)->required();
  check_rep_cmd->add_option("-o,--output", output);

  auto* export_cmd = app.add_subcommand("export", "write a presentation for external tools");
  export_cmd->add_option("input", input)->required();
  export_cmd->add_option("--flavor", flavor);
  std::string export_format = "free-algebra";
  export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"text", "object", "free-algebra"}));
  export_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) {
      hq::Hypergraph h = load_hypergraph(input);
      hq::Json doc{{"vertices", h.num_vertices()},
                   {"edges", h.num_edges()},
                   {"properties", hq::classify(h).to_json()},
                   {"kind", hq::graph_kind_name(hq::decode(h).kind)}};
      write_json(output, doc);
    } else if (encode_cmd->parsed()) {
      hq::Json graph = hq::Json::parse(read_file(input));
      write_json(output, hq::encode(graph, kind_from_name(graph_kind)).to_json());
    } else if (decode_cmd->parsed()) {
      hq::DecodeResult res = hq::decode(load_hypergraph(input));
      write_json(output, hq::Json{{"kind", hq::graph_kind_name(res.kind)}, {"graph", res.graph}});
      if (res.kind == hq::GraphKind::None) return 2;
    } else if (transform_cmd->parsed()) {
      hq::Transform t = which == "opposite" ? hq::Transform::Opposite
                        : which == "dual"   ? hq::Transform::Dual
                                            : hq::Transform::GammaPrime;
      write_json(output, hq::transform(load_hypergraph(input), t).to_json());
    } else if (build_cmd->parsed()) {
      if (family == "gamma") {
        write_json(output, hq::build_gamma_nm(gamma_n, gamma_m).to_json());
      } else {
        std::vector<std::string> vs;
        std::stringstream ss(vertex_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) vs.push_back(item);
        }
        write_json(output, hq::build_complete(vs).to_json());
      }
    } else if (aut_cmd->parsed()) {
      hq::Hypergraph h = load_hypergraph(input);
      if (method == "both") {
        hq::AutGroup brute = hq::enumerate_aut(h, hq::AutMethod::Brute);
        hq::AutGroup back = hq::enumerate_aut(h, hq::AutMethod::Backtrack);
        if (!(brute.elements == back.elements)) {
          throw std::runtime_error("brute-force and backtracking enumerations disagree");
        }
        hq::Json doc = hq::aut_group_to_json(back, h);
        doc["methods_agree"] = true;
        write_json(output, doc);
      } else {
        hq::AutMethod m = method == "brute" ? hq::AutMethod::Brute : hq::AutMethod::Backtrack;
        write_json(output, hq::aut_group_to_json(hq::enumerate_aut(h, m), h));
      }
    } else if (present_cmd->parsed() || export_cmd->parsed()) {
      hq::Presentation pres = hq::present(load_hypergraph(input), flavor_or_throw(flavor));
      write_output(output, present_in_format(pres, export_cmd->parsed() ? export_format : format));
    } else if (verify_cmd->parsed()) {
      hq::IdentityReport rep = hq::verify_identity(load_hypergraph(input), identity, degree);
      write_json(output, hq::identity_report_to_json(rep));
      if (!cert_out.empty()) {
        hq::Json certs = hq::Json::array();
        for (const auto& inst : rep.instances) {
          if (inst.yes) certs.push_back(hq::certificate_to_json(inst.cert));
        }
        write_json(cert_out, certs);
      }
      if (!rep.pass) return 2;
    } else if (coprod_cmd->parsed()) {
      hq::TensorCheckReport rep = hq::coproduct_check(load_hypergraph(input), degree);
      write_json(output, hq::tensor_report_to_json(rep));
      if (!rep.pass) return 2;
    } else if (coact_cmd->parsed()) {
      hq::TensorCheckReport rep = hq::coaction_check(load_hypergraph(input), degree);
      write_json(output, hq::tensor_report_to_json(rep));
      if (!rep.pass) return 2;
    } else if (witness_cmd->parsed()) {
      hq::Hypergraph h = load_hypergraph(input);
      hq::Presentation pres = hq::present(h, hq::Flavor::QautHypergraph);
      hq::WitnessOutcome res;
      if (do_search) {
        hq::SearchOptions opts;
        opts.seed = seed;
        res = hq::search_magic_rep(h, dim, opts);
      } else {
        res = hq::nonclassical_witness(h, theta);
      }
      if (!res.available) {
        write_json(output, hq::Json{{"available", false}, {"message", res.message}});
        return 2;
      }
      hq::Json doc = hq::witness_report_to_json(res.report, pres);
      doc["available"] = true;
      write_json(output, doc);
    } else if (check_rep_cmd->parsed()) {
      hq::Json pres_doc = hq::Json::parse(read_file(pres_path));
      hq::Hypergraph h = hq::Hypergraph::from_json(pres_doc.at("hypergraph"));
      hq::Presentation pres = hq::present(h, flavor_or_throw(pres_doc.at("flavor").get<std::string>()));
      hq::MatrixRep rep = hq::rep_from_json(hq::Json::parse(read_file(rep_path)));
      hq::WitnessReport wr = hq::check_rep(rep, pres);
      hq::Json doc = hq::witness_report_to_json(wr, pres);
      doc["within_tolerance"] = wr.max_relation_residual <= rep.tolerance;
      write_json(output, doc);
      if (wr.max_relation_residual > rep.tolerance) return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
