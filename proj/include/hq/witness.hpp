#ifndef HQ_WITNESS_HPP_
#define HQ_WITNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "hq/autsearch.hpp"
#include "hq/hypergraph.hpp"
#include "hq/ncpoly.hpp"
#include "hq/presentation.hpp"

namespace hq {

struct GeneratorOrder {
  bool operator()(const Generator& a, const Generator& b) const {
    return std::tie(a.sort, a.i, a.j) < std::tie(b.sort, b.i, b.j);
  }
};

struct MatrixRep {
  int dim = 1;
  std::map<Generator, Eigen::MatrixXcd, GeneratorOrder> assign;
  double tolerance = 1e-9;
};

struct NoncommutativityWitness {
  Generator a;
  Generator b;
  double commutator_norm = 0;
};

struct WitnessReport {
  MatrixRep rep;
  double max_relation_residual = 0;
  std::optional<NoncommutativityWitness> noncommutativity;
};

// Largest singular value via power iteration (200-step cap, 1e-12 tolerance).
double operator_norm(const Eigen::MatrixXcd& m);

// Evaluates p under the assignment; the empty word is the identity.
Eigen::MatrixXcd evaluate_poly(const MatrixRep& rep, const NCPoly& p);

// Block representation of an automorphism: the magic entries become 0/1
// scalar blocks and the algebra generators act on a vertex block plus one
// block per edge, so every relation of every flavor evaluates to zero
// exactly. Throws if g is not an automorphism.
MatrixRep perm_rep(const Hypergraph& h, const BiPermutation& g);

// Evaluates every relation of the presentation, reports the largest operator
// norm, and scans generator pairs for a commutator norm above 10x tolerance.
WitnessReport check_rep(const MatrixRep& rep, const Presentation& pres);

struct WitnessOutcome {
  bool available = false;
  std::string message;
  WitnessReport report;
};

// Two-projection block witness for a hypergraph whose edges all have
// s(e) = r(e) = V: requires an index set (vertices or edges) of size >= 4.
WitnessOutcome nonclassical_witness(const Hypergraph& h, double theta);

struct SearchOptions {
  int max_iters = 300;
  int restarts = 4;
  double step = 0.1;
  double tolerance = 1e-9;
  uint64_t seed = 1;
};

// Numerical feasibility search for a dimension-d representation of the
// quantum automorphism relations; best-effort, not_found carries no
// mathematical meaning.
WitnessOutcome search_magic_rep(const Hypergraph& h, int dim, const SearchOptions& opts);

}  // namespace hq

#endif  // HQ_WITNESS_HPP_
