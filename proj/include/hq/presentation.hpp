#ifndef HQ_PRESENTATION_HPP_
#define HQ_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/ncpoly.hpp"

namespace hq {

enum class Flavor {
  QautHypergraph,
  SPlus,
  Bichon,
  Banica,
  GH,
  CstarEqualities,
  FreeProduct,
};

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& name);

struct Relation {
  std::string label;
  NCPoly poly;
  // Derived relations are consequences of the listed ones (same-row/column
  // orthogonality of magic unitary entries); they are carried separately so
  // the listed relation set matches the defining presentation.
  bool derived = false;
};

class Presentation {
 public:
  Flavor flavor;
  Hypergraph hypergraph;
  std::vector<Generator> generators;
  std::vector<Relation> relations;  // listed, defining relations
  std::vector<Relation> derived;    // orthogonality consequences
  std::vector<std::string> notes;

  // Index space 0..n_listed-1 then n_listed..n_listed+n_derived-1.
  int num_all() const { return static_cast<int>(relations.size() + derived.size()); }
  const Relation& relation_at(int idx) const {
    return idx < static_cast<int>(relations.size())
               ? relations[idx]
               : derived[idx - relations.size()];
  }

  bool has_generator(Generator g) const;
  std::string generator_label(const Generator& g) const;
};

Presentation present(const Hypergraph& h, Flavor flavor);

// Substitutes u_{ij} -> delta_{ij} into p (uV/uE generators only).
// Returns nullopt if p contains generators other than uV/uE.
std::optional<Rational> counit(const NCPoly& p);

struct SymmetryCheckReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// For every automorphism, permuting generator indices must map the relation
// sets of the qaut and cstar_equalities presentations onto themselves.
SymmetryCheckReport presentation_symmetry_check(const Hypergraph& h);

// Relabels generator indices by sigma (vertices) and tau (edges).
NCPoly permute_labels(const NCPoly& p, const std::vector<int>& sigma, const std::vector<int>& tau);

}  // namespace hq

#endif  // HQ_PRESENTATION_HPP_
