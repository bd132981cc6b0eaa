#ifndef HQ_AUTSEARCH_HPP_
#define HQ_AUTSEARCH_HPP_

#include <string>
#include <vector>

#include "hq/hypergraph.hpp"

namespace hq {

// Candidate automorphism: sigma permutes vertex indices, tau edge indices
// (image of index i is sigma[i] / tau[i], indices in document order).
struct BiPermutation {
  std::vector<int> sigma;
  std::vector<int> tau;

  bool operator==(const BiPermutation& o) const = default;
  bool operator<(const BiPermutation& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return tau < o.tau;
  }

  static BiPermutation identity(int nv, int ne);
  BiPermutation inverse() const;
  // Applies `first`, then *this.
  BiPermutation compose(const BiPermutation& first) const;
};

struct AutGroup {
  std::vector<BiPermutation> elements;  // sorted by image tuples
  long long order = 0;
};

enum class AutMethod { Brute, Backtrack };

bool is_automorphism(const Hypergraph& h, const BiPermutation& g);
bool is_automorphism_matrix(const Hypergraph& h, const BiPermutation& g);

AutGroup enumerate_aut(const Hypergraph& h, AutMethod method,
                       long long brute_cap = 10'000'000);

struct TransformInvarianceReport {
  bool opposite_equal = false;   // Aut(H) == Aut(H^op)
  bool dual_swapped = false;     // Aut(H*) == {(tau,sigma)}
  bool dual_involutive = false;  // (H*)* == H
  bool incidence_transposed = false;
  bool ok() const { return opposite_equal && dual_swapped && dual_involutive && incidence_transposed; }
};

TransformInvarianceReport check_transform_invariance(const Hypergraph& h);

// Small generating set found greedily by closure growth.
std::vector<BiPermutation> generating_set(const AutGroup& g);

std::string cycle_notation(const std::vector<int>& perm, const std::vector<std::string>& labels);

}  // namespace hq

#endif  // HQ_AUTSEARCH_HPP_
