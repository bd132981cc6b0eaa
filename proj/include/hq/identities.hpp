#ifndef HQ_IDENTITIES_HPP_
#define HQ_IDENTITIES_HPP_

#include <string>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/ideal.hpp"
#include "hq/presentation.hpp"

namespace hq {

struct IdentityInstance {
  std::string description;
  bool yes = false;  // false means unknown at the degree bound
  NCPoly query;
  MembershipCertificate cert;
};

struct IdentityReport {
  std::string identity_id;
  int degree_bound = 0;
  Presentation pres;  // the presentation whose ideal the queries live in
  bool pass = false;  // all instances yes
  std::vector<IdentityInstance> instances;
};

const std::vector<std::string>& identity_ids();

// Checks every instance of the named polynomial identity for the hypergraph
// by bounded-degree ideal membership, collecting one certificate per
// instance. Throws when the hypergraph violates the identity's hypothesis.
IdentityReport verify_identity(const Hypergraph& h, const std::string& identity_id, int degree_bound);

}  // namespace hq

#endif  // HQ_IDENTITIES_HPP_
