#ifndef HQ_IO_HPP_
#define HQ_IO_HPP_

#include <string>

#include "hq/autsearch.hpp"
#include "hq/hypergraph.hpp"
#include "hq/ideal.hpp"
#include "hq/identities.hpp"
#include "hq/ncpoly.hpp"
#include "hq/presentation.hpp"
#include "hq/tensor_checks.hpp"
#include "hq/witness.hpp"

namespace hq {

Json generator_to_json(const Generator& g);
Generator generator_from_json(const Json& doc);
Json word_to_json(const Word& w);
Word word_from_json(const Json& doc);
Json poly_to_json(const NCPoly& p);
NCPoly poly_from_json(const Json& doc);

Json certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const Json& doc);

Json presentation_to_json(const Presentation& p);
std::string presentation_to_text(const Presentation& p);
// One relation per line, `.` for products, `*` for adjoints, for import
// into external computer-algebra systems.
std::string presentation_to_free_algebra(const Presentation& p);

Json aut_group_to_json(const AutGroup& g, const Hypergraph& h);
Json identity_report_to_json(const IdentityReport& rep);
Json tensor_report_to_json(const TensorCheckReport& rep);

Json rep_to_json(const MatrixRep& rep, const Presentation& pres);
MatrixRep rep_from_json(const Json& doc);
Json witness_report_to_json(const WitnessReport& rep, const Presentation& pres);

}  // namespace hq

#endif  // HQ_IO_HPP_
