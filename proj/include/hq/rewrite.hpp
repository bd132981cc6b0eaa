#ifndef HQ_REWRITE_HPP_
#define HQ_REWRITE_HPP_

#include <vector>

#include "hq/ncpoly.hpp"
#include "hq/presentation.hpp"

namespace hq {

// One summand of an ideal combination: coeff * left * relation * right.
struct CertTerm {
  Word left;
  int rel = 0;  // index into the presentation's combined relation list
  Word right;
  Rational coeff;
};

// Degree-decreasing rewrite rule lhs -> rhs extracted from relation `rel`,
// whose polynomial is lead_coeff*lhs + (the terms of -lead_coeff*rhs).
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
  int rel = 0;
  Rational lead_coeff;
};

// Extracts the sound rule subset: single-monomial relations become m -> 0,
// two-term relations with a strict degree drop become lead -> tail
// (idempotency, orthogonality, vanishing entries). Sum relations are left
// to the linear algebra in the ideal engine.
std::vector<RewriteRule> rewrite_rules(const Presentation& p);

struct NormalizeResult {
  NCPoly poly;
  // input = poly + sum of coeff * left * relation * right over the trace.
  std::vector<CertTerm> trace;
};

NormalizeResult normalize_traced(const NCPoly& p, const std::vector<RewriteRule>& rules);

NCPoly normalize(const NCPoly& p, const Presentation& pres);

}  // namespace hq

#endif  // HQ_REWRITE_HPP_
