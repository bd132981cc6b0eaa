#ifndef HQ_IDEAL_HPP_
#define HQ_IDEAL_HPP_

#include <map>
#include <set>
#include <vector>

#include "hq/ncpoly.hpp"
#include "hq/presentation.hpp"
#include "hq/rewrite.hpp"

namespace hq {

struct MembershipCertificate {
  int degree_bound = 0;
  std::vector<CertTerm> combination;
};

enum class Membership { Yes, Unknown };

struct MemberResult {
  Membership status = Membership::Unknown;
  MembershipCertificate cert;
};

struct IdealOptions {
  // When the complete shift enumeration stays below this many products the
  // engine enumerates it exhaustively; membership at the bound is then decided
  // exactly. Otherwise it saturates outward from the query's monomials.
  long long full_span_limit = 20000;
  long long max_candidates = 60000;
  long long max_universe = 200000;
};

// Bounded-degree two-sided ideal membership for a presentation, by exact
// rational linear algebra over products left*relation*right of degree <= D.
// Stateful: the linear basis grows across queries, deterministically.
class IdealEngine {
 public:
  IdealEngine(const Presentation& pres, int degree_bound, IdealOptions opts = {});

  int degree_bound() const { return degree_bound_; }
  const Presentation& presentation() const { return *pres_; }

  MemberResult member(const NCPoly& q);

  // Linear reduction modulo the current basis (after seeding with q's
  // monomials): returns the remainder and the subtracted ideal combination.
  std::pair<NCPoly, std::vector<CertTerm>> reduce_mod_ideal(const NCPoly& q);

 private:
  struct Candidate {
    Word left;
    int rel;
    Word right;
    std::vector<CertTerm> trace;  // left*rel*right = value + trace
  };
  struct BasisRow {
    NCPoly poly;                    // lead coefficient 1
    std::map<int, Rational> comb;   // over candidate indices
  };

  void full_span_enumerate();
  void seed(const NCPoly& q);
  void add_candidate(const Word& left, int rel, const Word& right);
  void enqueue_support(const NCPoly& p);
  void saturate();
  std::pair<NCPoly, std::map<int, Rational>> reduce_internal(NCPoly p) const;
  std::vector<CertTerm> expand(const std::map<int, Rational>& comb) const;

  const Presentation* pres_;
  int degree_bound_;
  IdealOptions opts_;
  std::vector<RewriteRule> rules_;
  std::vector<int> usable_rels_;  // nonzero relation indices
  std::vector<Generator> alphabet_;
  bool full_span_ = false;
  bool enumerated_ = false;

  std::vector<Candidate> candidates_;
  std::set<std::pair<std::pair<Word, Word>, int>> candidate_keys_;
  std::map<Word, BasisRow, WordOrder> basis_;
  std::set<Word, WordOrder> universe_;
  std::vector<Word> pending_;
};

// Re-evaluates a certificate against the presentation's relations using only
// raw polynomial arithmetic; true iff it reproduces q exactly.
bool certificate_reproduces(const MembershipCertificate& cert, const Presentation& pres, const NCPoly& q);

}  // namespace hq

#endif  // HQ_IDEAL_HPP_
