#include "hq/rewrite.hpp"

#include <algorithm>
#include <set>

namespace hq {

std::vector<RewriteRule> rewrite_rules(const Presentation& p) {
  std::vector<RewriteRule> rules;
  std::set<Word, WordOrder> seen_lhs;
  for (int idx = 0; idx < p.num_all(); ++idx) {
    const NCPoly& r = p.relation_at(idx).poly;
    if (r.is_zero()) continue;
    const auto& terms = r.terms();
    if (terms.size() == 1) {
      const auto& [w, c] = *terms.begin();
      if (w.empty()) continue;  // inconsistent presentation, not our concern
      if (seen_lhs.insert(w).second) {
        rules.push_back({w, NCPoly::zero(), idx, c});
      }
      continue;
    }
    if (terms.size() == 2) {
      const auto& [wsmall, csmall] = *terms.begin();
      const auto& [wbig, cbig] = *terms.rbegin();
      if (wbig.size() > wsmall.size() && seen_lhs.insert(wbig).second == false) continue;
      if (wbig.size() > wsmall.size()) {
        rules.push_back({wbig, NCPoly::monomial(wsmall, -csmall / cbig), idx, cbig});
      }
    }
  }
  return rules;
}

namespace {

// Returns the first matching (position, rule index), scanning positions
// left to right and rules in extraction order.
bool find_redex(const Word& w, const std::vector<RewriteRule>& rules, size_t* pos, size_t* rule_idx) {
  for (size_t at = 0; at < w.size(); ++at) {
    for (size_t ri = 0; ri < rules.size(); ++ri) {
      const Word& lhs = rules[ri].lhs;
      if (lhs.empty() || at + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + at)) {
        *pos = at;
        *rule_idx = ri;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

NormalizeResult normalize_traced(const NCPoly& p, const std::vector<RewriteRule>& rules) {
  NormalizeResult out;
  std::vector<std::pair<Word, Rational>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    size_t pos = 0, ri = 0;
    if (!find_redex(w, rules, &pos, &ri)) {
      out.poly.add_term(w, c);
      continue;
    }
    const RewriteRule& rule = rules[ri];
    Word left(w.begin(), w.begin() + pos);
    Word right(w.begin() + pos + rule.lhs.size(), w.end());
    out.trace.push_back({left, rule.rel, right, c / rule.lead_coeff});
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      work.emplace_back(word_concat(left, word_concat(rw, right)), c * rc);
    }
  }
  return out;
}

NCPoly normalize(const NCPoly& p, const Presentation& pres) {
  return normalize_traced(p, rewrite_rules(pres)).poly;
}

}  // namespace hq
