#include "hq/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

IdealEngine::IdealEngine(const Presentation& pres, int degree_bound, IdealOptions opts)
    : pres_(&pres), degree_bound_(degree_bound), opts_(opts) {
  rules_ = rewrite_rules(pres);
  alphabet_ = pres.generators;
  long long shift_count = 0;
  for (int idx = 0; idx < pres.num_all(); ++idx) {
    const NCPoly& r = pres.relation_at(idx).poly;
    if (r.is_zero()) continue;
    usable_rels_.push_back(idx);
    int dr = r.degree();
    if (dr > degree_bound_ || shift_count > opts_.full_span_limit) continue;
    // Number of (left, right) word pairs of total length <= D - dr.
    long long g = static_cast<long long>(alphabet_.size());
    long long words_k = 1;
    for (int k = 0; k + dr <= degree_bound_; ++k) {
      shift_count += (k + 1) * words_k;
      if (shift_count > opts_.full_span_limit) break;
      words_k *= std::max<long long>(g, 1);
    }
  }
  full_span_ = shift_count <= opts_.full_span_limit;
}

void IdealEngine::enqueue_support(const NCPoly& p) {
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<long long>(universe_.size()) >= opts_.max_universe) return;
    if (universe_.insert(w).second) pending_.push_back(w);
  }
}

void IdealEngine::add_candidate(const Word& left, int rel, const Word& right) {
  auto key = std::make_pair(std::make_pair(left, right), rel);
  if (!candidate_keys_.insert(key).second) return;
  const NCPoly& rpoly = pres_->relation_at(rel).poly;
  NCPoly product = NCPoly::monomial(left) * rpoly * NCPoly::monomial(right);
  NormalizeResult norm = normalize_traced(product, rules_);
  int idx = static_cast<int>(candidates_.size());
  candidates_.push_back({left, rel, right, std::move(norm.trace)});
  if (norm.poly.is_zero()) return;
  enqueue_support(norm.poly);
  auto [rem, used] = reduce_internal(norm.poly);
  if (rem.is_zero()) return;
  Rational lead = rem.leading_coeff();
  BasisRow row;
  row.poly = rem.scaled(1 / lead);
  row.comb[idx] += 1 / lead;
  for (const auto& [i, c] : used) {
    row.comb[i] -= c / lead;
    if (row.comb[i] == 0) row.comb.erase(i);
  }
  Word lead_word = row.poly.leading_word();
  basis_.emplace(std::move(lead_word), std::move(row));
}

void IdealEngine::full_span_enumerate() {
  if (enumerated_) return;
  enumerated_ = true;
  // Enumerate every word pair around every relation within the bound.
  std::vector<std::vector<Word>> words_by_len(degree_bound_ + 1);
  words_by_len[0].push_back({});
  for (int len = 1; len <= degree_bound_; ++len) {
    for (const Word& w : words_by_len[len - 1]) {
      for (const Generator& g : alphabet_) {
        Word nw = w;
        nw.push_back(g);
        words_by_len[len].push_back(std::move(nw));
      }
    }
  }
  for (int rel : usable_rels_) {
    int dr = pres_->relation_at(rel).poly.degree();
    for (int a = 0; a + dr <= degree_bound_; ++a) {
      for (int b = 0; a + b + dr <= degree_bound_; ++b) {
        for (const Word& l : words_by_len[a]) {
          for (const Word& r : words_by_len[b]) {
            add_candidate(l, rel, r);
          }
        }
      }
    }
  }
}

void IdealEngine::saturate() {
  size_t cursor = 0;
  while (cursor < pending_.size()) {
    if (static_cast<long long>(candidates_.size()) >= opts_.max_candidates) return;
    Word u = pending_[cursor++];
    int ulen = static_cast<int>(u.size());
    for (int rel : usable_rels_) {
      const NCPoly& rpoly = pres_->relation_at(rel).poly;
      int dr = rpoly.degree();
      for (const auto& [m, c] : rpoly.terms()) {
        int mlen = static_cast<int>(m.size());
        if (ulen - mlen + dr > degree_bound_) continue;
        for (int pos = 0; pos + mlen <= ulen; ++pos) {
          if (!std::equal(m.begin(), m.end(), u.begin() + pos)) continue;
          Word left(u.begin(), u.begin() + pos);
          Word right(u.begin() + pos + mlen, u.end());
          add_candidate(left, rel, right);
          if (static_cast<long long>(candidates_.size()) >= opts_.max_candidates) return;
        }
      }
    }
  }
}

void IdealEngine::seed(const NCPoly& q) {
  if (full_span_) {
    full_span_enumerate();
    return;
  }
  enqueue_support(q);
  saturate();
}

std::pair<NCPoly, std::map<int, Rational>> IdealEngine::reduce_internal(NCPoly p) const {
  std::map<int, Rational> used;
  while (!p.is_zero()) {
    // Eliminate the largest monomial that is a basis lead.
    const auto& terms = p.terms();
    bool hit = false;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      auto bit = basis_.find(it->first);
      if (bit == basis_.end()) continue;
      Rational factor = it->second;
      p -= bit->second.poly.scaled(factor);
      for (const auto& [i, c] : bit->second.comb) {
        used[i] += factor * c;
        if (used[i] == 0) used.erase(i);
      }
      hit = true;
      break;
    }
    if (!hit) break;
  }
  return {std::move(p), std::move(used)};
}

std::vector<CertTerm> IdealEngine::expand(const std::map<int, Rational>& comb) const {
  std::vector<CertTerm> out;
  for (const auto& [i, alpha] : comb) {
    const Candidate& c = candidates_[i];
    out.push_back({c.left, c.rel, c.right, alpha});
    for (const CertTerm& t : c.trace) {
      out.push_back({t.left, t.rel, t.right, -alpha * t.coeff});
    }
  }
  return out;
}

MemberResult IdealEngine::member(const NCPoly& q) {
  for (const auto& [w, c] : q.terms()) {
    for (const Generator& g : w) {
      if (!pres_->has_generator(g)) throw std::runtime_error("polynomial references a foreign generator");
    }
  }
  if (q.degree() > degree_bound_) throw std::runtime_error("polynomial degree exceeds the bound");
  NormalizeResult norm = normalize_traced(q, rules_);
  MemberResult res;
  res.cert.degree_bound = degree_bound_;
  if (norm.poly.is_zero()) {
    res.status = Membership::Yes;
    res.cert.combination = norm.trace;
    return res;
  }
  seed(norm.poly);
  auto [rem, used] = reduce_internal(norm.poly);
  if (!rem.is_zero()) {
    res.status = Membership::Unknown;
    return res;
  }
  res.status = Membership::Yes;
  res.cert.combination = norm.trace;
  auto expanded = expand(used);
  res.cert.combination.insert(res.cert.combination.end(), expanded.begin(), expanded.end());
  return res;
}

std::pair<NCPoly, std::vector<CertTerm>> IdealEngine::reduce_mod_ideal(const NCPoly& q) {
  NormalizeResult norm = normalize_traced(q, rules_);
  seed(norm.poly);
  auto [rem, used] = reduce_internal(norm.poly);
  std::vector<CertTerm> cert = norm.trace;
  auto expanded = expand(used);
  cert.insert(cert.end(), expanded.begin(), expanded.end());
  return {std::move(rem), std::move(cert)};
}

bool certificate_reproduces(const MembershipCertificate& cert, const Presentation& pres, const NCPoly& q) {
  NCPoly acc;
  for (const CertTerm& t : cert.combination) {
    acc += (NCPoly::monomial(t.left) * pres.relation_at(t.rel).poly * NCPoly::monomial(t.right)).scaled(t.coeff);
  }
  return acc == q;
}

}  // namespace hq
