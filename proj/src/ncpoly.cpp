#include "hq/ncpoly.hpp"

#include <stdexcept>

namespace hq {

Word word_adjoint(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

NCPoly NCPoly::constant(const Rational& c) {
  NCPoly p;
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::monomial(Word w, const Rational& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly out = *this;
  out += o;
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly out = *this;
  out -= o;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly out;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      out.add_term(word_concat(wa, wb), ca * cb);
    }
  }
  return out;
}

NCPoly NCPoly::operator-() const { return scaled(-1); }

NCPoly NCPoly::scaled(const Rational& c) const {
  NCPoly out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

NCPoly NCPoly::adjoint() const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(word_adjoint(w), c);
  return out;
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw std::runtime_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& NCPoly::leading_coeff() const {
  if (terms_.empty()) throw std::runtime_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

std::string generator_str(const Generator& g) {
  switch (g.sort) {
    case Sort::UV: return "uV[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Sort::UE: return "uE[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Sort::P: return "p[" + std::to_string(g.i) + "]";
    case Sort::S: return "s[" + std::to_string(g.i) + "]";
    case Sort::SStar: return "s[" + std::to_string(g.i) + "]*";
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += generator_str(w[i]);
  }
  return out;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1 || it->first.empty()) {
      out += rational_to_string(it->second);
      if (!it->first.empty()) out += "*";
    }
    if (!it->first.empty()) out += word_str(it->first);
  }
  return out;
}

TensorPoly TensorPoly::of(const NCPoly& left, const NCPoly& right) {
  TensorPoly out;
  for (const auto& [wl, cl] : left.terms()) {
    for (const auto& [wr, cr] : right.terms()) {
      out.add_term(wl, wr, cl * cr);
    }
  }
  return out;
}

void TensorPoly::add_term(const Word& l, const Word& r, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(l, r);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
  return out;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  TensorPoly out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      out.add_term(word_concat(ka.first, kb.first), word_concat(ka.second, kb.second), ca * cb);
    }
  }
  return out;
}

TensorPoly TensorPoly::adjoint() const {
  TensorPoly out;
  for (const auto& [k, c] : terms_) {
    out.add_term(word_adjoint(k.first), word_adjoint(k.second), c);
  }
  return out;
}

}  // namespace hq
