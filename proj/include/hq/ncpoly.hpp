#ifndef HQ_NCPOLY_HPP_
#define HQ_NCPOLY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hq/rational.hpp"

namespace hq {

// Generator sorts, in monomial-order precedence: uV < uE < p < s < s*.
enum class Sort : uint8_t { UV, UE, P, S, SStar };

struct Generator {
  Sort sort;
  int16_t i = 0;  // first label index (vertex or edge, document order)
  int16_t j = 0;  // second label index; unused for p/s/s*

  auto operator<=>(const Generator&) const = default;

  bool self_adjoint() const { return sort == Sort::UV || sort == Sort::UE || sort == Sort::P; }
  Generator adjoint() const {
    Generator g = *this;
    if (sort == Sort::S) g.sort = Sort::SStar;
    else if (sort == Sort::SStar) g.sort = Sort::S;
    return g;
  }

  static Generator uV(int i, int j) { return {Sort::UV, static_cast<int16_t>(i), static_cast<int16_t>(j)}; }
  static Generator uE(int i, int j) { return {Sort::UE, static_cast<int16_t>(i), static_cast<int16_t>(j)}; }
  static Generator p(int v) { return {Sort::P, static_cast<int16_t>(v), 0}; }
  static Generator s(int e) { return {Sort::S, static_cast<int16_t>(e), 0}; }
  static Generator sStar(int e) { return {Sort::SStar, static_cast<int16_t>(e), 0}; }
};

using Word = std::vector<Generator>;

Word word_adjoint(const Word& w);
Word word_concat(const Word& a, const Word& b);

// Graded lexicographic: shorter words first, then generator-wise comparison.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly(); }
  static NCPoly one() { return constant(1); }
  static NCPoly constant(const Rational& c);
  static NCPoly monomial(Word w, const Rational& c = 1);
  static NCPoly gen(Generator g) { return monomial({g}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Word& w, const Rational& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly scaled(const Rational& c) const;
  NCPoly adjoint() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

  // Leading term under the graded-lex order (largest monomial).
  const Word& leading_word() const;
  const Rational& leading_coeff() const;

  std::string str() const;  // debug/printout form

 private:
  Terms terms_;
};

std::string word_str(const Word& w);
std::string generator_str(const Generator& g);

// Tensor product of two free *-algebras: terms indexed by leg word pairs.
class TensorPoly {
 public:
  struct PairOrder {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
      WordOrder lt;
      if (lt(a.first, b.first)) return true;
      if (lt(b.first, a.first)) return false;
      return lt(a.second, b.second);
    }
  };
  using Terms = std::map<std::pair<Word, Word>, Rational, PairOrder>;

  TensorPoly() = default;
  static TensorPoly zero() { return TensorPoly(); }
  static TensorPoly of(const NCPoly& left, const NCPoly& right);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& l, const Word& r, const Rational& c);

  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  TensorPoly operator*(const TensorPoly& o) const;  // legwise products
  TensorPoly adjoint() const;

  bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

}  // namespace hq

#endif  // HQ_NCPOLY_HPP_
