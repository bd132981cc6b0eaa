#ifndef HQ_RATIONAL_HPP_
#define HQ_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hq {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) {
  return q.str();
}

inline Rational rational_from_string(const std::string& s) {
  return Rational(s);
}

}  // namespace hq

#endif  // HQ_RATIONAL_HPP_
