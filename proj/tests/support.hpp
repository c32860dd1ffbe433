#pragma once

// Small helpers for reading matrices by basis label in tests.

#include <map>
#include <stdexcept>
#include <string>

#include "bhc/linalg.hpp"

namespace support {

inline bhc::Index idx(const bhc::Space& s, const std::string& label) {
  for (bhc::Index i = 0; i < s.dim(); ++i)
    if (s.label(i) == label) return i;
  throw std::out_of_range("no basis vector " + label + " in " + s.describe());
}

// f(e_label) as {codomain label -> coefficient}, zeros omitted
inline std::map<std::string, bhc::Scalar> image(const bhc::LinearMap& f, const std::string& label) {
  std::map<std::string, bhc::Scalar> out;
  for (const auto& [i, c] : f.column(idx(f.domain(), label))) out.emplace(f.codomain().label(i), c);
  return out;
}

inline bhc::Scalar q(long a, long b = 1) { return bhc::Scalar(bhc::Field::rational(), mpq_class(a, b)); }

inline bhc::Scalar in(bhc::Field f, long a, long b = 1) { return bhc::embed_rational(mpq_class(a, b), f); }

inline bhc::Scalar zeta(bhc::Field f, unsigned m, long k) { return bhc::Scalar::root_of_unity(f, m, k); }

}  // namespace support
