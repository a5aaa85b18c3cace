#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "eps/coproduct.hpp"
#include "eps/textio.hpp"
#include "oracle.hpp"

namespace testing {

/// X = {x, y, z}; Ω = {a, b, g, w} (g stands in for γ).
inline const eps::Alphabets& labels() {
  static const eps::Alphabets a({"x", "y", "z"}, {"a", "b", "g", "w"});
  return a;
}

inline std::set<std::string> x_set(const eps::Alphabets& a = labels()) {
  return {a.x_labels().begin(), a.x_labels().end()};
}

inline eps::Forest F(const std::string& s, const eps::Alphabets& a = labels()) { return eps::parse_forest(s, a); }

inline oracle::Forest O(const eps::Forest& f) { return oracle::parse(f.to_string()); }

template <class B>
oracle::Tensor as_map(const eps::LinComb<eps::Tensor2<B>>& t) {
  oracle::Tensor out;
  for (const auto& [lr, c] : t) out[{eps::basis_text(lr.left), eps::basis_text(lr.right)}] = c;
  return out;
}

template <class B>
oracle::Comb as_map(const eps::LinComb<B>& a) {
  oracle::Comb out;
  for (const auto& [b, c] : a) out[eps::basis_text(b)] = c;
  return out;
}

/// Hand-written tensor terms, coefficient 1 unless given.
inline oracle::Tensor tensor(std::initializer_list<std::pair<std::string, std::string>> terms) {
  oracle::Tensor out;
  for (const auto& t : terms) out[t] += eps::Rat(1);
  return out;
}

inline oracle::Comb comb(std::initializer_list<std::pair<std::string, eps::Rat>> terms) {
  oracle::Comb out;
  for (const auto& [s, c] : terms) {
    out[s] += c;
    if (out[s].is_zero()) out.erase(s);
  }
  return out;
}

}  // namespace testing
