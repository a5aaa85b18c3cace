#include "eps/antipode.hpp"

namespace eps {

namespace {

void compositions(std::uint32_t remaining, std::vector<std::uint32_t>& parts, LinComb<Word>& out) {
  if (remaining == 0) {
    Word w;
    for (auto p : parts) {
      if (p > 1) w.letters.push_back(p - 1);
    }
    out.add(w, parts.size() % 2 == 0 ? Rat(1) : Rat(-1));
    return;
  }
  for (std::uint32_t p = 1; p <= remaining; ++p) {
    parts.push_back(p);
    compositions(remaining - p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

LinComb<Word> divided_diff_antipode_closed(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("closed-form antipode needs n >= 1");
  LinComb<Word> out;
  std::vector<std::uint32_t> parts;
  compositions(n + 1, parts, out);
  return out;
}

}  // namespace eps
