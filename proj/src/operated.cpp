#include "eps/operated.hpp"

#include <sstream>

#include "eps/textio.hpp"

namespace eps {

namespace {

LinOp<Forest> grafting(const Decoration& omega, Rat scale = Rat(1)) {
  return LinOp<Forest>([omega, scale](const Forest& f) { return ForestComb::term(Forest(graft(omega, f)), scale); });
}

}  // namespace

OperatedTarget<Forest> identity_target(const Alphabets& alphabets) {
  return relabel_target(alphabets, {});
}

OperatedTarget<Forest> relabel_target(const Alphabets& alphabets, const std::map<std::string, std::string>& renaming) {
  auto image = [&](const std::string& label) {
    auto it = renaming.find(label);
    const std::string& to = it == renaming.end() ? label : it->second;
    auto d = alphabets.lookup(to);
    if (!d) throw std::invalid_argument("relabeling target '" + to + "' is not a declared label");
    return *d;
  };
  for (const auto& [from, to] : renaming) {
    if (!alphabets.lookup(from)) throw std::invalid_argument("relabeling source '" + from + "' is not a declared label");
    if (alphabets.lookup(from)->kind == DecorationKind::Omega && image(from).kind != DecorationKind::Omega) {
      throw std::invalid_argument("Omega-label '" + from + "' must be renamed to an Omega-label");
    }
  }
  OperatedTarget<Forest> t;
  t.name = renaming.empty() ? "identity" : "relabel";
  t.carrier = forest_instance();
  for (const auto& x : alphabets.x_labels()) t.generators.emplace(x, ForestComb(Forest(Tree::leaf(image(x)))));
  for (const auto& o : alphabets.omega_labels()) t.operators.emplace(o, grafting(image(o)));
  return t;
}

OperatedTarget<Forest> collapse_target(const Alphabets& alphabets) {
  OperatedTarget<Forest> t;
  t.name = "collapse";
  t.carrier = trivial_forest_instance();
  for (const auto& x : alphabets.x_labels()) t.generators.emplace(x, ForestComb(Forest{}));
  for (const auto& o : alphabets.omega_labels()) t.operators.emplace(o, LinOp<Forest>::zero());
  return t;
}

OperatedTarget<Forest> broken_target(const Alphabets& alphabets) {
  OperatedTarget<Forest> t = identity_target(alphabets);
  t.name = "broken";
  for (const auto& o : alphabets.omega_labels()) t.operators[o] = grafting(alphabets.omega(o), Rat(2));
  return t;
}

OperatedTarget<Word> divdiff_zero_target(const Alphabets& alphabets) {
  OperatedTarget<Word> t;
  t.name = "divdiff-zero";
  t.carrier = divided_diff_instance();
  for (const auto& x : alphabets.x_labels()) t.generators.emplace(x, LinComb<Word>(Word{{1}}));
  for (const auto& o : alphabets.omega_labels()) t.operators.emplace(o, LinOp<Word>::zero());
  return t;
}

OperatedTarget<Forest> parse_forest_target(const std::string& spec, const Alphabets& alphabets) {
  if (spec == "identity") return identity_target(alphabets);
  if (spec == "collapse") return collapse_target(alphabets);
  if (spec == "broken") return broken_target(alphabets);
  const std::string prefix = "relabel:";
  if (spec.rfind(prefix, 0) == 0) {
    std::map<std::string, std::string> renaming;
    std::stringstream in(spec.substr(prefix.size()));
    std::string pair;
    while (std::getline(in, pair, ',')) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
        throw std::invalid_argument("malformed relabeling '" + pair + "', expected from=to");
      }
      renaming[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
    if (renaming.empty()) throw std::invalid_argument("empty relabeling");
    return relabel_target(alphabets, renaming);
  }
  throw std::invalid_argument("unknown target '" + spec + "' (expected identity, relabel:x=y,..., collapse or broken)");
}

}  // namespace eps
