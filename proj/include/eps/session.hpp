#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eps/forest.hpp"
#include "eps/instances.hpp"
#include "eps/rational.hpp"

namespace eps {

/// forest | poly:LAMBDA | divdiff | quiver:FILE | foissy | trivial
struct InstanceSpec {
  enum class Kind { Forest, Poly, DivDiff, Quiver, Foissy, Trivial };
  Kind kind = Kind::Forest;
  Rat lambda;
  QuiverSpec quiver;

  /// Reads the quiver file for quiver:FILE; "quiver" alone selects the built-in test quiver.
  static InstanceSpec parse(const std::string& selector);
  bool forest_basis() const { return kind == Kind::Forest || kind == Kind::Foissy || kind == Kind::Trivial; }
};

enum class OutputFormat { Text, Json };

/// An element or a tensor of the session's algebra.
class Value {
 public:
  virtual ~Value() = default;
  virtual bool is_tensor() const = 0;
  virtual std::string text() const = 0;
  virtual std::string json() const = 0;
  std::string render(OutputFormat f) const { return f == OutputFormat::Json ? json() : text(); }
};

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_vertices = 6;
  unsigned threads = 1;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string counterexample;  // first failing sample, in sample order
  std::string skipped;         // reason when the suite does not apply

  bool ok() const { return skipped.size() > 0 || passed == total; }
};

struct CheckReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
  std::string render(OutputFormat f) const;
};

/// The check suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// One instance with its alphabets; every operation dispatches on the instance's basis type.
class Session {
 public:
  virtual ~Session() = default;

  virtual const std::string& instance_name() const = 0;
  virtual const Alphabets& alphabets() const = 0;

  /// Element text, or a tensor if the text contains '#'.
  virtual std::unique_ptr<Value> parse(const std::string& text) const = 0;
  virtual std::unique_ptr<Value> parse_json(const std::string& text) const = 0;

  virtual std::unique_ptr<Value> coproduct(const Value& a) const = 0;
  virtual std::unique_ptr<Value> derivation(const Value& a) const = 0;
  virtual std::unique_ptr<Value> antipode(const Value& a) const = 0;
  virtual std::unique_ptr<Value> antipode_inverse(const Value& a) const = 0;
  virtual std::unique_ptr<Value> prelie(const Value& a, const Value& b) const = 0;
  virtual std::unique_ptr<Value> bracket(const Value& a, const Value& b) const = 0;

  /// Forest sessions only: each I_k as vertex addresses plus the restricted forest.
  virtual std::string biideals(const Value& a, OutputFormat f) const = 0;
  /// Forest sessions only: the morphism into a named target.
  virtual std::unique_ptr<Value> evaluate(const Value& a, const std::string& target) const = 0;

  /// Throws PreconditionError when a single named suite does not apply.
  virtual CheckReport check(const std::string& suite, const CheckOptions& options) const = 0;
};

std::unique_ptr<Session> make_session(const InstanceSpec& spec, const Alphabets& alphabets);

}  // namespace eps
