// eps: command-line front end over the C interface.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eps/eps.h"

namespace {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kUsage = 2, kPrecondition = 3 };

struct Config {
  std::optional<std::string> x;
  std::optional<std::string> omega;
  std::string instance = "forest";
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_vertices = 6;
  unsigned threads = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_labels(const nlohmann::json& j, const std::string& key) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) throw UsageError("config: \"" + key + "\" must be a string or an array of strings");
  std::string out;
  for (const auto& e : j) {
    if (!e.is_string()) throw UsageError("config: \"" + key + "\" must contain strings");
    out += (out.empty() ? "" : ",") + e.get<std::string>();
  }
  return out;
}

// Keys mirror the flags: X, Omega, instance, format, seed, samples, max-vertices, threads.
void load_config(const std::string& path, Config& c) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file '" + path + "' must hold a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "X") {
        c.x = join_labels(v, key);
      } else if (key == "Omega") {
        c.omega = join_labels(v, key);
      } else if (key == "instance") {
        c.instance = v.get<std::string>();
      } else if (key == "format") {
        c.format = v.get<std::string>();
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "samples") {
        c.samples = v.get<std::size_t>();
      } else if (key == "max-vertices" || key == "max_vertices") {
        c.max_vertices = v.get<std::size_t>();
      } else if (key == "threads") {
        c.threads = v.get<unsigned>();
      } else {
        throw UsageError("config: unknown key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

class Failure : public std::runtime_error {
 public:
  explicit Failure(eps_status s) : std::runtime_error(eps_last_error()), status(s) {}
  eps_status status;
};

void ok(eps_status s) {
  if (s != EPS_OK) throw Failure(s);
}

struct SessionDeleter {
  void operator()(eps_session* s) const { eps_session_free(s); }
};
struct ValueDeleter {
  void operator()(eps_value* v) const { eps_value_free(v); }
};
using SessionPtr = std::unique_ptr<eps_session, SessionDeleter>;
using ValuePtr = std::unique_ptr<eps_value, ValueDeleter>;

std::string take(char* s) {
  std::string out(s);
  eps_string_free(s);
  return out;
}

class Runner {
 public:
  explicit Runner(const Config& c) : c_(c) {
    eps_session* s = nullptr;
    ok(eps_session_new(c.instance.c_str(), c.x ? c.x->c_str() : nullptr, c.omega ? c.omega->c_str() : nullptr, &s));
    session_.reset(s);
    if (c.format == "json") {
      format_ = EPS_FORMAT_JSON;
    } else if (c.format != "text") {
      throw UsageError("unknown format '" + c.format + "' (expected text or json)");
    }
  }

  ValuePtr parse(const std::string& text) const {
    eps_value* v = nullptr;
    const bool json = !text.empty() && text.find_first_not_of(" \t\n") != std::string::npos &&
                      text[text.find_first_not_of(" \t\n")] == '{';
    ok(json ? eps_parse_json(session_.get(), text.c_str(), &v) : eps_parse(session_.get(), text.c_str(), &v));
    return ValuePtr(v);
  }

  void print(const ValuePtr& v) const {
    char* s = nullptr;
    ok(eps_value_to_string(v.get(), format_, &s));
    std::cout << take(s) << "\n";
  }

  template <class Fn>
  int unary(const std::string& expr, Fn fn) const {
    auto a = parse(expr);
    eps_value* out = nullptr;
    ok(fn(session_.get(), a.get(), &out));
    print(ValuePtr(out));
    return kOk;
  }

  template <class Fn>
  int binary(const std::string& e1, const std::string& e2, Fn fn) const {
    auto a = parse(e1);
    auto b = parse(e2);
    eps_value* out = nullptr;
    ok(fn(session_.get(), a.get(), b.get(), &out));
    print(ValuePtr(out));
    return kOk;
  }

  int biideals(const std::string& expr) const {
    auto a = parse(expr);
    char* s = nullptr;
    ok(eps_biideals(session_.get(), a.get(), format_, &s));
    std::cout << take(s) << "\n";
    return kOk;
  }

  int evaluate(const std::string& expr, const std::string& target) const {
    auto a = parse(expr);
    eps_value* out = nullptr;
    ok(eps_evaluate(session_.get(), a.get(), target.c_str(), &out));
    print(ValuePtr(out));
    return kOk;
  }

  int check(const std::string& suite) const {
    char* report = nullptr;
    int passed = 0;
    ok(eps_check(session_.get(), suite.c_str(), c_.seed, c_.samples, c_.max_vertices, c_.threads, format_, &report,
                 &passed));
    std::cout << take(report) << "\n";
    return passed ? kOk : kPropertyFailure;
  }

 private:
  Config c_;
  SessionPtr session_;
  eps_format format_ = EPS_FORMAT_TEXT;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinitesimal bialgebras on decorated planar rooted forests"};
  app.require_subcommand(1);
  app.fallthrough();

  Config flags;
  std::string config_file;
  std::string x_flag;
  std::string omega_flag;
  app.add_option("--config", config_file, "JSON file with the same keys as the flags (fallback: $EPS_CONFIG)");
  auto* x_opt = app.add_option("--X", x_flag, "comma-separated leaf labels (default x,y,z)");
  auto* omega_opt = app.add_option("--Omega", omega_flag, "comma-separated operator labels (default a,b,w)");
  auto* instance_opt = app.add_option("--instance", flags.instance,
                                      "forest | poly:LAMBDA | divdiff | quiver[:FILE] | foissy | trivial");
  auto* format_opt = app.add_option("--format", flags.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", flags.seed, "random seed for check");
  auto* samples_opt = app.add_option("--samples", flags.samples, "samples per check suite");
  auto* maxv_opt = app.add_option("--max-vertices", flags.max_vertices, "size bound for random samples");
  auto* threads_opt = app.add_option("--threads", flags.threads, "worker threads for check");

  std::string e1;
  std::string e2;
  std::string target;
  std::string suite;
  bool inverse = false;

  auto* coproduct = app.add_subcommand("coproduct", "print the coproduct of an element");
  coproduct->add_option("expr", e1)->required();
  auto* antipode = app.add_subcommand("antipode", "print the antipode S of an element");
  antipode->add_option("expr", e1)->required();
  antipode->add_flag("--inverse", inverse, "print the inverse T of the antipode instead");
  auto* prelie = app.add_subcommand("prelie", "print the pre-Lie product e1 > e2");
  prelie->add_option("e1", e1)->required();
  prelie->add_option("e2", e2)->required();
  auto* bracket = app.add_subcommand("bracket", "print the Lie bracket [e1, e2]");
  bracket->add_option("e1", e1)->required();
  bracket->add_option("e2", e2)->required();
  auto* biideals = app.add_subcommand("biideals", "list the proper biideals of a forest");
  biideals->add_option("expr", e1)->required();
  auto* eval = app.add_subcommand("eval", "evaluate the universal morphism into a target");
  eval->add_option("expr", e1)->required();
  eval->add_option("--target", target, "identity | relabel:x=y,... | collapse | broken")->required();
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", suite, "coassoc | compat | cocycle | oracle | nilpotency | antipode | prelie | "
                                    "jacobi | operated | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config c;
    if (config_file.empty()) {
      if (const char* env = std::getenv("EPS_CONFIG"); env && *env) config_file = env;
    }
    if (!config_file.empty()) load_config(config_file, c);
    if (*x_opt) c.x = x_flag;
    if (*omega_opt) c.omega = omega_flag;
    if (*instance_opt) c.instance = flags.instance;
    if (*format_opt) c.format = flags.format;
    if (*seed_opt) c.seed = flags.seed;
    if (*samples_opt) c.samples = flags.samples;
    if (*maxv_opt) c.max_vertices = flags.max_vertices;
    if (*threads_opt) c.threads = flags.threads;

    const Runner run(c);
    if (*coproduct) return run.unary(e1, eps_coproduct);
    if (*antipode) return run.unary(e1, inverse ? eps_antipode_inverse : eps_antipode);
    if (*prelie) return run.binary(e1, e2, eps_prelie);
    if (*bracket) return run.binary(e1, e2, eps_bracket);
    if (*biideals) return run.biideals(e1);
    if (*eval) return run.evaluate(e1, target);
    if (*check) return run.check(suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.status) {
      case EPS_ERR_PARSE:
      case EPS_ERR_INVALID: return kUsage;
      case EPS_ERR_PRECONDITION: return kPrecondition;
      default: return kPropertyFailure;
    }
  }
  return kUsage;
}
