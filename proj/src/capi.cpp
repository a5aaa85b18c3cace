#include "eps/eps.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "eps/errors.hpp"
#include "eps/session.hpp"

struct eps_session {
  std::unique_ptr<eps::Session> impl;
};

struct eps_value {
  const eps_session* owner;
  std::unique_ptr<eps::Value> impl;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

template <class Fn>
eps_status guarded(Fn&& fn) {
  last_error.clear();
  last_line = 0;
  last_column = 0;
  try {
    fn();
    return EPS_OK;
  } catch (const eps::ParseError& e) {
    last_error = e.what();
    last_line = e.line();
    last_column = e.column();
    return EPS_ERR_PARSE;
  } catch (const eps::SchemaError& e) {
    last_error = e.what();
    return EPS_ERR_PARSE;
  } catch (const eps::PreconditionError& e) {
    last_error = e.what();
    return EPS_ERR_PRECONDITION;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return EPS_ERR_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EPS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return EPS_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
}

const eps::Value& value_of(const eps_session* s, const eps_value* v) {
  require(v, "value");
  if (v->owner != s) throw std::invalid_argument("value belongs to a different session");
  return *v->impl;
}

std::vector<std::string> split_labels(const char* list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

eps::OutputFormat to_format(eps_format f) {
  return f == EPS_FORMAT_JSON ? eps::OutputFormat::Json : eps::OutputFormat::Text;
}

eps_status emit(const eps_session* s, std::unique_ptr<eps::Value> v, eps_value** out) {
  *out = new eps_value{s, std::move(v)};
  return EPS_OK;
}

template <class Op>
eps_status unary(const eps_session* s, const eps_value* a, eps_value** out, Op op) {
  return guarded([&] {
    require(s, "session");
    require(out, "out");
    emit(s, op(*s->impl, value_of(s, a)), out);
  });
}

template <class Op>
eps_status binary(const eps_session* s, const eps_value* a, const eps_value* b, eps_value** out, Op op) {
  return guarded([&] {
    require(s, "session");
    require(out, "out");
    emit(s, op(*s->impl, value_of(s, a), value_of(s, b)), out);
  });
}

}  // namespace

extern "C" {

const char* eps_last_error(void) { return last_error.c_str(); }
size_t eps_last_error_line(void) { return last_line; }
size_t eps_last_error_column(void) { return last_column; }

eps_status eps_session_new(const char* instance, const char* x_labels, const char* omega_labels,
                           eps_session** out) {
  return guarded([&] {
    require(out, "out");
    const auto spec = eps::InstanceSpec::parse(instance ? instance : "forest");
    eps::Alphabets alphabets = eps::Alphabets::defaults();
    if (x_labels || omega_labels) {
      const auto d = eps::Alphabets::defaults();
      alphabets = eps::Alphabets(x_labels ? split_labels(x_labels) : d.x_labels(),
                                 omega_labels ? split_labels(omega_labels) : d.omega_labels());
    }
    *out = new eps_session{eps::make_session(spec, alphabets)};
  });
}

void eps_session_free(eps_session* s) { delete s; }

eps_status eps_parse(const eps_session* s, const char* text, eps_value** out) {
  return guarded([&] {
    require(s, "session");
    require(text, "text");
    require(out, "out");
    emit(s, s->impl->parse(text), out);
  });
}

eps_status eps_parse_json(const eps_session* s, const char* json, eps_value** out) {
  return guarded([&] {
    require(s, "session");
    require(json, "json");
    require(out, "out");
    emit(s, s->impl->parse_json(json), out);
  });
}

void eps_value_free(eps_value* v) { delete v; }

int eps_value_is_tensor(const eps_value* v) { return v && v->impl->is_tensor() ? 1 : 0; }

eps_status eps_value_to_string(const eps_value* v, eps_format format, char** out) {
  return guarded([&] {
    require(v, "value");
    require(out, "out");
    *out = dup_string(v->impl->render(to_format(format)));
  });
}

void eps_string_free(char* str) { std::free(str); }

eps_status eps_coproduct(const eps_session* s, const eps_value* a, eps_value** out) {
  return unary(s, a, out, [](const eps::Session& se, const eps::Value& v) { return se.coproduct(v); });
}

eps_status eps_derivation(const eps_session* s, const eps_value* a, eps_value** out) {
  return unary(s, a, out, [](const eps::Session& se, const eps::Value& v) { return se.derivation(v); });
}

eps_status eps_antipode(const eps_session* s, const eps_value* a, eps_value** out) {
  return unary(s, a, out, [](const eps::Session& se, const eps::Value& v) { return se.antipode(v); });
}

eps_status eps_antipode_inverse(const eps_session* s, const eps_value* a, eps_value** out) {
  return unary(s, a, out, [](const eps::Session& se, const eps::Value& v) { return se.antipode_inverse(v); });
}

eps_status eps_prelie(const eps_session* s, const eps_value* a, const eps_value* b, eps_value** out) {
  return binary(s, a, b, out,
                [](const eps::Session& se, const eps::Value& x, const eps::Value& y) { return se.prelie(x, y); });
}

eps_status eps_bracket(const eps_session* s, const eps_value* a, const eps_value* b, eps_value** out) {
  return binary(s, a, b, out,
                [](const eps::Session& se, const eps::Value& x, const eps::Value& y) { return se.bracket(x, y); });
}

eps_status eps_biideals(const eps_session* s, const eps_value* a, eps_format format, char** out) {
  return guarded([&] {
    require(s, "session");
    require(out, "out");
    *out = dup_string(s->impl->biideals(value_of(s, a), to_format(format)));
  });
}

eps_status eps_evaluate(const eps_session* s, const eps_value* a, const char* target, eps_value** out) {
  return guarded([&] {
    require(s, "session");
    require(target, "target");
    require(out, "out");
    emit(s, s->impl->evaluate(value_of(s, a), target), out);
  });
}

eps_status eps_check(const eps_session* s, const char* suite, uint64_t seed, size_t samples, size_t max_vertices,
                     unsigned threads, eps_format format, char** report, int* passed) {
  return guarded([&] {
    require(s, "session");
    require(suite, "suite");
    require(report, "report");
    require(passed, "passed");
    eps::CheckOptions o;
    o.seed = seed;
    o.samples = samples;
    o.max_vertices = max_vertices;
    o.threads = threads == 0 ? 1 : threads;
    const auto r = s->impl->check(suite, o);
    *report = dup_string(r.render(to_format(format)));
    *passed = r.ok() ? 1 : 0;
  });
}

}  // extern "C"
