#include "f2v/f2v.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "f2v/correlations.hpp"
#include "f2v/error.hpp"
#include "f2v/oracle.hpp"
#include "f2v/verify.hpp"

struct f2v_model {
  f2v::VertexModel model;
};

struct f2v_engine {
  std::unique_ptr<f2v::CorrelationEngine> engine;
};

namespace {

thread_local std::string g_last_error;

f2v_status status_of(f2v::ErrorCode code) {
  using f2v::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return F2V_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return F2V_ERR_PARSE;
    case ErrorCode::Shape: return F2V_ERR_SHAPE;
    case ErrorCode::Singular: return F2V_ERR_SINGULAR;
    case ErrorCode::InvalidModel: return F2V_ERR_INVALID_MODEL;
    case ErrorCode::CapExceeded: return F2V_ERR_CAP_EXCEEDED;
    case ErrorCode::DuplicateEdge: return F2V_ERR_DUPLICATE_EDGE;
    case ErrorCode::OutOfRange: return F2V_ERR_OUT_OF_RANGE;
    case ErrorCode::Internal: return F2V_ERR_INTERNAL;
  }
  return F2V_ERR_INTERNAL;
}

template <class Fn>
f2v_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return F2V_OK;
  } catch (const f2v::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return F2V_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return F2V_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return F2V_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) f2v::fail(f2v::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<f2v::EdgeAddress> to_edges(const f2v_edge* edges, size_t count) {
  if (count != 0) require(edges, "edges");
  std::vector<f2v::EdgeAddress> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(f2v::face1_edge(edges[i].b2, edges[i].b3));
  return out;
}

unsigned level_cap(unsigned max_n) { return max_n == 0 ? f2v::kDefaultMaxLevel : max_n; }

void write_probability(const f2v::DyadicProbability& p, f2v_probability* out) {
  out->numerator = p.numerator();
  out->log2_denominator = p.log2_denominator();
}

}  // namespace

extern "C" {

const char* f2v_version(void) { return "1.0.0"; }

const char* f2v_last_error(void) { return g_last_error.c_str(); }

const char* f2v_status_name(f2v_status status) {
  switch (status) {
    case F2V_OK: return "ok";
    case F2V_ERR_INVALID_ARGUMENT: return "invalid argument";
    case F2V_ERR_PARSE: return "parse error";
    case F2V_ERR_SHAPE: return "shape mismatch";
    case F2V_ERR_SINGULAR: return "singular matrix";
    case F2V_ERR_INVALID_MODEL: return "invalid model";
    case F2V_ERR_CAP_EXCEEDED: return "size cap exceeded";
    case F2V_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case F2V_ERR_OUT_OF_RANGE: return "out of range";
    case F2V_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void f2v_string_free(char* s) { std::free(s); }

f2v_status f2v_model_create(const char* encoding, f2v_model** out) {
  return guarded([&] {
    require(encoding, "encoding");
    require(out, "out");
    *out = nullptr;
    *out = new f2v_model{f2v::VertexModel::from_encoding(encoding)};
  });
}

void f2v_model_destroy(f2v_model* model) { delete model; }

f2v_status f2v_model_class(const f2v_model* model, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = copy_string(std::string(f2v::class_name(f2v::classify(model->model.matrix()))));
  });
}

f2v_status f2v_model_analyze_json(const f2v_model* model, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = copy_string(f2v::analyze_matrix(model->model).dump(2));
  });
}

f2v_status f2v_model_transform_json(const f2v_model* model, unsigned n, unsigned max_n, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = copy_string(f2v::transform_report(model->model, n, level_cap(max_n)).dump(2));
  });
}

f2v_status f2v_engine_create(const f2v_model* model, unsigned n, unsigned max_n, f2v_engine** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = nullptr;
    auto engine = std::make_unique<f2v::CorrelationEngine>(model->model, n, level_cap(max_n));
    *out = new f2v_engine{std::move(engine)};
  });
}

void f2v_engine_destroy(f2v_engine* engine) { delete engine; }

f2v_status f2v_correlate(const f2v_engine* engine, const f2v_edge* edges, size_t count, f2v_probability* out) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    const auto list = to_edges(edges, count);
    write_probability(engine->engine->probability(list), out);
  });
}

f2v_status f2v_oracle_probability(const f2v_model* model, unsigned n, unsigned max_n, const f2v_edge* edges,
                                  size_t count, f2v_probability* out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    const auto list = to_edges(edges, count);
    f2v::validate_query(f2v::CorrelationQuery{n, list});
    write_probability(f2v::cached_oracle(model->model, n, level_cap(max_n))->probability(list), out);
  });
}

f2v_status f2v_predict(unsigned n, const f2v_edge* edges, size_t count, f2v_probability* out) {
  return guarded([&] {
    require(out, "out");
    write_probability(f2v::theorem_predictor(f2v::CorrelationQuery{n, to_edges(edges, count)}), out);
  });
}

f2v_status f2v_verify_suite(const char* suite, unsigned n_min, unsigned n_max, unsigned jobs, const char* matrix,
                            unsigned max_n, int* passed, char** report_json) {
  return guarded([&] {
    require(suite, "suite");
    require(passed, "passed");
    require(report_json, "report_json");
    f2v::VerifyOptions opt;
    if (n_min != 0) opt.n_min = n_min;
    if (n_max != 0) opt.n_max = n_max;
    if (opt.n_min && !opt.n_max) opt.n_max = opt.n_min;
    if (opt.n_min && opt.n_max && *opt.n_max < *opt.n_min)
      f2v::fail(f2v::ErrorCode::InvalidArgument, "n_max must not be below n_min");
    opt.jobs = jobs == 0 ? 1 : jobs;
    if (matrix != nullptr) opt.matrix = matrix;
    if (max_n != 0) opt.max_n = max_n;
    const f2v::Json report = f2v::run_suite(suite, opt);
    *passed = report.at("passed").get<bool>() ? 1 : 0;
    *report_json = copy_string(report.dump(2));
  });
}

f2v_status f2v_scan(const char* class_name, unsigned n, unsigned jobs, unsigned max_n, int* passed,
                    char** report_json) {
  return guarded([&] {
    require(class_name, "class_name");
    require(passed, "passed");
    require(report_json, "report_json");
    const auto cls = f2v::parse_class(class_name);
    if (!cls) f2v::fail(f2v::ErrorCode::InvalidArgument, "unknown class '" + std::string(class_name) + "'");
    const f2v::Json report = f2v::scan_class(*cls, n, jobs == 0 ? 1 : jobs, 4, level_cap(max_n));
    *passed = report.at("passed").get<bool>() ? 1 : 0;
    *report_json = copy_string(report.dump(2));
  });
}

}  // extern "C"
