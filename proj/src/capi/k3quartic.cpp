#include "k3quartic.h"

#include <functional>
#include <new>
#include <string>

#include "k3/error.hpp"
#include "k3/json_io.hpp"
#include "k3/lattice.hpp"

struct k3_report {
  k3::Json json;
  bool all_passed = false;
  mutable std::string text;
  mutable int text_indent = -2;
};

struct k3_lattice {
  k3::GramLattice lattice;
};

namespace {

thread_local std::string last_error;

k3_status status_of(k3::ErrorCode c) {
  switch (c) {
    case k3::ErrorCode::kParse: return K3_ERR_PARSE;
    case k3::ErrorCode::kDivisionByZero: return K3_ERR_DIVISION_BY_ZERO;
    case k3::ErrorCode::kReducibility: return K3_ERR_REDUCIBILITY;
    case k3::ErrorCode::kConfiguration: return K3_ERR_CONFIGURATION;
    case k3::ErrorCode::kDomain: return K3_ERR_DOMAIN;
    case k3::ErrorCode::kPrecondition: return K3_ERR_PRECONDITION;
    case k3::ErrorCode::kNumeric: return K3_ERR_NUMERIC;
  }
  return K3_ERR_INTERNAL;
}

k3_status guarded(const std::function<void()>& body) {
  last_error.clear();
  try {
    body();
    return K3_OK;
  } catch (const k3::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const k3::Json::exception& e) {
    last_error = e.what();
    return K3_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return K3_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return K3_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return K3_ERR_INTERNAL;
  }
}

k3_status invalid(const char* what) {
  last_error = what;
  return K3_ERR_INVALID_ARGUMENT;
}

k3_status emit(k3_report** out, const std::function<k3::Json()>& make) {
  if (!out) return invalid("output pointer is null");
  *out = nullptr;
  return guarded([&] {
    k3::Json j = make();
    auto* r = new k3_report;
    r->json = std::move(j);
    r->all_passed = r->json.value("allPassed", false);
    *out = r;
  });
}

std::string str(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* k3_version(void) { return k3::kVersion; }

const char* k3_last_error(void) { return last_error.c_str(); }

const char* k3_status_name(k3_status s) {
  switch (s) {
    case K3_OK: return "ok";
    case K3_ERR_PARSE: return "parse error";
    case K3_ERR_DIVISION_BY_ZERO: return "division by zero";
    case K3_ERR_REDUCIBILITY: return "reducible defining polynomial";
    case K3_ERR_CONFIGURATION: return "unexpected configuration";
    case K3_ERR_DOMAIN: return "domain error";
    case K3_ERR_PRECONDITION: return "precondition violated";
    case K3_ERR_NUMERIC: return "numeric failure";
    case K3_ERR_INVALID_ARGUMENT: return "invalid argument";
    case K3_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

k3_status k3_analyze(const char* alpha, int mw_rank, k3_report** out) {
  if (!alpha) return invalid("alpha is null");
  std::optional<int> mw;
  if (mw_rank >= 0) mw = mw_rank;
  return emit(out, [&] { return k3::cmd_analyze(alpha, mw); });
}

k3_status k3_fibers(const char* alpha, const char* degeneration, k3_report** out) {
  return emit(out, [&] { return k3::cmd_fibers(str(alpha), str(degeneration)); });
}

k3_status k3_lattice_invariants(const char* preset, k3_report** out) {
  if (!preset) return invalid("preset is null");
  return emit(out, [&] { return k3::cmd_lattice_invariants(preset); });
}

k3_status k3_lattice_tn(long n, k3_report** out) {
  if (n < 1) return invalid("n must be positive");
  return emit(out, [&] { return k3::cmd_lattice_tn(n); });
}

k3_status k3_split(const char* alpha, const char* param_json, k3_report** out) {
  if (!alpha || !param_json) return invalid("alpha and param_json are required");
  return emit(out, [&] { return k3::cmd_split(alpha, k3::Json::parse(param_json)); });
}

k3_status k3_cm(const char* beta4, int precision_bits, k3_report** out) {
  if (!beta4) return invalid("beta4 is null");
  if (precision_bits < 32 || precision_bits > 4096) return invalid("precision must be between 32 and 4096 bits");
  return emit(out, [&] { return k3::cmd_cm(beta4, precision_bits); });
}

k3_status k3_moduli(const char* check, k3_report** out) {
  return emit(out, [&] { return k3::cmd_moduli(check ? check : "all"); });
}

k3_status k3_verify(const char* suite, k3_report** out) {
  return emit(out, [&] { return k3::cmd_verify(suite ? suite : "all"); });
}

const char* k3_report_json(const k3_report* r, int indent) {
  if (!r) return "";
  if (r->text_indent != indent) {
    r->text = r->json.dump(indent < 0 ? -1 : indent);
    r->text_indent = indent;
  }
  return r->text.c_str();
}

int k3_report_all_passed(const k3_report* r) { return r && r->all_passed ? 1 : 0; }

void k3_report_free(k3_report* r) { delete r; }

k3_status k3_lattice_from_preset(const char* name, k3_lattice** out) {
  if (!out || !name) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new k3_lattice{k3::lattice_preset(name)}; });
}

k3_status k3_lattice_from_gram(const long* entries, int n, k3_lattice** out) {
  if (!out || !entries || n < 1) return invalid("gram needs a positive size and entries");
  *out = nullptr;
  k3::IntMatrix g(n, std::vector<k3::BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = entries[i * n + j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (g[i][j] != g[j][i]) return invalid("gram matrix is not symmetric");
  *out = new (std::nothrow) k3_lattice{k3::GramLattice{"gram", g}};
  return *out ? K3_OK : invalid("out of memory");
}

int k3_lattice_rank(const k3_lattice* l) { return l ? l->lattice.rank() : 0; }

k3_status k3_lattice_report(const k3_lattice* l, k3_report** out) {
  if (!l) return invalid("lattice is null");
  return emit(out, [&] { return k3::lattice_report(l->lattice, {{"lattice", l->lattice.name}}); });
}

void k3_lattice_free(k3_lattice* l) { delete l; }

}
