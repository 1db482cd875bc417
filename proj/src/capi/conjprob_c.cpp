#include "conjprob.h"

#include "conjprob/catalog.hpp"
#include "conjprob/commuting_classes.hpp"
#include "conjprob/errors.hpp"
#include "conjprob/group_io.hpp"
#include "conjprob/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <memory>
#include <string>

struct cp_context {
  explicit cp_context(conjprob::Limits limits) : cache(limits) {}
  conjprob::StatsCache cache;
  std::unique_ptr<conjprob::CommuteCache> commute;
};

struct cp_group {
  conjprob::FiniteGroup group;
};

struct cp_report {
  std::vector<conjprob::ReportEntry> entries;
};

namespace {

thread_local std::string last_error;

// A file could not be opened or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

conjprob::ExactRational rational_arg(const char* text) {
  try {
    return conjprob::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw conjprob::ParseError(0, e.what());
  }
}

cp_status fail(cp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs f, mapping library exceptions onto status codes.
template <class F>
cp_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return CP_OK;
  } catch (const IoError& e) {
    return fail(CP_ERR_IO, e.what());
  } catch (const conjprob::ParseError& e) {
    return fail(CP_ERR_PARSE, e.what());
  } catch (const conjprob::ResourceLimitError& e) {
    return fail(CP_ERR_RESOURCE_LIMIT, e.what());
  } catch (const conjprob::MissingDependencyError& e) {
    return fail(CP_ERR_MISSING_DEPENDENCY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CP_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CP_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

conjprob::Format to_format(cp_format f) {
  switch (f) {
    case CP_FORMAT_TEXT: return conjprob::Format::Text;
    case CP_FORMAT_CSV: return conjprob::Format::Csv;
    case CP_FORMAT_JSON: return conjprob::Format::Json;
  }
  throw std::invalid_argument("unknown format");
}

cp_status rational_out(char** out, const std::function<conjprob::ExactRational()>& f) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = duplicate(conjprob::to_fraction_string(f()));
  });
}

}  // namespace

extern "C" {

const char* cp_version(void) { return "1.0.0"; }

const char* cp_last_error(void) { return last_error.c_str(); }

void cp_string_free(char* s) { std::free(s); }

cp_status cp_context_new(int kappa_ceiling, int rho_ceiling, cp_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(kappa_ceiling >= 0 && kappa_ceiling <= 400, "kappa ceiling out of range");
    require(rho_ceiling >= 0 && rho_ceiling <= conjprob::kMaxCommuteWeight,
            "rho ceiling out of range");
    *out = new cp_context(conjprob::Limits{kappa_ceiling, rho_ceiling});
  });
}

void cp_context_free(cp_context* ctx) { delete ctx; }

cp_status cp_context_save(const cp_context* ctx, const char* path) {
  return guarded([&] {
    require(ctx && path, "null argument");
    std::ofstream file(path);
    if (!file) throw IoError(std::string("cannot write '") + path + "'");
    ctx->cache.save(file);
  });
}

cp_status cp_context_load(cp_context* ctx, const char* path) {
  return guarded([&] {
    require(ctx && path, "null argument");
    std::ifstream file(path);
    if (!file) throw IoError(std::string("cannot open '") + path + "'");
    ctx->cache.load(file);
  });
}

cp_status cp_kappa_sn(cp_context* ctx, int n, char** out) {
  return rational_out(out, [&] {
    require(ctx != nullptr, "null context");
    require(n >= 0, "n must be >= 0");
    return conjprob::kappa_sn(n, ctx->cache);
  });
}

cp_status cp_rho_sn(cp_context* ctx, int n, char** out) {
  return rational_out(out, [&] {
    require(ctx != nullptr, "null context");
    require(n >= 0, "n must be >= 0");
    if (n > ctx->cache.limits().rho_ceiling)
      throw conjprob::ResourceLimitError("n = " + std::to_string(n) +
                                         " exceeds the rho ceiling");
    if (!ctx->commute)
      ctx->commute = std::make_unique<conjprob::CommuteCache>(
          std::max(1, ctx->cache.limits().rho_ceiling));
    return conjprob::rho_sn(n, ctx->cache, *ctx->commute);
  });
}

cp_status cp_small_cycles(cp_context* ctx, int k, int n, char** out) {
  return rational_out(out, [&] {
    require(ctx != nullptr, "null context");
    return conjprob::s_small_cycles(k, n, ctx->cache);
  });
}

cp_status cp_regular(cp_context* ctx, int l, char** out) {
  return rational_out(out, [&] {
    require(ctx != nullptr, "null context");
    return conjprob::r_regular(l, ctx->cache);
  });
}

cp_status cp_rational_decimal(const char* rational, unsigned digits,
                              cp_rounding mode, char** out) {
  return guarded([&] {
    require(rational && out, "null argument");
    conjprob::Rounding r = conjprob::Rounding::HalfUp;
    if (mode == CP_ROUND_DOWN) r = conjprob::Rounding::Down;
    else if (mode == CP_ROUND_UP) r = conjprob::Rounding::Up;
    else require(mode == CP_ROUND_HALF_UP, "unknown rounding mode");
    *out = duplicate(conjprob::to_decimal(rational_arg(rational), digits, r));
  });
}

cp_status cp_rational_compare(const char* a, const char* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    const int c = cmp(rational_arg(a), rational_arg(b));
    *out = (c > 0) - (c < 0);
  });
}

cp_status cp_sn_table(cp_context* ctx, cp_statistic stat, int n_max, unsigned digits,
                      int cumulative, cp_format format, char** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    require(n_max >= 1, "n_max must be >= 1");
    const auto s = stat == CP_RHO ? conjprob::Statistic::Rho : conjprob::Statistic::Kappa;
    const int ceiling = s == conjprob::Statistic::Rho ? ctx->cache.limits().rho_ceiling
                                                      : ctx->cache.limits().kappa_ceiling;
    if (n_max > ceiling)
      throw conjprob::ResourceLimitError("n = " + std::to_string(n_max) +
                                         " exceeds the ceiling " + std::to_string(ceiling));
    const auto table = conjprob::sn_table(s, n_max, digits, cumulative != 0, ctx->cache);
    *out = duplicate(conjprob::render_table(table, to_format(format)));
  });
}

cp_status cp_group_from_catalog(const char* name, cp_group** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new cp_group{conjprob::catalog_group(name)};
  });
}

cp_status cp_group_from_text(const char* text, cp_group** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cp_group{conjprob::build_group(conjprob::parse_group_input(text))};
  });
}

cp_status cp_group_from_file(const char* path, cp_group** out) {
  return guarded([&] {
    require(path && out, "null argument");
    if (!std::ifstream(path)) throw IoError(std::string("cannot open '") + path + "'");
    *out = new cp_group{conjprob::build_group(conjprob::read_group_file(path))};
  });
}

cp_status cp_group_text_normalize(const char* text, char** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = duplicate(conjprob::render_group_input(conjprob::parse_group_input(text)));
  });
}

void cp_group_free(cp_group* g) { delete g; }

cp_status cp_group_order(const cp_group* g, size_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = g->group.order();
  });
}

cp_status cp_group_kappa(const cp_group* g, char** out) {
  return rational_out(out, [&] {
    require(g != nullptr, "null group");
    return conjprob::kappa_g(g->group);
  });
}

cp_status cp_group_rho(const cp_group* g, char** out) {
  return rational_out(out, [&] {
    require(g != nullptr, "null group");
    return conjprob::rho_g(g->group);
  });
}

cp_status cp_group_cp(const cp_group* g, char** out) {
  return rational_out(out, [&] {
    require(g != nullptr, "null group");
    return conjprob::cp_g(g->group);
  });
}

cp_status cp_group_table(const cp_group* g, unsigned digits, int invariants,
                         cp_format format, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto table = conjprob::group_table(g->group, digits, invariants != 0);
    *out = duplicate(conjprob::render_table(table, to_format(format)));
  });
}

void cp_suite_options_default(cp_suite_options* options) {
  if (!options) return;
  const conjprob::SuiteOptions d;
  options->kappa_cutoff = d.kappa_cutoff;
  options->rho_cutoff = d.rho_cutoff;
  options->kappa_n_max = d.kappa_n_max;
  options->rho_n_max = d.rho_n_max;
  options->regular_l_max = d.regular_l_max;
  options->digits = d.digits;
}

cp_status cp_run_suite(cp_context* ctx, const char* suite, const cp_suite_options* options,
                       cp_progress_fn progress, void* user, cp_report** out) {
  return guarded([&] {
    require(ctx && suite && out, "null argument");
    conjprob::SuiteOptions o;
    if (options) {
      o.kappa_cutoff = options->kappa_cutoff;
      o.rho_cutoff = options->rho_cutoff;
      o.kappa_n_max = options->kappa_n_max;
      o.rho_n_max = options->rho_n_max;
      o.regular_l_max = options->regular_l_max;
      o.digits = options->digits;
    }
    require(o.kappa_cutoff >= 1 && o.kappa_cutoff <= ctx->cache.limits().kappa_ceiling,
            "kappa cutoff must lie in [1, kappa ceiling]");
    require(o.rho_cutoff >= 1 && o.rho_cutoff <= ctx->cache.limits().rho_ceiling,
            "rho cutoff must lie in [1, rho ceiling]");
    if (progress)
      o.progress = [progress, user](std::string_view message) {
        const std::string text(message);
        progress(text.c_str(), user);
      };
    const auto which = conjprob::parse_suite(suite);
    auto report = std::make_unique<cp_report>();
    report->entries = conjprob::run_suite(which, o, ctx->cache);
    *out = report.release();
  });
}

void cp_report_free(cp_report* report) { delete report; }

size_t cp_report_size(const cp_report* report) {
  return report ? report->entries.size() : 0;
}

cp_status cp_report_entry(const cp_report* report, size_t index, cp_entry* out) {
  return guarded([&] {
    require(report && out, "null argument");
    require(index < report->entries.size(), "entry index out of range");
    const auto& e = report->entries[index];
    out->claim = e.claim.c_str();
    out->status = e.status == conjprob::Status::Pass   ? CP_ENTRY_PASS
                  : e.status == conjprob::Status::Fail ? CP_ENTRY_FAIL
                                                       : CP_ENTRY_INFO;
    out->lhs = e.lhs.c_str();
    out->relation = e.relation.c_str();
    out->rhs = e.rhs.c_str();
    out->lhs_decimal = e.lhs_decimal.c_str();
    out->rhs_decimal = e.rhs_decimal.c_str();
    out->detail = e.detail.c_str();
    out->elapsed_ms = e.elapsed_ms;
  });
}

int cp_report_failed(const cp_report* report) {
  return report && conjprob::any_failed(report->entries) ? 1 : 0;
}

cp_status cp_report_render(const cp_report* report, cp_format format, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = duplicate(conjprob::render_entries(report->entries, to_format(format)));
  });
}

cp_status cp_report_json_normalize(const char* json, char** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = duplicate(conjprob::render_entries(conjprob::entries_from_json(json),
                                              conjprob::Format::Json));
  });
}

}  // extern "C"
