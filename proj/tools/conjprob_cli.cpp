// Command-line front end over the C API.

#include "conjprob.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

namespace {

constexpr int kExitFailedClaims = 1;
constexpr int kExitError = 2;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(cp_status status) {
  if (status != CP_OK) throw Error(cp_last_error());
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  cp_string_free(s);
  return out;
}

cp_format parse_format(const std::string& name) {
  if (name == "csv") return CP_FORMAT_CSV;
  if (name == "json") return CP_FORMAT_JSON;
  return CP_FORMAT_TEXT;
}

using ContextPtr = std::unique_ptr<cp_context, decltype(&cp_context_free)>;

struct Common {
  std::string cache_path;
  int kappa_ceiling = 80;
  int rho_ceiling = 30;
};

ContextPtr open_context(const Common& common) {
  cp_context* raw = nullptr;
  check(cp_context_new(common.kappa_ceiling, common.rho_ceiling, &raw));
  ContextPtr ctx(raw, cp_context_free);
  if (!common.cache_path.empty() && std::filesystem::exists(common.cache_path))
    check(cp_context_load(ctx.get(), common.cache_path.c_str()));
  return ctx;
}

void close_context(const Common& common, const ContextPtr& ctx) {
  if (!common.cache_path.empty())
    check(cp_context_save(ctx.get(), common.cache_path.c_str()));
}

void progress(const char* message, void*) {
  std::fprintf(stderr, "[conjprob] %s\n", message);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conjugacy and commuting-class probabilities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cp_version()));

  Common common;
  app.add_option("--cache", common.cache_path,
                 "Memo file: loaded when present, written on exit");
  app.add_option("--kappa-ceiling", common.kappa_ceiling,
                 "Largest n for exact kappa(S_n)")->check(CLI::Range(1, 400));
  app.add_option("--rho-ceiling", common.rho_ceiling,
                 "Largest n for exact rho(S_n)")->check(CLI::Range(1, 48));

  struct TableArgs {
    int max = 10;
    std::string format = "text";
    unsigned digits = 10;
    bool cumulative = false;
  };
  TableArgs kappa_args, rho_args;
  auto add_table = [&](const char* name, const char* help, TableArgs& args) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--max", args.max, "Largest n")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--format", args.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--digits", args.digits, "Decimal places")->check(CLI::Range(0, 200));
    cmd->add_flag("--cumulative", args.cumulative, "Add the running sum from n = 0");
    return cmd;
  };
  auto* kappa_cmd = add_table("kappa-sn", "Table of kappa(S_n)", kappa_args);
  auto* rho_cmd = add_table("rho-sn", "Table of rho(S_n)", rho_args);

  std::string suite = "all";
  std::string verify_format = "text";
  cp_suite_options options;
  cp_suite_options_default(&options);
  bool quiet = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "lemma19", "lemma21", "gaps", "frobenius", "oracles",
                             "remarks", "asymptotics"}));
  verify_cmd->add_option("--exact-cutoff-kappa", options.kappa_cutoff,
                         "Exact kappa(S_n) up to this n, recursive bounds above");
  verify_cmd->add_option("--exact-cutoff-rho", options.rho_cutoff,
                         "Exact rho(S_n) up to this n, recursive bounds above");
  verify_cmd->add_option("--kappa-n-max", options.kappa_n_max, "Extent of the kappa chain");
  verify_cmd->add_option("--rho-n-max", options.rho_n_max, "Extent of the rho chain");
  verify_cmd->add_option("--regular-max", options.regular_l_max,
                         "Largest l in the r(l) bounds sweep");
  verify_cmd->add_option("--digits", options.digits, "Decimal places");
  verify_cmd->add_option("--format", verify_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify_cmd->add_flag("--quiet", quiet, "No progress messages");

  std::string catalog_name, file_path, group_format = "text";
  bool invariants = false, echo = false;
  unsigned group_digits = 10;
  auto* group_cmd = app.add_subcommand("group", "Invariants of a finite group");
  auto* catalog_opt = group_cmd->add_option("--catalog", catalog_name, "Catalog name, e.g. psl27");
  auto* file_opt = group_cmd->add_option("--file", file_path, "Group description file");
  catalog_opt->excludes(file_opt);
  group_cmd->add_flag("--invariants", invariants, "Also print center, classes and gap checks");
  group_cmd->add_flag("--echo", echo, "Print the parsed description of --file and stop");
  group_cmd->add_option("--format", group_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  group_cmd->add_option("--digits", group_digits, "Decimal places");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (kappa_cmd->parsed() || rho_cmd->parsed()) {
      const bool rho = rho_cmd->parsed();
      const TableArgs& args = rho ? rho_args : kappa_args;
      auto ctx = open_context(common);
      char* out = nullptr;
      check(cp_sn_table(ctx.get(), rho ? CP_RHO : CP_KAPPA, args.max, args.digits,
                        args.cumulative ? 1 : 0, parse_format(args.format), &out));
      std::cout << take(out);
      close_context(common, ctx);
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto ctx = open_context(common);
      cp_report* raw = nullptr;
      check(cp_run_suite(ctx.get(), suite.c_str(), &options, quiet ? nullptr : progress,
                         nullptr, &raw));
      std::unique_ptr<cp_report, decltype(&cp_report_free)> report(raw, cp_report_free);
      char* out = nullptr;
      check(cp_report_render(report.get(), parse_format(verify_format), &out));
      std::cout << take(out);
      close_context(common, ctx);
      return cp_report_failed(report.get()) ? kExitFailedClaims : 0;
    }
    if (group_cmd->parsed()) {
      if (catalog_name.empty() == file_path.empty())
        throw Error("exactly one of --catalog or --file is required");
      if (echo) {
        if (file_path.empty()) throw Error("--echo needs --file");
        std::ifstream in(file_path, std::ios::binary);
        if (!in) throw Error("cannot open '" + file_path + "'");
        const std::string text((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        char* out = nullptr;
        check(cp_group_text_normalize(text.c_str(), &out));
        std::cout << take(out);
        return 0;
      }
      cp_group* raw = nullptr;
      check(catalog_name.empty() ? cp_group_from_file(file_path.c_str(), &raw)
                                 : cp_group_from_catalog(catalog_name.c_str(), &raw));
      std::unique_ptr<cp_group, decltype(&cp_group_free)> group(raw, cp_group_free);
      char* out = nullptr;
      check(cp_group_table(group.get(), group_digits, invariants ? 1 : 0,
                           parse_format(group_format), &out));
      std::cout << take(out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "conjprob: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
