#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

using chm::cli::Command;
using chm::cli::Output;
using chm::cli::RunConfig;

int dispatch(RunConfig cfg, const std::string& t_arg, const std::string& output_arg) {
  if (output_arg == "csv") {
    cfg.output = Output::kCsv;
  } else if (output_arg == "json") {
    cfg.output = Output::kJson;
  } else {
    std::cerr << "chm: unknown output format '" << output_arg << "'\n";
    return 2;
  }
  if (!t_arg.empty()) {
    if (t_arg == "t1" || t_arg == "t2" || t_arg == "t3" || t_arg == "costa") {
      cfg.t_symbol = t_arg;
    } else {
      try {
        std::size_t pos = 0;
        const double v = std::stod(t_arg, &pos);
        if (pos != t_arg.size()) throw std::invalid_argument(t_arg);
        cfg.t = v;
      } catch (const std::exception&) {
        std::cerr << "chm: --t expects a number or one of t1, t2, t3, costa\n";
        return 2;
      }
    }
  }
  const bool needs_t = cfg.command == Command::kNullity || cfg.command == Command::kIndex;
  if (needs_t) {
    if (cfg.genus < 1) {
      std::cerr << "chm: genus must be >= 1\n";
      return 2;
    }
    if (cfg.genus == 1) {
      if (!cfg.t_symbol.empty() && cfg.t_symbol != "costa") {
        std::cerr << "chm: genus 1 supports only --t costa\n";
        return 2;
      }
    } else if (!cfg.t && cfg.t_symbol.empty()) {
      std::cerr << "chm: --t is required\n";
      return 2;
    } else if (cfg.t_symbol == "costa") {
      std::cerr << "chm: --t costa is the genus-1 special case\n";
      return 2;
    }
  }
  try {
    const auto res = chm::cli::run(cfg);
    std::fputs(res.out.c_str(), stdout);
    return res.exit_code;
  } catch (const std::domain_error& e) {
    std::cerr << "chm: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "chm: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical deformation parameters, discriminant scans, inequality\n"
               "certificates and Jacobi index/nullity tables for the Gauss map of\n"
               "Costa-Hoffman-Meeks surfaces"};
  app.require_subcommand(1);

  std::string t_arg;
  std::string output_arg = "json";
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output_arg, "json or csv")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "matching tolerance, relative in t")->capture_default_str();
  };

  auto* c_critical = app.add_subcommand("critical", "t1, t2, t3 for one genus");
  c_critical->add_option("--genus", cfg.genus, "genus, >= 2")->required();
  add_common(c_critical);

  auto* c_nullity = app.add_subcommand("nullity", "Nul(G_t) at a deformation parameter");
  c_nullity->add_option("--genus", cfg.genus, "genus, >= 1")->required();
  c_nullity->add_option("--t", t_arg, "numeric t, or t1/t2/t3/costa");
  add_common(c_nullity);

  auto* c_index = app.add_subcommand("index", "Ind(G_t) at a deformation parameter");
  c_index->add_option("--genus", cfg.genus, "genus, >= 1")->required();
  c_index->add_option("--t", t_arg, "numeric t, or t1/t2/t3/costa");
  add_common(c_index);

  auto* c_scan = app.add_subcommand("scan", "discriminant ratio X over a genus range");
  c_scan->add_option("--genus-min", cfg.genus_min, "first genus, >= 2")->required();
  c_scan->add_option("--genus-max", cfg.genus_max, "last genus")->required();
  add_common(c_scan);

  auto* c_vb = app.add_subcommand("verify-bounds", "grid certificates for the bound machinery");
  c_vb->add_option("--grid-step", cfg.grid_step, "grid step, <= 1e-4")->capture_default_str();
  add_common(c_vb);

  auto* c_vp = app.add_subcommand("verify-periods",
                                  "loop quadrature vs closed-form periods at one genus");
  c_vp->add_option("--genus", cfg.genus, "genus, >= 2 (2..6 is fast)")->required();
  add_common(c_vp);

  auto* c_vs = app.add_subcommand("verify-systems", "rank-based kernel dimensions at one genus");
  c_vs->add_option("--genus", cfg.genus, "genus, >= 2")->required();
  add_common(c_vs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (c_critical->parsed()) cfg.command = Command::kCritical;
  if (c_nullity->parsed()) cfg.command = Command::kNullity;
  if (c_index->parsed()) cfg.command = Command::kIndex;
  if (c_scan->parsed()) cfg.command = Command::kScan;
  if (c_vb->parsed()) cfg.command = Command::kVerifyBounds;
  if (c_vp->parsed()) cfg.command = Command::kVerifyPeriods;
  if (c_vs->parsed()) cfg.command = Command::kVerifySystems;

  return dispatch(cfg, t_arg, output_arg);
}
