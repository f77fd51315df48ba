#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chm/bounds.hpp"
#include "chm/critical.hpp"
#include "chm/periods.hpp"
#include "chm/surface.hpp"

namespace chm::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fmt_num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

double resolve_t(const RunConfig& cfg) {
  if (cfg.t) return *cfg.t;
  if (cfg.t_symbol == "t1" || cfg.t_symbol == "t2" || cfg.t_symbol == "t3") {
    const CriticalValues cv = critical_values(GenusParams::from_genus(cfg.genus));
    if (cfg.t_symbol == "t1") return cv.t1;
    if (cfg.t_symbol == "t2") return cv.t2;
    return cv.t3;
  }
  throw std::domain_error("missing or unknown t");
}

json config_echo(const RunConfig& cfg) {
  json j;
  j["command"] = command_name(cfg.command);
  j["genus"] = cfg.genus;
  if (cfg.command == Command::kScan) {
    j["genus_min"] = cfg.genus_min;
    j["genus_max"] = cfg.genus_max;
  }
  if (cfg.t) j["t"] = *cfg.t;
  if (!cfg.t_symbol.empty()) j["t_symbol"] = cfg.t_symbol;
  j["tol"] = cfg.tol;
  j["output"] = cfg.output == Output::kJson ? "json" : "csv";
  return j;
}

std::string wrap_json(const RunConfig& cfg, json results) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_echo(cfg);
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

RunResult report_critical(const RunConfig& cfg) {
  const CriticalValues cv = critical_values(GenusParams::from_genus(cfg.genus));
  if (cfg.output == Output::kCsv) {
    std::ostringstream os;
    os << "g,t1,t2,t3,rel_err\n";
    os << cfg.genus << ',' << fmt_num(cv.t1) << ',' << fmt_num(cv.t2) << ',' << fmt_num(cv.t3)
       << ',' << fmt_num(cv.rel_err) << '\n';
    return {0, os.str()};
  }
  json r;
  r["t1"] = cv.t1;
  r["t2"] = cv.t2;
  r["t3"] = cv.t3;
  r["rel_err"] = cv.rel_err;
  return {0, wrap_json(cfg, std::move(r))};
}

RunResult report_nullity(const RunConfig& cfg) {
  int value;
  bool extra = false;
  double t_used = 0.0;
  if (cfg.genus == 1) {
    value = costa_nullity;
  } else {
    t_used = resolve_t(cfg);
    const NullityResult n = nullity(GenusParams::from_genus(cfg.genus), t_used, cfg.tol);
    value = n.value;
    extra = n.extra_unknown;
  }
  if (cfg.output == Output::kCsv) {
    std::ostringstream os;
    os << "g,t,nullity,extra_unknown\n";
    os << cfg.genus << ',' << (cfg.genus == 1 ? std::string("costa") : fmt_num(t_used)) << ','
       << value << ',' << (extra ? 1 : 0) << '\n';
    return {0, os.str()};
  }
  json r;
  if (cfg.genus == 1) {
    r["t"] = "costa";
  } else {
    r["t"] = t_used;
  }
  r["nullity"] = value;
  r["extra_unknown"] = extra;
  if (extra) r["note"] = "t matches a quartic root beyond t3; kernel dimension not asserted";
  return {0, wrap_json(cfg, std::move(r))};
}

RunResult report_index(const RunConfig& cfg) {
  int value;
  double t_used = 0.0;
  if (cfg.genus == 1) {
    value = costa_index;
  } else {
    t_used = resolve_t(cfg);
    value = index_of(GenusParams::from_genus(cfg.genus), t_used, cfg.tol);
  }
  if (cfg.output == Output::kCsv) {
    std::ostringstream os;
    os << "g,t,index\n";
    os << cfg.genus << ',' << (cfg.genus == 1 ? std::string("costa") : fmt_num(t_used)) << ','
       << value << '\n';
    return {0, os.str()};
  }
  json r;
  if (cfg.genus == 1) {
    r["t"] = "costa";
  } else {
    r["t"] = t_used;
  }
  r["index"] = value;
  return {0, wrap_json(cfg, std::move(r))};
}

RunResult report_scan(const RunConfig& cfg) {
  const auto rows = scan(cfg.genus_min, cfg.genus_max);
  int exit_code = 0;
  for (const ScanRow& r : rows) {
    if (r.has_roots && !(r.margin > r.margin_err)) exit_code = 1;
  }
  if (cfg.output == Output::kCsv) {
    std::ostringstream os;
    os << "g,l,X,has_roots,t_minus,t_plus,t3,margin\n";
    for (const ScanRow& r : rows) {
      os << r.g << ',' << r.l << ',' << fmt_num(r.X) << ',' << (r.has_roots ? 1 : 0) << ','
         << fmt_num(r.t_minus) << ',' << fmt_num(r.t_plus) << ',' << fmt_num(r.t3) << ','
         << fmt_num(r.margin) << '\n';
    }
    return {exit_code, os.str()};
  }
  json arr = json::array();
  for (const ScanRow& r : rows) {
    json j;
    j["g"] = r.g;
    j["l"] = r.l;
    j["X"] = r.X;
    j["X_err"] = r.X_err;
    j["has_roots"] = r.has_roots;
    if (r.has_roots) {
      j["t_minus"] = r.t_minus;
      j["t_plus"] = r.t_plus;
      j["margin"] = r.margin;
      j["margin_err"] = r.margin_err;
    }
    j["t3"] = r.t3;
    arr.push_back(std::move(j));
  }
  int nroots = 0;
  for (const ScanRow& row : rows)
    if (row.has_roots) ++nroots;
  json r;
  r["rows"] = std::move(arr);
  r["real_root_rows"] = nroots;
  return {exit_code, wrap_json(cfg, std::move(r))};
}

RunResult report_verify_bounds(const RunConfig& cfg) {
  bounds::DomainBox box;
  box.grid_step = cfg.grid_step;
  const auto certs = bounds::certify_all(box);
  int exit_code = 0;
  for (const auto& c : certs)
    if (!c.verified) exit_code = 1;
  if (cfg.output == Output::kCsv) {
    std::ostringstream os;
    os << "claim_id,verified,worst_margin,worst_x,worst_y,err_bound\n";
    for (const auto& c : certs) {
      os << c.claim_id << ',' << (c.verified ? 1 : 0) << ',' << fmt_num(c.worst_margin) << ','
         << fmt_num(c.worst_point[0]) << ',' << fmt_num(c.worst_point[1]) << ','
         << fmt_num(c.err_bound) << '\n';
    }
    return {exit_code, os.str()};
  }
  json arr = json::array();
  for (const auto& c : certs) {
    json j;
    j["claim_id"] = c.claim_id;
    j["verified"] = c.verified;
    j["worst_margin"] = c.worst_margin;
    j["worst_point"] = {c.worst_point[0], c.worst_point[1]};
    j["err_bound"] = c.err_bound;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  json r;
  r["certificates"] = std::move(arr);
  return {exit_code, wrap_json(cfg, std::move(r))};
}

RunResult report_verify_periods(const RunConfig& cfg) {
  const int g = cfg.genus;
  const GenusParams p = GenusParams::from_genus(g);
  const double tol = 1e-8;
  int exit_code = 0;
  json arr = json::array();
  std::ostringstream csv;
  csv << "kind,family,k,power,quad_re,quad_im,closed_re,closed_im,rel_err\n";

  for (const auto& form : surface::basis_forms(g)) {
    const int fam = form.family == surface::FormFamily::kBasis1   ? 1
                    : form.family == surface::FormFamily::kBasis2 ? 2
                                                                  : 3;
    for (int power = 0; power <= 2; ++power) {
      const auto quad = periods::period(form, power, 0, g);
      const auto closed = periods::period_closed_form(form, power, p);
      const double scale = std::max({std::abs(closed), 1.0});
      const double rel = std::abs(quad - closed) / scale;
      if (rel > tol) exit_code = 1;
      csv << "period," << fam << ',' << form.k << ',' << power << ',' << fmt_num(quad.real())
          << ',' << fmt_num(quad.imag()) << ',' << fmt_num(closed.real()) << ','
          << fmt_num(closed.imag()) << ',' << fmt_num(rel) << '\n';
      json j;
      j["kind"] = "period";
      j["family"] = fam;
      j["k"] = form.k;
      j["power"] = power;
      j["quadrature"] = {quad.real(), quad.imag()};
      j["closed_form"] = {closed.real(), closed.imag()};
      j["rel_err"] = rel;
      arr.push_back(std::move(j));
    }
  }
  const auto coh = periods::cohomology_check(g, tol);
  if (!coh.pass) exit_code = 1;
  for (const auto& row : coh.rows) {
    csv << "cohomology," << row.family << ',' << row.k << ",," << fmt_num(row.period_form.real())
        << ',' << fmt_num(row.period_form.imag()) << ',' << fmt_num(row.period_equivalent.real())
        << ',' << fmt_num(row.period_equivalent.imag()) << ',' << fmt_num(row.rel_discrepancy)
        << '\n';
    json j;
    j["kind"] = "cohomology";
    j["family"] = row.family;
    j["k"] = row.k;
    j["period_form"] = {row.period_form.real(), row.period_form.imag()};
    j["period_equivalent"] = {row.period_equivalent.real(), row.period_equivalent.imag()};
    j["rel_err"] = row.rel_discrepancy;
    arr.push_back(std::move(j));
  }
  if (cfg.output == Output::kCsv) return {exit_code, csv.str()};
  json r;
  r["tolerance"] = tol;
  r["checks"] = std::move(arr);
  r["pass"] = exit_code == 0;
  return {exit_code, wrap_json(cfg, std::move(r))};
}

RunResult report_verify_systems(const RunConfig& cfg) {
  const GenusParams p = GenusParams::from_genus(cfg.genus);
  const CriticalValues cv = critical_values(p);
  const double generic = std::sqrt(cv.t1 * cv.t2);
  struct Case {
    const char* label;
    double t;
    int expected;
  };
  const Case cases[] = {
      {"t1", cv.t1, 1}, {"t2", cv.t2, 1}, {"t3", cv.t3, 2}, {"generic", generic, 0}};
  int exit_code = 0;
  json arr = json::array();
  std::ostringstream csv;
  csv << "g,t_label,t,dim_solution,expected,gap_ok\n";
  for (const Case& c : cases) {
    const auto sys = periods::assemble_system(p, c.t);
    if (sys.dim_solution != c.expected || !sys.gap_ok) exit_code = 1;
    csv << cfg.genus << ',' << c.label << ',' << fmt_num(c.t) << ',' << sys.dim_solution << ','
        << c.expected << ',' << (sys.gap_ok ? 1 : 0) << '\n';
    json j;
    j["t_label"] = c.label;
    j["t"] = c.t;
    j["dim_solution"] = sys.dim_solution;
    j["nullity"] = 3 + sys.dim_solution;
    j["expected_dim"] = c.expected;
    j["sigma_max"] = sys.sigma_max;
    j["sigma_threshold"] = sys.sigma_threshold;
    j["gap_ok"] = sys.gap_ok;
    arr.push_back(std::move(j));
  }
  if (cfg.output == Output::kCsv) return {exit_code, csv.str()};
  json r;
  r["cases"] = std::move(arr);
  r["pass"] = exit_code == 0;
  return {exit_code, wrap_json(cfg, std::move(r))};
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kCritical: return "critical";
    case Command::kNullity: return "nullity";
    case Command::kIndex: return "index";
    case Command::kScan: return "scan";
    case Command::kVerifyBounds: return "verify-bounds";
    case Command::kVerifyPeriods: return "verify-periods";
    case Command::kVerifySystems: return "verify-systems";
  }
  return "?";
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kCritical: return report_critical(cfg);
    case Command::kNullity: return report_nullity(cfg);
    case Command::kIndex: return report_index(cfg);
    case Command::kScan: return report_scan(cfg);
    case Command::kVerifyBounds: return report_verify_bounds(cfg);
    case Command::kVerifyPeriods: return report_verify_periods(cfg);
    case Command::kVerifySystems: return report_verify_systems(cfg);
  }
  throw std::logic_error("run: bad command");
}

}  // namespace chm::cli
