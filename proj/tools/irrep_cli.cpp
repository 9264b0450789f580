// Command-line front end: analyze one group or run a catalog.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "irrep/analysis.hpp"
#include "irrep/catalog.hpp"
#include "irrep/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw irrep::InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_report(const irrep::AnalysisReport& r) {
  std::printf("group      %s (order %zu, %zu classes)\n", r.group.name.c_str(), r.group.order, r.group.class_count);
  for (const auto& n : r.group.notes) std::printf("note       %s\n", n.c_str());
  for (const auto& f : r.socle.feet) {
    if (f.kind == "abelian") std::printf("foot       order %zu, (F_%u)^%zu\n", f.order, f.p, f.rank);
    else std::printf("foot       order %zu, %zu simple factor(s) of order %zu\n", f.order, f.simple_factors, f.simple_order);
  }
  std::printf("minisocle  |MA| = %zu, |MH| = %zu, |MS| = %zu\n", r.socle.ma_order, r.socle.mh_order, r.socle.ms_order);
  const auto& c = r.criterion;
  std::printf("conditions ii=%s iii=%s (%s) iv=%s v=%s\n", yes_no(c.cond_ii), yes_no(c.cond_iii),
              c.cond_iii_method.c_str(), yes_no(c.cond_iv), yes_no(c.cond_v));
  if (c.cond_v_witness) std::printf("witness    %s\n", c.cond_v_witness->label.c_str());
  std::printf("verdict    %s\n", yes_no(c.verdict));
  std::printf("oracle     %s", yes_no(r.oracle.verdict));
  if (r.oracle.faithful_row) std::printf(" (row %zu, degree %zu)", *r.oracle.faithful_row, r.oracle.degrees[*r.oracle.faithful_row]);
  std::printf("\n");
  if (const auto& rep = r.oracle.representation) {
    std::printf("irrep      degree %zu, unitarity %.2e, multiplicativity %.2e, commutant %zu\n", rep->degree,
                rep->unitarity, rep->multiplicativity, rep->commutant_dimension);
  }
  if (const auto& gv = r.g_variant) {
    std::printf("g-variant  |A| = %zu, |MA^G| = %zu, |MS^G| = %zu, verdict %s, oracle %s, agree %s\n", gv->auto_order,
                gv->socle.ma_order, gv->socle.ms_order, yes_no(gv->verdict), yes_no(gv->oracle), yes_no(gv->agree));
  }
  std::printf("agreement  %s\n", yes_no(r.agreement));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether finite groups have faithful irreducible representations"};
  app.require_subcommand(1);

  std::string target, autos_file, json_out;
  irrep::AnalysisOptions aopts;
  auto* analyze = app.add_subcommand("analyze", "Analyze one group given as a spec or a file holding one");
  analyze->add_option("spec", target, "Group spec, or path to a file containing one")->required();
  analyze->add_option("--g-autos", autos_file, "File with an autos: block of extra automorphisms");
  analyze->add_flag("--construct-rep", aopts.construct_rep, "Build explicit matrices for a faithful irreducible");
  analyze->add_option("--json", json_out, "Write the JSON report here");
  analyze->add_option("--max-order", aopts.max_order, "Largest group order accepted")
      ->check(CLI::Range(std::size_t{1}, irrep::FiniteGroup::kHardMaxOrder));
  analyze->add_option("--tolerance", aopts.tolerance, "Character-table tolerance")->check(CLI::PositiveNumber);

  std::string catalog_file, json_dir;
  irrep::BatchOptions bopts;
  auto* batch = app.add_subcommand("batch", "Run every entry of a catalog");
  batch->add_option("--catalog", catalog_file, "Catalog file (default: built-in corpus)");
  batch->add_option("--json-dir", bopts.json_dir, "Directory for per-entry JSON reports");
  batch->add_option("--parallel", bopts.parallel, "Worker threads")->check(CLI::Range(1, 256));
  batch->add_flag("--construct-rep", bopts.construct_rep, "Build explicit matrices where possible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      std::string spec = target;
      if (std::filesystem::is_regular_file(target)) spec = read_file(target);
      if (!autos_file.empty()) aopts.autos_text = read_file(autos_file);
      const auto report = irrep::analyze(spec, aopts);
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << irrep::report_to_json(report) << '\n';
        if (!out) throw irrep::InputError("cannot write " + json_out);
      }
      print_report(report);
      return irrep::fully_agrees(report) ? kExitOk : kExitDisagreement;
    }
    const auto catalog =
        catalog_file.empty() ? irrep::build_catalog() : irrep::parse_catalog(read_file(catalog_file));
    const auto summary = irrep::batch_run(catalog, bopts);
    std::cout << irrep::format_summary(summary);
    if (summary.failures == 0) return kExitOk;
    for (const auto& e : summary.entries) {
      if (e.consistency_error || (e.report && !irrep::fully_agrees(*e.report))) return kExitDisagreement;
    }
    return kExitInput;
  } catch (const irrep::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const irrep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
