#include "irrep/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "irrep/automorphism.hpp"
#include "irrep/criterion.hpp"
#include "irrep/dsl.hpp"
#include "irrep/errors.hpp"
#include "irrep/g_variant.hpp"

namespace irrep {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto run_stage(const char* stage, std::map<std::string, double>& timings, F&& f) {
  const auto start = Clock::now();
  auto record = [&] { timings[stage] = std::chrono::duration<double>(Clock::now() - start).count(); };
  try {
    auto out = f();
    record();
    return out;
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(std::string(stage) + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(std::string(stage) + ": " + e.what());
  }
}

}  // namespace

AnalysisReport analyze(std::string_view spec_text, const AnalysisOptions& options) {
  AnalysisReport report;
  auto& timings = report.timings;

  auto [spec_part, autos_part] = split_autos(spec_text);
  std::optional<std::string> autos_text = options.autos_text;
  if (!autos_part.empty()) autos_text = (autos_text ? *autos_text + "\n" : std::string()) + autos_part;

  const GroupSpec spec = run_stage("parse", timings, [&] { return parse_group_spec(spec_part); });
  const FiniteGroup g = run_stage("build", timings, [&] {
    FiniteGroup built = build_group(spec, options.max_order);
    verify_group_tables(built);
    return built;
  });
  report.group.name = options.name.empty() ? to_string(spec) : options.name;
  report.group.spec = to_string(spec);
  report.group.order = g.order();
  report.group.notes = g.notes();

  const auto deco = run_stage("socle", timings, [&] { return minisocle_decomposition(g); });
  report.socle = socle_info(g, deco);

  const auto crit = run_stage("criterion", timings, [&] { return decide_irreducibly_represented(g, deco); });
  report.criterion = criterion_info(g, crit);

  const auto table = run_stage("oracle", timings, [&] {
    const auto classes = conjugacy_classes(g).classes.size();
    if (classes > kMaxOracleClasses) {
      throw InputError(std::to_string(classes) + " conjugacy classes exceed the character-table cap of " +
                       std::to_string(kMaxOracleClasses));
    }
    return character_table(g, options.tolerance);
  });
  report.group.class_count = table.size();
  const auto table_check = check_character_table(table);
  report.oracle.degrees = table.degrees;
  report.oracle.faithful_row = has_faithful_irreducible(g, table);
  report.oracle.verdict = report.oracle.faithful_row.has_value();
  report.oracle.degree_sum_error = round_significant(table_check.degree_sum_error);
  report.oracle.row_orthogonality = round_significant(table_check.row_orthogonality);
  report.oracle.column_orthogonality = round_significant(table_check.column_orthogonality);

  if (autos_text) {
    const auto gr = run_stage("g_variant", timings, [&] {
      const auto autos = parse_autos_block(*autos_text);
      const AutoGroup a = close_auto_group(g, autos);
      return decide_g_faithful(g, a, deco, table);
    });
    report.g_variant = g_variant_info(g, gr);
  }

  if (options.construct_rep && report.oracle.faithful_row) {
    report.oracle.representation = run_stage("representation", timings, [&] {
      const std::size_t row = *report.oracle.faithful_row;
      const auto rep = construct_irreducible_rep(g, table, row);
      return representation_info(g, row, rep, check_irrep(g, table, rep));
    });
  }

  report.agreement = report.criterion.verdict == report.oracle.verdict && report.criterion.agree;
  return report;
}

bool fully_agrees(const AnalysisReport& r) { return r.agreement && (!r.g_variant || r.g_variant->agree); }

BatchSummary batch_run(const std::vector<CatalogEntry>& catalog, const BatchOptions& options) {
  BatchSummary summary;
  const auto start = Clock::now();
  summary.entries.resize(catalog.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      const CatalogEntry& e = catalog[i];
      BatchEntryResult& r = summary.entries[i];
      r.name = e.name;
      const auto t0 = Clock::now();
      AnalysisOptions opts;
      opts.name = e.name;
      opts.max_order = options.max_order;
      opts.tolerance = options.tolerance;
      opts.construct_rep = options.construct_rep;
      if (!e.autos_text.empty()) opts.autos_text = e.autos_text;
      try {
        r.report = analyze(e.spec_text, opts);
        if (e.expected && *e.expected != r.report->criterion.verdict) r.expectation_met = false;
        if (e.expected_g && (!r.report->g_variant || *e.expected_g != r.report->g_variant->verdict)) {
          r.expectation_met = false;
        }
      } catch (const ConsistencyError& err) {
        r.error = err.what();
        r.consistency_error = true;
      } catch (const Error& err) {
        r.error = err.what();
      }
      r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.parallel, catalog.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(summary.entries.begin(), summary.entries.end(),
            [](const BatchEntryResult& a, const BatchEntryResult& b) { return a.name < b.name; });
  for (const auto& r : summary.entries) {
    if (!r.passed()) ++summary.failures;
    if (!options.json_dir.empty() && r.report) {
      std::filesystem::create_directories(options.json_dir);
      std::ofstream out(std::filesystem::path(options.json_dir) / (r.name + ".json"));
      out << report_to_json(*r.report) << '\n';
      if (!out) throw InputError("cannot write report for " + r.name + " to " + options.json_dir);
    }
  }
  summary.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

std::string format_summary(const BatchSummary& s) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-16s %6s %5s %5s %-8s %-8s %-7s %8s  %s\n", "name", "order", "|MA|", "|MS|",
                "verdict", "oracle", "g", "seconds", "status");
  out << buf;
  for (const auto& r : s.entries) {
    if (!r.report) {
      std::snprintf(buf, sizeof buf, "%-16s %6s %5s %5s %-8s %-8s %-7s %8.3f  FAIL %s\n", r.name.c_str(), "-", "-",
                    "-", "-", "-", "-", r.seconds, r.error.c_str());
      out << buf;
      continue;
    }
    const auto& rep = *r.report;
    const char* g = rep.g_variant ? (rep.g_variant->verdict ? "true" : "false") : "-";
    std::string status = r.passed() ? "ok" : "FAIL";
    if (!r.expectation_met) status += " (unexpected verdict)";
    if (!fully_agrees(rep)) status += " (disagreement)";
    std::snprintf(buf, sizeof buf, "%-16s %6zu %5zu %5zu %-8s %-8s %-7s %8.3f  %s\n", r.name.c_str(), rep.group.order,
                  rep.socle.ma_order, rep.socle.ms_order, rep.criterion.verdict ? "true" : "false",
                  rep.oracle.verdict ? "true" : "false", g, r.seconds, status.c_str());
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%zu entries, %zu failures, %.2f s\n", s.entries.size(), s.failures, s.seconds);
  out << buf;
  return out.str();
}

}  // namespace irrep
