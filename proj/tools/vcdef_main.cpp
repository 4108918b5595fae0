// Copyright 2026 The vcdef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcdef/corpus.hpp"
#include "vcdef/errors.hpp"
#include "vcdef/experiment.hpp"
#include "vcdef/io.hpp"
#include "vcdef/skolem.hpp"
#include "vcdef/teaching.hpp"
#include "vcdef/uniform_template.hpp"

namespace {

using namespace vcdef;

struct SolverFlags {
  std::uint64_t seed = 0;
  std::size_t max_n = 0;
  bool approx_lp = false;
  std::string tolerance = "1/48";
  std::size_t committee_budget = 4096;

  CompressOptions to_options() const {
    CompressOptions opts;
    opts.seed = seed;
    opts.max_n = max_n;
    opts.exact_lp = !approx_lp;
    opts.tolerance = rational_from_string(tolerance);
    opts.committee_budget = committee_budget;
    return opts;
  }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Seed for the committee search");
  cmd->add_option("--max-n", flags.max_n,
                  "Cap on the adaptive constraint width (0: column count)");
  auto* approx =
      cmd->add_flag("--approx-lp", flags.approx_lp,
                    "Solve games with the certified iterative solver");
  auto* exact =
      cmd->add_flag("--exact-lp", "Solve games exactly (the default)");
  approx->excludes(exact);
  exact->excludes(approx);
  cmd->add_option("--tolerance", flags.tolerance,
                  "Iterative solver tolerance as p/q (default 1/48)");
  cmd->add_option("--committee-budget", flags.committee_budget,
                  "Starting budget of the committee search");
}

// Loads a system for pipeline commands. Everything downstream works on the
// canonical form, so row indices in input and output refer to it.
SetSystem load_canonical(const std::string& path) {
  return load_system(path).canonical();
}

TypeOverA parse_type(const SetSystem& s, const std::string& text) {
  bool looks_like_bits = text.size() == s.num_columns();
  for (char c : text) {
    if (c != '0' && c != '1') looks_like_bits = false;
  }
  if (looks_like_bits) return TypeOverA::of(s, bits_from_string(text));

  std::size_t index = 0;
  try {
    std::size_t used = 0;
    index = static_cast<std::size_t>(std::stoull(text, &used));
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw InputError(
        "--type must be a row index or a bit string as wide as the system");
  }
  if (index >= s.num_rows()) {
    throw InputError("row index " + text + " is out of range; the system has " +
                     std::to_string(s.num_rows()) + " rows");
  }
  return TypeOverA::of(s, index);
}

void write_text_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
}

std::vector<FamilySpec> read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<FamilySpec> specs;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    specs.push_back(FamilySpec::parse(line));
  }
  return specs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defining certificates for finite set systems"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* gen = app.add_subcommand("gen", "Generate a benchmark system");
  std::string gen_spec;
  std::string gen_out;
  bool gen_json = false;
  gen->add_option("spec", gen_spec, "Family spec, e.g. thresholds(6)")
      ->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->add_flag("--json", gen_json, "Write JSON instead of text");
  gen->callback([&] {
    SetSystem s = generate(FamilySpec::parse(gen_spec));
    std::ostringstream out;
    if (gen_json) {
      out << system_to_json(s).dump(2) << '\n';
    } else {
      system_to_text(s, out);
    }
    write_text_output(gen_out, out.str());
  });

  auto* vcdim_cmd =
      app.add_subcommand("vcdim", "Dimension of a system, with a witness");
  std::string vcdim_file;
  vcdim_cmd->add_option("file", vcdim_file, "System file")->required();
  vcdim_cmd->callback([&] {
    SetSystem s = load_canonical(vcdim_file);
    auto [dimension, witness] = vc_dim_witness(s);
    std::cout << "vc " << dimension << '\n' << "witness";
    for (std::size_t i : witness.indices()) std::cout << ' ' << i;
    std::cout << '\n' << "dual_vc " << vc_dim(dual(s)) << '\n';
  });

  auto* dual_cmd = app.add_subcommand("dual", "Transpose a system");
  std::string dual_file;
  std::string dual_out;
  bool dual_json = false;
  dual_cmd->add_option("file", dual_file, "System file")->required();
  dual_cmd->add_option("-o,--output", dual_out, "Output file (default stdout)");
  dual_cmd->add_flag("--json", dual_json, "Write JSON instead of text");
  dual_cmd->callback([&] {
    SetSystem d = dual(load_canonical(dual_file));
    std::ostringstream out;
    if (dual_json) {
      out << system_to_json(d).dump(2) << '\n';
    } else {
      system_to_text(d, out);
    }
    write_text_output(dual_out, out.str());
  });

  auto* iso = app.add_subcommand(
      "isolate", "Find a row pinned down by a small point set");
  std::string iso_file;
  bool iso_oracle = false;
  iso->add_option("file", iso_file, "System file")->required();
  iso->add_flag("--oracle", iso_oracle,
                "Also search the true minimum exhaustively");
  iso->callback([&] {
    SetSystem s = load_canonical(iso_file);
    TeachingSet teaching = isolate(s);
    nlohmann::json out = teaching_to_json(s, teaching);
    out["budget"] = t_budget(vc_dim(s));
    if (iso_oracle) {
      PointSet minimum = min_teaching_set(s, teaching.concept_row);
      out["minimum_points"] = minimum.indices();
      out["minimum_size"] = minimum.size();
      if (minimum.size() > teaching.points.size()) {
        throw VerificationError(
            "exhaustive minimum exceeds the returned teaching set");
      }
    }
    std::cout << out.dump(2) << '\n';
  });

  auto* comp = app.add_subcommand(
      "compress", "Build the defining certificate of one type");
  std::string comp_file;
  std::string comp_type;
  std::string comp_out;
  SolverFlags comp_flags;
  comp->add_option("file", comp_file, "System file")->required();
  comp->add_option("--type", comp_type,
                   "Canonical row index, or the type's full bit string")
      ->required();
  comp->add_option("-o,--output", comp_out,
                   "Certificate file (default stdout)");
  add_solver_flags(comp, comp_flags);
  comp->callback([&] {
    SetSystem s = load_canonical(comp_file);
    TypeOverA p = parse_type(s, comp_type);
    CompressionStats stats;
    Certificate cert =
        compress_type(s, p, comp_flags.to_options(), nullptr, &stats);
    write_text_output(comp_out, certificate_to_json(cert).dump(2) + "\n");
    std::cerr << "n " << stats.n_used << " pool " << stats.pool_size
              << " value " << to_string(stats.value)
              << (stats.lp_exact ? " exact"
                                 : " gap " + to_string(stats.gap))
              << " m " << stats.m << " k_max " << stats.k_max << '\n';
  });

  auto* ver = app.add_subcommand(
      "verify", "Re-check a certificate against a system");
  std::string ver_system;
  std::string ver_cert;
  ver->add_option("file", ver_system, "System file")->required();
  ver->add_option("cert", ver_cert, "Certificate file")->required();
  ver->callback([&] {
    SetSystem s = load_canonical(ver_system);
    Certificate cert = load_certificate(ver_cert);
    std::vector<CheckLine> checks = verify_certificate(s, cert);
    for (const CheckLine& check : checks) {
      std::cout << (check.passed ? "pass " : "fail ") << check.name;
      if (!check.detail.empty()) std::cout << ": " << check.detail;
      std::cout << '\n';
    }
    if (all_passed(checks)) {
      std::cout << "decoded " << bits_to_string(decode_bits(s, cert)) << '\n';
    } else {
      exit_code = 1;
    }
  });

  auto* tpl = app.add_subcommand(
      "template", "Code every type's certificate into one shape");
  std::string tpl_file;
  bool tpl_all = false;
  SolverFlags tpl_flags;
  tpl->add_option("file", tpl_file, "System file")->required();
  tpl->add_flag("--all-types", tpl_all, "Compress every realized type");
  add_solver_flags(tpl, tpl_flags);
  tpl->callback([&] {
    if (!tpl_all) {
      throw InputError("template covers all realized types; pass --all-types");
    }
    SetSystem s = load_canonical(tpl_file);
    SkolemTable table(s, WitnessMode::kIsolatedWitness);
    std::vector<Certificate> certs;
    certs.reserve(s.num_rows());
    for (std::size_t r = 0; r < s.num_rows(); ++r) {
      certs.push_back(compress_type(s, TypeOverA::of(s, r),
                                    tpl_flags.to_options(), &table));
    }
    TemplateResult result = make_template(certs);
    for (std::size_t r = 0; r < certs.size(); ++r) {
      Certificate rebuilt = certificate_from_slots(s, result.entries[r]);
      if (decode_bits(s, rebuilt) != s.row(r)) {
        throw VerificationError("template roundtrip changed the decode of type " +
                                std::to_string(r));
      }
    }
    TypeCountReport report =
        count_types_check(s, result.shape.parameter_length);
    nlohmann::json out;
    out["template"] = template_to_json(result.shape);
    out["types"] = certs.size();
    out["count_check"] = {
        {"distinct_rows", report.distinct_rows},
        {"bound", report.bound.get_str()},
        {"rows_within_bound", report.rows_within_bound},
        {"shattered_size", report.shattered_size},
        {"shattered_traces", report.shattered_traces},
        {"shattered_exact", report.shattered_exact},
    };
    std::cout << out.dump(2) << '\n';
    if (!report.rows_within_bound || !report.shattered_exact) exit_code = 1;
  });

  auto* exp = app.add_subcommand(
      "experiment", "Run the pipeline over a list of family specs");
  std::string exp_file;
  std::string exp_out;
  bool exp_timing = false;
  SolverFlags exp_flags;
  exp->add_option("specfile", exp_file,
                  "One family spec per line; # starts a comment")
      ->required();
  exp->add_option("-o,--output", exp_out, "CSV file (default stdout)");
  exp->add_flag("--timing", exp_timing,
                "Record wall time per system (reruns then differ)");
  add_solver_flags(exp, exp_flags);
  exp->callback([&] {
    ExperimentOptions opts;
    opts.compress = exp_flags.to_options();
    opts.timing = exp_timing;
    std::vector<ExperimentRecord> records =
        run_experiment(read_spec_file(exp_file), opts);
    write_text_output(exp_out, records_to_csv(records));
    for (const ExperimentRecord& rec : records) {
      if (rec.verification != "pass") exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
