// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

// sector-verify: list executable claims, run seeded verification campaigns,
// and evaluate single matrix operations on JSON operands.
//
// Exit codes: 0 success / all trials passed, 1 claim failures,
// 2 usage or operand errors, 3 I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectorial/claims.hpp"
#include "sectorial/json_io.hpp"
#include "sectorial/means.hpp"
#include "sectorial/version.hpp"

namespace {

using namespace sectorial;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

CMatrix read_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

int cmd_list_claims(int section, bool as_json) {
  std::vector<const Claim*> rows;
  for (const Claim& c : claim_registry())
    if (section == 0 || c.section == section) rows.push_back(&c);
  if (as_json) {
    json out = json::array();
    for (const Claim* c : rows)
      out.push_back(json{{"id", c->id},
                         {"section", c->section},
                         {"result", c->anchor},
                         {"hypothesis", c->hypothesis},
                         {"refutation", c->refutation},
                         {"fixed_instance", c->fixed_instance}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("%-5s %-8s %-68s %s\n", "ID", "SECTION", "RESULT", "HYPOTHESIS");
  for (const Claim* c : rows)
    std::printf("%-5s %-8d %-68s %s\n", c->id.c_str(), c->section, c->anchor.c_str(),
                c->hypothesis.c_str());
  return 0;
}

int cmd_run(const CampaignConfig& config, const std::string& out_path, bool print_json) {
  const CampaignReport report = run_campaign(config);
  const json report_json = report_to_json(report);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return 3;
    }
    out << report_json.dump(2) << "\n";
    if (!out) {
      std::cerr << "error: write failed: " << out_path << "\n";
      return 3;
    }
  }
  if (print_json) {
    std::cout << report_json.dump(2) << "\n";
  } else {
    std::printf("%-5s %8s %8s %8s  %-12s %s\n", "ID", "TRIALS", "PASSES", "FAILURES",
                "MIN_MARGIN", "WORST_SEED");
    for (const ClaimAggregate& agg : report.claims) {
      if (agg.trials == 0) {
        std::printf("%-5s %8ld %8ld %8ld  %-12s %s\n", agg.id.c_str(), agg.trials, agg.passes,
                    agg.failures, "-", "-");
      } else {
        std::printf("%-5s %8ld %8ld %8ld  %-12.3e %llu\n", agg.id.c_str(), agg.trials,
                    agg.passes, agg.failures, agg.min_margin,
                    static_cast<unsigned long long>(agg.worst_seed));
      }
    }
    std::printf("total failures: %ld   wall time: %.2fs\n", report.total_failures,
                report.wall_s);
  }
  return report.total_failures == 0 ? 0 : 1;
}

int cmd_eval(const std::string& op, const std::vector<std::string>& files, double t,
             const std::string& f_text, long k) {
  const ToleranceProfile tol;
  const auto need_files = [&](size_t count) {
    if (files.size() != count)
      throw ParseError("op " + op + " expects " + std::to_string(count) + " operand file(s)");
  };
  const auto mean_result_text = [](const MeanResult& r) {
    std::string out = matrix_to_text(r.value);
    if (r.regularized_a || r.regularized_b) {
      out.pop_back();  // reopen the object to append the flags
      out += ", \"regularized_a\": ";
      out += r.regularized_a ? "true" : "false";
      out += ", \"regularized_b\": ";
      out += r.regularized_b ? "true" : "false";
      out += "}";
    }
    return out;
  };

  if (op == "arithmetic_mean") {
    need_files(2);
    std::cout << matrix_to_text(arithmetic_mean(read_matrix(files[0]), read_matrix(files[1]), t))
              << "\n";
  } else if (op == "geometric_mean") {
    need_files(2);
    std::cout << mean_result_text(
                     geometric_mean_regularized(read_matrix(files[0]), read_matrix(files[1]), t, tol))
              << "\n";
  } else if (op == "mean_sigma") {
    need_files(2);
    const OmfDescriptor f = omf_from_string(f_text);
    std::cout << mean_result_text(
                     mean_sigma_regularized(f, read_matrix(files[0]), read_matrix(files[1]), tol))
              << "\n";
  } else if (op == "adjoint_mean") {
    need_files(2);
    const OmfDescriptor f = omf_from_string(f_text);
    std::cout << mean_result_text(
                     adjoint_mean_regularized(f, read_matrix(files[0]), read_matrix(files[1]), tol))
              << "\n";
  } else if (op == "principal_power") {
    need_files(1);
    std::cout << matrix_to_text(principal_power(read_matrix(files[0]), t)) << "\n";
  } else if (op == "apply_omf") {
    need_files(1);
    const OmfDescriptor f = omf_from_string(f_text);
    std::cout << matrix_to_text(apply_omf(f, read_matrix(files[0]))) << "\n";
  } else if (op == "partial_transpose") {
    need_files(1);
    const Block2x2 m = block_from_json(read_json_file(files[0]));
    std::cout << block_to_text(partial_transpose(m)) << "\n";
  } else if (op == "sector_angle") {
    need_files(1);
    const SectorAngle angle = sector_angle(read_matrix(files[0]), tol);
    std::cout << "{\"alpha\": " << io_detail::fmt17(angle.alpha) << "}\n";
  } else if (op == "singular_values") {
    need_files(1);
    const RVector s = singular_values(read_matrix(files[0]));
    std::string out = "{\"values\": [";
    for (Index j = 0; j < s.size(); ++j) {
      if (j) out += ", ";
      out += io_detail::fmt17(s(j));
    }
    std::cout << out << "]}\n";
  } else if (op == "ky_fan_norm") {
    need_files(1);
    std::cout << "{\"value\": " << io_detail::fmt17(ky_fan_norm(read_matrix(files[0]), k))
              << "}\n";
  } else {
    throw ParseError("unknown op: " + op +
                     " (expected one of arithmetic_mean, geometric_mean, mean_sigma, "
                     "adjoint_mean, principal_power, apply_omf, partial_transpose, "
                     "sector_angle, singular_values, ky_fan_norm)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of accretive/sectorial block-matrix inequalities"};
  app.set_version_flag("--version", sectorial::kToolVersion);
  app.require_subcommand(1);

  // list-claims
  auto* list_cmd = app.add_subcommand("list-claims", "list the claim registry");
  int section = 0;
  bool list_json = false;
  list_cmd->add_option("--section", section, "restrict to one result group (2 or 3)");
  list_cmd->add_flag("--json", list_json, "machine-readable output");

  // run
  auto* run_cmd = app.add_subcommand("run", "run a verification campaign");
  std::vector<std::string> claim_ids;
  CampaignConfig config;
  std::string out_path;
  bool run_json = false;
  run_cmd->add_option("--claims", claim_ids, "claim ids (default: all)")->delimiter(',');
  run_cmd->add_option("--trials", config.trials, "trials per claim per dimension");
  run_cmd->add_option("--dims", config.dims, "dimension sweep")->delimiter(',');
  run_cmd->add_option("--seed", config.seed, "campaign seed");
  run_cmd->add_option("--tol-psd", config.tol.tol_psd, "relative PSD floor");
  run_cmd->add_option("--tol-margin", config.tol.tol_margin, "relative pass margin");
  run_cmd->add_option("--tol-eq", config.tol.tol_eq, "relative equality tolerance");
  run_cmd->add_option("--gen-margin", config.gen_margin,
                      "instance-generator strictness margin");
  run_cmd->add_option("--threads", config.threads,
                      "worker threads (default: SECTOR_VERIFY_THREADS or hardware)");
  run_cmd->add_option("--out", out_path, "write the report JSON to this file");
  run_cmd->add_flag("--json", run_json, "print the report JSON to stdout");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one operation on JSON operands");
  std::string op;
  std::vector<std::string> files;
  double t = 0.5;
  std::string f_text = "power:0.5";
  long k = 1;
  eval_cmd->add_option("op", op, "operation name")->required();
  eval_cmd->add_option("files", files, "operand files");
  eval_cmd->add_option("--t", t, "weight in [0, 1]");
  eval_cmd->add_option("--f", f_text, "mean function, e.g. power:0.5 or log_mean");
  eval_cmd->add_option("--k", k, "Ky Fan index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list_cmd) return cmd_list_claims(section, list_json);
    if (*run_cmd) {
      config.claims = claim_ids;
      config.validate();
      return cmd_run(config, out_path, run_json);
    }
    if (*eval_cmd) return cmd_eval(op, files, t, f_text, k);
  } catch (const sectorial::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sectorial::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sectorial::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
