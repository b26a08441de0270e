// Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "flagcert/campaign.hpp"
#include "flagcert/octonions.hpp"

using namespace flagcert;

namespace {

struct ModelFlags {
  size_t n = 0, p = 0, q = 0;
  CLI::Option *n_opt = nullptr, *p_opt = nullptr, *q_opt = nullptr;

  void add(CLI::App* app) {
    n_opt = app->add_option("--n", n, "Half the ambient dimension");
    p_opt = app->add_option("--p", p, "Positive part of the signature");
    q_opt = app->add_option("--q", q, "Negative part of the signature");
  }
  void apply(CampaignConfig& c) const {
    if (*n_opt) c.n = n;
    if (*p_opt) c.p = p;
    if (*q_opt) c.q = q;
  }
};

Json octonion_table_json() {
  const OctonionAlgebra a = split_octonions();
  Json j;
  j["algebra"] = "split-octonions";
  j["basis"] = {"1", "idempotent (1,0;0,0)", "v1", "v2", "v3", "w1", "w2", "w3"};
  j["convention"] = "e_i e_j = sum_k table[i][j][k] e_k";
  j["unit"] = a.unit;
  j["table"] = a.table;
  j["norm_gram"] = matrix_to_json(a.norm_gram);
  j["quadric_basis"] = matrix_to_json(a.quadric_basis());
  return j;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for Onishchik inclusions on flag manifolds"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CampaignConfig cfg;
  ModelFlags verify_flags;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run the verification campaign of a case");
  verify->add_option("case", cfg.case_name, "projective-split | projective-pq | quadric7 | isotropic")->required();
  verify_flags.add(verify);
  verify->add_option("--samples", cfg.samples, "Samples per configuration")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  verify->add_option("--bound", cfg.bound, "Coordinate bound for random inputs")->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->add_flag("--strict", cfg.strict, "Stop at the first failing check");

  auto* witness = app.add_subcommand("witness", "Witness utilities");
  witness->require_subcommand(1);
  std::string witness_path;
  auto* witness_verify = witness->add_subcommand("verify", "Re-verify a serialized witness");
  witness_verify->add_option("file", witness_path, "Witness JSON file")->required();

  auto* dump = app.add_subcommand("dump", "Print structure data as JSON");
  dump->require_subcommand(1);
  auto* dump_table = dump->add_subcommand("octonion-table", "Structure constants of the split octonions");
  CampaignConfig model_cfg;
  ModelFlags model_flags;
  auto* dump_model = dump->add_subcommand("model", "Forms and distinguished data of a standard model");
  dump_model->add_option("case", model_cfg.case_name, "Case name")->required();
  model_flags.add(dump_model);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      verify_flags.apply(cfg);
      const Report r = run_campaign(cfg);
      if (const int rc = write_output(render_report(r), out_path)) return rc;
      std::cerr << cfg.case_name << ": " << r.count(CheckRecord::Status::pass) << " pass, "
                << r.count(CheckRecord::Status::fail) << " fail, " << r.count(CheckRecord::Status::skipped)
                << " skipped\n";
      return r.passed() ? kExitPass : kExitCheckFailed;
    }
    if (*witness_verify) {
      const WitnessFileResult res = verify_witness_file(witness_path);
      (res.exit_code == kExitPass ? std::cout : std::cerr) << res.message << "\n";
      return res.exit_code;
    }
    if (*dump_table) {
      std::cout << octonion_table_json().dump(2) << "\n";
      return kExitPass;
    }
    if (*dump_model) {
      model_flags.apply(model_cfg);
      std::cout << model_to_json(model_for(resolve_config(model_cfg))).dump(2) << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
