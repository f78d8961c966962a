// sheffer: generate and verify Sheffer, Appell and Sheffer-Appell sequences.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 internal error.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sheffer/sheffer.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Carries a status out of the command handlers.
struct CommandError {
  int exit_code;
  std::string message;
};

int exit_code_for(shf_status s) {
  switch (s) {
    case SHF_OK: return kExitPass;
    case SHF_ERR_INVALID_ARGUMENT:
    case SHF_ERR_UNKNOWN_FAMILY: return kExitUsage;
    default: return kExitInternal;
  }
}

void check(shf_status s) {
  if (s != SHF_OK) throw CommandError{exit_code_for(s), shf_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { shf_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PairDeleter {
  void operator()(shf_pair* p) const { shf_pair_free(p); }
};
using OwnedPair = std::unique_ptr<shf_pair, PairDeleter>;

struct SequenceDeleter {
  void operator()(shf_sequence* p) const { shf_sequence_free(p); }
};
using OwnedSequence = std::unique_ptr<shf_sequence, SequenceDeleter>;

template <class Fn>
std::string take_string(Fn&& fn) {
  char* raw = nullptr;
  check(fn(&raw));
  OwnedString owned(raw);
  return std::string(raw);
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) == 1; }

std::string styled(bool pass, bool color) {
  if (!color) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct FamilyArgs {
  std::string family;
  std::vector<std::string> params;
};

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CommandError{kExitUsage, "--param expects name=value, got '" + p + "'"};
    if (!out.emplace(p.substr(0, eq), p.substr(eq + 1)).second)
      throw CommandError{kExitUsage, "duplicate --param '" + p.substr(0, eq) + "'"};
  }
  return out;
}

OwnedPair make_pair(const FamilyArgs& args, std::size_t order) {
  const auto params = parse_params(args.params);
  std::vector<const char*> names, values;
  for (const auto& [k, v] : params) {
    names.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  shf_pair* pair = nullptr;
  check(shf_pair_create(args.family.c_str(), names.data(), values.data(), names.size(), order, &pair));
  return OwnedPair(pair);
}

json params_json(const FamilyArgs& args) {
  json obj = json::object();
  for (const auto& [k, v] : parse_params(args.params)) obj[k] = v;
  return obj;
}

const std::map<std::string, shf_identity>& theorem_names() {
  static const std::map<std::string, shf_identity> names = {
      {"2.1", SHF_IDENTITY_DIFFERENTIAL},
      {"3.1", SHF_IDENTITY_DERIVATIVE_RECURRENCE},
      {"3.2", SHF_IDENTITY_SCALED_RECURRENCE},
      {"3.3", SHF_IDENTITY_BINOMIAL_RECURRENCE},
  };
  return names;
}

// Working truncation order for every command: covers sequences to n + 1 and
// coefficient series to n.
std::size_t order_for(std::size_t n) { return n + 2; }

int run_families(const std::string& format) {
  const std::string raw = take_string([](char** out) { return shf_families_json(out); });
  const json families = json::parse(raw);
  if (format == "json") {
    std::cout << families.dump(2) << '\n';
    return kExitPass;
  }
  for (const auto& f : families) {
    std::string params;
    for (const auto& p : f["params"]) params += (params.empty() ? "" : ",") + p["name"].get<std::string>();
    std::printf("%-12s %-10s %s%s\n", f["name"].get<std::string>().c_str(),
                params.empty() ? "-" : params.c_str(), f["description"].get<std::string>().c_str(),
                f["extension"].get<bool>() ? " [extension]" : "");
  }
  return kExitPass;
}

int run_gen(const FamilyArgs& args, std::size_t n, const std::string& kind_name, const std::string& format) {
  static const std::map<std::string, shf_kind> kinds = {
      {"sheffer", SHF_KIND_SHEFFER}, {"appell", SHF_KIND_APPELL}, {"sheffer-appell", SHF_KIND_SHEFFER_APPELL}};
  static const std::map<std::string, shf_format> formats = {
      {"json", SHF_FORMAT_JSON}, {"csv", SHF_FORMAT_CSV}, {"latex", SHF_FORMAT_LATEX}};
  const auto pair = make_pair(args, order_for(n));
  shf_sequence* raw_seq = nullptr;
  check(shf_sequence_generate(pair.get(), kinds.at(kind_name), n, &raw_seq));
  const OwnedSequence seq(raw_seq);
  const std::string body =
      take_string([&](char** out) { return shf_sequence_render(seq.get(), formats.at(format), out); });
  if (format == "json") {
    json doc = json::parse(body);
    json out = {{"family", args.family}, {"params", params_json(args)}, {"n", n}, {"kind", kind_name},
                {"polys", doc["polys"]}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << body;
  }
  return kExitPass;
}

int run_coeffs(const FamilyArgs& args, std::size_t n, const std::string& theorem) {
  const auto pair = make_pair(args, order_for(n));
  const std::string raw = take_string(
      [&](char** out) { return shf_coefficients_json(pair.get(), theorem_names().at(theorem), n, out); });
  json doc = json::parse(raw);
  json out = {{"family", args.family}, {"params", params_json(args)}, {"theorem", theorem}, {"n", n},
              {"a", doc["a"]}, {"b", doc["b"]}, {"c", doc["c"]}};
  std::cout << out.dump() << '\n';
  return kExitPass;
}

struct CheckResult {
  bool pass = false;
  std::string line;
  std::optional<CommandError> error;
};

// Runs the checks on a small worker pool; results keep submission order.
std::vector<CheckResult> run_parallel(const std::vector<std::function<CheckResult()>>& checks) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) {
        try {
          results[i] = checks[i]();
        } catch (const CommandError& e) {
          results[i].error = e;
        }
      }
    });
  for (auto& t : pool) t.join();
  return results;
}

struct VerifyOptions {
  std::string theorem;
  bool all = false;
  bool properties = false;
  bool lemma = false;
  bool corollaries = false;
};

int run_verify(const FamilyArgs& args, std::size_t n, const VerifyOptions& opt) {
  const auto pair_owner = make_pair(args, order_for(n));
  const shf_pair* pair = pair_owner.get();
  const bool color = use_color();

  std::vector<std::string> theorems;
  if (!opt.theorem.empty())
    theorems.push_back(opt.theorem);
  else if (opt.all || (!opt.properties && !opt.lemma && !opt.corollaries))
    for (const auto& [name, id] : theorem_names()) theorems.push_back(name);

  auto residual_line = [color](const std::string& label, std::size_t d, auto&& call) {
    char* residual = nullptr;
    int is_zero = 0;
    const shf_status s = call(&residual, &is_zero);
    OwnedString owned(residual);
    check(s);
    CheckResult r;
    r.pass = is_zero == 1;
    r.line = styled(r.pass, color) + " " + label + " n=" + std::to_string(d);
    if (!r.pass) r.line += " residual=" + std::string(residual);
    return r;
  };

  std::vector<std::function<CheckResult()>> checks;
  for (const auto& t : theorems)
    for (std::size_t d = 0; d <= n; ++d)
      checks.emplace_back([=] {
        return residual_line("theorem=" + t, d, [&](char** r, int* z) {
          return shf_residual(pair, theorem_names().at(t), d, r, z);
        });
      });
  if (opt.corollaries) {
    static const std::vector<std::pair<std::string, shf_corollary>> corollaries = {
        {"2.1", SHF_COROLLARY_DIFFERENTIAL},
        {"3.1", SHF_COROLLARY_DERIVATIVE_RECURRENCE},
        {"3.2", SHF_COROLLARY_SCALED_DUPLICATE},
        {"3.3", SHF_COROLLARY_BINOMIAL_RECURRENCE}};
    for (const auto& [name, which] : corollaries)
      for (std::size_t d = 0; d <= n; ++d)
        checks.emplace_back([=, name = name, which = which] {
          return residual_line("corollary=" + name, d, [&](char** r, int* z) {
            return shf_corollary_residual(pair, which, d, r, z);
          });
        });
  }
  auto bool_check = [color](const std::string& label, auto&& call) {
    int holds = 0;
    check(call(&holds));
    return CheckResult{holds == 1, styled(holds == 1, color) + " " + label, std::nullopt};
  };
  if (opt.lemma)
    checks.emplace_back([=] {
      return bool_check("lemma n=" + std::to_string(n), [&](int* holds) { return shf_lemma_check(pair, n, holds); });
    });
  if (opt.properties) {
    static const std::vector<std::pair<std::string, shf_property>> properties = {
        {"linearity", SHF_PROPERTY_LINEARITY},
        {"pascal-product", SHF_PROPERTY_PASCAL_PRODUCT},
        {"wronskian-product", SHF_PROPERTY_WRONSKIAN_PRODUCT},
        {"composition", SHF_PROPERTY_COMPOSITION}};
    for (const auto& [name, prop] : properties)
      checks.emplace_back([=, name = name, prop = prop] {
        return bool_check("property=" + name + " n=" + std::to_string(n),
                          [&](int* holds) { return shf_property_check(pair, prop, n, holds); });
      });
    checks.emplace_back([=] {
      return bool_check("convolution n=" + std::to_string(n),
                        [&](int* holds) { return shf_convolution_check(pair, n, holds); });
    });
  }

  const auto results = run_parallel(checks);
  bool all_pass = true;
  for (const auto& r : results) {
    if (r.error) throw *r.error;
    all_pass = all_pass && r.pass;
    std::cout << r.line << '\n';
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_audit(std::size_t n) {
  std::cout << take_string([&](char** out) { return shf_audit_json(n, out); }) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sheffer, Appell and Sheffer-Appell polynomial sequences in exact arithmetic"};
  app.require_subcommand(1);

  std::string families_format = "table";
  auto* families = app.add_subcommand("families", "List the catalog of generating pairs");
  families->add_option("--format", families_format)->check(CLI::IsMember({"json", "table"}));

  auto add_family = [](CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--family", fa.family, "Catalog family name")->required();
    cmd->add_option("--param", fa.params, "Family parameter name=value (exact rational)")->take_all()
        ->allow_extra_args(false);
  };

  FamilyArgs gen_args;
  std::size_t gen_n = 0;
  std::string gen_kind = "sheffer-appell";
  std::string gen_format = "json";
  auto* gen = app.add_subcommand("gen", "Emit polynomials of degree 0..N");
  add_family(gen, gen_args);
  gen->add_option("--n", gen_n, "Maximum degree")->required();
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"sheffer", "appell", "sheffer-appell"}));
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "csv", "latex"}));

  FamilyArgs coeffs_args;
  std::size_t coeffs_n = 0;
  std::string coeffs_theorem;
  auto* coeffs = app.add_subcommand("coeffs", "Emit the (a, b, c) coefficient vectors of a theorem");
  add_family(coeffs, coeffs_args);
  coeffs->add_option("--theorem", coeffs_theorem)->required()->check(CLI::IsMember({"2.1", "3.1", "3.2", "3.3"}));
  coeffs->add_option("--n", coeffs_n, "Maximum index k")->required();

  FamilyArgs verify_args;
  std::size_t verify_n = 8;
  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check residuals, the lemma and matrix properties");
  add_family(verify, verify_args);
  verify->add_option("--n", verify_n, "Maximum degree (default 8)");
  auto* theorem_opt =
      verify->add_option("--theorem", verify_opt.theorem)->check(CLI::IsMember({"2.1", "3.1", "3.2", "3.3"}));
  auto* all_opt = verify->add_flag("--all", verify_opt.all, "All four theorems");
  theorem_opt->excludes(all_opt);
  verify->add_flag("--properties", verify_opt.properties, "Pascal/Wronskian properties and convolution");
  verify->add_flag("--lemma", verify_opt.lemma, "Matrix factorization of the derivative table");
  verify->add_flag("--corollaries", verify_opt.corollaries, "Associated-sequence corollaries (l = 1 only)");

  std::size_t audit_n = 6;
  auto* audit = app.add_subcommand("audit", "Audit the published closed-form identities");
  audit->add_option("--n", audit_n, "Maximum degree checked (>= 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*families) return run_families(families_format);
    if (*gen) return run_gen(gen_args, gen_n, gen_kind, gen_format);
    if (*coeffs) return run_coeffs(coeffs_args, coeffs_n, coeffs_theorem);
    if (*verify) return run_verify(verify_args, verify_n, verify_opt);
    if (*audit) return run_audit(audit_n);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    if (e.exit_code == kExitUsage) std::cerr << app.help();
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
