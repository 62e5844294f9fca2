#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orientalis/anodyne.hpp"
#include "orientalis/certificate.hpp"
#include "orientalis/json_io.hpp"
#include "orientalis/pasting.hpp"

namespace {

using namespace orientalis;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;

nlohmann::json read_stdin_json() {
  nlohmann::json j;
  std::cin >> j;
  return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << std::endl; }

std::optional<std::string> fixture_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ORIENTALIS_FIXTURES")) return std::string(env);
  return std::nullopt;
}

int cmd_check(int n) {
  Chain x = chain_from_json(read_stdin_json());
  if (n >= 0 && x.target_dim() != n) {
    emit({{"error", "target mismatch"}, {"expected", n}, {"got", x.target_dim()}});
    return kExitInvalidInput;
  }
  if (auto violation = check_membership(x)) {
    emit({{"member", false}, {"violation", violation->describe()}});
    return kExitVerificationFailed;
  }
  OSimplex s = OSimplex::checked(x);
  emit({{"member", true},
        {"marked", s.marked()},
        {"in_A", s.in_A()},
        {"vertices", s.vertices()}});
  return 0;
}

nlohmann::json read_file_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  nlohmann::json j;
  f >> j;
  return j;
}

int cmd_binary_op(bool do_fill, int k, const std::string& x_path,
                  const std::string& y_path) {
  Chain x, y;
  if (x_path.empty()) {
    // single stdin object {"x":…, "y":…, "k":…}
    nlohmann::json j = read_stdin_json();
    x = chain_from_json(j.at("x"));
    y = chain_from_json(j.at("y"));
    k = j.at("k").get<int>();
  } else {
    x = chain_from_json(read_file_json(x_path));
    y = chain_from_json(read_file_json(y_path));
  }
  Chain out = do_fill ? fill(x, y, k) : paste(x, y, k);
  emit({{"result", to_json(out)}, {"pretty", to_string(out)}});
  return 0;
}

int cmd_enumerate(int m, int n, int bound, const std::string& strategy, int jobs,
                  bool freeze, const std::string& out_dir) {
  EnumReport report = run_enumeration(m, n, bound, strategy, jobs);
  nlohmann::json j = to_json(report);
  emit(j);
  if (freeze) {
    auto dir = fixture_dir(out_dir);
    if (!dir) {
      std::cerr << "--freeze needs --out or ORIENTALIS_FIXTURES\n";
      return kExitInvalidInput;
    }
    std::string path = *dir + "/enum_n" + std::to_string(n) + "_m" +
                       std::to_string(m) + ".json";
    std::ofstream f(path);
    f << j.dump(2) << '\n';
    if (!f) {
      std::cerr << "cannot write " << path << '\n';
      return kExitInvalidInput;
    }
  }
  if (report.strategy == "both" && !report.strategies_agree) {
    return kExitVerificationFailed;
  }
  return 0;
}

int cmd_certify(int n, int max_dim, int jobs, const std::string& out_path) {
  Oracle oracle(2, jobs);
  Certificate cert = generate_certificate(n, max_dim, oracle);
  if (out_path.empty()) {
    write_certificate(std::cout, cert);
  } else {
    std::ofstream f(out_path);
    write_certificate(f, cert);
    if (!f) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitInvalidInput;
    }
    emit({{"steps", cert.steps.size()}, {"out", out_path}});
  }
  return 0;
}

int cmd_verify(int n, int max_dim, int jobs, const std::string& cert_path) {
  std::ifstream f(cert_path);
  if (!f) {
    std::cerr << "cannot read " << cert_path << '\n';
    return kExitInvalidInput;
  }
  Certificate cert = read_certificate(f);
  if ((n >= 0 && cert.n != n) || (max_dim >= 0 && cert.max_dim != max_dim)) {
    emit({{"error", "certificate header does not match the flags"}});
    return kExitInvalidInput;
  }
  Oracle oracle(2, jobs);
  ReplayReport report = replay(cert, oracle);
  emit(to_json(report));
  return report.ok() ? 0 : kExitVerificationFailed;
}

int cmd_theorem(int n, int max_dim, int jobs) {
  Oracle oracle(2, jobs);
  Certificate cert = generate_certificate(n, max_dim, oracle);
  ReplayReport report = replay(cert, oracle);
  nlohmann::json j = to_json(report);
  j["n"] = n;
  j["max_dim"] = max_dim;
  j["steps"] = cert.steps.size();
  if (n >= 1) {
    JoinReport join = verify_A_join_structure(n, max_dim, oracle);
    j["join_structure"] = to_json(join);
    if (!join.ok) {
      emit(j);
      return kExitVerificationFailed;
    }
  }
  emit(j);
  return report.ok() ? 0 : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of the orientals O(-,n)"};
  app.require_subcommand(1);

  int n = -1, m = -1, max_dim = -1, bound = 2, jobs = 1;
  std::string strategy = "search", out_path, cert_path;
  bool freeze = false;

  auto* check = app.add_subcommand("check", "membership of a chain (stdin JSON)");
  check->add_option("--n", n, "expected target ordinal");

  int paste_k = 1;
  std::string x_path, y_path;
  auto* paste_cmd = app.add_subcommand("paste", "paste x and y along k");
  auto* fill_cmd = app.add_subcommand("fill", "filler of x and y along k");
  for (auto* cmd : {paste_cmd, fill_cmd}) {
    cmd->add_option("--k", paste_k, "pasting index");
    cmd->add_option("x", x_path, "chain JSON file (omit to read stdin)");
    cmd->add_option("y", y_path, "chain JSON file");
  }

  auto* enumerate = app.add_subcommand("enumerate", "enumerate O(m,n)");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--m", m)->required();
  enumerate->add_option("--bound", bound);
  enumerate->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"search", "closure", "both"}));
  enumerate->add_option("--jobs", jobs);
  enumerate->add_flag("--freeze", freeze, "write a regression fixture");
  enumerate->add_option("--out", out_path, "fixture directory");

  auto* certify = app.add_subcommand("certify", "generate an anodyne certificate");
  certify->add_option("--n", n)->required();
  certify->add_option("--max-dim", max_dim)->required();
  certify->add_option("--jobs", jobs);
  certify->add_option("--out", out_path, "certificate path (default stdout)");

  auto* verify = app.add_subcommand("verify", "replay a certificate");
  verify->add_option("--n", n);
  verify->add_option("--max-dim", max_dim);
  verify->add_option("--jobs", jobs);
  verify->add_option("cert", cert_path, "certificate file")->required();

  auto* theorem = app.add_subcommand("theorem", "certify + verify + oracle comparison");
  theorem->add_option("--n", n)->required();
  theorem->add_option("--max-dim", max_dim)->required();
  theorem->add_option("--jobs", jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(n);
    if (paste_cmd->parsed()) return cmd_binary_op(false, paste_k, x_path, y_path);
    if (fill_cmd->parsed()) return cmd_binary_op(true, paste_k, x_path, y_path);
    if (enumerate->parsed())
      return cmd_enumerate(m, n, bound, strategy, jobs, freeze, out_path);
    if (certify->parsed()) return cmd_certify(n, max_dim, jobs, out_path);
    if (verify->parsed()) return cmd_verify(n, max_dim, jobs, cert_path);
    if (theorem->parsed()) return cmd_theorem(n, max_dim, jobs);
  } catch (const std::invalid_argument& e) {
    emit({{"error", e.what()}, {"kind", "invalid input"}});
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    emit({{"error", e.what()}, {"kind", "invalid input"}});
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    emit({{"error", e.what()}, {"kind", "internal"}});
    return kExitVerificationFailed;
  }
  return kExitInvalidInput;
}
