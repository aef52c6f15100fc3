#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "univalent/experiment.hpp"

namespace {

using nlohmann::json;

// Rewrites `key=value` tokens (including Greek parameter names) into
// `--key value` so both spellings reach the option parser.
std::vector<std::string> normalize_args(int argc, char** argv) {
  static const std::map<std::string, std::string> aliases{
      {"α", "alpha"}, {"β", "beta"}, {"λ", "lambda"}, {"μ", "mu"}, {"γ", "gamma"}, {"δ", "delta"},
      {"η", "eta"}};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    const auto eq = tok.find('=');
    if (tok.rfind("-", 0) != 0 && eq != std::string::npos && eq > 0) {
      std::string key = tok.substr(0, eq);
      if (const auto it = aliases.find(key); it != aliases.end()) key = it->second;
      out.push_back("--" + key);
      out.push_back(tok.substr(eq + 1));
      continue;
    }
    if (tok.rfind("--", 0) == 0) {
      const std::string body = tok.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
      if (const auto it = aliases.find(body); it != aliases.end()) {
        tok = "--" + it->second + (eq == std::string::npos ? "" : tok.substr(eq));
      }
    }
    out.push_back(tok);
  }
  std::reverse(out.begin(), out.end());  // CLI11 consumes a reversed vector
  return out;
}

template <class T>
CLI::Option* bind_option(CLI::App& app, json& patch, const std::string& names, const std::string& pointer,
                  const std::string& help) {
  return app.add_option_function<T>(
      names, [&patch, pointer](const T& v) { patch[json::json_pointer(pointer)] = v; }, help);
}

void write_output(const univalent::RunSummary& s, const std::optional<std::string>& path) {
  const bool csv = s.config.format == "csv" && !s.csv.empty();
  const std::string text = csv ? s.csv : univalent::summary_json(s).dump(2) + "\n";
  if (path) {
    std::ofstream os(*path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + *path);
    os << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient criteria for starlike, convex, close-to-convex and prestarlike partial sums "
               "and Cesaro means, with numerical verification on the unit disk."};
  app.require_subcommand(1);
  json patch = json::object();
  std::string config_path;

  app.add_option("--config", config_path, "JSON config file; command-line options override it");
  bind_option<std::string>(app, patch, "--out", "/out", "write the result here instead of stdout");
  bind_option<std::string>(app, patch, "--format", "/format", "json or csv");
  bind_option<std::vector<double>>(app, patch, "--grid-radii", "/grid/radii", "comma-separated disk radii")
      ->delimiter(',');
  bind_option<std::size_t>(app, patch, "--grid-angles", "/grid/angles", "angles per disk radius");
  bind_option<double>(app, patch, "--tol", "/tolerance", "verifier margin tolerance");
  bind_option<std::size_t>(app, patch, "--truncate", "/truncate", "degree used for named generators");
  bind_option<std::uint64_t>(app, patch, "--seed", "/seed", "seed for randomized suites");
  app.add_flag_callback("--proof-ranges", [&] { patch["proof_ranges"] = true; },
                        "accept alpha <= 6/(lambda+2), beta <= 6/(mu+2) in Cesaro criteria");
  app.add_flag_callback("--no-timestamp", [&] { patch["timestamp"] = false; },
                        "omit timestamp and wall time for byte-identical output");
  app.add_flag_callback("--cross-verify", [&] { patch["cross_verify"] = true; },
                        "also run the matching disk verifier (check)");

  bind_option<std::string>(app, patch, "--thm,--criterion", "/criterion", "criterion name or number, e.g. 2.2");
  bind_option<std::string>(app, patch, "--verifier", "/verifier", "class to verify");
  bind_option<std::string>(app, patch, "--suite", "/suite", "reproduction suite");
  bind_option<double>(app, patch, "--alpha", "/params/alpha", "weight shift alpha");
  bind_option<double>(app, patch, "--beta", "/params/beta", "weight shift beta");
  bind_option<double>(app, patch, "--lambda", "/params/lambda", "weight exponent lambda");
  bind_option<double>(app, patch, "--mu", "/params/mu", "weight exponent mu");
  bind_option<double>(app, patch, "--gamma", "/params/gamma", "class order gamma");
  bind_option<double>(app, patch, "--b", "/b", "Cesaro parameter b");
  bind_option<double>(app, patch, "--c", "/c", "Cesaro parameter c");
  bind_option<double>(app, patch, "--delta", "/delta", "classical Cesaro order (b = 1 + delta, c = 1)");
  bind_option<std::size_t>(app, patch, "--n", "/n", "Cesaro index or trigonometric degree");
  bind_option<std::string>(app, patch, "--input,--file", "/input_file", "coefficients from a JSON or CSV file");
  bind_option<std::string>(app, patch, "--coeffs,--coefficients", "/coefficients", "inline coefficients a_1,a_2,...");
  bind_option<std::string>(app, patch, "--gen,--generator", "/generator",
                    "vietoris, inverse-square, inverse-cube, log-series or a catalog function");
  bind_option<std::string>(app, patch, "--g,--reference", "/reference", "comparison function for close-to-convex");
  bind_option<double>(app, patch, "--eta", "/eta", "rotation eta, |eta| < pi/2");
  bind_option<double>(app, patch, "--order", "/order", "close-to-convex order");
  bind_option<std::string>(app, patch, "--kind", "/scan_kind", "sine or cosine");
  bind_option<double>(app, patch, "--b0", "/b0", "constant coefficient of the trigonometric sum");
  bind_option<std::size_t>(app, patch, "--theta-count", "/theta_count", "interior grid points on (0, pi)");
  bind_option<std::string>(app, patch, "--functional", "/functional", "starlike, convex or rgamma");
  bind_option<double>(app, patch, "--radius", "/radius", "circle radius for curve");
  bind_option<std::size_t>(app, patch, "--angles", "/curve_angles", "points on the curve");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"check", "evaluate a coefficient criterion"},
      {"verify", "check class membership on a disk grid"},
      {"scan", "positivity scan of a cosine or sine sum"},
      {"cesaro", "apply a generalized Cesaro mean"},
      {"reproduce", "run a reproduction suite"},
      {"curve", "class functional along a circle, for plotting"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name == "verify") {
      sub->add_option_function<std::string>(
          "class", [&patch](const std::string& v) { patch["verifier"] = v; }, "class to verify");
    } else if (name == "reproduce") {
      sub->add_option_function<std::string>(
          "suite", [&patch](const std::string& v) { patch["suite"] = v; }, "suite name or all");
    } else if (name == "check") {
      sub->add_option_function<std::string>(
          "criterion", [&patch](const std::string& v) { patch["criterion"] = v; }, "criterion name or number");
    }
  }

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    json merged = json::object();
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw std::invalid_argument("cannot read config " + config_path);
      merged = json::parse(is);
      if (!merged.is_object()) throw std::invalid_argument("config must be a JSON object");
    }
    merged.merge_patch(patch);
    merged["task"] = app.get_subcommands().front()->get_name();
    const auto config = merged.get<univalent::ExperimentConfig>();
    const auto summary = univalent::run_experiment(config);
    write_output(summary, config.out);
    if (summary.consistency == univalent::Consistency::kInconsistent) {
      std::cerr << "inconsistent: criterion satisfied but verification failed\n";
    }
    return summary.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
