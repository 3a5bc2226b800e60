#include "geoverify/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geoverify/checks.hpp"

namespace geoverify {

namespace {

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* option) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError(std::string(option) + ": not a number: '" + item + "'");
    }
    if (used != item.size()) throw ConfigError(std::string(option) + ": not a number: '" + item + "'");
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw ConfigError(std::string(option) + ": expected " + std::to_string(expected) +
                      " comma-separated values, got " + std::to_string(values.size()));
  }
  return values;
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(std::string(source) + ": invalid seed '" + text + "'");
  }
  if (used != text.size()) throw ConfigError(std::string(source) + ": invalid seed '" + text + "'");
  return v;
}

}  // namespace

int verify_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify the left-invariant geometry of F^4 at sampled points", "verify"};
  std::string check;
  std::string seed_text;
  std::string box_text;
  std::string constants_text;
  std::string json_path;
  RunConfig cfg;
  std::optional<double> lambda;

  app.add_option("check", check, "check name, or 'all'")->required();
  app.add_option("--seed", seed_text, "sampling seed (fallback: GEOVERIFY_SEED, then 0)");
  app.add_option("--points", cfg.points, "points sampled per check")->capture_default_str();
  app.add_option("--tol", cfg.tol, "pass threshold on the max residual")->capture_default_str();
  app.add_option("--box", box_text, "xmin,xmax,ymin,ymax,smin,smax,tmin,tmax");
  app.add_option("--c", constants_text, "soliton constants c1,c2,c3,c4,c5");
  app.add_option("--lambda", lambda, "soliton constant (default -6)");
  app.add_option("--json", json_path, "write newline-delimited JSON reports to PATH ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "verify: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::vector<CheckReport> reports;
  try {
    if (!seed_text.empty()) {
      cfg.seed = parse_seed(seed_text, "--seed");
    } else if (const char* env = std::getenv("GEOVERIFY_SEED"); env != nullptr && *env != '\0') {
      cfg.seed = parse_seed(env, "GEOVERIFY_SEED");
    }
    if (!box_text.empty()) {
      const auto b = parse_list(box_text, 8, "--box");
      cfg.box.x = {b[0], b[1]};
      cfg.box.y = {b[2], b[3]};
      cfg.box.s = {b[4], b[5]};
      cfg.box.t = {b[6], b[7]};
    }
    if (!constants_text.empty()) {
      const auto c = parse_list(constants_text, 5, "--c");
      cfg.soliton_constants = std::array<double, 5>{c[0], c[1], c[2], c[3], c[4]};
    }
    if (lambda) cfg.lambda = *lambda;
    cfg.validate();

    if (check == "all") {
      reports = run_all(cfg);
    } else {
      reports.push_back(run_suite(check, cfg));
    }
  } catch (const UnknownCheck& e) {
    err << "verify: " << e.what() << "\navailable checks: all";
    for (const auto& n : check_names()) err << ' ' << n;
    err << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "verify: configuration error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (json_path == "-") {
    for (const auto& r : reports) out << to_json_line(r);
  } else {
    for (const auto& r : reports) out << summary_line(r) << '\n';
    if (!json_path.empty()) {
      std::ofstream file(json_path);
      if (!file) {
        err << "verify: cannot write " << json_path << '\n';
        return kExitUsage;
      }
      for (const auto& r : reports) file << to_json_line(r);
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace geoverify
