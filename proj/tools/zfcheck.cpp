#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zf/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zf::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int default_jobs() {
  if (const char* env = std::getenv("ZF_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zfcheck: exact verification of contact-conic arrangements on quartic elliptic surfaces"};
  app.require_subcommand(1);

  std::string scenario_file, builtin, json_out, grid, certificate;
  int jobs = default_jobs();
  bool quiet = false;

  auto add_common = [&](CLI::App* sub) {
    auto* src = sub->add_option("--scenario", scenario_file, "scenario file (.zfs)")->check(CLI::ExistingFile);
    sub->add_option("--builtin", builtin, "built-in scenario name")->excludes(src);
    sub->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
    sub->add_option("--jobs", jobs, "worker threads (default: ZF_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_flag("-q,--quiet", quiet, "suppress the text report");
  };

  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (const auto& name : zf::kCheckNames) {
    auto* sub = app.add_subcommand(name, "run the " + name + " check");
    add_common(sub);
    if (name == "sweep") sub->add_option("--param-grid", grid, "parameter grid, e.g. a=0:3 or a=0,1,1/2");
    subs.push_back({sub, name});
  }
  auto* run = app.add_subcommand("run", "run the checks listed in the scenario");
  add_common(run);
  run->add_option("--param-grid", grid, "parameter grid for sweep checks");
  auto* vc = app.add_subcommand("verify-certificate", "re-verify a sweep certificate");
  vc->add_option("certificate", certificate, "certificate or report JSON")->required()->check(CLI::ExistingFile);
  vc->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
  vc->add_flag("-q,--quiet", quiet, "suppress the text report");
  auto* list = app.add_subcommand("list", "list built-in scenarios and quartics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& n : zf::builtin_scenario_names()) std::cout << "scenario " << n << "\n";
    for (const auto& n : zf::builtin_quartic_names()) std::cout << "quartic  " << n << "\n";
    return 0;
  }

  try {
    zf::RunOptions opt;
    opt.jobs = jobs;
    if (!grid.empty()) opt.param_grid = grid;

    zf::Scenario sc;
    std::vector<std::string> checks;
    if (vc->parsed()) {
      opt.certificate = nlohmann::json::parse(read_file(certificate));
      checks = {"verify-certificate"};
    } else {
      if (scenario_file.empty() == builtin.empty()) throw zf::InputError("give exactly one of --scenario or --builtin");
      sc = builtin.empty() ? zf::parse_scenario(read_file(scenario_file)) : zf::builtin_scenario(builtin);
      if (run->parsed()) {
        checks = sc.checks;
      } else {
        for (const auto& [sub, name] : subs)
          if (sub->parsed()) checks = {name};
      }
    }

    zf::Workspace w(sc);
    std::vector<zf::CheckResult> results;
    int code = 0;
    for (const auto& check : checks) {
      auto t0 = std::chrono::steady_clock::now();
      zf::CheckResult r;
      try {
        r = zf::run_check(w, check, opt);
      } catch (const std::exception& e) {
        std::cerr << "check " << check << ": " << e.what() << "\n";
        throw;
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!quiet)
        std::cout << "== " << check << " (" << std::fixed << std::setprecision(2) << secs << " s)\n" << r.text;
      if (r.exit_code != 0 && code == 0) code = r.exit_code;
      results.push_back(std::move(r));
    }

    if (!json_out.empty()) {
      nlohmann::json doc = zf::report_document(sc, results);
      doc["timestamp"] = utc_now();
      if (json_out == "-") {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream out(json_out);
        if (!out) throw zf::InputError("cannot write '" + json_out + "'");
        out << doc.dump(2) << "\n";
      }
    }
    return code;
  } catch (const zf::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const zf::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
