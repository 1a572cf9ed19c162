#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cointerval/cli/scenarios.hpp"
#include "cointerval/cli/suite.hpp"
#include "cointerval/error.hpp"

namespace {

using namespace cointerval;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks cointerval axioms and reproduces reference scenarios."};
  app.set_version_flag("--version", std::string(cli::kToolName) + " " + cli::kToolVersion);
  app.require_subcommand(1);

  cli::SuiteConfig config;
  std::string input_path, out_path;
  auto* verify = app.add_subcommand("verify", "Run checks on one interval");
  verify->add_option("--context", config.context, "fincat or chaincat")->capture_default_str();
  verify->add_option("--ring", config.ring, "Z, Q or Zmod:n (chaincat)")->capture_default_str();
  verify->add_option("--interval", config.interval, "Built-in interval name");
  verify->add_option("--check", config.checks, "Check to run; repeatable")->allow_extra_args(false);
  verify->add_option("--depth-bound", config.depth_bound, "Rewriting depth bound")
      ->capture_default_str();
  verify->add_option("--cap", config.cap, "Enumeration and normal-form cap")
      ->capture_default_str();
  verify->add_option("--coeff-box", config.coeff_box, "Coefficient box for chain maps")
      ->capture_default_str();
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("input", input_path, "Interval description file");

  std::vector<std::string> names;
  std::string golden_dir;
  bool write_golden = false;
  auto* repro = app.add_subcommand("reproduce", "Run reference scenarios against golden payloads");
  repro->add_option("scenario", names, "Scenario names (default: all)");
  repro->add_option("--golden", golden_dir, "Directory holding <scenario>.json");
  repro->add_flag("--write-golden", write_golden, "Overwrite the golden payloads");
  repro->add_option("--out", out_path, "Write the combined report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  try {
    if (verify->parsed()) {
      std::optional<std::string> input;
      if (!input_path.empty()) input = read_file(input_path);
      config.defaults_when_empty = true;
      const cli::Report r = cli::run_suite(config, input);
      emit(out_path, cli::render(r));
      return cli::exit_code(r.status);
    }

    if (names.empty()) names = cli::scenario_names();
    nlohmann::json summary = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();
    cocat::Status overall = cocat::Status::Pass;
    for (const auto& name : names) {
      const cli::Report r = cli::reproduce(name);
      const std::string payload = cli::render_payload(r);
      const std::string path =
          golden_dir.empty() ? cli::golden_path(name) : golden_dir + "/" + name + ".json";
      std::string golden = "written";
      if (write_golden) {
        write_file(path, payload);
      } else {
        std::ifstream in(path);
        golden = !in ? "missing" : read_file(path) == payload ? "match" : "mismatch";
      }
      const bool ok = r.status == cocat::Status::Pass && golden != "mismatch" && golden != "missing";
      summary[name] = {{"verdict", cocat::to_string(r.status)}, {"golden", golden}};
      timing[name] = r.timing;
      if (!ok) overall = cocat::Status::Fail;
      std::cerr << (ok ? "PASS " : "FAIL ") << name << " (golden " << golden << ")\n";
    }
    nlohmann::json out = {{"report", {{"scenarios", summary}, {"verdict", cocat::to_string(overall)}}},
                          {"timing", timing}};
    emit(out_path, out.dump(2) + "\n");
    return cli::exit_code(overall);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const UnsupportedRing& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const UnknownScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kFail;
  }
}
