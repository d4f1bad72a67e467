#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ccspace/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Checks cognitive-consequence scenarios"};
  app.set_version_flag("--version", std::string(ccspace::kToolVersion));

  std::string command;
  std::string scenario;
  std::string format = "text";
  std::string output;
  ccspace::RunOptions options;

  app.add_option("command", command, "validate, closures, cct, theorems, limits, blackhole, families, environment or all")
      ->required()
      ->check(CLI::IsMember(ccspace::commands()));
  app.add_option("scenario", scenario, "scenario file")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict", options.strict, "exit 2 on any failed check or discrepancy");
  app.add_option("--seed", options.seed, "seed for sampled checks");
  app.add_option("--epsilon", options.epsilon, "single cognitive threshold, replaces the scenario's list");
  app.add_option("--cap", options.cap, "enumeration cap");
  app.add_option("-o,--output", output, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  options.format = format == "structured" ? ccspace::ReportFormat::structured : ccspace::ReportFormat::text;

  const ccspace::RunResult result = ccspace::run(command, scenario, options);
  if (!result.output.empty()) {
    if (output.empty()) {
      std::cout << result.output;
      std::cout.flush();
      if (!std::cout) return 3;
    } else {
      std::ofstream out(output, std::ios::binary);
      out << result.output;
      out.close();
      if (!out) {
        std::cerr << "ccspace: cannot write '" << output << "'\n";
        return 3;
      }
    }
  }
  if (!result.error.empty()) std::cerr << "ccspace: " << result.error << "\n";
  return result.exit_code;
}
