#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "adialab/errors.hpp"
#include "adialab/experiment.hpp"

using namespace adialab::experiment;

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  ExperimentConfig config;
  try {
    auto parsed = parse_command_line(args, std::cout);
    if (!parsed) return 0;
    config = *parsed;
  } catch (const ConfigError& e) {
    std::cerr << "adialab: " << e.what() << "\n";
    return 2;
  }
  try {
    const auto result = run_experiment(config);
    write_outputs(config, result);
    std::cout << render_report(result);
    for (const auto& f : result.failures) std::cerr << "adialab: convergence failure in " << f << "\n";
    return exit_code(result);
  } catch (const ConfigError& e) {
    std::cerr << "adialab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "adialab: " << e.what() << "\n";
    return 3;
  }
}
