#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tgkz/report.hpp"

namespace {

int report_error(const tgkz::Error& e) {
  std::cerr << "error: " << e.qualified_code() << ": " << e.what() << "\n";
  return tgkz::exit_code_for(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GKZ systems over groups with torsion"};
  std::string command;
  std::string spec_path;
  std::string out_path;
  std::optional<std::size_t> bound;
  unsigned threads = 1;
  app.add_option("command", command, "check | ideals | primes | module | system | rank | dual | report")
      ->required()
      ->check(CLI::IsMember(tgkz::command_names()));
  app.add_option("--spec", spec_path, "problem specification (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--bound", bound, "binomial degree bound for presentations");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : tgkz::kExitParse;
  }

  std::ifstream in(spec_path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    auto spec = tgkz::parse_spec(buffer.str());
    auto result = tgkz::run(spec, *tgkz::parse_command(command), tgkz::RunOptions{threads, bound});
    if (out_path.empty()) {
      std::cout << result.json;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return tgkz::kExitInternal;
      }
      out << result.json;
    }
    return result.exit_code;
  } catch (const tgkz::Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tgkz::kExitInternal;
  }
}
