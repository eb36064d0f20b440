#include "cli.hpp"

#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto read_stdin = []() -> std::optional<std::string> {
    std::string text(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>{});
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;
    return text;
  };

  const cmvar::cli::CommandResult r = cmvar::cli::run(args, read_stdin);
  if (!r.help.empty()) {
    std::cout << r.help;
    return 0;
  }
  for (const auto& d : r.diagnostics) std::cerr << "cmvar: " << d << '\n';
  std::cout << r.payload.dump() << '\n';
  return cmvar::cli::exit_code(r.status);
}
