#include "glnrep/cli.hpp"

#include <iostream>
#include <variant>

int main(int argc, char** argv) {
  auto parsed = glnrep::parse_cli(argc, argv, std::cout, std::cerr);
  if (auto* status = std::get_if<int>(&parsed)) return *status;
  return glnrep::run(std::get<glnrep::CliConfig>(parsed), std::cout, std::cerr);
}
