#include <csignal>
#include <iostream>

#include "cli.hpp"
#include "commands.hpp"

namespace {

extern "C" void handle_interrupt(int) { ssa::cli::stop_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, handle_interrupt);
  return ssa::cli::run_cli(argc, argv, std::cout, std::cerr);
}
