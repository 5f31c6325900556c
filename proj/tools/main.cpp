#include "cli.hpp"

int main(int argc, char** argv) {
  return eraser::cli::run_command(argc, argv);
}
