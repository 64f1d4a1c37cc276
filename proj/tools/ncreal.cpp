// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ncreal/cli.hpp"

int main(int argc, char **argv)
{
  return ncreal::cli::run(argc, argv, std::cout, std::cerr);
}
