#include <iostream>
#include <string>

#include "quotser/verify.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  return quotser::run_verification(filter, std::cout);
}
