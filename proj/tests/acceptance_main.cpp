#include "quivar/acceptance.hpp"

#include <iostream>

int main() {
  auto results = quivar::run_acceptance(std::cout);
  return quivar::acceptance_exit_code(results);
}
