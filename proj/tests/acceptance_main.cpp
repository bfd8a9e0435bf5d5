#include "vdw/acceptance.hpp"

#include <iostream>

int main() {
  const auto results = vdw::run_acceptance();
  std::cout << vdw::format_report(results);
  return vdw::all_passed(results) ? 0 : 1;
}
