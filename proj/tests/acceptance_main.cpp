// One line per acceptance criterion; exit status 0 iff all pass.
#include <iostream>

#include "trefoil/acceptance.hpp"

int main() {
  auto results = trefoil::run_acceptance({}, [](const trefoil::CriterionResult& r) {
    std::cout << trefoil::format_result(r) << std::endl;
  });
  return trefoil::all_passed(results) ? 0 : 1;
}
