// Runs the ten acceptance criteria and prints one line per criterion.
#include <iostream>

#include "latdeg/cli/reproduce.hpp"

int main() {
  latdeg::AcceptanceSession session;
  int failed = 0;
  for (int id = 1; id <= latdeg::AcceptanceSession::count; ++id) {
    latdeg::CriterionResult r = session.run(id);
    std::cout << latdeg::format_line(r) << "  [" << r.seconds << " s]" << std::endl;
    failed += !r.pass;
  }
  std::cout << (latdeg::AcceptanceSession::count - failed) << "/" << latdeg::AcceptanceSession::count
            << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
