// Runs the eleven acceptance checks and prints one line per check.

#include <iostream>

#include "m36/verify.hpp"

int main() {
  const auto rep = m36::run_verify("acceptance", m36::Mode::Exact);
  std::cout << rep.to_text();
  std::cout << (rep.pass() ? "acceptance: all checks pass\n" : "acceptance: FAILED\n");
  return rep.pass() ? 0 : 1;
}
