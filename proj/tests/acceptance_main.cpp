// Acceptance battery: one pass/fail line per criterion, exit 0 iff all pass.

#include <iostream>

#include "srho/suite.hpp"

int main() {
    return srho::run_acceptance(std::cout) ? 0 : 1;
}
