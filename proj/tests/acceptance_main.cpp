// Runs the full acceptance suite and fails unless every criterion passes.
#include "khi/acceptance.hpp"

#include <iostream>

int main() { return khi::run_acceptance(std::cout) ? 0 : 1; }
