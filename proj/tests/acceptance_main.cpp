#include <iostream>

#include "dichroma/selftest.hpp"

int main() {
    const auto result = dichroma::run_selftest(dichroma::SelftestLevel::Full);
    std::cout << result.report;
    return result.all_pass ? 0 : 1;
}
