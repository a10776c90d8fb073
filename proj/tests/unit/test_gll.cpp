#include <doctest.h>
#include "semshell/gll.hpp"
TEST_CASE("placeholder") { CHECK(semshell::gll_rule(1).nodes[0] == -1.0); }
