#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "fgl/genera.hpp"
using namespace fgl;
TEST_CASE("placeholder") { CHECK(true); }
