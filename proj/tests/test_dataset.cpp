#include <doctest.h>
// placeholder - real suites land with the test pass
