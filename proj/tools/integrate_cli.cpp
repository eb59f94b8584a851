// Placeholder until the engine lands; replaced by the real CLI.
#include <cstdio>
#include "integ/version.hpp"

int main() {
    std::printf("integ %s\n", integ::version());
    return 0;
}
