// Acceptance driver placeholder; replaced once the engine is complete.
#include <cstdio>

int main() {
    std::printf("acceptance: no criteria wired yet\n");
    return 1;
}
