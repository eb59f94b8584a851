#include "integ/version.hpp"

namespace integ {
const char* version() { return "0.1.0"; }
}
