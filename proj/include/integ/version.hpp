#pragma once

namespace integ {
/** Library version string. */
const char* version();
}
