#pragma once

#define QRHC_VERSION "0.1.0"

namespace qrhc {
inline const char* version() { return QRHC_VERSION; }
}  // namespace qrhc
