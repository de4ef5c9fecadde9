#pragma once

#define OWAKIT_VERSION_MAJOR 0
#define OWAKIT_VERSION_MINOR 1
#define OWAKIT_VERSION_PATCH 0
#define OWAKIT_VERSION "0.1.0"

namespace owakit {
inline constexpr const char* version() { return OWAKIT_VERSION; }
}  // namespace owakit
