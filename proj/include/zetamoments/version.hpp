#pragma once

namespace zm {

constexpr const char* version_string = "0.1.0";

}  // namespace zm
