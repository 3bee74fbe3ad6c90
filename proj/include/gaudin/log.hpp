#pragma once

#include <functional>
#include <string_view>

namespace gaudin {

using WarningSink = std::function<void(std::string_view)>;

// Default sink writes "warning: ..." to stderr. Returns the previous sink.
WarningSink set_warning_sink(WarningSink sink);
void log_warning(std::string_view message);

}  // namespace gaudin
