// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string_view>

namespace tflab {

/// Version plus short git hash when the tree was built from a checkout.
std::string_view build_id() noexcept;

}  // namespace tflab
