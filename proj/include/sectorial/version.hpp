// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace sectorial {

inline constexpr const char* kToolVersion = "0.1.0";

/// Bumped on any report schema change.
inline constexpr int kReportFormatVersion = 1;

}  // namespace sectorial
