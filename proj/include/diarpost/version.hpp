// Copyright 2026 The diarpost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARPOST_VERSION_HPP_
#define DIARPOST_VERSION_HPP_

namespace diarpost {

inline constexpr const char* kVersion = "0.1.0";

// Gates golden files: bump on any change to file formats, serialization, or
// the seeded random draw sequence.
inline constexpr int kSchemaVersion = 1;

}  // namespace diarpost

#endif  // DIARPOST_VERSION_HPP_
