// Copyright 2026 The nsq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NSQ_SRC_TABLE_DATA_H_
#define NSQ_SRC_TABLE_DATA_H_

namespace nsq::internal {

// Contents of core/data/*.txt, compiled in.
extern const char* const kCountsText;
extern const char* const kRepresentativesText;
extern const char* const kAllowlistText;

}  // namespace nsq::internal

#endif  // NSQ_SRC_TABLE_DATA_H_
