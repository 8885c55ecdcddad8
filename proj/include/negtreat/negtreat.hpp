// Copyright 2026 The negtreat Authors.
//
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

#ifndef NEGTREAT_NEGTREAT_HPP_
#define NEGTREAT_NEGTREAT_HPP_

#include "negtreat/align.hpp"
#include "negtreat/clause.hpp"
#include "negtreat/corpus.hpp"
#include "negtreat/eval.hpp"
#include "negtreat/fol.hpp"
#include "negtreat/pipeline.hpp"
#include "negtreat/textprep.hpp"
#include "negtreat/wordnet.hpp"

#endif  // NEGTREAT_NEGTREAT_HPP_
