// Copyright 2026 The ans-stack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef ANS_STACK_ANS_STACK_H_
#define ANS_STACK_ANS_STACK_H_

#include "ans_stack/ans_coder.h"
#include "ans_stack/bench.h"
#include "ans_stack/chain_coder.h"
#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/io.h"
#include "ans_stack/model.h"
#include "ans_stack/slow_ans_coder.h"
#include "ans_stack/uniform_coder.h"

#endif  // ANS_STACK_ANS_STACK_H_
