# Copyright 2026 The edit5 Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Edit programs for semi-autoregressive text editing."""

from ._edit5 import (
    NUM_POSITION_TOKENS,
    CapacityError,
    InfeasibleError,
    NumericError,
    ParseError,
    Program,
    ValidationError,
    align,
    break_even_steps,
    chain_to_permutation,
    corrupt,
    dataset_stats,
    decode_pointer,
    decoder_encoder_ratio,
    estimate_latency,
    extract_permutation,
    make_pretraining_example,
    parse_decoder_string,
    permutation_to_chain,
    realize,
    sentence_seed,
    sinkhorn,
    ter,
    tokenize,
)

__all__ = [
    "NUM_POSITION_TOKENS",
    "CapacityError",
    "InfeasibleError",
    "NumericError",
    "ParseError",
    "Program",
    "ValidationError",
    "align",
    "break_even_steps",
    "chain_to_permutation",
    "corrupt",
    "dataset_stats",
    "decode_pointer",
    "decoder_encoder_ratio",
    "estimate_latency",
    "extract_permutation",
    "make_pretraining_example",
    "parse_decoder_string",
    "permutation_to_chain",
    "realize",
    "sentence_seed",
    "sinkhorn",
    "ter",
    "tokenize",
]
