# Copyright 2026 The mdtriples Authors
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

"""Multiplicatively dependent triples (a+s, b+s, c+s), s = 0, 1, 2.

Thin wrapper over the C++ core. Big integers cross the boundary as Python
ints; results come back as plain dicts, lists and tuples.
"""

from ._mdtriples import (
    DataError,
    DomainError,
    GiveUpError,
    PreconditionError,
    PrecisionError,
    classify_family,
    classify_k,
    factorize,
    is_multiplicatively_dependent,
    is_prime,
    lemma_ids,
    lemma_search,
    lll_reduce,
    log_ratio_convergents,
    primitive_part,
    search,
    sit_holds,
    sit_pipeline,
    solve_sit_final,
    verify_main_theorems,
    vp,
    witness_holds,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
