# Copyright 2026 The imprecise-ror Authors
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

"""Robust ordinal regression over n-point interval evaluations.

Every function takes a problem as a dict (or a path to a JSON file) and
returns the same JSON document the command line and HTTP service produce.
"""

from __future__ import annotations

import json
import os
from typing import Any, Union

from . import _core

Problem = Union[dict, str, "os.PathLike[str]"]


class RorError(RuntimeError):
    """A library error; ``code`` names it, ``details`` lists per-field issues."""

    def __init__(self, document: dict):
        super().__init__(document.get("message", ""))
        self.code: str = document.get("code", "")
        self.details: list = document.get("details", [])


def _load(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as f:
            return json.load(f)
    return source


def _text(problem: Problem, statements) -> str:
    doc = dict(_load(problem))
    if statements is not None:
        # A list of statements, or a document (or file) holding one.
        extra = _load(statements)
        if isinstance(extra, dict):
            extra = extra.get("statements", [])
        doc["statements"] = list(doc.get("statements", [])) + list(extra)
    return json.dumps(doc)


def _call(fn, problem: Problem, statements, **kwargs) -> Any:
    try:
        return fn(_text(problem, statements), **kwargs)
    except _core.RorError as e:
        raise RorError(json.loads(str(e))) from None


def _json(fn, problem, statements, **kwargs) -> dict:
    return json.loads(_call(fn, problem, statements, **kwargs))


def validate(problem: Problem, statements=None, collapse=False) -> dict:
    return _json(_core.validate, problem, statements, collapse=collapse)


def dominance(problem: Problem, index="classic", collapse=False) -> dict:
    return _json(_core.dominance, problem, None, index=index, collapse=collapse)


def relations(problem: Problem, statements=None, family="necessary", index="classic", collapse=False) -> dict:
    return _json(_core.relations, problem, statements, family=family, index=index, collapse=collapse)


def group(problem: Problem, statements=None, outer="necessary", inner="necessary", index="classic",
          dms=(), exclude_incompatible=False, collapse=False) -> dict:
    return _json(_core.group, problem, statements, outer=outer, inner=inner, index=index, dms=list(dms),
                 exclude_incompatible=exclude_incompatible, collapse=collapse)


def sorting(problem: Problem, statements=None, index="classic", joint=False) -> dict:
    return _json(_core.sorting, problem, statements, index=index, joint=joint)


def extreme_ranks(problem: Problem, statements=None, index="classic") -> dict:
    return _json(_core.extreme_ranks, problem, statements, index=index)


def diagnose(problem: Problem, statements=None, max_sets=16, budget=200000) -> dict:
    return _json(_core.diagnose, problem, statements, max_sets=max_sets, budget=budget)


def sweep(problem: Problem, statements=None, index="classic") -> dict:
    return _json(_core.sweep, problem, statements, index=index)


def dot(problem: Problem, statements=None, relation="necessary", index="classic") -> str:
    return _call(_core.dot, problem, statements, relation=relation, index=index)


def check_properties(seed=42, instances=50, max_dms=3) -> dict:
    return json.loads(_core.check_properties(seed, instances, max_dms))


def bit(relation: dict, a: str, b: str) -> bool:
    """Whether the ordered pair (a, b) is in a relation document."""
    order = relation["order"]
    return bool(relation["bits"][order.index(a)][order.index(b)])


__all__ = [
    "RorError", "bit", "check_properties", "diagnose", "dominance", "dot", "extreme_ranks", "group",
    "relations", "sorting", "sweep", "validate",
]
