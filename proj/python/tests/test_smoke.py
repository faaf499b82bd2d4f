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

import json
import pathlib

import pytest

import imprecise_ror as ror

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def statements(name):
    return json.loads((DATA / name).read_text())["statements"]


def test_students_validate():
    v = ror.validate(DATA / "students.json", statements("c1.json"))
    assert v["valid"] and v["compatible"]
    assert v["alternatives"][0] == "A"


def test_first_statement_is_necessary():
    r = ror.relations(DATA / "students.json", statements("c1.json"))
    assert ror.bit(r["relation"], "M", "D")
    assert not ror.bit(r["relation"], "D", "M")
    by_path = ror.relations(DATA / "students.json", DATA / "c1.json")
    assert by_path["relation"] == r["relation"]


def test_final_stage_top():
    r = ror.relations(DATA / "students.json", statements("c3.json"))["relation"]
    top = [a for a in r["order"]
           if not any(ror.bit(r, x, a) and not ror.bit(r, a, x) for x in r["order"])]
    assert top == ["A", "E"]


def test_strong_dominance_and_dot():
    d = ror.dominance(DATA / "students.json", index="strong")
    assert ror.bit(d["relation"], "D", "F")
    assert "digraph" in ror.dot(DATA / "students.json", relation="dominance", index="strong")


def test_three_cycle_diagnosis():
    problem = {
        "n": 1,
        "criteria": [{"id": "g1"}, {"id": "g2"}],
        "alternatives": {"a": {"g1": 2, "g2": 0}, "b": {"g1": 1, "g2": 1}, "c": {"g1": 0, "g2": 2}},
        "statements": [
            {"id": "ab", "kind": "holistic-strict", "operands": ["a", "b"]},
            {"id": "bc", "kind": "holistic-strict", "operands": ["b", "c"]},
            {"id": "ca", "kind": "holistic-strict", "operands": ["c", "a"]},
        ],
    }
    d = ror.diagnose(problem)
    assert not d["compatible"]
    assert sorted(d["minimal_sets"]) == [["ab"], ["bc"], ["ca"]]


def test_errors_carry_codes():
    with pytest.raises(ror.RorError) as e:
        ror.relations(DATA / "students.json", index="3,1")
    assert e.value.code == "IndexOutOfRange"
    with pytest.raises(ror.RorError) as e:
        ror.validate({"n": 2})
    assert e.value.code == "ValidationError"


def test_property_suite_runs():
    r = ror.check_properties(seed=1, instances=5, max_dms=2)
    assert r["status"] == "PASS"
