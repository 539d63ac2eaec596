# coding=utf-8
# Copyright 2022 The HitchFib Authors. All rights reserved.
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
from fractions import Fraction
from typing import Any, Dict, Mapping

from hitchfib.numerics import GaussianRational
from hitchfib.polar import PolarData
from hitchfib.utils.exceptions import InvalidWeights, SchemaError
from hitchfib.weights import ParabolicWeights, as_rational

__all__ = [
    "polar_from_json",
    "polar_to_json",
    "weights_from_json",
    "weights_to_json",
    "rational_to_json",
    "load_json",
    "dumps",
]


def rational_to_json(x: Fraction):
    return [x.numerator, x.denominator]


def polar_from_json(doc: Mapping[str, Any]) -> PolarData:
    """
    Read ``{"case": "d22-ss", "params": {"a_plus": [nr, dr, ni, di], ...}}``.
    Each value may also be ``[num, den]`` or an integer.
    """
    if not isinstance(doc, Mapping) or "case" not in doc or "params" not in doc:
        raise SchemaError("parameter document needs 'case' and 'params'")
    params = doc["params"]
    if not isinstance(params, Mapping):
        raise SchemaError("'params' must be an object")
    values = {}
    for name, raw in params.items():
        try:
            values[name] = GaussianRational.from_json(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"parameter {name}: {e}") from e
    return PolarData.create(doc["case"], values)


def polar_to_json(d: PolarData) -> Dict[str, Any]:
    """Inverse of :func:`polar_from_json`, keeping the case and names of the input."""
    return {
        "case": d.input_case,
        "params": {k: v.to_json() for k, v in sorted(d.input_params().items())},
    }


def weights_from_json(doc: Mapping[str, Any]) -> ParabolicWeights:
    """Read ``{"alpha": {"p1": r, "m1": r, "p2": r, "m2": r}, "extended_alpha_plus": r?}``."""
    if not isinstance(doc, Mapping) or not isinstance(doc.get("alpha"), Mapping):
        raise InvalidWeights("weights document needs an 'alpha' object")
    alpha = doc["alpha"]
    missing = [k for k in ("p1", "m1", "p2", "m2") if k not in alpha]
    if missing:
        raise InvalidWeights(f"weights missing {', '.join(missing)}")
    extended = doc.get("extended_alpha_plus")
    return ParabolicWeights(
        as_rational(alpha["p1"]),
        as_rational(alpha["m1"]),
        as_rational(alpha["p2"]),
        as_rational(alpha["m2"]),
        as_rational(extended) if extended is not None else None,
    )


def weights_to_json(w: ParabolicWeights) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "alpha": {k: rational_to_json(getattr(w, k)) for k in ("p1", "m1", "p2", "m2")}
    }
    if w.extended_alpha_plus is not None:
        out["extended_alpha_plus"] = rational_to_json(w.extended_alpha_plus)
    return out


def load_json(source: str) -> Any:
    """Parse ``source`` as inline JSON if it starts with ``{``, else read it as a file."""
    try:
        if source.lstrip().startswith("{"):
            return json.loads(source)
        with open(source, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"cannot parse JSON from {source!r}: {e}") from e
    except OSError as e:
        raise SchemaError(f"cannot read {source!r}: {e}") from e


def dumps(doc: Any) -> str:
    """Deterministic rendering of a report."""
    return json.dumps(doc, sort_keys=True, indent=2)
