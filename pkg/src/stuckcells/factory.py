"""Build codes and codecs from plain JSON-style parameters (used by the CLI).

A *code description* is either the name of a built-in matrix, a family string such
as ``"hamming:2:3"``, ``"mds:5:5:3"``, ``"parity:3:4"``, ``"repetition:2:3"``
(optionally suffixed ``"/shorten=N"``), or a dict::

    {"matrix": "path/to/H.txt", "d": 3, "verify": true}
    {"rows": [[1, 0, 1], [0, 1, 1]], "q": 3, "d": 2}
    {"cited": [n, k, d], "q": 4}
"""

from __future__ import annotations

from typing import Any

from . import codes
from .codec import Codec
from .errors import ParameterError
from .linalg import Matrix, read_matrix
from .psmc import C1BCodec, C1Codec, C2Codec, Gen1Codec, Gen3Codec, RreMaskCodec
from .ring import make_ctx
from .smc import SmcCodec
from .umc import UmcCodec

BUILTIN_MATRICES: dict[str, tuple[int, int, list[list[int]]]] = {
    # [5,2,3]_3 systematic parity-check matrix
    "ternary-5-2-3": (3, 3, [[1, 0, 0, 1, 0], [0, 1, 0, 1, 1], [0, 0, 1, 0, 1]]),
    # 2x8 ternary mask matrix for three level-1 cells; identity columns 0 and 2
    "ternary-2x8": (3, 3, [[1, 1, 0, 0, 1, 1, 1, 1], [0, 0, 1, 1, 1, 1, 2, 2]]),
    # 4x15 binary matrix used in the Construction III walk-through (its true distance is 2)
    "binary-4x15": (
        2,
        3,
        [
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1],
            [0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1],
            [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1],
        ],
    ),
}


def builtin_code(name: str) -> codes.LinearCode:
    try:
        q, d, rows = BUILTIN_MATRICES[name]
    except KeyError:
        raise ParameterError(f"unknown built-in matrix {name!r}") from None
    return codes.from_matrix(Matrix.from_rows(make_ctx(q), rows), d, verify=False, name=name)


_FAMILIES = {
    "hamming": (codes.hamming, 2),
    "mds": (codes.mds, 3),
    "parity": (codes.parity, 2),
    "repetition": (codes.repetition, 2),
}


def make_code(spec: Any) -> codes.LinearCode:
    if isinstance(spec, dict):
        return _code_from_dict(spec)
    if not isinstance(spec, str):
        raise ParameterError(f"cannot interpret code description {spec!r}")
    base, _, suffix = spec.partition("/")
    if base in BUILTIN_MATRICES:
        code = builtin_code(base)
    else:
        family, *args = base.split(":")
        if family not in _FAMILIES:
            raise ParameterError(f"unknown code family {family!r}")
        fn, arity = _FAMILIES[family]
        if len(args) != arity:
            raise ParameterError(f"{family} takes {arity} integer arguments")
        try:
            code = fn(*(int(a) for a in args))
        except ValueError as exc:
            raise ParameterError(str(exc)) from None
    if suffix:
        key, _, value = suffix.partition("=")
        if key != "shorten":
            raise ParameterError(f"unknown code modifier {suffix!r}")
        code = codes.shorten(code, int(value))
    return code


def _code_from_dict(spec: dict) -> codes.LinearCode:
    if "cited" in spec:
        n, k, d = spec["cited"]
        return codes.cited(int(spec["q"]), n, k, d)
    if "matrix" in spec:
        H = read_matrix(spec["matrix"])
    elif "rows" in spec:
        H = Matrix.from_rows(make_ctx(int(spec["q"])), spec["rows"])
    else:
        raise ParameterError("code dict needs 'matrix', 'rows' or 'cited'")
    code = codes.from_matrix(H, int(spec["d"]), verify=bool(spec.get("verify", False)))
    if spec.get("shorten"):
        code = codes.shorten(code, int(spec["shorten"]))
    return code


def _get(params: dict, key: str, default: Any = ...) -> Any:
    if key in params:
        return params[key]
    if default is ...:
        raise ParameterError(f"missing parameter {key!r}")
    return default


CONSTRUCTIONS = ("smc", "c1", "c1b", "gen1", "rre_mask", "c2", "gen2", "c3", "gen3s", "gen3", "umc")


def make_codec(construction: str, params: dict) -> Codec:
    """Codec for ``construction`` (one of :data:`CONSTRUCTIONS`)."""
    c = construction.lower()
    if c == "smc":
        return SmcCodec(make_code(_get(params, "code")))
    if c == "c1":
        return C1Codec(int(_get(params, "q")), int(_get(params, "n")), params.get("u"))
    if c == "c1b":
        return C1BCodec(int(_get(params, "q")), int(_get(params, "n")), int(_get(params, "u")))
    if c == "gen1":
        return Gen1Codec(int(_get(params, "q")), int(_get(params, "n")), int(_get(params, "s_sum")))
    if c == "rre_mask":
        return RreMaskCodec(make_code(_get(params, "code")), int(_get(params, "u")), int(params.get("s", 1)))
    if c in ("c2", "gen2"):
        return C2Codec(make_code(_get(params, "code")), int(params.get("s", 1)))
    if c == "c3":
        return Gen3Codec(int(_get(params, "q")), make_code(_get(params, "code")), mode="c3")
    if c in ("gen3s", "gen3"):
        mode = "same" if c == "gen3s" else "levels"
        return Gen3Codec(int(_get(params, "q")), make_code(_get(params, "code")), int(params.get("s", 1)), mode)
    if c == "umc":
        return UmcCodec(make_codec(_get(params, "inner"), dict(_get(params, "inner_params"))))
    raise ParameterError(f"unknown construction {construction!r}; choose from {', '.join(CONSTRUCTIONS)}")
