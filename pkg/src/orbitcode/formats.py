"""Plain-text file formats.

Every file starts with the line ``# orbitcode v1``.  A code-spec file holds
``key=value`` lines; word files hold one line of space-separated F-symbols in
canonical orbit order; matrix dumps hold one such line per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import CodeSpecError
from .galois import FieldParams, build_tower

HEADER = "# orbitcode v1"
VERSION = 1

_REQUIRED = ("version", "p", "k", "m", "t", "fieldpoly", "rho")
_OPTIONAL = ("override", "check_rho")


class FormatError(CodeSpecError):
    pass


def _content_lines(text: str) -> list[str]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise FormatError(f"missing '{HEADER}' header line")
    return [ln for ln in lines[1:] if ln.strip() and not ln.lstrip().startswith("#")]


@dataclass(frozen=True)
class CodeSpecFile:
    p: int
    k: int
    m: int
    t: int
    fieldpoly: tuple[int, ...]
    rho: str = "1"
    override: bool = False
    check_rho: bool = True
    version: int = VERSION

    @classmethod
    def parse(cls, text: str) -> "CodeSpecFile":
        values = {}
        for line in _content_lines(text):
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in _REQUIRED + _OPTIONAL:
                raise FormatError(f"bad spec line {line!r}")
            if key in values:
                raise FormatError(f"duplicate key {key!r}")
            values[key] = value.strip()
        missing = [k for k in _REQUIRED if k not in values]
        if missing:
            raise FormatError(f"missing keys: {', '.join(missing)}")
        try:
            spec = cls(
                p=int(values["p"]),
                k=int(values["k"]),
                m=int(values["m"]),
                t=int(values["t"]),
                fieldpoly=tuple(int(x) for x in values["fieldpoly"].split(",")),
                rho=values["rho"],
                override=values.get("override", "0") == "1",
                check_rho=values.get("check_rho", "1") == "1",
                version=int(values["version"]),
            )
        except ValueError as exc:
            raise FormatError(f"bad numeric value: {exc}") from None
        if spec.version != VERSION:
            raise FormatError(f"unsupported version {spec.version}")
        spec.validate()
        return spec

    @classmethod
    def for_params(cls, p, k, m, t, rho="1", check_rho=True) -> "CodeSpecFile":
        field = build_tower(FieldParams(p, k, m))
        return cls(p, k, m, t, field.defining_poly, rho, check_rho=check_rho)

    def validate(self):
        params = FieldParams(self.p, self.k, self.m)
        if not self.override:
            expected = build_tower(params).defining_poly
            if tuple(self.fieldpoly) != expected:
                raise FormatError(
                    f"fieldpoly {','.join(map(str, self.fieldpoly))} differs from the "
                    f"deterministic choice {','.join(map(str, expected))}; set override=1"
                )

    def to_text(self) -> str:
        lines = [
            HEADER,
            f"version={self.version}",
            f"p={self.p}",
            f"k={self.k}",
            f"m={self.m}",
            f"t={self.t}",
            "fieldpoly=" + ",".join(map(str, self.fieldpoly)),
            f"rho={self.rho}",
        ]
        if self.override:
            lines.append("override=1")
        if not self.check_rho:
            lines.append("check_rho=0")
        return "\n".join(lines) + "\n"

    def estimator(self):
        from .estimator import OrbitCode

        return OrbitCode(
            p=self.p, k=self.k, m=self.m, t=self.t, rho=self.rho, check_rho=self.check_rho,
            fieldpoly=self.fieldpoly if self.override else None,
        )


def format_symbols(row) -> str:
    return " ".join(str(int(x)) for x in row)


def format_word(word) -> str:
    return f"{HEADER}\n{format_symbols(word)}\n"


def parse_word(text: str, q: int, length: Optional[int] = None) -> np.ndarray:
    lines = _content_lines(text)
    if len(lines) != 1:
        raise FormatError(f"expected one symbol line, found {len(lines)}")
    try:
        word = np.array([int(tok) for tok in lines[0].split()], dtype=np.int64)
    except ValueError:
        raise FormatError(f"non-integer symbol in {lines[0]!r}") from None
    if length is not None and word.shape[0] != length:
        raise FormatError(f"word has {word.shape[0]} symbols, expected {length}")
    if word.size and (word.min() < 0 or word.max() >= q):
        raise FormatError(f"symbol outside 0..{q - 1}")
    return word


def format_matrix(H) -> str:
    return HEADER + "\n" + "".join(format_symbols(row) + "\n" for row in H)


def parse_matrix(text: str) -> np.ndarray:
    rows = [[int(tok) for tok in ln.split()] for ln in _content_lines(text)]
    return np.array(rows, dtype=np.int64)
