"""Symbolic labels for nilpotent types and distinguished types, with a text grammar.

Type terms look like ``D[eps=+1,h=2](0)`` (one chain) or ``D[h=1](0,0)`` (two
chains); a family prefix ``o+:`` comes first and several terms are joined by
``+`` with an optional ``k*`` multiplicity.  Distinguished cores use ``uD``
and may carry ``mod`` and ``cross`` parameters; a full classification reads
``core=<core>; residual=<types>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction

from .scalars import Gaussian, ScalarParseError, format_gaussian, format_rational, parse_gaussian
from .structures import FAMILIES, SHORT_TO_FAMILY, family_info


class LabelError(Exception):
    pass


class LabelSyntaxError(LabelError):
    """Text does not follow the label grammar."""


class InvalidLabel(LabelError):
    """Well-formed label that names no row of the tables."""


class ConditionViolated(InvalidLabel):
    """The row exists but its condition on v0 cannot hold for these parameters."""


def form_parity(family: str):
    """+1 symmetric/hermitian, -1 alternating, None when there is no form."""
    kind = FAMILIES[family].form_kind
    if kind is None:
        return None
    return -1 if kind == "alternating" else 1


def reduced_form_kind(tau_kind: str, h: int) -> str:
    """Kind of tau(u, Y^h v) on W/YW for a uniform block of height h."""
    if tau_kind not in ("symmetric", "alternating"):
        raise ValueError("reduced_form_kind takes a symmetric or alternating kind")
    if (tau_kind == "symmetric") == (h % 2 == 0):
        return "symmetric"
    return "alternating"


def top_sign(family: str, h: int) -> int:
    """r with g(b, a) = r g(a, b) (bilinear) or r conj g(a, b) (hermitian), g(a, b) = tau(a, Y^h b)."""
    return (-1) ** h * form_parity(family)


# indecomposable nilpotent types ----------------------------------------------

def type_row(family: str, h: int):
    """(kind, has_eps) of the unique indecomposable type of height h."""
    f = family_info(family).name
    even = h % 2 == 0
    if f == "gl_sigma_plus":
        return "single", False
    if f == "gl_sigma_minus":
        return "double", False
    if f == "gl_tau_star":
        return "single", True
    if f == "o_sigma_plus":
        return ("single", True) if even else ("double", False)
    if f == "o_sigma_minus":
        return ("double", False) if even else ("double", True)
    if f == "sp_sigma_plus":
        return ("double", False) if even else ("single", True)
    return ("double", True) if even else ("double", False)


@dataclass(frozen=True, order=False)
class TypeLabel:
    family: str
    h: int
    kind: str
    eps: int | None = None
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", family_info(self.family).name)

    def validate(self) -> "TypeLabel":
        if self.h < 0:
            raise InvalidLabel("height must be nonnegative")
        if self.multiplicity < 1:
            raise InvalidLabel("multiplicity must be positive")
        kind, has_eps = type_row(self.family, self.h)
        if self.kind != kind:
            raise InvalidLabel(f"{self.short} at h={self.h} has kind {kind}, not {self.kind}")
        if has_eps and self.eps not in (1, -1):
            raise InvalidLabel(f"{self.short} at h={self.h} needs eps = +1 or -1")
        if not has_eps and self.eps is not None:
            raise InvalidLabel(f"{self.short} at h={self.h} carries no eps")
        return self

    @property
    def short(self):
        return FAMILIES[self.family].short

    @property
    def chains(self) -> int:
        return 1 if self.kind == "single" else 2

    @property
    def dim(self) -> int:
        return (self.h + 1) * self.chains * self.multiplicity

    def one(self) -> "TypeLabel":
        return replace(self, multiplicity=1)

    def sort_key(self):
        return (-self.h, 0 if self.kind == "single" else 1, -(self.eps or 0))

    def term(self) -> str:
        params = []
        if self.eps is not None:
            params.append(f"eps={self.eps:+d}")
        params.append(f"h={self.h}")
        body = f"D[{','.join(params)}]" + ("(0)" if self.kind == "single" else "(0,0)")
        return (f"{self.multiplicity}*" if self.multiplicity > 1 else "") + body

    def __str__(self):
        return f"{self.short}:{self.term()}"


def normalize_types(labels) -> tuple:
    """Merge equal labels into multiplicities and sort canonically."""
    counts = {}
    for lab in labels:
        key = lab.one()
        counts[key] = counts.get(key, 0) + lab.multiplicity
    out = [replace(k, multiplicity=v) for k, v in counts.items()]
    out.sort(key=lambda l: l.sort_key())
    return tuple(out)


def expand_types(labels) -> list:
    """One entry per indecomposable summand, in canonical order."""
    out = []
    for lab in normalize_types(labels):
        out.extend([lab.one()] * lab.multiplicity)
    return out


def format_types(labels) -> str:
    labels = normalize_types(labels)
    if not labels:
        return ""
    fam = labels[0].short
    return fam + ":" + "+".join(l.term() for l in labels)


# distinguished labels --------------------------------------------------------

@dataclass(frozen=True)
class CoreRow:
    family: str
    kind: str  # single / double / split
    parity: int | None  # required h mod 2, or None
    eps: bool
    modulus: str | None  # None, "positive" or "pair" (complex mod + real cross)
    reduced_dim: int
    condition: str | None
    note: str = ""


CORE_TABLE = (
    CoreRow("gl_sigma_plus", "single", None, False, None, 1, "A"),
    CoreRow("gl_sigma_minus", "double", None, False, None, 2, "B"),
    CoreRow("gl_tau_star", "single", None, True, "positive", 1, None),
    CoreRow("gl_tau_star", "split", None, False, None, 2, None),
    CoreRow("o_sigma_plus", "single", 0, True, "positive", 1, "A"),
    CoreRow("o_sigma_plus", "split", 0, False, None, 2, "A"),
    CoreRow("o_sigma_plus", "double", 1, False, None, 2, "A"),
    CoreRow("o_sigma_minus", "double", 0, False, "pair", 2, "B"),
    CoreRow("o_sigma_minus", "double", 1, True, "positive", 2, "B"),
    CoreRow("sp_sigma_plus", "single", 1, True, "positive", 1, "A"),
    CoreRow("sp_sigma_plus", "double", 0, False, None, 2, "A"),
    CoreRow("sp_sigma_plus", "split", 1, False, None, 2, "A", "split core at odd h"),
    CoreRow("sp_sigma_minus", "double", 1, False, "pair", 2, "A"),
    CoreRow("sp_sigma_minus", "double", 0, True, "positive", 2, "B"),
)


def core_rows(family: str | None = None):
    if family is None:
        return CORE_TABLE
    f = family_info(family).name
    return tuple(r for r in CORE_TABLE if r.family == f)


@dataclass(frozen=True)
class DistinguishedLabel:
    family: str
    h: int
    kind: str  # single / double / split
    eps: int | None = None
    modulus: Gaussian | None = None
    cross: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", family_info(self.family).name)

    @property
    def short(self):
        return FAMILIES[self.family].short

    @property
    def reduced_dim(self) -> int:
        return 1 if self.kind == "single" else 2

    @property
    def dim(self) -> int:
        return (self.h + 1) * self.reduced_dim

    def row(self) -> CoreRow:
        """The core table row of this label; raises InvalidLabel if there is none."""
        if self.h < 0:
            raise InvalidLabel("height must be nonnegative")
        for r in core_rows(self.family):
            if r.kind != self.kind:
                continue
            if r.parity is not None and self.h % 2 != r.parity:
                continue
            return r
        raise InvalidLabel(f"no core table row for {self.short} {self.kind} core at h={self.h}")

    def validate(self) -> "DistinguishedLabel":
        r = self.row()
        if r.eps and self.eps not in (1, -1):
            raise InvalidLabel(f"{self} needs eps = +1 or -1")
        if not r.eps and self.eps is not None:
            raise InvalidLabel(f"{self} carries no eps")
        if r.modulus is None:
            if self.modulus is not None or self.cross is not None:
                raise InvalidLabel(f"{self} carries no modulus")
        elif r.modulus == "positive":
            if self.cross is not None:
                raise InvalidLabel(f"{self} carries no cross parameter")
            if self.modulus is None or self.modulus.im or self.modulus.re <= 0:
                raise InvalidLabel(f"{self} needs a positive rational modulus")
            if self.h == 0:
                raise ConditionViolated(f"{self}: v0 must be isotropic, so a single core needs h >= 1")
        else:
            if self.modulus is None or self.cross is None:
                raise InvalidLabel(f"{self} needs mod and cross")
            if not self.modulus and not self.cross:
                raise InvalidLabel(f"{self}: mod and cross cannot both vanish")
            if self.h == 0 and self.modulus:
                raise ConditionViolated(f"{self}: v0 must be isotropic, so at h=0 mod must be 0")
        return self

    def core_string(self) -> str:
        params = []
        if self.eps is not None:
            params.append(f"eps={self.eps:+d}")
        params.append(f"h={self.h}")
        if self.modulus is not None:
            params.append(f"mod={format_gaussian(self.modulus)}")
        if self.cross is not None:
            params.append(f"cross={format_rational(self.cross)}")
        p = ",".join(params)
        if self.kind == "single":
            return f"uD[{p}](0)"
        if self.kind == "double":
            return f"uD[{p}](0,0)"
        return f"uD[eps=+1,{p}](0)+D[eps=-1,{p}](0)"

    def __str__(self):
        return f"{self.short}:{self.core_string()}"


def format_classification(core: DistinguishedLabel, residual) -> str:
    res = format_types(residual)
    return f"core={core}; residual={res}"


# parsing -----------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(?P<mult>\d+)\*)?(?P<u>u?)D\[(?P<params>[^\]]*)\]\((?P<arg>0|0,0)\)$")


def _split_terms(body: str) -> list:
    """Split on '+' that are not inside brackets or parameter values."""
    terms, depth, cur = [], 0, []
    for ch in body:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    terms.append("".join(cur))
    return terms


def _parse_params(text: str) -> dict:
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise LabelSyntaxError(f"bad parameter {part!r}")
        k, v = part.split("=", 1)
        k = k.strip()
        v = v.strip()
        if k in out:
            raise LabelSyntaxError(f"duplicate parameter {k}")
        out[k] = v
    return out


def _parse_int(text: str, name: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", text):
        raise LabelSyntaxError(f"bad {name}: {text!r}")
    return int(text)


def _parse_family_prefix(text: str):
    s = text.strip().replace(" ", "")
    if ":" not in s:
        raise LabelSyntaxError(f"missing family prefix in {text!r}")
    fam, body = s.split(":", 1)
    if fam not in SHORT_TO_FAMILY:
        raise LabelSyntaxError(f"unknown family {fam!r}")
    return SHORT_TO_FAMILY[fam], body


def _parse_term(term: str):
    m = _TERM_RE.match(term)
    if not m:
        raise LabelSyntaxError(f"bad term {term!r}")
    params = _parse_params(m.group("params"))
    unknown = set(params) - {"eps", "h", "mod", "cross"}
    if unknown:
        raise LabelSyntaxError(f"unknown parameters {sorted(unknown)}")
    if "h" not in params:
        raise LabelSyntaxError(f"term {term!r} lacks h")
    eps = None
    if "eps" in params:
        eps = _parse_int(params["eps"], "eps")
        if eps not in (1, -1):
            raise LabelSyntaxError("eps must be +1 or -1")
    try:
        mod = parse_gaussian(params["mod"]) if "mod" in params else None
        cross = parse_gaussian(params["cross"]) if "cross" in params else None
    except ScalarParseError as exc:
        raise LabelSyntaxError(str(exc)) from exc
    if cross is not None and cross.im:
        raise LabelSyntaxError("cross must be rational")
    return {
        "mult": int(m.group("mult")) if m.group("mult") else 1,
        "core": bool(m.group("u")),
        "h": _parse_int(params["h"], "h"),
        "eps": eps,
        "mod": mod,
        "cross": cross.re if cross is not None else None,
        "kind": "single" if m.group("arg") == "0" else "double",
    }


def parse_types(text: str) -> tuple:
    """Parse ``fam:term+term...`` into validated TypeLabels."""
    family, body = _parse_family_prefix(text)
    out = []
    for t in _split_terms(body):
        d = _parse_term(t)
        if d["core"] or d["mod"] is not None or d["cross"] is not None:
            raise LabelSyntaxError(f"type term {t!r} may not carry core markers or moduli")
        out.append(TypeLabel(family, d["h"], d["kind"], d["eps"], d["mult"]).validate())
    return normalize_types(out)


def parse_type(text: str) -> TypeLabel:
    labels = parse_types(text)
    if len(labels) != 1 or labels[0].multiplicity != 1:
        raise LabelSyntaxError("expected a single indecomposable type")
    return labels[0]


def parse_core(text: str) -> DistinguishedLabel:
    """Parse a distinguished core label; missing parameters take documented defaults."""
    family, body = _parse_family_prefix(text)
    terms = _split_terms(body)
    ds = [_parse_term(t) for t in terms]
    if not ds[0]["core"] or any(d["mult"] != 1 for d in ds):
        raise LabelSyntaxError("a core label starts with uD and has no multiplicities")
    if len(ds) == 2:
        a, b = ds
        if b["core"] or a["kind"] != "single" or b["kind"] != "single":
            raise LabelSyntaxError("split cores read uD[eps=+1,h=..](0)+D[eps=-1,h=..](0)")
        if a["h"] != b["h"] or {a["eps"], b["eps"]} != {1, -1}:
            raise LabelSyntaxError("split core terms need equal h and opposite eps")
        if any(d["mod"] is not None or d["cross"] is not None for d in ds):
            raise LabelSyntaxError("split cores carry no modulus")
        return DistinguishedLabel(family, a["h"], "split").validate()
    if len(ds) != 1:
        raise LabelSyntaxError("too many terms in a core label")
    d = ds[0]
    lab = DistinguishedLabel(family, d["h"], d["kind"], d["eps"], d["mod"], d["cross"])
    row = lab.row()
    if row.modulus == "positive" and lab.modulus is None:
        lab = replace(lab, modulus=Gaussian(1))
    if row.modulus == "pair":
        lab = replace(
            lab,
            modulus=lab.modulus if lab.modulus is not None else Gaussian(0),
            cross=lab.cross if lab.cross is not None else Fraction(1),
        )
    return lab.validate()


def parse_classification(text: str):
    """``core=...; residual=...`` (or a bare core label) -> (core, residual types)."""
    s = text.strip()
    if not s.startswith("core="):
        return parse_core(s), ()
    parts = [p.strip() for p in s.split(";")]
    core_txt = parts[0][len("core="):]
    residual = ()
    for p in parts[1:]:
        if not p:
            continue
        if not p.startswith("residual="):
            raise LabelSyntaxError(f"unexpected section {p!r}")
        body = p[len("residual="):].strip()
        if body:
            residual = parse_types(body)
    core = parse_core(core_txt)
    for lab in residual:
        if lab.family != core.family:
            raise InvalidLabel("residual family differs from core family")
    return core, residual


def parse_any(text: str):
    """Distinguish a classification/core label from a plain type multiset."""
    s = text.strip()
    if s.startswith("core=") or re.search(r":(?:\d+\*)?uD\[", s.replace(" ", "")):
        return "distinguished", parse_classification(s)
    return "types", parse_types(s)
