"""Seeded invariant suites behind `orbitforge selfcheck`."""

from __future__ import annotations

import json
import os
import random
from fractions import Fraction
from dataclasses import dataclass, field
from pathlib import Path

from . import affine as aff
from .distinguished import (
    classify,
    conjugate_triple,
    is_canonical,
    random_isotropy_element,
    synthesize_distinguished,
)
from .groups import algebra_basis
from .labels import CORE_TABLE, DistinguishedLabel, InvalidLabel, TypeLabel, parse_any, reduced_form_kind, type_row
from .scalars import Gaussian, Quaternion, format_gaussian, parse_gaussian
from .structures import FAMILIES, check_compatibility, quaternionify, signature_params, standard_space
from .typedecomp import (
    NoIndexDefined,
    decompose_nilpotent_pair,
    gram_index,
    reduced_pair,
    synthesize_type,
    type_index,
)

SCOPES = ("scalars", "forms", "types", "distinguished", "affine", "fixtures")
FIXTURE_ENV = "ORBITFORGE_FIXTURES"


@dataclass
class SuiteReport:
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def record(self, scope: str, name: str, ok: bool, detail: str = "", repro=None):
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {scope}:{name}" + ("" if ok else f": {detail}"))
        if not ok:
            self.failures.append({"scope": scope, "case": name, "detail": detail, "repro": repro})

    @property
    def ok(self):
        return not self.failures


def _rg(rng, k=4):
    return Gaussian(rng.randint(-k, k), rng.randint(-k, k)) / rng.randint(1, k)


def suite_scalars(rep: SuiteReport, rng: random.Random):
    bad = None
    for _ in range(300):
        a, b, c = _rg(rng), _rg(rng), _rg(rng)
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            bad = ("field laws", [str(a), str(b), str(c)])
            break
        if a and a * a.inverse() != 1:
            bad = ("inverse", [str(a)])
            break
        if parse_gaussian(format_gaussian(a)) != a:
            bad = ("text round trip", [str(a)])
            break
        x, y = Quaternion(a, b), Quaternion(c, _rg(rng))
        if (x * y).q() != y.q() * x.q() or (x * y).norm() != x.norm() * y.norm():
            bad = ("quaternion laws", [str(x), str(y)])
            break
    rep.record("scalars", "field-and-quaternion-laws", bad is None, bad[0] if bad else "", bad)


def suite_forms(rep: SuiteReport, rng: random.Random):
    for fam in FAMILIES:
        for n in (2, 4):
            for p in signature_params(fam, n):
                sp = standard_space(fam, n, p)
                r = check_compatibility(sp)
                rep.record("forms", f"{fam}-n{n}-p{p}", bool(r), "; ".join(r.failures), {"family": fam, "n": n, "p": p})
                if sp.sigma is not None and sp.sigma.sign == -1 and sp.form is not None:
                    Q = quaternionify(sp)
                    ok = True
                    for _ in range(20):
                        u = tuple(_rg(rng) for _ in range(n))
                        v = tuple(_rg(rng) for _ in range(n))
                        lam, mu = Quaternion(_rg(rng), _rg(rng)), Quaternion(_rg(rng), _rg(rng))
                        lhs = Q.transported_form(Q.scalar_action(lam, u), Q.scalar_action(mu, v))
                        if lhs != lam * Q.transported_form(u, v) * mu.q():
                            ok = False
                            break
                    rep.record("forms", f"{fam}-n{n}-p{p}-quaternionic", ok, "scalar law failed", {"family": fam, "n": n, "p": p})


def suite_types(rep: SuiteReport, rng: random.Random, hmax: int = 4):
    for fam in FAMILIES:
        for h in range(hmax + 1):
            kind, has_eps = type_row(fam, h)
            for eps in ((1, -1) if has_eps else (None,)):
                L = TypeLabel(fam, h, kind, eps)
                p = synthesize_type(L)
                d = decompose_nilpotent_pair(p)
                ok = d.labels == (L,)
                detail = "" if ok else f"decomposed to {[str(x) for x in d.labels]}"
                if ok:
                    try:
                        if type_index(L) != gram_index(p.space):
                            ok, detail = False, "index formula differs from Gram index"
                    except NoIndexDefined:
                        pass
                if ok and p.space.form is not None:
                    rp = reduced_pair(p)
                    G = rp.tau_bar.matrix
                    if p.space.form.hermitian:
                        want, got = "hermitian", "hermitian" if G.H == G else "none"
                    else:
                        want = reduced_form_kind(p.space.form.kind, h)
                        got = "symmetric" if G.T == G else "alternating" if G.T == -G else "none"
                    if got != want:
                        ok, detail = False, f"reduced form is {got}, expected {want}"
                rep.record("types", str(L), ok, detail, {"label": str(L)})


def core_labels(hmax: int = 4):
    """Admissible distinguished core labels over a small parameter grid."""
    mods = (None, Gaussian(Fraction(1, 2)), Gaussian(3), Gaussian(1, 1), Gaussian(0))
    out = []
    for row in CORE_TABLE:
        for h in range(hmax + 1):
            for eps in (None, 1, -1):
                for mod in mods:
                    for cross in (None, Fraction(0), Fraction(1)):
                        lab = DistinguishedLabel(row.family, h, row.kind, eps, mod, cross)
                        try:
                            lab.validate()
                        except InvalidLabel:
                            continue
                        if lab not in out:
                            out.append(lab)
    return out


def suite_distinguished(rep: SuiteReport, rng: random.Random, hmax: int = 3, conjugations: int = 2):
    for lab in core_labels(hmax):
        t = synthesize_distinguished(lab, ())
        r = classify(t)
        ok = r.core == lab and not r.residual_types and is_canonical(t, r)
        detail = "" if ok else f"classified as {r.core}"
        if ok:
            basis = algebra_basis(t.space, [t.v0])
            for k in range(conjugations):
                P = random_isotropy_element(t.space, t.v0, rng.randint(0, 10**6), basis)
                r2 = classify(conjugate_triple(t, P))
                if r2.labels != r.labels:
                    ok, detail = False, f"conjugation changed the label to {r2.core}"
                    break
        rep.record("distinguished", str(lab), ok, detail, {"label": str(lab)})


def suite_affine(rep: SuiteReport, rng: random.Random, pairs: int = 5):
    for fam in aff.AFFINE_CASES:
        for n in (1, 2, 4):
            try:
                ctx = aff.build_context(fam, n, 0)
            except Exception:
                continue
            basis = aff.base_algebra_basis(ctx)
            ok, detail = True, ""
            for _ in range(pairs):
                a = aff.random_affine_element(ctx, rng, basis)
                b = aff.random_affine_element(ctx, rng, basis)
                ga, gb = aff.embed(ctx, a), aff.embed(ctx, b)
                if aff.project(ctx, ga) != a:
                    ok, detail = False, "project(embed(a)) != a"
                elif aff.project(ctx, ga @ gb) != a.compose(b):
                    ok, detail = False, "project is not multiplicative"
                elif aff.exact_homomorphism(fam) and ga @ gb != aff.embed(ctx, a.compose(b)):
                    ok, detail = False, "embed is not multiplicative"
                if not ok:
                    break
            rep.record("affine", f"{fam}-n{n}", ok, detail, {"family": fam, "n": n})


def fixture_dir() -> Path | None:
    d = os.environ.get(FIXTURE_ENV)
    return Path(d) if d else None


def suite_fixtures(rep: SuiteReport, rng: random.Random):
    from .serialize import parse

    d = fixture_dir()
    if d is None or not d.is_dir():
        return
    for path in sorted(d.glob("*.json")):
        text = path.read_text()
        try:
            doc = json.loads(text)
            kind, obj = parse(text)
        except Exception as exc:
            rep.record("fixtures", path.name, False, f"unreadable: {exc}", {"file": str(path)})
            continue
        ok, detail = True, ""
        try:
            if kind == "space":
                r = check_compatibility(obj)
                ok = bool(r) and (obj.form is None or obj.form.is_nondegenerate())
                detail = "; ".join(r.failures) or ("degenerate form" if not ok else "")
            elif kind == "pair":
                decompose_nilpotent_pair(obj)
            elif kind == "triple":
                res = classify(obj)
                want = doc.get("expect")
                if want is not None:
                    _, (core, residual) = parse_any(want)
                    if (core, residual) != res.labels:
                        ok, detail = False, f"classified as {res.label_string()}"
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rep.record("fixtures", path.name, ok, detail, {"file": str(path), "document": doc})


_SUITES = {
    "scalars": suite_scalars,
    "forms": suite_forms,
    "types": suite_types,
    "distinguished": suite_distinguished,
    "affine": suite_affine,
    "fixtures": suite_fixtures,
}


def run(scope: str = "all", seed: int = 0) -> SuiteReport:
    scopes = SCOPES if scope == "all" else (scope,)
    rep = SuiteReport()
    for s in scopes:
        if s not in _SUITES:
            raise ValueError(f"unknown scope {s!r}")
        _SUITES[s](rep, random.Random(f"{seed}:{s}"))
    return rep


def dump_repro(rep: SuiteReport, path: Path, scope: str, seed: int):
    doc = {"scope": scope, "seed": seed, "failures": rep.failures}
    path.write_text(json.dumps(doc, indent=1, sort_keys=True, default=str) + "\n")
