"""Structured reports, the per-ring disk cache, and witness re-validation.

Reports are single JSON documents with deterministic field order; identical
inputs and bounds produce byte-identical output with the cache on or off.
Wall-clock timing is deliberately excluded from the canonical document and
only attached on request, since it would break byte-level determinism.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import os
import tempfile

from . import dsl
from .encoding import from_jsonable, to_jsonable
from .errors import BoundExceeded
from .extensions import mccoy_witness
from .localize import natural_map_kernel
from .modules import (ann, content_of_element, has_property_A, ideal_action,
                      is_auslander, is_content_module, is_faithfully_flat,
                      is_flat, is_torsion_free, regular_module,
                      zero_divisors_module)
from .rings import FiniteRing, Ideal, ideal_generated, ring_predicates
from .statements import (faithfully_flat_mccoy_algebras, run_suite,
                         search_counterexample)
from .universe import DEFAULT_LIMITS, UniverseLimits, generate_universe

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "ZDBENCH_CACHE_DIR"


def canonical_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# ---------------------------------------------------------------------------
# per-ring disk cache


class RingCache:
    """Content-addressed cache of per-ring ideal lattices and zero-divisor
    sets.  Entries carry a structural checksum; anything that fails
    validation is recomputed, never trusted."""

    def __init__(self, directory: str | None):
        self.directory = directory
        self.memory: dict = {}
        if directory:
            try:
                os.makedirs(directory, exist_ok=True)
            except OSError as exc:
                log.warning("cache directory unavailable (%s); using memory only", exc)
                self.directory = None

    @classmethod
    def from_env(cls) -> "RingCache":
        return cls(os.environ.get(CACHE_ENV_VAR))

    def _path(self, descriptor: str) -> str:
        digest = hashlib.sha256(descriptor.encode()).hexdigest()[:24]
        return os.path.join(self.directory, f"{digest}.json")

    @staticmethod
    def _checksum(payload: dict) -> str:
        body = json.dumps({k: payload[k] for k in ("descriptor", "ideals", "zero_divisors")},
                          sort_keys=True)
        return hashlib.sha256(body.encode()).hexdigest()

    def load(self, descriptor: str) -> dict | None:
        if descriptor in self.memory:
            return self.memory[descriptor]
        if not self.directory:
            return None
        path = self._path(descriptor)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
            if payload.get("descriptor") != descriptor:
                raise ValueError("descriptor mismatch")
            if payload.get("checksum") != self._checksum(payload):
                raise ValueError("checksum mismatch")
            return payload
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            log.warning("corrupt cache entry for %s (%s); recomputing", descriptor, exc)
            return None

    def store(self, descriptor: str, ideals, zero_divisors):
        payload = {
            "descriptor": descriptor,
            "ideals": to_jsonable(ideals),
            "zero_divisors": to_jsonable(zero_divisors),
        }
        payload["checksum"] = self._checksum(payload)
        self.memory[descriptor] = payload
        if not self.directory:
            return
        path = self._path(descriptor)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("cache write failed for %s (%s)", descriptor, exc)
            try:
                os.unlink(tmp)
            except OSError:
                pass

    def prime_ring(self, R: FiniteRing) -> bool:
        """Install cached lattice/zero-divisor data on R after structural
        validation; returns True on a cache hit."""
        payload = self.load(R.descriptor)
        if payload is None:
            return False
        try:
            ideal_sets = [frozenset(from_jsonable(x) for x in ideal)
                          for ideal in payload["ideals"]]
            zd = frozenset(from_jsonable(x) for x in payload["zero_divisors"])
            for elems in ideal_sets:
                if not _is_ideal_set(R, elems):
                    raise ValueError("ideal set not closed")
            if not zd <= set(R.elements):
                raise ValueError("zero-divisor set outside carrier")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("invalid cache entry for %s (%s); recomputing", R.descriptor, exc)
            return False
        lattice = [Ideal(R, tuple(R.sorted_elements(elems)), elems)
                   for elems in ideal_sets]
        lattice.sort(key=lambda I: (len(I.elements),
                                    tuple(sorted(map(R.index, I.elements)))))
        R._ideals = tuple(lattice)
        R._zero_divisors = zd
        return True

    def save_ring(self, R: FiniteRing):
        ideal_elements = [[to_jsonable(e) for e in R.sorted_elements(I.elements)]
                          for I in R.ideals()]
        zd = [to_jsonable(e) for e in R.sorted_elements(R.zero_divisors(include_zero=True))]
        self.store(R.descriptor, ideal_elements, zd)


def _is_ideal_set(R: FiniteRing, elems: frozenset) -> bool:
    if R.zero not in elems:
        return False
    for a in elems:
        if a not in R:
            return False
        for b in elems:
            if R.add(a, b) not in elems:
                return False
    for r in R.elements:
        for a in elems:
            if R.mul(r, a) not in elems:
                return False
    return True


def _prime_and_save(R: FiniteRing, cache: RingCache | None):
    if cache is None:
        return
    if not cache.prime_ring(R):
        R.ideals()
        cache.save_ring(R)


# ---------------------------------------------------------------------------
# reports


def _zd_section(R: FiniteRing, values) -> dict:
    ordered = R.sorted_elements(values)
    return {"values": to_jsonable(ordered),
            "display": [R.element_str(v) for v in ordered]}


def _verdict_section(verdict, R, M, kind) -> dict:
    out = {"holds": verdict.holds}
    if verdict.degenerate:
        out["degenerate"] = True
    if verdict.witness is not None:
        value = verdict.witness.get("element", verdict.witness.get("ideal"))
        display = ""
        if "element" in verdict.witness:
            display = R.element_str(verdict.witness["element"])
        elif "ideal" in verdict.witness:
            display = "(" + ",".join(R.element_str(g)
                                     for g in verdict.witness["ideal"]) + ")"
        out["witness"] = {
            "kind": kind, "ring": R.descriptor, "module": M.tag,
            "value": to_jsonable(value), "display": display,
        }
    return out


def analyze_report(ring_text: str, module_text: str,
                   limits: UniverseLimits = DEFAULT_LIMITS,
                   cache: RingCache | None = None) -> dict:
    R = dsl.build_ring(ring_text)
    _prime_and_save(R, cache)
    M = dsl.build_module(R, module_text)
    preds = ring_predicates(R)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "inputs": {"ring": ring_text, "module": module_text},
        "bounds": limits.as_dict(),
        "ring": {
            "descriptor": R.descriptor,
            "size": R.size,
            "is_field": preds.is_field,
            "is_domain": preds.is_domain,
            "is_local": preds.is_local,
            "maximal_ideals": [
                "(" + ",".join(R.element_str(g) for g in I.small_generators()) + ")"
                for I in preds.maximal_ideals],
            "ideal_count": len(R.ideals()),
            "zero_divisors": _zd_section(R, R.zero_divisors()),
            "units": _zd_section(R, R.units()),
        },
    }
    ausl = is_auslander(M)
    tf = is_torsion_free(M)
    prop_a = has_property_A(M)
    content = is_content_module(M)
    module_section = {
        "descriptor": M.tag,
        "size": M.size,
        "is_zero": M.is_zero,
        "zero_divisors": _zd_section(R, zero_divisors_module(M)),
        "annihilator": "(" + ",".join(
            R.element_str(g) for g in ann(M).small_generators()) + ")",
        "auslander": _verdict_section(ausl, R, M, "auslander"),
        "torsion_free": _verdict_section(tf, R, M, "torsion_free"),
        "property_a": _verdict_section(prop_a, R, M, "property_a"),
        "content_module": _verdict_section(content, R, M, "content"),
        "natural_map_kernel_trivial": natural_map_kernel(M).is_zero,
    }
    try:
        flat = is_flat(M, budget=limits.presentation_budget)
        ffl = is_faithfully_flat(M, budget=limits.presentation_budget)
        module_section["flat"] = {"holds": flat.holds}
        module_section["faithfully_flat"] = {"holds": ffl.holds}
    except BoundExceeded as exc:
        module_section["flat"] = {"holds": None, "note": str(exc)}
        module_section["faithfully_flat"] = {"holds": None, "note": str(exc)}
    report["module"] = module_section
    witnesses = []
    for section in ("auslander", "torsion_free", "property_a", "content_module"):
        w = module_section[section].get("witness")
        if w:
            witnesses.append(w)
    report["witnesses"] = witnesses
    return report


def theorems_report(suite: str = "all",
                    limits: UniverseLimits = DEFAULT_LIMITS,
                    cache: RingCache | None = None) -> dict:
    U = generate_universe(limits)
    for R in U.rings:
        _prime_and_save(R, cache)
    reports = run_suite(suite, U)
    if not reports:
        raise ValueError(f"suite pattern {suite!r} matches no statements")
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "theorems",
        "suite": suite,
        "bounds": limits.as_dict(),
        "universe": {
            "ring_count": len(U.rings),
            "pair_count": sum(len(v) for v in U.modules.values()),
            "algebra_count": sum(len(v) for v in U.algebras.values()),
            "counts": U.counts,
        },
        "statements": [rep.to_dict() for rep in reports],
        "ffl_mccoy_algebras": faithfully_flat_mccoy_algebras(U),
        "passed": all(rep.passed for rep in reports),
    }


def search_report(hyp: str, concl: str,
                  limits: UniverseLimits = DEFAULT_LIMITS) -> dict:
    U = generate_universe(limits)
    witnesses = search_counterexample(hyp, concl, U)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "search",
        "inputs": {"hyp": hyp, "concl": concl},
        "bounds": limits.as_dict(),
        "witnesses": witnesses,
        "count": len(witnesses),
    }


def witness_report(f_text: str, g_text: str, ring_text: str,
                   limits: UniverseLimits = DEFAULT_LIMITS) -> dict:
    R = dsl.build_ring(ring_text)
    M = regular_module(R)
    f = dsl.parse_ext(f_text, R)
    g = dsl.parse_ext(g_text, R, M)
    m = mccoy_witness(f, g)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "witness",
        "inputs": {"ring": ring_text, "f": f_text, "g": g_text},
        "witness": {
            "kind": "mccoy_witness",
            "ring": R.descriptor,
            "module": M.tag,
            "f_support": to_jsonable(list(f.support)),
            "value": to_jsonable(m),
            "display": R.element_str(m),
        },
    }


# ---------------------------------------------------------------------------
# witness re-validation


def collect_witnesses(node, out=None) -> list:
    """Walk a report for witness entries (dicts carrying a known kind)."""
    if out is None:
        out = []
    if isinstance(node, dict):
        if "kind" in node and "value" in node:
            out.append(node)
        for v in node.values():
            collect_witnesses(v, out)
    elif isinstance(node, list):
        for v in node:
            collect_witnesses(v, out)
    return out


def revalidate_witness(entry: dict) -> bool:
    """Independently re-check one witness entry against its defining predicate."""
    kind = entry["kind"]
    value = from_jsonable(entry["value"])
    ring_desc = entry.get("ring")
    module_tag = entry.get("module")
    if ring_desc == "Z":
        # integer-adapter witnesses: gcd arithmetic
        n = int(module_tag.split("/")[1])
        if kind == "torsion_free":
            return math.gcd(value, n) > 1
        return False
    if kind in ("auslander", "torsion_free", "property_a", "content"):
        R = dsl.build_ring(ring_desc)
        M = dsl.build_module(R, module_tag)
        zr = R.zero_divisors(include_zero=True)
        zm = zero_divisors_module(M, include_zero=True)
        if kind == "auslander":
            return value in zr and value not in zm and value != R.zero
        if kind == "torsion_free":
            return value in zm and value not in zr and value != R.zero
        if kind == "property_a":
            gens = [from_jsonable(g) for g in entry["value"]]
            I = ideal_generated(R, gens)
            inside = (I.elements - {R.zero}) <= (zm - {R.zero})
            killed = any(m != M.zero and all(M.act(a, m) == M.zero for a in gens)
                         for m in M.elements)
            return inside and not killed
        if kind == "content":
            c = content_of_element(M, value)
            return value not in ideal_action(c, M).elements
    if kind in ("mccoy", "ohm_rush"):
        alg = dsl.build_algebra(entry["algebra"])
        B, Rb = alg.ring, alg.base
        if kind == "ohm_rush":
            f = value
            return f not in alg.ideal_extension(alg.content(f)).elements
        f, g = value
        if g == B.zero or B.mul(f, g) != B.zero:
            return False
        gens = alg.content(f).generators
        return not any(r != Rb.zero and all(Rb.mul(a, r) == Rb.zero for a in gens)
                       for r in Rb.elements)
    if kind == "mccoy_witness":
        R = dsl.build_ring(entry["ring"])
        m = value
        coeffs = [from_jsonable(c) for _, c in entry["f_support"]]
        return m != R.zero and all(R.mul(c, m) == R.zero for c in coeffs)
    if kind == "ext_zd":
        R = dsl.build_ring(entry["ring"])
        M = dsl.build_module(R, entry["module"])
        coeffs = [from_jsonable(c) for _, c in entry["f_support"]]
        return value != M.zero and all(M.act(c, value) == M.zero for c in coeffs)
    raise ValueError(f"no revalidator for witness kind {kind!r}")


def revalidate_report(report: dict) -> dict:
    entries = collect_witnesses(report)
    failed = []
    for entry in entries:
        try:
            ok = revalidate_witness(entry)
        except ValueError:
            ok = False
        if not ok:
            failed.append(entry)
    return {"total": len(entries), "failed": failed}


# ---------------------------------------------------------------------------
# human-readable rendering (derived from the structured report)


def render_text(report: dict) -> str:
    lines = []
    cmd = report.get("command")
    if cmd == "analyze":
        ring = report["ring"]
        mod = report["module"]
        lines.append(f"ring {ring['descriptor']} (size {ring['size']})")
        lines.append(f"  field={ring['is_field']} domain={ring['is_domain']} "
                     f"local={ring['is_local']} ideals={ring['ideal_count']}")
        lines.append(f"  Z(R) = {{{', '.join(ring['zero_divisors']['display'])}}}")
        lines.append(f"module {mod['descriptor']} (size {mod['size']})")
        lines.append(f"  Z(M) = {{{', '.join(mod['zero_divisors']['display'])}}}")
        lines.append(f"  annihilator = {mod['annihilator']}")
        for name in ("auslander", "torsion_free", "property_a", "content_module"):
            v = mod[name]
            suffix = ""
            if v.get("witness"):
                suffix = f" (witness {v['witness']['display']})"
            lines.append(f"  {name} = {v['holds']}{suffix}")
        lines.append(f"  flat = {mod['flat']['holds']}  "
                     f"faithfully_flat = {mod['faithfully_flat']['holds']}")
        lines.append(f"  torsion_free_kernel_trivial = {mod['natural_map_kernel_trivial']}")
    elif cmd == "theorems":
        u = report["universe"]
        lines.append(f"suite {report['suite']}: rings={u['ring_count']} "
                     f"pairs={u['pair_count']} algebras={u['algebra_count']}")
        for st in report["statements"]:
            status = "PASS" if st["passed"] else "FAIL"
            lines.append(f"  [{status}] {st['id']}: applicable={st['applicable_count']} "
                         f"checked={st['checked']} failures={len(st['failures'])}")
            for w in st["warnings"]:
                lines.append(f"      warning: {w}")
        lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'}")
    elif cmd == "search":
        lines.append(f"search hyp={report['inputs']['hyp']!r} "
                     f"concl={report['inputs']['concl']!r}: {report['count']} witnesses")
        for w in report["witnesses"]:
            lines.append(f"  {w['kind']}: {w['member']}")
    elif cmd == "witness":
        w = report["witness"]
        lines.append(f"witness m = {w['display']} over {w['ring']}")
    else:
        lines.append(json.dumps(report, indent=2))
    return "\n".join(lines) + "\n"
