"""Executable checks for every in-scope statement, plus counterexample search.

Each registered statement sweeps the universe members satisfying its
hypotheses, evaluates its conclusion, and reports pass/fail with re-checkable
witnesses.  A statement never asserts on members failing its hypotheses, and
zero applicable members surfaces as a warning instead of a silent pass.

Extension-ring statements quantify over the ideal lattice: a polynomial or
series element is a zero-divisor on M[G] exactly when its content ideal kills
a nonzero element of M, so content depends only on the ideal generated by the
coefficients and one representative element per lattice ideal covers every
finitely supported element.
"""

from __future__ import annotations

import fnmatch
import itertools
from dataclasses import dataclass, field

from .encoding import to_jsonable
from .errors import BoundExceeded
from .extensions import (brute_force_zd, diagonal_algebra,
                         is_mccoy_algebra, is_ohm_rush,
                         is_zd_on_extension, mccoy_witness, module_poly,
                         ring_poly, ring_series)
from .localize import (localize, localize_module, localized_ring_as_base_module,
                       natural_map_kernel)
from .modules import (all_submodules, ann, content_of_element,
                      content_surjective, cyclic_module, direct_sum,
                      generating_set, has_property_A, hom_module,
                      ideal_action, is_auslander, is_content_module,
                      is_faithfully_flat, is_flat, is_torsion_free,
                      tensor_with_algebra, zero_divisors_module)
from .rings import (Zmod, all_mult_closed_subsets, ideal_generated,
                    product_ring, ring_predicates)
from .universe import Universe, ZAdapterCase, ZRegularCase, z_adapter_cases


@dataclass
class StatementReport:
    """Outcome of one statement over the universe."""

    id: str
    description: str
    applicable: list = field(default_factory=list)
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def finish(self) -> "StatementReport":
        if not self.applicable:
            self.warnings.append("no applicable members: statement not exercised")
        return self

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "passed": self.passed,
            "applicable_count": len(self.applicable),
            "checked": self.checked,
            "applicable": list(self.applicable),
            "failures": to_jsonable(self.failures),
            "notes": list(self.notes),
            "warnings": list(self.warnings),
            "extra": to_jsonable(self.extra),
        }


def _member(R, M) -> str:
    return f"{R.descriptor} :: {M.tag}"


def witness_entry(kind, *, ring=None, module=None, algebra=None, value=None,
                  display="", variant=None) -> dict:
    entry = {"kind": kind, "display": display, "value": to_jsonable(value)}
    if ring is not None:
        entry["ring"] = ring.descriptor
    if module is not None:
        entry["module"] = module.tag
    if algebra is not None:
        entry["algebra"] = algebra.descriptor
    if variant is not None:
        entry["variant"] = variant
    return entry


def _nonzero_pairs(U: Universe):
    for R, M in U.pairs():
        if not M.is_zero:
            yield R, M


# ---------------------------------------------------------------------------
# extension profiles (content-annihilator criterion over the ideal lattice)


def _ext_profile(U: Universe, R, M, variant: str):
    """(auslander_ext, tf_ext, witnesses) for M[G] / M[[X]] over R[G] / R[[X]]."""
    key = ("extp", R.descriptor, M.tag, variant)
    cached = U.caches.get(key)
    if cached is not None:
        return cached
    reg = U.regular(R)
    ausl, tf = True, True
    ausl_wit = tf_wit = None
    for I in R.ideals():
        gens = I.small_generators()
        support = {(i,): g for i, g in enumerate(gens)}
        if variant == "monoid":
            f = ring_poly(R, support)
        else:
            f = ring_series(R, support, U.limits.series_precision)
        zd_ring = is_zd_on_extension(f, reg).holds
        zd_mod = is_zd_on_extension(f, M).holds
        if zd_ring and not zd_mod and ausl:
            ausl = False
            ausl_wit = witness_entry("ext_ideal", ring=R, module=M,
                                     value=gens, variant=variant,
                                     display="c(f) = (" + ",".join(map(R.element_str, gens)) + ")")
        if zd_mod and not zd_ring and tf:
            tf = False
            tf_wit = witness_entry("ext_ideal", ring=R, module=M,
                                   value=gens, variant=variant,
                                   display="c(f) = (" + ",".join(map(R.element_str, gens)) + ")")
    result = (ausl, tf, ausl_wit, tf_wit)
    U.caches[key] = result
    return result


def _extension_iff(U: Universe, rep: StatementReport, variant: str,
                   side: str, ring_property_a: bool = False):
    """Shared sweep for the polynomial/series transfer theorems.

    side: "auslander", "torsion_free", or "both" (the conjunction)."""
    for R, M in _nonzero_pairs(U):
        if ring_property_a and not has_property_A(U.regular(R)).holds:
            continue
        if side in ("auslander", "both") and not has_property_A(M).holds:
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        ausl_ext, tf_ext, ausl_wit, tf_wit = _ext_profile(U, R, M, variant)
        base_ausl = is_auslander(M).holds
        base_tf = is_torsion_free(M).holds
        if side == "auslander":
            agree = ausl_ext == base_ausl
            wit = ausl_wit
        elif side == "torsion_free":
            agree = tf_ext == base_tf
            wit = tf_wit
        else:
            agree = (ausl_ext and tf_ext) == (base_ausl and base_tf)
            wit = ausl_wit or tf_wit
        if not agree:
            rep.failures.append({
                "member": _member(R, M),
                "extension": {"auslander": ausl_ext, "torsion_free": tf_ext},
                "base": {"auslander": base_ausl, "torsion_free": base_tf},
                "witness": wit,
            })


# ---------------------------------------------------------------------------
# statement implementations


def _stmt_def_2_1(U: Universe) -> StatementReport:
    rep = StatementReport(
        "def-2.1",
        "Auslander predicate coherence: verdict equals the set inclusion "
        "Z(R) within Z(M), recomputed from raw zero-divisor scans")
    for R, M in _nonzero_pairs(U):
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        zr = R.zero_divisors(include_zero=True) - {R.zero}
        zm = zero_divisors_module(M, include_zero=True) - {R.zero}
        v = is_auslander(M)
        if v.holds != zr.issubset(zm):
            rep.failures.append({"member": _member(R, M), "verdict": v.holds})
        elif not v.holds:
            r = v.witness["element"]
            if r not in zr or r in zm:
                rep.failures.append({"member": _member(R, M),
                                     "witness_invalid": to_jsonable(r)})
    return rep.finish()


def _stmt_content_def(U: Universe) -> StatementReport:
    rep = StatementReport(
        "content-def",
        "content coherence: c(m) equals the intersection of all lattice ideals "
        "I with m in IM, and is contained in each of them")
    for R, M in _nonzero_pairs(U):
        if M.size > 64:
            continue
        rep.applicable.append(_member(R, M))
        for m in M.elements:
            rep.checked += 1
            qualifying = [I for I in R.ideals()
                          if m in _im_elements(U, R, M, I)]
            if not qualifying:
                rep.failures.append({"member": _member(R, M),
                                     "element": to_jsonable(m),
                                     "reason": "no qualifying ideal"})
                continue
            expected = frozenset.intersection(*[I.elements for I in qualifying])
            c = content_of_element(M, m)
            if c.elements != expected or not all(c.elements <= I.elements for I in qualifying):
                rep.failures.append({"member": _member(R, M),
                                     "element": to_jsonable(m)})
    rep.notes.append("members with |M| <= 64 checked elementwise")
    return rep.finish()


def _im_elements(U: Universe, R, M, I) -> frozenset:
    return ideal_action(I, M).elements


def _stmt_prop_2_2_1(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-1",
        "over a domain every nonzero module is Auslander "
        "(finite domains are fields; the integer adapter supplies the "
        "non-field domain instances)")
    for R, M in _nonzero_pairs(U):
        if not ring_predicates(R).is_domain:
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        v = is_auslander(M)
        if not v.holds:
            rep.failures.append({"member": _member(R, M), "witness": v.witness})
    for case in z_adapter_cases():
        rep.applicable.append(f"Z :: {case.case_id}")
        rep.checked += 1
        if not case.is_auslander().holds:
            rep.failures.append({"member": f"Z :: {case.case_id}"})
    reg = ZRegularCase()
    rep.applicable.append(f"Z :: {reg.case_id}")
    rep.checked += 1
    if not reg.is_auslander().holds:
        rep.failures.append({"member": "Z :: Z"})
    return rep.finish()


def _flat_or_note(rep: StatementReport, R, M):
    try:
        return is_flat(M)
    except BoundExceeded as exc:
        rep.notes.append(f"skipped {_member(R, M)}: {exc}")
        return None


def _stmt_prop_2_2_2(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-2",
        "a flat content module whose element contents reach every principal "
        "ideal is Auslander")
    for R, M in _nonzero_pairs(U):
        flat = _flat_or_note(rep, R, M)
        if flat is None or not flat.holds:
            continue
        if not is_content_module(M).holds or not content_surjective(M):
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        v = is_auslander(M)
        if not v.holds:
            rep.failures.append({"member": _member(R, M), "witness": v.witness})
    return rep.finish()


def _stmt_prop_2_2_3(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-3", "a module with zero annihilator is Auslander")
    for R, M in _nonzero_pairs(U):
        if not ann(M).is_zero:
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        v = is_auslander(M)
        if not v.holds:
            rep.failures.append({"member": _member(R, M), "witness": v.witness})
    return rep.finish()


def _hom_of(U: Universe, R, M):
    key = ("hom", R.descriptor, M.tag)
    cached = U.caches.get(key)
    if cached is None:
        cached = hom_module(M, budget=U.limits.hom_budget)
        U.caches[key] = cached
    return cached


def _stmt_prop_2_2_4(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-4",
        "if the annihilator of M is zero, the module of linear self-maps "
        "of M is Auslander")
    for R, M in _nonzero_pairs(U):
        if not ann(M).is_zero:
            continue
        if M.size ** len(generating_set(M)) > U.limits.hom_budget:
            rep.notes.append(f"skipped {_member(R, M)}: hom budget")
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        H = _hom_of(U, R, M)
        v = is_auslander(H)
        if not v.holds:
            rep.failures.append({"member": _member(R, M), "witness": v.witness})
    return rep.finish()


def _stmt_prop_2_2_5(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-5",
        "Z(N) is contained in Z(M) for every submodule N, so an Auslander "
        "submodule forces M to be Auslander")
    for R, M in _nonzero_pairs(U):
        if M.size > 64:
            continue
        try:
            subs = all_submodules(M)
        except BoundExceeded as exc:
            rep.notes.append(f"skipped {_member(R, M)}: {exc}")
            continue
        rep.applicable.append(_member(R, M))
        zm = zero_divisors_module(M, include_zero=True)
        for N in subs:
            if N.is_zero:
                continue
            rep.checked += 1
            Nmod = N.as_module()
            zn = zero_divisors_module(Nmod, include_zero=True)
            if not zn <= zm:
                rep.failures.append({
                    "member": _member(R, M),
                    "submodule_size": len(N.elements),
                    "reason": "Z(N) not within Z(M)"})
                continue
            if is_auslander(Nmod).holds and not is_auslander(M).holds:
                rep.failures.append({
                    "member": _member(R, M),
                    "submodule_size": len(N.elements),
                    "reason": "Auslander submodule but M not Auslander"})
    rep.notes.append("members with |M| <= 64, full submodule lattice")
    return rep.finish()


def _stmt_prop_2_2_6(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.2-6",
        "a direct sum with an Auslander summand is Auslander "
        "(finite-index instantiation: two to three summands)")
    for R in U.rings:
        mods = [M for M in U.modules[R.descriptor] if not M.is_zero]
        triple_done = False
        for M in mods:
            if not is_auslander(M).holds:
                continue
            for Mp in mods:
                if M.size * Mp.size > U.limits.max_module:
                    continue
                rep.applicable.append(f"{R.descriptor} :: Sum({M.tag},{Mp.tag})")
                rep.checked += 1
                S = direct_sum(M, Mp)
                if not is_auslander(S).holds:
                    rep.failures.append({"member": _member(R, S)})
                elif not triple_done and M.size * M.size * Mp.size <= U.limits.max_module:
                    T = direct_sum(direct_sum(M, M), Mp)
                    rep.checked += 1
                    rep.applicable.append(
                        f"{R.descriptor} :: Sum(Sum({M.tag},{M.tag}),{Mp.tag})")
                    if not is_auslander(T).holds:
                        rep.failures.append({"member": _member(R, T)})
                    triple_done = True
    rep.notes.append("finite-index instantiation (2-3 summands)")
    return rep.finish()


def _localization_of(U: Universe, R, S):
    key = ("loc", R.descriptor,
           tuple(sorted(map(R.index, S.elements))))
    cached = U.caches.get(key)
    if cached is None:
        cached = localize(R, S)
        U.caches[key] = cached
    return cached


def _stmt_prop_2_3(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-2.3",
        "localizing an Auslander module at a multiplicative set avoiding "
        "Z(M) yields an Auslander module over the localized ring")
    instances = []
    for R, M in _nonzero_pairs(U):
        zm = zero_divisors_module(M, include_zero=True)
        candidates = frozenset(R.elements) - zm
        zr = R.zero_divisors(include_zero=True)
        hyp = is_auslander(M).holds
        for S in all_mult_closed_subsets(R, candidates):
            ring_loc = _localization_of(U, R, S)
            mod_loc = localize_module(M, S, ring_loc)
            MS = mod_loc.structure
            s_display = "{" + ",".join(
                R.element_str(s) for s in R.sorted_elements(S.elements)) + "}"
            has_ring_zd = any(s in zr and s != R.zero for s in S.elements)
            verdict = is_auslander(MS)
            if has_ring_zd:
                # only reachable when M is not Auslander; logged as the
                # non-vacuous exercise of the localization machinery
                instances.append({
                    "member": _member(R, M),
                    "S": s_display,
                    "hypothesis_met": hyp,
                    "localized_auslander": bool(verdict.holds),
                    "localized_ring_size": len(ring_loc.structure.elements),
                    "localized_module_size": MS.size,
                })
            if not hyp:
                continue
            rep.applicable.append(f"{_member(R, M)} @ S={s_display}")
            rep.checked += 1
            if not verdict.holds and not verdict.degenerate:
                rep.failures.append({
                    "member": _member(R, M), "S": s_display,
                    "witness": verdict.witness})
    rep.extra["zero_divisor_S_instances"] = instances
    rep.notes.append(
        "under the hypotheses S avoids Z(R) automatically; sets S containing "
        "a ring zero-divisor acting regularly on M are logged separately")
    return rep.finish()


def _stmt_prop_a_def(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-a-def",
        "property (A) holds for every universe member (finitely generated "
        "modules over Noetherian rings), re-derived independently per ideal")
    for R, M in _nonzero_pairs(U):
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        v = has_property_A(M)
        zm = zero_divisors_module(M, include_zero=True) - {R.zero}
        direct = True
        offending = None
        for I in R.ideals():
            if not (I.elements - {R.zero}) <= zm:
                continue
            if not any(m != M.zero and all(M.act(a, m) == M.zero for a in I.elements)
                       for m in M.elements):
                direct = False
                offending = I.small_generators()
                break
        if not v.holds or not direct:
            rep.failures.append({
                "member": _member(R, M),
                "verdict": v.holds,
                "direct_recheck": direct,
                "ideal": to_jsonable(offending),
                "witness": v.witness})
    rep.notes.append("a failure here indicates an engine bug, not a refutation")
    return rep.finish()


def _stmt_thm_2_4(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-2.4",
        "for modules with property (A): M[G] is Auslander over R[G] iff M is "
        "Auslander (G = N^1, content-annihilator criterion)")
    _extension_iff(U, rep, "monoid", "auslander")
    rep.notes.append(
        "property (A) holds for every finite module, so the hypothesis "
        "filter never excludes a member at this scale")
    return rep.finish()


def _stmt_lem_2_7(U: Universe) -> StatementReport:
    rep = StatementReport(
        "lem-2.7",
        "constructive witness: every annihilating pair f*g = 0 with g nonzero "
        "yields a nonzero constant m with f*m = 0")
    sweep = mccoy_witness_sweep(U, max_ring=8, degree=min(2, U.limits.degree_bound))
    rep.checked = sweep["pairs_checked"]
    rep.applicable = [f"{d} ({c} annihilating pairs)"
                      for d, c in sweep["per_ring"].items()]
    rep.failures = sweep["failures"]
    rep.notes.append(f"degrees <= {min(2, U.limits.degree_bound)}, rings with |R| <= 8")
    return rep.finish()


def _stmt_thm_2_8(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-2.8",
        "for modules with property (A) over a Noetherian (finite) ring: "
        "M[[X]] is Auslander over R[[X]] iff M is Auslander "
        "(truncated-series instantiation)")
    _extension_iff(U, rep, "series", "auslander")
    rep.notes.append(f"series precision {U.limits.series_precision}")
    return rep.finish()


def _stmt_cor_2_9(U: Universe) -> StatementReport:
    rep = StatementReport(
        "cor-2.9",
        "finitely generated modules over Noetherian rings: the series "
        "Auslander transfer holds with no extra hypothesis (every finite "
        "module is finitely generated)")
    _extension_iff(U, rep, "series", "auslander")
    return rep.finish()


def _stmt_rem_2_10(U: Universe) -> StatementReport:
    rep = StatementReport(
        "rem-2.10",
        "every universe algebra is free as a module (hence projective), so "
        "each must satisfy the element-content identity f in c(f)B")
    for R, alg in U.all_algebras():
        rep.applicable.append(alg.descriptor)
        rep.checked += 1
        v = is_ohm_rush(alg)
        if not v.holds:
            rep.failures.append({"member": alg.descriptor, "witness": v.witness})
    return rep.finish()


def _stmt_def_2_11(U: Universe) -> StatementReport:
    rep = StatementReport(
        "def-2.11",
        "McCoy predicate calibration: every ring over itself is McCoy; the "
        "diagonal into a square of a field is rejected with an annihilating "
        "pair of unit content")
    for R in U.rings:
        alg = U.algebras[R.descriptor][0]
        rep.applicable.append(alg.descriptor)
        rep.checked += 1
        if not is_mccoy_algebra(alg).holds:
            rep.failures.append({"member": alg.descriptor,
                                 "reason": "self algebra rejected"})
    Z2 = Zmod(2)
    diag = diagonal_algebra(Z2, product_ring(Z2, Z2))
    rep.applicable.append(diag.descriptor)
    rep.checked += 1
    v = is_mccoy_algebra(diag)
    expected_pair = ((1, 0), (0, 1))
    if v.holds or v.witness.get("pair") != expected_pair:
        rep.failures.append({"member": diag.descriptor,
                             "verdict": v.holds,
                             "witness": v.witness})
    rep.extra["rejection"] = witness_entry(
        "mccoy", algebra=diag, value=v.witness.get("pair"),
        display="f=(1,0), g=(0,1)")
    # independent inline re-derivation on small algebras
    for R, alg in U.all_algebras():
        B = alg.ring
        if B.size > 16:
            continue
        rep.checked += 1
        verdict = is_mccoy_algebra(alg).holds
        direct = is_ohm_rush(alg).holds and all(
            any(r != R.zero and all(R.mul(a, r) == R.zero
                                    for a in alg.content(f).elements)
                for r in R.elements)
            for f in B.elements for g in B.elements
            if g != B.zero and B.mul(f, g) == B.zero)
        if verdict != direct:
            rep.failures.append({"member": alg.descriptor,
                                 "verdict": verdict, "direct_recheck": direct})
    return rep.finish()


def _mccoy_algebras_of(U: Universe, R):
    key = ("mccoy-algs", R.descriptor)
    cached = U.caches.get(key)
    if cached is None:
        cached = []
        for alg in U.algebras[R.descriptor]:
            try:
                ffl = is_faithfully_flat(alg.as_module()).holds
            except BoundExceeded:
                continue
            if ffl and is_mccoy_algebra(alg).holds:
                cached.append(alg)
        U.caches[key] = cached
    return cached


def _tensor_of(U: Universe, R, M, alg):
    key = ("tensor", R.descriptor, M.tag, alg.descriptor)
    cached = U.caches.get(key)
    if cached is None:
        cached = tensor_with_algebra(M, alg, budget=U.limits.presentation_budget)
        U.caches[key] = cached
    return cached


def _mccoy_tensor_sweep(U: Universe, rep: StatementReport, require_flat: bool,
                        check_torsion_free: bool):
    nontrivial = []
    for R in U.rings:
        algebras = _mccoy_algebras_of(U, R)
        for alg in algebras:
            for M in U.modules[R.descriptor]:
                if M.is_zero or not is_auslander(M).holds:
                    continue
                if not has_property_A(M).holds:
                    continue
                if require_flat:
                    flat = _flat_or_note(rep, R, M)
                    if flat is None or not flat.holds:
                        continue
                try:
                    T = _tensor_of(U, R, M, alg)
                except BoundExceeded as exc:
                    rep.notes.append(f"skipped {_member(R, M)} (x) {alg.descriptor}: {exc}")
                    continue
                member = f"{_member(R, M)} (x) {alg.descriptor}"
                rep.applicable.append(member)
                rep.checked += 1
                if not alg.is_trivial_extension:
                    nontrivial.append(member)
                if T.is_zero:
                    rep.failures.append({"member": member,
                                         "reason": "tensor collapsed to zero"})
                    continue
                v = is_auslander(T)
                ok = v.holds
                if check_torsion_free:
                    ok = ok and is_torsion_free(T).holds
                if not ok:
                    rep.failures.append({"member": member, "witness": v.witness})
    rep.extra["nontrivial_applicable"] = nontrivial


def _stmt_thm_2_13(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-2.13",
        "tensoring an Auslander module with property (A) by a faithfully "
        "flat McCoy algebra yields an Auslander module over the algebra")
    _mccoy_tensor_sweep(U, rep, require_flat=False, check_torsion_free=False)
    return rep.finish()


def _stmt_cor_2_14(U: Universe) -> StatementReport:
    rep = StatementReport(
        "cor-2.14",
        "content-algebra corollary checked through its faithfully-flat + "
        "McCoy consequence (the only content-algebra surface in scope)")
    _mccoy_tensor_sweep(U, rep, require_flat=False, check_torsion_free=False)
    rep.notes.append("hypothesis instantiated by the ffl+McCoy filter")
    return rep.finish()


def _stmt_tf_3_1(U: Universe) -> StatementReport:
    rep = StatementReport(
        "tf-3.1",
        "the two torsion-free definitions coincide: the natural map into "
        "M (x) Q is injective iff Z(M) is within Z(R)")
    for R, M in _nonzero_pairs(U):
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        kernel_trivial = natural_map_kernel(M).is_zero
        v = is_torsion_free(M)
        if kernel_trivial != v.holds:
            rep.failures.append({
                "member": _member(R, M),
                "kernel_trivial": kernel_trivial,
                "inclusion_verdict": v.holds})
    return rep.finish()


def _stmt_thm_3_2(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-3.2",
        "over a ring with property (A): M[G] is torsion-free over R[G] iff "
        "M is torsion-free")
    _extension_iff(U, rep, "monoid", "torsion_free", ring_property_a=True)
    rep.notes.append("every finite ring has property (A); the filter is recorded, not vacuous")
    return rep.finish()


def _stmt_rem_3_3_1(U: Universe) -> StatementReport:
    rep = StatementReport(
        "rem-3.3-1",
        "for S avoiding Z(R), the localization R_S viewed as an R-module "
        "has Z(R_S) = Z(R) and is torsion-free Auslander")
    for R in U.rings:
        candidates = R.regular_elements()
        zr = R.zero_divisors(include_zero=True)
        for S in all_mult_closed_subsets(R, candidates):
            loc = _localization_of(U, R, S)
            RS_mod = localized_ring_as_base_module(loc)
            s_display = "{" + ",".join(
                R.element_str(s) for s in R.sorted_elements(S.elements)) + "}"
            rep.applicable.append(f"{R.descriptor} @ S={s_display}")
            rep.checked += 1
            z_loc = zero_divisors_module(RS_mod, include_zero=True)
            if z_loc != zr:
                rep.failures.append({"member": f"{R.descriptor} @ S={s_display}",
                                     "reason": "Z(R_S) != Z(R)"})
                continue
            if not (is_torsion_free(RS_mod).holds and is_auslander(RS_mod).holds):
                rep.failures.append({"member": f"{R.descriptor} @ S={s_display}",
                                     "reason": "not torsion-free Auslander"})
    return rep.finish()


def _stmt_rem_3_3_2(U: Universe) -> StatementReport:
    rep = StatementReport(
        "rem-3.3-2",
        "integer adapter: Z/n over the domain Z is Auslander but not "
        "torsion-free, and Z(Z/n) contains the ideal (n)")
    torsion_witnesses = []
    for case in z_adapter_cases():
        rep.applicable.append(f"Z :: {case.case_id}")
        rep.checked += 1
        tf = case.is_torsion_free()
        witness = tf.witness["element"]
        ok = (case.is_auslander().holds and not tf.holds
              and case.contains_ideal_n() and case.in_zero_divisors(witness))
        if not ok:
            rep.failures.append({"member": f"Z :: {case.case_id}"})
        else:
            torsion_witnesses.append({
                "kind": "torsion_free", "ring": "Z", "module": case.case_id,
                "value": witness, "display": str(witness)})
    rep.extra["torsion_free_witnesses"] = torsion_witnesses
    rep.notes.append(
        "finite domains are fields, which trivializes the statement; the "
        "adapter carries its desk-scale content analytically")
    return rep.finish()


def _stmt_rem_3_3_3(U: Universe) -> StatementReport:
    rep = StatementReport(
        "rem-3.3-3",
        "the square of a two-element field modulo one factor: torsion-free "
        "but not Auslander, with explicit zero-divisor sets")
    R = product_ring(Zmod(2), Zmod(2))
    I = ideal_generated(R, [(0, 1)])
    M = cyclic_module(R, I)
    rep.applicable.append(_member(R, M))
    rep.checked += 1
    zr = R.zero_divisors(include_zero=True)
    zm = zero_divisors_module(M, include_zero=True)
    ausl = is_auslander(M)
    tf = is_torsion_free(M)
    expected_zr = frozenset({(0, 0), (1, 0), (0, 1)})
    expected_zm = frozenset({(0, 0), (0, 1)})
    ok = (zr == expected_zr and zm == expected_zm and tf.holds
          and not ausl.holds and ausl.witness["element"] == (1, 0))
    if not ok:
        rep.failures.append({
            "member": _member(R, M),
            "Z_R": to_jsonable(R.sorted_elements(zr)),
            "Z_M": to_jsonable(R.sorted_elements(zm)),
            "torsion_free": tf.holds, "auslander": ausl.holds})
    rep.extra["reproduction"] = {
        "ring": R.descriptor,
        "module": M.tag,
        "Z_R": to_jsonable(R.sorted_elements(zr)),
        "Z_M": to_jsonable(R.sorted_elements(zm)),
        "torsion_free": tf.holds,
        "auslander": ausl.holds,
        "auslander_witness": witness_entry(
            "auslander", ring=R, module=M,
            value=ausl.witness["element"], display=R.element_str((1, 0))),
    }
    return rep.finish()


def _stmt_thm_3_4(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-3.4",
        "Noetherian ring, finitely generated module: M[[X]] is torsion-free "
        "over R[[X]] iff M is torsion-free (truncated-series instantiation)")
    _extension_iff(U, rep, "series", "torsion_free")
    rep.notes.append(f"series precision {U.limits.series_precision}")
    return rep.finish()


def _stmt_prop_3_5_1(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.5-1",
        "over a domain, flat modules are torsion-free Auslander")
    for R, M in _nonzero_pairs(U):
        if not ring_predicates(R).is_domain:
            continue
        flat = _flat_or_note(rep, R, M)
        if flat is None or not flat.holds:
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        if not (is_torsion_free(M).holds and is_auslander(M).holds):
            rep.failures.append({"member": _member(R, M)})
    reg = ZRegularCase()
    rep.applicable.append(f"Z :: {reg.case_id} (flat)")
    rep.checked += 1
    if not (reg.is_auslander().holds and reg.is_torsion_free().holds):
        rep.failures.append({"member": "Z :: Z"})
    return rep.finish()


def _stmt_prop_3_5_2(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.5-2",
        "a flat content module with element contents reaching every "
        "principal ideal is torsion-free Auslander")
    for R, M in _nonzero_pairs(U):
        flat = _flat_or_note(rep, R, M)
        if flat is None or not flat.holds:
            continue
        if not is_content_module(M).holds or not content_surjective(M):
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        if not (is_torsion_free(M).holds and is_auslander(M).holds):
            rep.failures.append({"member": _member(R, M)})
    return rep.finish()


def _stmt_prop_3_5_3(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.5-3",
        "finitely generated flat module with zero annihilator: its module "
        "of linear self-maps is torsion-free Auslander")
    for R, M in _nonzero_pairs(U):
        if not ann(M).is_zero:
            continue
        flat = _flat_or_note(rep, R, M)
        if flat is None or not flat.holds:
            continue
        if M.size ** len(generating_set(M)) > U.limits.hom_budget:
            rep.notes.append(f"skipped {_member(R, M)}: hom budget")
            continue
        rep.applicable.append(_member(R, M))
        rep.checked += 1
        H = _hom_of(U, R, M)
        if not (is_torsion_free(H).holds and is_auslander(H).holds):
            rep.failures.append({"member": _member(R, M)})
    return rep.finish()


def _flat_sum_sweep(U: Universe, rep: StatementReport, label: str):
    for R in U.rings:
        mods = [M for M in U.modules[R.descriptor] if not M.is_zero]
        flat_mods = []
        for M in mods:
            flat = _flat_or_note(rep, R, M)
            if flat is not None and flat.holds:
                flat_mods.append(M)
        triple_done = False
        for M in flat_mods:
            if not is_auslander(M).holds:
                continue
            for Mp in flat_mods:
                if M.size * Mp.size > U.limits.max_module:
                    continue
                rep.applicable.append(
                    f"{R.descriptor} :: {label}({M.tag},{Mp.tag})")
                rep.checked += 1
                S = direct_sum(M, Mp)
                if not (is_torsion_free(S).holds and is_auslander(S).holds):
                    rep.failures.append({"member": _member(R, S)})
                elif not triple_done and M.size * M.size * Mp.size <= U.limits.max_module:
                    T = direct_sum(direct_sum(M, M), Mp)
                    rep.applicable.append(
                        f"{R.descriptor} :: {label}({M.tag},{M.tag},{Mp.tag})")
                    rep.checked += 1
                    if not (is_torsion_free(T).holds and is_auslander(T).holds):
                        rep.failures.append({"member": _member(R, T)})
                    triple_done = True
    rep.notes.append("finite-index instantiation (2-3 summands/factors)")


def _stmt_prop_3_5_4(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.5-4",
        "a direct sum of flat modules with an Auslander summand is "
        "torsion-free Auslander")
    _flat_sum_sweep(U, rep, "Sum")
    return rep.finish()


def _stmt_prop_3_5_5(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.5-5",
        "over a coherent ring (every finite ring), a product of flat "
        "modules with an Auslander factor is torsion-free Auslander")
    _flat_sum_sweep(U, rep, "Prod")
    rep.notes.append("finite products coincide with finite direct sums")
    return rep.finish()


def _stmt_prop_3_6(U: Universe) -> StatementReport:
    rep = StatementReport(
        "prop-3.6",
        "when both R and M have property (A): M[G] is torsion-free Auslander "
        "over R[G] iff M is torsion-free Auslander")
    _extension_iff(U, rep, "monoid", "both", ring_property_a=True)
    return rep.finish()


def _stmt_cor_3_7(U: Universe) -> StatementReport:
    rep = StatementReport(
        "cor-3.7",
        "Noetherian ring, finitely generated module: the monoid-extension "
        "torsion-free Auslander transfer holds with no extra hypothesis")
    _extension_iff(U, rep, "monoid", "both")
    return rep.finish()


def _stmt_thm_3_8(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-3.8",
        "tensoring a flat Auslander module with property (A) by a faithfully "
        "flat McCoy algebra yields a torsion-free Auslander module over it")
    _mccoy_tensor_sweep(U, rep, require_flat=True, check_torsion_free=True)
    return rep.finish()


def _stmt_thm_3_9(U: Universe) -> StatementReport:
    rep = StatementReport(
        "thm-3.9",
        "Noetherian ring, finitely generated module: M[[X]] is torsion-free "
        "Auslander over R[[X]] iff M is torsion-free Auslander")
    _extension_iff(U, rep, "series", "both")
    return rep.finish()


# ---------------------------------------------------------------------------
# registry


REGISTRY = {
    "def-2.1": _stmt_def_2_1,
    "content-def": _stmt_content_def,
    "prop-2.2-1": _stmt_prop_2_2_1,
    "prop-2.2-2": _stmt_prop_2_2_2,
    "prop-2.2-3": _stmt_prop_2_2_3,
    "prop-2.2-4": _stmt_prop_2_2_4,
    "prop-2.2-5": _stmt_prop_2_2_5,
    "prop-2.2-6": _stmt_prop_2_2_6,
    "prop-2.3": _stmt_prop_2_3,
    "prop-a-def": _stmt_prop_a_def,
    "thm-2.4": _stmt_thm_2_4,
    "lem-2.7": _stmt_lem_2_7,
    "thm-2.8": _stmt_thm_2_8,
    "cor-2.9": _stmt_cor_2_9,
    "rem-2.10": _stmt_rem_2_10,
    "def-2.11": _stmt_def_2_11,
    "thm-2.13": _stmt_thm_2_13,
    "cor-2.14": _stmt_cor_2_14,
    "tf-3.1": _stmt_tf_3_1,
    "thm-3.2": _stmt_thm_3_2,
    "rem-3.3-1": _stmt_rem_3_3_1,
    "rem-3.3-2": _stmt_rem_3_3_2,
    "rem-3.3-3": _stmt_rem_3_3_3,
    "thm-3.4": _stmt_thm_3_4,
    "prop-3.5-1": _stmt_prop_3_5_1,
    "prop-3.5-2": _stmt_prop_3_5_2,
    "prop-3.5-3": _stmt_prop_3_5_3,
    "prop-3.5-4": _stmt_prop_3_5_4,
    "prop-3.5-5": _stmt_prop_3_5_5,
    "prop-3.6": _stmt_prop_3_6,
    "cor-3.7": _stmt_cor_3_7,
    "thm-3.8": _stmt_thm_3_8,
    "thm-3.9": _stmt_thm_3_9,
}

REQUIRED_IDS = (
    "def-2.1", "content-def",
    "prop-2.2-1", "prop-2.2-2", "prop-2.2-3", "prop-2.2-4", "prop-2.2-5",
    "prop-2.2-6", "prop-2.3", "prop-a-def", "thm-2.4", "lem-2.7", "thm-2.8",
    "cor-2.9", "rem-2.10", "def-2.11", "thm-2.13", "cor-2.14", "tf-3.1",
    "thm-3.2", "rem-3.3-1", "rem-3.3-2", "rem-3.3-3", "thm-3.4",
    "prop-3.5-1", "prop-3.5-2", "prop-3.5-3", "prop-3.5-4", "prop-3.5-5",
    "prop-3.6", "cor-3.7", "thm-3.8", "thm-3.9",
)


def verify_registry_complete():
    missing = set(REQUIRED_IDS) - set(REGISTRY)
    extra = set(REGISTRY) - set(REQUIRED_IDS)
    if missing or extra:
        raise AssertionError(
            f"statement registry incomplete: missing={sorted(missing)} extra={sorted(extra)}")


verify_registry_complete()


def run_statement(statement_id: str, U: Universe) -> StatementReport:
    try:
        runner = REGISTRY[statement_id]
    except KeyError:
        raise ValueError(f"unknown statement id {statement_id!r}") from None
    return runner(U)


def run_suite(pattern: str, U: Universe) -> list[StatementReport]:
    if pattern in ("all", "", "*"):
        ids = list(REGISTRY)
    else:
        ids = [i for i in REGISTRY if fnmatch.fnmatchcase(i, pattern)]
    return [REGISTRY[i](U) for i in ids]


# ---------------------------------------------------------------------------
# counterexample search


def _pair_vocabulary():
    return {
        "auslander": lambda R, M: is_auslander(M).holds,
        "torsion_free": lambda R, M: is_torsion_free(M).holds,
        "flat": lambda R, M: is_flat(M).holds,
        "faithfully_flat": lambda R, M: is_faithfully_flat(M).holds,
        "content_module": lambda R, M: is_content_module(M).holds,
        "content_surjective": lambda R, M: content_surjective(M),
        "property_a": lambda R, M: has_property_A(M).holds,
        "reg_module": lambda R, M: M.tag == "Reg",
        "nonzero": lambda R, M: not M.is_zero,
        "domain": lambda R, M: ring_predicates(R).is_domain,
        "field": lambda R, M: ring_predicates(R).is_field,
        "local": lambda R, M: ring_predicates(R).is_local,
    }


_ADAPTER_FACTS = {
    # Z/n over Z for n >= 2; flatness and friends are analytic facts
    "quotient": {
        "auslander": True, "torsion_free": False, "reg_module": False,
        "nonzero": True, "domain": True, "field": False, "local": False,
        "flat": False, "faithfully_flat": False, "property_a": True,
    },
    # Z over itself
    "regular": {
        "auslander": True, "torsion_free": True, "reg_module": True,
        "nonzero": True, "domain": True, "field": False, "local": False,
        "flat": True, "faithfully_flat": True, "property_a": True,
        "content_module": True, "content_surjective": True,
    },
}


def _algebra_vocabulary():
    return {
        "mccoy": lambda alg: is_mccoy_algebra(alg).holds,
        "ohm_rush": lambda alg: is_ohm_rush(alg).holds,
        "flat": lambda alg: is_flat(alg.as_module()).holds,
        "faithfully_flat": lambda alg: is_faithfully_flat(alg.as_module()).holds,
        "nontrivial_extension": lambda alg: not alg.is_trivial_extension,
    }


def parse_predicate_expression(text: str) -> list[tuple[str, bool]]:
    """Conjunction of possibly negated predicate names: 'a and not b'."""
    atoms = []
    normalized = text.replace("&&", " and ").replace("&", " and ")
    for chunk in normalized.split(" and "):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"unparseable expression {text!r}: empty conjunct")
        negated = False
        while chunk.startswith("!") or chunk.startswith("not "):
            negated = not negated
            chunk = chunk[1:].strip() if chunk.startswith("!") else chunk[4:].strip()
        if not chunk.replace("_", "").isalnum():
            raise ValueError(f"unparseable expression {text!r}: bad atom {chunk!r}")
        atoms.append((chunk, negated))
    return atoms


def _eval_atoms(atoms, lookup) -> bool | None:
    """None when some predicate is undefined for this member kind."""
    for name, negated in atoms:
        fn = lookup.get(name)
        if fn is None:
            return None
        value = fn()
        if value == negated:
            return False
    return True


def search_counterexample(hyp: str, concl: str, U: Universe,
                          include_adapter: bool = True) -> list[dict]:
    """All members satisfying hyp and failing concl, with witnesses."""
    hyp_atoms = parse_predicate_expression(hyp)
    concl_atoms = parse_predicate_expression(concl)
    known = set(_pair_vocabulary()) | set(_algebra_vocabulary()) | {"content_module"}
    for name, _ in hyp_atoms + concl_atoms:
        if name not in known:
            raise ValueError(f"unknown predicate {name!r}")
    results = []
    vocab = _pair_vocabulary()
    for R, M in U.pairs():
        lookup = {name: (lambda fn=fn: fn(R, M)) for name, fn in vocab.items()}
        h = _eval_atoms(hyp_atoms, lookup)
        if h is not True:
            continue
        c = _eval_atoms(concl_atoms, lookup)
        if c is False:
            results.append({"kind": "pair", "member": _member(R, M),
                            "ring": R.descriptor, "module": M.tag})
    avocab = _algebra_vocabulary()
    for R, alg in U.all_algebras():
        lookup = {name: (lambda fn=fn: fn(alg)) for name, fn in avocab.items()}
        h = _eval_atoms(hyp_atoms, lookup)
        if h is not True:
            continue
        c = _eval_atoms(concl_atoms, lookup)
        if c is False:
            results.append({"kind": "algebra", "member": alg.descriptor})
    if include_adapter:
        for case in z_adapter_cases():
            facts = _ADAPTER_FACTS["quotient"]
            lookup = {name: (lambda v=v: v) for name, v in facts.items()}
            h = _eval_atoms(hyp_atoms, lookup)
            if h is not True:
                continue
            c = _eval_atoms(concl_atoms, lookup)
            if c is False:
                results.append({"kind": "adapter", "member": f"Z :: {case.case_id}"})
        facts = _ADAPTER_FACTS["regular"]
        lookup = {name: (lambda v=v: v) for name, v in facts.items()}
        if _eval_atoms(hyp_atoms, lookup) is True and _eval_atoms(concl_atoms, lookup) is False:
            results.append({"kind": "adapter", "member": "Z :: Z"})
    return results


# ---------------------------------------------------------------------------
# adapter checks


def z_adapter_check(case_id: str) -> dict:
    """Analytic verification for one Z-module Z/n case (gcd arithmetic only)."""
    if not case_id.startswith("Z/"):
        raise ValueError(f"unknown adapter case {case_id!r}")
    try:
        n = int(case_id[2:])
    except ValueError:
        raise ValueError(f"unknown adapter case {case_id!r}") from None
    if not 1 <= n <= 30:
        raise ValueError(f"adapter case {case_id!r} outside the registered range 1..30")
    case = ZAdapterCase(n)
    if case.degenerate:
        return {"case": case.case_id, "degenerate": True, "excluded": True}
    tf = case.is_torsion_free()
    witness = tf.witness["element"]
    return {
        "case": case.case_id,
        "degenerate": False,
        "auslander": case.is_auslander().holds,
        "torsion_free": tf.holds,
        "torsion_free_witness": {
            "kind": "torsion_free", "ring": "Z", "module": case.case_id,
            "value": witness, "display": str(witness)},
        "zero_divisors_contain_ideal_n": case.contains_ideal_n(),
        "zero_divisor_rule": case.zero_divisor_description(),
    }


# ---------------------------------------------------------------------------
# exhaustive harness sweeps shared with the acceptance suite


def criterion_oracle_agreement(U: Universe, max_ring: int = 6, max_module: int = 8,
                               degree: int = 2) -> dict:
    """Criterion vs brute force on every f of degree <= `degree`.

    When the criterion holds, its witness is a constant cofactor, so the
    degree-0 search must confirm it (and monotonicity in the degree bound
    extends agreement to every d).  When the criterion fails, the full
    degree-`degree` search must come up empty.
    """
    report = {"pairs": 0, "elements_checked": 0, "discrepancies": []}
    exponents = [(i,) for i in range(degree + 1)]
    for R, M in _nonzero_pairs(U):
        if R.size > max_ring or M.size > max_module:
            continue
        report["pairs"] += 1
        for coeffs in itertools.product(R.elements, repeat=len(exponents)):
            support = {e: c for e, c in zip(exponents, coeffs) if c != R.zero}
            if not support:
                continue
            f = ring_poly(R, support)
            report["elements_checked"] += 1
            crit = is_zd_on_extension(f, M)
            oracle = brute_force_zd(f, M, 0 if crit.holds else degree,
                                    budget=U.limits.brute_budget)
            if crit.holds != oracle.holds:
                report["discrepancies"].append({
                    "ring": R.descriptor, "module": M.tag,
                    "f": str(f), "criterion": crit.holds, "oracle": oracle.holds})
    return report


def mccoy_witness_sweep(U: Universe, max_ring: int = 8, degree: int = 2) -> dict:
    """Exhaustive annihilating pairs (f, g) of bounded degree over regular
    modules; every pair must yield a valid constructive witness."""
    out = {"pairs_checked": 0, "failures": [], "per_ring": {}}
    n_coeff = degree + 1
    for R in U.rings:
        if R.size > max_ring:
            continue
        Reg = U.regular(R)
        zero = R.zero
        count = 0
        for cf in itertools.product(R.elements, repeat=n_coeff):
            for cg in itertools.product(R.elements, repeat=n_coeff):
                if all(c == zero for c in cg):
                    continue
                product_zero = True
                for k in range(2 * degree + 1):
                    total = zero
                    lo = max(0, k - degree)
                    hi = min(degree, k)
                    for i in range(lo, hi + 1):
                        a, b = cf[i], cg[k - i]
                        if a != zero and b != zero:
                            total = R.add(total, R.mul(a, b))
                    if total != zero:
                        product_zero = False
                        break
                if not product_zero:
                    continue
                f = ring_poly(R, {(i,): c for i, c in enumerate(cf) if c != zero})
                g = module_poly(Reg, {(i,): c for i, c in enumerate(cg) if c != zero})
                count += 1
                out["pairs_checked"] += 1
                try:
                    m = mccoy_witness(f, g)
                except (RuntimeError, ValueError) as exc:
                    out["failures"].append({
                        "ring": R.descriptor, "f": str(f), "g": str(g),
                        "error": str(exc)})
                    continue
                if m == zero or any(R.mul(c, m) != zero for c in cf):
                    out["failures"].append({
                        "ring": R.descriptor, "f": str(f), "g": str(g),
                        "witness": to_jsonable(m),
                        "error": "postcondition violated"})
        out["per_ring"][R.descriptor] = count
    return out


def embedding_invariance(U: Universe, max_ring: int = 6, max_module: int = 8) -> dict:
    """Verdicts for f(X) agree with f(X1) under the embedding N -> N^2."""
    report = {"checked": 0, "mismatches": []}
    for R, M in _nonzero_pairs(U):
        if R.size > max_ring or M.size > max_module:
            continue
        for coeffs in itertools.product(R.elements, repeat=3):
            support1 = {(i,): c for i, c in enumerate(coeffs) if c != R.zero}
            if not support1:
                continue
            support2 = {(i, 0): c for (i,), c in support1.items()}
            f1 = ring_poly(R, support1, arity=1)
            f2 = ring_poly(R, support2, arity=2)
            report["checked"] += 1
            if is_zd_on_extension(f1, M).holds != is_zd_on_extension(f2, M).holds:
                report["mismatches"].append({
                    "ring": R.descriptor, "module": M.tag, "f": str(f1)})
    return report


def faithfully_flat_mccoy_algebras(U: Universe) -> list[str]:
    """Raw material log: universe algebras that are faithfully flat and McCoy."""
    found = []
    for R in U.rings:
        for alg in _mccoy_algebras_of(U, R):
            found.append(alg.descriptor)
    return found
