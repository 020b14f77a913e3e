"""Polynomial, monoid-ring, and truncated-series extensions plus finite algebras.

An ExtElement is a finitely supported map from exponent vectors (N^d for the
monoid variants, N for series) to nonzero coefficients drawn from a ring or a
module over it.  Zero-divisor membership of an extension element is decided
by the content-annihilator criterion and, independently, by bounded
brute-force search; annihilating pairs yield constructive single-element
witnesses via a descending content-power chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .errors import BoundExceeded
from .modules import (FiniteModule, Verdict, regular_module,
                      submodule_generated)
from .rings import FiniteRing, Ideal, ideal_generated

DEFAULT_SERIES_PRECISION = 8
DEFAULT_BRUTE_BUDGET = 300_000


@dataclass(frozen=True)
class ExtElement:
    """Finitely supported element of R[N^d], M[N^d], or a truncated series.

    `support` maps exponent tuples to nonzero coefficients.  Series keep
    arity 1, exponents below `precision`, and raise `truncated` once
    arithmetic has discarded a nonzero coefficient at or past the precision.
    """

    base_kind: str                      # "ring" | "module"
    base: object = field(compare=False)  # FiniteRing | FiniteModule
    variant: str                        # "monoid" | "series"
    arity: int
    support: tuple                      # sorted ((exponent, coeff), ...)
    precision: Optional[int] = None
    truncated: bool = False

    def __post_init__(self):
        if self.variant not in ("monoid", "series"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "series":
            if self.arity != 1:
                raise ValueError("series elements are univariate")
            if self.precision is None or self.precision < 1:
                raise ValueError("series need a positive precision")

    @property
    def ring(self) -> FiniteRing:
        return self.base if self.base_kind == "ring" else self.base.ring

    @property
    def is_zero(self) -> bool:
        return not self.support

    def support_dict(self) -> dict:
        return dict(self.support)

    def coefficients(self) -> list:
        return [c for _, c in self.support]

    def degree(self) -> int:
        return max((max(e) for e, _ in self.support), default=0)

    def compatible(self, other: "ExtElement") -> bool:
        return (self.variant == other.variant and self.arity == other.arity
                and self.precision == other.precision
                and self.ring.same_ring(other.ring))

    def __str__(self):
        if not self.support:
            body = "0"
        else:
            terms = []
            for exp, c in sorted(self.support, reverse=True):
                base = self.base
                cs = base.element_str(c)
                if any(ch in cs for ch in "+-") and not cs.startswith("("):
                    cs = f"({cs})"
                mono = monomial_str(exp)
                if mono == "1":
                    terms.append(cs)
                elif cs == "1":
                    terms.append(mono)
                else:
                    terms.append(f"{cs}*{mono}")
            body = " + ".join(terms)
        if self.variant == "series":
            return f"series({self.precision}; {body})"
        return body


def monomial_str(exp: tuple) -> str:
    if all(e == 0 for e in exp):
        return "1"
    parts = []
    for i, e in enumerate(exp):
        if e == 0:
            continue
        name = "X" if len(exp) == 1 else f"X{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _zero_of(base_kind, base):
    return base.zero


def make_ext(base_kind: str, base, support: dict | Iterable, variant: str = "monoid",
             arity: int = 1, precision: int | None = None) -> ExtElement:
    """Normalize a support mapping into an ExtElement, dropping zero coefficients."""
    if isinstance(support, dict):
        items = support.items()
    else:
        items = support
    zero = _zero_of(base_kind, base)
    cleaned = {}
    for exp, coeff in items:
        exp = tuple(exp) if isinstance(exp, (tuple, list)) else (exp,)
        if len(exp) != arity:
            raise ValueError(f"exponent {exp} does not match arity {arity}")
        if any(e < 0 for e in exp):
            raise ValueError(f"negative exponent in {exp}")
        if variant == "series" and precision is not None and exp[0] >= precision:
            raise ValueError(f"exponent {exp[0]} at or past series precision {precision}")
        if coeff not in base:
            raise ValueError(f"coefficient {coeff!r} not in {getattr(base, 'descriptor', base)}")
        if coeff == zero:
            continue
        if exp in cleaned:
            raise ValueError(f"duplicate exponent {exp}")
        cleaned[exp] = coeff
    return ExtElement(base_kind=base_kind, base=base, variant=variant, arity=arity,
                      support=tuple(sorted(cleaned.items())), precision=precision)


def ring_poly(R: FiniteRing, support, arity: int = 1) -> ExtElement:
    return make_ext("ring", R, support, "monoid", arity)


def module_poly(M: FiniteModule, support, arity: int = 1) -> ExtElement:
    return make_ext("module", M, support, "monoid", arity)


def ring_series(R: FiniteRing, support, precision: int = DEFAULT_SERIES_PRECISION) -> ExtElement:
    return make_ext("ring", R, support, "series", 1, precision)


def module_series(M: FiniteModule, support, precision: int = DEFAULT_SERIES_PRECISION) -> ExtElement:
    return make_ext("module", M, support, "series", 1, precision)


# ---------------------------------------------------------------------------
# arithmetic


def _check_compatible(a: ExtElement, b: ExtElement):
    if a.variant != b.variant or a.arity != b.arity or a.precision != b.precision:
        raise ValueError("extension elements have mismatched variants")
    if not a.ring.same_ring(b.ring):
        raise ValueError("extension elements over different rings")


def ext_add(a: ExtElement, b: ExtElement) -> ExtElement:
    _check_compatible(a, b)
    if a.base_kind != b.base_kind:
        raise ValueError("cannot add ring- and module-valued elements")
    base = a.base
    add = base.add
    zero = base.zero
    out = dict(a.support)
    for exp, c in b.support:
        s = add(out.get(exp, zero), c)
        if s == zero:
            out.pop(exp, None)
        else:
            out[exp] = s
    return replace(a, support=tuple(sorted(out.items())),
                   truncated=a.truncated or b.truncated)


def _convolve_exact(a: ExtElement, b: ExtElement) -> dict:
    """Exact product support, ignoring series precision (inputs have finite support)."""
    if a.base_kind == "ring" and b.base_kind == "ring":
        combine = a.base.mul
        out_base = a.base
    elif a.base_kind == "ring" and b.base_kind == "module":
        combine = b.base.act
        out_base = b.base
    elif a.base_kind == "module" and b.base_kind == "ring":
        return _convolve_exact(b, a)
    else:
        raise ValueError("cannot multiply two module-valued elements")
    add = out_base.add
    zero = out_base.zero
    out: dict = {}
    for ea, ca in a.support:
        for eb, cb in b.support:
            exp = tuple(x + y for x, y in zip(ea, eb))
            prod = combine(ca, cb)
            cur = out.get(exp)
            s = prod if cur is None else add(cur, prod)
            if s == zero:
                out.pop(exp, None)
            else:
                out[exp] = s
    return out


def ext_mul(a: ExtElement, b: ExtElement) -> ExtElement:
    """Convolution product; series results are truncated with a loss flag."""
    _check_compatible(a, b)
    out = _convolve_exact(a, b)
    out_kind = "module" if "module" in (a.base_kind, b.base_kind) else "ring"
    out_base = a.base if a.base_kind == out_kind else b.base
    truncated = a.truncated or b.truncated
    if a.variant == "series":
        kept = {}
        for exp, c in out.items():
            if exp[0] >= a.precision:
                truncated = True
            else:
                kept[exp] = c
        out = kept
    return ExtElement(base_kind=out_kind, base=out_base, variant=a.variant,
                      arity=a.arity, support=tuple(sorted(out.items())),
                      precision=a.precision, truncated=truncated)


def ext_arith(a: ExtElement, b: ExtElement, op: str) -> ExtElement:
    if op == "add":
        return ext_add(a, b)
    if op == "mul":
        return ext_mul(a, b)
    if op == "scalar-action":
        if {"ring", "module"} != {a.base_kind, b.base_kind}:
            raise ValueError("scalar-action pairs a ring element with a module element")
        return ext_mul(a, b)
    raise ValueError(f"unknown extension operation {op!r}")


def ext_product_is_exactly_zero(a: ExtElement, b: ExtElement) -> bool:
    _check_compatible(a, b)
    if a.truncated or b.truncated:
        raise ValueError("refusing zero test on truncation-lossy inputs")
    return not _convolve_exact(a, b)


# ---------------------------------------------------------------------------
# content


def content_ideal(f: ExtElement):
    """Ideal (ring coefficients) or submodule (module coefficients) generated
    by the support coefficients.  Finite rings are Noetherian, so the series
    coefficient ideal and the polynomial content coincide and one operation
    serves both variants."""
    coeffs = f.coefficients()
    if f.base_kind == "ring":
        return ideal_generated(f.base, coeffs)
    return submodule_generated(f.base, coeffs)


# ---------------------------------------------------------------------------
# zero-divisor deciders


def is_zd_on_extension(f: ExtElement, M: FiniteModule) -> Verdict:
    """Is f a zero-divisor on M[G] (resp. M[[X]])?

    Decided by the content-annihilator criterion: f annihilates a nonzero
    element iff some nonzero m in M has c(f)*m = 0, and such a constant
    witness always exists at finite scale.  Witness: the least such m.
    """
    if f.base_kind != "ring":
        raise ValueError("f must have ring coefficients")
    R = f.ring
    if not R.same_ring(M.ring):
        raise ValueError("module is over a different ring")
    if M.is_zero:
        return Verdict(False, degenerate=True)
    zero_m = M.zero
    coeffs = f.coefficients()
    for m in M.elements:
        if m == zero_m:
            continue
        if all(M.act(c, m) == zero_m for c in coeffs):
            return Verdict(True, witness={"kind": "ext_zd", "element": m})
    return Verdict(False)


def brute_force_zd(f: ExtElement, M: FiniteModule, degree_bound: int,
                   budget: int = DEFAULT_BRUTE_BUDGET) -> Verdict:
    """Independent oracle: search for nonzero g over M with exponents <= d
    componentwise and f*g = 0 (exact product).  Exhaustive within budget."""
    if f.base_kind != "ring":
        raise ValueError("f must have ring coefficients")
    if not f.ring.same_ring(M.ring):
        raise ValueError("module is over a different ring")
    if f.truncated:
        raise ValueError("refusing brute-force search on truncation-lossy f")
    cells = sorted(itertools.product(range(degree_bound + 1), repeat=f.arity))
    n_candidates = M.size ** len(cells)
    if n_candidates > budget:
        raise BoundExceeded(
            f"brute force space |M|^{len(cells)} = {n_candidates} exceeds budget {budget}")
    f_items = list(f.support)
    zero_m = M.zero
    zero_r = f.ring.zero
    grid = set(cells)
    # product exponents reachable from the grid, in ascending order so the
    # constant coefficient rejects most candidates immediately
    targets = sorted({tuple(x + y for x, y in zip(ef, eg))
                      for ef, _ in f_items for eg in cells})
    pairs_for = {
        t: [(cf, tuple(x - y for x, y in zip(t, ef)))
            for ef, cf in f_items
            if all(x >= y for x, y in zip(t, ef))
            and tuple(x - y for x, y in zip(t, ef)) in grid]
        for t in targets
    }
    for combo in itertools.product(M.elements, repeat=len(cells)):
        g = dict(zip(cells, combo))
        if all(v == zero_m for v in combo):
            continue
        ok = True
        for t in targets:
            total = zero_m
            for cf, eg in pairs_for[t]:
                gv = g[eg]
                if gv != zero_m and cf != zero_r:
                    total = M.add(total, M.act(cf, gv))
            if total != zero_m:
                ok = False
                break
        if ok:
            witness = make_ext("module", M, {e: c for e, c in g.items() if c != zero_m},
                               f.variant, f.arity, f.precision)
            return Verdict(True, witness={"kind": "ext_zd_brute", "cofactor": witness})
    return Verdict(False)


def mccoy_witness(f: ExtElement, g: ExtElement):
    """Given f*g = 0 exactly with g nonzero, produce a nonzero constant m
    with f*m = 0.

    Follows the descending chain c(f)^k * c(g): take the least k >= 1 with
    c(f)^k c(g) = 0 (k = 1 covers c(f)c(g) = 0, including f = 0) and return
    the least nonzero element of c(f)^(k-1) c(g).  Finiteness guarantees the
    chain reaches zero for genuinely annihilating pairs; stabilizing at a
    nonzero value indicates an engine bug and raises.  The postcondition
    f*m = 0, m != 0 is re-verified before returning.
    """
    if f.base_kind != "ring":
        raise ValueError("f must have ring coefficients")
    if g.base_kind == "ring":
        g = make_ext("module", regular_module(g.base), dict(g.support),
                     g.variant, g.arity, g.precision)
    _check_compatible(f, g)
    if f.truncated or g.truncated:
        raise ValueError("refusing witness extraction on truncation-lossy inputs")
    if g.is_zero:
        raise ValueError("g must be nonzero")
    if not ext_product_is_exactly_zero(f, g):
        raise ValueError("f*g != 0: no annihilation witness exists")
    M = g.base
    zero_m = M.zero
    f_coeffs = f.coefficients()
    chain = submodule_generated(M, g.coefficients()).elements
    while True:
        if chain == frozenset({zero_m}):
            raise RuntimeError("content chain started at zero for nonzero g")
        nxt = submodule_generated(
            M, {M.act(c, t) for c in f_coeffs for t in chain}).elements
        if nxt == frozenset({zero_m}):
            candidates = M.sorted_elements(chain - {zero_m})
            m = candidates[0]
            if any(M.act(c, m) != zero_m for c in f_coeffs):
                raise RuntimeError("extracted witness fails f*m = 0 re-check")
            return m
        if nxt == chain:
            raise RuntimeError(
                "content power chain stabilized nonzero; annihilating pair invariant violated")
        chain = nxt


# ---------------------------------------------------------------------------
# finite algebras


class FiniteAlgebra:
    """A finite R-algebra: ring B with a verified structure map R -> B."""

    def __init__(self, ring: FiniteRing, base: FiniteRing, embed: dict,
                 descriptor: str | None = None):
        self.ring = ring
        self.base = base
        self.embed = dict(embed)
        self.descriptor = descriptor or f"Algebra({ring.descriptor}, {base.descriptor})"
        self._validate()
        self._module_view = None
        self._content_cache: dict = {}
        self._extension_cache: dict = {}

    def _validate(self):
        B, R, phi = self.ring, self.base, self.embed
        if set(phi) != set(R.elements):
            raise ValueError(f"{self.descriptor}: structure map not total on {R.descriptor}")
        if phi[R.one] != B.one:
            raise ValueError(f"{self.descriptor}: structure map does not send 1 to 1")
        for a in R.elements:
            for b in R.elements:
                if phi[R.add(a, b)] != B.add(phi[a], phi[b]):
                    raise ValueError(f"{self.descriptor}: structure map not additive at {a},{b}")
                if phi[R.mul(a, b)] != B.mul(phi[a], phi[b]):
                    raise ValueError(f"{self.descriptor}: structure map not multiplicative at {a},{b}")

    def __repr__(self):
        return f"FiniteAlgebra({self.descriptor})"

    @property
    def is_trivial_extension(self) -> bool:
        return self.ring.same_ring(self.base)

    def as_module(self) -> FiniteModule:
        """B viewed as an R-module through the structure map."""
        if self._module_view is None:
            B, phi = self.ring, self.embed
            self._module_view = FiniteModule(
                ring=self.base, elements=B.elements, add=B.add, neg=B.neg,
                zero=B.zero, act=lambda r, b: B.mul(phi[r], b),
                tag=f"AlgebraModule({self.descriptor})",
                element_str=B.element_str)
        return self._module_view

    def ideal_extension(self, I: Ideal) -> Ideal:
        """IB: the ideal of B generated by the image of I."""
        key = I.elements
        cached = self._extension_cache.get(key)
        if cached is None:
            cached = ideal_generated(self.ring, [self.embed[a] for a in I.generators])
            self._extension_cache[key] = cached
        return cached

    def content(self, f) -> Ideal:
        """Lattice content: intersection of all ideals I of R with f in IB."""
        cached = self._content_cache.get(f)
        if cached is not None:
            return cached
        R = self.base
        common = None
        for I in R.ideals():
            if f in self.ideal_extension(I).elements:
                common = I.elements if common is None else (common & I.elements)
        result = Ideal(R, tuple(R.sorted_elements(common)), frozenset(common))
        self._content_cache[f] = result
        return result


def self_algebra(R: FiniteRing) -> FiniteAlgebra:
    return FiniteAlgebra(R, R, {r: r for r in R.elements},
                         descriptor=f"Algebra({R.descriptor}, {R.descriptor})")


def diagonal_algebra(R: FiniteRing, product) -> FiniteAlgebra:
    """Prod(R,R) over R via the diagonal."""
    return FiniteAlgebra(product, R, {r: (r, r) for r in R.elements},
                         descriptor=f"Algebra({product.descriptor}, {R.descriptor})")


def extension_algebra(B: FiniteRing, R: FiniteRing) -> FiniteAlgebra:
    """PolyQuot(R, rel) over R = Zmod(n) via constant embedding."""
    if B.kind != "polyquot":
        raise ValueError("extension_algebra expects a polynomial quotient")
    d = len(B.zero)
    embed = {r: tuple([r] + [0] * (d - 1)) for r in R.elements}
    return FiniteAlgebra(B, R, embed,
                         descriptor=f"Algebra({B.descriptor}, {R.descriptor})")


def is_ohm_rush(algebra: FiniteAlgebra) -> Verdict:
    """f in c(f)B for all f in B; witness on failure: the offending f."""
    B = algebra.ring
    for f in B.elements:
        c = algebra.content(f)
        if f not in algebra.ideal_extension(c).elements:
            return Verdict(False, witness={"kind": "ohm_rush", "element": f})
    return Verdict(True)


def is_mccoy_algebra(algebra: FiniteAlgebra) -> Verdict:
    """Ohm-Rush, and every annihilating pair f*g = 0 (g != 0) admits a nonzero
    r in R with c(f)*r = 0.  Witness on failure: the least offending (f, g)."""
    ohm_rush = is_ohm_rush(algebra)
    if not ohm_rush.holds:
        return Verdict(False, witness=ohm_rush.witness)
    B, R = algebra.ring, algebra.base
    zero_b, zero_r = B.zero, R.zero
    for f in B.elements:
        c_gens = None
        for g in B.elements:
            if g == zero_b or B.mul(f, g) != zero_b:
                continue
            if c_gens is None:
                c_gens = algebra.content(f).generators
            if not any(r != zero_r and all(R.mul(a, r) == zero_r for a in c_gens)
                       for r in R.elements):
                return Verdict(False, witness={"kind": "mccoy", "pair": (f, g)})
    return Verdict(True)
