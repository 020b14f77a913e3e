"""Deterministic enumeration of the small-structure universe.

Rings: Z/n for 2 <= n <= 12, binary products of Z/a with a <= 4, and monic
polynomial quotients (nilpotent and Galois-type relations) over small Z/n.
Modules per ring: the regular module, Free(2), every cyclic quotient, sums of
two cyclics, and Hom of each cyclic, capped by size bounds.  Algebras per
ring: the ring over itself, the diagonal into its square, and polynomial
quotient extensions over Zmod bases.

Also hosts the analytic integer-ring adapter: Z and Z/n handled by gcd
arithmetic, never by enumerating an infinite carrier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .extensions import (FiniteAlgebra, diagonal_algebra, extension_algebra,
                         self_algebra)
from .modules import (FiniteModule, Verdict, cyclic_module, direct_sum,
                      free_module, hom_module, regular_module,
                      verify_module_axioms)
from .rings import (FiniteRing, Zmod, poly_quotient, product_ring,
                    verify_ring_axioms)


@dataclass(frozen=True)
class UniverseLimits:
    zmod_max: int = 12
    product_component_max: int = 4          # 0 disables product rings
    max_ring: int = 32
    max_module: int = 160
    max_algebra: int = 64
    max_sum_pairs: int = 6
    hom_budget: int = 2000
    presentation_budget: int = 30000
    brute_budget: int = 300_000
    degree_bound: int = 2
    series_precision: int = 8
    axiom_check_max: int = 64

    def as_dict(self) -> dict:
        return {
            "zmod_max": self.zmod_max,
            "product_component_max": self.product_component_max,
            "max_ring": self.max_ring,
            "max_module": self.max_module,
            "max_algebra": self.max_algebra,
            "max_sum_pairs": self.max_sum_pairs,
            "hom_budget": self.hom_budget,
            "presentation_budget": self.presentation_budget,
            "brute_budget": self.brute_budget,
            "degree_bound": self.degree_bound,
            "series_precision": self.series_precision,
        }


DEFAULT_LIMITS = UniverseLimits()

# monic relations used for polynomial-quotient algebras, listed as
# coefficient tuples from the constant term up
_GALOIS_RELATION_DEG2 = (1, 1, 1)    # x^2 + x + 1
_GALOIS_RELATION_DEG3 = (1, 1, 0, 1)  # x^3 + x + 1


@dataclass
class Universe:
    limits: UniverseLimits
    rings: list[FiniteRing] = field(default_factory=list)
    modules: dict = field(default_factory=dict)     # ring descriptor -> [FiniteModule]
    algebras: dict = field(default_factory=dict)    # ring descriptor -> [FiniteAlgebra]
    counts: dict = field(default_factory=dict)
    caches: dict = field(default_factory=dict)      # scratch memo space for sweeps

    def pairs(self):
        for R in self.rings:
            for M in self.modules[R.descriptor]:
                yield R, M

    def all_algebras(self):
        for R in self.rings:
            for B in self.algebras[R.descriptor]:
                yield R, B

    def regular(self, R: FiniteRing) -> FiniteModule:
        """The universe's (cache-warm) regular module of R."""
        for M in self.modules[R.descriptor]:
            if M.tag == "Reg":
                return M
        raise KeyError(f"no regular module for {R.descriptor}")


def generate_universe(limits: UniverseLimits = DEFAULT_LIMITS) -> Universe:
    U = Universe(limits=limits)
    counts = {"rings_zmod": 0, "rings_product": 0, "rings_polyquot": 0,
              "modules_reg": 0, "modules_free": 0, "modules_cyclic": 0,
              "modules_sum": 0, "modules_hom": 0, "algebras": 0}

    rings: list[FiniteRing] = []
    for n in range(2, limits.zmod_max + 1):
        rings.append(Zmod(n))
        counts["rings_zmod"] += 1
    if limits.product_component_max >= 2:
        for a in range(2, limits.product_component_max + 1):
            for b in range(a, limits.product_component_max + 1):
                R = product_ring(Zmod(a), Zmod(b))
                if R.size <= limits.max_ring:
                    rings.append(R)
                    counts["rings_product"] += 1
    for p in (2, 3):
        for rel in ((0, 0, 1), (0, 0, 0, 1)):
            R = poly_quotient(Zmod(p), rel)
            if R.size <= limits.max_ring:
                rings.append(R)
                counts["rings_polyquot"] += 1
    for rel in ((0, 0, 1), _GALOIS_RELATION_DEG2):
        R = poly_quotient(Zmod(4), rel)
        if R.size <= limits.max_ring:
            rings.append(R)
            counts["rings_polyquot"] += 1

    for R in rings:
        verify_ring_axioms(R, bound=limits.axiom_check_max)
    U.rings = rings

    for R in rings:
        mods: list[FiniteModule] = []
        reg = regular_module(R)
        mods.append(reg)
        counts["modules_reg"] += 1
        if R.size ** 2 <= limits.max_module:
            mods.append(free_module(R, 2))
            counts["modules_free"] += 1
        cyclics = []
        for I in R.ideals():
            if I.is_whole_ring:
                continue  # the zero module is constructible but not a universe member
            C = cyclic_module(R, I)
            cyclics.append(C)
            counts["modules_cyclic"] += 1
        mods.extend(cyclics)
        sums = 0
        for i in range(len(cyclics)):
            if sums >= limits.max_sum_pairs:
                break
            for j in range(i, len(cyclics)):
                if sums >= limits.max_sum_pairs:
                    break
                A, B = cyclics[i], cyclics[j]
                if A.size * B.size <= limits.max_module:
                    mods.append(direct_sum(A, B))
                    counts["modules_sum"] += 1
                    sums += 1
        for C in cyclics:
            gens = 1  # cyclic modules have a single generator
            if C.size ** gens <= limits.hom_budget:
                mods.append(hom_module(C, budget=limits.hom_budget))
                counts["modules_hom"] += 1
        for M in mods:
            verify_module_axioms(M)
        U.modules[R.descriptor] = mods

    for R in rings:
        algs: list[FiniteAlgebra] = [self_algebra(R)]
        if R.size ** 2 <= limits.max_algebra:
            algs.append(diagonal_algebra(R, product_ring(R, R)))
        if R.kind == "zmod":
            n = R.size
            candidates = [(0, 0, 1), _GALOIS_RELATION_DEG2]
            if n in (2, 3):
                candidates.append(_GALOIS_RELATION_DEG3)
            for rel in candidates:
                B = poly_quotient(R, rel)
                if B.size <= limits.max_algebra:
                    algs.append(extension_algebra(B, R))
        counts["algebras"] += len(algs)
        U.algebras[R.descriptor] = algs

    U.counts = counts
    return U


# ---------------------------------------------------------------------------
# the integer-ring adapter


@dataclass(frozen=True)
class ZAdapterCase:
    """The Z-module Z/n, analyzed with gcd arithmetic only."""

    n: int

    @property
    def case_id(self) -> str:
        return f"Z/{self.n}"

    @property
    def degenerate(self) -> bool:
        return self.n == 1

    def in_zero_divisors(self, k: int) -> bool:
        """k in Z_Z(Z/n) iff gcd(k, n) > 1 (gcd(0, n) = n covers 0)."""
        return math.gcd(k, self.n) > 1

    def zero_divisor_description(self) -> str:
        return f"{{k in Z : gcd(k, {self.n}) > 1}}"

    def contains_ideal_n(self, sample: int = 5) -> bool:
        """Z(Z/n) contains the ideal (n): gcd(k*n, n) = n > 1 for all k."""
        if self.n < 2:
            return False
        return all(self.in_zero_divisors(k * self.n) for k in range(-sample, sample + 1))

    def is_auslander(self) -> Verdict:
        # Z(Z) = {0} and 0 annihilates 1 in Z/n, so the inclusion always holds
        if self.degenerate:
            return Verdict(False, degenerate=True)
        return Verdict(True)

    def is_torsion_free(self) -> Verdict:
        if self.degenerate:
            return Verdict(False, degenerate=True)
        witness = min(k for k in range(2, self.n + 1) if math.gcd(k, self.n) > 1)
        return Verdict(False, witness={"kind": "torsion_free", "element": witness})


@dataclass(frozen=True)
class ZRegularCase:
    """Z as a module over itself: the domain-side instance for flat families."""

    case_id: str = "Z"
    is_flat: bool = True
    is_domain: bool = True

    def is_auslander(self) -> Verdict:
        return Verdict(True)   # Z(Z) = {0}

    def is_torsion_free(self) -> Verdict:
        return Verdict(True)   # Z(Z) = {0} and no torsion


def z_adapter_cases(n_max: int = 30) -> list[ZAdapterCase]:
    return [ZAdapterCase(n) for n in range(2, n_max + 1)]
