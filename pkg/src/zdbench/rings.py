"""Finite commutative rings, their ideals, and ring-level zero-divisor data.

Rings carry an explicit finite carrier of canonically encoded elements:
integers mod n, pairs for binary products, and reduced coefficient vectors
for monic polynomial quotients.  Equality of encodings is equality in the
ring, so elements can be used as dict keys and set members everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import BoundExceeded

# |R| cap for the ideal-lattice fixpoint; the universe stays far below it.
DEFAULT_LATTICE_BOUND = 512

# When True, 0 is reported as a member of every zero-divisor set of a
# nonzero structure.  Predicates are written so that flipping this changes
# only reported sets, never a theorem verdict; the harness asserts that.
INCLUDE_ZERO_IN_ZD_SETS = True


class FiniteRing:
    """A finite commutative ring with explicit carrier and arithmetic."""

    def __init__(self, kind, elements, add, mul, neg, zero, one, descriptor,
                 element_str=None, allow_trivial=False):
        self.kind = kind
        self.elements = tuple(elements)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.zero = zero
        self.one = one
        self.descriptor = descriptor
        self._element_str = element_str or repr
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError(f"carrier of {descriptor} has duplicate encodings")
        if not allow_trivial and zero == one:
            raise ValueError(f"{descriptor}: zero identity (0 = 1) not allowed")
        # lazily computed, write-once caches
        self._units = None
        self._zero_divisors = None
        self._ideals = None
        self._local_factors = None

    def __repr__(self):
        return f"FiniteRing({self.descriptor})"

    def __len__(self):
        return len(self.elements)

    @property
    def size(self):
        return len(self.elements)

    @property
    def is_trivial(self):
        return self.zero == self.one

    def index(self, a):
        try:
            return self._index[a]
        except KeyError:
            raise ValueError(f"{a!r} is not an element of {self.descriptor}") from None

    def __contains__(self, a):
        return a in self._index

    def element_str(self, a):
        return self._element_str(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sorted_elements(self, subset: Iterable) -> list:
        return sorted(subset, key=self.index)

    def same_ring(self, other: "FiniteRing") -> bool:
        return self is other or self.descriptor == other.descriptor

    def units(self) -> frozenset:
        if self._units is None:
            one = self.one
            found = set()
            for a in self.elements:
                for b in self.elements:
                    if self.mul(a, b) == one:
                        found.add(a)
                        break
            self._units = frozenset(found)
        return self._units

    def zero_divisors(self, include_zero: bool | None = None) -> frozenset:
        """{r : r*s = 0 for some s != 0}; contains 0 whenever the ring is nonzero."""
        if self._zero_divisors is None:
            zero = self.zero
            zd = set()
            for a in self.elements:
                for b in self.elements:
                    if b != zero and self.mul(a, b) == zero:
                        zd.add(a)
                        break
            self._zero_divisors = frozenset(zd)
        if include_zero is None:
            include_zero = INCLUDE_ZERO_IN_ZD_SETS
        if include_zero:
            return self._zero_divisors
        return self._zero_divisors - {self.zero}

    def regular_elements(self) -> frozenset:
        return frozenset(self.elements) - self.zero_divisors(include_zero=True)

    def ideals(self, bound: int = DEFAULT_LATTICE_BOUND) -> tuple["Ideal", ...]:
        """Every ideal exactly once, saturating cyclic ideals under pairwise sums.

        Raises BoundExceeded past `bound` so callers shrink the universe
        rather than wait on an infeasible fixpoint.
        """
        if self._ideals is None:
            if self.size > bound:
                raise BoundExceeded(
                    f"ideal lattice of {self.descriptor} (size {self.size}) exceeds bound {bound}")
            seen = {}
            for r in self.elements:
                ideal = ideal_generated(self, [r])
                seen.setdefault(ideal.elements, ideal)
            frontier = list(seen.values())
            while frontier:
                fresh = []
                current = list(seen.values())
                for i in frontier:
                    for j in current:
                        s = _close_under_addition(self, i.elements | j.elements)
                        key = frozenset(s)
                        if key not in seen:
                            gens = tuple(self.sorted_elements(i.generators + j.generators))
                            new = Ideal(self, gens, key)
                            seen[key] = new
                            fresh.append(new)
                frontier = fresh
            lattice = sorted(
                seen.values(),
                key=lambda I: (len(I.elements), tuple(sorted(map(self.index, I.elements)))))
            self._ideals = tuple(lattice)
        return self._ideals

    def maximal_ideals(self) -> tuple["Ideal", ...]:
        lattice = self.ideals()
        proper = [I for I in lattice if len(I.elements) < self.size]
        maximal = []
        for I in proper:
            if not any(I.elements < J.elements for J in proper):
                maximal.append(I)
        return tuple(maximal)

    def idempotents(self) -> list:
        return [e for e in self.elements if self.mul(e, e) == e]

    def local_factors(self) -> tuple[tuple, ...]:
        """Primitive idempotents e_i with R = prod R*e_i, each factor local."""
        if self._local_factors is None:
            zero = self.zero
            idem = [e for e in self.idempotents() if e != zero]
            prims = []
            for e in idem:
                if not any(g != e and self.mul(g, e) == g for g in idem):
                    prims.append(e)
            prims = self.sorted_elements(prims)
            total = zero
            for e in prims:
                for f in prims:
                    if e != f and self.mul(e, f) != zero:
                        raise RuntimeError(
                            f"{self.descriptor}: primitive idempotents not orthogonal")
                total = self.add(total, e)
            if total != self.one:
                raise RuntimeError(f"{self.descriptor}: idempotent decomposition incomplete")
            self._local_factors = tuple(prims)
        return self._local_factors


@dataclass(frozen=True)
class RingPredicates:
    is_field: bool
    is_domain: bool
    is_local: bool
    maximal_ideals: tuple


def ring_predicates(R: FiniteRing) -> RingPredicates:
    zd = R.zero_divisors(include_zero=True)
    is_domain = zd == frozenset({R.zero})
    is_field = all(a in R.units() for a in R.elements if a != R.zero)
    maximal = R.maximal_ideals()
    return RingPredicates(
        is_field=is_field,
        is_domain=is_domain,
        is_local=len(maximal) == 1,
        maximal_ideals=maximal,
    )


# ---------------------------------------------------------------------------
# constructions


def Zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError(f"Zmod({n}): modulus must be >= 2")
    return FiniteRing(
        kind="zmod",
        elements=range(n),
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        zero=0,
        one=1,
        descriptor=f"Z{n}",
        element_str=str,
    )


def product_ring(A: FiniteRing, B: FiniteRing) -> FiniteRing:
    # carrier order: first component varies fastest, so Prod(Z2,Z2) lists
    # (0,0), (1,0), (0,1), (1,1)
    elements = [(a, b) for b in B.elements for a in A.elements]
    return FiniteRing(
        kind="product",
        elements=elements,
        add=lambda u, v: (A.add(u[0], v[0]), B.add(u[1], v[1])),
        mul=lambda u, v: (A.mul(u[0], v[0]), B.mul(u[1], v[1])),
        neg=lambda u: (A.neg(u[0]), B.neg(u[1])),
        zero=(A.zero, B.zero),
        one=(A.one, B.one),
        descriptor=f"Prod({A.descriptor},{B.descriptor})",
        element_str=lambda u: f"({A.element_str(u[0])},{B.element_str(u[1])})",
    )


def poly_quotient(base: FiniteRing, relation: tuple[int, ...]) -> FiniteRing:
    """Quotient base[x]/(f) for a monic relation f, with base = Z/n.

    `relation` lists the coefficients of f from the constant term up; the
    leading coefficient must be 1.  Elements are reduced coefficient vectors
    of length deg(f).
    """
    if base.kind != "zmod":
        raise ValueError("polynomial quotients are supported over Zmod bases only")
    n = base.size
    rel = tuple(c % n for c in relation)
    if len(rel) < 2:
        raise ValueError("relation must have degree >= 1")
    if rel[-1] != 1:
        raise ValueError(f"relation {rel} is not monic")
    d = len(rel) - 1
    # x^d = -(rel[0] + rel[1] x + ... + rel[d-1] x^(d-1))
    top = tuple((-rel[i]) % n for i in range(d))

    def reduce(raw: list[int]) -> tuple[int, ...]:
        for k in range(len(raw) - 1, d - 1, -1):
            c = raw[k] % n
            raw[k] = 0
            if c:
                for t in range(d):
                    raw[k - d + t] += c * top[t]
        return tuple(c % n for c in raw[:d])

    mul_memo: dict = {}

    def mul(u, v):
        key = (u, v)
        out = mul_memo.get(key)
        if out is None:
            raw = [0] * (2 * d - 1)
            for i, a in enumerate(u):
                if a:
                    for j, b in enumerate(v):
                        raw[i + j] += a * b
            out = reduce(raw)
            mul_memo[key] = out
        return out

    # carrier order: little-endian on coefficients, so Z2[x]/(x^2) lists
    # 0, 1, x, 1+x
    elements = []
    for value in range(n ** d):
        v, digits = value, []
        for _ in range(d):
            digits.append(v % n)
            v //= n
        elements.append(tuple(digits))

    def element_str(u):
        terms = []
        for k in range(d):
            c = u[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    return FiniteRing(
        kind="polyquot",
        elements=elements,
        add=lambda u, v: tuple((a + b) % n for a, b in zip(u, v)),
        mul=mul,
        neg=lambda u: tuple((-a) % n for a in u),
        zero=tuple([0] * d),
        one=tuple([1] + [0] * (d - 1)),
        descriptor=f"PolyQuot({base.descriptor}, {poly_str(rel)})",
        element_str=element_str,
    )


def poly_str(coeffs: tuple[int, ...]) -> str:
    """Canonical display of a relation polynomial, highest degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# ideals


def _close_under_addition(R: FiniteRing, seed: Iterable) -> set:
    closed = set(seed)
    closed.add(R.zero)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                s = R.add(a, b)
                if s not in closed:
                    closed.add(s)
                    fresh.append(s)
        frontier = fresh
    return closed


@dataclass(frozen=True)
class Ideal:
    """An ideal carried with a generator list and its full element set.

    Two ideals over the same ring compare equal iff their element sets do,
    regardless of how they were generated.
    """

    ring: FiniteRing = field(compare=False)
    generators: tuple = field(compare=False)
    elements: frozenset = field(compare=False)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring.same_ring(other.ring) and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring.descriptor, self.elements))

    def __repr__(self):
        gens = ",".join(self.ring.element_str(g) for g in self.generators)
        return f"Ideal({self.ring.descriptor}: ({gens}))"

    def __len__(self):
        return len(self.elements)

    def contains(self, a) -> bool:
        return a in self.elements

    @property
    def is_zero(self) -> bool:
        return self.elements == frozenset({self.ring.zero})

    @property
    def is_whole_ring(self) -> bool:
        return len(self.elements) == self.ring.size

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_same_ring(self, other)
        return ideal_generated(self.ring, list(self.generators) + list(other.generators))

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_same_ring(self, other)
        R = self.ring
        prods = [R.mul(a, b) for a in self.generators for b in other.generators]
        return ideal_generated(R, prods)

    def __pow__(self, k: int) -> "Ideal":
        return ideal_power(self, k)

    def intersect(self, other: "Ideal") -> "Ideal":
        _check_same_ring(self, other)
        common = self.elements & other.elements
        return Ideal(self.ring, tuple(self.ring.sorted_elements(common)), frozenset(common))

    def annihilator(self) -> "Ideal":
        return annihilator(self.ring, self)

    def small_generators(self) -> tuple:
        """A short generating list: single generator when principal, else greedy."""
        R = self.ring
        for e in R.sorted_elements(self.elements):
            if e == R.zero:
                continue
            if frozenset(_close_under_addition(R, {R.mul(r, e) for r in R.elements})) == self.elements:
                return (e,)
        gens: list = []
        span = {R.zero}
        for e in R.sorted_elements(self.elements):
            if e not in span:
                gens.append(e)
                span = _close_under_addition(
                    R, span | {R.mul(r, g) for r in R.elements for g in gens})
                if frozenset(span) == self.elements:
                    break
        return tuple(gens) if gens else (R.zero,)


def _check_same_ring(I: Ideal, J: Ideal):
    if not I.ring.same_ring(J.ring):
        raise ValueError(f"ideal rings differ: {I.ring.descriptor} vs {J.ring.descriptor}")


def ideal_generated(R: FiniteRing, gens: Iterable) -> Ideal:
    """Smallest ideal containing `gens` (empty list gives the zero ideal)."""
    gens = list(gens)
    for g in gens:
        if g not in R:
            raise ValueError(f"{g!r} is not an element of {R.descriptor}")
    multiples = {R.mul(r, g) for r in R.elements for g in gens}
    closed = _close_under_addition(R, multiples)
    return Ideal(R, tuple(R.sorted_elements(dict.fromkeys(gens))), frozenset(closed))


def zero_ideal(R: FiniteRing) -> Ideal:
    return ideal_generated(R, [])


def unit_ideal(R: FiniteRing) -> Ideal:
    return ideal_generated(R, [R.one])


def ideal_combine(I: Ideal, J: Ideal, op: str) -> Ideal:
    if op == "sum":
        return I + J
    if op == "product":
        return I * J
    if op == "intersect":
        return I.intersect(J)
    raise ValueError(f"unknown ideal operation {op!r}")


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError("ideal powers need k >= 0")
    result = unit_ideal(I.ring)
    for _ in range(k):
        result = result * I
    return result


def annihilator(R: FiniteRing, I: Ideal) -> Ideal:
    if not R.same_ring(I.ring):
        raise ValueError("annihilator: ideal belongs to a different ring")
    zero = R.zero
    ann = [r for r in R.elements if all(R.mul(r, a) == zero for a in I.generators)]
    return Ideal(R, tuple(ann), frozenset(ann))


def zero_divisors_ring(R: FiniteRing, include_zero: bool | None = None) -> frozenset:
    return R.zero_divisors(include_zero=include_zero)


def all_ideals(R: FiniteRing, bound: int = DEFAULT_LATTICE_BOUND) -> tuple[Ideal, ...]:
    return R.ideals(bound=bound)


# ---------------------------------------------------------------------------
# multiplicative sets


@dataclass(frozen=True)
class MultiplicativeSet:
    ring: FiniteRing = field(compare=False)
    elements: frozenset = field(compare=True)

    def __post_init__(self):
        if self.ring.one not in self.elements:
            raise ValueError("multiplicative set must contain 1")
        for a in self.elements:
            for b in self.elements:
                if self.ring.mul(a, b) not in self.elements:
                    raise ValueError(
                        f"set not closed under multiplication at {a!r}*{b!r}")

    def __repr__(self):
        elems = ",".join(self.ring.element_str(e) for e in self.ring.sorted_elements(self.elements))
        return f"MultSet({self.ring.descriptor}: {{{elems}}})"


def multiplicative_closure(R: FiniteRing, seed: Iterable) -> MultiplicativeSet:
    """Close `seed` (plus 1) under multiplication."""
    closed = set(seed)
    for s in closed:
        if s not in R:
            raise ValueError(f"{s!r} is not an element of {R.descriptor}")
    closed.add(R.one)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                p = R.mul(a, b)
                if p not in closed:
                    closed.add(p)
                    fresh.append(p)
        frontier = fresh
    return MultiplicativeSet(R, frozenset(closed))


def all_mult_closed_subsets(R: FiniteRing, within: Iterable) -> list[MultiplicativeSet]:
    """Every multiplicatively closed subset of `within` that contains 1.

    `within` must be closed under multiplication itself (true for the
    regular-on-M candidate sets this is used on); enumeration walks closures
    rather than all subsets.
    """
    allowed = frozenset(within) | {R.one}
    base = multiplicative_closure(R, [R.one])
    if not base.elements <= allowed:
        raise ValueError("candidate set does not even allow {1}")
    found = {base.elements: base}
    frontier = [base]
    while frontier:
        fresh = []
        for S in frontier:
            for e in R.sorted_elements(allowed - S.elements):
                bigger = multiplicative_closure(R, S.elements | {e})
                if bigger.elements <= allowed and bigger.elements not in found:
                    found[bigger.elements] = bigger
                    fresh.append(bigger)
        frontier = fresh
    return sorted(found.values(),
                  key=lambda S: (len(S.elements), tuple(sorted(map(R.index, S.elements)))))


# ---------------------------------------------------------------------------
# axiom verification


def verify_ring_axioms(R: FiniteRing, bound: int = 64):
    """Full-table commutative-ring axiom check; raises ValueError on violation."""
    if R.size > bound:
        raise BoundExceeded(f"axiom check bound {bound} exceeded for {R.descriptor}")
    els = R.elements
    zero, one = R.zero, R.one
    for a in els:
        if R.add(a, zero) != a:
            raise ValueError(f"{R.descriptor}: {a} + 0 != {a}")
        if R.mul(a, one) != a:
            raise ValueError(f"{R.descriptor}: {a} * 1 != {a}")
        if R.add(a, R.neg(a)) != zero:
            raise ValueError(f"{R.descriptor}: {a} + (-{a}) != 0")
    for a in els:
        for b in els:
            if R.add(a, b) != R.add(b, a):
                raise ValueError(f"{R.descriptor}: addition not commutative at {a},{b}")
            if R.mul(a, b) != R.mul(b, a):
                raise ValueError(f"{R.descriptor}: multiplication not commutative at {a},{b}")
    for a in els:
        for b in els:
            for c in els:
                if R.add(R.add(a, b), c) != R.add(a, R.add(b, c)):
                    raise ValueError(f"{R.descriptor}: addition not associative at {a},{b},{c}")
                if R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)):
                    raise ValueError(f"{R.descriptor}: multiplication not associative at {a},{b},{c}")
                if R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)):
                    raise ValueError(f"{R.descriptor}: distributivity fails at {a},{b},{c}")
