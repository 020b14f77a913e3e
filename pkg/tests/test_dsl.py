import random

import pytest

from zdbench.dsl import (AlgebraNode, CyclicNode, FreeNode, HomNode, IntElem,
                         LocalizeNode, PolyQuotNode, ProdNode, RegNode,
                         SumNode, TensorNode, TupleElem, TotalQuotientNode,
                         XPolyElem, ZmodNode, build_algebra, build_module,
                         build_ring, parse_dsl, parse_ext, parse_module,
                         parse_ring, print_node)
from zdbench.errors import DslError
from zdbench.modules import regular_module
from zdbench.rings import Zmod


def test_parse_ring_examples():
    node = parse_ring("Prod(Z2,Z2)")
    assert node == ProdNode(ZmodNode(2), ZmodNode(2))
    assert node.span == (0, len("Prod(Z2,Z2)"))
    pq = parse_ring("PolyQuot(Z2, x^2 + x)")
    assert pq == PolyQuotNode(ZmodNode(2), (0, 1, 1))
    assert parse_ring("TotalQuotient(Z6)") == TotalQuotientNode(ZmodNode(6))
    loc = parse_ring("Localize(Z6, {1,5})")
    assert loc == LocalizeNode(ZmodNode(6), (IntElem(1), IntElem(5)))


def test_parse_module_examples():
    assert parse_module("Reg") == RegNode()
    assert parse_module("Free(2)") == FreeNode(2)
    cyc = parse_module("Cyclic((0,1))")
    assert cyc == CyclicNode((TupleElem((IntElem(0), IntElem(1))),))
    assert parse_module("Sum(Reg,Free(1))") == SumNode(RegNode(), FreeNode(1))
    assert parse_module("Hom(Cyclic(2))") == HomNode(CyclicNode((IntElem(2),)))
    t = parse_module("Tensor(Reg, Algebra(Z4, Z4))")
    assert t == TensorNode(RegNode(), AlgebraNode(ZmodNode(4), ZmodNode(4)))


def test_parse_dsl_dispatch():
    assert isinstance(parse_dsl("Z6"), ZmodNode)
    assert isinstance(parse_dsl("Reg"), RegNode)
    assert isinstance(parse_dsl("Algebra(Z4, Z4)"), AlgebraNode)


def test_syntax_errors_carry_spans():
    with pytest.raises(DslError) as err:
        parse_ring("Prod(Z2 Z2)")
    assert err.value.span[0] >= 8
    with pytest.raises(DslError):
        parse_ring("Z6 trailing")
    with pytest.raises(DslError):
        parse_ring("")
    with pytest.raises(DslError):
        parse_module("Cyclic((0,1)")


def test_semantic_errors():
    with pytest.raises(DslError):
        build_ring("PolyQuot(Z4, 2*x^2 + 1)")   # not monic
    with pytest.raises(DslError):
        build_ring("PolyQuot(Z4, 3)")           # degree 0
    with pytest.raises(DslError):
        build_ring("Z1")
    with pytest.raises(DslError):
        build_ring("PolyQuot(Prod(Z2,Z2), x^2)")
    with pytest.raises(DslError):
        build_module(Zmod(6), "Cyclic((0,1))")  # tuple element in Zmod


def test_monic_relation_accepted():
    R = build_ring("PolyQuot(Z2, x^2 + x)")
    assert R.size == 4


def test_build_ring_examples():
    assert build_ring("Z6").size == 6
    assert build_ring("Prod(Z2,Z2)").size == 4
    assert build_ring("PolyQuot(Z2, x^2)").size == 4
    assert len(build_ring("Localize(Prod(Z2,Z2), {(1,0)})").elements) == 2
    assert build_ring("TotalQuotient(Z6)").size == 6


def test_build_module_examples():
    R = build_ring("Prod(Z2,Z2)")
    M = build_module(R, "Cyclic((0,1))")
    assert M.size == 2 and M.tag == "Cyclic((0,1))"
    assert build_module(Zmod(6), "Sum(Cyclic(3),Reg)").size == 18
    assert build_module(Zmod(6), "Hom(Cyclic(3))").size == 3
    assert build_module(Zmod(4), "Tensor(Cyclic(2), Algebra(PolyQuot(Z4, x^2), Z4))").size == 4
    assert build_module(Zmod(4), "Cyclic()").size == 4  # zero ideal


def test_build_algebra_canonical_maps():
    assert build_algebra("Algebra(Z6, Z6)").is_trivial_extension
    diag = build_algebra("Algebra(Prod(Z2,Z2), Z2)")
    assert diag.embed[1] == (1, 1)
    ext = build_algebra("Algebra(PolyQuot(Z2, x^2 + x + 1), Z2)")
    assert ext.embed[1] == (1, 0)
    with pytest.raises(DslError):
        build_algebra("Algebra(Z4, Z2)")


def test_element_resolution_in_polyquot():
    R = build_ring("PolyQuot(Z2, x^2)")
    M = build_module(R, "Cyclic(x)")
    assert M.size == 2  # (x) = {0, x}
    M2 = build_module(R, "Cyclic(1+x)")
    assert M2.size == 1  # 1+x is a unit


def test_parse_ext_literals():
    R = Zmod(4)
    f = parse_ext("2*X^1 + 2", R)
    assert dict(f.support) == {(1,): 2, (0,): 2}
    g = parse_ext("series(8; 2*X + 2)", R)
    assert g.variant == "series" and g.precision == 8
    P = build_ring("Prod(Z2,Z2)")
    fp = parse_ext("(1,0) + (1,0)*X", P)
    assert dict(fp.support) == {(0,): (1, 0), (1,): (1, 0)}
    multi = parse_ext("X1*X2^2 + 2", R)
    assert dict(multi.support) == {(1, 2): 1, (0, 0): 2}
    m = parse_ext("3", R, regular_module(R))
    assert m.base_kind == "module"
    coalesced = parse_ext("2 + 2", R)
    assert coalesced.is_zero
    with pytest.raises(DslError):
        parse_ext("2*Y", R)


def _random_elem(rng, depth):
    kind = rng.choice(["int", "tuple", "poly"]) if depth > 0 else "int"
    if kind == "int":
        return IntElem(rng.randrange(0, 9))
    if kind == "tuple":
        return TupleElem((_random_elem(rng, 0), _random_elem(rng, 0)))
    # canonical xpoly: degree >= 1 with a nonzero leading coefficient
    degree = rng.randrange(1, 4)
    coeffs = tuple(rng.randrange(0, 4) for _ in range(degree)) + (rng.randrange(1, 4),)
    return XPolyElem(coeffs)


def _random_ring(rng, depth):
    choice = rng.randrange(0, 5 if depth > 0 else 1)
    if choice == 0:
        return ZmodNode(rng.randrange(2, 13))
    if choice == 1:
        return ProdNode(_random_ring(rng, depth - 1), _random_ring(rng, depth - 1))
    if choice == 2:
        degree = rng.randrange(1, 4)
        rel = tuple(rng.randrange(0, 4) for _ in range(degree)) + (1,)
        return PolyQuotNode(_random_ring(rng, 0), rel)
    if choice == 3:
        elems = tuple(_random_elem(rng, 0) for _ in range(rng.randrange(1, 3)))
        return LocalizeNode(_random_ring(rng, depth - 1), elems)
    return TotalQuotientNode(_random_ring(rng, depth - 1))


def _random_module(rng, depth):
    choice = rng.randrange(0, 6 if depth > 0 else 3)
    if choice == 0:
        return RegNode()
    if choice == 1:
        return FreeNode(rng.randrange(0, 4))
    if choice == 2:
        gens = tuple(_random_elem(rng, 1) for _ in range(rng.randrange(0, 3)))
        return CyclicNode(gens)
    if choice == 3:
        return SumNode(_random_module(rng, depth - 1), _random_module(rng, depth - 1))
    if choice == 4:
        return HomNode(_random_module(rng, depth - 1))
    return TensorNode(_random_module(rng, depth - 1),
                      AlgebraNode(_random_ring(rng, 0), _random_ring(rng, 0)))


def test_round_trip_property():
    rng = random.Random(20240811)
    for _ in range(150):
        ring_node = _random_ring(rng, 2)
        text = print_node(ring_node)
        reparsed = parse_ring(text)
        assert reparsed == ring_node, text
        assert reparsed.span == (0, len(text))
    for _ in range(150):
        mod_node = _random_module(rng, 2)
        text = print_node(mod_node)
        reparsed = parse_module(text)
        assert reparsed == mod_node, text
        assert reparsed.span == (0, len(text))


def test_print_examples():
    assert print_node(parse_ring("Prod(Z2,Z2)")) == "Prod(Z2,Z2)"
    assert print_node(parse_ring("PolyQuot(Z2,x^2+x+1)")) == "PolyQuot(Z2, x^2 + x + 1)"
    assert print_node(parse_module("Cyclic((0,1))")) == "Cyclic((0,1))"
    assert print_node(parse_module("Tensor(Reg,Algebra(Z4,Z4))")) == \
        "Tensor(Reg, Algebra(Z4, Z4))"


def test_module_tags_reparse():
    # every constructed tag is itself valid DSL, so witnesses can be replayed
    R = build_ring("Prod(Z2,Z2)")
    for text in ("Reg", "Free(2)", "Cyclic((0,1))", "Sum(Cyclic((0,1)),Reg)",
                 "Hom(Cyclic((0,1)))"):
        M = build_module(R, text)
        again = build_module(R, M.tag)
        assert again.size == M.size
