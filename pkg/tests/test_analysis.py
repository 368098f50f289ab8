from pathlib import Path

import pytest

from conftest import DATA, all_mixed_graphs
from traagkit.analysis import (
    abelianization,
    apply_map,
    check_hom,
    geodesic_length,
    indicable_vertex,
    mutually_inverse,
    parse_map,
    support,
    torsion,
)
from traagkit.errors import MapParseError
from traagkit.graphs import is_clique, parse_graph
from traagkit.presentations import complete, normal_form, presentation
from traagkit.words import letter, parse_word

A, B, C = letter(0, 1), letter(1, 1), letter(2, 1)


def _completed(text, order=None):
    p = presentation(parse_graph(text), order)
    return p, complete(p)


def test_abelianization_examples():
    delta = parse_graph("vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n")
    r = abelianization(delta)
    assert (r.free_rank, r.z2_rank) == (0, 3)
    z2 = parse_graph("vertices: a b\nedge a b\n")
    assert abelianization(z2).free_rank == 2
    free4 = parse_graph("vertices: a b c d\n")
    assert (abelianization(free4).free_rank, abelianization(free4).z2_rank) == (4, 0)


def test_abelianization_invariants_exhaustive():
    for n in (1, 2, 3, 4):
        for g in all_mixed_graphs(n):
            r = abelianization(g)
            assert r.free_rank + r.z2_rank == g.n
            assert r.z2_rank == len(g.origins())


def test_indicability_examples():
    klein = parse_graph("vertices: a b\nedge a -> b\n")
    assert indicable_vertex(klein) == 1  # b
    delta = parse_graph("vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n")
    assert indicable_vertex(delta) is None
    gamma2 = parse_graph(Path(DATA / "gamma2.g").read_text())
    assert gamma2.names[indicable_vertex(gamma2)] == "x"


def test_indicability_respects_order():
    g = parse_graph("vertices: a b c\nedge a -> b\norder: c b a\n")
    # Non-origins are b and c; least in the order c < b < a is c.
    assert indicable_vertex(g) == 2


def test_indicability_iff_positive_free_rank():
    for n in (1, 2, 3):
        for g in all_mixed_graphs(n):
            assert (indicable_vertex(g) is not None) == (abelianization(g).free_rank >= 1)


def test_torsion_delta():
    p, completion = _completed(
        "vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n"
    )
    witness = torsion(p, completion)
    assert witness is not None
    assert witness.cycle == (0, 1, 2)
    assert witness.element == (A, B, C)
    assert normal_form(completion, witness.element * 2) == ()
    assert is_clique(p.graph, witness.cycle)
    assert is_clique(p.graph, support(completion, witness.element))


def test_torsion_none():
    for text in ("vertices: a b\nedge a b\n", "vertices: a b\nedge a -> b\n"):
        p, completion = _completed(text)
        assert torsion(p, completion) is None


def test_geodesic_length_examples():
    _, cz = _completed("vertices: a b\nedge a b\n")
    assert geodesic_length(cz, parse_word("a a b^-1 b^-1 b^-1", ("a", "b"))) == 5
    assert geodesic_length(cz, ()) == 0
    _, ck = _completed("vertices: a b\nedge a -> b\n")
    assert geodesic_length(ck, (B, A)) == 2


def test_support_examples():
    p, cd = _completed("vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n")
    assert support(cd, (A, B, C)) == {0, 1, 2}
    assert support(cd, ()) == frozenset()
    _, ck = _completed("vertices: a b\nedge a -> b\n")
    assert support(ck, parse_word("b a b^-1", ("a", "b"))) == {0}


@pytest.fixture(scope="module")
def example_pair():
    g1 = parse_graph((DATA / "gamma1.g").read_text())
    g2 = parse_graph((DATA / "gamma2.g").read_text())
    p1 = presentation(g1)
    p2 = presentation(g2)
    return (p1, complete(p1)), (p2, complete(p2))


def test_isomorphism_certificate(example_pair):
    (p1, c1), (p2, c2) = example_pair
    f = parse_map((DATA / "f.map").read_text(), p1.graph, p2.graph)
    g = parse_map((DATA / "g.map").read_text(), p2.graph, p1.graph)
    assert check_hom(f, c2) is None
    assert check_hom(g, c1) is None
    assert mutually_inverse(f, g, c1, c2)


def test_identity_map_is_hom(example_pair):
    (p1, c1), _ = example_pair
    text = "\n".join(f"{n} -> {n}" for n in p1.graph.names)
    ident = parse_map(text, p1.graph, p1.graph)
    assert check_hom(ident, c1) is None
    assert mutually_inverse(ident, ident, c1, c1)


def test_hom_into_abelian_target():
    p, cz = _completed("vertices: a b\nedge a b\n")
    m = parse_map("a -> a\nb -> a b a", p.graph, p.graph)
    assert check_hom(m, cz) is None


def test_not_hom_reports_relator():
    p, cd = _completed("vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n")
    m = parse_map("a -> b\nb -> a\nc -> c", p.graph, p.graph)
    violated = check_hom(m, cd)
    assert violated is not None
    from traagkit.presentations import relators

    assert violated in relators(p.graph)
    assert normal_form(cd, apply_map(m, violated)) != ()


def test_trivial_map_not_inverse(example_pair):
    (p1, c1), (p2, c2) = example_pair
    f = parse_map((DATA / "f.map").read_text(), p1.graph, p2.graph)
    trivial = parse_map("x -> 1\ny -> 1\nz -> 1", p2.graph, p1.graph)
    assert check_hom(trivial, c1) is None  # the trivial map is a hom
    assert not mutually_inverse(f, trivial, c1, c2)


def test_parse_map_errors():
    src = parse_graph("vertices: a b\nedge a b\n")
    tgt = parse_graph("vertices: x\n")
    with pytest.raises(MapParseError):
        parse_map("a -> x\n", src, tgt)  # missing b
    with pytest.raises(MapParseError):
        parse_map("a -> x\na -> x\nb -> x\n", src, tgt)
    with pytest.raises(MapParseError):
        parse_map("a -> y\nb -> x\n", src, tgt)
    with pytest.raises(MapParseError):
        parse_map("a x\nb -> x\n", src, tgt)
    with pytest.raises(MapParseError):
        parse_map("q -> x\n", src, tgt)


def test_apply_map_respects_inverses():
    src = parse_graph("vertices: a\n")
    tgt = parse_graph("vertices: x y\nedge x y\n")
    m = parse_map("a -> x y^-1", src, tgt)
    assert apply_map(m, (letter(0, -1),)) == parse_word("y x^-1", ("x", "y"))
