import pytest

from doubleflag.nilpotent import (
    NilpotentLabelTheta,
    NotCIError,
    SignedYoungDiagram,
    diagrams_from_strings,
    embed_nilpotent_label,
    enumerate_syd,
    is_ci_diagram,
    sigma_on_syd,
)

# the n = 2 displays, one list of row strings per diagram
SYD_2 = [
    ["+-+-"], ["-+-+"], ["+-+", "-"], ["-+-", "+"], ["+-", "+-"],
    ["+-", "-+"], ["-+", "-+"], ["+-", "+", "-"], ["-+", "+", "-"], ["+", "+", "-", "-"],
]
SYD_CI_2 = [
    ["+-+-"], ["-+-+"], ["+-", "+-"], ["+-", "-+"], ["-+", "-+"],
    ["+-", "+", "-"], ["-+", "+", "-"], ["+", "+", "-", "-"],
]


def test_parse_and_order():
    d = SignedYoungDiagram.parse(["-", "+-+"])
    assert d.rows == ((3, "+"), (1, "-"))
    assert d.to_strings() == ["+-+", "-"]
    assert d == SignedYoungDiagram.parse(["+-+", "-"])
    with pytest.raises(ValueError):
        SignedYoungDiagram.parse(["++"])


def test_n1():
    got = set(enumerate_syd(1))
    assert got == set(diagrams_from_strings([["+-"], ["-+"], ["+", "-"]]))


def test_n2_lists_element_by_element():
    full = enumerate_syd(2)
    assert len(full) == len(set(full)) == 10
    assert set(full) == set(diagrams_from_strings(SYD_2))
    ci = [d for d in full if is_ci_diagram(d)]
    assert len(ci) == 8
    assert set(ci) == set(diagrams_from_strings(SYD_CI_2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_signatures(n):
    for d in enumerate_syd(n):
        assert d.signature() == (n, n)


def test_ci_examples():
    assert is_ci_diagram(SignedYoungDiagram.parse(["+-", "-+"]))
    assert not is_ci_diagram(SignedYoungDiagram.parse(["+-+", "-"]))


def test_sigma_examples():
    d = SignedYoungDiagram.parse(["+-+", "-"])
    assert sigma_on_syd(d) == SignedYoungDiagram.parse(["-+-", "+"])
    even = SignedYoungDiagram.parse(["+-", "-+-+"])
    assert sigma_on_syd(even) == even


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_fixed_points_are_ci(n):
    for d in enumerate_syd(n):
        assert sigma_on_syd(sigma_on_syd(d)) == d
        assert (sigma_on_syd(d) == d) == is_ci_diagram(d)


def test_embeddings():
    assert embed_nilpotent_label((2, 1), "theta") == NilpotentLabelTheta(((2, 1), (2, 1)))
    d = SignedYoungDiagram.parse(["+-", "+-"])
    assert embed_nilpotent_label(d, "-theta") == d
    with pytest.raises(NotCIError):
        embed_nilpotent_label(SignedYoungDiagram.parse(["+-+", "-"]), "-theta")
    with pytest.raises(ValueError):
        NilpotentLabelTheta(((2,), (1,)))
