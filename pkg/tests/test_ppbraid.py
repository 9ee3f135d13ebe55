import itertools
import json
import random

import pytest

from diagramkit.diagram import compose, equal, identity, invert, is_reduced, reduce
from diagramkit.errors import (
    NotPure,
    ParseError,
    PresentationMismatch,
    SlotOutOfRange,
    StrandCountMismatch,
    WrongBaseWord,
)
from diagramkit.presentation import BACKWARD, FORWARD, base_word, make_presentation, planar_presentation
from diagramkit.diagram import make_diagram
from diagramkit.ppbraid import (
    braid_equal,
    braid_from_json,
    braid_inv,
    braid_mul,
    braid_to_diagram,
    braid_to_json,
    diagram_to_braid,
    format_braid,
    identity_braid,
    is_pure,
    make_braid,
    palindromic_pure_braid,
    parse_braid,
    permutation,
    random_pure_braid,
    reduce_braid,
    sorting_slots,
)

from oracles import twin_image

HEX = (1, 2, 1, 2, 1, 2)


def test_make_braid_examples():
    assert make_braid(3, [1, 1]).slots == (1, 1)
    with pytest.raises(SlotOutOfRange):
        make_braid(3, [3])
    assert make_braid(1, []).slots == ()
    with pytest.raises(SlotOutOfRange):
        make_braid(1, [1])
    with pytest.raises(SlotOutOfRange):
        make_braid(3, [0])


def test_permutation_examples():
    assert permutation(make_braid(3, [])) == (0, 1, 2)
    assert permutation(make_braid(3, [1])) == (1, 0, 2)
    assert permutation(make_braid(3, HEX)) == (0, 1, 2)


def test_is_pure_examples():
    assert is_pure(make_braid(3, [1, 1]))
    assert not is_pure(make_braid(3, [1]))
    assert is_pure(make_braid(4, [1, 3, 1, 3]))


def test_braid_to_diagram_examples():
    d = braid_to_diagram(make_braid(3, [1, 1]))
    assert d.cells == ((0, 0, FORWARD), (0, 0, BACKWARD))
    assert reduce(d) == identity(planar_presentation(3), base_word(3))
    assert braid_to_diagram(make_braid(3, [])) == identity(planar_presentation(3), base_word(3))
    hexagon = braid_to_diagram(make_braid(3, HEX))
    assert len(hexagon.cells) == 6
    assert hexagon.bottom == base_word(3)
    assert is_reduced(hexagon)
    with pytest.raises(NotPure):
        braid_to_diagram(make_braid(3, [1]))


def test_braid_to_diagram_hexagon_by_hand():
    # x1x2x3 -> x2x1x3 -> x2x3x1 -> x3x2x1 -> x3x1x2 -> x1x3x2 -> x1x2x3
    d = braid_to_diagram(make_braid(3, HEX))
    assert d.cells == (
        (0, 0, FORWARD), (1, 1, FORWARD), (0, 2, FORWARD),
        (1, 0, BACKWARD), (0, 1, BACKWARD), (1, 2, BACKWARD),
    )


def test_diagram_to_braid_examples():
    p3 = planar_presentation(3)
    assert diagram_to_braid(identity(p3, base_word(3))) == make_braid(3, [])
    d = make_diagram(p3, base_word(3), [(0, 0, FORWARD), (0, 0, BACKWARD)])
    assert diagram_to_braid(d) == make_braid(3, [1, 1])


def test_diagram_to_braid_errors():
    p3 = planar_presentation(3)
    with pytest.raises(WrongBaseWord):
        diagram_to_braid(make_diagram(p3, base_word(3), [(0, 0, FORWARD)]))
    with pytest.raises(WrongBaseWord):
        diagram_to_braid(identity(p3, (1, 0, 2)))
    other = make_presentation(3, [((0, 1), (1, 0))])
    with pytest.raises(PresentationMismatch):
        diagram_to_braid(identity(other, base_word(3)))


@pytest.mark.parametrize("n", range(1, 5))
def test_round_trip_exhaustive(n):
    p = planar_presentation(n)
    count = 0
    for length in range(7):
        for slots in itertools.product(range(1, n), repeat=length):
            b = make_braid(n, slots)
            if not is_pure(b):
                continue
            d = braid_to_diagram(b)
            assert diagram_to_braid(d) == b
            assert braid_to_diagram(diagram_to_braid(d)) == d
            assert reduce(braid_to_diagram(diagram_to_braid(d))) == reduce(d)
            assert d.presentation == p
            count += 1
    assert count >= 1


def test_braid_equal_examples():
    assert braid_equal(make_braid(3, [1, 1]), make_braid(3, []))
    assert not braid_equal(make_braid(3, HEX), make_braid(3, []))
    assert braid_equal(make_braid(4, [1, 3]), make_braid(4, [3, 1]))
    with pytest.raises(StrandCountMismatch):
        braid_equal(make_braid(3, []), make_braid(4, []))


def test_braid_equal_on_impure_braids():
    assert braid_equal(make_braid(3, [1]), make_braid(3, [1]))
    assert not braid_equal(make_braid(3, [1]), make_braid(3, [2]))
    assert braid_equal(make_braid(3, [1, 2, 2]), make_braid(3, [1]))
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(2, 5)
        s1 = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))]
        s2 = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))]
        if rng.random() < 0.3:
            s2 = s1 + [s2[0], s2[0]] if s2 else s1
        expected = twin_image(n, s1) == twin_image(n, s2)
        assert braid_equal(make_braid(n, s1), make_braid(n, s2)) == expected


def test_disjoint_crossings_commute():
    # each crossing is impure on its own; pair them up so both sides are pure
    assert braid_equal(make_braid(4, [1, 3, 1, 3]), make_braid(4, [3, 1, 3, 1]))
    assert braid_equal(make_braid(4, [1, 3, 3, 1]), make_braid(4, []))


def test_braid_mul_inv_examples():
    b = braid_mul(make_braid(3, [1, 1]), make_braid(3, [2, 2]))
    assert b == make_braid(3, [1, 1, 2, 2])
    assert braid_equal(b, make_braid(3, []))
    assert braid_inv(make_braid(3, [1, 2])) == make_braid(3, [2, 1])
    with pytest.raises(StrandCountMismatch):
        braid_mul(make_braid(3, []), make_braid(2, []))
    with pytest.raises(NotPure):
        braid_mul(make_braid(3, [1]), make_braid(3, [1]))


@pytest.mark.parametrize("n", range(2, 7))
def test_inverse_property(n):
    rng = random.Random(n)
    for _ in range(200):
        b = random_pure_braid(n, rng.randint(0, 8), rng)
        assert braid_equal(braid_mul(b, braid_inv(b)), identity_braid(n))
        assert braid_equal(braid_mul(braid_inv(b), b), identity_braid(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_homomorphism(n):
    rng = random.Random(100 + n)
    for _ in range(200):
        b1 = random_pure_braid(n, rng.randint(0, 6), rng)
        b2 = random_pure_braid(n, rng.randint(0, 6), rng)
        lhs = braid_to_diagram(braid_mul(b1, b2))
        rhs = compose(braid_to_diagram(b1), braid_to_diagram(b2))
        assert equal(lhs, rhs)
        assert equal(braid_to_diagram(braid_inv(b1)), invert(braid_to_diagram(b1)))


@pytest.mark.parametrize("n", range(2, 6))
def test_equality_agrees_with_twin_representation(n):
    rng = random.Random(200 + n)
    for _ in range(150):
        b1 = random_pure_braid(n, rng.randint(0, 6), rng)
        if rng.random() < 0.5:
            # a shuffled rewrite of the same element
            b2 = make_braid(n, reduce_braid(b1).slots)
        else:
            b2 = random_pure_braid(n, rng.randint(0, 6), rng)
        assert braid_equal(b1, b2) == (twin_image(n, b1.slots) == twin_image(n, b2.slots))


def test_purity_preserved():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 6)
        b1 = random_pure_braid(n, rng.randint(0, 7), rng)
        b2 = random_pure_braid(n, rng.randint(0, 7), rng)
        assert is_pure(braid_mul(b1, b2))
        assert is_pure(braid_inv(b1))
        assert is_pure(reduce_braid(b1))


def test_generators_always_pure():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 6)
        assert is_pure(palindromic_pure_braid(n, rng.randint(0, 9), rng))
        b = random_pure_braid(n, rng.randint(0, 9), rng)
        assert is_pure(b)


def test_sorting_slots_sorts_every_permutation():
    for n in range(1, 6):
        for perm in itertools.permutations(range(n)):
            # a braid realising perm, then its sorting slots
            head = make_braid(n, sorting_slots(perm)[::-1]) if n > 1 else make_braid(n, [])
            assert permutation(head) == perm
            full = make_braid(n, head.slots + tuple(sorting_slots(perm)))
            assert is_pure(full)


def test_text_and_json_formats():
    b = make_braid(3, [1, 2, 2, 1])
    assert format_braid(b) == "n=3 s1 s2 s2 s1"
    assert parse_braid("n=3 s1 s2 s2 s1") == b
    assert parse_braid("n=1") == make_braid(1, [])
    assert braid_to_json(b) == {"n": 3, "slots": [1, 2, 2, 1]}
    assert braid_from_json(json.loads(json.dumps(braid_to_json(b)))) == b
    with pytest.raises(ParseError):
        parse_braid("s1 s2")
    with pytest.raises(ParseError):
        parse_braid("n=3 t1")
    with pytest.raises(SlotOutOfRange):
        parse_braid("n=3 s3")
    with pytest.raises(ParseError):
        braid_from_json({"n": 3})
