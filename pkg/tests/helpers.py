"""Random diagram generators shared by the test modules."""

from __future__ import annotations

from diagramkit.diagram import insert_dipole, random_diagram
from diagramkit.presentation import applicable_cells, apply_relation, make_presentation, planar_presentation

# a presentation with length-changing relations, to exercise offset bookkeeping
GENERAL = make_presentation(3, [((0, 1), (1, 0)), ((0, 0), (0,)), ((2,), (1, 1)), ((1, 2), (2, 1))])


def random_top(p, rng, length):
    return tuple(rng.randrange(p.alphabet_size) for _ in range(length))


def random_planar_diagram(rng, n=None, length=None):
    n = n or rng.randint(2, 5)
    p = planar_presentation(n)
    top = random_top(p, rng, rng.randint(n, n + 2))
    return random_diagram(p, top, length if length is not None else rng.randint(0, 14), rng)


def random_general_diagram(rng, length=None):
    top = random_top(GENERAL, rng, rng.randint(2, 5))
    return random_diagram(GENERAL, top, length if length is not None else rng.randint(0, 10), rng)


def random_dipole_insertions(d, rng, count):
    for _ in range(count):
        pos = rng.randint(0, len(d.cells))
        word = d.top
        for c in d.cells[:pos]:
            word = apply_relation(d.presentation, word, c.relation, c.direction, c.offset)
        options = applicable_cells(word, d.presentation)
        if not options:
            continue
        offset, rel, direction = rng.choice(options)
        d = insert_dipole(d, pos, rel, direction, offset)
    return d
