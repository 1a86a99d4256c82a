"""Monodromy relation presentations, Tietze simplification, abelianization."""

import random

from mixedcurves.presentations import (AbelianizationResult, GroupPresentation,
                                       Word, abelianize, cyclic_relations,
                                       join_relations, relation_at_infinity,
                                       simplify, smith_normal_form,
                                       vanishing_relation)


def test_word_parse_and_reduce():
    w = Word.parse("x4' x5' x3 x4 x5 x6")
    assert str(w) == "x4' x5' x3 x4 x5 x6"
    assert (w * w.inverse()).is_trivial()
    assert Word.make([(0, 1), (0, -1)]).is_trivial()


def test_join_presentation_simplifies_to_cyclic():
    for q in range(1, 7):
        p = join_relations(q)
        s = simplify(p)
        ab = abelianize(s)
        if q == 1:
            assert ab.is_trivial()
        else:
            assert ab.rank == 0 and ab.torsion == [q]
        # simplify reaches a single generator with relator x^q
        assert s.generator_count <= 1
        if q >= 2:
            assert len(s.relators) == 1
            assert len(s.relators[0].letters) == q


def test_example_1_1_trivial_group():
    # relators: xi1 xi2 xi3 (infinity), xi2 xi3, xi2^-1 xi1 xi2 xi3
    rels = [
        Word.parse("x1 x2 x3"),
        Word.parse("x2 x3"),
        Word.parse("x2' x1 x2 x3"),
    ]
    p = GroupPresentation(3, rels)
    s = simplify(p)
    assert s.generator_count == 0 and not s.relators
    assert abelianize(p).is_trivial()


def test_example_1_2_trivial_group():
    rels = [Word.parse("x1 x2"), Word.parse("x2 x3"), Word.parse("x1 x2 x3")]
    p = GroupPresentation(3, rels)
    s = simplify(p)
    assert s.generator_count == 0 and not s.relators
    assert abelianize(p).is_trivial()


def test_example_2_z2():
    rels = [
        vanishing_relation(1, 2),          # xi1 xi2 = e
        vanishing_relation(5, 6),          # xi5 xi6 = e
        Word.parse("x3 x4'"),              # half turn at P: xi3 = xi4
        vanishing_relation(1, 4),          # xi1 xi4 = e
        Word.parse("x4' x5' x3 x4 x5 x6"),  # conjugated vanishing relation
        relation_at_infinity(6),           # xi6 ... xi1 = e
    ]
    p = GroupPresentation(6, rels)
    s = simplify(p)
    assert s.generator_count == 1
    assert len(s.relators) == 1 and len(s.relators[0].letters) == 2
    ab = abelianize(s)
    assert ab.rank == 0 and ab.torsion == [2]


def test_empty_relators_unchanged():
    p = GroupPresentation(3, [])
    s = simplify(p)
    assert s.generator_count == 3 and not s.relators
    assert abelianize(p).rank == 3


def test_snf_basics():
    assert smith_normal_form([[2]]) == [2]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    # divisibility chain holds
    fs = smith_normal_form([[6, 0], [0, 10]])
    assert fs == [2, 30]


def test_abelianize_invariant_under_simplify_and_shuffle():
    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(1, 4)
        rels = []
        for _ in range(rng.randint(0, 4)):
            letters = [(rng.randrange(n), rng.choice((1, -1)))
                       for _ in range(rng.randint(1, 6))]
            w = Word.make(letters)
            if not w.is_trivial():
                rels.append(w)
        p = GroupPresentation(n, rels)
        a1 = abelianize(p)
        a2 = abelianize(simplify(p))
        assert (a1.rank, a1.torsion) == (a2.rank, a2.torsion)
        shuffled = rels[:]
        rng.shuffle(shuffled)
        a3 = abelianize(GroupPresentation(n, shuffled))
        assert (a1.rank, a1.torsion) == (a3.rank, a3.torsion)


def test_cyclic_relations_builder():
    rels = cyclic_relations(4)
    assert [str(w) for w in rels] == ["x1 x2'", "x2 x3'", "x3 x4'"]
