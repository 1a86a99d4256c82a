"""Group presentations from monodromy relations: words, Tietze simplification,
and abelianization by exact Smith normal form.

Words are tuples of (generator index, +-1).  Relation text uses generators
x1..xn with ' for inverse, e.g. "x4' x5' x3 x4 x5 x6".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

Letter = Tuple[int, int]  # (generator index, exponent +1/-1)


def free_reduce(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    w = list(free_reduce(letters))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = list(free_reduce(w[1:-1]))
    return tuple(w)


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...]

    @staticmethod
    def make(letters: Sequence[Letter]) -> "Word":
        return Word(free_reduce(letters))

    @staticmethod
    def parse(text: str) -> "Word":
        """Parse words like "x1 x2' x3" (apostrophe = inverse)."""
        letters: List[Letter] = []
        for tok in text.split():
            inv = tok.endswith("'")
            name = tok[:-1] if inv else tok
            if not name.startswith("x"):
                raise ValueError(f"generator tokens look like x<k>, got {tok!r}")
            idx = int(name[1:]) - 1
            if idx < 0:
                raise ValueError(f"bad generator index in {tok!r}")
            letters.append((idx, -1 if inv else 1))
        return Word.make(letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word.make(self.letters + other.letters)

    def is_trivial(self) -> bool:
        return not self.letters

    def exponent_sum(self, n_gens: int) -> List[int]:
        out = [0] * n_gens
        for g, e in self.letters:
            out[g] += e
        return out

    def substitute(self, gen: int, repl: "Word") -> "Word":
        out: List[Letter] = []
        for g, e in self.letters:
            if g != gen:
                out.append((g, e))
            elif e == 1:
                out.extend(repl.letters)
            else:
                out.extend(repl.inverse().letters)
        return Word.make(out)

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"x{g+1}" + ("'" if e < 0 else "") for g, e in self.letters)


@dataclass
class GroupPresentation:
    generator_count: int
    relators: List[Word]

    def __post_init__(self):
        for w in self.relators:
            for g, _ in w.letters:
                if g >= self.generator_count:
                    raise ValueError("relator uses an undeclared generator")

    def __str__(self):
        gens = ", ".join(f"x{i+1}" for i in range(self.generator_count))
        rels = ", ".join(str(w) for w in self.relators) or "-"
        return f"< {gens} | {rels} >"


# -- relation builders --------------------------------------------------------------


def join_relations(q: int) -> GroupPresentation:
    """xi_1 = ... = xi_q and xi_q ... xi_1 = e (join-type monodromy)."""
    if q < 1:
        raise ValueError("q must be positive")
    rels = [Word.make([(i, 1), (i + 1, -1)]) for i in range(q - 1)]
    rels.append(Word.make([(i, 1) for i in range(q - 1, -1, -1)]))
    return GroupPresentation(q, rels)


def cyclic_relations(count: int) -> List[Word]:
    """xi_1 = xi_2 = ... = xi_count (twisted-join cyclic relations)."""
    return [Word.make([(i, 1), (i + 1, -1)]) for i in range(count - 1)]


def vanishing_relation(i: int, j: int) -> Word:
    """xi_i xi_j = e for a collapsing pair (1-based indices)."""
    return Word.make([(i - 1, 1), (j - 1, 1)])


def relation_at_infinity(n: int) -> Word:
    """xi_n ... xi_1 = e (pencil-line boundary relation)."""
    return Word.make([(i, 1) for i in range(n - 1, -1, -1)])


# -- Tietze simplification --------------------------------------------------------------


def simplify(p: GroupPresentation, max_passes: int = 10_000) -> GroupPresentation:
    """Deterministic Tietze reduction: free/cyclic reduction plus elimination of
    generators isolated at a relator end (g w or w g with w free of g).

    Each elimination lowers the generator count, so the loop terminates; no
    search is attempted beyond this schedule.
    """
    n = p.generator_count
    relators = [Word(cyclic_reduce(w.letters)) for w in p.relators]
    alive = list(range(n))

    for _ in range(max_passes):
        relators = [Word(cyclic_reduce(w.letters)) for w in relators]
        relators = [w for w in relators if not w.is_trivial()]
        # deterministic scan: shortest relator first, then textual order
        target = None
        for w in sorted(relators, key=lambda w: (len(w.letters), str(w))):
            for pos in (0, len(w.letters) - 1):
                g, e = w.letters[pos]
                rest = w.letters[1:] if pos == 0 else w.letters[:-1]
                if any(x == g for x, _ in rest):
                    continue
                # w = g . rest  => g = rest^-1 ;  w = rest . g  => g = rest^-1
                repl = Word(tuple(rest)).inverse()
                if e == -1:
                    repl = repl.inverse()
                target = (g, repl, w)
                break
            if target:
                break
        if target is None:
            break
        g, repl, used = target
        new_rels = []
        for w in relators:
            if w is used:
                continue
            new_rels.append(w.substitute(g, repl))
        relators = new_rels
        alive.remove(g)

    # renumber surviving generators densely
    remap = {old: new for new, old in enumerate(alive)}
    out_rels = []
    for w in relators:
        lw = Word(cyclic_reduce(tuple((remap[g], e) for g, e in w.letters)))
        if not lw.is_trivial():
            out_rels.append(lw)
    out_rels = sorted(set(out_rels), key=lambda w: (len(w.letters), str(w)))
    return GroupPresentation(len(alive), out_rels)


# -- Smith normal form / abelianization ---------------------------------------------------


def smith_normal_form(matrix: List[List[int]]) -> List[int]:
    """Nonzero diagonal invariant factors d1 | d2 | ... of an integer matrix."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out: List[int] = []
    top = 0
    while top < min(rows, cols):
        # find nonzero pivot with smallest absolute value
        piv = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] != 0 and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        again = False
        for i in range(top + 1, rows):
            q = m[i][top] // m[top][top]
            if q:
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
            if m[i][top]:
                again = True
        for j in range(top + 1, cols):
            q = m[top][j] // m[top][top]
            if q:
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                again = True
        if again:
            continue
        # ensure divisibility of the remaining block
        d = m[top][top]
        bad = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % d != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(top, cols):
                m[top][j] += m[bad][j]
            continue
        out.append(abs(d))
        top += 1
    return out


@dataclass
class AbelianizationResult:
    rank: int
    torsion: List[int]  # invariant factors >= 2, each dividing the next

    def describe(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "trivial"

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        return self.describe()


def abelianize(p: GroupPresentation) -> AbelianizationResult:
    """Abelianization via Smith normal form of the exponent-sum matrix."""
    n = p.generator_count
    if n == 0:
        return AbelianizationResult(0, [])
    if not p.relators:
        return AbelianizationResult(n, [])
    matrix = [w.exponent_sum(n) for w in p.relators]
    factors = smith_normal_form(matrix)
    rank = n - len(factors)
    torsion = [d for d in factors if d >= 2]
    return AbelianizationResult(rank, torsion)
