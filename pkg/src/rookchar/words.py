"""Words in the generators s_i = (i i+1) and the idempotent e{1}.

A word is a tuple of letters; the letter ``i >= 1`` stands for the adjacent
transposition s_i and ``EPS1 == 0`` stands for e{1}.  Words multiply left to
right, with the rightmost letter applied first (semigroup product order).

The encoder is not length-minimizing: it factors r = s * e{A}, writes s by
bubble-sorting its one-line form into adjacent transpositions, and writes
each e{k} as the conjugate (1 k) e{1} (1 k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import PartialBijection, compose, idempotent, transposition

EPS1 = 0
Word = tuple[int, ...]


def S(i: int) -> int:
    """The letter for the adjacent transposition (i i+1)."""
    if i < 1:
        raise ValueError("generator index must be >= 1")
    return i


def letter_element(letter: int) -> PartialBijection:
    if letter == EPS1:
        return idempotent((1,))
    return transposition(letter, letter + 1)


def word_to_element(word: Word) -> PartialBijection:
    out = PartialBijection.identity()
    for letter in word:
        out = compose(out, letter_element(letter))
    return out


def _permutation_word(images: list[int]) -> list[int]:
    # Bubble-sort the one-line form; each position swap j is a right factor
    # s_j, so the sorted run reads back reversed as a left-to-right word.
    line = list(images)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for j in range(1, len(line)):
            if line[j - 1] > line[j]:
                line[j - 1], line[j] = line[j], line[j - 1]
                swaps.append(j)
                changed = True
    return swaps[::-1]


def _transposition_word(k: int) -> list[int]:
    # (1 k) = s_1 s_2 ... s_{k-2} s_{k-1} s_{k-2} ... s_1
    if k == 1:
        return []
    return list(range(1, k - 1)) + [k - 1] + list(range(k - 2, 0, -1))


def element_to_word(r: PartialBijection) -> Word:
    """A word evaluating back to r (word_to_element round-trips exactly).

    >>> element_to_word(idempotent((1,)))
    (0,)
    """
    n = r.bound
    kills = r.domain_gaps()
    free = iter(r.range_gaps())
    one_line = [r.images[x - 1] if r.images[x - 1] is not None else next(free) for x in range(1, n + 1)]
    word = _permutation_word(one_line)  # type: ignore[arg-type]
    for k in kills:
        conj = _transposition_word(k)
        word += conj + [EPS1] + conj
    return tuple(word)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking the defining relations up to a generator index."""

    max_index: int
    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_popova_relations(n: int) -> RelationReport:
    """Check the five relation families for generator indices <= n.

    Families: s_i^2 = e; far commutation; braid; e{1}^2 = e{1}; and the two
    mixed identities e{1} s_1 e{1} s_1 = s_1 e{1} s_1 e{1} = e{1} s_1 e{1}.
    """
    checked = 0
    violations: list[str] = []

    def expect(label: str, lhs: Word, rhs: Word):
        nonlocal checked
        checked += 1
        if word_to_element(lhs) != word_to_element(rhs):
            violations.append(f"{label}: {lhs} != {rhs}")

    for i in range(1, n + 1):
        expect(f"involution s_{i}", (i, i), ())
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            expect(f"commutation s_{i} s_{j}", (i, j), (j, i))
    for i in range(1, n):
        expect(f"braid s_{i} s_{i + 1}", (i, i + 1, i), (i + 1, i, i + 1))
    expect("idempotent e1", (EPS1, EPS1), (EPS1,))
    expect("mixed e1 s1 e1 s1", (EPS1, 1, EPS1, 1), (1, EPS1, 1, EPS1))
    expect("mixed e1 s1 e1", (EPS1, 1, EPS1, 1), (EPS1, 1, EPS1))
    return RelationReport(n, checked, tuple(violations))
