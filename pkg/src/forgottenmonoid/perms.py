"""
Permutations, words, and compositions in one-line notation.

Conventions used throughout the package:

- A permutation of size n is a tuple containing each of 1..n exactly once,
  e.g. ``(3, 1, 4, 2)`` for the one-line word 3142.
- A word is any tuple of integers; repeated letters are allowed.
- A composition of n is a tuple of positive integers summing to n.
- Statistics use 1-based positions: descents of a length-n word live in
  1..n-1, and a composition of n corresponds to the subset of 1..n-1 formed
  by its partial sums.

Everything here is a pure function over immutable tuples.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]
Composition = tuple[int, ...]


class ParseError(ValueError):
    """A text form could not be read."""


def check_permutation(word: Sequence[int]) -> Perm:
    """Validate one-line notation (each of 1..n exactly once) and return a tuple."""
    p = tuple(word)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def check_word(letters: Sequence[int], alphabet: int) -> Word:
    """Validate a word over the ordered alphabet 1..alphabet and return a tuple."""
    if alphabet < 1:
        raise ValueError(f"alphabet size must be positive, got {alphabet}")
    w = tuple(letters)
    if any(not 1 <= x <= alphabet for x in w):
        raise ValueError(f"letters outside 1..{alphabet}: {w!r}")
    return w


def check_composition(parts: Sequence[int]) -> Composition:
    """Validate a composition (positive parts, nonempty) and return a tuple."""
    c = tuple(parts)
    if not c or any(x < 1 for x in c):
        raise ValueError(f"not a composition: {c!r}")
    return c


def inversion_number(word: Sequence[int]) -> int:
    """
    Number of pairs appearing in decreasing order of value.

    >>> inversion_number((4, 3, 2, 1))
    6
    >>> inversion_number((3, 1, 4, 2))
    3
    """
    count = 0
    for i, x in enumerate(word):
        for y in word[i + 1:]:
            if y < x:
                count += 1
    return count


def descent_set(word: Sequence[int]) -> set[int]:
    """Positions i (1-based) with word[i] > word[i+1]."""
    return {i for i in range(1, len(word)) if word[i - 1] > word[i]}


def composition_from_subset(subset: set[int], n: int) -> Composition:
    """
    The composition of n whose partial sums are the given subset of 1..n-1.

    >>> composition_from_subset({2}, 4)
    (2, 2)
    >>> composition_from_subset(set(), 4)
    (4,)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cuts = sorted(subset)
    if any(not 1 <= c <= n - 1 for c in cuts):
        raise ValueError(f"subset {subset!r} not contained in 1..{n - 1}")
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return tuple(parts)


def subset_from_composition(parts: Sequence[int]) -> set[int]:
    """Partial sums of a composition, excluding the total."""
    check_composition(parts)
    sums = itertools.accumulate(parts)
    return set(list(sums)[:-1])


def descent_composition(word: Sequence[int]) -> Composition:
    """Lengths of the maximal weakly increasing runs of the word."""
    return composition_from_subset(descent_set(word), len(word))


def recoil_composition(p: Sequence[int]) -> Composition:
    """Descent composition of the inverse permutation."""
    return descent_composition(inverse(p))


def major_index(word: Sequence[int]) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(word))


def composition_maj(parts: Sequence[int]) -> int:
    """
    Major index of a composition (c_1..c_l): sum of (l - i) * c_i.

    >>> composition_maj((1, 1, 1, 1, 4))
    10
    """
    check_composition(parts)
    length = len(parts)
    return sum((length - i) * c for i, c in enumerate(parts, 1))


def inverse(p: Sequence[int]) -> Perm:
    """
    Inverse permutation in one-line notation.

    >>> inverse((2, 3, 4, 1))
    (4, 1, 2, 3)
    """
    q = [0] * len(p)
    for pos, v in enumerate(p, 1):
        q[v - 1] = pos
    return tuple(q)


def reverse(word: Sequence[int]) -> Word:
    """The word read from right to left."""
    return tuple(reversed(word))


def complement(p: Sequence[int]) -> Perm:
    """Replace every letter x by n + 1 - x."""
    n = len(p)
    return tuple(n + 1 - x for x in p)


def schuetzenberger(p: Sequence[int]) -> Perm:
    """
    Schuetzenberger involution: reversal followed by complementation.

    >>> schuetzenberger((8, 4, 2, 9, 5, 6, 1, 3, 7))
    (3, 7, 9, 4, 5, 1, 8, 6, 2)
    """
    return complement(reverse(p))


def standardize(word: Sequence[int]) -> Perm:
    """
    The permutation with the same relative order as the word; equal letters
    are ranked left to right.

    >>> standardize((1, 2, 1))
    (1, 3, 2)
    >>> standardize((1, 3, 6, 5, 4, 2, 0))
    (2, 4, 7, 6, 5, 3, 1)
    """
    if not word:
        raise ValueError("cannot standardize the empty word")
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    result = [0] * len(word)
    for rank, i in enumerate(order, 1):
        result[i] = rank
    return tuple(result)


def is_lambda_shaped(p: Sequence[int]) -> bool:
    """True iff the word strictly increases to its maximum, then strictly
    decreases.  The peak may sit at either end."""
    peak = p.index(max(p))
    left_ok = all(p[i] < p[i + 1] for i in range(peak))
    right_ok = all(p[i] > p[i + 1] for i in range(peak, len(p) - 1))
    return left_ok and right_ok


def is_v_shaped(p: Sequence[int]) -> bool:
    """True iff the word strictly decreases to its minimum, then strictly
    increases.  The valley may sit at either end."""
    valley = p.index(min(p))
    left_ok = all(p[i] > p[i + 1] for i in range(valley))
    right_ok = all(p[i] < p[i + 1] for i in range(valley, len(p) - 1))
    return left_ok and right_ok


def avoids_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff no subsequence of p is order-isomorphic to the pattern.

    >>> avoids_pattern((1, 2, 4, 5, 3), (2, 1, 3))
    True
    >>> avoids_pattern((3, 1, 4, 2), (3, 1, 2))
    False
    """
    k = len(pattern)
    target = tuple(pattern)
    if k > len(p):
        return True
    for positions in itertools.combinations(range(len(p)), k):
        if standardize(tuple(p[i] for i in positions)) == target:
            return False
    return True


def all_permutations(n: int) -> Iterator[Perm]:
    """All permutations of 1..n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def all_compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n."""
    for r in range(n):
        for cuts in itertools.combinations(range(1, n), r):
            yield composition_from_subset(set(cuts), n)


def parse_permutation(text: str) -> Perm:
    """
    Read a permutation from text: either a comma list ("8,4,2,9,5,6,1,3,7")
    or, for n <= 9, a contiguous digit string ("3142").
    """
    text = text.strip()
    try:
        if "," in text:
            values = [int(field) for field in text.split(",")]
        elif text.isdigit():
            values = [int(ch) for ch in text]
        else:
            raise ValueError(text)
        return check_permutation(values)
    except ValueError as exc:
        raise ParseError(f"cannot read permutation from {text!r}") from exc


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def parse_composition(text: str) -> Composition:
    """Read a composition from its "(1,1,3)" text form."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"cannot read composition from {text!r}")
    try:
        return check_composition([int(f) for f in text[1:-1].split(",")])
    except ValueError as exc:
        raise ParseError(f"cannot read composition from {text!r}") from exc


def format_composition(parts: Sequence[int]) -> str:
    return "(" + ",".join(map(str, parts)) + ")"
