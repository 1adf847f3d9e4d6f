"""
Forgotten equivalence on permutations.

Two permutations are related when one is obtained from the other by rewriting
three consecutive letters acb <-> bac or bca <-> cab (a < b < c).  A class is
determined completely by the inversion number together with the relative
order of the letters 1 and n; each class contains a unique lexicographically
minimal word, reachable by pattern-avoidance arguments and parameterized by
two compact families sigma(k, a) and tau(k, a).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perms import (
    Perm,
    ParseError,
    avoids_pattern,
    check_permutation,
    inverse,
    inversion_number,
    is_lambda_shaped,
)

FORBIDDEN_PATTERNS: tuple[Perm, ...] = (
    (2, 1, 3),
    (3, 1, 2),
    (1, 3, 4, 5, 2),
    (3, 4, 5, 2, 1),
)

FAMILIES = ("sigma", "tau")


def inv_bounds(n: int, one_before_n: bool) -> tuple[int, int]:
    """Inversion range available to a class of the given sign."""
    if one_before_n:
        return 0, (n - 1) * (n - 2) // 2
    return n - 1, n * (n - 1) // 2


@dataclass(frozen=True)
class ClassKey:
    """Complete invariant of a forgotten class: size, inversion count, and
    whether letter 1 precedes letter n."""

    n: int
    inv: int
    one_before_n: bool

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"class keys need n >= 2, got n={self.n}")
        lo, hi = inv_bounds(self.n, self.one_before_n)
        if not lo <= self.inv <= hi:
            sign = "1n" if self.one_before_n else "n1"
            raise ValueError(
                f"inversion count {self.inv} outside [{lo}, {hi}] for sign {sign} at n={self.n}"
            )

    def __str__(self) -> str:
        return f"{self.n},{self.inv},{'1n' if self.one_before_n else 'n1'}"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "inv": self.inv, "oneBeforeN": self.one_before_n}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClassKey":
        return cls(int(data["n"]), int(data["inv"]), bool(data["oneBeforeN"]))


def parse_class_key(text: str) -> ClassKey:
    """Read a key from its "n,inv,1n" / "n,inv,n1" text form."""
    fields = text.strip().split(",")
    if len(fields) != 3 or fields[2] not in ("1n", "n1"):
        raise ParseError(f"cannot read class key from {text!r} (want e.g. 8,10,n1)")
    try:
        n, inv = int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise ParseError(f"cannot read class key from {text!r}") from exc
    return ClassKey(n, inv, fields[2] == "1n")


def elementary_moves(p: Sequence[int]) -> set[Perm]:
    """
    All rewrites of one three-letter window, in either direction.

    >>> sorted(elementary_moves((1, 3, 2)))
    [(2, 1, 3)]
    >>> elementary_moves((1, 2, 3))
    set()
    """
    p = tuple(p)
    moves: set[Perm] = set()
    for i in range(len(p) - 2):
        x, y, z = p[i], p[i + 1], p[i + 2]
        if x < z < y:  # acb -> bac
            window = (z, x, y)
        elif y < x < z:  # bac -> acb
            window = (y, z, x)
        elif z < x < y:  # bca -> cab
            window = (y, z, x)
        elif y < z < x:  # cab -> bca
            window = (z, x, y)
        else:
            continue
        moves.add(p[:i] + window + p[i + 3:])
    return moves


def class_closure(p: Sequence[int]) -> set[Perm]:
    """The full forgotten class of p, by breadth-first search."""
    start = tuple(p)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for q in elementary_moves(current):
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def class_key(p: Sequence[int]) -> ClassKey:
    """The invariant triple of p's class."""
    p = tuple(p)
    n = len(p)
    if n < 2:
        raise ValueError("class keys need permutations of size >= 2")
    return ClassKey(n, inversion_number(p), p.index(1) < p.index(n))


def equivalent(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff p and q lie in the same forgotten class (same key)."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return class_key(p) == class_key(q)


@dataclass(frozen=True)
class CanonicalForm:
    """
    Compact parameterization of a canonical word.

    sigma(k, a) is 1, 2, .., k, a, n and tau(k, a) is 2, 3, .., k, a, n, each
    followed by the remaining letters in decreasing order; a == n collapses
    onto the previous prefix, so (k, n) is identified with (k-1, k) on
    construction and only (1, n) survives as a primitive point.
    """

    family: str
    k: int
    a: int
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError(f"canonical forms need n >= 2, got n={self.n}")
        k, a, n = self.k, self.a, self.n
        if a == n and 2 <= k <= n - 1:
            k, a = k - 1, k
        elif (k, a) == (0, 1):
            k, a = 1, n
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        normalized = (1 <= k <= n - 2 and k < a <= n - 1) or (k, a) == (1, n)
        if not normalized:
            raise ValueError(f"parameters (k={k}, a={a}) outside the domain for n={n}")

    def __str__(self) -> str:
        return f"{self.family}({self.k},{self.a};n={self.n})"


def normalized_forms(n: int, family: str) -> Iterator[CanonicalForm]:
    """The full normalized domain of one family, C(n-1, 2) + 1 forms."""
    for k in range(1, n - 1):
        for a in range(k + 1, n):
            yield CanonicalForm(family, k, a, n)
    yield CanonicalForm(family, 1, n, n)


def canonical_word(form: CanonicalForm) -> Perm:
    """
    The permutation named by a canonical form.

    >>> canonical_word(CanonicalForm("sigma", 1, 3, 6))
    (1, 3, 6, 5, 4, 2)
    >>> canonical_word(CanonicalForm("tau", 1, 4, 5))
    (4, 5, 3, 2, 1)
    """
    n = form.n
    rising = list(range(1 if form.family == "sigma" else 2, form.k + 1))
    if form.a == n:
        rising.append(n)
    else:
        rising += [form.a, n]
    rest = sorted(set(range(1, n + 1)) - set(rising), reverse=True)
    return tuple(rising + rest)


def form_inversions(form: CanonicalForm) -> int:
    """Inversion count of the canonical word, in closed form."""
    base = math.comb(form.n - form.k, 2)
    if form.family == "sigma":
        return base + form.a - form.n
    return base + form.a - 1


def form_from_inversions(family: str, inv: int, n: int) -> CanonicalForm:
    """
    The unique form of the family with the given inversion count; inverse of
    form_inversions on the normalized domain.

    >>> str(form_from_inversions("sigma", 13, 7))
    'sigma(1,5;n=7)'
    >>> str(form_from_inversions("tau", 13, 7))
    'tau(2,4;n=7)'
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    lo, hi = inv_bounds(n, family == "sigma")
    if not lo <= inv <= hi:
        raise ValueError(f"inversion count {inv} outside [{lo}, {hi}] for {family} at n={n}")
    if family == "sigma":
        # inv splits as C(m, 2) + b with 0 <= b < m against the largest
        # triangular number; the form is then (n - m - 1, n + b - m).
        m = 1
        while math.comb(m + 1, 2) <= inv:
            m += 1
        b = inv - math.comb(m, 2)
        return CanonicalForm("sigma", n - m - 1, n + b - m, n)
    # tau ranges tile differently: for each m = n - k the reachable counts
    # are C(m, 2) + n - m .. C(m, 2) + n - 2, plus the decreasing word on top.
    if inv == math.comb(n, 2):
        return CanonicalForm("tau", 1, n, n)
    for m in range(2, n):
        base = math.comb(m, 2)
        if base + n - m <= inv <= base + n - 2:
            return CanonicalForm("tau", n - m, inv - base + 1, n)
    raise AssertionError(f"no tau form for inv={inv}, n={n}")


def sign_family(one_before_n: bool) -> str:
    return "sigma" if one_before_n else "tau"


def form_of_key(key: ClassKey) -> CanonicalForm:
    return form_from_inversions(sign_family(key.one_before_n), key.inv, key.n)


def canonical_of_key(key: ClassKey) -> Perm:
    """The canonical (lexicographically minimal) word of the keyed class."""
    return canonical_word(form_of_key(key))


def canonical_of(p: Sequence[int]) -> Perm:
    """
    The canonical word of p's forgotten class.

    >>> canonical_of((3, 1, 4, 2))
    (1, 4, 3, 2)
    >>> canonical_of((2, 4, 1, 3))
    (2, 3, 4, 1)
    """
    return canonical_of_key(class_key(p))


def is_canonical(p: Sequence[int]) -> bool:
    """True iff p avoids 213, 312, 13452, and 34521."""
    return all(avoids_pattern(p, pattern) for pattern in FORBIDDEN_PATTERNS)


def lex_enumerate(n: int) -> list[Perm]:
    """
    All canonical words of size n in lexicographic order; there are
    n^2 - 3n + 4 of them for n >= 2.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if n == 1:
        return [(1,)]
    words = [canonical_word(form) for family in FAMILIES for form in normalized_forms(n, family)]
    return sorted(words)


def classes_count(n: int) -> int:
    """Number of forgotten classes of size-n permutations."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    return n * n - 3 * n + 4


def all_class_keys(n: int) -> list[ClassKey]:
    """Every key at size n, ordered by inversion count with 1-before-n first."""
    keys = [ClassKey(n, i, True) for i in range(inv_bounds(n, True)[1] + 1)]
    keys += [ClassKey(n, i, False) for i in range(n - 1, inv_bounds(n, False)[1] + 1)]
    return sorted(keys, key=lambda k: (k.inv, not k.one_before_n))


def insert(w: Sequence[int], i: int) -> Perm:
    """
    Insert letter i (0 <= i <= n-1) into a canonical word of size n-1,
    producing the canonical word of size n whose class also contains the
    standardization of w with i appended.  The inversion count of the result
    is inv(w) + n - 1 - i; the family flips exactly for i = 0 out of sigma
    and i = n - 1 out of tau.

    >>> insert((1, 3, 6, 5, 4, 2), 0)
    (2, 4, 7, 6, 5, 3, 1)
    >>> insert((1, 3, 6, 5, 4, 2), 3)
    (1, 2, 7, 6, 5, 4, 3)
    """
    w = check_permutation(w)
    n = len(w) + 1
    if not is_canonical(w):
        raise ValueError(f"{w!r} is not a canonical word")
    if not 0 <= i <= n - 1:
        raise ValueError(f"inserted letter {i} outside 0..{n - 1}")
    from_sigma = len(w) == 1 or w.index(1) < w.index(len(w))
    if from_sigma:
        family = "tau" if i == 0 else "sigma"
    else:
        family = "sigma" if i == n - 1 else "tau"
    return canonical_word(form_from_inversions(family, inversion_number(w) + n - 1 - i, n))


def lambda_members(key: ClassKey) -> set[Perm]:
    """
    All lambda-shaped permutations in the keyed class.  A lambda word is
    fixed by the set of letters on its rising side (the peak n included),
    and its inversion count is C(n, 2) minus the sum of n - x over the
    rising letters x below n.
    """
    n = key.n
    deficit = math.comb(n, 2) - key.inv
    members: set[Perm] = set()
    for bits in range(1 << (n - 1)):
        rising = [x for x in range(1, n) if bits >> (x - 1) & 1]
        if (1 in rising) != key.one_before_n:
            continue
        if sum(n - x for x in rising) != deficit:
            continue
        rest = sorted(set(range(1, n)) - set(rising), reverse=True)
        members.add(tuple(rising) + (n,) + tuple(rest))
    return members


def v_members(key: ClassKey) -> set[Perm]:
    """
    All v-shaped permutations in the keyed class.  A v word is fixed by the
    set of letters on its falling side (the valley 1 included), and each
    falling letter x contributes x - 1 inversions.
    """
    n = key.n
    members: set[Perm] = set()
    for bits in range(1 << (n - 1)):
        falling = [x for x in range(2, n + 1) if bits >> (x - 2) & 1]
        if (n in falling) == key.one_before_n:
            continue
        if sum(x - 1 for x in falling) != key.inv:
            continue
        rest = sorted(set(range(2, n + 1)) - set(falling))
        members.add(tuple(sorted(falling, reverse=True)) + (1,) + tuple(rest))
    return members


def next_lambda_down(p: Sequence[int]) -> Perm | None:
    """
    One step of the lambda rewriting walk: a lexicographically smaller
    lambda-shaped permutation with the same key, or None when p is already
    canonical.  Pick the largest rising letter b whose predecessor is missing
    from the rising side and that is followed there by some c < n; if some
    letter d > c is missing from the rising side, trade the pair (b, d-1)
    for (b-1, d), otherwise lower b and drop n-1 from the rising side.

    >>> next_lambda_down((1, 3, 5, 6, 7, 8, 4, 2))
    (1, 3, 4, 6, 8, 7, 5, 2)
    >>> next_lambda_down((1, 2, 3, 8, 7, 6, 5, 4)) is None
    True
    """
    p = tuple(p)
    if not is_lambda_shaped(p):
        raise ValueError(f"{p!r} is not lambda-shaped")
    n = len(p)
    rising = set(p[: p.index(n) + 1])
    floor = 1 if 1 in rising else 2
    candidates = [
        b
        for b in rising
        if floor < b < n and b - 1 not in rising and any(b < c < n for c in rising)
    ]
    if not candidates:
        return None
    b = max(candidates)
    c = min(x for x in rising if b < x < n)
    d = next((x for x in range(c + 1, n) if x not in rising), None)
    rising.discard(b)
    rising.add(b - 1)
    if d is None:
        rising.discard(n - 1)
    else:
        rising.discard(d - 1)
        rising.add(d)
    rest = sorted(set(range(1, n + 1)) - rising, reverse=True)
    return tuple(sorted(rising) + rest)


def coforgotten_equivalent(p: Sequence[int], q: Sequence[int]) -> bool:
    """Forgotten equivalence of the inverse permutations."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return equivalent(inverse(p), inverse(q))
