"""Permutations of {1..n} in one-line notation, with the reflection and
Bruhat-order machinery of the symmetric group.

A permutation is a tuple ``(w(1), ..., w(n))`` of the values ``1..n``.  A
reflection (transposition) is a pair ``(i, j)`` of positions with
``1 <= i < j <= n``; as a permutation it swaps ``i`` and ``j`` and fixes
everything else.  Composition is ``compose(a, b)(i) == a(b(i))``, so
right-multiplying ``x`` by a reflection swaps two window entries of ``x``:

>>> right_multiply_reflection((2, 3, 1), (1, 2))
(3, 2, 1)

The textual window format is ``"2143"`` for n <= 9 and comma-separated
(``"2,1,4,3"``) otherwise; reflections print as ``"t(1,3)"``.
"""

from __future__ import annotations

import itertools
from bisect import insort
from functools import lru_cache
from typing import Iterator

from .errors import ParseError, WordError

Perm = tuple[int, ...]
Reflection = tuple[int, int]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_window(seq) -> bool:
    """True iff ``seq`` lists each of 1..len(seq) exactly once."""
    return sorted(seq) == list(range(1, len(seq) + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """All elements of the rank-n symmetric group, in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """Parse ``"2143"`` (n <= 9) or ``"2,1,4,3"`` into a window tuple.

    >>> parse_perm("2143")
    (2, 1, 4, 3)
    """
    text = text.strip()
    try:
        if "," in text:
            window = tuple(int(part) for part in text.split(","))
        else:
            window = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise ParseError(f"bad permutation {text!r}") from exc
    if not window or not is_window(window):
        raise ParseError(f"not a permutation window: {text!r}")
    return window


def format_perm(w: Perm) -> str:
    if len(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def parse_reflection(text: str) -> Reflection:
    """Parse ``"t(1,3)"`` into the position pair (1, 3)."""
    text = text.strip()
    if not (text.startswith("t(") and text.endswith(")")):
        raise ParseError(f"bad reflection {text!r}")
    try:
        i, j = (int(part) for part in text[2:-1].split(","))
    except ValueError as exc:
        raise ParseError(f"bad reflection {text!r}") from exc
    if not 1 <= i < j:
        raise ParseError(f"bad reflection {text!r}")
    return (i, j)


def format_reflection(t: Reflection) -> str:
    return f"t({t[0]},{t[1]})"


def compose(a: Perm, b: Perm) -> Perm:
    """Product acting as ``(a b)(i) = a(b(i))``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    return tuple(a[i - 1] for i in b)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w: Perm) -> int:
    """Coxeter length = number of inversions of the window."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def longest_element(n: int) -> Perm:
    """The order-reversing window (n, n-1, ..., 1)."""
    return tuple(range(n, 0, -1))


def reflections(n: int) -> list[Reflection]:
    """All n(n-1)/2 transpositions, ordered lexicographically."""
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def simple_reflection(n: int, i: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_multiply_reflection(x: Perm, t: Reflection) -> Perm:
    """``x * t``: the window of x with positions t = (i, j) swapped."""
    i, j = t
    if j > len(x):
        raise ValueError(f"reflection {t} out of range for rank {len(x)}")
    w = list(x)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def right_multiply_simple(x: Perm, i: int) -> Perm:
    """``x * s_i`` (adjacent transposition at positions i, i+1)."""
    w = list(x)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_descents(w: Perm) -> list[int]:
    """Indices i with w(i) > w(i+1), i.e. length(w * s_i) < length(w)."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


@lru_cache(maxsize=1 << 20)
def bruhat_leq(x: Perm, y: Perm) -> bool:
    """Bruhat comparison by the dot criterion: every sorted k-prefix of x
    is entrywise dominated by the sorted k-prefix of y.

    >>> bruhat_leq((1, 3, 2), (3, 1, 2))
    True
    >>> bruhat_leq((2, 1, 3), (1, 3, 2))
    False
    """
    if len(x) != len(y):
        raise ValueError(f"rank mismatch: {len(x)} vs {len(y)}")
    if x == y:
        return True
    xs: list[int] = []
    ys: list[int] = []
    for k in range(len(x) - 1):
        insort(xs, x[k])
        insort(ys, y[k])
        if any(a > b for a, b in zip(xs, ys)):
            return False
    return True


def incomparable(x: Perm, y: Perm) -> bool:
    return not bruhat_leq(x, y) and not bruhat_leq(y, x)


def transposition_link(x: Perm, y: Perm) -> Reflection | None:
    """The reflection t with ``y == x * t``, or None if the windows do not
    differ in exactly two (swapped) positions."""
    diff = [i for i, (a, b) in enumerate(zip(x, y), start=1) if a != b]
    if len(diff) != 2:
        return None
    i, j = diff
    if x[i - 1] == y[j - 1] and x[j - 1] == y[i - 1]:
        return (i, j)
    return None


def direct_sum(a: Perm, b: Perm) -> Perm:
    """Block sum: acts as ``a`` on 1..len(a) and as ``b`` shifted above it.

    >>> direct_sum((2, 1), (2, 1))
    (2, 1, 4, 3)
    """
    k = len(a)
    return a + tuple(val + k for val in b)


def split_direct_sum(x: Perm, n1: int) -> tuple[Perm, Perm] | None:
    """Inverse of :func:`direct_sum` when x preserves the block {1..n1}."""
    left = x[:n1]
    if sorted(left) != list(range(1, n1 + 1)):
        return None
    return left, tuple(val - n1 for val in x[n1:])


def root(t: Reflection, n: int) -> tuple[int, ...]:
    """The integer vector e_i - e_j attached to the reflection (i, j)."""
    vec = [0] * n
    vec[t[0] - 1] = 1
    vec[t[1] - 1] = -1
    return tuple(vec)


def from_word(n: int, word) -> Perm:
    """Product of the simple generators listed in ``word``."""
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise WordError(f"generator index {i} out of range for rank {n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_reduced_word(n: int, word) -> bool:
    """True iff the length of the product grows by one per letter."""
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            return False
        if w[i - 1] > w[i]:
            return False
        w[i - 1], w[i] = w[i], w[i - 1]
    return True


def conjugate_by_longest(w: Perm) -> Perm:
    """``w0 * w * w0``, the flip i -> n+1-i on positions and values."""
    n = len(w)
    return tuple(n + 1 - w[n - pos] for pos in range(1, n + 1))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
