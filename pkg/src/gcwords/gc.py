"""Gelfand-Cetlin type classification and exact counting.

A word poset of the longest element is GC-type when some letter sequence
delta drives every stage index to zero; for rank >= 2 at most one of the two
stage indices vanishes, so a greedy scan classifies and the GC classes
biject with the 2^(n-1) sequences.  The number gc(n) of GC-type reduced
words is computed two independent ways: a recurrence weighted by shifted
standard Young tableau counts, and a direct sum of linear-extension counts
over the 2^(n-1) canonical posets.  All arithmetic is exact integers.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator

from .indices import contract_A, contract_D, extend_A, extend_D, ind_A, ind_D, validate_delta
from .word_poset import (
    WordPoset,
    canonical_form,
    count_linear_extensions,
    words_of_class,
)
from .words import DomainError, Word


class BudgetExceeded(DomainError):
    """A brute-force route was asked to run beyond its configured budget."""


def default_budget() -> int:
    """Largest rank brute-force routes accept by default (env GCWORDS_BUDGET)."""
    return int(os.environ.get("GCWORDS_BUDGET", "5"))


def classify_gc(P: WordPoset) -> str | None:
    """The unique delta with an all-zero index vector, or None.

    Greedy from the top rank: at each stage at most one of the two indices
    is zero (the top elements would otherwise have to form two opposite
    chains), so take it and contract, or fail.

    >>> from .words import standard_word
    >>> from .word_poset import poset_of_word
    >>> classify_gc(poset_of_word(standard_word(3)))
    'DD'
    """
    letters = []
    Q = P
    for rank in range(P.rank, 1, -1):
        a, d = ind_A(Q), ind_D(Q)
        assert not (a == 0 and d == 0), "both indices vanish above rank 1"
        if a == 0:
            letters.append("A")
            Q = contract_A(Q) if rank > 2 else Q
        elif d == 0:
            letters.append("D")
            Q = contract_D(Q) if rank > 2 else Q
        else:
            return None
    return "".join(reversed(letters))


def gc_poset_of_delta(delta: str) -> WordPoset:
    """The canonical GC-type word poset classified by delta: start from the
    single element and extend over the full ideal, one letter at a time.

    >>> classify_gc(gc_poset_of_delta("AD"))
    'AD'
    """
    validate_delta(delta)
    P = WordPoset((1,), ())
    for letter in delta:
        full = frozenset(range(1, P.size + 1))
        P = extend_A(P, full) if letter == "A" else extend_D(P, full)
    return canonical_form(P)


StrictPartition = tuple


def validate_strict(mu) -> tuple[int, ...]:
    mu = tuple(mu)
    if not mu or any(part < 1 for part in mu):
        raise DomainError(f"parts must be positive: {mu}")
    if any(a <= b for a, b in zip(mu, mu[1:])):
        raise DomainError(f"partition {mu} is not strictly decreasing")
    return mu


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse "4,3,1" into a validated strict partition."""
    try:
        parts = tuple(int(p) for p in text.strip().split(","))
    except ValueError:
        raise DomainError(f"malformed partition string {text!r}") from None
    return validate_strict(parts)


def thrall_g(mu) -> int:
    """Number of standard Young tableaux of shifted shape mu, by the product
    formula |mu|!/(mu_1!...mu_t!) * prod_{i<j} (mu_i-mu_j)/(mu_i+mu_j),
    evaluated as one exact division.

    >>> thrall_g((3, 2, 1))
    2
    >>> thrall_g((4, 3))
    5
    """
    mu = validate_strict(mu)
    t = len(mu)
    numerator = factorial(sum(mu)) * prod(
        mu[i] - mu[j] for i in range(t) for j in range(i + 1, t)
    )
    denominator = prod(factorial(part) for part in mu) * prod(
        mu[i] + mu[j] for i in range(t) for j in range(i + 1, t)
    )
    count, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"product formula not integral at {mu}"
    return count


def shifted_poset(mu) -> WordPoset:
    """The poset of the shifted diagram of mu under componentwise order,
    with cell (i, j) in column j-i+1 (the diagonals, so covering moves are
    one column apart and each diagonal is a chain)."""
    mu = validate_strict(mu)
    cells = [
        (i, j)
        for i in range(1, len(mu) + 1)
        for j in range(i, mu[i - 1] + i)
    ]
    label = {cell: k for k, cell in enumerate(cells, start=1)}
    columns = tuple(j - i + 1 for i, j in cells)
    covers = []
    for (i, j), k in label.items():
        if (i, j + 1) in label:
            covers.append((k, label[(i, j + 1)]))
        if (i + 1, j) in label:
            covers.append((k, label[(i + 1, j)]))
    return WordPoset(columns, tuple(covers))


def syt_count_oracle(mu) -> int:
    """Shifted tableau count by linear-extension enumeration of the diagram
    poset; independent of the product formula.

    >>> syt_count_oracle((4, 3, 2, 1))
    12
    """
    return count_linear_extensions(shifted_poset(mu))


def strict_partitions(total: int) -> Iterator[tuple[int, ...]]:
    """All strict partitions of total, largest part first, lexicographically
    decreasing."""

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part - 1, prefix + (part,))

    if total < 0:
        raise DomainError("total must be nonnegative")
    yield from rec(total, total, ())


@lru_cache(maxsize=None)
def gc_recurrence(n: int) -> int:
    """gc(n) by the recurrence over the length of the staircase strip added
    on top: gc(0) = gc(1) = 1 and

        gc(n) = sum_{i=1..n} g^(n, n-1, ..., n-i+1) * gc(n-i).

    >>> gc_recurrence(4)
    40
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n <= 1:
        return 1
    return sum(
        thrall_g(tuple(range(n, n - i, -1))) * gc_recurrence(n - i)
        for i in range(1, n + 1)
    )


def gc_direct(n: int) -> int:
    """gc(n) as the sum of linear-extension counts of the 2^(n-1) canonical
    GC posets; must agree with gc_recurrence.

    >>> gc_direct(5)
    916
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return 1  # the empty word is the single word of the identity
    return sum(
        count_linear_extensions(gc_poset_of_delta("".join(letters)))
        for letters in product("AD", repeat=n - 1)
    )


def enumerate_gc_words(n: int, budget: int | None = None) -> Iterator[Word]:
    """All GC-type reduced words, emitted class by class through the linear
    extensions of the 2^(n-1) canonical posets (never by filtering).

    Refuses n beyond the brute-force budget; pass budget=n to override.
    """
    if budget is None:
        budget = default_budget()
    if n > budget:
        raise BudgetExceeded(
            f"enumerating gc words at rank {n} exceeds the budget {budget}"
        )
    if n < 1:
        raise DomainError("rank must be positive")
    for letters in product("AD", repeat=n - 1):
        yield from words_of_class(gc_poset_of_delta("".join(letters)))


def gc_split(n: int) -> tuple[int, int]:
    """Extension counts split by which index vanishes at the top rank:
    (sum over classes with ind_A = 0, sum over classes with ind_D = 0).

    >>> gc_split(3)
    (3, 3)
    """
    if n < 2:
        raise DomainError("the split needs rank >= 2")
    a_total = 0
    d_total = 0
    for letters in product("AD", repeat=n - 1):
        count = count_linear_extensions(gc_poset_of_delta("".join(letters)))
        if letters[-1] == "A":
            a_total += count
        else:
            d_total += count
    return a_total, d_total


def gc_table(n_max: int, class_budget: int | None = None) -> list[dict]:
    """Rows {n, gc_recurrence, gc_direct, classes_gc, classes_total} for
    0 <= n <= n_max.  The class columns come from enumerating commutation
    classes and classifying each, so they are filled only up to the budget.
    """
    from .word_poset import enumerate_commutation_classes

    if class_budget is None:
        class_budget = default_budget()
    rows = []
    for n in range(n_max + 1):
        row = {
            "n": n,
            "gc_recurrence": gc_recurrence(n),
            "gc_direct": gc_direct(n),
            "classes_gc": None,
            "classes_total": None,
        }
        if n == 0:
            row["classes_gc"] = 1
            row["classes_total"] = 1
        elif n <= class_budget:
            total = 0
            gc_count = 0
            for P in enumerate_commutation_classes(n):
                total += 1
                if classify_gc(P) is not None:
                    gc_count += 1
            row["classes_gc"] = gc_count
            row["classes_total"] = total
        rows.append(row)
    return rows
