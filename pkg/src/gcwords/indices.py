"""Ascending/descending chains, indices, contractions and extensions.

Every word poset of the longest element contains a unique chain reading the
letters n..1 column-wise (the descending chain) and a unique chain reading
1..n (the ascending chain); they share exactly one element.  The chains are
located twice, by direct column search and via the wiring diagram of a word
of the class; a mismatch means an internal bug and raises immediately.

Removing a chain and shifting one side's columns gives a word poset one rank
lower (contraction).  Extensions re-insert a chain over a chosen ideal and
invert contractions up to isomorphism.  Iterating contractions along a
letter sequence delta over {A, D} yields the delta-index vector.
"""

from __future__ import annotations

from itertools import product

from .word_poset import (
    WordPoset,
    canonical_form,
    from_relations,
    is_ideal,
    lexmin_extension,
    poset_of_word,
    word_of_extension,
)
from .wiring import chains_from_wires
from .words import DomainError, Word, longest_element, perm_of_word


def _w0_rank(P: WordPoset) -> int:
    """Rank n with P expected in the family of the longest element of
    S_{n+1}: every column 1..n used and n(n+1)/2 elements in total.  (The
    per-column sizes are not invariant: 3-moves trade letters between
    columns.)  Full membership is certified by the chain search plus the
    wiring cross-check."""
    n = P.rank
    if P.size != n * (n + 1) // 2:
        raise DomainError(
            f"poset has {P.size} elements, not {n * (n + 1) // 2}: "
            f"not a longest-element word poset"
        )
    for col in range(1, n + 1):
        if col not in P.column_chains:
            raise DomainError(f"column {col} is empty")
    return n


def _find_chains(P: WordPoset, wanted_columns: list[int], limit: int) -> list[tuple[int, ...]]:
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(idx: int):
        if len(found) >= limit:
            return
        if idx == len(wanted_columns):
            found.append(tuple(prefix))
            return
        for cand in P.column_chains[wanted_columns[idx]]:
            if prefix and not P.less(prefix[-1], cand):
                continue
            prefix.append(cand)
            rec(idx + 1)
            prefix.pop()

    rec(0)
    return found


def _wire_chains(P: WordPoset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # independent derivation: read the chains off a wiring diagram of a word
    # of the class, mapping crossing rows back through the linear extension
    extension = lexmin_extension(P)
    a_rows, d_rows = chains_from_wires(word_of_extension(P, extension))
    ascending = tuple(extension[r - 1] for r in a_rows)
    descending = tuple(extension[r - 1] for r in d_rows)
    return ascending, descending


def _chain(P: WordPoset, which: str) -> tuple[int, ...]:
    n = _w0_rank(P)
    wanted = list(range(1, n + 1)) if which == "A" else list(range(n, 0, -1))
    chains = _find_chains(P, wanted, limit=2)
    if not chains:
        raise DomainError(f"no {which}-chain: poset not a longest-element word poset")
    if len(chains) > 1:
        raise DomainError(f"{which}-chain not unique: {chains[0]} and {chains[1]}")
    wire = _wire_chains(P)[0 if which == "A" else 1]
    if chains[0] != wire:
        raise RuntimeError(
            f"internal error: {which}-chain search gave {chains[0]} "
            f"but the wiring diagram gave {wire}"
        )
    return chains[0]


def descending_chain(P: WordPoset) -> tuple[int, ...]:
    """The unique chain d_1 < ... < d_n with d_i in column n+1-i.

    >>> from .words import standard_word
    >>> from .word_poset import poset_of_word
    >>> descending_chain(poset_of_word(standard_word(3)))
    (4, 5, 6)
    """
    return _chain(P, "D")


def ascending_chain(P: WordPoset) -> tuple[int, ...]:
    """The unique chain a_1 < ... < a_n with a_i in column i.

    >>> from .words import standard_word
    >>> from .word_poset import poset_of_word
    >>> ascending_chain(poset_of_word(standard_word(3)))
    (1, 2, 4)
    """
    return _chain(P, "A")


def _index_of_chain(P: WordPoset, chain: tuple[int, ...]) -> int:
    # elements strictly above a chain element within its column
    return sum(
        len(P.column_chains[P.columns[c - 1]]) - P.column_rank(c) for c in chain
    )


def ind_D(P: WordPoset) -> int:
    """Number of elements above the descending chain, column-wise."""
    return _index_of_chain(P, descending_chain(P))


def ind_A(P: WordPoset) -> int:
    """Number of elements above the ascending chain, column-wise."""
    return _index_of_chain(P, ascending_chain(P))


def _ideal_below_chain(P: WordPoset, chain: tuple[int, ...]) -> frozenset:
    members: set[int] = set()
    for c in chain:
        col_chain = P.column_chains[P.columns[c - 1]]
        members.update(col_chain[: col_chain.index(c)])
    ideal = frozenset(members)
    assert is_ideal(P, ideal), "contraction ideal must be downward closed"
    return ideal


def contraction_ideal_D(P: WordPoset) -> frozenset:
    """Elements below the descending chain within its columns."""
    return _ideal_below_chain(P, descending_chain(P))


def contraction_ideal_A(P: WordPoset) -> frozenset:
    """Elements below the ascending chain within its columns."""
    return _ideal_below_chain(P, ascending_chain(P))


def _contract(
    P: WordPoset, chain: tuple[int, ...], ideal: frozenset, shift_ideal: bool
) -> tuple[WordPoset, dict[int, int]]:
    # Work on a word of the class: drop the chain's rows and shift the
    # letters on one side.  Restricting the order of P itself would be wrong:
    # two kept elements may be related only through the removed chain, and
    # such relations do not survive (the wires are spliced past the removed
    # crossings).
    extension = lexmin_extension(P)
    letters = [P.columns[k - 1] for k in extension]
    removed = set(chain)
    relabel: dict[int, int] = {}
    new_letters = []
    for row, elem in enumerate(extension, start=1):
        if elem in removed:
            continue
        letter = letters[row - 1]
        shifted = letter - 1 if (elem in ideal) == shift_ideal else letter
        new_letters.append(shifted)
        relabel[elem] = len(new_letters)
    contracted = Word(P.rank - 1, tuple(new_letters))
    if perm_of_word(contracted) != longest_element(P.rank):
        raise RuntimeError(
            f"internal error: contraction of {word_of_extension(P, extension)} "
            f"gave {contracted}, not a word of the longest element"
        )
    return poset_of_word(contracted), relabel


def contract_D_with_map(P: WordPoset) -> tuple[WordPoset, dict[int, int]]:
    """D-contraction plus the old-to-new element relabeling."""
    return _contract(
        P, descending_chain(P), contraction_ideal_D(P), shift_ideal=False
    )


def contract_A_with_map(P: WordPoset) -> tuple[WordPoset, dict[int, int]]:
    """A-contraction plus the old-to-new element relabeling."""
    return _contract(
        P, ascending_chain(P), contraction_ideal_A(P), shift_ideal=True
    )


def contract_D(P: WordPoset) -> WordPoset:
    """Remove the descending chain; columns left of it stay, the part above
    shifts one column left.  Drops the rank by one."""
    return contract_D_with_map(P)[0]


def contract_A(P: WordPoset) -> WordPoset:
    """Remove the ascending chain; the part below it shifts one column left,
    the rest stays.  Drops the rank by one."""
    return contract_A_with_map(P)[0]


def _extend(P: WordPoset, ideal: frozenset, kind: str) -> WordPoset:
    if not ideal <= frozenset(range(1, P.size + 1)):
        raise DomainError(f"{set(ideal)} is not a subset of the ground set")
    if not is_ideal(P, ideal):
        raise DomainError(f"{sorted(ideal)} is not an ideal")
    new_rank = P.rank + 1
    s = P.size

    def old_column(k: int) -> int:
        col = P.columns[k - 1]
        if kind == "D":
            return col if k in ideal else col + 1
        return col + 1 if k in ideal else col

    def new_column(i: int) -> int:
        return new_rank + 1 - i if kind == "D" else i

    columns = tuple(old_column(k) for k in range(1, s + 1)) + tuple(
        new_column(i) for i in range(1, new_rank + 1)
    )
    relations: list[tuple[int, int]] = []
    for x, y in P.covers:
        if (x in ideal) == (y in ideal):
            relations.append((x, y))
    for i in range(1, new_rank):
        relations.append((s + i, s + i + 1))
    for col_chain in P.column_chains.values():
        inside = [k for k in col_chain if k in ideal]
        if inside:
            top = inside[-1]
            for i in range(1, new_rank + 1):
                if abs(old_column(top) - new_column(i)) == 1:
                    relations.append((top, s + i))
        if len(inside) < len(col_chain):
            bottom = col_chain[len(inside)]
            for i in range(1, new_rank + 1):
                if abs(new_column(i) - old_column(bottom)) == 1:
                    relations.append((s + i, bottom))
    return from_relations(columns, relations)


def extend_D(P: WordPoset, ideal: frozenset) -> WordPoset:
    """Insert a fresh descending chain over the given ideal: the ideal keeps
    its columns, everything else moves one column right.  Inverts the
    D-contraction: extend_D(contract_D(P), I_D(P)) is isomorphic to P."""
    return _extend(P, ideal, "D")


def extend_A(P: WordPoset, ideal: frozenset) -> WordPoset:
    """Insert a fresh ascending chain over the given ideal: the ideal moves
    one column right, everything else keeps its columns."""
    return _extend(P, ideal, "A")


def validate_delta(delta: str) -> str:
    for ch in delta:
        if ch not in "AD":
            raise DomainError(f"delta letter {ch!r} not in {{A, D}}")
    return delta


def delta_index(P: WordPoset, delta: str) -> tuple[int, ...]:
    """The index vector (I_1, ..., I_{n-1}): I_k is the delta_k-index after
    contracting P along delta_{k+1}, ..., delta_{n-1}, right to left.

    >>> from .words import standard_word
    >>> from .word_poset import poset_of_word
    >>> delta_index(poset_of_word(standard_word(3)), "DD")
    (0, 0)
    """
    validate_delta(delta)
    n = _w0_rank(P)
    if len(delta) != n - 1:
        raise DomainError(f"delta must have length {n - 1}, got {len(delta)}")
    out = [0] * (n - 1)
    Q = P
    for k in range(n - 1, 0, -1):
        if delta[k - 1] == "A":
            out[k - 1] = ind_A(Q)
            if k > 1:
                Q = contract_A(Q)
        else:
            out[k - 1] = ind_D(Q)
            if k > 1:
                Q = contract_D(Q)
    return tuple(out)


def full_profile(P: WordPoset) -> dict[str, tuple[int, ...]]:
    """All 2^(n-1) delta-indices, sharing each intermediate contraction
    across the deltas whose suffixes agree."""
    n = _w0_rank(P)
    if n == 1:
        return {"": ()}
    stage: dict[str, tuple[int, int]] = {}

    def descend(Q: WordPoset, suffix: str):
        stage[suffix] = (ind_A(Q), ind_D(Q))
        if len(suffix) < n - 2:
            descend(contract_A(Q), "A" + suffix)
            descend(contract_D(Q), "D" + suffix)

    descend(P, "")
    profile = {}
    for letters in product("AD", repeat=n - 1):
        delta = "".join(letters)
        profile[delta] = tuple(
            stage[delta[k:]][0 if delta[k - 1] == "A" else 1]
            for k in range(1, n)
        )
    return profile


def column_flip(P: WordPoset) -> WordPoset:
    """Relabel column i as rank+1-i.  Exchanges the ascending and descending
    chains, hence the two indices."""
    n = P.rank
    return canonical_form(
        WordPoset(tuple(n + 1 - col for col in P.columns), P.covers)
    )


def format_index_vector(vec: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in vec)
