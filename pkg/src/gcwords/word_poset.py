"""Word posets: a finite poset on {1..l} with a column function.

The poset of a reduced word relates two positions when their letters differ
by one; linear extensions of the poset read back exactly the words of the
commutation class.  Elements in one column always form a chain, which makes
two things cheap: a forced canonical relabeling (by column, then height in
the column) and ideal bookkeeping by per-column counts only.

Comparability is answered from bitmasks (one int per element), so the sizes
handled here (l <= 36 at rank 8) cost nothing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .words import DomainError, Word, apply_3move, is_reduced, standard_word


@dataclass(frozen=True)
class WordPoset:
    """Poset on elements 1..size; columns[k-1] is the column of element k.

    covers is the sorted tuple of covering pairs (x, y) with x covered by y.
    Every covering pair joins adjacent columns.
    """

    columns: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple(sorted(self.covers)))
        size = len(self.columns)
        for col in self.columns:
            if col < 1:
                raise DomainError(f"column {col} must be positive")
        for x, y in self.covers:
            if not (1 <= x <= size and 1 <= y <= size) or x == y:
                raise DomainError(f"cover ({x},{y}) outside ground set 1..{size}")
            if abs(self.columns[x - 1] - self.columns[y - 1]) != 1:
                raise DomainError(
                    f"cover ({x},{y}) joins non-adjacent columns "
                    f"{self.columns[x - 1]},{self.columns[y - 1]}"
                )

    @property
    def size(self) -> int:
        return len(self.columns)

    @property
    def rank(self) -> int:
        return max(self.columns, default=0)

    def column(self, k: int) -> int:
        return self.columns[k - 1]

    @cached_property
    def _upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups: list[list[int]] = [[] for _ in range(self.size)]
        for x, y in self.covers:
            ups[x - 1].append(y)
        return tuple(tuple(sorted(u)) for u in ups)

    @cached_property
    def _lower_covers(self) -> tuple[tuple[int, ...], ...]:
        downs: list[list[int]] = [[] for _ in range(self.size)]
        for x, y in self.covers:
            downs[y - 1].append(x)
        return tuple(tuple(sorted(d)) for d in downs)

    @cached_property
    def _topo_order(self) -> tuple[int, ...]:
        indegree = [len(self._lower_covers[k]) for k in range(self.size)]
        ready = deque(k for k in range(1, self.size + 1) if indegree[k - 1] == 0)
        order = []
        while ready:
            k = ready.popleft()
            order.append(k)
            for up in self._upper_covers[k - 1]:
                indegree[up - 1] -= 1
                if indegree[up - 1] == 0:
                    ready.append(up)
        if len(order) != self.size:
            raise DomainError("covering relation contains a cycle")
        return tuple(order)

    @cached_property
    def _up_masks(self) -> tuple[int, ...]:
        # up[k-1] has bit j-1 set iff k < j in the poset
        up = [0] * self.size
        for k in reversed(self._topo_order):
            mask = 0
            for j in self._upper_covers[k - 1]:
                mask |= up[j - 1] | (1 << (j - 1))
            up[k - 1] = mask
        return tuple(up)

    @cached_property
    def _down_masks(self) -> tuple[int, ...]:
        down = [0] * self.size
        for k in self._topo_order:
            mask = 0
            for j in self._lower_covers[k - 1]:
                mask |= down[j - 1] | (1 << (j - 1))
            down[k - 1] = mask
        return tuple(down)

    def less(self, x: int, y: int) -> bool:
        """Strict order: x < y in the poset."""
        return bool(self._up_masks[x - 1] >> (y - 1) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def elements_above(self, k: int) -> tuple[int, ...]:
        return _bits(self._up_masks[k - 1])

    def elements_below(self, k: int) -> tuple[int, ...]:
        return _bits(self._down_masks[k - 1])

    @cached_property
    def column_chains(self) -> dict[int, tuple[int, ...]]:
        """Elements of each column, bottom to top; raises unless chains."""
        groups: dict[int, list[int]] = {}
        for k in range(1, self.size + 1):
            groups.setdefault(self.columns[k - 1], []).append(k)
        chains = {}
        for col, members in sorted(groups.items()):
            members.sort(key=lambda k: bin(self._down_masks[k - 1]).count("1"))
            for a, b in zip(members, members[1:]):
                if not self.less(a, b):
                    raise DomainError(
                        f"column {col} is not a chain: {a} and {b} incomparable"
                    )
            chains[col] = tuple(members)
        return chains

    def column_rank(self, k: int) -> int:
        """1-based height of element k within its column chain."""
        return self.column_chains[self.columns[k - 1]].index(k) + 1


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def _covers_from_below(below: list[int]) -> list[tuple[int, int]]:
    """Covers of the order given by strict-downset bitmasks."""
    covers = []
    for y in range(1, len(below) + 1):
        mask = below[y - 1]
        for x in _bits(mask):
            # x is covered by y unless something in between lies below y
            if not any(below[m - 1] >> (x - 1) & 1 for m in _bits(mask)):
                covers.append((x, y))
    return covers


def from_relations(
    columns: Sequence[int], relations: Sequence[tuple[int, int]]
) -> WordPoset:
    """Build a WordPoset from generating relations (transitive closure, then
    the covers of the closure)."""
    size = len(columns)
    succ: list[list[int]] = [[] for _ in range(size)]
    indegree = [0] * size
    for x, y in relations:
        succ[x - 1].append(y)
        indegree[y - 1] += 1
    ready = deque(k for k in range(1, size + 1) if indegree[k - 1] == 0)
    below = [0] * size
    seen = 0
    while ready:
        k = ready.popleft()
        seen += 1
        push = below[k - 1] | (1 << (k - 1))
        for y in succ[k - 1]:
            below[y - 1] |= push
            indegree[y - 1] -= 1
            if indegree[y - 1] == 0:
                ready.append(y)
    if seen != size:
        raise DomainError("relations contain a cycle")
    return WordPoset(tuple(columns), tuple(_covers_from_below(below)))


def poset_of_word(w: Word) -> WordPoset:
    """The word poset of a reduced word: position j precedes position k when
    j < k and the letters at j, k differ by one.

    >>> poset_of_word(standard_word(2)).covers
    ((1, 2), (2, 3))
    """
    if not is_reduced(w):
        raise DomainError(f"word {w} is not reduced")
    letters = w.letters
    size = len(letters)
    below = [0] * size
    for k in range(size):
        mask = 0
        target = letters[k]
        for j in range(k):
            if abs(letters[j] - target) == 1:
                mask |= below[j] | (1 << j)
        below[k] = mask
    return WordPoset(tuple(letters), tuple(_covers_from_below(below)))


def canonical_form(P: WordPoset) -> WordPoset:
    """Relabel elements by (column, height in column); isomorphic word posets
    and only those get identical canonical forms, since any isomorphism must
    send the k-th element of a column chain to the k-th element of the same
    column chain.
    """
    order = [k for col in sorted(P.column_chains) for k in P.column_chains[col]]
    relabel = {old: new for new, old in enumerate(order, start=1)}
    columns = tuple(P.columns[old - 1] for old in order)
    covers = tuple((relabel[x], relabel[y]) for x, y in P.covers)
    return WordPoset(columns, covers)


def is_isomorphic(P: WordPoset, Q: WordPoset) -> bool:
    """Column-preserving poset isomorphism, decided via canonical forms."""
    return canonical_form(P) == canonical_form(Q)


def linear_extensions(P: WordPoset) -> Iterator[tuple[int, ...]]:
    """All linear extensions, in lexicographic order on element labels."""
    size = P.size
    down = P._down_masks
    full = (1 << size) - 1
    prefix: list[int] = []

    def rec(placed: int) -> Iterator[tuple[int, ...]]:
        if placed == full:
            yield tuple(prefix)
            return
        for k in range(1, size + 1):
            bit = 1 << (k - 1)
            if placed & bit or (down[k - 1] & ~placed):
                continue
            prefix.append(k)
            yield from rec(placed | bit)
            prefix.pop()

    return rec(0)


def _column_layout(P: WordPoset):
    """Chains listed by ascending column plus, per element, the (chain index,
    height) requirements imposed by its lower covers."""
    cols = sorted(P.column_chains)
    col_index = {col: i for i, col in enumerate(cols)}
    chains = [P.column_chains[col] for col in cols]
    requires: dict[int, tuple[tuple[int, int], ...]] = {}
    for k in range(1, P.size + 1):
        requires[k] = tuple(
            (col_index[P.columns[x - 1]], P.column_rank(x)) for x in P._lower_covers[k - 1]
        )
    return chains, requires


def count_linear_extensions(P: WordPoset) -> int:
    """Exact number of linear extensions.

    Dynamic program over ideals keyed by per-column counts; the key is
    lossless because an ideal meets each column chain in a prefix.

    >>> count_linear_extensions(poset_of_word(standard_word(3)))
    2
    """
    if P.size == 0:
        return 1
    chains, requires = _column_layout(P)
    ncols = len(chains)
    level: dict[tuple[int, ...], int] = {(0,) * ncols: 1}
    for _ in range(P.size):
        nxt: dict[tuple[int, ...], int] = {}
        for counts, ways in level.items():
            for ci in range(ncols):
                taken = counts[ci]
                if taken == len(chains[ci]):
                    continue
                elem = chains[ci][taken]
                if all(counts[rj] >= rh for rj, rh in requires[elem]):
                    key = counts[:ci] + (taken + 1,) + counts[ci + 1 :]
                    nxt[key] = nxt.get(key, 0) + ways
        level = nxt
    (total,) = level.values()
    return total


def ideals(P: WordPoset) -> Iterator[frozenset]:
    """All order ideals, smallest first, deterministically ordered."""
    chains, requires = _column_layout(P)
    ncols = len(chains)
    level = {(0,) * ncols}
    while level:
        for counts in sorted(level):
            yield frozenset(
                k for ci in range(ncols) for k in chains[ci][: counts[ci]]
            )
        nxt = set()
        for counts in level:
            for ci in range(ncols):
                taken = counts[ci]
                if taken == len(chains[ci]):
                    continue
                elem = chains[ci][taken]
                if all(counts[rj] >= rh for rj, rh in requires[elem]):
                    nxt.add(counts[:ci] + (taken + 1,) + counts[ci + 1 :])
        level = nxt


def ideal_from_counts(P: WordPoset, counts: Sequence[int]) -> frozenset:
    """The unique ideal holding counts[i-1] elements in column i, or an error
    naming a violated cover if those column prefixes are not downward closed.
    """
    cols = sorted(P.column_chains)
    if len(counts) != len(cols):
        raise DomainError(f"expected {len(cols)} column counts, got {len(counts)}")
    members: set[int] = set()
    for col, want in zip(cols, counts):
        chain = P.column_chains[col]
        if not 0 <= want <= len(chain):
            raise DomainError(f"column {col} holds {len(chain)} elements, not {want}")
        members.update(chain[:want])
    for x, y in P.covers:
        if y in members and x not in members:
            raise DomainError(f"not an ideal: cover {x}<{y} violated")
    return frozenset(members)


def is_ideal(P: WordPoset, members: frozenset) -> bool:
    return all(x in members for x, y in P.covers if y in members)


def top_elements(P: WordPoset) -> tuple[int, ...]:
    """The largest element of each column, listed for columns 1..rank."""
    chains = P.column_chains
    missing = [col for col in range(1, P.rank + 1) if col not in chains]
    if missing:
        raise DomainError(f"no elements in columns {missing}")
    return tuple(chains[col][-1] for col in range(1, P.rank + 1))


def _greedy_extension(P: WordPoset, pool: int, placed: int, key) -> list[int]:
    # repeatedly take the key-minimal addable element of the pool
    down = P._down_masks
    out = []
    remaining = pool
    while remaining:
        best = None
        for k in _bits(remaining):
            if down[k - 1] & ~placed:
                continue
            if best is None or key(k) < key(best):
                best = k
        if best is None:
            raise DomainError("subset is not an ideal of the poset")
        out.append(best)
        placed |= 1 << (best - 1)
        remaining &= ~(1 << (best - 1))
    return out


def lexmin_extension(P: WordPoset) -> tuple[int, ...]:
    """The linear extension whose column word is lexicographically least."""
    full = (1 << P.size) - 1
    return tuple(_greedy_extension(P, full, 0, key=lambda k: (P.columns[k - 1], k)))


def lexmin_word(P: WordPoset) -> Word:
    """Least word of the commutation class, in the letter order.

    >>> str(lexmin_word(poset_of_word(standard_word(3))))
    '1,2,1,3,2,1'
    """
    return Word(P.rank, tuple(P.columns[k - 1] for k in lexmin_extension(P)))


def word_of_extension(P: WordPoset, extension: Sequence[int]) -> Word:
    """Read off column labels along a linear extension."""
    return Word(P.rank, tuple(P.columns[k - 1] for k in extension))


def words_of_class(P: WordPoset) -> Iterator[Word]:
    """Every word of the commutation class of P, once each (the extensions
    biject with the words)."""
    for extension in linear_extensions(P):
        yield word_of_extension(P, extension)


def braid_triples(P: WordPoset) -> list[tuple[int, int, int]]:
    """Triples x < y < z with equal end columns, adjacent middle column and
    open interval (x, z) = {y}: exactly the sites where some word of the
    class admits a 3-move with these three positions adjacent."""
    up, down = P._up_masks, P._down_masks
    triples = []
    for y in range(1, P.size + 1):
        for x in P._lower_covers[y - 1]:
            for z in P._upper_covers[y - 1]:
                if P.columns[z - 1] != P.columns[x - 1]:
                    continue
                if up[x - 1] & down[z - 1] == 1 << (y - 1):
                    triples.append((x, y, z))
    triples.sort()
    return triples


def extension_through_triple(
    P: WordPoset, triple: tuple[int, int, int]
) -> tuple[int, ...]:
    """A linear extension placing the triple consecutively."""
    x, y, z = triple
    xyz = (1 << (x - 1)) | (1 << (y - 1)) | (1 << (z - 1))
    head_pool = P._down_masks[z - 1] & ~xyz
    head = _greedy_extension(P, head_pool, 0, key=lambda k: k)
    placed = head_pool | xyz
    tail_pool = ((1 << P.size) - 1) & ~placed
    tail = _greedy_extension(P, tail_pool, placed, key=lambda k: k)
    return tuple(head) + (x, y, z) + tuple(tail)


def class_3move_neighbors(P: WordPoset) -> list[WordPoset]:
    """Canonical posets of the classes one 3-move away, in triple order."""
    neighbors = []
    for triple in braid_triples(P):
        extension = extension_through_triple(P, triple)
        w = word_of_extension(P, extension)
        moved = apply_3move(w, extension.index(triple[0]) + 1)
        neighbors.append(canonical_form(poset_of_word(moved)))
    return neighbors


def enumerate_commutation_classes(n: int) -> Iterator[WordPoset]:
    """One canonical word poset per commutation class of the longest element,
    by breadth-first search over 3-move neighbors starting from the standard
    word.  Never materializes the words of a class.

    >>> sum(1 for _ in enumerate_commutation_classes(3))
    8
    """
    start = canonical_form(poset_of_word(standard_word(n)))
    seen = {start}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        yield P
        for neighbor in class_3move_neighbors(P):
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)


def render_dot(P: WordPoset, column_guides: bool = False) -> str:
    """Hasse diagram in DOT.  Node k is pinned at x = column; y grows with
    the longest chain below, so `neato -n` reproduces the usual picture.
    Optionally draws a dotted guide along each column.  Output is
    byte-stable for equal posets."""
    height = [0] * P.size
    for k in P._topo_order:
        below = P._lower_covers[k - 1]
        height[k - 1] = 1 + max((height[j - 1] for j in below), default=0)
    lines = ["digraph wordposet {", "  rankdir=BT;", "  node [shape=circle];"]
    for k in range(1, P.size + 1):
        lines.append(
            f'  n{k} [label="{k}", pos="{P.columns[k - 1]},{height[k - 1]}!"];'
        )
    for x, y in P.covers:
        lines.append(f"  n{x} -> n{y};")
    if column_guides:
        for col in sorted(P.column_chains):
            chain = P.column_chains[col]
            for a, b in zip(chain, chain[1:]):
                lines.append(
                    f"  n{a} -> n{b} [style=dotted, arrowhead=none, constraint=false];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
