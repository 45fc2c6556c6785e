"""Finite preorders and posets: Galois adjoints, reflection, lattice checks.

Orders are stored as tuples of row bitmasks: ``rows[i]`` has bit j set
iff element i is below element j.  Completion fibers arrive here as
preorders; antisymmetry is only ever imposed by an explicit call to
:func:`poset_reflect`, which keeps "equality up to mutual order" a
first-class, testable notion.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Preorder:
    labels: tuple
    rows: tuple

    def __post_init__(self):
        n = len(self.labels)
        if len(self.rows) != n:
            raise ValueError("order matrix size disagrees with element count")
        full = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError("order matrix has bits outside the carrier")
            if not (row >> i) & 1:
                raise ValueError(f"not reflexive at {self.labels[i]!r}")
        for i in range(n):
            acc = self.rows[i]
            for j in range(n):
                if (self.rows[i] >> j) & 1:
                    acc |= self.rows[j]
            if acc != self.rows[i]:
                raise ValueError(f"not transitive at {self.labels[i]!r}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def le(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def op(self) -> "Preorder":
        n = self.n
        rows = tuple(
            sum(1 << j for j in range(n) if (self.rows[j] >> i) & 1) for i in range(n)
        )
        return type(self)(self.labels, rows)

    @classmethod
    def from_pairs(cls, labels, pairs):
        """Reflexive-transitive closure of the given covering pairs."""
        labels = tuple(labels)
        idx = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        rows = [1 << i for i in range(n)]
        for a, b in pairs:
            rows[idx[a]] |= 1 << idx[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = rows[i]
                for j in range(n):
                    if (rows[i] >> j) & 1:
                        acc |= rows[j]
                if acc != rows[i]:
                    rows[i] = acc
                    changed = True
        return cls(labels, tuple(rows))

    @classmethod
    def from_le(cls, labels, le):
        labels = tuple(labels)
        n = len(labels)
        rows = tuple(
            sum(1 << j for j in range(n) if le(labels[i], labels[j])) for i in range(n)
        )
        return cls(labels, rows)


@dataclass(frozen=True)
class Poset(Preorder):
    def __post_init__(self):
        super().__post_init__()
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.le(i, j) and self.le(j, i):
                    raise ValueError(
                        f"not antisymmetric: {self.labels[i]!r} ~ {self.labels[j]!r}"
                    )


@dataclass(frozen=True)
class MonotoneMap:
    src: Preorder
    dst: Preorder
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.src.n:
            raise ValueError("table length disagrees with source size")
        for i in range(self.src.n):
            for j in range(self.src.n):
                if self.src.le(i, j) and not self.dst.le(self.table[i], self.table[j]):
                    raise ValueError(f"not monotone at ({i},{j})")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def compose(self, other: "MonotoneMap") -> "MonotoneMap":
        """self after other."""
        if other.dst is not self.src and other.dst != self.src:
            raise ValueError("composition endpoints disagree")
        return MonotoneMap(other.src, self.dst, tuple(self.table[v] for v in other.table))


def _least(p: Preorder, members) -> int | None:
    """An element of `members` below all of them, if any (unique in a poset)."""
    for i in members:
        if all(p.le(i, j) for j in members):
            return i
    return None


def _greatest(p: Preorder, members) -> int | None:
    for i in members:
        if all(p.le(j, i) for j in members):
            return i
    return None


def left_adjoint_of(f: MonotoneMap) -> MonotoneMap | None:
    """The g with g(q) <= p iff q <= f(p), when it exists.

    g(q) must be the least element of {p : q <= f(p)}; absence of any
    such least element means absence of the adjoint.
    """
    src, dst = f.src, f.dst
    table = []
    for q in range(dst.n):
        cands = [p for p in range(src.n) if dst.le(q, f.table[p])]
        lo = _least(src, cands)
        if lo is None:
            return None
        table.append(lo)
    g = MonotoneMap(dst, src, tuple(table))
    for q in range(dst.n):
        for p in range(src.n):
            if src.le(g.table[q], p) != dst.le(q, f.table[p]):
                return None
    return g


def right_adjoint_of(f: MonotoneMap) -> MonotoneMap | None:
    """The g with f(p) <= q iff p <= g(q), when it exists."""
    src, dst = f.src, f.dst
    table = []
    for q in range(dst.n):
        cands = [p for p in range(src.n) if dst.le(f.table[p], q)]
        hi = _greatest(src, cands)
        if hi is None:
            return None
        table.append(hi)
    g = MonotoneMap(dst, src, tuple(table))
    for q in range(dst.n):
        for p in range(src.n):
            if src.le(p, g.table[q]) != dst.le(f.table[p], q):
                return None
    return g


def poset_reflect(p: Preorder) -> tuple[Poset, MonotoneMap]:
    """Quotient a preorder by mutual comparability.

    The canonical representative of a class is its least-index member;
    classes are ordered by their representatives' order, which is well
    defined.  Returns the quotient poset and the (surjective, monotone)
    projection onto it.
    """
    n = p.n
    rep = []
    for i in range(n):
        r = i
        for j in range(i):
            if p.le(i, j) and p.le(j, i):
                r = rep[j]
                break
        rep.append(r)
    reps = sorted(set(rep))
    pos = {r: k for k, r in enumerate(reps)}
    labels = tuple(p.labels[r] for r in reps)
    rows = tuple(
        sum(1 << pos[s] for s in reps if p.le(r, s)) for r in reps
    )
    quotient = Poset(labels, rows)
    table = tuple(pos[rep[i]] for i in range(n))
    return quotient, MonotoneMap(p, quotient, table)


@dataclass
class LatticeReport:
    has_top: bool
    has_bottom: bool
    top: int | None
    bottom: int | None
    meet: dict = field(default_factory=dict)
    join: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.has_top and self.has_bottom and not self.failures


def lattice_check(p: Poset) -> LatticeReport:
    """Existence of top, bottom and all binary meets/joins, with witnesses.

    Each found meet/join is certified against its universal property; a
    pair without one is recorded in `failures` as (i, j, kind).
    """
    n = p.n
    everything = range(n)
    top = _greatest(p, everything) if n else None
    bottom = _least(p, everything) if n else None
    report = LatticeReport(top is not None, bottom is not None, top, bottom)
    for i in range(n):
        for j in range(i, n):
            lbs = [k for k in range(n) if p.le(k, i) and p.le(k, j)]
            m = _greatest(p, lbs)
            if m is None:
                report.failures.append((i, j, "meet"))
            else:
                report.meet[(i, j)] = m
            ubs = [k for k in range(n) if p.le(i, k) and p.le(j, k)]
            v = _least(p, ubs)
            if v is None:
                report.failures.append((i, j, "join"))
            else:
                report.join[(i, j)] = v
    return report


def to_dot(p: Preorder, name: str = "poset") -> str:
    """Hasse diagram in DOT; preorders are reflected first."""
    if not isinstance(p, Poset):
        p, _ = poset_reflect(p)
    n = p.n
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(n):
        lines.append(f'  v{i} [label="{p.labels[i]}"];')
    for i in range(n):
        for j in range(n):
            if i == j or not p.le(i, j):
                continue
            if any(k != i and k != j and p.le(i, k) and p.le(k, j) for k in range(n)):
                continue
            lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
