"""Poset layer: Galois adjoints against monotone-map enumeration,
reflection, lattice reports, DOT export."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doctrines.poset import (
    MonotoneMap,
    Poset,
    Preorder,
    lattice_check,
    left_adjoint_of,
    poset_reflect,
    right_adjoint_of,
    to_dot,
)


def chain(n):
    return Poset.from_le(list(range(n)), lambda a, b: a <= b)


def boolean(n_atoms):
    """Subsets of an n-element set ordered by inclusion, labels are masks."""
    masks = list(range(1 << n_atoms))
    return Poset.from_le(masks, lambda p, q: p & ~q == 0)


def all_monotone(src, dst):
    """Brute-force oracle: every monotone table src -> dst."""
    out = []
    table = [0] * src.n
    if src.n == 0:
        return [MonotoneMap(src, dst, ())]
    while True:
        if all(
            dst.le(table[i], table[j])
            for i in range(src.n)
            for j in range(src.n)
            if src.le(i, j)
        ):
            out.append(MonotoneMap(src, dst, tuple(table)))
        i = src.n - 1
        while i >= 0:
            table[i] += 1
            if table[i] < dst.n:
                break
            table[i] = 0
            i -= 1
        if i < 0:
            return out


def adjoints_by_enumeration(f, side):
    """All monotone g satisfying the adjunction; the oracle for both
    adjoint constructions."""
    found = []
    for g in all_monotone(f.dst, f.src):
        if side == "left":
            ok = all(
                f.src.le(g.table[q], p) == f.dst.le(q, f.table[p])
                for q in range(f.dst.n)
                for p in range(f.src.n)
            )
        else:
            ok = all(
                f.src.le(p, g.table[q]) == f.dst.le(f.table[p], q)
                for q in range(f.dst.n)
                for p in range(f.src.n)
            )
        if ok:
            found.append(g)
    return found


@st.composite
def small_posets(draw):
    n = draw(st.integers(1, 4))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=6,
        )
    )
    pre = Preorder.from_pairs(list(range(n)), pairs)
    p, _ = poset_reflect(pre)
    return p


class TestAdjoints:
    def test_identity_chain(self):
        p = chain(3)
        f = MonotoneMap(p, p, (0, 1, 2))
        assert left_adjoint_of(f).table == (0, 1, 2)
        assert right_adjoint_of(f).table == (0, 1, 2)

    def test_preimage_of_collapse(self):
        # carriers: subsets of a 2-set and of a 1-set; f = preimage along 2->1
        b1, b2 = boolean(1), boolean(2)
        # preimage of {} is {}, of {0} is {0,1}
        f = MonotoneMap(b1, b2, (0, 3))
        left = left_adjoint_of(f)
        right = right_adjoint_of(f)
        # direct image: nonempty iff mask nonempty
        assert left.table == tuple(0 if m == 0 else 1 for m in range(4))
        # all-fibers-inside: full iff mask is full
        assert right.table == tuple(1 if m == 3 else 0 for m in range(4))
        assert adjoints_by_enumeration(f, "left") == [left]
        assert adjoints_by_enumeration(f, "right") == [right]

    def test_constant_maps(self):
        # brute force decides: constant top has a left adjoint (constant
        # bottom) and no right adjoint; dually for constant bottom
        p = chain(2)
        top = MonotoneMap(p, p, (1, 1))
        left = left_adjoint_of(top)
        assert left.table == (0, 0)
        assert adjoints_by_enumeration(top, "left") == [left]
        assert right_adjoint_of(top) is None
        assert adjoints_by_enumeration(top, "right") == []
        bottom = MonotoneMap(p, p, (0, 0))
        right = right_adjoint_of(bottom)
        assert right.table == (1, 1)
        assert adjoints_by_enumeration(bottom, "right") == [right]
        assert left_adjoint_of(bottom) is None

    @settings(max_examples=150, deadline=None)
    @given(src=small_posets(), dst=small_posets(), data=st.data())
    def test_uniqueness_and_agreement(self, src, dst, data):
        maps = all_monotone(src, dst)
        f = data.draw(st.sampled_from(maps))
        for side, construct in (("left", left_adjoint_of), ("right", right_adjoint_of)):
            got = construct(f)
            want = adjoints_by_enumeration(f, side)
            if got is None:
                assert want == []
            else:
                assert want == [got]

    def test_composition_law(self):
        # both maps are preimages, so all adjoints exist
        b1, b2 = boolean(1), boolean(2)
        f = MonotoneMap(b1, b2, (0, 3))
        g = MonotoneMap(b2, b1, (0, 1, 0, 1))
        comp = g.compose(f)  # g after f : b1 -> b1
        ra = right_adjoint_of(comp)
        ra_split = right_adjoint_of(f).compose(right_adjoint_of(g))
        assert ra is not None
        assert ra.table == ra_split.table
        la = left_adjoint_of(comp)
        la_split = left_adjoint_of(f).compose(left_adjoint_of(g))
        assert la is not None
        assert la.table == la_split.table


class TestReflection:
    def test_poset_fixed(self):
        p = chain(3)
        q, proj = poset_reflect(p)
        assert q.n == 3
        assert proj.table == (0, 1, 2)

    def test_collapse(self):
        pre = Preorder.from_pairs(["x", "y"], [("x", "y"), ("y", "x")])
        q, proj = poset_reflect(pre)
        assert q.n == 1
        assert proj.table == (0, 0)

    @settings(max_examples=100, deadline=None)
    @given(
        n=st.integers(1, 5),
        pairs=st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8),
    )
    def test_idempotent(self, n, pairs):
        pairs = [(a % n, b % n) for a, b in pairs]
        pre = Preorder.from_pairs(list(range(n)), pairs)
        q1, proj = poset_reflect(pre)
        q2, proj2 = poset_reflect(q1)
        assert q2.n == q1.n
        assert proj2.table == tuple(range(q1.n))
        # projection is monotone and surjective by construction
        assert set(proj.table) == set(range(q1.n))


class TestLattice:
    def test_boolean(self):
        rep = lattice_check(boolean(2))
        assert rep.ok
        assert rep.top == 3 and rep.bottom == 0
        for (i, j), m in rep.meet.items():
            assert m == (i & j)
        for (i, j), v in rep.join.items():
            assert v == (i | j)

    def test_antichain(self):
        p = Poset.from_le([0, 1], lambda a, b: a == b)
        rep = lattice_check(p)
        assert not rep.has_top and not rep.has_bottom
        assert (0, 1, "meet") in rep.failures and (0, 1, "join") in rep.failures


class TestDot:
    def test_cover_edges_only(self):
        dot = to_dot(chain(3), name="c")
        assert "digraph c" in dot
        assert "v0 -> v1;" in dot and "v1 -> v2;" in dot
        assert "v0 -> v2" not in dot

    def test_preorder_reflected_first(self):
        pre = Preorder.from_pairs([0, 1], [(0, 1), (1, 0)])
        dot = to_dot(pre)
        assert dot.count("label=") == 1


class TestValidation:
    def test_not_transitive(self):
        with pytest.raises(ValueError):
            Preorder((0, 1, 2), (0b011, 0b110, 0b100))

    def test_not_antisymmetric(self):
        with pytest.raises(ValueError):
            Poset((0, 1), (0b11, 0b11))

    def test_not_monotone(self):
        with pytest.raises(ValueError):
            MonotoneMap(chain(2), chain(2), (1, 0))
