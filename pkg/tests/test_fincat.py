"""Category layer: enumeration order, chosen structure, distributivity."""

import pytest

from doctrines.errors import LoadError, SearchBudgetExceeded
from doctrines.fincat import (
    Arrow,
    SkelFinSet,
    compose,
    load_category,
    nth_proj,
    prod_obj,
    reassoc_left,
    reassoc_right,
    skel_category_json,
)

C = SkelFinSet()


def tables(arrows):
    return [list(f.table) for f in arrows]


class TestHom:
    def test_two_points(self):
        assert tables(C.iter_hom(1, 2)) == [[0], [1]]

    def test_terminal(self):
        assert tables(C.iter_hom(2, 1)) == [[0, 0]]

    def test_initial(self):
        assert tables(C.iter_hom(0, 3)) == [[]]

    def test_empty_target(self):
        assert tables(C.iter_hom(2, 0)) == []

    def test_count_and_order(self):
        hom = list(C.iter_hom(2, 3))
        assert len(hom) == C.hom_size(2, 3) == 9
        assert tables(hom) == sorted(tables(hom))

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            C.enumerate_hom(4, 10, budget=100)
        with pytest.raises(SearchBudgetExceeded):
            list(C.iter_hom(2, 10, budget=5))
        # a consumer that stops early within budget is fine
        it = C.iter_hom(2, 10, budget=5)
        assert next(it).table == (0, 0)


class TestProducts:
    def test_pairing_diagonal(self):
        f = C.identity(2)
        assert C.pair(f, f).table == (0, 3)

    def test_pairing_unit(self):
        f = C.arrow(2, 1, [0, 0])
        assert C.pair(f, C.identity(2)).table == (0, 1)

    def test_pairing_row_major(self):
        # index(a, b) = a*|B| + b applied by hand
        f = C.arrow(2, 2, [1, 0])
        g = C.arrow(2, 2, [0, 0])
        expect = tuple(fv * 2 + gv for fv, gv in zip(f.table, g.table))
        assert expect == (2, 0)
        assert C.pair(f, g).table == expect

    def test_projection_laws(self):
        for a in range(3):
            for b in range(3):
                for f in C.iter_hom(2, a):
                    for g in C.iter_hom(2, b):
                        p = C.pair(f, g)
                        assert compose(C.proj1(a, b), p) == f
                        assert compose(C.proj2(a, b), p) == g

    def test_reassoc_identity_tables(self):
        # left-associated row-major flattening makes these identities
        assert reassoc_left(C, 2, 3, 2).table == tuple(range(12))
        assert reassoc_right(C, 2, 3, 2).table == tuple(range(12))

    def test_nth_proj(self):
        factors = [2, 3, 2]
        src = prod_obj(C, factors)
        assert src == 12
        for i, card in enumerate(factors):
            p = nth_proj(C, factors, i)
            assert p.dom == src and p.cod == card
        # decode (a,b,c) from the flat index
        p0, p1, p2 = (nth_proj(C, factors, i) for i in range(3))
        for a in range(2):
            for b in range(3):
                for c in range(2):
                    i = (a * 3 + b) * 2 + c
                    assert (p0.table[i], p1.table[i], p2.table[i]) == (a, b, c)


class TestCoproducts:
    def test_offsets(self):
        assert C.inj1(2, 3).table == (0, 1)
        assert C.inj2(2, 3).table == (2, 3, 4)

    def test_copair_laws(self):
        for f in C.iter_hom(2, 2):
            for g in C.iter_hom(1, 2):
                m = C.copair(f, g)
                assert compose(m, C.inj1(2, 1)) == f
                assert compose(m, C.inj2(2, 1)) == g


class TestTheta:
    def test_trivial(self):
        assert C.theta(1, 1, 1).table == (0, 1)

    def test_roundtrip(self):
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    t = C.theta(a, b, c)
                    ti = C.theta_inv(a, b, c)
                    n = a * b + a * c
                    assert compose(ti, t).table == tuple(range(n))
                    assert compose(t, ti).table == tuple(range(a * (b + c)))

    def test_empty_base(self):
        assert C.theta(0, 2, 3).table == ()

    def test_theta_left_is_identity_table(self):
        for a in range(3):
            for b in range(3):
                for d in range(3):
                    assert C.theta_left(a, b, d).table == tuple(range((a + b) * d))

    def test_naturality(self):
        # theta . ((f x 1) + (f x 1)) == (f x 1) . theta
        from doctrines.fincat import product_map

        b, c = 2, 1
        for d in range(3):
            for a in range(3):
                for f in C.iter_hom(d, a):
                    fb = product_map(C, f, C.identity(b))
                    fc = product_map(C, f, C.identity(c))
                    both = C.copair(
                        compose(C.inj1(a * b, a * c), fb),
                        compose(C.inj2(a * b, a * c), fc),
                    )
                    fbc = product_map(C, f, C.identity(b + c))
                    assert compose(C.theta(a, b, c), both) == compose(fbc, C.theta(d, b, c))


class TestExponentials:
    def test_transpose_of_projection_is_identity_point(self):
        a = 3
        f = C.proj2(1, a)  # 1 x A -> A
        h = C.transpose(f, 1, a)
        # rank of the identity tuple (0,1,..,a-1), position 0 most significant
        rank = 0
        for v in range(a):
            rank = rank * a + v
        assert h.table == (rank,)

    def test_constant_transpose_rank(self):
        f = C.arrow(2, 2, [0, 0])  # 1 x 2 -> 2 constant 0
        assert C.transpose(f, 1, 2).table == (0,)

    def test_roundtrip(self):
        for x in range(3):
            for a in range(3):
                for b in range(1, 3):
                    for f in C.iter_hom(x * a, b):
                        f = Arrow(x * a, b, f.table)
                        h = C.transpose(f, x, a)
                        assert C.untranspose(h, a, b).table == f.table

    def test_ev_agrees_with_transpose(self):
        from doctrines.fincat import product_map

        x, a, b = 2, 2, 2
        ev = C.ev(b, a)
        swap = C.pair(C.proj2(a, x), C.proj1(a, x))
        for f in C.iter_hom(x * a, b):
            h = C.transpose(f, x, a)
            lhs = compose(ev, product_map(C, C.identity(a), h))
            assert lhs == compose(f, swap)

    def test_ev_all_points(self):
        # every point of 2^2 evaluates to its own value tuple
        ev = C.ev(2, 2)
        for g in range(4):
            vals = tuple(ev.table[v * 4 + g] for v in range(2))
            assert vals == (g >> 1, g & 1)


class TestLoader:
    def test_skeleton_roundtrip(self):
        cat = load_category(skel_category_json(2))
        assert sorted(cat.objects()) == ["n0", "n1", "n2"]
        assert cat.hom_size("n2", "n2") == 4
        assert cat.terminal == "n1"
        p = cat.pair(cat.identity("n1"), cat.identity("n1"))
        assert p.cod == "n1"

    def test_missing_identity(self):
        data = {
            "objects": [{"id": "A", "card": 2}],
            "arrows": [{"id": "f", "dom": "A", "cod": "A", "table": [1, 0]}],
        }
        with pytest.raises(LoadError) as e:
            load_category(data)
        assert e.value.law == "identity-presence"

    def test_not_closed(self):
        data = {
            "objects": [{"id": "A", "card": 2}],
            "arrows": [
                {"id": "id", "dom": "A", "cod": "A", "table": [0, 1]},
                {"id": "s", "dom": "A", "cod": "A", "table": [1, 0]},
                {"id": "c", "dom": "A", "cod": "A", "table": [0, 0]},
            ],
        }
        # s.c = constant 1 is undeclared
        with pytest.raises(LoadError) as e:
            load_category(data)
        assert e.value.law == "composition-closure"

    def test_bad_composition_table(self):
        data = {
            "objects": [{"id": "A", "card": 1}],
            "arrows": [{"id": "id", "dom": "A", "cod": "A", "table": [0]}],
            "composition": [["id", "id", "nope"]],
        }
        with pytest.raises(LoadError) as e:
            load_category(data)
        assert e.value.law == "composition-table"

    def test_bad_product(self):
        # claims A x A = A with identity projections: pairing not unique
        data = {
            "objects": [{"id": "A", "card": 2}],
            "arrows": [
                {"id": "id", "dom": "A", "cod": "A", "table": [0, 1]},
                {"id": "s", "dom": "A", "cod": "A", "table": [1, 0]},
            ],
            "structure": {
                "products": [
                    {"left": "A", "right": "A", "obj": "A", "proj1": "id", "proj2": "id"}
                ]
            },
        }
        with pytest.raises(LoadError) as e:
            load_category(data)
        assert e.value.law == "product-universal-property"

    def test_bad_table(self):
        data = {
            "objects": [{"id": "A", "card": 2}],
            "arrows": [{"id": "id", "dom": "A", "cod": "A", "table": [0, 7]}],
        }
        with pytest.raises(LoadError) as e:
            load_category(data)
        assert e.value.law == "arrow-table"

    def test_not_json(self):
        with pytest.raises(LoadError):
            load_category("{not json")
