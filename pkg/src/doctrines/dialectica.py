"""The composite completion and the dialectica order.

Stacking the universal completion and then the existential one yields a
doctrine whose fiber over the terminal object carries the dialectica
order: objects are predicates alpha over B x C, and (B, C, alpha) is
below (B', C', beta) when a forward map f: B -> B' and a backward map
F: B x C' -> C satisfy

    (b, F(b, c')) in alpha   implies   (f(b), c') in beta.

`dial_leq` decides that condition directly; `dial_from_nested` and
`dial_to_nested` translate against the nested two-completion elements, so
the two decision procedures can be compared as independent oracles.

This module also houses the universal structure of an existential
completion over a base with exponentials: the right adjoint to
reindexing along a projection trades the quantified object B for the
exponential B^A2, reading `exists b. alpha(a1, a2, b)` as
`exists g: B^A2. forall a2. alpha(a1, a2, g(a2))`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .completion import EX, UN, Completion, QuantElem, forall_proj
from .doctrine import CAP_UN_PR, Doctrine
from .errors import CapabilityError, SearchBudgetExceeded, WitnessValidationError, resolve_budget
from .fincat import Arrow, compose, nth_proj, product_map, prod_obj, tuple_arrow


def eval_expand_arrow(cat, a1, a2, b) -> Arrow:
    """A1 x A2 x B^A2 -> A1 x A2 x B, evaluating the function coordinate
    at the middle coordinate."""
    e = cat.exponential(b, a2)
    factors = [a1, a2, e]
    src = prod_obj(cat, factors)
    p1 = nth_proj(cat, factors, 0)
    p2 = nth_proj(cat, factors, 1)
    p3 = nth_proj(cat, factors, 2)
    evm = cat.ev(b, a2)
    applied = compose(evm, cat.pair(p2, p3))
    arrow = tuple_arrow(cat, [p1, p2, applied])
    if arrow.dom != src:
        raise AssertionError("evaluation expansion built a mismatched arrow")
    return arrow


def forall_pr_exp(comp: Completion, split, x: QuantElem) -> QuantElem:
    """Right adjoint to reindexing along proj1(split) in an existential
    completion whose base is universal and whose category has exponents."""
    if comp.polarity != EX:
        raise CapabilityError("exponential forall lives in the existential completion")
    if CAP_UN_PR not in comp.base.caps:
        raise CapabilityError("base doctrine is not universal over projections")
    if not getattr(comp.cat, "has_exponentials", False):
        raise CapabilityError("base category has no exponentials")
    a1, a2 = split
    comp._check_elem(x)
    cat = comp.cat
    if x.base != cat.product(a1, a2):
        raise ValueError("element does not live over the stated product")
    b = x.qobj
    e = cat.exponential(b, a2)
    delta = comp.base.reindex(eval_expand_arrow(cat, a1, a2, b), x.pred)
    gamma = forall_proj(comp.base, (a1, a2, e), (0, 2), delta)
    return comp.elem(a1, e, gamma)


# ---------------------------------------------------------------------------
# the dialectica order
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DialObj:
    """A dialectica object: forward carrier, backward carrier, and a
    predicate over their product."""

    src: object
    tgt: object
    pred: object


def dial_leq(doc: Doctrine, u: DialObj, v: DialObj, budget: int | None = None):
    """Decide u <= v; return the least witnessing pair (f, F) or None.

    Pairs are ordered lexicographically with f major.  The scan errors
    rather than answer negatively once the f-space alone exceeds the
    budget.
    """
    cat = doc.cat
    fast = doc.dial_witness(u.src, u.tgt, v.src, v.tgt, u.pred, v.pred)
    if fast is not NotImplemented:
        if fast is None:
            return None
        f_table, big_f_table = fast
        f = Arrow(u.src, v.src, tuple(f_table))
        big_f = Arrow(cat.product(u.src, v.tgt), u.tgt, tuple(big_f_table))
        if not dial_certifies(doc, u, v, f, big_f):
            raise WitnessValidationError(
                f"kernel returned ({f!r}, {big_f!r}) for {u!r} <= {v!r}, but it does not certify"
            )
        return f, big_f
    cap = resolve_budget(budget)
    n_f = cat.hom_size(u.src, v.src)
    n_big = cat.hom_size(cat.product(u.src, v.tgt), u.tgt)
    if n_f > cap or (n_f > 0 and n_big > 0 and n_f * n_big > cap):
        raise SearchBudgetExceeded(n_f * max(n_big, 1), cap, "dialectica pair search")
    for f in cat.iter_hom(u.src, v.src, cap):
        for big_f in cat.iter_hom(cat.product(u.src, v.tgt), u.tgt, cap):
            if dial_certifies(doc, u, v, f, big_f):
                return f, big_f
    return None


def dial_certifies(doc: Doctrine, u: DialObj, v: DialObj, f: Arrow, big_f: Arrow) -> bool:
    """P_<pr, F>(u.pred) <= P_(f x 1)(v.pred) in the fiber over src x tgt'."""
    cat = doc.cat
    stage = cat.product(u.src, v.tgt)
    graph = cat.pair(cat.proj1(u.src, v.tgt), big_f)
    lhs = doc.reindex(graph, u.pred)
    rhs = doc.reindex(product_map(cat, f, cat.identity(v.tgt)), v.pred)
    return doc.fiber_leq(stage, lhs, rhs)


def dial_holds(doc: Doctrine, u: DialObj, v: DialObj, budget=None) -> bool:
    return dial_leq(doc, u, v, budget) is not None


# ---------------------------------------------------------------------------
# translation against the nested completions
# ---------------------------------------------------------------------------


def nested_completion(doc: Doctrine, budget: int | None = None) -> Completion:
    """The existential completion of the universal completion of `doc`."""
    return Completion(Completion(doc, UN, budget), EX, budget)


def dial_to_nested(nested: Completion, u: DialObj) -> QuantElem:
    """(B, C, alpha) as an element of the composite fiber over 1."""
    cat = nested.cat
    inner: Completion = nested.base
    one = cat.terminal
    ob = cat.product(one, u.src)
    # predicate over (1 x B) x C from one over B x C
    unit = cat.proj2(one, u.src)
    transport = product_map(cat, unit, cat.identity(u.tgt))
    inner_elem = inner.elem(ob, u.tgt, inner.base.reindex(transport, u.pred))
    return nested.elem(one, u.src, inner_elem)


def dial_from_nested(nested: Completion, z: QuantElem) -> DialObj:
    """Inverse of :func:`dial_to_nested`, defined over the terminal object."""
    cat = nested.cat
    inner: Completion = nested.base
    one = cat.terminal
    if z.base != one:
        raise ValueError("nested element does not live over the terminal object")
    w = z.pred
    if not isinstance(w, QuantElem) or w.polarity != UN:
        raise ValueError("outer predicate is not a universal-completion element")
    if w.base != cat.product(one, z.qobj):
        raise ValueError("inner element does not live over 1 x B")
    unit_inv = cat.pair(cat.bang(z.qobj), cat.identity(z.qobj))  # B -> 1 x B
    transport = product_map(cat, unit_inv, cat.identity(w.qobj))
    return DialObj(z.qobj, w.qobj, inner.base.reindex(transport, w.pred))


def dial_order_agrees(doc: Doctrine, u: DialObj, v: DialObj, budget: int | None = None) -> bool:
    """Run both decision procedures on one pair and compare.

    The direct (f, F) search and the nested-completion order are
    independent implementations of the same relation; disagreement means
    a bug, and the law suite sweeps this over whole bounded fibers.
    """
    nested = nested_completion(doc, budget)
    direct = dial_leq(doc, u, v, budget) is not None
    via = (
        nested.leq(dial_to_nested(nested, u), dial_to_nested(nested, v), budget)
        is not None
    )
    return direct == via


def bounded_dialobjs(doc: Doctrine, max_card: int) -> list:
    """Every DialObj with carriers at most max_card, in deterministic order."""
    out = []
    for b in range(max_card + 1):
        for c in range(max_card + 1):
            for pred in doc.fiber_elements(doc.cat.product(b, c)):
                out.append(DialObj(b, c, pred))
    return out


def dial_preorder(doc: Doctrine, objs, budget=None):
    """The dialectica order on the given objects as an explicit Preorder."""
    from .poset import Preorder

    return Preorder.from_le(list(objs), lambda u, v: dial_holds(doc, u, v, budget))
