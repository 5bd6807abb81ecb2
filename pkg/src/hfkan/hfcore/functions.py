"""Finite functions coded as <domain, graph, codomain> triples of HF sets.

`canonical_over_base` picks one fixed representative of each isomorphism
class of functions over a common codomain: the domain is relabeled to the
initial ordinals, labels grouped fiber by fiber with the fibers taken in
base-point order.  The output therefore depends only on the codomain and
the fiber-cardinality function.  `min_iso_oracle` is the brute-force
counterpart used in tests: the least encoded triple over all relabelings
drawn from an explicit label pool.
"""

from __future__ import annotations

import itertools

from .sets import HFSet, as_pair, hf, hf_compare, hf_literal, kpair, ktriple, ordinal

__all__ = [
    "FinFunction",
    "finfun",
    "identity_fn",
    "compose_fn",
    "canonical_over_base",
    "min_iso_oracle",
]


class FinFunction:
    """A total function between finite HF sets.

    The graph is an HF set of Kuratowski pairs; construction checks that it
    is single-valued, total on the domain and lands in the codomain.
    """

    __slots__ = ("domain", "codomain", "graph", "_map")

    def __init__(self, domain: HFSet, codomain: HFSet, graph: HFSet):
        mapping: dict[HFSet, HFSet] = {}
        cod = set(codomain.children)
        for entry in graph:
            p = as_pair(entry)
            if p is None:
                raise ValueError(f"graph entry {hf_literal(entry)} is not a pair")
            x, y = p
            if x not in domain:
                raise ValueError(f"graph argument {hf_literal(x)} outside the domain")
            if y not in cod:
                raise ValueError(f"graph value {hf_literal(y)} outside the codomain")
            if x in mapping and mapping[x] is not y:
                raise ValueError(f"graph assigns two values to {hf_literal(x)}")
            mapping[x] = y
        for x in domain:
            if x not in mapping:
                raise ValueError(f"graph has no value for {hf_literal(x)}")
        self.domain = domain
        self.codomain = codomain
        self.graph = graph
        self._map = mapping

    def __call__(self, x: HFSet) -> HFSet:
        try:
            return self._map[x]
        except KeyError:
            raise ValueError(f"{hf_literal(x)} is not in the domain") from None

    def __eq__(self, other):
        return (
            isinstance(other, FinFunction)
            and self.domain is other.domain
            and self.codomain is other.codomain
            and self.graph is other.graph
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.graph))

    def __repr__(self):
        return f"{hf_literal(self.domain)}->{hf_literal(self.codomain)}:{hf_literal(self.graph)}"

    def encode(self) -> HFSet:
        """The HF triple <domain, <graph, codomain>>."""
        return ktriple(self.domain, self.graph, self.codomain)

    def image(self) -> HFSet:
        return hf(self._map.values())

    def fiber(self, b: HFSet) -> tuple[HFSet, ...]:
        return tuple(x for x in self.domain if self._map[x] is b)

    def fibers(self) -> dict[HFSet, tuple[HFSet, ...]]:
        return {b: self.fiber(b) for b in self.codomain}


def finfun(domain: HFSet, codomain: HFSet, mapping) -> FinFunction:
    """Build a FinFunction from a {x: y} mapping."""
    graph = hf(kpair(x, y) for x, y in mapping.items())
    return FinFunction(domain, codomain, graph)


def identity_fn(a: HFSet) -> FinFunction:
    return finfun(a, a, {x: x for x in a})


def compose_fn(g: FinFunction, f: FinFunction) -> FinFunction:
    """g after f."""
    if f.codomain is not g.domain:
        raise ValueError("cannot compose: codomain of f is not the domain of g")
    return finfun(f.domain, g.codomain, {x: g(f(x)) for x in f.domain})


def canonical_over_base(f: FinFunction) -> FinFunction:
    """The fixed representative of f's isomorphism class over its codomain.

    Domain elements are renamed to ordinals 0..n-1, assigned fiber by fiber
    with fibers in ascending base-point order.  Idempotent, and invariant
    under precomposing f with any bijection of its domain.
    """
    mapping: dict[HFSet, HFSet] = {}
    label = 0
    for b in f.codomain:
        for _ in f.fiber(b):
            mapping[ordinal(label)] = b
            label += 1
    domain = hf(ordinal(i) for i in range(label))
    return finfun(domain, f.codomain, mapping)


def min_iso_oracle(f: FinFunction, label_pool: HFSet) -> FinFunction:
    """Least relabeling of f, by encoded-triple order, over an explicit pool.

    Searches every injection of the domain into `label_pool`; exponential,
    meant for domains of at most five elements in tests.
    """
    points = f.domain.children
    if len(label_pool) < len(points):
        raise ValueError(
            f"label pool of size {len(label_pool)} is smaller than the domain ({len(points)})"
        )
    best = None
    best_key = None
    for labels in itertools.permutations(label_pool.children, len(points)):
        candidate = finfun(
            hf(labels),
            f.codomain,
            {lab: f(x) for lab, x in zip(labels, points)},
        )
        key = candidate.encode()
        if best_key is None or hf_compare(key, best_key) < 0:
            best, best_key = candidate, key
    if best is None:  # empty domain: the unique empty function is its own minimum
        return canonical_over_base(f)
    return best
