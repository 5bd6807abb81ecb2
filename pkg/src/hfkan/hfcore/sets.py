"""Hereditarily finite sets with a definable global total order.

Every value in this package bottoms out in sets built from the empty set.
Sets are interned in a canonical form (children sorted, duplicate-free), so
extensional equality is object identity and hashing is O(1).

The global order is the structural one induced by the binary Ackermann
coding N(x) = sum of 2^N(y) over y in x: a < b exactly when the largest
element of the symmetric difference a Δ b lies in b.  `hf_compare` walks the
canonical children directly and never materialises the codes;
`ackermann_code` / `from_ackermann_code` exist as the independent
big-integer oracle used by the tests.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from ..errors import ParseError, RelationError

__all__ = [
    "HFSet",
    "hf",
    "EMPTY",
    "hf_compare",
    "ordinal",
    "ordinal_value",
    "kpair",
    "as_pair",
    "ktriple",
    "powerset",
    "hf_union",
    "ackermann_code",
    "from_ackermann_code",
    "hf_literal",
    "parse_hf",
    "quotient_min",
]


class HFSet:
    """A canonical hereditarily finite set.

    Never constructed directly: build through `hf`.  `children` is a tuple
    sorted strictly ascending in the global order, which makes structural
    equality coincide with `is`.
    """

    __slots__ = ("children", "uid", "_hash")

    def __init__(self, children, uid, h):
        self.children = children
        self.uid = uid
        self._hash = h

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.children)

    def __iter__(self) -> Iterator["HFSet"]:
        return iter(self.children)

    def __contains__(self, x):
        return any(c is x for c in self.children)

    def __lt__(self, other):
        return hf_compare(self, other) < 0

    def __le__(self, other):
        return hf_compare(self, other) <= 0

    def __gt__(self, other):
        return hf_compare(self, other) > 0

    def __ge__(self, other):
        return hf_compare(self, other) >= 0

    def __repr__(self):
        return hf_literal(self)


_intern: dict[tuple[int, ...], HFSet] = {}
_uids = itertools.count()


def hf(children: Iterable[HFSet] = ()) -> HFSet:
    """The canonical set whose members are `children` (deduplicated)."""
    elems = sorted(children)
    dedup: list[HFSet] = []
    for c in elems:
        if not isinstance(c, HFSet):
            raise TypeError(f"HFSet children must be HFSet, got {type(c).__name__}")
        if not dedup or dedup[-1] is not c:
            dedup.append(c)
    key = tuple(c.uid for c in dedup)
    cached = _intern.get(key)
    if cached is None:
        cached = HFSet(tuple(dedup), next(_uids), hash(key))
        _intern[key] = cached
    return cached


EMPTY = hf()


def hf_compare(a: HFSet, b: HFSet) -> int:
    """Total order on HF sets: -1, 0 or 1.

    a < b iff the largest element of the symmetric difference lies in b;
    equivalently the Ackermann codes compare that way as integers.
    """
    if a is b:
        return 0
    ca, cb = a.children, b.children
    for x, y in zip(reversed(ca), reversed(cb)):
        if x is not y:
            return hf_compare(x, y)
    return -1 if len(ca) < len(cb) else 1


# --- ordinals and pairs -----------------------------------------------------

_ordinals: list[HFSet] = [EMPTY]


def ordinal(n: int) -> HFSet:
    """The von Neumann ordinal {0, ..., n-1}."""
    if n < 0:
        raise ValueError("ordinal of a negative number")
    while len(_ordinals) <= n:
        prev = _ordinals[-1]
        _ordinals.append(hf(list(prev.children) + [prev]))
    return _ordinals[n]


def ordinal_value(x: HFSet) -> int | None:
    """Inverse of `ordinal`: the n with ordinal(n) is x, else None."""
    n = len(x.children)
    return n if ordinal(n) is x else None


def kpair(a: HFSet, b: HFSet) -> HFSet:
    """Kuratowski pair {{a},{a,b}}."""
    return hf([hf([a]), hf([a, b])])


def as_pair(x: HFSet) -> tuple[HFSet, HFSet] | None:
    """Decode a Kuratowski pair, or None if x is not pair-shaped."""
    cs = x.children
    if len(cs) == 1:
        inner = cs[0]
        if len(inner) == 1:
            return inner.children[0], inner.children[0]
        return None
    if len(cs) == 2:
        first, second = cs
        if len(first) == 1 and len(second) == 2:
            a = first.children[0]
            u, v = second.children
            if u is a:
                return a, v
            if v is a:
                return a, u
        return None
    return None


def ktriple(a: HFSet, b: HFSet, c: HFSet) -> HFSet:
    """Triple <a, <b, c>> used for coding functions as <A, Graph, B>."""
    return kpair(a, kpair(b, c))


def powerset(s: HFSet) -> HFSet:
    out = []
    for r in range(len(s) + 1):
        for combo in itertools.combinations(s.children, r):
            out.append(hf(combo))
    return hf(out)


def hf_union(s: HFSet) -> HFSet:
    out: list[HFSet] = []
    for c in s:
        out.extend(c.children)
    return hf(out)


# --- Ackermann coding oracle ------------------------------------------------

_code_memo: dict[int, int] = {}
_decode_memo: dict[int, HFSet] = {}


def ackermann_code(x: HFSet) -> int:
    """Big-integer Ackermann code; the oracle for the global order."""
    got = _code_memo.get(x.uid)
    if got is None:
        got = sum(1 << ackermann_code(c) for c in x.children)
        _code_memo[x.uid] = got
    return got


def from_ackermann_code(n: int) -> HFSet:
    if n < 0:
        raise ValueError("Ackermann codes are nonnegative")
    got = _decode_memo.get(n)
    if got is None:
        children = []
        i, rest = 0, n
        while rest:
            if rest & 1:
                children.append(from_ackermann_code(i))
            rest >>= 1
            i += 1
        got = hf(children)
        _decode_memo[n] = got
    return got


# --- literal syntax ---------------------------------------------------------
#
#   hf := '{}' | '{' hf (',' hf)* '}' | '#' digits | '<' hf ',' hf '>'
#
# The printer prefers the shorthands: ordinals print as #n (except the empty
# set, which prints as {}), Kuratowski pairs as <a,b>.  Ordinals above 0 are
# never pair-shaped, so the choice is unambiguous and print/parse round-trips.


def hf_literal(x: HFSet) -> str:
    if x is EMPTY:
        return "{}"
    n = ordinal_value(x)
    if n is not None:
        return f"#{n}"
    p = as_pair(x)
    if p is not None:
        return f"<{hf_literal(p[0])},{hf_literal(p[1])}>"
    return "{" + ",".join(hf_literal(c) for c in x.children) + "}"


def parse_hf(text: str) -> HFSet:
    value, pos = _parse_hf_at(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"trailing input after set literal: {text[pos:]!r}", col=pos + 1)
    return value


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_hf_at(text: str, pos: int) -> tuple[HFSet, int]:
    pos = _skip_ws(text, pos)
    if pos >= len(text):
        raise ParseError("unexpected end of set literal", col=pos + 1)
    ch = text[pos]
    if ch == "#":
        start = pos + 1
        end = start
        while end < len(text) and text[end].isdigit():
            end += 1
        if end == start:
            raise ParseError("expected digits after '#'", col=start + 1)
        return ordinal(int(text[start:end])), end
    if ch == "<":
        a, pos = _parse_hf_at(text, pos + 1)
        pos = _expect(text, pos, ",")
        b, pos = _parse_hf_at(text, pos)
        pos = _expect(text, pos, ">")
        return kpair(a, b), pos
    if ch == "{":
        pos = _skip_ws(text, pos + 1)
        if pos < len(text) and text[pos] == "}":
            return EMPTY, pos + 1
        members = []
        while True:
            member, pos = _parse_hf_at(text, pos)
            members.append(member)
            pos = _skip_ws(text, pos)
            if pos >= len(text):
                raise ParseError("unterminated set literal", col=pos + 1)
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == "}":
                return hf(members), pos + 1
            raise ParseError(f"expected ',' or '}}', got {text[pos]!r}", col=pos + 1)
    raise ParseError(f"unexpected character {ch!r} in set literal", col=pos + 1)


def _expect(text, pos, token):
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != token:
        found = text[pos] if pos < len(text) else "end of input"
        raise ParseError(f"expected {token!r}, got {found!r}", col=pos + 1)
    return pos + 1


# --- quotients --------------------------------------------------------------


def quotient_min(a: HFSet, related) -> HFSet:
    """Minimal representatives of `a` under the equivalence `related`.

    `related` must be an equivalence relation on the members of `a`; a
    violation raises RelationError naming a witness.  The result holds, for
    each class, the member that is least in the global order, so quotienting
    twice is the same as quotienting once.
    """
    members = a.children
    for x in members:
        if not related(x, x):
            raise RelationError(f"relation not reflexive at {hf_literal(x)}", (x,))
    table = {}
    for x in members:
        for y in members:
            table[(x, y)] = bool(related(x, y))
    for x in members:
        for y in members:
            if table[(x, y)] and not table[(y, x)]:
                raise RelationError(
                    f"relation not symmetric at ({hf_literal(x)}, {hf_literal(y)})", (x, y)
                )
    for x in members:
        for y in members:
            if not table[(x, y)]:
                continue
            for z in members:
                if table[(y, z)] and not table[(x, z)]:
                    raise RelationError(
                        "relation not transitive at "
                        f"({hf_literal(x)}, {hf_literal(y)}, {hf_literal(z)})",
                        (x, y, z),
                    )
    reps: list[HFSet] = []
    for x in members:  # ascending, so the first member seen per class is minimal
        if not any(table[(r, x)] for r in reps):
            reps.append(x)
    return hf(reps)
