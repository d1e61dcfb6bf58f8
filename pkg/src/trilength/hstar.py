"""Addresses in the trinary rhombus tree and their (q, rho, m) compression.

A node of the tree is named by the labels on its root path. Each node is a
rhombus with corners v0..v3 and edges v0v1, v0v2, v2v3, v1v3, v2v1; its three
children hang off v0v2 (LEFT), v2v3 (FWD) and v1v3 (RIGHT), and a child's
v0v1 edge is glued, origin to origin, onto that parent edge.

The compressed form counts forward steps between turns: ``q[i]`` forwards
before the ``i``-th turn, ``rho[i]`` = 0 for a left and 1 for a right turn,
and a final ``q`` entry for trailing forwards. Indices in the public helpers
(``q_at``, ``rho_at``) are 1-based; storage is plain 0-based tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Label(enum.Enum):
    FWD = "F"  # arc v2v3
    LEFT = "L"  # arc v0v2, rho = 0
    RIGHT = "R"  # arc v1v3, rho = 1

    def __repr__(self) -> str:
        return self.value


F, L, R = Label.FWD, Label.LEFT, Label.RIGHT

Address = tuple[Label, ...]


class Corner(enum.IntEnum):
    V0 = 0
    V1 = 1
    V2 = 2
    V3 = 3


class EncodingError(ValueError):
    pass


def parse_address(text: str) -> Address:
    """Parse ``"L,F,L,L"``; an empty string or ``-`` is the root."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip().upper()
        try:
            out.append(Label(tok))
        except ValueError:
            raise EncodingError(f"bad address letter {tok!r}; expected F, L or R") from None
    return tuple(out)


def format_address(a: Address) -> str:
    return ",".join(l.value for l in a)


@dataclass(frozen=True)
class QREncoding:
    q: tuple[int, ...]
    rho: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 0 or len(self.rho) != self.m or len(self.q) != self.m + 1:
            raise EncodingError(
                f"inconsistent lengths: |q|={len(self.q)}, |rho|={len(self.rho)}, m={self.m}"
            )
        if any(x < 0 for x in self.q):
            raise EncodingError("q entries must be non-negative")
        if any(r not in (0, 1) for r in self.rho):
            raise EncodingError("rho entries must be bits")

    def q_at(self, i: int) -> int:
        """1-based ``q_i``; ``q_0`` reads as 0."""
        return 0 if i == 0 else self.q[i - 1]

    def rho_at(self, i: int) -> int:
        """1-based ``rho_i``; ``rho_{m+1}`` reads as 0."""
        return 0 if i == self.m + 1 else self.rho[i - 1]

    def __str__(self) -> str:
        def tup(xs):
            return "(" + ",".join(map(str, xs)) + ")"

        return f"q={tup(self.q)} rho={tup(self.rho)} m={self.m}"


def qr_encode(a: Address) -> QREncoding:
    q = [0]
    rho = []
    for label in a:
        if label is Label.FWD:
            q[-1] += 1
        else:
            rho.append(0 if label is Label.LEFT else 1)
            q.append(0)
    return QREncoding(tuple(q), tuple(rho), len(rho))


def qr_decode(e: QREncoding) -> Address:
    out: list[Label] = []
    for i in range(e.m):
        out.extend([Label.FWD] * e.q[i])
        out.append(Label.RIGHT if e.rho[i] else Label.LEFT)
    out.extend([Label.FWD] * e.q[e.m])
    return tuple(out)


def ty(a: Address) -> int:
    """Parity bit choosing which angle the rhombus of node ``a`` uses.

    One pass with a counter ``f`` of forwards since the last turn: a left
    turn flips the bit by ``f``, a right turn by ``f + 1``.
    """
    bit, f = 0, 0
    for label in a:
        if label is Label.FWD:
            f += 1
        else:
            bit ^= (f + (label is Label.RIGHT)) & 1
            f = 0
    return bit


def ty_sequence(e: QREncoding) -> list[int]:
    """``nu_0 .. nu_m`` where ``nu_i = nu_{i-1} xor q_i xor rho_i``."""
    nu = [0]
    for i in range(1, e.m + 1):
        nu.append(nu[-1] ^ (e.q_at(i) & 1) ^ e.rho_at(i))
    return nu


def is_proper(e: QREncoding) -> bool:
    return e.m >= 1 and e.q_at(e.m + 1) == 0 and (e.q_at(e.m) > 0 or e.m == 1)


@dataclass(frozen=True)
class CornerRef:
    address: Address
    corner: Corner


def creator(c: CornerRef) -> CornerRef:
    """Canonical occurrence of a corner's tree-of-triangles vertex.

    Every vertex except the root's v0 and v1 is the apex (v2 or v3) of exactly
    one node; this walks ``c`` up through the gluing identities until it
    reaches that occurrence or a root corner.
    """
    a, k = c.address, c.corner
    while True:
        if k in (Corner.V2, Corner.V3) or not a:
            return CornerRef(a, k)
        parent, last = a[:-1], a[-1]
        if k is Corner.V0:
            k = {Label.LEFT: Corner.V0, Label.FWD: Corner.V2, Label.RIGHT: Corner.V1}[last]
        else:
            k = {Label.LEFT: Corner.V2, Label.FWD: Corner.V3, Label.RIGHT: Corner.V3}[last]
        a = parent


_ROOT_V0 = QREncoding((0, 0), (0,), 1)
_ROOT_V1 = QREncoding((0, 0), (1,), 1)


def proper_encoding(c: CornerRef) -> QREncoding:
    """The unique proper encoding of the vertex at corner ``c``.

    An apex v2 (v3) of node N is the base vertex of N,F,L (N,F,R); the two
    remaining root corners have fixed encodings.
    """
    home = creator(c)
    if home.corner is Corner.V0:
        return _ROOT_V0
    if home.corner is Corner.V1:
        return _ROOT_V1
    turn = Label.LEFT if home.corner is Corner.V2 else Label.RIGHT
    return qr_encode(home.address + (Label.FWD, turn))
