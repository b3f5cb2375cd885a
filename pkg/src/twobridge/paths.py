"""The catalog of minimal edge-paths from 1/0 to [r, s].

Each named path is stored as an ordered list of labelled, oriented edges,
every edge tagged with the G-matrix carrying a model edge onto it.  The
routes are reconstructed from the textual descriptions of the paths: the
"triples" of a_{14}/a_{16}-type paths hug the odd vertices 1/(2i-1) away
from 0/1, pure-D runs circle a single pivot vertex (0/1 or 1/r), and the
B-edges of the D_infinity diagram are whole quadrilateral sides.  The
anchor cases c16 and d26 reproduce the published row-by-row evaluations
exactly (see the invariants tests), and every path is checked to start at
the vertex 1/0 and end at [r, s] by pushing model endpoints through its
matrices.

Minimality ("no two consecutive edges on one triangle or rectangle face")
is decided geometrically: the faces incident to an edge are computed from
its matrix, so the documented exceptional cases (c5 when r = 3, d4/d5 when
s = -3, ...) fall out rather than being hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .farey import (
    FIRST,
    SECOND,
    DomainError,
    GMatrix,
    Rational,
    apply,
    edge_matrix,
    from_partial_quotients,
    t1_c_matrix,
    validate_rs,
)


class EdgeLabel(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class Regime(Enum):
    """Which diagram a path lives in: t = 1, t = 0/infinity, or generic t."""

    D1 = "D1"
    DINF = "Dinf"
    DT = "Dt"


T1C = "t1C"  # position tag of the special C edge of c2/d2 (from 1/r to 0/1)


@dataclass(frozen=True)
class PathEdge:
    """One labelled, oriented edge of a path.

    matrix carries the model edge of this label onto the diagram edge; when
    orientation_matched is False the path traverses the edge against the
    model orientation and every slope contribution changes sign.  The
    position tag (seq, index, k) records which quadrilateral side the edge
    belongs to; seq == T1C marks the special t = 1 C edge.
    """

    label: EdgeLabel
    matrix: GMatrix
    orientation_matched: bool
    seq: str
    index: int
    k: int


@dataclass(frozen=True)
class EdgePath:
    name: str
    regime: Regime
    r: int
    s: int
    edges: tuple[PathEdge, ...]
    generators: tuple[int, int] | None = None  # (i, j) for the chimera c_ij/d_ij

    def __len__(self) -> int:
        return len(self.edges)

    def labels(self) -> str:
        return "".join(e.label.value for e in self.edges)


# ---------------------------------------------------------------------------
# Route construction
# ---------------------------------------------------------------------------

def _mk(r: int, s: int, label: str, seq: str, index: int, k: int, matched: bool) -> PathEdge:
    if seq == T1C:
        matrix = t1_c_matrix(r)
    else:
        matrix = edge_matrix(r, s, seq, index, k)
    return PathEdge(EdgeLabel(label), matrix, matched, seq, index, k)


def _first_fan_triples(r, s, w):
    # A'_1(i), D'_2(i), -A'_2(i): along the top of the first fan, away from 0/1.
    out = []
    for i in range(1, w + 1):
        out.append(_mk(r, s, "A", FIRST, i, 1, True))
        out.append(_mk(r, s, "D", FIRST, i, 2, True))
        out.append(_mk(r, s, "A", FIRST, i, 2, False))
    return out


def _second_fan_triples(r, s, count):
    # Away from the hub 1/r.  s > 0: A'_0, -D'_0, -A'_3; s < 0: A'_3, D'_0, -A'_0.
    out = []
    for j in range(2, count + 2):
        if s > 0:
            out.append(_mk(r, s, "A", SECOND, j, 0, True))
            out.append(_mk(r, s, "D", SECOND, j, 0, False))
            out.append(_mk(r, s, "A", SECOND, j, 3, False))
        else:
            out.append(_mk(r, s, "A", SECOND, j, 3, True))
            out.append(_mk(r, s, "D", SECOND, j, 0, True))
            out.append(_mk(r, s, "A", SECOND, j, 0, False))
    return out


def _zigzag_a(r, s, w):
    # c1/d0/d1 opening: 1/0-1/1-1/2-...-1/(r-1) through the odd vertices.
    out = []
    for i in range(1, w + 1):
        out.append(_mk(r, s, "A", FIRST, i, 1, True))
        out.append(_mk(r, s, "A", FIRST, i, 2, False))
    return out


def _hub_ring(r, s, count):
    # D edges around the hub 1/r; matched for s > 0, reversed for s < 0.
    if s > 0:
        return [_mk(r, s, "D", SECOND, j, 2, True) for j in range(2, count + 2)]
    return [_mk(r, s, "D", SECOND, j, 2, False) for j in range(2, count + 2)]


def _zero_ring(r, s, count):
    # D edges around the pivot 0/1, always traversed away from quadrilateral 1.
    return [_mk(r, s, "D", FIRST, i, 0, False) for i in range(1, count + 1)]


def _second_diagonals(r, s, count):
    # Full D diagonals of the second fan (D_infinity diagram).
    if s > 0:
        return [_mk(r, s, "D", SECOND, j, 0, False) for j in range(2, count + 2)]
    return [_mk(r, s, "D", SECOND, j, 0, True) for j in range(2, count + 2)]


def _last_a(r, s, matched=False):
    # Final A edge into the vertex [r, s].
    if s > 0:
        u = (s - 1) // 2
        return _mk(r, s, "A", SECOND, u + 1, 2, matched)
    uprime = (-s - 1) // 2
    return _mk(r, s, "A", SECOND, uprime + 1, 1, matched)


def _last_b(r, s):
    # Final B edge from 1/r toward [r, s] (matched: B points away from odd vertices).
    if s > 0:
        u = (s - 1) // 2
        return _mk(r, s, "B", SECOND, u + 1, 2, True)
    uprime = (-s - 1) // 2
    return _mk(r, s, "B", SECOND, uprime + 1, 1, True)


def _build_edges(name: str, r: int, s: int) -> list[PathEdge]:
    w, u = validate_rs(r, s)
    uprime = -u - 1
    m = w + 1  # index of the shared quadrilateral in the first fan

    if s > 0:
        if name == "c1":
            return _zigzag_a(r, s, w) + [_mk(r, s, "A", FIRST, m, 1, True), _last_a(r, s)]
        if name == "c2":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    PathEdge(EdgeLabel.C, t1_c_matrix(r), False, T1C, 0, 0),
                    _last_a(r, s)]
        if name == "c3":
            out = [_mk(r, s, "A", FIRST, 1, 0, True)]
            for j in range(1, u + 1):
                out.append(_mk(r, s, "A", SECOND, j, 3, False))
                out.append(_mk(r, s, "A", SECOND, j + 1, 0, True))
            out.append(_mk(r, s, "A", SECOND, u + 1, 3, False))
            return out
        if name == "c4":
            return (_zero_ring(r, s, w)
                    + [_mk(r, s, "B", FIRST, m, 1, False), _last_b(r, s)])
        if name == "c5":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 0, True),
                    _mk(r, s, "B", FIRST, m, 1, False),
                    _last_b(r, s)]
        if name == "c6":
            return _zero_ring(r, s, w + 1) + _second_diagonals(r, s, u)
        if name == "c7":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 3, True),
                    _mk(r, s, "B", FIRST, m, 2, False),
                    _last_b(r, s)]
        if name == "c8":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 3, True)] + _second_diagonals(r, s, u)
        if name == "c14":
            return (_first_fan_triples(r, s, w)
                    + [_mk(r, s, "A", FIRST, m, 1, True),
                       _mk(r, s, "B", FIRST, m, 1, False),
                       _last_b(r, s), _last_a(r, s)])
        if name == "c16":
            return (_first_fan_triples(r, s, w)
                    + [_mk(r, s, "A", FIRST, m, 1, True), _mk(r, s, "D", FIRST, m, 2, True)]
                    + _hub_ring(r, s, u) + [_last_a(r, s)])
        if name == "c24":
            return ([_mk(r, s, "A", FIRST, 1, 0, True)] + _zero_ring(r, s, w)
                    + [_mk(r, s, "C", FIRST, m, 0, False),
                       _mk(r, s, "B", FIRST, m, 1, False),
                       _last_b(r, s), _last_a(r, s)])
        if name == "c25":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    _mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 0, True),
                    _mk(r, s, "C", FIRST, m, 0, False),
                    _mk(r, s, "B", FIRST, m, 1, False),
                    _last_b(r, s), _last_a(r, s)]
        if name == "c27":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    _mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 3, True),
                    _mk(r, s, "C", FIRST, m, 2, True),
                    _mk(r, s, "B", FIRST, m, 2, False),
                    _last_b(r, s), _last_a(r, s)]
        if name == "c28":
            return ([_mk(r, s, "A", FIRST, 1, 0, True),
                     _mk(r, s, "B", FIRST, 1, 0, False),
                     _mk(r, s, "B", FIRST, m, 3, True),
                     _mk(r, s, "C", FIRST, m, 2, True)]
                    + _hub_ring(r, s, u) + [_last_a(r, s)])
        if name == "c36":
            return ([_mk(r, s, "A", FIRST, 1, 0, True)] + _zero_ring(r, s, w + 1)
                    + [_mk(r, s, "A", FIRST, m, 3, False)]
                    + _second_fan_triples(r, s, u))
        if name == "c38":
            return ([_mk(r, s, "A", FIRST, 1, 0, True),
                     _mk(r, s, "B", FIRST, 1, 0, False),
                     _mk(r, s, "B", FIRST, m, 3, True),
                     _mk(r, s, "A", FIRST, m, 3, False)]
                    + _second_fan_triples(r, s, u))
    else:
        if name == "d0":
            return _zigzag_a(r, s, w) + [
                e for j in range(2, uprime + 2)
                for e in (_mk(r, s, "A", SECOND, j, 3, True),
                          _mk(r, s, "A", SECOND, j, 0, False))
            ]
        if name == "d1":
            return _zigzag_a(r, s, w) + [_mk(r, s, "A", FIRST, m, 1, True), _last_a(r, s)]
        if name == "d2":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    PathEdge(EdgeLabel.C, t1_c_matrix(r), False, T1C, 0, 0),
                    _last_a(r, s)]
        if name == "d3":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    _mk(r, s, "A", SECOND, 1, 0, False)] + [
                e for j in range(2, uprime + 2)
                for e in (_mk(r, s, "A", SECOND, j, 3, True),
                          _mk(r, s, "A", SECOND, j, 0, False))
            ]
        if name == "d4":
            return (_zero_ring(r, s, w)
                    + [_mk(r, s, "B", FIRST, m, 1, False), _last_b(r, s)])
        if name == "d5":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 0, True),
                    _mk(r, s, "B", FIRST, m, 1, False),
                    _last_b(r, s)]
        if name == "d6":
            return _zero_ring(r, s, w) + _second_diagonals(r, s, uprime)
        if name == "d7":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 3, True),
                    _mk(r, s, "B", FIRST, m, 2, False),
                    _last_b(r, s)]
        if name == "d8":
            return [_mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 0, True)] + _second_diagonals(r, s, uprime)
        if name == "d06":
            return _first_fan_triples(r, s, w) + _second_fan_triples(r, s, uprime)
        if name == "d14":
            return (_first_fan_triples(r, s, w)
                    + [_mk(r, s, "A", FIRST, m, 1, True),
                       _mk(r, s, "B", FIRST, m, 1, False),
                       _last_b(r, s), _last_a(r, s)])
        if name == "d16":
            return (_first_fan_triples(r, s, w)
                    + [_mk(r, s, "A", FIRST, m, 1, True)]
                    + _hub_ring(r, s, uprime) + [_last_a(r, s)])
        if name == "d24":
            return ([_mk(r, s, "A", FIRST, 1, 0, True)] + _zero_ring(r, s, w)
                    + [_mk(r, s, "C", FIRST, m, 0, False),
                       _mk(r, s, "B", FIRST, m, 1, False),
                       _last_b(r, s), _last_a(r, s)])
        if name == "d25":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    _mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 0, True),
                    _mk(r, s, "C", FIRST, m, 0, False),
                    _mk(r, s, "B", FIRST, m, 1, False),
                    _last_b(r, s), _last_a(r, s)]
        if name == "d26":
            return ([_mk(r, s, "A", FIRST, 1, 0, True)] + _zero_ring(r, s, w)
                    + [_mk(r, s, "C", FIRST, m, 0, False)]
                    + _hub_ring(r, s, uprime) + [_last_a(r, s)])
        if name == "d27":
            return [_mk(r, s, "A", FIRST, 1, 0, True),
                    _mk(r, s, "B", FIRST, 1, 0, False),
                    _mk(r, s, "B", FIRST, m, 3, True),
                    _mk(r, s, "C", FIRST, m, 2, True),
                    _mk(r, s, "B", FIRST, m, 2, False),
                    _last_b(r, s), _last_a(r, s)]
        if name == "d28":
            return ([_mk(r, s, "A", FIRST, 1, 0, True),
                     _mk(r, s, "B", FIRST, 1, 0, False),
                     _mk(r, s, "B", FIRST, m, 0, True),
                     _mk(r, s, "C", FIRST, m, 0, False)]
                    + _hub_ring(r, s, uprime) + [_last_a(r, s)])
        if name == "d36":
            return ([_mk(r, s, "A", FIRST, 1, 0, True)] + _zero_ring(r, s, w)
                    + [_mk(r, s, "A", FIRST, m, 0, False)]
                    + _second_fan_triples(r, s, uprime))
        if name == "d38":
            return ([_mk(r, s, "A", FIRST, 1, 0, True),
                     _mk(r, s, "B", FIRST, 1, 0, False),
                     _mk(r, s, "B", FIRST, m, 0, True),
                     _mk(r, s, "A", FIRST, m, 0, False)]
                    + _second_fan_triples(r, s, uprime))
    raise DomainError(f"unknown path name {name!r} for s {'>' if s > 0 else '<'} 0")


_BASE_CATALOG = {
    (Regime.D1, True): ("c1", "c2", "c3"),
    (Regime.DINF, True): ("c4", "c5", "c6", "c7", "c8"),
    (Regime.DT, True): ("c14", "c16", "c24", "c25", "c27", "c28", "c36", "c38"),
    (Regime.D1, False): ("d0", "d1", "d2", "d3"),
    (Regime.DINF, False): ("d4", "d5", "d6", "d7", "d8"),
    (Regime.DT, False): ("d06", "d14", "d16", "d24", "d25", "d26", "d27", "d28",
                         "d36", "d38"),
}

_REGIME_OF = {n: reg for (reg, _), names in _BASE_CATALOG.items() for n in names}


def regime_of(name: str) -> Regime:
    return _REGIME_OF[name]


def generators_of(name: str) -> tuple[int, int] | None:
    """The (i, j) generator pair of a chimera path, or None for a simple one."""
    digits = name[1:]
    if len(digits) == 2:
        return (int(digits[0]), int(digits[1]))
    return None


def path_edges(name: str, w: int, u: int) -> EdgePath:
    """Build the named path for r = 2w+1, s = 2u+1.

    Structurally valid names are always constructible, including the ones
    that fail minimality for small parameters; catalog() is the filter.
    """
    r, s = 2 * w + 1, 2 * u + 1
    validate_rs(r, s)
    edges = tuple(_build_edges(name, r, s))
    path = EdgePath(name, regime_of(name), r, s, edges, generators_of(name))
    _check_endpoints(path)
    return path


# ---------------------------------------------------------------------------
# Exclusion rules and the catalog
# ---------------------------------------------------------------------------

def _excluded_simple(name: str, w: int, u: int) -> bool:
    uprime = -u - 1
    if name == "c5":
        return w == 1
    if name == "d5":
        return w == 1 or uprime == 1
    if name == "d8":
        return w == 1
    if name == "d4":
        return uprime == 1
    return False


def is_excluded(name: str, w: int, u: int) -> bool:
    """Whether the path drops out of the minimal catalog at these parameters.

    A chimera c_ij/d_ij is excluded exactly when its second generator c_j/d_j
    is; c7 and d7 are never excluded.
    """
    gens = generators_of(name)
    if gens is not None:
        tail = ("c" if name[0] == "c" else "d") + str(gens[1])
        return _excluded_simple(tail, w, u)
    return _excluded_simple(name, w, u)


def catalog(r: int, s: int, regime: Regime) -> list[str]:
    """Names of the minimal edge-paths for L([r, s]) in the given diagram."""
    w, u = validate_rs(r, s)
    return [n for n in _BASE_CATALOG[(regime, s > 0)] if not is_excluded(n, w, u)]


def catalog_with_exclusions(r: int, s: int, regime: Regime):
    """(included, excluded) name lists for the given diagram."""
    w, u = validate_rs(r, s)
    names = _BASE_CATALOG[(regime, s > 0)]
    return ([n for n in names if not is_excluded(n, w, u)],
            [n for n in names if is_excluded(n, w, u)])


# ---------------------------------------------------------------------------
# Model endpoints and path continuity
# ---------------------------------------------------------------------------

_V_INF = Rational(1, 0)
_V0 = Rational(0, 1)
_V1 = Rational(1, 1)
_V12 = Rational(1, 2)

Endpoint = tuple  # ("v", Rational) or ("m", frozenset of two Rationals)


def _vertex(v: Rational) -> Endpoint:
    return ("v", v)


def _mid(x: Rational, y: Rational) -> Endpoint:
    return ("m", frozenset((x, y)))


def _model_endpoints(label: EdgeLabel, regime: Regime) -> tuple[Endpoint, Endpoint]:
    if regime is Regime.D1:
        if label is EdgeLabel.A:
            return _vertex(_V_INF), _vertex(_V0)
        if label is EdgeLabel.C:
            return _vertex(_V1), _vertex(_V0)
    if regime is Regime.DINF:
        if label is EdgeLabel.B:
            return _vertex(_V0), _vertex(_V_INF)
        if label is EdgeLabel.D:
            return _vertex(_V12), _vertex(_V_INF)
    if regime is Regime.DT:
        if label is EdgeLabel.A:
            return _vertex(_V_INF), _mid(_V_INF, _V0)
        if label is EdgeLabel.B:
            return _vertex(_V0), _mid(_V_INF, _V0)
        if label is EdgeLabel.C:
            return _mid(_V_INF, _V1), _mid(_V_INF, _V0)
        if label is EdgeLabel.D:
            return _mid(_V0, _V12), _mid(_V0, _V_INF)
    raise DomainError(f"label {label} has no model edge in diagram {regime}")


def _push(endpoint: Endpoint, matrix: GMatrix) -> Endpoint:
    kind, payload = endpoint
    if kind == "v":
        return ("v", apply(matrix, payload))
    return ("m", frozenset(apply(matrix, v) for v in payload))


def edge_endpoints(edge: PathEdge, regime: Regime) -> tuple[Endpoint, Endpoint]:
    """Traversal endpoints of the edge (start, end), orientation applied."""
    start, end = _model_endpoints(edge.label, regime)
    start, end = _push(start, edge.matrix), _push(end, edge.matrix)
    if not edge.orientation_matched:
        start, end = end, start
    return start, end


def _check_endpoints(path: EdgePath) -> None:
    # Every path runs from the vertex 1/0 to the vertex [r, s], consecutive
    # edges meeting end-to-start.  This pins every matrix and orientation.
    target = from_partial_quotients([path.r, path.s])
    pts = [edge_endpoints(e, path.regime) for e in path.edges]
    if pts[0][0] != _vertex(_V_INF):
        raise AssertionError(f"{path.name}: starts at {pts[0][0]}, not 1/0")
    if pts[-1][1] != _vertex(target):
        raise AssertionError(f"{path.name}: ends at {pts[-1][1]}, not {target}")
    for i in range(len(pts) - 1):
        if pts[i][1] != pts[i + 1][0]:
            raise AssertionError(
                f"{path.name}: edge {i} ends at {pts[i][1]} but edge {i + 1} "
                f"starts at {pts[i + 1][0]}"
            )


# ---------------------------------------------------------------------------
# Faces and minimality
# ---------------------------------------------------------------------------

def _combo(x: Rational, kx: int, y: Rational, ky: int) -> Rational:
    return Rational(kx * x.num + ky * y.num, kx * x.den + ky * y.den)


def _tri(*vertices: Rational):
    return ("tri", frozenset(vertices))


def _quad_plus(m: GMatrix):
    return frozenset((apply(m, _V0), apply(m, _V_INF), apply(m, _V1), apply(m, _V12)))


def _quad_minus(m: GMatrix):
    return frozenset((apply(m, _V0), apply(m, _V_INF),
                      apply(m, Rational(-1, 1)), apply(m, Rational(-1, 2))))


def faces_of(edge: PathEdge, regime: Regime):
    """Face keys of the (at most two) faces whose boundary contains the edge.

    D1 faces are the Farey triangles; D_infinity faces are the half-quads cut
    off by the D diagonals; D_t has corner triangles (two half-edges plus one
    rectangle edge) and the rectangles themselves.
    """
    m = edge.matrix
    if regime is Regime.D1:
        if edge.label is EdgeLabel.A:
            x, y = apply(m, _V_INF), apply(m, _V0)
        else:  # C diagonal, including the special t=1 edge
            x, y = apply(m, _V1), apply(m, _V0)
        return frozenset((_tri(x, y, _combo(x, 1, y, 1)), _tri(x, y, _combo(x, 1, y, -1))))
    if regime is Regime.DINF:
        if edge.label is EdgeLabel.B:
            e, o = apply(m, _V_INF), apply(m, _V0)
            return frozenset((_tri(e, o, _combo(e, 1, o, 2)),
                              _tri(e, o, _combo(e, 1, o, -2))))
        e1, e2 = apply(m, _V_INF), apply(m, _V12)  # D diagonal
        return frozenset((_tri(e1, e2, _combo(e1, 1, e2, 1)),
                          _tri(e1, e2, _combo(e2, 1, e1, -1))))
    # D_t
    if edge.label is EdgeLabel.A:
        corner = apply(m, _V_INF)
        return frozenset((("ctri", _quad_plus(m), corner),
                          ("ctri", _quad_minus(m), corner)))
    if edge.label is EdgeLabel.B:
        corner = apply(m, _V0)
        return frozenset((("ctri", _quad_plus(m), corner),
                          ("ctri", _quad_minus(m), corner)))
    if edge.label is EdgeLabel.C:
        q = _quad_plus(m)
        return frozenset((("ctri", q, apply(m, _V_INF)), ("rect", q)))
    q = _quad_plus(m)
    return frozenset((("ctri", q, apply(m, _V0)), ("rect", q)))


def is_minimal(path: EdgePath) -> bool:
    """No two consecutive edges on the boundary of one face."""
    prev = None
    for edge in path.edges:
        cur = faces_of(edge, path.regime)
        if prev is not None and prev & cur:
            return False
        prev = cur
    return True
