"""The descriptor of T_M: group presentation, homology, flags, and the action.

The group ``G_M`` is generated by ``g0`` acting as ``(w, z) -> (alpha w, R^T z)``
on ``H x C^n`` and by translations ``g_i`` by ``u_i`` (``i = 1..N``).
Its relations are that the translations commute and that
``g0 g_i g0^-1 = g_1^{m_i1} ... g_N^{m_iN}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputFormatError, InternalInconsistency, PrecisionError
from .linalg import IntMatrix, smith_normal_form
from .polyroots import ComplexInterval, RealInterval
from .spectral import (
    DiagonalizabilityCertificate, EigenData, TypeICertificate,
    check_type_I, eigen_data, is_diagonalizable,
)

Word = tuple  # ((generator index, exponent), ...)


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

def _word_str(word: Word) -> str:
    if not word:
        return "1"
    out = []
    for g, e in word:
        out.append(f"g{g}" if e == 1 else f"g{g}^{e}")
    return " ".join(out)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def relator(self) -> Word:
        """``lhs * rhs^-1`` as a single word."""
        return tuple(self.lhs) + tuple((g, -e) for g, e in reversed(self.rhs))

    def __str__(self):
        return f"{_word_str(self.lhs)} = {_word_str(self.rhs)}"


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relations: tuple

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(f"g{i}" for i in range(self.num_generators))

    def exponent_sums(self) -> list[list[int]]:
        rows = []
        for rel in self.relations:
            row = [0] * self.num_generators
            for g, e in rel.relator():
                row[g] += e
            rows.append(row)
        return rows

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators), "relations:"]
        lines += [str(r) for r in self.relations]
        return "\n".join(lines) + "\n"


def presentation(M: IntMatrix) -> GroupPresentation:
    """Presentation of ``G_M``: commutators first, then the conjugation relations."""
    N = M.dim
    rels = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            rels.append(Relation(((i, 1), (j, 1)), ((j, 1), (i, 1))))
    for i in range(1, N + 1):
        rhs = tuple((j + 1, M.rows[i - 1][j]) for j in range(N))
        rels.append(Relation(((0, 1), (i, 1), (0, -1)), rhs))
    return GroupPresentation(N + 1, tuple(rels))


_TOKEN = re.compile(r"g(\d+)(?:\^(-?\d+))?$")


def _parse_word(text: str, line: int, col0: int) -> Word:
    word = []
    for mt in re.finditer(r"\S+", text):
        tok = mt.group()
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise InputFormatError(f"bad generator token {tok!r}", line, col0 + mt.start() + 1)
        word.append((int(m.group(1)), int(m.group(2)) if m.group(2) is not None else 1))
    return tuple(word)


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the format written by :meth:`GroupPresentation.to_text`.

    The ``generators:`` line is optional; without it the generator count is
    one more than the largest index that occurs.
    """
    rels = []
    ngen = None
    top = -1
    for ln, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if not s or s == "relations:":
            continue
        if s.startswith("generators:"):
            names = s[len("generators:"):].split()
            ngen = len(names)
            continue
        if s.count("=") != 1:
            raise InputFormatError("relation needs exactly one '='", ln, 1)
        left, right = s.split("=")
        lhs = _parse_word(left, ln, 0)
        rhs = _parse_word(right, ln, len(left) + 1)
        for g, _ in lhs + rhs:
            top = max(top, g)
        rels.append(Relation(lhs, rhs))
    if ngen is None:
        ngen = top + 1
    if top >= ngen:
        raise InputFormatError(f"generator g{top} not declared")
    return GroupPresentation(ngen, tuple(rels))


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyReport:
    """``H_1 = Z^b1 + sum Z/t`` with invariant factors ``t > 1``."""

    b1: int
    torsion: tuple
    total_torsion_order: int

    def __str__(self):
        parts = ["Z" if self.b1 == 1 else f"Z^{self.b1}"] if self.b1 else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def _report_from_snf(diag, rank: int, free_extra: int) -> HomologyReport:
    torsion = tuple(d for d in diag if d > 1)
    order = 1
    for t in torsion:
        order *= t
    return HomologyReport(free_extra, torsion, order)


def abelianization(pres: GroupPresentation) -> HomologyReport:
    """``H_1`` of a presented group from the SNF of its exponent-sum matrix."""
    rows = pres.exponent_sums()
    k = pres.num_generators
    if not rows:
        return HomologyReport(k, (), 1)
    res = smith_normal_form(rows)
    return _report_from_snf(res.diagonal, res.rank, k - res.rank)


def homology_from_matrix(M: IntMatrix) -> HomologyReport:
    """``H_1 = Z + coker(M - I)`` read off the SNF of ``M - I``."""
    res = smith_normal_form(M.sub_scalar(1))
    return _report_from_snf(res.diagonal, res.rank, 1 + M.dim - res.rank)


# ---------------------------------------------------------------------------
# descriptor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MappingTorus:
    fiber_dim: int
    monodromy: IntMatrix


@dataclass(frozen=True)
class Flags:
    kahler: str
    kodaira: str
    lck: str
    ot_homeomorphic: str
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kahler": self.kahler, "kodaira": self.kodaira, "lck": self.lck,
                "ot_homeomorphic": self.ot_homeomorphic, "details": dict(self.details)}


def derive_flags(cert: TypeICertificate, diag: DiagonalizabilityCertificate) -> Flags:
    """Flags as a function of the two certificates only."""
    nondiag = not diag.diagonalizable
    if nondiag:
        lck = "OBSTRUCTED"
    elif cert.n == 1:
        lck = "EXISTS-BY-TRICERRI"
    else:
        lck = "UNKNOWN"
    details = {
        "kahler": "no Kahler structure on T_M^l for every l >= 1; b1 = 1 settles odd l",
        "kahler_powers_route": "non-diagonalizable monodromy" if nondiag else "stated for all l",
        "kodaira": "no sections of positive powers of the canonical bundle",
        "lck": {"OBSTRUCTED": "M is not diagonalizable",
                "EXISTS-BY-TRICERRI": "n = 1 is an Inoue surface; existence is a cited classical result",
                "UNKNOWN": "diagonalizable M with n > 1: neither obstruction nor construction available"}[lck],
        "ot_homeomorphic": ("pi_1 is not a semidirect product of diagonal type" if nondiag
                            else "not excluded by the fundamental group"),
    }
    return Flags("NO", "-inf", lck, "EXCLUDED" if nondiag else "POSSIBLE", details)


@dataclass(frozen=True)
class InoueDescriptor:
    matrix: IntMatrix
    certificate: TypeICertificate
    diagonalizability: DiagonalizabilityCertificate
    presentation: GroupPresentation
    homology: HomologyReport
    homology_from_presentation: HomologyReport
    mapping_torus: MappingTorus
    flags: Flags
    eigen: EigenData
    bits: int

    @property
    def n(self) -> int:
        return self.certificate.n

    @property
    def b1(self) -> int:
        return self.homology.b1


def build_descriptor(M: IntMatrix, bits: int = 128, cert: TypeICertificate | None = None) -> InoueDescriptor:
    """Everything about ``T_M``; raises :class:`Rejection` if ``M`` is not type I."""
    if cert is None:
        cert = check_type_I(M, bits)
    diag = is_diagonalizable(M)
    pres = presentation(M)
    h = homology_from_matrix(M)
    h2 = abelianization(pres)
    if h != h2:
        raise InternalInconsistency(f"H_1 routes disagree: {h} vs {h2}")
    if h.b1 != 1:
        raise InternalInconsistency(f"b1 = {h.b1} for a type-I matrix")
    ed = eigen_data(M, cert, bits)
    return InoueDescriptor(M, cert, diag, pres, h, h2, MappingTorus(M.dim, M.T), derive_flags(cert, diag), ed, bits)


# ---------------------------------------------------------------------------
# the action on H x C^n
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ActionPoint:
    w: ComplexInterval
    z: tuple

    def __post_init__(self):
        if not self.w.im.lo > 0:
            raise PrecisionError("Im(w) enclosure does not exclude values <= 0")

    @classmethod
    def make(cls, w, z=()) -> "ActionPoint":
        return cls(ComplexInterval.coerce(w), tuple(ComplexInterval.coerce(x) for x in z))

    def overlaps(self, other: "ActionPoint") -> bool:
        return self.w.overlaps(other.w) and all(x.overlaps(y) for x, y in zip(self.z, other.z))

    def contains(self, other: "ActionPoint") -> bool:
        return self.w.contains(other.w) and all(x.contains(y) for x, y in zip(self.z, other.z))

    @property
    def width(self) -> Fraction:
        return max([self.w.width] + [x.width for x in self.z])


def _matvec(C, z, transpose: bool):
    n = len(z)
    out = []
    for j in range(n):
        acc = ComplexInterval(0)
        for k in range(n):
            c = C[k][j] if transpose else C[j][k]
            acc = acc + c * z[k]
        out.append(acc)
    return tuple(out)


def apply_generator(desc: InoueDescriptor | EigenData, i: int, p: ActionPoint, inverse: bool = False) -> ActionPoint:
    """Image of ``p`` under ``g_i`` (or its inverse), enclosure-valued."""
    ed = desc.eigen if isinstance(desc, InoueDescriptor) else desc
    N = ed.dim
    if len(p.z) != ed.n:
        raise ValueError(f"point has {len(p.z)} z-coordinates, expected {ed.n}")
    if i == 0:
        if inverse:
            return ActionPoint(p.w / ed.alpha, _matvec(ed.R_inv, p.z, True))
        return ActionPoint(p.w * ed.alpha, _matvec(ed.R, p.z, True))
    if not 1 <= i <= N:
        raise ValueError(f"generator index {i} out of range 0..{N}")
    row = ed.v[i - 1]
    s = -1 if inverse else 1
    w = p.w + row[0] * s
    z = tuple(zj + bj * s for zj, bj in zip(p.z, row[1:]))
    return ActionPoint(w, z)


def parse_word(text: str) -> Word:
    """Parse ``"0 1 -2 3^4"``: bare indices, ``-k`` for an inverse, ``k^e`` for a power."""
    out = []
    for col, tok in enumerate(text.replace(",", " ").split()):
        try:
            if "^" in tok:
                g, e = tok.split("^")
                out.append((int(g.lstrip("g")), int(e)))
            elif tok.startswith("-"):
                out.append((int(tok[1:].lstrip("g")), -1))
            else:
                out.append((int(tok.lstrip("g")), 1))
        except ValueError:
            raise InputFormatError(f"bad word token {tok!r} (token {col + 1})") from None
    return tuple(out)


def evaluate_word(desc, word: Word, p: ActionPoint) -> ActionPoint:
    """Apply a word; the rightmost letter acts first."""
    for g, e in reversed(tuple(word)):
        for _ in range(abs(e)):
            p = apply_generator(desc, g, p, inverse=e < 0)
    return p


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    lhs: ActionPoint
    rhs: ActionPoint

    @property
    def ok(self) -> bool:
        return self.lhs.overlaps(self.rhs)


def check_relation(desc, rel: Relation, p: ActionPoint) -> RelationCheck:
    """Evaluate both sides at ``p``; they must overlap if the relation holds."""
    return RelationCheck(rel, evaluate_word(desc, rel.lhs, p), evaluate_word(desc, rel.rhs, p))


def check_all_relations(desc: InoueDescriptor, p: ActionPoint) -> list[RelationCheck]:
    return [check_relation(desc, rel, p) for rel in desc.presentation.relations]


@dataclass(frozen=True)
class SemidirectData:
    action_matrix: IntMatrix
    rank: int
    semidirect_type: str
    mapping_torus: MappingTorus

    def describe(self) -> str:
        return (f"Z acting on Z^{self.rank} by t.v = A v with A = M^T; "
                f"this is pi_1 of the mapping torus of A on the {self.rank}-torus")


def semidirect_data(M: IntMatrix) -> SemidirectData:
    from .classify import semidirect_type

    A = M.T
    return SemidirectData(A, M.dim, semidirect_type(A), MappingTorus(M.dim, A))
