"""
Codilations, codilators, Douglas extensions and pushouts of isometries.

A codilation of f: X → Y is a cospan of isometries s1: X → T, s2: Y → T
with adjoint(s2)·s1 = f. Every jointly epic codilation constructed here is
re-verified before it is returned, and mediating isometries are computed
along two independent solve paths that must agree.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from starcat.category import (
    WMorphism,
    WObject,
    adjoint,
    block,
    compose,
    copair,
    identity,
    pair,
    zero_morphism,
)
from starcat.errors import (
    NotContractionError,
    NotIsometryError,
    NotPartialIsometryError,
    NotSameSubjectError,
    NotStrictContractionError,
    PreconditionFailedError,
    ShapeMismatchError,
    VerificationError,
)
from starcat.factorizations import (
    classify,
    orthogonal_complement,
    range_factorization,
    rank,
    solve_extension,
    try_inverse,
)
from starcat.order import (
    defect,
    is_contraction,
    is_strict_contraction,
    le,
    positive_part_factor,
)

logger = logging.getLogger(__name__)


class CodilatorKind(str, Enum):
    """Which construction produced a codilator."""

    DOUGLIAN_JOINT_EPI = "douglian_joint_epi"
    STRICT_COPRODUCT = "strict_coproduct"
    PARTIAL_ISOMETRY_PUSHOUT = "partial_isometry_pushout"


@dataclass(frozen=True)
class Codilation:
    """
    Isometries s1: X → apex and s2: Y → apex with adjoint(s2)·s1 = subject.
    """

    s1: WMorphism
    s2: WMorphism
    subject: WMorphism

    @property
    def apex(self) -> WObject:
        return self.s1.cod

    def copair(self) -> WMorphism:
        """The block [s1 s2]: X ⊕ Y → apex."""
        return copair(self.s1, self.s2)


@dataclass(frozen=True)
class CodilatorCertificate:
    codilation: Codilation
    kind: CodilatorKind


def _is_isometry(f: WMorphism) -> bool:
    return compose(adjoint(f), f) == identity(f.dom)


def is_codilation(s1: WMorphism, s2: WMorphism, f: WMorphism) -> bool:
    """True iff (s1, s2) are isometries into one apex with s2*·s1 = f."""
    if s1.dom != f.dom or s2.dom != f.cod or s1.cod != s2.cod:
        return False
    if not (_is_isometry(s1) and _is_isometry(s2)):
        return False
    return compose(adjoint(s2), s1) == f


def gram_identity_holds(c: Codilation) -> bool:
    """[s1 s2]*·[s1 s2] equals the block [[1, f*], [f, 1]]."""
    f = c.subject
    expected = block(
        [
            [identity(f.dom), adjoint(f)],
            [f, identity(f.cod)],
        ]
    )
    total = c.copair()
    return compose(adjoint(total), total) == expected


def jointly_epic(c: Codilation) -> bool:
    return rank(c.copair()) == c.apex.dim


def _certify(
    s1: WMorphism, s2: WMorphism, f: WMorphism, kind: CodilatorKind
) -> CodilatorCertificate:
    codilation = Codilation(s1, s2, f)
    if not is_codilation(s1, s2, f):
        raise VerificationError(f"{kind.value} construction is no codilation")
    if not jointly_epic(codilation):
        raise VerificationError(f"{kind.value} legs are not jointly epic")
    logger.debug(
        "%s codilator with apex dimension %d", kind.value, s1.cod.dim
    )
    return CodilatorCertificate(codilation, kind)


def _defect_legs(f: WMorphism) -> tuple[WMorphism, WMorphism]:
    """Legs pair(f, G) and i1 into Y ⊕ D, where G*G = 1 − f*f."""
    g = positive_part_factor(defect(f))
    s1 = pair(f, g)
    s2 = pair(identity(f.cod), zero_morphism(f.cod, g.cod))
    return s1, s2


def codilator(f: WMorphism) -> CodilatorCertificate:
    """
    A jointly epic, hence minimal, codilation of a contraction.

    Example:
        ```python
        # f = 1/2 on (1,(1)) over Q
        cert = codilator(f)
        # apex (2,(1, 4/3)), s1 = [1/2; 1], s2 = [1; 0]
        ```

    Raises:
        NotContractionError: If adjoint(f)·f ≤ 1 fails
    """
    if not is_contraction(f):
        raise NotContractionError("f is not a contraction: f*f ≤ 1 fails")
    s1, s2 = _defect_legs(f)
    return _certify(s1, s2, f, CodilatorKind.DOUGLIAN_JOINT_EPI)


def codilator_strict(f: WMorphism) -> CodilatorCertificate:
    """
    A codilator of a strict contraction whose legs form a coproduct.

    Raises:
        NotStrictContractionError: If adjoint(f)·f ≺ 1 fails
    """
    if not is_strict_contraction(f):
        raise NotStrictContractionError(
            "f is not a strict contraction: 1 − f*f is not invertible "
            "and positive"
        )
    s1, s2 = _defect_legs(f)
    cert = _certify(s1, s2, f, CodilatorKind.STRICT_COPRODUCT)
    if try_inverse(cert.codilation.copair()) is None:
        raise VerificationError("strict codilator legs are not a coproduct")
    return cert


# ============================================================================
# Pushouts of isometries
# ============================================================================


@dataclass(frozen=True)
class PushoutSquare:
    """
    The pushout of isometries s: A → X and t: A → Y.

    The apex is (X ⊖ A) ⊕ A ⊕ (Y ⊖ A) with legs
    x_leg = [s⊥*; s*; 0] and y_leg = [0; t*; t⊥*].
    """

    s: WMorphism
    t: WMorphism
    s_perp: WMorphism
    t_perp: WMorphism
    x_leg: WMorphism
    y_leg: WMorphism

    @property
    def apex(self) -> WObject:
        return self.x_leg.cod

    def commutes(self) -> bool:
        return compose(self.x_leg, self.s) == compose(self.y_leg, self.t)


def pushout_of_isometries(s: WMorphism, t: WMorphism) -> PushoutSquare:
    """
    Raises:
        ShapeMismatchError: If s and t do not share a domain
        NotIsometryError: If s or t is not an isometry
    """
    if s.dom != t.dom:
        raise ShapeMismatchError("pushout needs isometries from one object")
    for name, leg in (("s", s), ("t", t)):
        if not _is_isometry(leg):
            raise NotIsometryError(f"{name} is not an isometry")
    s_perp = orthogonal_complement(s)
    t_perp = orthogonal_complement(t)
    x_leg = pair(adjoint(s_perp), adjoint(s), zero_morphism(s.cod, t_perp.dom))
    y_leg = pair(zero_morphism(t.cod, s_perp.dom), adjoint(t), adjoint(t_perp))
    return PushoutSquare(s, t, s_perp, t_perp, x_leg, y_leg)


def pushout_mediator(
    square: PushoutSquare, g_x: WMorphism, g_y: WMorphism
) -> WMorphism:
    """
    The unique morphism [g_x·s⊥  g_x·s  g_y·t⊥] out of the apex.

    Raises:
        PreconditionFailedError: If g_x·s != g_y·t
    """
    if compose(g_x, square.s) != compose(g_y, square.t):
        raise PreconditionFailedError("cocone does not commute")
    return copair(
        compose(g_x, square.s_perp),
        compose(g_x, square.s),
        compose(g_y, square.t_perp),
    )


def codilator_partial_isometry(f: WMorphism) -> CodilatorCertificate:
    """
    The codilator of a partial isometry f = t·s* as a pushout of s and t.

    The isometries come from the range factorization f = j·u·e: t = j and
    s = adjoint(u·e).

    Raises:
        NotPartialIsometryError: If f·f*·f != f
    """
    if not classify(f).partial_isometry:
        raise NotPartialIsometryError("f·f*·f != f")
    rf = range_factorization(f)
    s = adjoint(compose(rf.u, rf.e))
    if not _is_isometry(s):
        raise VerificationError("coimage factor of f is not an isometry")
    square = pushout_of_isometries(s, rf.j)
    return _certify(
        square.x_leg,
        square.y_leg,
        f,
        CodilatorKind.PARTIAL_ISOMETRY_PUSHOUT,
    )


# ============================================================================
# Mediating isometries and Douglas extensions
# ============================================================================


def second_solve(target: WMorphism, e: WMorphism) -> WMorphism:
    """
    Solve h·e = target through the right inverse e*·(e·e*)^{-1}.

    Raises:
        PreconditionFailedError: If e is not epic
    """
    e_star = adjoint(e)
    inverse = try_inverse(compose(e, e_star))
    if inverse is None:
        raise PreconditionFailedError("second solve path needs an epic e")
    return compose(target, compose(e_star, inverse))


def mediating_isometry(
    cert: CodilatorCertificate, other: Codilation
) -> WMorphism:
    """
    The unique isometry h with h·s1 = t1 and h·s2 = t2.

    Raises:
        NotSameSubjectError: If the codilations dilate different morphisms
        NoSolutionError: If no mediating morphism exists
        VerificationError: If the two solve paths disagree or h is not
            isometric
    """
    ours = cert.codilation
    if ours.subject != other.subject:
        raise NotSameSubjectError("codilations of different morphisms")
    source, target = ours.copair(), other.copair()
    extension = solve_extension(target, source)
    if extension.h != second_solve(target, source):
        raise VerificationError("mediating solve paths disagree")
    if not _is_isometry(extension.h):
        raise VerificationError("mediating morphism is not an isometry")
    return extension.h


def douglas_extension(f: WMorphism, g: WMorphism) -> WMorphism:
    """
    A contractive h with h·f = g and kernel containing (Ran f)⊥.

    With f = i·r and g = j·s range-factored (r = u·e, s likewise), solves
    t·r = s and returns h = j·t·i*.

    Raises:
        PreconditionFailedError: If dom(f) != dom(g) or g*g ≤ f*f fails
    """
    if f.dom != g.dom:
        raise PreconditionFailedError("f and g need a common domain")
    if not le(compose(adjoint(g), g), compose(adjoint(f), f)):
        raise PreconditionFailedError("adjoint(g)·g ≤ adjoint(f)·f fails")
    rf, rg = range_factorization(f), range_factorization(g)
    r = compose(rf.u, rf.e)
    s = compose(rg.u, rg.e)
    t = solve_extension(s, r).h
    return compose(rg.j, compose(t, adjoint(rf.j)))
