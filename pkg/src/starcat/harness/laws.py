"""
The law suite: every algebraic property the engine promises, checked on
sampled instances.

A law is a function of a Sampler that raises LawViolation with the
offending morphisms as witnesses. Laws are registered by name with the
@law decorator; a law restricted to some rings is skipped on the others.
Engine errors raised while checking a law count as failures too.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from starcat.category import (
    WMorphism,
    WObject,
    adjoint,
    adjoint_by_parseval,
    biproduct,
    block,
    compose,
    copair,
    diagonal,
    identity,
    injections,
    inner_product,
    negate,
    rational_scale,
    sum_via_biproduct,
    zero_morphism,
    zero_object,
)
from starcat.dilation import (
    Codilation,
    CodilatorCertificate,
    codilator,
    codilator_partial_isometry,
    codilator_strict,
    douglas_extension,
    gram_identity_holds,
    is_codilation,
    mediating_isometry,
    pushout_mediator,
    pushout_of_isometries,
)
from starcat.errors import SingularError
from starcat.factorizations import (
    canonical_retraction,
    classify,
    cokernel,
    equalizer,
    factors_through,
    is_kernel_of,
    kernel,
    lift,
    orthogonal_complement,
    pushout,
    range_factorization,
    solve_extension,
    try_inverse,
)
from starcat.gram_schmidt import (
    GramMatrix,
    WideCospan,
    conjugate_gram,
    gram_schmidt,
    is_split,
    orthogonalize_gram,
    same_subobject,
)
from starcat.harness.generators import Sampler
from starcat.order import (
    bounded_transform,
    defect,
    invert,
    is_contraction,
    is_positive_endo,
    is_strict_contraction,
    is_strictly_positive,
    le,
    schur_inverse,
    shrink,
)
from starcat.scalars import (
    RatFun,
    RingId,
    Scalar,
    hermitian_sqrt_search,
    is_positive_scalar,
    one,
)

LawCheck = Callable[[Sampler], None]


@dataclass(frozen=True)
class Law:
    name: str
    check: LawCheck
    rings: Optional[frozenset[RingId]]
    description: str

    def applies_to(self, ring: RingId) -> bool:
        return self.rings is None or ring in self.rings


LAWS: dict[str, Law] = {}


def law(
    name: str, rings: Optional[Iterable[RingId]] = None
) -> Callable[[LawCheck], LawCheck]:
    """
    Register a law under name.

    Example:
        ```python
        @law("involution_composition")
        def involution_composition(s: Sampler) -> None:
            ...
        ```
    """

    def register(check: LawCheck) -> LawCheck:
        if name in LAWS:
            raise ValueError(f"law {name!r} is already registered")
        doc = (check.__doc__ or name).strip().splitlines()[0]
        LAWS[name] = Law(
            name=name,
            check=check,
            rings=None if rings is None else frozenset(rings),
            description=doc,
        )
        return check

    return register


def laws_for(ring: RingId, names: Optional[Iterable[str]] = None) -> list[Law]:
    """
    The registered laws that apply to ring, in registration order.

    Raises:
        KeyError: If a requested name is not registered
    """
    if names is None:
        return [entry for entry in LAWS.values() if entry.applies_to(ring)]
    selected = [LAWS[name] for name in names]
    return [entry for entry in selected if entry.applies_to(ring)]


class LawViolation(Exception):
    """A law failed; witnesses are the morphisms that exhibit it."""

    def __init__(self, message: str, witnesses: dict[str, WMorphism]):
        super().__init__(message)
        self.witnesses = witnesses


def expect(condition: bool, message: str, **witnesses: WMorphism) -> None:
    if not condition:
        raise LawViolation(message, witnesses)


def _as_morphism(a: Scalar) -> WMorphism:
    """A scalar as a 1×1 morphism on the unweighted line."""
    line = WObject.unweighted(a.ring, 1)
    return WMorphism(line, line, ((a,),))


def _is_isometry(f: WMorphism) -> bool:
    return compose(adjoint(f), f) == identity(f.dom)


def _delta(i: int, j: int, f: WMorphism) -> bool:
    return f == identity(f.dom) if i == j else f.is_zero()


def _isometry_from(s: Sampler, A: WObject) -> WMorphism:
    """An isometry out of A with random codomain weights."""
    i = injections(A, s.obj(s.dim(high=2)))[0]
    return compose(adjoint(s.unitary(i.cod)), i)


# ============================================================================
# Scalars
# ============================================================================


@law("scalar_involution")
def scalar_involution(s: Sampler) -> None:
    """The involution is additive, anti-multiplicative and of order two."""
    a, b = s.scalar(), s.scalar()
    A, B = _as_morphism(a), _as_morphism(b)
    expect((a * b).star() == b.star() * a.star(), "(ab)* != b*a*", a=A, b=B)
    expect((a + b).star() == a.star() + b.star(), "(a+b)* != a*+b*", a=A, b=B)
    expect(a.star().star() == a, "a** != a", a=A)
    expect(one(s.ring).star() == one(s.ring), "1* != 1")


@law("scalar_anisotropy")
def scalar_anisotropy(s: Sampler) -> None:
    """a*a = 0 only for a = 0."""
    a = s.nonzero_scalar()
    expect(not a.norm().is_zero, "a*a = 0 for nonzero a", a=_as_morphism(a))


@law("scalar_cone")
def scalar_cone(s: Sampler) -> None:
    """Norms are positive and the cone is closed under sums and r*·p·r."""
    a, b, r = s.scalar(), s.scalar(), s.scalar()
    witnesses = {
        "a": _as_morphism(a),
        "b": _as_morphism(b),
        "r": _as_morphism(r),
    }
    for value in (a.norm(), a.norm() + b.norm(), r.star() * a.norm() * r):
        expect(value.is_hermitian(), "not Hermitian", **witnesses)
        expect(is_positive_scalar(value), "not positive", **witnesses)


@law("scalar_total_order")
def scalar_total_order(s: Sampler) -> None:
    """Exactly one of h = 0, h > 0, −h > 0 holds for Hermitian h."""
    a, b = s.scalar(), s.scalar()
    h = a + a.star() + (b.norm() - a.norm())
    nonzero = not h.is_zero
    outcomes = [
        h.is_zero,
        nonzero and is_positive_scalar(h),
        nonzero and is_positive_scalar(-h),
    ]
    expect(
        outcomes.count(True) == 1,
        f"trichotomy fails for {h}: {outcomes}",
        a=_as_morphism(a),
        b=_as_morphism(b),
    )


@law("ratfun_square_roots", rings=[RingId.RATFUN])
def ratfun_square_roots(s: Sampler) -> None:
    """−X² is positive without a Hermitian square root; squares have one."""
    x = RatFun.variable()
    m = -(x * x)
    expect(is_positive_scalar(m), "−X² is not positive")
    expect(not is_positive_scalar(x * x), "X² is positive")
    expect(hermitian_sqrt_search(m) is None, "−X² has a square root")
    coefficient = Fraction(s.rng.randint(1, 4), s.rng.randint(1, 4))
    root = RatFun.monomial(coefficient, 2 * s.rng.randint(-1, 1))
    square = root * root
    found = hermitian_sqrt_search(square)
    expect(
        found is not None and found * found == square,
        "no square root found for a square",
        square=_as_morphism(square),
    )


# ============================================================================
# Objects, morphisms and the involution
# ============================================================================


@law("involution_composition")
def involution_composition(s: Sampler) -> None:
    """(g·f)* = f*·g*."""
    X, Y, Z = s.obj(), s.obj(), s.obj()
    f, g = s.matrix(X, Y), s.matrix(Y, Z)
    expect(
        adjoint(compose(g, f)) == compose(adjoint(f), adjoint(g)),
        "(gf)* != f*g*",
        f=f,
        g=g,
    )


@law("involution_order_two")
def involution_order_two(s: Sampler) -> None:
    """f** = f and 1* = 1."""
    f = s.morphism()
    expect(adjoint(adjoint(f)) == f, "f** != f", f=f)
    one_x = identity(f.dom)
    expect(adjoint(one_x) == one_x, "1* != 1", identity=one_x)


@law("involution_additive")
def involution_additive(s: Sampler) -> None:
    """(f + g)* = f* + g*."""
    X, Y = s.obj(), s.obj()
    f, g = s.matrix(X, Y), s.matrix(X, Y)
    expect(
        adjoint(f + g) == adjoint(f) + adjoint(g),
        "(f+g)* != f*+g*",
        f=f,
        g=g,
    )


@law("adjoint_inner_product")
def adjoint_inner_product(s: Sampler) -> None:
    """⟨f*·y, x⟩ = ⟨y, f·x⟩ in the weighted inner products."""
    f = s.morphism()
    x, y = s.column(f.dom), s.column(f.cod)
    lhs = inner_product(adjoint(f).apply(y), x, f.dom)
    rhs = inner_product(y, f.apply(x), f.cod)
    expect(lhs == rhs, f"⟨f*y, x⟩ = {lhs} but ⟨y, fx⟩ = {rhs}", f=f)


@law("inner_product_hermitian")
def inner_product_hermitian(s: Sampler) -> None:
    """⟨x, y⟩* = ⟨y, x⟩ and ⟨x, x⟩ is positive, zero only at x = 0."""
    X = s.obj()
    x, y = s.column(X), s.column(X)
    expect(
        inner_product(x, y, X).star() == inner_product(y, x, X),
        "⟨x,y⟩* != ⟨y,x⟩",
    )
    norm = inner_product(x, x, X)
    expect(is_positive_scalar(norm), "⟨x,x⟩ is not positive")
    expect(
        norm.is_zero == all(entry.is_zero for entry in x),
        "⟨x,x⟩ vanishes off zero",
    )


@law("parseval_oracle")
def parseval_oracle(s: Sampler) -> None:
    """The weighted adjoint agrees with the Parseval formula."""
    f = s.morphism()
    expect(
        adjoint(f) == adjoint_by_parseval(f), "adjoint formulas differ", f=f
    )


@law("orthonormal_biproducts")
def orthonormal_biproducts(s: Sampler) -> None:
    """p_k = i_k*, p_k·i_j = δ_kj and i1·p1 + i2·p2 = 1."""
    X, Y = s.obj(), s.obj()
    b = biproduct(X, Y)
    expect(b.p1 == adjoint(b.i1), "p1 != i1*", i1=b.i1)
    expect(b.p2 == adjoint(b.i2), "p2 != i2*", i2=b.i2)
    expect(compose(b.p1, b.i1) == identity(X), "p1·i1 != 1", i1=b.i1)
    expect(compose(b.p2, b.i2) == identity(Y), "p2·i2 != 1", i2=b.i2)
    expect(compose(b.p2, b.i1).is_zero(), "p2·i1 != 0", i1=b.i1)
    expect(compose(b.p1, b.i2).is_zero(), "p1·i2 != 0", i2=b.i2)
    total = compose(b.i1, b.p1) + compose(b.i2, b.p2)
    expect(total == identity(b.apex), "i1p1 + i2p2 != 1", i1=b.i1, i2=b.i2)


@law("sum_via_biproduct")
def sum_via_biproduct_law(s: Sampler) -> None:
    """f + g equals codiagonal·(f ⊕ g)·diagonal."""
    X, Y = s.obj(), s.obj()
    f, g = s.matrix(X, Y), s.matrix(X, Y)
    expect(f + g == sum_via_biproduct(f, g), "sum formula fails", f=f, g=g)


@law("matrix_anisotropy")
def matrix_anisotropy(s: Sampler) -> None:
    """f*·f = 0 only for f = 0."""
    f = s.morphism()
    expect(
        compose(adjoint(f), f).is_zero() == f.is_zero(),
        "f*f = 0 for nonzero f",
        f=f,
    )


@law("orthogonal_block_adjoint")
def orthogonal_block_adjoint(s: Sampler) -> None:
    """Blocks of f* against orthogonal legs are adjoints of blocks of f."""
    X, Y = s.obj(s.dim(low=1)), s.obj(s.dim(low=1))
    f = s.matrix(X, Y)
    xs = gram_schmidt(s.split_cospan(X, coproduct=True)).legs
    ys = gram_schmidt(s.split_cospan(Y, coproduct=True)).legs
    for sj in xs:
        rj = canonical_retraction(sj)
        gram_j = compose(adjoint(sj), sj)
        for tk in ys:
            qk = canonical_retraction(tk)
            lhs = compose(rj, compose(adjoint(f), tk))
            rhs = compose(
                invert(gram_j),
                compose(
                    adjoint(compose(qk, compose(f, sj))),
                    compose(adjoint(tk), tk),
                ),
            )
            expect(lhs == rhs, "block adjoint formula fails", f=f, s=sj, t=tk)


@law("rational_linearity")
def rational_linearity(s: Sampler) -> None:
    """Composition and the involution are Q-linear."""
    X, Y, Z = s.obj(), s.obj(), s.obj()
    f, g = s.matrix(X, Y), s.matrix(Y, Z)
    q = s.rational()
    scaled = rational_scale(compose(g, f), q)
    expect(
        scaled == compose(rational_scale(g, q), f)
        and scaled == compose(g, rational_scale(f, q)),
        f"composition is not linear in {q}",
        f=f,
        g=g,
    )
    expect(
        adjoint(rational_scale(f, q)) == rational_scale(adjoint(f), q),
        f"involution is not linear in {q}",
        f=f,
    )


# ============================================================================
# Kernels, complements and factorizations
# ============================================================================


@law("kernel_universal")
def kernel_universal(s: Sampler) -> None:
    """kernel(f) is an isometry killed by f through which f-null maps lift."""
    f = s.morphism()
    k = kernel(f)
    expect(compose(f, k).is_zero(), "f·kernel(f) != 0", f=f, k=k)
    expect(_is_isometry(k), "kernel is not isometric", f=f, k=k)
    expect(is_kernel_of(k, f), "kernel is not universal", f=f, k=k)
    h = s.matrix(s.obj(), k.dom)
    g = compose(k, h)
    expect(lift(g, k) == h, "lift through the kernel is not unique", f=f, g=g)


@law("cokernel_coisometry")
def cokernel_coisometry(s: Sampler) -> None:
    """cokernel(f) kills f and is a coisometry."""
    f = s.morphism()
    c = cokernel(f)
    expect(compose(c, f).is_zero(), "cokernel(f)·f != 0", f=f, c=c)
    expect(
        compose(c, adjoint(c)) == identity(c.cod),
        "cokernel is not a coisometry",
        f=f,
        c=c,
    )


@law("complement_splitting")
def complement_splitting(s: Sampler) -> None:
    """[s s⊥] is unitary and s·s* + s⊥·s⊥* = 1."""
    m = s.isometry()
    p = orthogonal_complement(m)
    expect(classify(copair(m, p)).unitary, "[s s⊥] is not unitary", s=m, p=p)
    total = compose(m, adjoint(m)) + compose(p, adjoint(p))
    expect(total == identity(m.cod), "projections do not add to 1", s=m)


@law("canonical_retraction")
def canonical_retraction_law(s: Sampler) -> None:
    """(s*s)^{-1}s* retracts s, and s·r is Hermitian."""
    m = s.mono(s.obj())
    r = canonical_retraction(m)
    expect(compose(r, m) == identity(m.dom), "r·s != 1", s=m)
    p = compose(m, r)
    expect(adjoint(p) == p, "s·r is not Hermitian", s=m)


@law("orthogonal_coproduct_extension")
def orthogonal_coproduct_extension(s: Sampler) -> None:
    """Orthogonal coproduct legs retract with r_j·t_k = δ_jk, Σ t_k·r_k = 1."""
    legs = gram_schmidt(s.split_cospan(coproduct=True)).legs
    retractions = [canonical_retraction(t) for t in legs]
    for j, rj in enumerate(retractions):
        for k, tk in enumerate(legs):
            expect(
                _delta(j, k, compose(rj, tk)),
                f"r_{j}·t_{k} is not δ",
                t_j=legs[j],
                t_k=tk,
            )
    apex = legs[0].cod
    total = zero_morphism(apex, apex)
    for t, r in zip(legs, retractions):
        total = total + compose(t, r)
    expect(total == identity(apex), "Σ t_k·r_k != 1", first=legs[0])


@law("complement_inequations")
def complement_inequations(s: Sampler) -> None:
    """m ≤ m⊥⊥ with equality, and ⊥ reverses inclusions."""
    X = s.obj()
    m2 = s.mono(X)
    m1 = compose(m2, s.mono(m2.dom))
    double = orthogonal_complement(orthogonal_complement(m2))
    expect(same_subobject(m2, double), "m⊥⊥ != m", m=m2)
    expect(
        factors_through(orthogonal_complement(m2), orthogonal_complement(m1)),
        "m1 ≤ m2 but m2⊥ ≰ m1⊥",
        m1=m1,
        m2=m2,
    )


@law("range_factorization")
def range_factorization_law(s: Sampler) -> None:
    """f = j·u·e with j isometric, u invertible and e coisometric."""
    f = s.morphism()
    rf = range_factorization(f)
    expect(rf.recompose() == f, "j·u·e != f", f=f)
    expect(_is_isometry(rf.j), "j is not an isometry", f=f, j=rf.j)
    expect(
        compose(rf.e, adjoint(rf.e)) == identity(rf.e.cod),
        "e is not a coisometry",
        f=f,
        e=rf.e,
    )
    expect(try_inverse(rf.u) is not None, "u is not invertible", f=f, u=rf.u)


@law("classify_implications")
def classify_implications(s: Sampler) -> None:
    """The classification flags respect their implications."""
    X = s.obj()
    candidates = {
        "f": s.morphism(),
        "isometry": s.isometry(),
        "partial_isometry": s.partial_isometry(),
        "unitary": s.unitary(X),
    }
    for name, f in candidates.items():
        c = classify(f)
        expect(
            c.mono == c.split_mono == c.closed_mono,
            f"mono flags disagree for {name}",
            f=f,
        )
        expect(not c.unitary or (c.isometry and c.coisometry), name, f=f)
        expect(not c.isometry or (c.mono and c.partial_isometry), name, f=f)
        expect(not c.coisometry or (c.epi and c.partial_isometry), name, f=f)
    expect(classify(candidates["isometry"]).isometry, "isometry flag unset")
    expect(
        classify(candidates["partial_isometry"]).partial_isometry,
        "partial isometry flag unset",
    )
    expect(classify(candidates["unitary"]).unitary, "unitary flag unset")


@law("abelian_objects")
def abelian_objects(s: Sampler) -> None:
    """With e the projector onto Δ⊥: 1 + p1·e·i2 + p2·e·i1 = 0."""
    X = s.obj()
    r = cokernel(diagonal(X))
    section = adjoint(r)
    expect(compose(r, section) == identity(r.cod), "r·r* != 1", r=r)
    e = compose(section, r)
    b = biproduct(X, X)
    total = (
        identity(X)
        + compose(b.p1, compose(e, b.i2))
        + compose(b.p2, compose(e, b.i1))
    )
    expect(total.is_zero(), "1 + p1ei2 + p2ei1 != 0", e=e)


@law("split_pushout_stability")
def split_pushout_stability(s: Sampler) -> None:
    """The pushout of a split mono commutes and its new leg is split."""
    X = s.obj()
    m = s.mono(X)
    a = s.matrix(m.dom, s.obj())
    square = pushout(m, a)
    expect(
        compose(square.x_leg, m) == compose(square.b_leg, a),
        "pushout square does not commute",
        s=m,
        a=a,
    )
    expect(
        compose(square.retraction, square.b_leg) == identity(a.cod),
        "pushed-out leg is not split",
        s=m,
        a=a,
    )


@law("solve_extension")
def solve_extension_law(s: Sampler) -> None:
    """h·f = g is solved exactly, uniquely when f is epic."""
    f = s.morphism()
    h = s.matrix(f.cod, s.obj())
    g = compose(h, f)
    ext = solve_extension(g, f)
    expect(compose(ext.h, f) == g, "h·f != g", f=f, g=g)
    if ext.unique:
        expect(ext.h == h, "unique extension differs", f=f, g=g)


# ============================================================================
# Gram–Schmidt
# ============================================================================


@law("gram_schmidt_postconditions")
def gram_schmidt_postconditions(s: Sampler) -> None:
    """Orthogonal closed legs spanning the same prefixes."""
    c = s.split_cospan()
    t = gram_schmidt(c)
    witnesses = {f"s{k}": leg for k, leg in enumerate(c.legs)}
    for j, tj in enumerate(t.legs):
        expect(
            try_inverse(compose(adjoint(tj), tj)) is not None,
            f"t_{j} is not a closed mono",
            **witnesses,
        )
        for k, tk in enumerate(t.legs):
            if j != k:
                expect(
                    compose(adjoint(tj), tk).is_zero(),
                    f"t_{j} and t_{k} are not orthogonal",
                    **witnesses,
                )
    for m in range(1, len(c.legs) + 1):
        expect(
            same_subobject(c.prefix(m), t.prefix(m)),
            f"prefix {m} spans a different subobject",
            **witnesses,
        )


@law("gram_schmidt_idempotent")
def gram_schmidt_idempotent(s: Sampler) -> None:
    """Orthogonalizing an orthogonal cospan changes nothing."""
    c = s.split_cospan()
    t = gram_schmidt(c)
    expect(gram_schmidt(t) == t, "not idempotent", s0=c.legs[0])


@law("gram_schmidt_coproduct")
def gram_schmidt_coproduct(s: Sampler) -> None:
    """A coproduct cospan orthogonalizes to a coproduct."""
    c = s.split_cospan(coproduct=True)
    t = gram_schmidt(c)
    expect(
        try_inverse(t.block()) is not None,
        "orthogonalized coproduct legs are not invertible together",
        block=c.block(),
    )


@law("is_split")
def is_split_law(s: Sampler) -> None:
    """Split cospans have joint retractions; repeated legs have none."""
    c = s.split_cospan()
    retractions = is_split(c)
    expect(retractions is not None, "split cospan not recognized")
    assert retractions is not None
    for k, rk in enumerate(retractions):
        for j, sj in enumerate(c.legs):
            expect(
                _delta(k, j, compose(rk, sj)),
                f"r_{k}·s_{j} is not δ",
                block=c.block(),
            )
    X = s.obj(s.dim(low=1))
    leg = s.mono(X, s.dim(low=1, high=X.dim))
    expect(
        is_split(WideCospan((leg, leg))) is None,
        "repeated leg counted as split",
        leg=leg,
    )


@law("orthogonalize_gram")
def orthogonalize_gram_law(s: Sampler) -> None:
    """The basis change diagonalizes the Gram matrix to inverse weights."""
    X = s.obj()
    m = s.mono(X)
    vectors = m.columns()
    G = GramMatrix(
        s.ring,
        tuple(
            tuple(inner_product(v, w, X) for w in vectors) for v in vectors
        ),
    )
    result = orthogonalize_gram(G)
    diagonal_form = conjugate_gram(G, result.basis_change)
    for i, row in enumerate(diagonal_form):
        for j, entry in enumerate(row):
            if i == j:
                expected = result.obj.weights[i].inverse()
                expect(entry == expected, f"norm {i} is {entry}", m=m)
            else:
                expect(entry.is_zero, f"entry ({i},{j}) is {entry}", m=m)


# ============================================================================
# Order and positivity
# ============================================================================


@law("positivity_certificates")
def positivity_certificates(s: Sampler) -> None:
    """Every verdict carries a certificate that re-verifies."""
    X = s.obj()
    for H in (s.hermitian(X), s.positive(X), -s.positive(X)):
        verdict = is_positive_endo(H)
        expect(verdict.verify(), "certificate does not re-verify", H=H)
        if verdict.factor is not None:
            G = verdict.factor
            expect(
                classify(G).epi, "positive factor is not epic", H=H, G=G
            )
    P = s.positive(X)
    expect(is_positive_endo(P).positive, "g*g judged not positive", H=P)


@law("order_axioms")
def order_axioms(s: Sampler) -> None:
    """0 ≤ 1, and a ≤ b survives congruence and adding c."""
    X, Y = s.obj(), s.obj()
    expect(le(zero_morphism(X, X), identity(X)), "0 ≰ 1")
    a = s.hermitian(X)
    b = a + s.positive(X)
    expect(le(a, b), "a ≰ a + p", a=a, b=b)
    r = s.matrix(Y, X)
    c = s.hermitian(Y)
    lhs = compose(adjoint(r), compose(a, r)) + c
    rhs = compose(adjoint(r), compose(b, r)) + c
    expect(le(lhs, rhs), "congruence breaks the order", a=a, b=b, r=r)


@law("order_antisymmetry")
def order_antisymmetry(s: Sampler) -> None:
    """a ≤ b and b ≤ a imply a = b."""
    X = s.obj()
    a = s.hermitian(X)
    p = s.positive(X) if s.rng.random() < 0.7 else zero_morphism(X, X)
    b = a + p
    expect(le(a, b), "a ≰ a + p", a=a, b=b)
    expect(le(b, a) == p.is_zero(), "antisymmetry fails", a=a, b=b)


@law("inverse_closure")
def inverse_closure(s: Sampler) -> None:
    """Inversion keeps strict positivity and reverses ≤."""
    X = s.obj()
    b = s.strictly_positive(X)
    a = b + s.positive(X)
    try:
        a_inv, b_inv = invert(a), invert(b)
    except SingularError:
        expect(False, "strictly positive endomorphism is singular", a=a, b=b)
        return
    expect(is_strictly_positive(a_inv), "a^{-1} is not ≻ 0", a=a)
    expect(le(a_inv, b_inv), "b ≤ a but b^{-1} ≱ a^{-1}", a=a, b=b)


@law("schur_identity")
def schur_identity(s: Sampler) -> None:
    """The Woodbury form equals (b − f·a^{-1}·f*)^{-1}."""
    X, Y = s.obj(), s.obj()
    a, b = s.strictly_positive(X), s.strictly_positive(Y)
    f = s.matrix(X, Y)
    complement = b - compose(f, compose(invert(a), adjoint(f)))
    try:
        lhs = schur_inverse(a, b, f)
    except SingularError:
        expect(
            try_inverse(complement) is None,
            "Woodbury path singular but the complement is not",
            a=a,
            b=b,
            f=f,
        )
        return
    expect(lhs == invert(complement), "Schur identity fails", a=a, b=b, f=f)


@law("contraction_closure")
def contraction_closure(s: Sampler) -> None:
    """Contractions compose and their adjoints are contractions."""
    f = s.contraction()
    g = s.contraction(dom=f.cod)
    expect(is_contraction(compose(g, f)), "g·f is not a contraction", f=f, g=g)
    expect(is_contraction(adjoint(f)), "f* is not a contraction", f=f)


@law("split_mono_contractions")
def split_mono_contractions(s: Sampler) -> None:
    """A mono retracted within contractions is an isometry."""
    m = s.isometry()
    expect(is_contraction(m), "isometry is not contractive", s=m)
    expect(is_contraction(adjoint(m)), "s* is not contractive", s=m)
    n = s.mono(s.obj())
    r = canonical_retraction(n)
    if is_contraction(n) and is_contraction(r):
        expect(_is_isometry(n), "contractive split mono is not isometric", s=n)


@law("positive_block_criterion")
def positive_block_criterion(s: Sampler) -> None:
    """[[1, f*], [f, 1]] ≥ 0 iff f is a contraction, ≻ 0 iff strict."""
    f = s.contraction() if s.rng.random() < 0.5 else s.morphism()
    X, Y = f.dom, f.cod
    M = block([[identity(X), adjoint(f)], [f, identity(Y)]])
    expect(
        is_positive_endo(M).positive == is_contraction(f),
        "block positivity disagrees with contractivity",
        f=f,
    )
    strict = is_strict_contraction(f)
    expect(
        is_strictly_positive(M) == strict,
        "block strict positivity disagrees with strictness",
        f=f,
    )
    if strict:
        D = invert(defect(f))
        inverse = block(
            [
                [D, negate(compose(D, adjoint(f)))],
                [
                    negate(compose(f, D)),
                    identity(Y) + compose(f, compose(D, adjoint(f))),
                ],
            ]
        )
        expect(
            compose(M, inverse) == identity(M.dom),
            "explicit block inverse is wrong",
            f=f,
        )


@law("bounded_transform")
def bounded_transform_law(s: Sampler) -> None:
    """f = c·d with c and d^{-1} contractions."""
    f = s.morphism()
    a = compose(adjoint(f), f) + s.positive(f.dom)
    bt = bounded_transform(f, a)
    expect(compose(bt.c, bt.d) == f, "c·d != f", f=f, a=a)
    expect(is_contraction(bt.c), "c is not a contraction", f=f, a=a)
    expect(is_contraction(invert(bt.d)), "d^{-1} is not contractive", f=f, a=a)


# ============================================================================
# Dilations
# ============================================================================


@law("codilation_gram_identity")
def codilation_gram_identity(s: Sampler) -> None:
    """Every codilator satisfies [s1 s2]*[s1 s2] = [[1, f*], [f, 1]]."""
    f = s.contraction()
    certs = [codilator(f)]
    g = s.partial_isometry()
    certs.append(codilator_partial_isometry(g))
    h = shrink(s.morphism())
    certs.append(codilator_strict(h))
    for cert in certs:
        c = cert.codilation
        expect(
            gram_identity_holds(c),
            f"{cert.kind.value} Gram identity fails",
            f=c.subject,
        )
        expect(
            is_codilation(c.s1, c.s2, c.subject),
            f"{cert.kind.value} is no codilation",
            f=c.subject,
        )


def _padded(c: Codilation, h0: WMorphism) -> Codilation:
    return Codilation(compose(h0, c.s1), compose(h0, c.s2), c.subject)


def _expect_mediates(
    cert: CodilatorCertificate, other: Codilation, label: str
) -> WMorphism:
    h = mediating_isometry(cert, other)
    ours = cert.codilation
    expect(
        _is_isometry(h)
        and compose(h, ours.s1) == other.s1
        and compose(h, ours.s2) == other.s2,
        f"{label} mediator is not an isometry commuting with both legs",
        f=ours.subject,
        t1=other.s1,
        t2=other.s2,
    )
    return h


@law("codilator_universality")
def codilator_universality(s: Sampler) -> None:
    """Each codilator maps into unitary images and other codilations."""
    f = s.contraction()
    g = shrink(s.morphism())
    p = s.partial_isometry()
    certs: list[tuple[CodilatorCertificate, Optional[Codilation]]] = [
        (codilator(f), None),
        (codilator_strict(g), codilator(g).codilation),
        (codilator_partial_isometry(p), codilator(p).codilation),
    ]
    for cert, alternative in certs:
        ours = cert.codilation
        label = cert.kind.value
        V = adjoint(s.unitary(ours.apex))
        pad = injections(V.cod, s.obj(s.dim(high=2)))[0]
        h0 = compose(pad, V)
        h = _expect_mediates(cert, _padded(ours, h0), label)
        expect(
            h == h0,
            f"{label} mediating isometry is not the expected one",
            f=ours.subject,
            h=h0,
        )
        if alternative is not None:
            widen = injections(alternative.apex, s.obj(s.dim(high=2)))[0]
            _expect_mediates(cert, _padded(alternative, widen), label)


@law("codilator_agreement")
def codilator_agreement(s: Sampler) -> None:
    """Different codilator constructions are related by unitaries."""
    pairs = []
    f = shrink(s.morphism())
    pairs.append((codilator(f), codilator_strict(f)))
    g = s.partial_isometry()
    pairs.append((codilator(g), codilator_partial_isometry(g)))
    for first, second in pairs:
        h12 = mediating_isometry(first, second.codilation)
        h21 = mediating_isometry(second, first.codilation)
        subject = first.codilation.subject
        expect(
            compose(h21, h12) == identity(h12.dom)
            and compose(h12, h21) == identity(h21.dom),
            f"{first.kind.value} and {second.kind.value} are not unitarily "
            "equivalent",
            f=subject,
        )


@law("degenerate_codilators")
def degenerate_codilators(s: Sampler) -> None:
    """0 dilates to (X ⊕ Y, i1, i2) and an isometry t to (Y, t, 1)."""
    X, Y = s.obj(), s.obj()
    zero = zero_morphism(X, Y)
    b = biproduct(X, Y)
    h = mediating_isometry(codilator(zero), Codilation(b.i1, b.i2, zero))
    expect(try_inverse(h) is not None, "zero codilator is not X ⊕ Y", X=b.i1)
    t = s.isometry()
    h = mediating_isometry(codilator(t), Codilation(t, identity(t.cod), t))
    expect(
        try_inverse(h) is not None, "isometry codilator is not (Y, t, 1)", t=t
    )


@law("pushout_of_isometries")
def pushout_of_isometries_law(s: Sampler) -> None:
    """The isometry pushout commutes and mediates every cocone uniquely."""
    m = s.isometry()
    t = _isometry_from(s, m.dom)
    square = pushout_of_isometries(m, t)
    expect(square.commutes(), "pushout does not commute", s=m, t=t)
    out = s.matrix(square.apex, s.obj())
    mediator = pushout_mediator(
        square, compose(out, square.x_leg), compose(out, square.y_leg)
    )
    expect(mediator == out, "pushout mediator is not unique", s=m, t=t)


@law("douglas_converse")
def douglas_converse(s: Sampler) -> None:
    """g = h·f with h contractive gives g*g ≤ f*f."""
    f = s.morphism()
    h = s.contraction(dom=f.cod)
    g = compose(h, f)
    expect(
        le(compose(adjoint(g), g), compose(adjoint(f), f)),
        "g*g ≰ f*f",
        f=f,
        h=h,
    )


@law("douglas_extension")
def douglas_extension_law(s: Sampler) -> None:
    """The extension is contractive, extends, and kills (Ran f)⊥."""
    f = s.morphism()
    g = compose(s.contraction(dom=f.cod), f)
    h = douglas_extension(f, g)
    expect(compose(h, f) == g, "h·f != g", f=f, g=g)
    expect(is_contraction(h), "extension is not contractive", f=f, g=g)
    off_range = orthogonal_complement(range_factorization(f).j)
    expect(
        compose(h, off_range).is_zero(),
        "extension does not vanish off Ran f",
        f=f,
        g=g,
    )
    t = _isometry_from(s, f.cod)
    g_iso = compose(t, f)
    h_iso = douglas_extension(f, g_iso)
    expect(
        classify(h_iso).partial_isometry,
        "equal-Gram extension is not a partial isometry",
        f=f,
        g=g_iso,
    )
    expect(
        same_subobject(
            range_factorization(h_iso).j, range_factorization(g_iso).j
        ),
        "extension range differs from Ran g",
        f=f,
        g=g_iso,
    )


# ============================================================================
# Generators and axioms
# ============================================================================


@law("generator_predicates")
def generator_predicates(s: Sampler) -> None:
    """Generated instances satisfy their defining predicates."""
    m = s.isometry()
    expect(classify(m).isometry, "generated isometry", s=m)
    X = s.obj()
    H = s.positive(X)
    expect(is_positive_endo(H).positive, "generated positive", H=H)
    f = s.contraction()
    expect(is_contraction(f), "generated contraction", f=f)
    c = s.split_cospan()
    expect(is_split(c) is not None, "generated split cospan", block=c.block())


@law("zero_object")
def zero_object_law(s: Sampler) -> None:
    """The zero object is initial and terminal."""
    O = zero_object(s.ring)
    X = s.obj()
    expect(s.matrix(X, O) == zero_morphism(X, O), "X → 0 is not unique")
    expect(s.matrix(O, X) == zero_morphism(O, X), "0 → X is not unique")
    expect(identity(O) == zero_morphism(O, O), "1_0 != 0")


@law("isometric_kernels")
def isometric_kernels(s: Sampler) -> None:
    """Every morphism has an isometric kernel."""
    f = s.morphism()
    k = kernel(f)
    expect(_is_isometry(k) and is_kernel_of(k, f), "no isometric kernel", f=f)


@law("diagonal_is_kernel")
def diagonal_is_kernel(s: Sampler) -> None:
    """Δ: X → X ⊕ X is a kernel of [1, −1]."""
    X = s.obj()
    delta = diagonal(X)
    difference = copair(identity(X), negate(identity(X)))
    expect(is_kernel_of(delta, difference), "Δ is not a kernel", X=delta)
    h = s.matrix(s.obj(), X)
    g = compose(delta, h)
    expect(lift(g, delta) == h, "Δ does not lift uniquely", g=g)


@law("isometric_equalizers")
def isometric_equalizers(s: Sampler) -> None:
    """Parallel pairs have isometric equalizers."""
    X, Y = s.obj(), s.obj()
    f, g = s.matrix(X, Y), s.matrix(X, Y)
    e = equalizer(f, g)
    expect(compose(f, e) == compose(g, e), "f·e != g·e", f=f, g=g)
    expect(_is_isometry(e), "equalizer is not isometric", f=f, g=g)
    expect(is_kernel_of(e, f - g), "equalizer is not universal", f=f, g=g)


@law("isometry_is_kernel")
def isometry_is_kernel(s: Sampler) -> None:
    """Every isometry m is a kernel of 1 − m·m*."""
    m = s.isometry()
    e = identity(m.cod) - compose(m, adjoint(m))
    expect(is_kernel_of(m, e), "isometry is not a kernel", m=m)
    expect(same_subobject(kernel(e), m), "kernel(1 − mm*) != m", m=m)
