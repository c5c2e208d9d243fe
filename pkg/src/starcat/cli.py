"""
The starcat command line.

Every engine subcommand reads a JSON document, resolves the morphisms
named with -n, and writes the document back with the results appended
under names like "kernel(f)" or "codilator(f).s1". Verdicts that are not
morphisms go into the document's verdicts map.

Exit codes: 0 on success, 1 when an operation's precondition fails or the
engine raises, 2 when the input does not parse.
"""

import json
import logging
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from typing import IO, Any, Optional, Union

import click
from pydantic import ValidationError

from starcat import __version__
from starcat.category import (
    WMorphism,
    adjoint,
    compose,
    identity,
    sum_via_biproduct,
)
from starcat.dilation import (
    Codilation,
    CodilatorCertificate,
    codilator,
    codilator_partial_isometry,
    codilator_strict,
    douglas_extension,
    gram_identity_holds,
    mediating_isometry,
)
from starcat.document import Document
from starcat.errors import (
    DocumentError,
    LiteralParseError,
    StarcatError,
    VerificationError,
)
from starcat.factorizations import (
    canonical_retraction,
    classify,
    cokernel,
    is_kernel_of,
    kernel,
    orthogonal_complement,
    range_factorization,
)
from starcat.gram_schmidt import WideCospan, gram_schmidt, same_subobject
from starcat.harness import GenConfig, run_laws
from starcat.order import (
    bounded_transform,
    invert,
    is_contraction,
    is_positive_endo,
    le,
    schur_inverse,
)
from starcat.scalars import RingId, format_scalar
from starcat.settings import configure, get_settings

logger = logging.getLogger(__name__)

PARSE_ERRORS = (
    LiteralParseError,
    DocumentError,
    ValidationError,
    json.JSONDecodeError,
    UnicodeDecodeError,
)

Verdict = dict[str, Any]
Result = Union[WMorphism, Verdict]
Operation = Callable[[Sequence[WMorphism]], dict[str, Result]]

RING_CHOICE = click.Choice([ring.value for ring in RingId])


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except PARSE_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(2) from exc
    except StarcatError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(1) from exc


def _verify(condition: bool, what: str) -> None:
    if get_settings().verify_results and not condition:
        raise VerificationError(f"result failed re-verification: {what}")


# ============================================================================
# Operations
# ============================================================================


def _adjoint(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    f_star = adjoint(f)
    _verify(adjoint(f_star) == f, "adjoint(adjoint(f)) = f")
    return {"": f_star}


def _compose(args: Sequence[WMorphism]) -> dict[str, Result]:
    g, f = args
    gf = compose(g, f)
    _verify(
        adjoint(gf) == compose(adjoint(f), adjoint(g)), "(g·f)* = f*·g*"
    )
    return {"": gf}


def _add(args: Sequence[WMorphism]) -> dict[str, Result]:
    f, g = args
    total = f + g
    _verify(total == sum_via_biproduct(f, g), "f + g = ∇·(f ⊕ g)·Δ")
    return {"": total}


def _kernel(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    k = kernel(f)
    _verify(is_kernel_of(k, f), "f·k = 0 with k universal")
    _verify(classify(k).isometry, "k is an isometry")
    return {"": k}


def _cokernel(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    c = cokernel(f)
    _verify(compose(c, f).is_zero(), "c·f = 0")
    _verify(classify(c).coisometry, "c is a coisometry")
    return {"": c}


def _complement(args: Sequence[WMorphism]) -> dict[str, Result]:
    (m,) = args
    p = orthogonal_complement(m)
    _verify(compose(adjoint(m), p).is_zero(), "m*·m⊥ = 0")
    _verify(classify(p).isometry, "m⊥ is an isometry")
    return {"": p}


def _retraction(args: Sequence[WMorphism]) -> dict[str, Result]:
    (s,) = args
    r = canonical_retraction(s)
    _verify(compose(r, s) == identity(s.dom), "r·s = 1")
    return {"": r}


def _range_factor(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    rf = range_factorization(f)
    _verify(rf.recompose() == f, "j·u·e = f")
    return {"j": rf.j, "u": rf.u, "e": rf.e}


def _check_orthogonalization(c: WideCospan, t: WideCospan) -> None:
    for i, ti in enumerate(t.legs):
        for tj in t.legs[i + 1 :]:
            _verify(compose(adjoint(ti), tj).is_zero(), "t_i*·t_j = 0")
    for m in range(1, len(c.legs) + 1):
        _verify(
            same_subobject(t.prefix(m), c.prefix(m)),
            f"the first {m} legs span the same subobject",
        )


def _gram_schmidt(args: Sequence[WMorphism]) -> dict[str, Result]:
    c = WideCospan(tuple(args))
    t = gram_schmidt(c)
    if get_settings().verify_results:
        _check_orthogonalization(c, t)
    return {f"t{k}": leg for k, leg in enumerate(t.legs, start=1)}


def _classify(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    flags = classify(f)
    _verify(
        not flags.isometry or (flags.split_mono and flags.closed_mono),
        "isometries are split and closed monos",
    )
    _verify(not flags.coisometry or flags.epi, "coisometries are epi")
    _verify(
        not (flags.isometry or flags.coisometry) or flags.partial_isometry,
        "(co)isometries are partial isometries",
    )
    return {"": flags.model_dump()}


def _positivity(args: Sequence[WMorphism]) -> dict[str, Result]:
    (H,) = args
    verdict = is_positive_endo(H)
    _verify(verdict.verify(), "positivity certificate")
    results: dict[str, Result] = {}
    summary: Verdict = {"verdict": verdict.verdict.value}
    if verdict.factor is not None:
        results["factor"] = verdict.factor
    if verdict.witness is not None:
        summary["witness"] = [format_scalar(x) for x in verdict.witness]
        summary["witness_value"] = format_scalar(verdict.witness_value())
    results[""] = summary
    return results


def _le(args: Sequence[WMorphism]) -> dict[str, Result]:
    a, b = args
    answer = le(a, b)
    verdict = is_positive_endo(b - a)
    _verify(
        verdict.verify() and verdict.positive == answer,
        "a ≤ b agrees with the certificate for b − a",
    )
    return {"": {"le": answer}}


def _invert(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    f_inv = invert(f)
    _verify(compose(f_inv, f) == identity(f.dom), "f^{-1}·f = 1")
    return {"": f_inv}


def _schur(args: Sequence[WMorphism]) -> dict[str, Result]:
    a, b, f = args
    result = schur_inverse(a, b, f)
    complement = b - compose(f, compose(invert(a), adjoint(f)))
    _verify(compose(result, complement) == identity(b.dom), "Woodbury")
    return {"": result}


def _bounded_transform(args: Sequence[WMorphism]) -> dict[str, Result]:
    f, a = args
    bt = bounded_transform(f, a)
    _verify(compose(bt.c, bt.d) == f, "c·d = f")
    _verify(is_contraction(bt.c), "c is a contraction")
    return {"c": bt.c, "d": bt.d}


def _codilation_parts(cert: CodilatorCertificate) -> dict[str, Result]:
    c = cert.codilation
    _verify(gram_identity_holds(c), "codilation Gram identity")
    return {"s1": c.s1, "s2": c.s2, "kind": {"kind": cert.kind.value}}


def _codilator(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    return _codilation_parts(codilator(f))


def _codilator_strict(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    return _codilation_parts(codilator_strict(f))


def _codilator_pi(args: Sequence[WMorphism]) -> dict[str, Result]:
    (f,) = args
    return _codilation_parts(codilator_partial_isometry(f))


def _douglas_extend(args: Sequence[WMorphism]) -> dict[str, Result]:
    f, g = args
    h = douglas_extension(f, g)
    _verify(compose(h, f) == g, "h·f = g")
    _verify(is_contraction(h), "h is a contraction")
    return {"": h}


def _mediate(args: Sequence[WMorphism]) -> dict[str, Result]:
    f, t1, t2 = args
    cert = codilator(f)
    h = mediating_isometry(cert, Codilation(t1, t2, f))
    ours = cert.codilation
    _verify(compose(h, ours.s1) == t1, "h·s1 = t1")
    _verify(compose(h, ours.s2) == t2, "h·s2 = t2")
    _verify(classify(h).isometry, "h is an isometry")
    return {"": h}


# name -> (arity, operation); arity None means one or more
OPERATIONS: dict[str, tuple[Optional[int], Operation, str]] = {
    "adjoint": (1, _adjoint, "The weighted adjoint f*."),
    "compose": (2, _compose, "The composite g·f of -n g -n f."),
    "add": (2, _add, "The sum f + g."),
    "kernel": (1, _kernel, "The isometric kernel of f."),
    "cokernel": (1, _cokernel, "The coisometric cokernel of f."),
    "complement": (1, _complement, "The orthogonal complement of m."),
    "retraction": (1, _retraction, "The canonical retraction of s."),
    "range-factor": (1, _range_factor, "The factorization f = j·u·e."),
    "gram-schmidt": (None, _gram_schmidt, "Orthogonalize a wide cospan."),
    "classify": (1, _classify, "Decide mono, epi, isometry, ... flags."),
    "positivity": (1, _positivity, "Decide positivity with a certificate."),
    "le": (2, _le, "Decide a ≤ b."),
    "invert": (1, _invert, "The inverse of f."),
    "schur": (3, _schur, "(b − f·a^{-1}·f*)^{-1} of -n a -n b -n f."),
    "bounded-transform": (
        2,
        _bounded_transform,
        "Split f as c·d given a ≥ f*f.",
    ),
    "codilator": (1, _codilator, "A minimal codilation of a contraction."),
    "codilator-strict": (
        1,
        _codilator_strict,
        "The coproduct codilator of a strict contraction.",
    ),
    "codilator-pi": (
        1,
        _codilator_pi,
        "The pushout codilator of a partial isometry.",
    ),
    "douglas-extend": (
        2,
        _douglas_extend,
        "A contraction h with h·f = g.",
    ),
    "mediate": (
        3,
        _mediate,
        "The isometry from codilator(f) to (t1, t2): -n f -n t1 -n t2.",
    ),
}


def _result_name(op: str, names: Sequence[str], part: str) -> str:
    base = f"{op}({','.join(names)})"
    return f"{base}.{part}" if part else base


def apply_operation(
    document: Document, op: str, names: Sequence[str]
) -> Document:
    """
    Run op on the named morphisms and append the results to document.

    Raises:
        click.UsageError: If the number of names does not fit op
        DocumentError: If a name does not resolve
        StarcatError: If the operation fails
    """
    arity, operation, _ = OPERATIONS[op]
    if (arity is None and not names) or (
        arity is not None and len(names) != arity
    ):
        expected = "at least 1" if arity is None else str(arity)
        raise click.UsageError(
            f"{op} takes {expected} morphism name(s), got {len(names)}"
        )
    args = [document.resolve_morphism(name) for name in names]
    logger.debug("running %s on %s", op, ", ".join(names))
    results = operation(args)
    base = _result_name(op, names, "")
    for part, result in results.items():
        name = _result_name(op, names, part)
        if isinstance(result, WMorphism):
            document.add_morphism(name, result, object_base=base)
        else:
            document.verdicts[name] = result
    return document


# ============================================================================
# Commands
# ============================================================================


@click.group()
@click.version_option(__version__, prog_name="starcat")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]),
    default="WARNING",
    show_default=True,
    help="Logging level on stderr.",
)
@click.option(
    "--no-verify",
    is_flag=True,
    help="Skip re-verification of results before they are written.",
)
def cli(log_level: str, no_verify: bool) -> None:
    """Exact weighted matrices over ordered division *-rings."""
    configure(
        install_logging=True,
        log_level=log_level,
        verify_results=not no_verify,
    )


def _document_command(op: str) -> click.Command:
    arity, _, help_text = OPERATIONS[op]

    @click.option(
        "--in",
        "source",
        type=click.File("r", encoding="utf-8"),
        default="-",
        help="Input document (default: stdin).",
    )
    @click.option(
        "-n",
        "--name",
        "names",
        multiple=True,
        required=True,
        help="Morphism name; repeat for several arguments.",
    )
    @click.option(
        "--ring",
        type=RING_CHOICE,
        default=None,
        help="Fail unless the document is over this ring.",
    )
    @click.option(
        "--out",
        type=click.File("w", encoding="utf-8"),
        default="-",
        help="Output document (default: stdout).",
    )
    def command(
        source: IO[str],
        names: tuple[str, ...],
        ring: Optional[str],
        out: IO[str],
    ) -> None:
        with _exit_codes():
            document = Document.from_json(source.read())
            if ring is not None and document.ring.value != ring:
                raise DocumentError(
                    f"document is over {document.ring.value}, not {ring}"
                )
            apply_operation(document, op, names)
            out.write(document.to_json())

    command.__doc__ = help_text
    return click.command(name=op)(command)


for _op in OPERATIONS:
    cli.add_command(_document_command(_op))


@cli.command(name="laws")
@click.option("--ring", type=RING_CHOICE, required=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--cases", type=int, default=50, show_default=True)
@click.option("--max-dim", type=int, default=5, show_default=True)
@click.option(
    "--workers",
    type=int,
    default=None,
    help="Worker processes (default: settings).",
)
@click.option(
    "--law",
    "law_names",
    multiple=True,
    help="Run only these laws; repeatable.",
)
@click.option(
    "--out",
    type=click.File("w", encoding="utf-8"),
    default="-",
    help="Report destination (default: stdout).",
)
def laws_command(
    ring: str,
    seed: int,
    cases: int,
    max_dim: int,
    workers: Optional[int],
    law_names: tuple[str, ...],
    out: IO[str],
) -> None:
    """Run the law suite and write a JSON report."""
    with _exit_codes():
        config = GenConfig(
            ring=RingId(ring), seed=seed, cases=cases, max_dim=max_dim
        )
        try:
            report = run_laws(config, law_names or None, workers)
        except KeyError as exc:
            raise click.BadParameter(
                f"unknown law {exc.args[0]!r}", param_hint="--law"
            ) from exc
        payload = report.model_dump(mode="json")
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        if report.total_failures:
            click.echo(
                f"{report.total_failures} failure(s): "
                + ", ".join(report.failing_laws()),
                err=True,
            )
            raise SystemExit(1)


def main() -> None:
    cli()
