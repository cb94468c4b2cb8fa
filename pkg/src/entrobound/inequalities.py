"""Mutual-information and joint-entropy inequality checks.

Each check evaluates one inequality on a tripartite distribution (or, for
the Cerf-Adami bound, on three supplied mutual informations) and returns an
immutable :class:`InequalityReport` in ``lhs <= rhs`` form.  Checks never
reject inputs for failing a structural assumption: the plain
mutual-information triangle, for instance, is only guaranteed on Markov
distributions, and demonstrating its failure off-Markov is part of what the
reports are for.  Satisfaction tolerance is fixed at 1e-9 absolute.

Variables of a tripartite distribution are labeled A, B, C by position.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .dist import JointDistribution, marginalize
from .entropy import EntropyValue, convert_base, mutual_entropy, shannon_entropy
from .errors import NegativeMutualInformationError, WrongArityError

SATISFIED_ATOL = 1e-9

_LETTERS = "ABC"


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one inequality evaluation, in ``lhs <= rhs`` form.

    ``margin`` is ``rhs - lhs`` exactly; ``terms`` holds the named
    sub-quantities that entered the comparison; ``meta`` carries structural
    context (certification flags, warnings, sources).
    """

    name: str
    lhs: float
    rhs: float
    terms: dict[str, float]
    satisfied: bool
    margin: float
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "terms": dict(self.terms),
            "satisfied": self.satisfied,
            "margin": self.margin,
            "meta": dict(self.meta),
        }


def _report(name: str, lhs: float, rhs: float, terms: dict[str, float], meta: dict | None = None) -> InequalityReport:
    return InequalityReport(
        name=name,
        lhs=float(lhs),
        rhs=float(rhs),
        terms={k: float(v) for k, v in terms.items()},
        satisfied=bool(lhs <= rhs + SATISFIED_ATOL),
        margin=float(rhs) - float(lhs),
        meta=dict(meta or {}),
    )


def _require_tripartite(d: JointDistribution) -> None:
    if d.num_vars != 3:
        raise WrongArityError(f"need a tripartite distribution, got {d.num_vars} variables")


def _pair_mi(d: JointDistribution, i: int, j: int) -> float:
    return mutual_entropy(d, i, j).value


def _single_h(d: JointDistribution, i: int) -> float:
    return shannon_entropy(marginalize(d, {i})).value


def triangle_check(d: JointDistribution) -> InequalityReport:
    """H(A:C) <= H(A:B) + H(B:C).

    Guaranteed only when the distribution has the Markov property
    A -> B -> C; evaluated and reported regardless.
    """
    _require_tripartite(d)
    iab = _pair_mi(d, 0, 1)
    ibc = _pair_mi(d, 1, 2)
    iac = _pair_mi(d, 0, 2)
    return _report(
        "triangle",
        lhs=iac,
        rhs=iab + ibc,
        terms={"H(A:B)": iab, "H(B:C)": ibc, "H(A:C)": iac},
        meta={"requires_markov": True},
    )


def joint_triangle_check(d: JointDistribution) -> InequalityReport:
    """H(A,C) <= H(A,B) + H(B,C); holds for every distribution."""
    _require_tripartite(d)
    hab = shannon_entropy(marginalize(d, {0, 1})).value
    hbc = shannon_entropy(marginalize(d, {1, 2})).value
    hac = shannon_entropy(marginalize(d, {0, 2})).value
    return _report(
        "joint_triangle",
        lhs=hac,
        rhs=hab + hbc,
        terms={"H(A,B)": hab, "H(B,C)": hbc, "H(A,C)": hac},
    )


def two_hb_bound_check(d: JointDistribution) -> InequalityReport:
    """H(A:B) + H(B:C) - H(A:C) <= 2 H(B); holds for every distribution."""
    _require_tripartite(d)
    iab = _pair_mi(d, 0, 1)
    ibc = _pair_mi(d, 1, 2)
    iac = _pair_mi(d, 0, 2)
    hb = _single_h(d, 1)
    return _report(
        "two_hb_bound",
        lhs=iab + ibc - iac,
        rhs=2.0 * hb,
        terms={"H(A:B)": iab, "H(B:C)": ibc, "H(A:C)": iac, "H(B)": hb},
    )


def narrowed_bound_check(d: JointDistribution) -> InequalityReport:
    """H(A:B) + H(B:C) - H(A:C) <= H(B).

    The tightened form of the 2H(B) bound; classically satisfied for all
    distributions (it is equivalent to strong subadditivity).
    """
    _require_tripartite(d)
    iab = _pair_mi(d, 0, 1)
    ibc = _pair_mi(d, 1, 2)
    iac = _pair_mi(d, 0, 2)
    hb = _single_h(d, 1)
    return _report(
        "narrowed_bound",
        lhs=iab + ibc - iac,
        rhs=hb,
        terms={"H(A:B)": iab, "H(B:C)": ibc, "H(A:C)": iac, "H(B)": hb},
    )


def cerf_adami_check(
    hab: EntropyValue,
    hac: EntropyValue,
    hbc: EntropyValue,
    bound: float = 1.0,
    source: str = "unspecified",
) -> InequalityReport:
    """|H(A:B) - H(A:C)| + H(B:C) <= bound.

    The three mutual informations may come from one tripartite distribution
    (classical test) or from three separate pairwise experiments (quantum
    test); ``source`` records which.  The default bound of 1 assumes uniform
    binary marginals.  Inputs are converted to bits if needed.
    """
    values = []
    for label, e in (("H(A:B)", hab), ("H(A:C)", hac), ("H(B:C)", hbc)):
        v = convert_base(e, 2.0).value
        if v < -SATISFIED_ATOL:
            raise NegativeMutualInformationError(f"{label} = {v} is negative")
        values.append(max(v, 0.0))
    iab, iac, ibc = values
    return _report(
        "cerf_adami",
        lhs=abs(iab - iac) + ibc,
        rhs=float(bound),
        terms={"H(A:B)": iab, "H(A:C)": iac, "H(B:C)": ibc},
        meta={"source": source, "normalized": float(bound) == 1.0},
    )


def cerf_adami_classical(d: JointDistribution, pivot: int = 0, bound: float | None = None) -> InequalityReport:
    """Cerf-Adami check with all three mutual informations taken from one
    tripartite distribution.

    ``pivot`` selects which variable plays the repeated role x in
    |H(x:y) - H(x:z)| + H(y:z); the three pivots give the three letter
    permutations of the bound.  ``bound=None`` uses the uniform-marginal
    normalization of 1; pass :func:`marginal_bound` for non-uniform inputs.
    """
    _require_tripartite(d)
    if pivot not in (0, 1, 2):
        raise WrongArityError(f"pivot must be 0, 1 or 2, got {pivot}")
    y, z = [i for i in range(3) if i != pivot]
    ixy = mutual_entropy(d, pivot, y)
    ixz = mutual_entropy(d, pivot, z)
    iyz = mutual_entropy(d, y, z)
    used = 1.0 if bound is None else float(bound)
    report = cerf_adami_check(ixy, ixz, iyz, bound=used, source="tripartite")
    x_l, y_l, z_l = _LETTERS[pivot], _LETTERS[y], _LETTERS[z]
    terms = {
        f"H({x_l}:{y_l})": ixy.value,
        f"H({x_l}:{z_l})": ixz.value,
        f"H({y_l}:{z_l})": iyz.value,
    }
    meta = dict(report.meta)
    meta["pivot"] = x_l
    return InequalityReport(
        name=report.name,
        lhs=report.lhs,
        rhs=report.rhs,
        terms=terms,
        satisfied=report.satisfied,
        margin=report.margin,
        meta=meta,
    )


def marginal_bound(d: JointDistribution) -> float:
    """max(H(A), H(B), H(C)): the honest bound for non-uniform marginals."""
    _require_tripartite(d)
    return max(_single_h(d, i) for i in range(3))


def dpi_check(d: JointDistribution, markov_certified: bool) -> list[InequalityReport]:
    """Data-processing inequality reports for both chain directions.

    Four reports: the source entropy bounds H(A:B) <= H(A) and
    H(C:B) <= H(C) (unconditional), and the decay links H(A:C) <= H(A:B)
    and H(C:A) <= H(C:B), which require the Markov property.
    ``markov_certified`` is recorded on every report, not enforced.
    """
    _require_tripartite(d)
    ha = _single_h(d, 0)
    hc = _single_h(d, 2)
    iab = _pair_mi(d, 0, 1)
    iac = _pair_mi(d, 0, 2)
    icb = _pair_mi(d, 2, 1)
    ica = _pair_mi(d, 2, 0)
    base_meta = {"markov_certified": bool(markov_certified)}
    return [
        _report("dpi_forward_source", lhs=iab, rhs=ha,
                terms={"H(A:B)": iab, "H(A)": ha}, meta=base_meta),
        _report("dpi_forward_chain", lhs=iac, rhs=iab,
                terms={"H(A:C)": iac, "H(A:B)": iab},
                meta={**base_meta, "requires_markov": True}),
        _report("dpi_reverse_source", lhs=icb, rhs=hc,
                terms={"H(C:B)": icb, "H(C)": hc}, meta=base_meta),
        _report("dpi_reverse_chain", lhs=ica, rhs=icb,
                terms={"H(C:A)": ica, "H(C:B)": icb},
                meta={**base_meta, "requires_markov": True}),
    ]


def reports_to_csv(reports: list[InequalityReport]) -> str:
    """One CSV row per report; terms flattened to key=value pairs."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "lhs", "rhs", "satisfied", "margin", "terms"])
    for r in reports:
        terms = ";".join(f"{k}={format(v, '.12g')}" for k, v in r.terms.items())
        writer.writerow(
            [r.name, format(r.lhs, ".12g"), format(r.rhs, ".12g"),
             str(r.satisfied).lower(), format(r.margin, ".12g"), terms]
        )
    return buf.getvalue()
