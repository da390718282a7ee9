"""The analyze pipeline: points -> ideal -> invariants -> codes ->
certificates, assembled into a deterministic report."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import __version__
from .artinian import classify, verify_socle_identities
from .codes import (
    DEFAULT_CODEWORD_BUDGET,
    DEFAULT_SUBSPACE_BUDGET,
    code_of_degree,
    enumeration_budget,
    footprint,
    ghw,
    min_distance,
    weight_matrix,
)
from .duality import (
    global_duality,
    gorenstein_crosscheck,
    gorenstein_selfdual_classify,
    self_dual_report,
)
from .errors import BudgetExceeded, ParseError
from .groebner import minimal_generator_count, standard_monomials_upto
from .indicators import standard_indicators
from .polyring import GREVLEX, TermOrder, format_monomial, parse_poly
from .variety import (
    PointSet,
    hilbert_data,
    parse_points_text,
    projective_closure,
    symmetry_equiv_check,
    vanishing_ideal,
)


@dataclass
class AnalysisRequest:
    order: TermOrder | None = None
    affine: bool = False
    duality: bool = False
    gorenstein: bool = False
    selfdual: bool = False
    weights: bool = False
    footprint_matrix: bool = False
    ghw_cells: tuple = ()
    budget: int | None = None
    artinian_h: str | None = None


def analyze_text(text, req=None):
    """Run the pipeline on a points file; returns (report, negatives).

    ``negatives`` lists requested predicates that came out false (used by the
    CLI's --strict exit code).
    """
    req = req or AnalysisRequest()
    parsed = parse_points_text(text)
    f = parsed.field
    negatives = []

    if req.affine:
        if parsed.order is not None:
            raise ParseError(
                "affine mode fixes the order on the closure ring; "
                "remove the order line"
            )
        X = projective_closure(f, parsed.rows)
        order = GREVLEX
    else:
        X = PointSet(f, parsed.rows, canonicalize=True)
        order = req.order or parsed.order or GREVLEX
    s = X.s

    requested = ["vanishing_ideal", "hilbert", "indicators", "min_distance"]
    for flag, label in (
        (req.duality, "duality"),
        (req.gorenstein, "gorenstein"),
        (req.selfdual, "selfdual"),
        (req.weights, "weight_matrix"),
        (req.footprint_matrix, "footprint"),
        (bool(req.ghw_cells), "ghw"),
    ):
        if flag:
            requested.append(label)
    report = {
        "version": __version__,
        "requested": requested,
        "budgets": {
            "override": req.budget,
            "codeword_default": enumeration_budget(DEFAULT_CODEWORD_BUDGET),
            "subspace_default": enumeration_budget(DEFAULT_SUBSPACE_BUDGET),
        },
        "input": {
            "field": {"p": f.p, "k": f.k, "q": f.q, "modulus": list(f.modulus)},
            "vars": s,
            "order": order.descriptor(s),
            "m": X.m,
            "affine_closure": req.affine,
            "points": [
                [f.format_element(int(x)) for x in row] for row in X.coords
            ],
        },
    }

    gb = vanishing_ideal(X, order)
    hd = hilbert_data(gb, X.m, nvars=s)
    symmetry_equiv_check(hd)
    isx = standard_indicators(X, gb)
    mingens = minimal_generator_count(gb, hd.r0)

    report["vanishing_ideal"] = {
        "groebner_basis": gb.to_strings(),
        "initial_ideal": [format_monomial(u) for u in gb.leading_monomials()],
        "minimal_generators": mingens,
        "complete_intersection": mingens == s - 1,
    }
    report["hilbert"] = hd.as_dict()
    if req.affine:
        report["hilbert"]["affine_hilbert_function"] = list(hd.H)
    report["indicators"] = isx.as_dict(order)

    budget = req.budget
    deltas = {}
    for d in range(1, hd.r0 + 1):
        try:
            deltas[d] = min_distance(code_of_degree(X, gb, d), limit=budget)
        except BudgetExceeded as exc:
            deltas[d] = f"budget_exceeded({exc.required})"
    report["codes"] = {
        "dimensions": {d: (hd.H[d] if d <= hd.r0 else X.m) for d in range(hd.r0 + 1)},
        "min_distance": deltas,
    }
    finite = [d for d, v in deltas.items() if isinstance(v, int)]
    if finite and all(isinstance(v, int) for v in deltas.values()):
        reg_delta = min(d for d in finite if deltas[d] == 1)
        report["codes"]["min_distance_regularity"] = reg_delta

    if req.ghw_cells:
        cells = {}
        for d, r in req.ghw_cells:
            try:
                cells[f"{d},{r}"] = ghw(code_of_degree(X, gb, d), r, limit=budget)
            except BudgetExceeded as exc:
                cells[f"{d},{r}"] = f"budget_exceeded({exc.required})"
                negatives.append("budget")
        report["codes"]["ghw"] = cells

    if req.footprint_matrix:
        fp_budget = budget if budget is not None else enumeration_budget(
            DEFAULT_SUBSPACE_BUDGET
        )
        fp = {}
        for d in range(1, hd.r0 + 1):
            width = len(standard_monomials_upto(gb, s, d)[d])
            row = [
                footprint(gb, d, r, nvars=s)
                if comb(width, r) <= fp_budget
                else f"budget_exceeded({comb(width, r)})"
                for r in range(1, width + 1)
            ]
            fp[d] = row
        report["codes"]["footprint"] = fp

    if req.weights:
        wm = weight_matrix(X, gb, hd, isx, budget=budget)
        report["codes"]["weight_matrix"] = wm.as_dict()
        report["codes"]["weight_matrix_rendered"] = wm.render().splitlines()

    cert = None
    if req.duality or req.gorenstein:
        cert = global_duality(X, gb, hd, isx)
        report["duality"] = cert.as_dict(f)
        if req.duality and not cert.holds:
            negatives.append("duality")

    cls = None
    if req.gorenstein:
        h_override = parse_poly(f, s, req.artinian_h) if req.artinian_h else None
        cls = classify(X, gb, hd, h=h_override)
        report["artinian"] = cls.as_dict(order)
        report["artinian"]["crosscheck_with_duality"] = gorenstein_crosscheck(
            cert, cls
        )
        if cls.gorenstein:
            rep = verify_socle_identities(cls, isx, gb, X, hd)
            report["artinian"]["socle_identities"] = {
                "lambdas": [
                    cls.J_basis.field.format_element(c, signed=True)
                    for c in rep["lambdas"]
                ],
                "special_form": rep["special_form"],
            }
        else:
            negatives.append("gorenstein")

    if req.selfdual:
        rep = self_dual_report(X, gb, hd)
        report["self_duality"] = rep
        if not rep["self_dual_degrees"]:
            negatives.append("selfdual")
        if cls is not None and cls.gorenstein:
            report["self_duality"]["gorenstein_classification"] = (
                gorenstein_selfdual_classify(X, gb, hd, cls)
            )

    return report, negatives
