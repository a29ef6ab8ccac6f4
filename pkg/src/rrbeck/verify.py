"""Named cross-checks: each theorem or identity is computed along independent routes.

The routes never share code beyond the data types: series coefficients come
from :mod:`rrbeck.genfun`, counts from explicit enumeration in
:mod:`rrbeck.partitions`, and complements from the maps in
:mod:`rrbeck.bijections`.  A failing check is data, never an exception.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional

from . import genfun
from .bijections import (
    ImageClassLabel,
    PsiBranch,
    image_class_member,
    image_class_violations,
    in_s1,
    phi,
    phi_image_member,
    phi_inverse,
    psi_traced,
    s1_set,
    s_set,
    t1_set,
)
from .partitions import (
    PartitionClass as PC,
    RectPair,
    enumerate_partitions,
    marked_partitions,
    total_parts,
)
from .qseries import gaussian_binomial, invert, mul, pochhammer_finite, series_from_coeffs

__all__ = [
    "PASS",
    "FAIL",
    "DIAGNOSTIC",
    "Witness",
    "CheckResult",
    "check_qbinomial",
    "check_rr_identities",
    "check_beck_euler",
    "check_beck_pair_form",
    "check_theorem1",
    "check_theorem1_cases",
    "check_phi",
    "check_corollary",
    "check_theorem2",
    "check_psi",
    "psi_branch_coverage",
    "psi_image_diagnostics",
    "theorem1_pairs",
    "table",
    "CHECKS",
    "TABLES",
]

PASS = "pass"
FAIL = "fail"
DIAGNOSTIC = "diagnostic-discrepancy"


@dataclass
class Witness:
    n: int
    expected: int
    actual: int
    match: bool
    label: str = ""
    routes: dict[str, int] = field(default_factory=dict)
    counterexample: Optional[str] = None


@dataclass
class CheckResult:
    check_name: str
    n_range: tuple[int, int]
    status: str
    witnesses: list[Witness]
    diagnostics: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def failures(self) -> list[Witness]:
        return [w for w in self.witnesses if not w.match]

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check_name,
            "range": list(self.n_range),
            "status": self.status,
            "witnesses": [asdict(w) for w in self.witnesses],
            "diagnostics": self.diagnostics,
            "notes": self.notes,
        }


def _result(name: str, lo: int, hi: int, rows: list[Witness], diagnostics=None, notes=None) -> CheckResult:
    diagnostics = diagnostics or []
    if any(not w.match for w in rows):
        status = FAIL
    elif diagnostics:
        status = DIAGNOSTIC
    else:
        status = PASS
    return CheckResult(name, (lo, hi), status, rows, diagnostics, notes or [])


def _agree(n: int, values: dict[str, int], label: str = "", counterexample: Optional[str] = None) -> Witness:
    """Witness for a multi-route comparison: the first two routes are expected/actual."""
    names = list(values)
    expected, actual = values[names[0]], values[names[1]]
    extra = {k: values[k] for k in names[2:]}
    ok = len(set(values.values())) == 1
    return Witness(n, expected, actual, ok, label, {**{names[0]: expected, names[1]: actual}, **extra},
                   None if ok else counterexample)


def _ones(n: int, cls: PC) -> int:
    return sum(p.parts.count(1) for p in enumerate_partitions(n, cls))


# ---------------------------------------------------------------------------
# q-binomial lemmas


def _box_counts(order: int, box: int) -> dict[tuple[int, int], list[int]]:
    """Coefficients of partitions with at most k parts, each at most A, by enumeration."""
    out = {(A, k): [0] * (order + 1) for A in range(box + 1) for k in range(box + 1)}
    for n in range(min(order, box * box) + 1):
        for p in enumerate_partitions(n):
            top = p.parts[0] if p else 0
            if top > box or p.length > box:
                continue
            for A in range(top, box + 1):
                for k in range(p.length, box + 1):
                    out[A, k][n] += 1
    return out


def _chain_count(A: int, k: int, n: int) -> int:
    """Chains A <= n_1 <= ... <= n_k summing to n, by direct recursion."""

    def go(lo: int, left: int, remaining: int) -> int:
        if left == 0:
            return int(remaining == 0)
        return sum(go(v, left - 1, remaining - v) for v in range(lo, remaining // left + 1))

    return go(A, k, n)


def check_qbinomial(max_n: int = 40, box: int = 8) -> CheckResult:
    """Box enumeration, symmetry, the q-binomial series on t = q^j slices, and the shifted-chain identity."""
    rows: list[Witness] = []
    order = max_n
    boxes = _box_counts(order, box)
    for A in range(box + 1):
        for k in range(box + 1):
            qb = gaussian_binomial(A, k, order)
            enum = boxes[A, k]
            sym = gaussian_binomial(k, A, order)
            bad = [n for n in range(order + 1) if not qb[n] == enum[n] == sym[n]]
            n0 = bad[0] if bad else A * k if A * k <= order else order
            rows.append(_agree(n0, {"qbinomial": qb[n0], "enumeration": enum[n0], "symmetric": sym[n0]},
                               f"box A={A} k={k}"))
    for j in (1, 2, 3):
        for A in range(6):
            lhs = series_from_coeffs([0], order)
            k = 0
            while j * k <= order:
                lhs = lhs + gaussian_binomial(A, k, order).shift(j * k)
                k += 1
            rhs = invert(pochhammer_finite(j, 1, A + 1, order))
            bad = [n for n in range(order + 1) if lhs[n] != rhs[n]]
            n0 = bad[0] if bad else order
            rows.append(_agree(n0, {"series": lhs[n0], "product": rhs[n0]}, f"t=q^{j} A={A}"))
    for A in range(5):
        for k in range(1, 6):
            gf = invert(pochhammer_finite(1, 1, k, order)).shift(A * k) if A * k <= order else None
            for n in range(order + 1):
                lhs = gf[n] if gf is not None else 0
                rhs = _chain_count(A, k, n)
                if lhs != rhs or n == order:
                    rows.append(_agree(n, {"series": lhs, "chains": rhs}, f"chains A={A} k={k}"))
                    break
    return _result("qbinomial", 0, max_n, rows)


# ---------------------------------------------------------------------------
# Rogers-Ramanujan and Beck/Andrews


def check_rr_identities(max_n: int = 50, order: Optional[int] = None) -> CheckResult:
    """Sum side = product side to `order`; both equal the enumeration counts up to max_n."""
    order = max(order if order is not None else max_n, max_n)
    r1s, r1p = genfun.rr1_sum_side(order), genfun.rr1_product_side(order)
    r2s, r2p = genfun.rr2_sum_side(order), genfun.rr2_product_side(order)
    rows = []
    for n in range(order + 1):
        v1 = {"sum": r1s[n], "product": r1p[n]}
        v2 = {"sum": r2s[n], "product": r2p[n]}
        if n <= max_n:
            v1["mod5_pm1"] = len(enumerate_partitions(n, PC.MOD5_PM1))
            v1["super_distinct"] = len(enumerate_partitions(n, PC.SUPER_DISTINCT))
            v2["mod5_pm2"] = len(enumerate_partitions(n, PC.MOD5_PM2))
            v2["super_distinct_gt1"] = len(enumerate_partitions(n, PC.SUPER_DISTINCT_GT1))
        rows.append(_agree(n, v1, "rr1"))
        rows.append(_agree(n, v2, "rr2"))
    return _result("rr_identities", 0, order, rows)


def _odd_distinct_excess(n: int) -> int:
    return total_parts(n, PC.ODD_PARTS) - total_parts(n, PC.DISTINCT)


def check_beck_euler(max_n: int = 50) -> CheckResult:
    rows = []
    for n in range(max_n + 1):
        rows.append(_agree(n, {
            "excess": _odd_distinct_excess(n),
            "one_even_part": len(enumerate_partitions(n, PC.EXACTLY_ONE_EVEN_PART)),
            "one_repeated_part": len(enumerate_partitions(n, PC.EXACTLY_ONE_REPEATED_PART)),
        }))
    return _result("beck_euler", 0, max_n, rows)


def _count_pairs(n: int, lam_cls: PC, keep: Callable[[Any, int, int], bool]) -> int:
    total = 0
    for a in range(1, n + 1):
        for b in range(1, n // a + 1):
            for lam in enumerate_partitions(n - a * b, lam_cls):
                if keep(lam, a, b):
                    total += 1
    return total


def check_beck_pair_form(max_n: int = 50) -> CheckResult:
    rows = []
    for n in range(max_n + 1):
        rows.append(_agree(n, {
            "excess": _odd_distinct_excess(n),
            "odd_lambda_even_a": _count_pairs(n, PC.ODD_PARTS, lambda lam, a, b: a % 2 == 0),
            "distinct_lambda_a_absent_b_ge_2": _count_pairs(
                n, PC.DISTINCT, lambda lam, a, b: a not in lam and b >= 2),
        }))
    return _result("beck_pair_form", 0, max_n, rows)


# ---------------------------------------------------------------------------
# first identity


def theorem1_pairs(n: int) -> list[RectPair]:
    """Pairs with lambda super-distinct, a = +-1 mod 5, and b-1, b or b+1 in lambda when a = 1."""
    return [
        p for p in t1_set(n)
        if p.a != 1 or any(v in p.lam for v in (p.b - 1, p.b, p.b + 1))
    ]


def check_theorem1(max_n: int = 50, order: Optional[int] = None) -> CheckResult:
    order = max(order if order is not None else max_n, max_n)
    t1, t2 = genfun.t1_series(order), genfun.t2_series(order)
    cases = genfun.case5_series(order)
    for i in (1, 2, 3, 4):
        cases = cases + genfun.case_closed_form(i, order)
    rows = []
    for n in range(order + 1):
        values = {"series": t1[n] - t2[n]}
        if n <= max_n:
            pairs = theorem1_pairs(n)
            values["enumeration"] = total_parts(n, PC.MOD5_PM1) - total_parts(n, PC.SUPER_DISTINCT)
            values["pairs"] = len(pairs)
            example = pairs[0].render() if pairs else None
        else:
            values["case_sum"] = cases[n]
            example = None
        rows.append(_agree(n, values, counterexample=example))
    return _result("theorem1", 0, order, rows)


_CASE_CONDITIONS: dict[int, Callable[[Any, int], bool]] = {
    1: lambda lam, b: b - 1 in lam and b + 1 not in lam,
    2: lambda lam, b: b + 1 in lam and b - 1 not in lam,
    3: lambda lam, b: b - 1 in lam and b + 1 in lam,
    4: lambda lam, b: b in lam,
}


def check_theorem1_cases(max_n: int = 35, order: Optional[int] = None) -> CheckResult:
    """Closed forms against brute-force pair counts, plus the telescoped and full identities."""
    order = max(order if order is not None else max_n, max_n)
    forms = {i: genfun.case_closed_form(i, order) for i in (1, 2, 3, 4)}
    c5 = genfun.case5_series(order)
    rows = []
    for i, cond in _CASE_CONDITIONS.items():
        for n in range(max_n + 1):
            brute = _count_pairs(n, PC.SUPER_DISTINCT, lambda lam, a, b: a == 1 and cond(lam, b))
            rows.append(_agree(n, {"closed_form": forms[i][n], "brute_force": brute}, f"case{i}"))
    for n in range(max_n + 1):
        brute = _count_pairs(n, PC.SUPER_DISTINCT, lambda lam, a, b: a > 1 and a % 5 in (1, 4))
        rows.append(_agree(n, {"closed_form": c5[n], "brute_force": brute}, "case5"))

    rr1 = genfun.rr1_sum_side(order)
    t1, t2 = genfun.t1_series(order), genfun.t2_series(order)
    telescoped = genfun.q_over_one_minus_q(order) * rr1 - t2
    four = forms[1] + forms[2] + forms[3] + forms[4]
    for n in range(order + 1):
        rows.append(_agree(n, {"cases_1_to_4": four[n], "telescoped": telescoped[n]}, "exc_1234"))
        rows.append(_agree(n, {"cases_1_to_5": four[n] + c5[n], "t1_minus_t2": t1[n] - t2[n]}, "full"))
    return _result("theorem1_cases", 0, order, rows)


def check_phi(max_n: int = 40) -> CheckResult:
    """phi is injective and its image is exactly the pairs with none of b-1, b, b+1 in lambda."""
    rows = []
    for n in range(max_n + 1):
        domain = list(marked_partitions(n, PC.SUPER_DISTINCT))
        images = [phi(mu) for mu in domain]
        image_set = set(images)
        predicted = {p for p in t1_set(n) if phi_image_member(p)}
        counterexample = None
        ok = len(image_set) == len(images) and image_set == predicted
        if ok:
            ok = all(phi_inverse(phi(mu)) == mu for mu in domain)
        if not ok:
            bad = sorted(image_set ^ predicted) or [p for p in images if images.count(p) > 1]
            counterexample = bad[0].render() if bad else None
        rows.append(Witness(n, len(domain), len(predicted), ok, routes={
            "marked_super_distinct": len(domain),
            "distinct_images": len(image_set),
            "predicted_image": len(predicted),
        }, counterexample=counterexample))
    return _result("phi", 0, max_n, rows)


def check_corollary(max_n: int = 60) -> CheckResult:
    """Parts over super-distinct partitions never exceed the 1s over +-1 mod 5 partitions."""
    rows, equal_at = [], []
    for n in range(1, max_n + 1):
        parts = total_parts(n, PC.SUPER_DISTINCT)
        ones = _ones(n, PC.MOD5_PM1)
        if parts == ones:
            equal_at.append(n)
        rows.append(Witness(n, ones, parts, parts <= ones, routes={
            "ones_in_mod5_pm1": ones, "parts_in_super_distinct": parts, "strict": int(parts < ones)}))
    notes = [f"equality (non-strict) at n = {equal_at}"] if equal_at else ["strict for every n"]
    return _result("corollary", 1, max_n, rows, notes=notes)


# ---------------------------------------------------------------------------
# second identity


def check_theorem2(max_n: int = 50, order: Optional[int] = None) -> CheckResult:
    order = max(order if order is not None else max_n, max_n)
    s1, s2 = genfun.s1_series(order), genfun.s2_series(order)
    rows = []
    for n in range(1, order + 1):
        values = {"series": s1[n] - s2[n]}
        example = None
        if n <= max_n:
            values["enumeration"] = total_parts(n, PC.MOD5_PM2) - total_parts(n, PC.SUPER_DISTINCT_GT1)
            image = {psi_traced(mu).pair for mu in marked_partitions(n, PC.SUPER_DISTINCT_GT1)}
            values["s1_minus_image"] = len(s1_set(n)) - len(image)
            complement = s_set(n)
            values["complement"] = len(complement)
            example = complement[0].render() if complement else None
        rows.append(_agree(n, values, counterexample=example))
    return _result("theorem2", 1, order, rows)


def psi_image_diagnostics(max_n: int = 35) -> list[dict[str, Any]]:
    """Disagreements between psi's branch labels and the printed image-set formulas.

    direction "forward": a psi output labelled I_j fails the I_j formula.
    direction "reverse": a pair of S1(n) satisfies the I_j formula but psi does
    not produce it under label I_j.  One record per (direction, label) with the
    count and the first witness.
    """
    found: dict[tuple[str, str], dict[str, Any]] = {}

    def note(direction: str, label: ImageClassLabel, n: int, pair: RectPair, source: Optional[str]) -> None:
        key = (direction, label.value)
        if key in found:
            found[key]["count"] += 1
            return
        found[key] = {
            "direction": direction,
            "label": label.value,
            "count": 1,
            "first_n": n,
            "pair": pair.render(),
            "source": source,
            "failed_conditions": image_class_violations(pair, label) if direction == "forward" else [],
        }

    labels = [lab for lab in ImageClassLabel if lab is not ImageClassLabel.COMPLEMENT]
    for n in range(1, max_n + 1):
        produced: dict[RectPair, tuple[ImageClassLabel, str]] = {}
        for mu in marked_partitions(n, PC.SUPER_DISTINCT_GT1):
            res = psi_traced(mu)
            produced[res.pair] = (res.label, str(mu))
            if not image_class_member(res.pair, res.label):
                note("forward", res.label, n, res.pair, str(mu))
        for pair in s1_set(n):
            got = produced.get(pair)
            for lab in labels:
                if image_class_member(pair, lab) and (got is None or got[0] is not lab):
                    note("reverse", lab, n, pair, got[1] if got else None)
    return [found[k] for k in sorted(found)]


def check_psi(max_n: int = 40, diagnostic_max_n: int = 35) -> CheckResult:
    """Injectivity, size preservation, codomain membership and label disjointness of psi."""
    rows = []
    for n in range(1, max_n + 1):
        seen: dict[RectPair, str] = {}
        labels: dict[RectPair, ImageClassLabel] = {}
        problem = None
        domain = list(marked_partitions(n, PC.SUPER_DISTINCT_GT1))
        for mu in domain:
            res = psi_traced(mu)
            pair = res.pair
            if pair.size != n:
                problem = problem or f"size {pair.size} from {mu}"
            elif not in_s1(pair):
                problem = problem or f"{pair.render()} outside S1 from {mu}"
            elif pair in seen:
                problem = problem or f"{pair.render()} from {seen[pair]} and {mu}"
            elif labels.get(pair, res.label) is not res.label:
                problem = problem or f"{pair.render()} carries two labels"
            seen.setdefault(pair, str(mu))
            labels.setdefault(pair, res.label)
        rows.append(Witness(n, len(domain), len(seen), problem is None,
                            routes={"domain": len(domain), "image": len(seen)}, counterexample=problem))
    diagnostics = psi_image_diagnostics(diagnostic_max_n)
    return _result("psi", 1, max_n, rows, diagnostics=diagnostics)


def psi_branch_coverage(max_n: int = 70) -> dict[PsiBranch, tuple[int, str]]:
    """First (n, input) hitting each leaf of the psi ladder, scanning n upwards."""
    hits: dict[PsiBranch, tuple[int, str]] = {}
    for n in range(1, max_n + 1):
        for mu in marked_partitions(n, PC.SUPER_DISTINCT_GT1):
            hits.setdefault(psi_traced(mu).branch, (n, str(mu)))
    return hits


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "qbinomial": check_qbinomial,
    "rr_identities": check_rr_identities,
    "beck_euler": check_beck_euler,
    "beck_pair_form": check_beck_pair_form,
    "theorem1": check_theorem1,
    "theorem1_cases": check_theorem1_cases,
    "phi": check_phi,
    "corollary": check_corollary,
    "theorem2": check_theorem2,
    "psi": check_psi,
}


# ---------------------------------------------------------------------------
# per-n tables


def _rr1_row(n: int) -> dict[str, Any]:
    lhs, rhs = total_parts(n, PC.MOD5_PM1), total_parts(n, PC.SUPER_DISTINCT)
    return {"n": n, "lhs": lhs, "rhs": rhs, "excess": lhs - rhs, "match": lhs - rhs == len(theorem1_pairs(n))}


def _rr2_row(n: int) -> dict[str, Any]:
    lhs, rhs = total_parts(n, PC.MOD5_PM2), total_parts(n, PC.SUPER_DISTINCT_GT1)
    return {"n": n, "lhs": lhs, "rhs": rhs, "excess": lhs - rhs, "match": lhs - rhs == len(s_set(n))}


def _beck_row(n: int) -> dict[str, Any]:
    lhs, rhs = total_parts(n, PC.ODD_PARTS), total_parts(n, PC.DISTINCT)
    even = len(enumerate_partitions(n, PC.EXACTLY_ONE_EVEN_PART))
    rep = len(enumerate_partitions(n, PC.EXACTLY_ONE_REPEATED_PART))
    return {"n": n, "lhs": lhs, "rhs": rhs, "excess": lhs - rhs, "match": lhs - rhs == even == rep}


def _corollary_row(n: int) -> dict[str, Any]:
    lhs, rhs = _ones(n, PC.MOD5_PM1), total_parts(n, PC.SUPER_DISTINCT)
    return {"n": n, "lhs": lhs, "rhs": rhs, "excess": lhs - rhs, "match": rhs <= lhs}


TABLES: dict[str, tuple[int, Callable[[int], dict[str, Any]]]] = {
    "rr1-beck": (0, _rr1_row),
    "rr2-beck": (0, _rr2_row),
    "beck-euler": (0, _beck_row),
    "corollary": (1, _corollary_row),
}


def table(theorem: str, max_n: int) -> list[dict[str, Any]]:
    """Rows with columns n, lhs, rhs, excess, match."""
    start, row = TABLES[theorem]
    return [row(n) for n in range(start, max_n + 1)]
