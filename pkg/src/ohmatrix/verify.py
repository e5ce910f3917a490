"""Identity verification suite over single instances or seeded families.

Every matrix identity the library promises is checked against independent
reconstructions, most of them through the brute-force walk enumerator.
A failing check always carries a reproducible counterexample: the canonical
serialization of the instance plus the first differing entries, and the
seeds that regenerate it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import (
    OrientedHypergraph,
    SwitchingFunction,
    incidence_dual,
    is_simple,
    switch,
    validate,
)
from .matrices import (
    LabeledIntegerMatrix,
    adjacency_matrix,
    degree_matrix,
    incidence_matrix,
    laplacian,
    switching_matrix,
)
from .signed import from_hypergraph, line_graph, to_hypergraph, underlying_is_simple
from .walks import (
    EnumerationLimits,
    EnumerationLimitError,
    backstep_count,
    walk_counts,
    walk_matrix,
    weak_walk_matrix,
)
from .io import random_instance, serialize_instance


@dataclass(frozen=True)
class VerifyOptions:
    """Bounds and knobs for the verification suite.

    Family mode generates ``trials`` random instances within the size caps;
    ``non_simple_rate`` is the fraction of trials that use a generator with
    repeated incidences.  ``max_walk_incidences`` bounds the walk oracle
    (adjacency powers are checked up to half that many steps).
    """

    trials: int = 100
    max_vertices: int = 8
    max_edges: int = 8
    max_edge_size: int = 4
    max_walk_incidences: int = 8
    switching_trials: int = 20
    non_simple_rate: float = 0.3
    limits: EnumerationLimits = field(default_factory=EnumerationLimits)
    self_test: bool = False


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    instance_summary: str
    status: str  # "pass" or "fail"
    counterexample: str | None = None
    seed: int | None = None
    trial: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Canonically ordered check results plus a completeness flag.

    ``complete`` is False when a resource ceiling cut some checks short;
    ``notes`` then says where.
    """

    results: tuple[CheckResult, ...]
    complete: bool = True
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "results", tuple(self.results))
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.status == "fail")

    def passed(self) -> bool:
        return not self.failures and self.complete


def _summary(g: OrientedHypergraph, trial: int | None = None) -> str:
    base = (
        f"|V|={len(g.vertices)} |E|={len(g.edges)} "
        f"|I|={len(g.incidences)} simple={is_simple(g)}"
    )
    return base if trial is None else f"trial={trial} {base}"


def _matrix_diff(
    left_name: str,
    left: LabeledIntegerMatrix,
    right_name: str,
    right: LabeledIntegerMatrix,
) -> str | None:
    if left == right:
        return None
    if left.row_labels != right.row_labels or left.col_labels != right.col_labels:
        return (
            f"{left_name} and {right_name} have different labels: "
            f"{left.row_labels}x{left.col_labels} vs {right.row_labels}x{right.col_labels}"
        )
    cells = [
        f"({r}, {c}): {left.entries[i][j]} vs {right.entries[i][j]}"
        for i, r in enumerate(left.row_labels)
        for j, c in enumerate(left.col_labels)
        if left.entries[i][j] != right.entries[i][j]
    ]
    shown = "; ".join(cells[:6]) + ("; ..." if len(cells) > 6 else "")
    return f"{left_name} differs from {right_name} at {shown}"


class _Recorder:
    def __init__(self, g: OrientedHypergraph, seed: int | None, trial: int | None):
        self.g = g
        self.seed = seed
        self.trial = trial
        self.summary = _summary(g, trial)
        self.results: list[CheckResult] = []

    def _counterexample(self, detail: str) -> str:
        return f"{detail}\ninstance:\n{serialize_instance(self.g)}"

    def matrices(self, name, left_name, left, right_name, right, extra: str = "") -> None:
        diff = _matrix_diff(left_name, left, right_name, right)
        if diff is None:
            self.results.append(
                CheckResult(name, self.summary, "pass", None, self.seed, self.trial)
            )
        else:
            if extra:
                diff = f"{diff} [{extra}]"
            self.results.append(
                CheckResult(
                    name, self.summary, "fail", self._counterexample(diff), self.seed, self.trial
                )
            )

    def condition(self, name, ok: bool, detail: str) -> None:
        self.results.append(
            CheckResult(
                name,
                self.summary,
                "pass" if ok else "fail",
                None if ok else self._counterexample(detail),
                self.seed,
                self.trial,
            )
        )


def _instance_checks(
    g: OrientedHypergraph,
    seed: int | None,
    trial: int | None,
    options: VerifyOptions,
    theta_seed: int,
) -> list[CheckResult]:
    rec = _Recorder(g, seed, trial)
    simple = is_simple(g)
    limits = options.limits

    h = incidence_matrix(g)
    a = adjacency_matrix(g)
    d = degree_matrix(g)
    lap = laplacian(g)
    gd = incidence_dual(g)

    rec.condition(
        "duality_involution",
        incidence_dual(gd) == g,
        "applying the incidence dual twice did not restore the instance",
    )
    rec.matrices(
        "incidence_dual_transpose",
        "H of the dual", incidence_matrix(gd),
        "H transposed", h.transpose(),
    )
    rec.matrices("laplacian_decomposition", "L", lap, "D - A", d - a)
    rec.matrices("laplacian_incidence_product", "L", lap, "H * H^T", h @ h.transpose())
    rec.matrices(
        "dual_laplacian_product",
        "L of the dual", laplacian(gd),
        "H^T * H", h.transpose() @ h,
    )

    sizes = {g.edge_size(e) for e in g.edges}
    if simple and len(sizes) == 1:
        k = next(iter(sizes))
        ki = LabeledIntegerMatrix.diagonal(g.edges, [k] * len(g.edges))
        rec.matrices(
            "uniform_dual_identity",
            "H^T * H", h.transpose() @ h,
            f"{k}I - A of the dual", ki - adjacency_matrix(gd),
        )

    rec.matrices("half_walk_incidence", "half-step walk matrix", walk_matrix(g, "V", "E", 1, limits), "H", h)
    rec.matrices(
        "half_walk_laplacian",
        "product of half-step walk matrices",
        walk_matrix(g, "V", "E", 1, limits) @ walk_matrix(g, "E", "V", 1, limits),
        "L", lap,
    )

    oracle_name = "walk_oracle_power" if simple else "walk_oracle_power_nonsimple"
    oracle_diff = None
    for k in range(0, options.max_walk_incidences // 2 + 1):
        oracle_diff = _matrix_diff(
            f"A^{k}", a.power(k), f"signed {k}-step walk counts", walk_matrix(g, "V", "V", 2 * k, limits)
        )
        if oracle_diff is not None:
            break
    rec.condition(oracle_name, oracle_diff is None, oracle_diff or "")

    backstep_bad = [
        v for v in g.vertices if backstep_count(g, v) != g.degree(v)
    ]
    degree_bad = []
    for i, vi in enumerate(g.vertices):
        for j, vj in enumerate(g.vertices):
            weak_total = walk_counts(g, vi, vj, 2, weak=True, limits=limits).total
            strict_total = walk_counts(g, vi, vj, 2, weak=False, limits=limits).total
            if weak_total - strict_total != d.entries[i][j]:
                degree_bad.append(f"({vi}, {vj})")
    rec.condition(
        "degree_backsteps",
        not backstep_bad and not degree_bad,
        f"backstep count mismatches at {backstep_bad}; "
        f"weak minus strict walk totals mismatch degree matrix at {degree_bad}",
    )

    lap_bad = []
    for i, vi in enumerate(g.vertices):
        for j, vj in enumerate(g.vertices):
            weak_total = walk_counts(g, vi, vj, 2, weak=True, limits=limits).total
            plus = walk_counts(g, vi, vj, 2, weak=False, limits=limits).positive
            if lap.entries[i][j] != weak_total - 2 * plus:
                lap_bad.append(f"({vi}, {vj})")
    rec.condition(
        "laplacian_walk_entries",
        not lap_bad,
        f"L entry differs from weak total minus twice the positive count at {lap_bad}",
    )

    if simple:
        rec.matrices(
            "weak_walk_laplacian",
            "weak one-step walk matrix", weak_walk_matrix(g, "V", "V", 2, limits),
            "-L", -lap,
        )

    theta_rng = random.Random(theta_seed)
    switching_diff = None
    for _ in range(options.switching_trials):
        theta = SwitchingFunction({v: theta_rng.choice((1, -1)) for v in g.vertices})
        dt = switching_matrix(theta, g.vertices)
        gs = switch(g, theta)
        for name, left, right in (
            ("A", adjacency_matrix(gs), dt.transpose() @ a @ dt),
            ("H", incidence_matrix(gs), dt @ h),
            ("L", laplacian(gs), dt.transpose() @ lap @ dt),
        ):
            switching_diff = _matrix_diff(f"{name} after switching", left, f"conjugated {name}", right)
            if switching_diff is not None:
                switching_diff += f" [theta={theta.assignment}]"
                break
        if switching_diff is not None:
            break
    rec.condition("switching_conjugation", switching_diff is None, switching_diff or "")

    if simple and sizes == {2}:
        s = from_hypergraph(g)
        if underlying_is_simple(s):
            lam = line_graph(s)
            a_line = adjacency_matrix(to_hypergraph(lam))
            rec.matrices(
                "line_graph_dual_adjacency",
                "A of the line graph", a_line,
                "A of the dual", adjacency_matrix(gd),
            )
            two_i = LabeledIntegerMatrix.diagonal(g.edges, [2] * len(g.edges))
            rec.matrices(
                "line_graph_incidence_identity",
                "H^T * H", h.transpose() @ h,
                "2I - A of the line graph", two_i - a_line,
            )

    return rec.results


def _harness_self_test() -> CheckResult:
    from .core import Incidence

    g = OrientedHypergraph(
        ("v1", "v2"), ("e1",), (Incidence("v1", "e1", 1, 1), Incidence("v2", "e1", 1, 1))
    )
    lap = laplacian(g)
    corrupted = LabeledIntegerMatrix(
        lap.row_labels,
        lap.col_labels,
        [
            [x + (1 if i == 0 and j == 0 else 0) for j, x in enumerate(row)]
            for i, row in enumerate(lap.entries)
        ],
    )
    diff = _matrix_diff("corrupted L", corrupted, "D - A", degree_matrix(g) - adjacency_matrix(g))
    detected = diff is not None and "(v1, v1)" in diff
    return CheckResult(
        "harness_self_test",
        _summary(g),
        "pass" if detected else "fail",
        None if detected else "a corrupted Laplacian entry went undetected",
        None,
        None,
    )


def run_verify_suite(
    instance: OrientedHypergraph | None = None,
    *,
    seed: int = 0,
    options: VerifyOptions = VerifyOptions(),
) -> VerificationReport:
    """Run every identity check on one instance or on a seeded random family.

    With an ``instance`` the checks run once on it (the seed still feeds the
    random switching functions).  Without one, ``options.trials`` instances
    are generated from ``seed``.  Output ordering is canonical: results are
    sorted by check name, then trial.
    """
    results: list[CheckResult] = []
    notes: list[str] = []
    complete = True
    master = random.Random(seed)

    if instance is not None:
        problems = validate(instance)
        if problems:
            raise ValueError("instance is invalid: " + "; ".join(problems))
        targets = [(None, instance, master.getrandbits(64))]
    else:
        targets = []
        for trial in range(options.trials):
            trng = random.Random(master.getrandbits(64))
            nv = trng.randint(1, options.max_vertices)
            ne = trng.randint(0, options.max_edges)
            if trng.random() < options.non_simple_rate:
                mes = trng.randint(1, options.max_edge_size)
                g = random_instance(
                    trng.getrandbits(64), nv, ne, mes, simple=False, non_simple_rate=0.35
                )
            else:
                mes = trng.randint(1, min(options.max_edge_size, nv))
                g = random_instance(trng.getrandbits(64), nv, ne, mes, simple=True)
            targets.append((trial, g, trng.getrandbits(64)))

    for trial, g, theta_seed in targets:
        try:
            results.extend(_instance_checks(g, seed, trial, options, theta_seed))
        except EnumerationLimitError as exc:
            complete = False
            where = "single instance" if trial is None else f"trial {trial}"
            notes.append(f"{where}: {exc}")

    if options.self_test:
        results.append(_harness_self_test())

    results.sort(key=lambda r: (r.check_name, -1 if r.trial is None else r.trial))
    return VerificationReport(tuple(results), complete, tuple(notes))


def format_report(report: VerificationReport) -> str:
    """One line per check plus a summary, in canonical order."""
    lines = []
    for r in report.results:
        if r.status == "pass":
            lines.append(f"PASS {r.check_name} [{r.instance_summary}]")
        else:
            lines.append(f"FAIL {r.check_name} [{r.instance_summary}] seed={r.seed}")
            if r.counterexample:
                lines.extend("  " + ln for ln in r.counterexample.splitlines())
    failed = len(report.failures)
    lines.append(f"{len(report.results)} checks: {len(report.results) - failed} passed, {failed} failed")
    if not report.complete:
        lines.append("INCOMPLETE: a resource ceiling cut some checks short")
        lines.extend("  " + note for note in report.notes)
    return "\n".join(lines) + "\n"
