"""Seeded verification suites over random ensembles.

Each suite draws (matrix, transform) instances from an :class:`EnsembleSpec`
and checks one property end to end: interlacing of the compressed spectrum,
agreement of independent computation routes, the Moore-Penrose axioms,
eigensolver output against characteristic-polynomial oracles, or (the one
negative result) that oblique compressions do violate interlacing.

Seed discipline: each suite gets ``derive_seed(master, suite_position)``
where the position is fixed by the canonical SUITES order, and each trial
gets ``derive_seed(suite_seed, trial_index)``.  A trial is therefore fully
reproducible from the (suite, trial_index, master seed) triple its record
carries, independent of which other suites ran.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields

import numpy as np

from .ensembles import (
    DEFAULT_N_RANGE,
    EnsembleSpec,
    draw_spectrum,
    hermitian_with_spectrum,
    random_full_column_rank,
    random_invertible_nonunitary,
    random_rank_l,
    random_unitary,
    selection_matrix,
)
from .eigen import REALNESS_TOL, Spectrum, eigvals_general, eigvals_hermitian, match_distance, spectral_scale
from .errors import ContractViolation, NumericalError, RealnessViolation
from .interlace import INTERLACE_REL_TOL, ZERO_REL_TOL, check_interlacing, classify_real, extract_nonzero
from .linalg import adjoint, numerical_rank, penrose_residuals, pseudo_inverse
from .oracles import charpoly_eigenvalues
from .rng import SplitMix64, derive_seed
from .transforms import inflate_transform, oblique_transform, pseudo_similarity, unitary_compression

#: canonical suite order; positions index the per-suite seed derivation
SUITES = (
    "interlace-full-rank",
    "interlace-rank-deficient",
    "interlace-inflated",
    "subsumption",
    "oblique-counterexample",
    "mp-axioms",
    "solver-oracle",
)

#: suites whose failures flip the process exit status (the oblique search
#: reports not-found as a warning instead)
THEOREM_SUITES = frozenset(s for s in SUITES if s != "oblique-counterexample")

REALNESS_REL_TOL = 1e-8           # max |imag| per spectral scale, interlace suites
UNITARY_PINV_TOL = 1e-10          # pinv(Q) vs Q^H, subsumption
SUBSUME_ROUTE_TOL = 1e-9          # compression route agreement, subsumption
MP_TOL = 1e-8                     # Penrose residuals
ORACLE_TOL = 1e-6                 # solver vs charpoly roots, trace/det
OBLIQUE_DEFAULT_N = 3
OBLIQUE_DEFAULT_SEED = 7
OBLIQUE_DEFAULT_CAP = 100.0
OBLIQUE_DEFAULT_BUDGET = 1000
WITNESS_TIGHTEN = 10.0            # re-verification factor for oblique witnesses


@dataclass
class Tolerances:
    """Optional overrides of module defaults; None keeps the default.

    All values are relative factors multiplied by the spectral or entry
    scale of the quantity under test, except ``rank`` which replaces the
    rank-detection threshold factor directly.
    """

    interlace: float | None = None
    rank: float | None = None
    zero: float | None = None
    realness: float | None = None
    mp: float | None = None
    unitary_pinv: float | None = None
    route: float | None = None
    oracle: float | None = None

    def resolved(self):
        return {
            "interlace": INTERLACE_REL_TOL if self.interlace is None else self.interlace,
            "rank": self.rank,  # None means per-matrix default
            "zero": ZERO_REL_TOL if self.zero is None else self.zero,
            "realness": REALNESS_REL_TOL if self.realness is None else self.realness,
            "mp": MP_TOL if self.mp is None else self.mp,
            "unitary_pinv": UNITARY_PINV_TOL if self.unitary_pinv is None else self.unitary_pinv,
            "route": SUBSUME_ROUTE_TOL if self.route is None else self.route,
            "oracle": ORACLE_TOL if self.oracle is None else self.oracle,
        }


@dataclass
class ExperimentConfig:
    suites: tuple[str, ...]
    ensemble: EnsembleSpec
    trials: int = 200
    tolerances: Tolerances = field(default_factory=Tolerances)
    out: str | None = None
    format: str = "table"

    def __post_init__(self):
        self.suites = tuple(self.suites)
        if not self.suites:
            raise ContractViolation("at least one suite must be selected")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ContractViolation(f"unknown suite tag(s) {unknown}; valid: {list(SUITES)}")
        if self.trials < 1:
            raise ContractViolation(f"trials must be >= 1, got {self.trials}")
        if self.format not in ("table", "csv", "json-lines"):
            raise ContractViolation(f"unknown format {self.format!r}")


@dataclass
class TrialRecord:
    """One verification trial, flat so csv and json-lines share field names.

    A failed record carries (suite, trial_index, seed, n, k, l), which is
    everything needed to regenerate the trial standalone.
    """

    suite: str
    trial_index: int
    seed: int
    n: int
    k: int
    l: int
    passed: bool
    min_lower_margin: float
    min_upper_margin: float
    worst_residual: float
    notes: str = ""


RECORD_FIELDS = tuple(f.name for f in fields(TrialRecord))

#: exceptions a trial may raise without halting the suite
_TRIAL_ERRORS = (ContractViolation, NumericalError, np.linalg.LinAlgError, FloatingPointError)


def _finite(x) -> float:
    x = float(x)
    return x if np.isfinite(x) else 0.0


def _draw_dims(rng: SplitMix64, spec: EnsembleSpec, suite: str) -> tuple[int, int, int]:
    """Per-trial dimensions honoring any pinned ensemble fields and the
    suite's structural constraints (full rank, deficient rank, or inflation)."""
    n_lo, n_hi = DEFAULT_N_RANGE
    if suite == "interlace-full-rank":
        n = spec.n if spec.n is not None else rng.randint(n_lo, n_hi)
        l = spec.l if spec.l is not None else rng.randint(1, n)
        return n, l, l
    if suite == "interlace-rank-deficient":
        n = spec.n if spec.n is not None else rng.randint(max(2, n_lo), 12)
        k = spec.k if spec.k is not None else rng.randint(2, n)
        l = spec.l if spec.l is not None else rng.randint(1, min(n, k) - 1)
        return n, k, l
    if suite == "interlace-inflated":
        n = spec.n if spec.n is not None else rng.randint(max(2, n_lo), 12)
        k = spec.k if spec.k is not None else rng.randint(n + 1, 24)
        l = spec.l if spec.l is not None else rng.randint(1, min(n, k) - 1)
        return n, k, l
    if suite == "subsumption":
        n = spec.n if spec.n is not None else rng.randint(n_lo, n_hi)
        l = spec.l if spec.l is not None else rng.randint(1, n)
        return n, l, l
    raise ContractViolation(f"no dimension rule for suite {suite!r}")


def _interlace_trial(rng: SplitMix64, spec: EnsembleSpec, suite: str, tols) -> dict:
    n, k, l = _draw_dims(rng, spec, suite)
    lam = np.sort(draw_spectrum(rng, spec, n))
    p = hermitian_with_spectrum(rng, lam)

    if suite == "interlace-full-rank":
        h = random_full_column_rank(rng, n, l, spec.condition_cap)
        result = pseudo_similarity(p, h, tols["rank"])
    else:
        core = random_full_column_rank(rng, n, l, spec.condition_cap)
        v = random_unitary(rng, k, l)
        result = inflate_transform(p, core, v, tols["rank"])

    spectrum = eigvals_general(result.transformed)
    realness_dev = float(np.abs(spectrum.values.imag).max()) / spectral_scale(spectrum.values)
    real_values = classify_real(spectrum, tols["realness"])
    eta, zero_count = extract_nonzero(real_values, result.input_rank, tols["zero"])
    report = check_interlacing(lam, eta, tols["interlace"] * spectral_scale(lam))

    lo, hi = report.min_margins()
    worst = max(realness_dev, result.route_deviation or 0.0)
    notes = []
    if result.input_rank != l:
        notes.append(f"rank {result.input_rank} != target {l} ({zero_count} zeros)")
    if not report.passed:
        notes.append(f"interlacing violated (tol {report.tol_used:.3e})")
    passed = report.passed and not notes
    return dict(n=n, k=k, l=l, passed=passed,
                min_lower_margin=_finite(lo), min_upper_margin=_finite(hi),
                worst_residual=worst, notes="; ".join(notes),
                hermitian=result.hermitian)


def _subsumption_trial(rng: SplitMix64, spec: EnsembleSpec, tols) -> dict:
    n, k, l = _draw_dims(rng, spec, "subsumption")
    lam = np.sort(draw_spectrum(rng, spec, n))
    p = hermitian_with_spectrum(rng, lam)
    q = random_unitary(rng, n, l)

    pinv_dev = float(np.abs(pseudo_inverse(q, tols["rank"]) - adjoint(q)).max())
    classical = unitary_compression(p, q)
    general = pseudo_similarity(p, q, tols["rank"])
    route_dev = float(np.abs(classical.transformed - general.transformed).max())

    notes = []
    if pinv_dev > tols["unitary_pinv"]:
        notes.append(f"pinv(q) deviates from adjoint by {pinv_dev:.3e}")
    if route_dev > tols["route"]:
        notes.append(f"compression routes deviate by {route_dev:.3e}")
    return dict(n=n, k=k, l=l, passed=not notes,
                min_lower_margin=0.0, min_upper_margin=0.0,
                worst_residual=max(pinv_dev, route_dev), notes="; ".join(notes))


_MP_SHAPES = ("tall-full", "wide-full", "square-full", "tall-deficient",
              "wide-deficient", "square-deficient")


def _mp_trial(rng: SplitMix64, spec: EnsembleSpec, trial_index: int, tols) -> dict:
    """Penrose conditions on one matrix; shapes cycle deterministically so
    every run covers full-rank, rank-deficient, tall, wide, and square."""
    shape_kind = _MP_SHAPES[trial_index % len(_MP_SHAPES)]
    n_lo, n_hi = DEFAULT_N_RANGE
    rows = spec.n if spec.n is not None else rng.randint(max(2, n_lo), n_hi)
    if shape_kind.startswith("tall"):
        cols = rng.randint(1, rows)
    elif shape_kind.startswith("wide"):
        cols = rng.randint(rows, 24)
    else:
        cols = rows

    if shape_kind.endswith("full"):
        if cols <= rows:
            m = random_full_column_rank(rng, rows, cols, spec.condition_cap)
        else:
            m = adjoint(random_full_column_rank(rng, cols, rows, spec.condition_cap))
        rank_target = min(rows, cols)
    else:
        rank_target = rng.randint(1, max(1, min(rows, cols) - 1))
        m = random_rank_l(rng, rows, cols, rank_target, spec.condition_cap)

    pinv = pseudo_inverse(m, tols["rank"])
    residuals = penrose_residuals(m, pinv)
    worst = max(residuals)
    notes = []
    if numerical_rank(m, tols["rank"]) != rank_target:
        notes.append(f"rank {numerical_rank(m, tols['rank'])} != target {rank_target}")
    if worst > tols["mp"]:
        labels = ("m p m = m", "p m p = p", "(m p)^H = m p", "(p m)^H = p m")
        bad = [lab for lab, r in zip(labels, residuals) if r > tols["mp"]]
        notes.append(f"Penrose residual {worst:.3e} > {tols['mp']:.1e} ({'; '.join(bad)})")
    return dict(n=rows, k=cols, l=rank_target, passed=not notes,
                min_lower_margin=0.0, min_upper_margin=0.0,
                worst_residual=worst, notes="; ".join(notes))


def _oracle_trial(rng: SplitMix64, spec: EnsembleSpec, tols) -> dict:
    """LAPACK-backed solvers against the characteristic-polynomial oracle
    (n <= 4) plus trace/determinant identities (n <= 6)."""
    n = rng.randint(2, 4)
    g = rng.complex_normals((n, n))
    hm = (g + adjoint(g)) / 2.0

    worst = 0.0
    notes = []
    for matrix, solver in ((g, eigvals_general), (hm, eigvals_hermitian)):
        computed = solver(matrix).values
        oracle = charpoly_eigenvalues(matrix)
        dev = match_distance(computed, oracle) / spectral_scale(oracle)
        worst = max(worst, dev)
        if dev > tols["oracle"]:
            notes.append(f"{solver.__name__} deviates from charpoly roots by {dev:.3e}")

    n_td = rng.randint(2, 6)
    g6 = rng.complex_normals((n_td, n_td))
    w = eigvals_general(g6).values
    trace_dev = abs(w.sum() - np.trace(g6)) / max(1.0, abs(np.trace(g6)))
    det = np.linalg.det(g6)
    det_dev = abs(np.prod(w) - det) / max(1.0, abs(det))
    worst = max(worst, trace_dev, det_dev)
    if trace_dev > tols["oracle"]:
        notes.append(f"trace identity off by {trace_dev:.3e}")
    if det_dev > tols["oracle"]:
        notes.append(f"determinant identity off by {det_dev:.3e}")

    return dict(n=n, k=n_td, l=n, passed=not notes,
                min_lower_margin=0.0, min_upper_margin=0.0,
                worst_residual=worst, notes="; ".join(notes))


def _oblique_draw(rng: SplitMix64, spec: EnsembleSpec, control: str | None):
    n = spec.n if spec.n is not None else OBLIQUE_DEFAULT_N
    if n < 2:
        raise ContractViolation("oblique search needs n >= 2")
    lam = np.sort(draw_spectrum(rng, spec, n))
    p = hermitian_with_spectrum(rng, lam)
    if control == "identity":
        x = np.eye(n, dtype=np.complex128)
    elif control == "unitary":
        x = random_unitary(rng, n, n)
    elif control is None:
        x = random_invertible_nonunitary(rng, n, spec.condition_cap, spec.nonunitarity_floor)
    else:
        raise ContractViolation(f"unknown control arm {control!r}")
    l = rng.randint(1, n - 1)
    sel = sorted(rng.choose_distinct(l, n))
    return lam, p, x, sel


def _oblique_violation(lam, p, x, sel, interlace_rel: float, realness_rel: float):
    """(violation magnitude, lower margin, upper margin, note) for one draw.

    Magnitude is how far past the tolerance the draw lands: positive means
    the interlacing claim fails here, by complex eigenvalues or by a
    margin breach.  Zero means the draw is consistent with interlacing.
    """
    t = oblique_transform(p, x, sel).transformed
    spectrum = eigvals_general(t)
    scale = spectral_scale(spectrum.values)
    imag_dev = float(np.abs(spectrum.values.imag).max()) / scale
    if imag_dev > realness_rel:
        return imag_dev, -imag_dev, 0.0, f"complex spectrum (max rel imag {imag_dev:.3e})"
    eta = np.sort(spectrum.values.real)
    tol = interlace_rel * spectral_scale(lam)
    report = check_interlacing(lam, eta, tol)
    lo, hi = report.min_margins()
    if not report.passed:
        breach = max(-lo, -hi) / spectral_scale(lam)
        return breach, lo, hi, f"interlacing violated (worst margin {min(lo, hi):.3e})"
    return 0.0, lo, hi, ""


def counterexample_search(config: ExperimentConfig, control: str | None = None) -> TrialRecord | None:
    """Hunt for an oblique compression that breaks interlacing.

    Draws (P, X, selection) until a draw fails the interlacing check, then
    re-verifies the candidate from its seed alone with tolerances tightened
    by 10x and the eigenvalues cross-checked against the
    characteristic-polynomial oracle when the compressed block is small.
    Returns the witnessing record, or None when the budget is exhausted
    (which the control arms are expected to do every time).
    """
    if control not in (None, "unitary", "identity"):
        raise ContractViolation(f"unknown control arm {control!r}")
    spec = config.ensemble
    tols = config.tolerances.resolved()
    suite_seed = derive_seed(spec.seed, SUITES.index("oblique-counterexample"))
    for trial_index in range(config.trials):
        trial_seed = derive_seed(suite_seed, trial_index)
        rng = SplitMix64(trial_seed)
        try:
            lam, p, x, sel = _oblique_draw(rng, spec, control)
            magnitude, lo, hi, note = _oblique_violation(
                lam, p, x, sel, tols["interlace"], tols["realness"])
        except _TRIAL_ERRORS:
            continue
        if magnitude <= 0.0:
            continue

        # independent recomputation from the bare seed, 10x tightened
        rng2 = SplitMix64(trial_seed)
        lam2, p2, x2, sel2 = _oblique_draw(rng2, spec, control)
        magnitude2, lo2, hi2, note2 = _oblique_violation(
            lam2, p2, x2, sel2,
            WITNESS_TIGHTEN * tols["interlace"], WITNESS_TIGHTEN * tols["realness"])
        if magnitude2 <= 0.0:
            continue
        t2 = oblique_transform(p2, x2, sel2).transformed
        if t2.shape[0] <= 6:
            oracle_dev = match_distance(eigvals_general(t2).values, charpoly_eigenvalues(t2))
            if oracle_dev > ORACLE_TOL * spectral_scale(lam2):
                continue
        return TrialRecord(
            suite="oblique-counterexample",
            trial_index=trial_index,
            seed=trial_seed,
            n=lam2.size, k=len(sel2), l=len(sel2),
            passed=True,
            min_lower_margin=_finite(lo2), min_upper_margin=_finite(hi2),
            worst_residual=magnitude2,
            notes=f"witness: {note2}",
        )
    return None


def _not_found_record(config: ExperimentConfig, control: str | None) -> TrialRecord:
    spec = config.ensemble
    arm = f", control={control}" if control else ""
    return TrialRecord(
        suite="oblique-counterexample",
        trial_index=config.trials - 1,
        seed=spec.seed,
        n=spec.n if spec.n is not None else OBLIQUE_DEFAULT_N, k=0, l=0,
        passed=True,
        min_lower_margin=0.0, min_upper_margin=0.0, worst_residual=0.0,
        notes=f"no witness in {config.trials} draws{arm}",
    )


def run_suite(config: ExperimentConfig) -> list[TrialRecord]:
    """Execute every configured suite; failures are recorded, never raised.

    Output order is (suite as configured, trial index), so a fixed config
    yields an identical record list on every run.
    """
    spec = config.ensemble
    tols = config.tolerances.resolved()
    records: list[TrialRecord] = []
    for suite in config.suites:
        if suite == "oblique-counterexample":
            witness = counterexample_search(config)
            records.append(witness if witness is not None else _not_found_record(config, None))
            continue
        suite_seed = derive_seed(spec.seed, SUITES.index(suite))
        for trial_index in range(config.trials):
            trial_seed = derive_seed(suite_seed, trial_index)
            rng = SplitMix64(trial_seed)
            try:
                if suite in ("interlace-full-rank", "interlace-rank-deficient", "interlace-inflated"):
                    outcome = _interlace_trial(rng, spec, suite, tols)
                elif suite == "subsumption":
                    outcome = _subsumption_trial(rng, spec, tols)
                elif suite == "mp-axioms":
                    outcome = _mp_trial(rng, spec, trial_index, tols)
                else:
                    outcome = _oracle_trial(rng, spec, tols)
            except _TRIAL_ERRORS as exc:
                outcome = dict(n=spec.n or 0, k=spec.k or 0, l=spec.l or 0,
                               passed=False, min_lower_margin=0.0, min_upper_margin=0.0,
                               worst_residual=0.0,
                               notes=f"{type(exc).__name__}: {exc}")
            outcome.pop("hermitian", None)
            records.append(TrialRecord(suite=suite, trial_index=trial_index,
                                       seed=trial_seed, **outcome))
    return records


def failed_theorem_records(records) -> list[TrialRecord]:
    return [r for r in records if r.suite in THEOREM_SUITES and not r.passed]
