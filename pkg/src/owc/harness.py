"""Bound checkers and family sweeps.

Every checker returns a BoundReport and treats claims as falsifiable: a
construction or projection that fails its predicate produces a FAIL verdict
with a serialized counterexample instead of raising.  Reports are
deterministic; elapsed_ms stays null unless timings are requested, so runs
with the same inputs compare byte for byte.
"""

from __future__ import annotations

import csv
import json
import random
import time
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, TextIO

from . import constructions as recipes
from .convexity import IntervalCache
from .domination import (
    DEFAULT_CAP,
    SCRIPT_P_CONVEX,
    domination_number,
    enumerate_min_owc_sets,
    is_owc_dominating,
    owc_domination_number,
    script_p,
    script_p_realizer,
)
from .graphs import (
    Graph,
    VertexSet,
    complete_bipartite_graph,
    complete_graph,
    family,
    graph_from_spec,
    is_complete_graph,
    iter_bits,
)
from .products import ProductGraph, cartesian, lexicographic, strong

PASS = "PASS"
FAIL_LOWER = "FAIL_LOWER"
FAIL_UPPER = "FAIL_UPPER"
FAIL_CONSTRUCTION = "FAIL_CONSTRUCTION"
SKIPPED_TOO_LARGE = "SKIPPED_TOO_LARGE"

REPORT_FIELDS = (
    "check",
    "kind",
    "g_name",
    "g_order",
    "h_name",
    "h_order",
    "exact",
    "lower",
    "upper",
    "construction_sizes",
    "construction_ok",
    "verdict",
    "elapsed_ms",
    "witness",
)

PROJECTION_CAP = 16
RECTANGLE_FACTOR_CAP = 5


@dataclass(frozen=True)
class BoundReport:
    check: str
    kind: str
    g_name: str
    g_order: int
    h_name: str
    h_order: int
    exact: int | None
    lower: int | None
    upper: int | None
    construction_sizes: dict[str, int]
    construction_ok: dict[str, bool]
    verdict: str
    elapsed_ms: int | None
    witness: str
    # Text-format extras; not part of the CSV/JSONL schema.
    notes: tuple[str, ...] = ()


def format_product_set(p: ProductGraph, s: VertexSet) -> str:
    """Serialize product vertices as sorted (g,h) pairs, e.g. '(0,0);(1,2)'."""
    return ";".join(f"({a},{b})" for a, b in (p.unpair(v) for v in s))


def _verdict(exact: int | None, lower: int | None, upper: int | None, ok: dict[str, bool]) -> str:
    if exact is not None and lower is not None and exact < lower:
        return FAIL_LOWER
    if exact is not None and upper is not None and exact > upper:
        return FAIL_UPPER
    if not all(ok.values()):
        return FAIL_CONSTRUCTION
    return PASS


def _elapsed_ms(t0: float, timings: bool) -> int | None:
    return round((time.perf_counter() - t0) * 1000) if timings else None


def _skip_report(
    check: str,
    p: ProductGraph,
    cap: int,
    *,
    lower: int | None = None,
    upper: int | None = None,
    t0: float = 0.0,
    timings: bool = False,
) -> BoundReport:
    return BoundReport(
        check=check,
        kind=p.kind,
        g_name=p.left.name,
        g_order=p.left.order,
        h_name=p.right.name,
        h_order=p.right.order,
        exact=None,
        lower=lower,
        upper=upper,
        construction_sizes={},
        construction_ok={},
        verdict=SKIPPED_TOO_LARGE,
        elapsed_ms=_elapsed_ms(t0, timings),
        witness="",
        notes=(f"product order {p.order} exceeds cap {cap}",),
    )


def _bound_report(
    check: str,
    p: ProductGraph,
    built: list[recipes.ConstructionSet],
    lower: int,
    upper: int,
    notes: list[str],
    cap: int,
    workers: int,
    t0: float,
    timings: bool,
) -> BoundReport:
    sizes = {cs.recipe: cs.size for cs in built}
    ok = {cs.recipe: recipes.verify_on_product(p, cs) for cs in built}
    exact = owc_domination_number(p.graph, cap=cap, workers=workers)
    for cs in built:
        if cs.size != cs.expected_size:
            notes.append(f"{cs.recipe}: built size {cs.size} below closed form {cs.expected_size}")
    return BoundReport(
        check=check,
        kind=p.kind,
        g_name=p.left.name,
        g_order=p.left.order,
        h_name=p.right.name,
        h_order=p.right.order,
        exact=exact.value,
        lower=lower,
        upper=upper,
        construction_sizes=sizes,
        construction_ok=ok,
        verdict=_verdict(exact.value, lower, upper, ok),
        elapsed_ms=_elapsed_ms(t0, timings),
        witness=format_product_set(p, exact.witness),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Bound checks


def check_cartesian(
    g: Graph, h: Graph, *, cap: int = DEFAULT_CAP, workers: int = 1, timings: bool = False
) -> BoundReport:
    """min{m,n} <= gamma_wcon(G box H) <= min{gamma_wcon(G)*n, gamma_wcon(H)*m}."""
    t0 = time.perf_counter()
    p = cartesian(g, h)
    rg = owc_domination_number(g, cap=cap)
    rh = owc_domination_number(h, cap=cap)
    lower = min(g.order, h.order)
    upper = min(rg.value * h.order, rh.value * g.order)
    notes: list[str] = []
    if is_complete_graph(g) or is_complete_graph(h):
        tail = f"; bounds force gamma_wcon={lower}" if lower == upper else ""
        notes.append("complete factor: ceil(n/m) remark hypothesis is vacuous" + tail)
    if p.order > cap:
        return _skip_report("check_cartesian", p, cap, lower=lower, upper=upper, t0=t0, timings=timings)
    built = [
        recipes.cartesian_left_cover(p, rg.witness),
        recipes.cartesian_right_cover(p, rh.witness),
    ]
    return _bound_report("check_cartesian", p, built, lower, upper, notes, cap, workers, t0, timings)


def check_strong(
    g: Graph, h: Graph, *, cap: int = DEFAULT_CAP, workers: int = 1, timings: bool = False
) -> BoundReport:
    """max{gamma(G),gamma(H)} <= gamma_wcon(G strong H) <= min{gamma_wcon(G)*n, gamma_wcon(H)*m}."""
    t0 = time.perf_counter()
    p = strong(g, h)
    rg = owc_domination_number(g, cap=cap)
    rh = owc_domination_number(h, cap=cap)
    lower = max(domination_number(g).value, domination_number(h).value)
    upper = min(rg.value * h.order, rh.value * g.order)
    if p.order > cap:
        return _skip_report("check_strong", p, cap, lower=lower, upper=upper, t0=t0, timings=timings)
    built = [
        recipes.strong_left_cover(p, rg.witness),
        recipes.strong_right_cover(p, rh.witness),
    ]
    return _bound_report("check_strong", p, built, lower, upper, [], cap, workers, t0, timings)


def check_strong_kn(
    g: Graph, n: int, *, cap: int = DEFAULT_CAP, workers: int = 1, timings: bool = False
) -> BoundReport:
    """gamma_wcon(G strong K_n) equals gamma_wcon(G)."""
    t0 = time.perf_counter()
    p = strong(g, complete_graph(n))
    rg = owc_domination_number(g, cap=cap)
    if p.order > cap:
        return _skip_report("check_strong_kn", p, cap, lower=rg.value, upper=rg.value, t0=t0, timings=timings)
    built = [recipes.strong_kn_slice(p, rg.witness)]
    return _bound_report("check_strong_kn", p, built, rg.value, rg.value, [], cap, workers, t0, timings)


def check_strong_kmn(
    g: Graph, m: int, n: int, *, cap: int = DEFAULT_CAP, workers: int = 1, timings: bool = False
) -> BoundReport:
    """gamma_wcon(G strong K_{m,n}) <= 2*gamma(G) for m,n >= 2; equality 2 for complete G."""
    if m < 2 or n < 2:
        raise ValueError(f"both parts must be >= 2, got {m},{n}")
    t0 = time.perf_counter()
    p = strong(g, complete_bipartite_graph(m, n))
    dg = domination_number(g)
    upper = 2 * dg.value
    lower = 2 if is_complete_graph(g) else 1
    notes = [f"statement reading 2*gamma_wcon(G)={2 * owc_domination_number(g, cap=cap).value}"]
    if is_complete_graph(g):
        notes.append("complete G: sharpness expects exact=2")
    if p.order > cap:
        return _skip_report("check_strong_kmn", p, cap, lower=lower, upper=upper, t0=t0, timings=timings)
    built = [recipes.strong_kmn_pair(p, dg.witness)]
    return _bound_report("check_strong_kmn", p, built, lower, upper, notes, cap, workers, t0, timings)


def check_lexicographic(
    g: Graph, h: Graph, *, cap: int = DEFAULT_CAP, workers: int = 1, timings: bool = False
) -> BoundReport:
    """gamma_wcon(G) <= gamma_wcon(G lex H) <= gamma_wcon(G) + P_G."""
    t0 = time.perf_counter()
    p = lexicographic(g, h)
    s, p_g = script_p_realizer(g, cap=cap)
    lower = len(s)
    upper = lower + p_g
    notes: list[str] = []
    if p_g == 0:
        notes.append("P_G=0: bounds coincide, equality forced")
    p_convex = script_p(g, mode=SCRIPT_P_CONVEX, cap=cap)
    if p_convex != p_g:
        other = "none" if p_convex is None else str(p_convex)
        notes.append(f"P_G readings differ: weakly_convex={p_g}, convex={other}")
    if p.order > cap:
        return _skip_report("check_lexicographic", p, cap, lower=lower, upper=upper, t0=t0, timings=timings)
    built = [recipes.lexico_anchor(p, s)]
    return _bound_report("check_lexicographic", p, built, lower, upper, notes, cap, workers, t0, timings)


# ---------------------------------------------------------------------------
# Projection and rectangle checks


def _projection_failures(
    p: ProductGraph, sets: Iterable[VertexSet], sides: tuple[str, ...], label: str
) -> list[str]:
    out = []
    for s in sets:
        for side in sides:
            if side == "left":
                proj, factor = p.project_left(s), p.left
            else:
                proj, factor = p.project_right(s), p.right
            if not is_owc_dominating(factor, proj):
                out.append(f"{label} S={format_product_set(p, s)} side={side} proj={proj} fails in factor")
    return out


def _sample_passing_sets(
    p: ProductGraph, minimum: int, sample: int, rng: random.Random, cache: IntervalCache
) -> list[VertexSet]:
    """Seeded random non-minimum OWC dominating sets of the product."""
    found: list[VertexSet] = []
    tries = 0
    while len(found) < sample and tries < 50 * max(sample, 1):
        tries += 1
        if minimum + 1 > p.order:
            break
        k = rng.randint(minimum + 1, p.order)
        s = VertexSet.of(p.order, rng.sample(range(p.order), k))
        if is_owc_dominating(p.graph, s, cache):
            found.append(s)
    return found


def _projection_report(
    check: str,
    p: ProductGraph,
    sides: tuple[str, ...],
    cap: int,
    workers: int,
    sample: int,
    seed: int,
    t0: float,
    timings: bool,
) -> BoundReport:
    if p.order > cap:
        return _skip_report(check, p, cap, t0=t0, timings=timings)
    exact = owc_domination_number(p.graph, cap=cap, workers=workers)
    min_sets = enumerate_min_owc_sets(p.graph, cap=cap, workers=workers)
    cache = IntervalCache(p.graph)
    rng = random.Random(f"{seed}:{check}:{p.graph.name}")
    sampled = _sample_passing_sets(p, exact.value, sample, rng, cache)
    failures = _projection_failures(p, min_sets, sides, "minimum")
    failures += _projection_failures(p, sampled, sides, "sampled")
    notes = (
        f"minimum_sets={len(min_sets)}",
        f"sampled_sets={len(sampled)}",
        f"falsifications={len(failures)}",
    )
    return BoundReport(
        check=check,
        kind=p.kind,
        g_name=p.left.name,
        g_order=p.left.order,
        h_name=p.right.name,
        h_order=p.right.order,
        exact=exact.value,
        lower=None,
        upper=None,
        construction_sizes={},
        construction_ok={},
        verdict=PASS if not failures else FAIL_CONSTRUCTION,
        elapsed_ms=_elapsed_ms(t0, timings),
        witness=failures[0] if failures else "",
        notes=notes,
    )


def check_cartesian_projection(
    g: Graph,
    h: Graph,
    *,
    cap: int = PROJECTION_CAP,
    workers: int = 1,
    sample: int = 20,
    seed: int = 7,
    timings: bool = False,
) -> BoundReport:
    """Projections of OWC dominating sets of G box H are OWC dominating in both factors."""
    t0 = time.perf_counter()
    p = cartesian(g, h)
    return _projection_report(
        "check_cartesian_projection", p, ("left", "right"), cap, workers, sample, seed, t0, timings
    )


def check_lexico_projection(
    g: Graph,
    h: Graph,
    *,
    cap: int = PROJECTION_CAP,
    workers: int = 1,
    sample: int = 20,
    seed: int = 7,
    timings: bool = False,
) -> BoundReport:
    """Left projections of OWC dominating sets of G lex H are OWC dominating in G."""
    t0 = time.perf_counter()
    p = lexicographic(g, h)
    return _projection_report(
        "check_lexico_projection", p, ("left",), cap, workers, sample, seed, t0, timings
    )


def check_cartesian_rectangle(
    g: Graph, h: Graph, *, factor_cap: int = RECTANGLE_FACTOR_CAP, timings: bool = False
) -> BoundReport:
    """No rectangle S1 x S2 with both factors proper is OWC dominating in G box H."""
    t0 = time.perf_counter()
    p = cartesian(g, h)
    if g.order > factor_cap or h.order > factor_cap:
        report = _skip_report("check_cartesian_rectangle", p, factor_cap, t0=t0, timings=timings)
        return replace(report, notes=(f"factor order exceeds cap {factor_cap}",))
    cache = IntervalCache(p.graph)
    n = h.order
    failures = []
    checked = 0
    for s1 in range((1 << g.order) - 1):
        for s2 in range((1 << h.order) - 1):
            checked += 1
            bits = 0
            for a in iter_bits(s1):
                bits |= s2 << (a * n)
            if is_owc_dominating(p.graph, VertexSet(p.order, bits), cache):
                failures.append(
                    f"S1={VertexSet(g.order, s1)} S2={VertexSet(h.order, s2)} rectangle passes"
                )
    return BoundReport(
        check="check_cartesian_rectangle",
        kind=p.kind,
        g_name=g.name,
        g_order=g.order,
        h_name=h.name,
        h_order=h.order,
        exact=None,
        lower=None,
        upper=None,
        construction_sizes={},
        construction_ok={},
        verdict=PASS if not failures else FAIL_CONSTRUCTION,
        elapsed_ms=_elapsed_ms(t0, timings),
        witness=failures[0] if failures else "",
        notes=(f"rectangles_checked={checked}", f"falsifications={len(failures)}"),
    )


# ---------------------------------------------------------------------------
# Sweep configuration


CHECK_NAMES = ("cartesian", "strong", "strong-kn", "strong-kmn", "lex", "projection", "rectangle")

DEFAULT_CONFIG_TEXT = """\
# Default sweep: the five bound checks over small families, product cap 20.
cap=20
seed=7
sample=20
checks=cartesian,strong,strong-kn,strong-kmn,lex
family=path:2..4
family=cycle:3..5
family=complete:2..4
family=star:3
family=complete_bipartite:2,2
kn=2,3
kmn=2,2
"""


class ConfigError(ValueError):
    """A sweep config line failed to parse."""


@dataclass(frozen=True)
class SweepConfig:
    cap: int = 20
    seed: int = 7
    sample: int = 20
    checks: tuple[str, ...] = ("cartesian", "strong", "strong-kn", "strong-kmn", "lex")
    families: tuple[str, ...] = (
        "path:2..4",
        "cycle:3..5",
        "complete:2..4",
        "star:3",
        "complete_bipartite:2,2",
    )
    kn: tuple[int, ...] = (2, 3)
    kmn: tuple[tuple[int, int], ...] = ((2, 2),)


def _parse_int(value: str, line: int, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"line {line}: {key} expects an integer, got {value!r}") from None


def parse_sweep_config(text: str) -> SweepConfig:
    cap, seed, sample = 20, 7, 20
    checks: list[str] | None = None
    families: list[str] | None = None
    kn: list[int] | None = None
    kmn: list[tuple[int, int]] | None = None
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {i}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "cap":
            cap = _parse_int(value, i, key)
            if cap < 1:
                raise ConfigError(f"line {i}: cap must be >= 1")
        elif key == "seed":
            seed = _parse_int(value, i, key)
        elif key == "sample":
            sample = _parse_int(value, i, key)
            if sample < 0:
                raise ConfigError(f"line {i}: sample must be >= 0")
        elif key == "checks":
            checks = [c.strip() for c in value.split(",") if c.strip()]
            for c in checks:
                if c not in CHECK_NAMES:
                    raise ConfigError(
                        f"line {i}: unknown check {c!r}; known: {', '.join(CHECK_NAMES)}"
                    )
        elif key == "family":
            try:
                expand_family_spec(value)
            except ValueError as exc:
                raise ConfigError(f"line {i}: bad family spec {value!r}: {exc}") from None
            families = (families or []) + [value]
        elif key == "kn":
            kn = kn or []
            for tok in value.split(","):
                v = _parse_int(tok.strip(), i, key)
                if v < 2:
                    raise ConfigError(f"line {i}: kn values must be >= 2")
                kn.append(v)
        elif key == "kmn":
            parts = [t.strip() for t in value.split(",")]
            if len(parts) != 2:
                raise ConfigError(f"line {i}: kmn expects 'm,n'")
            m, n = (_parse_int(t, i, key) for t in parts)
            if m < 2 or n < 2:
                raise ConfigError(f"line {i}: kmn parts must be >= 2")
            kmn = (kmn or []) + [(m, n)]
        else:
            raise ConfigError(f"line {i}: unknown key {key!r}")
    base = SweepConfig()
    return SweepConfig(
        cap=cap,
        seed=seed,
        sample=sample,
        checks=tuple(checks) if checks is not None else base.checks,
        families=tuple(families) if families is not None else base.families,
        kn=tuple(kn) if kn is not None else base.kn,
        kmn=tuple(kmn) if kmn is not None else base.kmn,
    )


def default_config() -> SweepConfig:
    return parse_sweep_config(DEFAULT_CONFIG_TEXT)


def expand_family_spec(spec: str) -> list[Graph]:
    """Expand 'path:2..4' into graphs; plain graph specs pass through."""
    if spec.startswith("@") or ":" not in spec:
        return [graph_from_spec(spec)]
    name, _, params = spec.partition(":")
    ranges: list[range] = []
    for tok in params.split(","):
        tok = tok.strip()
        if ".." in tok:
            lo, _, hi = tok.partition("..")
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError(f"empty range {tok!r}")
            ranges.append(range(lo_i, hi_i + 1))
        else:
            v = int(tok)
            ranges.append(range(v, v + 1))
    out = []
    combos = [[]]
    for r in ranges:
        combos = [c + [v] for c in combos for v in r]
    for combo in combos:
        out.append(family(name, *combo))
    return out


def build_pool(cfg: SweepConfig) -> list[Graph]:
    pool: list[Graph] = []
    for spec in cfg.families:
        pool.extend(expand_family_spec(spec))
    return pool


# ---------------------------------------------------------------------------
# Sweep driver


def _unordered_pairs(pool: list[Graph]) -> Iterator[tuple[Graph, Graph]]:
    for i, g in enumerate(pool):
        for h in pool[i:]:
            yield g, h


def _ordered_pairs(pool: list[Graph]) -> Iterator[tuple[Graph, Graph]]:
    for g in pool:
        for h in pool:
            yield g, h


def run_sweep(
    cfg: SweepConfig, *, workers: int = 1, timings: bool = False
) -> list[BoundReport]:
    """Run the configured checks over the family pool, in config order."""
    pool = build_pool(cfg)
    reports: list[BoundReport] = []
    for name in cfg.checks:
        if name == "cartesian":
            for g, h in _unordered_pairs(pool):
                reports.append(check_cartesian(g, h, cap=cfg.cap, workers=workers, timings=timings))
        elif name == "strong":
            for g, h in _unordered_pairs(pool):
                reports.append(check_strong(g, h, cap=cfg.cap, workers=workers, timings=timings))
        elif name == "strong-kn":
            for g in pool:
                for n in cfg.kn:
                    reports.append(check_strong_kn(g, n, cap=cfg.cap, workers=workers, timings=timings))
        elif name == "strong-kmn":
            for g in pool:
                for m, n in cfg.kmn:
                    reports.append(
                        check_strong_kmn(g, m, n, cap=cfg.cap, workers=workers, timings=timings)
                    )
        elif name == "lex":
            for g, h in _ordered_pairs(pool):
                reports.append(
                    check_lexicographic(g, h, cap=cfg.cap, workers=workers, timings=timings)
                )
        elif name == "projection":
            cap = min(cfg.cap, PROJECTION_CAP)
            for g, h in _unordered_pairs(pool):
                reports.append(
                    check_cartesian_projection(
                        g, h, cap=cap, workers=workers, sample=cfg.sample, seed=cfg.seed, timings=timings
                    )
                )
            for g, h in _ordered_pairs(pool):
                reports.append(
                    check_lexico_projection(
                        g, h, cap=cap, workers=workers, sample=cfg.sample, seed=cfg.seed, timings=timings
                    )
                )
        elif name == "rectangle":
            for g, h in _unordered_pairs(pool):
                reports.append(check_cartesian_rectangle(g, h, timings=timings))
        else:
            raise ValueError(f"unknown check {name!r}")
    return reports


def count_verdicts(reports: Iterable[BoundReport]) -> dict[str, int]:
    counts = {PASS: 0, FAIL_LOWER: 0, FAIL_UPPER: 0, FAIL_CONSTRUCTION: 0, SKIPPED_TOO_LARGE: 0}
    for r in reports:
        counts[r.verdict] += 1
    return counts


def any_failures(reports: Iterable[BoundReport]) -> bool:
    return any(r.verdict.startswith("FAIL") for r in reports)


# ---------------------------------------------------------------------------
# Serialization


def report_row(r: BoundReport) -> dict:
    return {name: getattr(r, name) for name in REPORT_FIELDS}


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return "|".join(f"{k}:{_csv_cell(v)}" for k, v in value.items())
    return str(value)


def write_reports(reports: Iterable[BoundReport], stream: TextIO, fmt: str = "text") -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for r in reports:
            writer.writerow([_csv_cell(v) for v in report_row(r).values()])
    elif fmt == "jsonl":
        for r in reports:
            stream.write(json.dumps(report_row(r), separators=(",", ":")) + "\n")
    elif fmt == "text":
        for r in reports:
            stream.write(format_report_text(r) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}; expected csv, jsonl, or text")


def format_report_text(r: BoundReport) -> str:
    bounds = f"[{'' if r.lower is None else r.lower},{'' if r.upper is None else r.upper}]"
    cons = ",".join(
        f"{k}:{r.construction_sizes[k]}:{'ok' if r.construction_ok[k] else 'FAIL'}"
        for k in r.construction_sizes
    )
    head = (
        f"{r.check} {r.g_name} x {r.h_name}: exact={'?' if r.exact is None else r.exact} "
        f"bounds={bounds} constructions=[{cons}] verdict={r.verdict}"
    )
    if r.witness:
        head += f" witness={r.witness}"
    if r.elapsed_ms is not None:
        head += f" elapsed_ms={r.elapsed_ms}"
    if r.notes:
        head += " | " + "; ".join(r.notes)
    return head
