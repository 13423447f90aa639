"""Verification suites and conjecture probes.

Each suite re-derives a finitely checkable claim by exhaustive search or exact
arithmetic and records one ``Claim`` row per checked instance. Expected values
come either from closed forms evaluated at run time or from independent
computations done inside the suite; the ``basis`` column says which.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import product

from . import constructions as C
from . import detectors as D
from .bounds import (
    PowerSumConstraint,
    erdos_envelope_classes,
    erdos_envelope,
    pigeonhole_check,
    power_sum_max,
    predicted_tp,
    turan_path_number,
)
from .errors import BudgetExceeded, DegturanError
from .graph import canonical_form, ep
from .patterns import Pattern, parse_pattern
from .search import MAX_ENUM_N, _ep_values, code_key, code_to_graph, enumerate_codes, local_search_tp


@dataclass
class Claim:
    claim_id: str
    cite: str
    params: dict
    expected: str
    observed: str
    passed: bool
    basis: str = "closed form"


@dataclass
class SuiteReport:
    name: str
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def check(self, claim_id, cite, params, expected, observed, basis="closed form", passed=None):
        ok = (expected == observed) if passed is None else bool(passed)
        self.claims.append(Claim(claim_id, cite, dict(params), str(expected), str(observed), ok, basis))
        return ok

    def to_dict(self, include_elapsed=True) -> dict:
        d = {
            "suite": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "claims": [asdict(c) for c in self.claims],
            "notes": list(self.notes),
        }
        if include_elapsed:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def summary_lines(self) -> list[str]:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {sum(c.passed for c in self.claims)}/{len(self.claims)} claims"]
        for c in self.claims:
            if not c.passed:
                lines.append(f"  FAIL {c.claim_id} {c.params}: expected {c.expected}, observed {c.observed}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return lines


# ---------------------------------------------------------------------------
# cached exhaustive data

_JOBS = 1


@lru_cache(maxsize=None)
def _codes(n: int, pattern: str):
    P = parse_pattern(pattern) if pattern else None
    codes, _ = enumerate_codes(n, P, budget=None, jobs=_JOBS)
    return codes


@lru_cache(maxsize=None)
def _tp(n: int, pattern: str, p: int):
    """``(value, witness keys, class count)`` from the cached enumeration."""
    codes = _codes(n, pattern)
    vals = _ep_values(codes, n, p)
    best = max(vals)
    wit = tuple(sorted(code_key(codes[i], n) for i, v in enumerate(vals) if v == best))
    return best, wit, len(codes)


def _graphs(n: int, pattern: str = ""):
    return [code_to_graph(c, n) for c in _codes(n, pattern)]


def _threshold(flags: dict[int, bool]) -> int | None:
    """Smallest n such that the flag holds for every tested n at or above it."""
    first = None
    for n in sorted(flags, reverse=True):
        if not flags[n]:
            break
        first = n
    return first


def _f_closed(n: int) -> int:
    return n * n + 2 * n - 3 if n % 2 else n * n + 2 * n - 6


# ---------------------------------------------------------------------------
# suites


def suite_theorem_1_1(rep: SuiteReport):
    cite = "Theorem 1.1"
    for k, ns in ((3, range(3, 11)), (4, range(4, 9))):
        pat = f"K{k}"
        for n, p in product(ns, (1, 2, 3)):
            val, _, _ = _tp(n, pat, p)
            rep.check("tp_clique_equals_turan", cite, {"n": n, "k": k, "p": p}, ep(C.turan_graph(n, k), p), val)
    from .search import multipartite_tp

    cite = "Theorem 1.1 sharpness (p >= 4)"
    r = multipartite_tp(10, 3, 4)
    t = ep(C.turan_graph(10, 3), 4)
    rep.check("multipartite_tp_10_3_4", cite, {"n": 10, "k": 3, "p": 4}, 8320, r.value, basis="derived constant")
    rep.check("optimal_parts", cite, {"n": 10, "k": 3, "p": 4}, [[8, 2]], r.details["parts"], basis="derived constant")
    rep.check("turan_e4", cite, {"n": 10}, 6250, t, basis="derived constant")
    rep.check("exceeds_turan", cite, {"n": 10}, True, r.value > t)
    k46 = ep(C.complete_bipartite(4, 6), 4)
    rep.check("K46_e4", cite, {"n": 10}, 6720, k46, basis="derived constant")
    rep.check("K46_exceeds_turan", cite, {"n": 10}, True, k46 > t)
    for n in range(4, 11):
        rep.check(
            "multipartite_matches_exhaustive_K3",
            "Corollary 2.1",
            {"n": n, "p": 4},
            multipartite_tp(n, 3, 4).value,
            _tp(n, "K3", 4)[0],
            basis="exhaustive oracle",
        )


def suite_theorem_1_2(rep: SuiteReport):
    cite = "Theorem 1.2"
    for k, window in ((4, range(6, 13)), (6, range(8, 13))):
        flags = {}
        for n in range(k, 13):
            val, wit, _ = _tp(n, f"P{k}", 2)
            H = C.h_graph(n, k)
            ok = val == ep(H, 2) and wit == (canonical_form(H),)
            flags[n] = ok
            if n in window:
                rep.check("tp_path_equals_H", cite, {"n": n, "k": k, "p": 2}, ep(H, 2), val)
                rep.check("H_unique_extremal", cite, {"n": n, "k": k, "p": 2}, [canonical_form(H).graph6], [w.graph6 for w in wit])
                rep.check("H_is_path_free", cite, {"n": n, "k": k}, False, D.contains_path(H, k))
        rep.notes.append(f"P{k}: H(n,{k}) uniquely optimal for every tested n >= {_threshold(flags)} (tested {k}..12)")


def suite_lemma_p5(rep: SuiteReport):
    cite = "Lemma l340"
    H = C.h_graph(12, 5)
    for p in (2, 3):
        val, wit, _ = _tp(12, "P5", p)
        closed = 11**p + 2 ** (p + 1) + 9
        rep.check("tp_P5_n12", cite, {"n": 12, "p": p}, closed, val)
        rep.check("H12_5_closed_form", cite, {"p": p}, closed, ep(H, p))
        rep.check("unique_witness_H12_5", cite, {"n": 12, "p": p}, [canonical_form(H).graph6], [w.graph6 for w in wit])
        k4s = ep(C.complete_graph(4), p) * 3
        rep.check("three_K4_value", cite, {"p": p}, 12 * 3**p, k4s)
        rep.check("H12_5_beats_three_K4", cite, {"p": p}, True, closed > k4s)
    rep.check("H12_5_P5_free", cite, {}, False, D.contains_path(H, 5))
    flags = {}
    for n in range(5, 13):
        val, wit, _ = _tp(n, "P5", 2)
        Hn = C.h_graph(n, 5)
        flags[n] = val == ep(Hn, 2) and wit == (canonical_form(Hn),)
    rep.notes.append(f"P5: H(n,5) uniquely optimal for every tested n >= {_threshold(flags)} (tested 5..12)")


def suite_theorem_1_3(rep: SuiteReport):
    cite = "Theorem 1.3"
    flags = {}
    rows = {}
    for n in range(3, 13):
        val, wit, _ = _tp(n, "Cstar", 2)
        F = C.friendship_graph(n)
        rows[n] = (val, wit)
        flags[n] = val == ep(F, 2) and wit == (canonical_form(F),)
    first = _threshold(flags)
    rep.notes.append(f"Cstar: F_n uniquely optimal for every tested n >= {first} (tested 3..12)")
    for n in range(7, 13):
        F = C.friendship_graph(n)
        rep.check("F_n_closed_form", "Section 1", {"n": n}, _f_closed(n), ep(F, 2))
        if first is not None and n >= first:
            val, wit = rows[n]
            rep.check("tp_even_cycles_equals_F", cite, {"n": n, "p": 2}, _f_closed(n), val)
            rep.check("F_unique_extremal", cite, {"n": n, "p": 2}, [canonical_form(F).graph6], [w.graph6 for w in wit])
        else:
            rep.notes.append(f"Cstar n={n}: observed {rows[n][0]}, e_2(F_n)={_f_closed(n)} (small-n exception)")
    # structural facts on every even-cycle-free class
    for n in range(1, 13):
        edge_ok = True
        top2_ok = True
        for g in _graphs(n, "Cstar"):
            if g.edge_count > (3 * (n - 1)) // 2:
                edge_ok = False
            d = sorted(g.degrees(), reverse=True)
            if n >= 2 and d[0] + d[1] > n + 1:
                top2_ok = False
        rep.check("edges_at_most_3(n-1)/2", "Section 1", {"n": n}, True, edge_ok)
        rep.check("top_two_degrees_at_most_n+1", "Theorem 1.3 proof", {"n": n}, True, top2_ok)


def suite_props_4(rep: SuiteReport):
    for n in range(5, 11):
        val, _, _ = _tp(n, "S4", 2)
        rep.check("tp_S4", "Prop 4.2", {"n": n, "p": 2}, 4 * n, val)
        val, _, _ = _tp(n, "S5", 2)
        exp = 9 * n if n % 2 == 0 else 9 * (n - 1) + 4
        rep.check("tp_S5", "Prop 4.2", {"n": n, "p": 2}, exp, val)
        rep.check("prediction_S5", "Prop 4.2", {"n": n, "p": 2}, exp, predicted_tp(Pattern.star(5), n, 2).value)
    val, wit, _ = _tp(11, "Sstar:5", 2)
    rep.check("tp_near_star_5_n11", "Prop 4.3", {"n": 11, "p": 2}, 110, val, basis="closed form (n-1)^2+(n-1)")
    rep.check("near_star_witness_S11", "Prop 4.3", {"n": 11}, [canonical_form(C.star_graph(11)).graph6], [w.graph6 for w in wit])
    for n in range(6, 11):
        m2 = _tp(n, "M2", 2)[0]
        p4 = _tp(n, "P4", 2)[0]
        fo = _tp(n, "forest:2,2", 2)[0]
        rep.check("tp_M2_eq_tp_P4", "Prop 4.1", {"n": n, "p": 2}, p4, m2, basis="exhaustive oracle")
        rep.check("tp_forest22_eq_tp_P4", "Prop 4.1", {"n": n, "p": 2}, p4, fo, basis="exhaustive oracle")
        rep.check("tp_P4_eq_H(n,4)", "Prop 4.1", {"n": n, "p": 2}, ep(C.h_graph(n, 4), 2), p4)
    # Sidorenko-type edge bound and the lower-bound witness for S_{3,3}
    for n in range(1, 11):
        gs = _graphs(n, "Dstar:3")
        emax = max(g.edge_count for g in gs)
        rep.check("S33_free_edges_at_most_2n", "Prop 4.4", {"n": n}, True, emax <= 2 * n, basis="bound")
        if n >= 3:
            lb = ep(C.complete_bipartite(2, n - 2), 2)
            rep.check("K2n-2_lower_bound", "Prop 4.4", {"n": n, "p": 2}, True, lb <= _tp(n, "Dstar:3", 2)[0], basis="bound")


def suite_prop_2_2(rep: SuiteReport):
    cite = "Prop 2.2"
    paw = "g6:" + C.paw().to_graph6()
    flags = {}
    for n in range(3, 11):
        a = _tp(n, paw, 2)[0]
        b = _tp(n, "K3", 2)[0]
        flags[n] = a == b
        if n >= 6:
            rep.check("tp_paw_eq_tp_K3", cite, {"n": n, "p": 2}, b, a, basis="exhaustive oracle")
    rep.notes.append(f"paw vs K3: agreement for every tested n >= {_threshold(flags)} (tested 3..10)")


def suite_prop_5_2(rep: SuiteReport):
    cite = "Prop 5.2"
    for a, k in ((2, 2), (2, 3), (3, 3)):
        sound = True
        certified = 0
        for n in range(1, 8):
            for g in _graphs(n):
                chk = pigeonhole_check(g, a, k)
                if chk.certifies_containment:
                    certified += 1
                    if not D.contains_complete_bipartite(g, min(a, k), max(a, k)):
                        sound = False
        rep.check("pigeonhole_sound", cite, {"a": a, "k": k, "n_max": 7}, True, sound, basis="exhaustive oracle")
        rep.notes.append(f"K_{{{a},{k}}}: pigeonhole certified {certified} classes on n <= 7")
    lhs = pigeonhole_check(C.complete_graph(5), 2, 3)
    rep.check("K5_certificate", cite, {"a": 2, "k": 3}, (20, 10, True), (lhs.lhs, lhs.rhs, lhs.certifies_containment), basis="derived constant")


def _brute_power_sum(n, S, D, p):
    return max(
        (sum(x**p for x in xs) for xs in product(range(D + 1), repeat=n) if sum(xs) <= S),
        default=0,
    )


def suite_identities(rep: SuiteReport):
    ok = True
    bad = None
    for n in range(1, 51):
        for y in range(1, n + 1):
            for x in range(y + 2, n - y + 1):
                lhs = (y + 1) * (n - y - 1) ** 2 + (x - 1) * (n - x + 1) ** 2 - y * (n - y) ** 2 - x * (n - x) ** 2
                if lhs != (x - y - 1) * (n + 3 * (n - x - y)):
                    ok, bad = False, (n, x, y)
    rep.check("shift_identity_p2", "Theorem 1.1 proof", {"n_max": 50}, True, ok, basis="exact arithmetic")
    if bad:
        rep.notes.append(f"shift identity fails at n,x,y={bad}")
    for p in (2, 3):
        ok = True
        for n in range(1, 31):
            for y in range(1, n + 1):
                for x in range(y + 2, n - y + 1):
                    delta = (y + 1) * (n - y - 1) ** p + (x - 1) * (n - x + 1) ** p - y * (n - y) ** p - x * (n - x) ** p
                    if delta <= 0:
                        ok = False
        rep.check("transfer_increases_ep", "Theorem 1.1 proof", {"p": p, "n_max": 30}, True, ok, basis="exact arithmetic")
    ok = all(ep(C.friendship_graph(n), 2) == _f_closed(n) for n in range(3, 41))
    rep.check("friendship_e2_closed_forms", "Section 1", {"n": "3..40"}, True, ok)
    for k in (4, 5, 6):
        for n in range(1, 10):
            emax = _tp(n, f"P{k}", 1)[0] // 2
            rep.check("turan_path_number", "Lemma 3.1", {"n": n, "k": k}, turan_path_number(n, k), emax, basis="exhaustive oracle")
    ok = True
    for n, S, Dcap, p in product(range(0, 6), range(0, 11), range(0, 7), (2, 3)):
        if power_sum_max(PowerSumConstraint(n, S, Dcap, p)) != _brute_power_sum(n, S, Dcap, p):
            ok = False
    rep.check("power_sum_max_brute_force", "Lemma 3.3", {"n": "0..5", "S": "0..10", "D": "0..6", "p": "2,3"}, True, ok, basis="exhaustive oracle")


def suite_detectors(rep: SuiteReport):
    pats = ["P4", "P5", "P6", "K3", "K4", "K5", "C4", "C5", "C6", "M2", "M3", "S4", "S5", "Kab:2,2", "Kab:2,3", "Sstar:5", "Dstar:2"]
    graphs = _graphs(6)
    rep.check("six_vertex_classes", "enumeration", {"n": 6}, 156, len(graphs), basis="known count")
    for text in pats:
        P = parse_pattern(text)
        H = P.graph()
        agree = all(D.is_pattern_free(g, P) == (not D.contains_subgraph(g, H)) for g in graphs)
        rep.check("specialized_equals_generic", "detectors", {"pattern": text}, True, agree, basis="generic oracle")
    for n in range(1, 9):
        ok = True
        for g in _graphs(n):
            gen = any(D.contains_subgraph(g, C.cycle_graph(2 * t)) for t in range(2, n // 2 + 1))
            if gen != D.contains_even_cycle(g):
                ok = False
        rep.check("even_cycle_block_test", "detectors", {"n": n}, True, ok, basis="generic oracle")
    for k, nmax in ((3, 7), (4, 6)):
        for n in range(1, nmax + 1):
            ok = True
            for g in _graphs(n, f"K{k}"):
                classes = erdos_envelope_classes(g, k)
                env = erdos_envelope(g, k)
                if len(classes) > k - 1 or D.contains_clique(env, k):
                    ok = False
                if any(a > b for a, b in zip(g.degrees(), env.degrees())):
                    ok = False
                if any(ep(g, p) > ep(env, p) for p in (1, 2, 3, 4)):
                    ok = False
            rep.check("envelope_dominance", "Lemma 2.1", {"k": k, "n": n}, True, ok, basis="exhaustive oracle")


SUITES = {
    "theorem-1.1": suite_theorem_1_1,
    "theorem-1.2": suite_theorem_1_2,
    "theorem-1.3": suite_theorem_1_3,
    "lemma-p5": suite_lemma_p5,
    "props-4": suite_props_4,
    "prop-2.2": suite_prop_2_2,
    "prop-5.2": suite_prop_5_2,
    "identities": suite_identities,
    "detectors": suite_detectors,
}
SUITE_IDS = tuple(SUITES) + ("all",)


def run_verification_suite(name: str, jobs: int = 1) -> list[SuiteReport]:
    """Run one suite (or ``all``); one report per suite."""
    global _JOBS
    if name not in SUITE_IDS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_IDS)}")
    _JOBS = max(1, jobs)
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for nm in names:
        rep = SuiteReport(nm)
        t0 = time.perf_counter()
        SUITES[nm](rep)
        rep.elapsed = time.perf_counter() - t0
        reports.append(rep)
    return reports


# ---------------------------------------------------------------------------
# probes

PROBE_IDS = ("problem-6.3", "conjecture-6.4")
PROBE_MAX_N = 12


def probe_conjecture(
    name: str,
    n_min: int,
    n_max: int,
    p: int = 2,
    k: int = 3,
    budget: int | None = None,
    lower_bound_beyond: bool = False,
) -> list[dict]:
    """Data table for an open question; reports numbers only.

    Exhaustive search runs up to ``n = 12`` by default; an explicit ``budget``
    lifts that guard to the enumeration limit, with the class budget applied.
    With ``lower_bound_beyond`` the conjecture probe falls back to local search
    past the limit and marks those rows non-exhaustive.
    """
    if name not in PROBE_IDS:
        raise KeyError(f"unknown probe {name!r}; choose from {', '.join(PROBE_IDS)}")
    if n_min < 1 or n_max < n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    limit = PROBE_MAX_N if budget is None else MAX_ENUM_N
    if n_max > limit and not (lower_bound_beyond and name == "conjecture-6.4"):
        raise BudgetExceeded(f"n={n_max} exceeds the exhaustive probe limit n <= {limit}")
    rows = []
    if name == "problem-6.3":
        P = Pattern.cycle(4)
        for n in range(n_min, n_max + 1):
            codes, _ = enumerate_codes(n, P, budget=budget)
            val = max(_ep_values(codes, n, 2))
            f = ep(C.friendship_graph(n), 2)
            rows.append({"n": n, "p": 2, "t_p": str(val), "e2_F_n": str(f), "equal": val == f, "exhaustive": True})
        return rows
    P = Pattern.cycle(2 * k)
    for n in range(n_min, n_max + 1):
        if n <= limit:
            codes, _ = enumerate_codes(n, P, budget=budget)
            val, exhaustive = max(_ep_values(codes, n, p)), True
        else:
            val, exhaustive = local_search_tp(n, P, p).value, False
        ref = (k - 1) * n**p
        rows.append(
            {"n": n, "p": p, "k": k, "t_p": str(val), "leading_term": str(ref), "difference": str(val - ref), "exhaustive": exhaustive}
        )
    return rows


__all__ = [
    "Claim",
    "DegturanError",
    "PROBE_IDS",
    "SUITE_IDS",
    "SuiteReport",
    "probe_conjecture",
    "run_verification_suite",
]
