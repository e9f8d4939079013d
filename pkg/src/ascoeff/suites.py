"""Named verification suites shared by the CLI and the tests."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import minors, moments, setpair, young
from .param_ring import random_points
from .recurrence import coeff as rec_coeff, g, q1_closed_form, verify_classical_bridge
from .report import Entry, Report


def pmap(fn, items, jobs: int = 1) -> list:
    """Order-preserving map; jobs > 1 uses worker processes."""
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _formula_check(nk) -> list[Entry]:
    n, k = nk
    tag = f"n={n},k={k}"
    ref = g(n + k, n)
    return [Entry("young", tag, young.coeff_young(n, k) == ref),
            Entry("setpair", tag, setpair.coeff_setpair(n, k) == ref),
            Entry("positive", tag, ref.is_nonneg())]


def formulas(max_total: int = 12, jobs: int = 1) -> Report:
    rep = Report()
    cells = [(n, t - n) for t in range(max_total + 1) for n in range(t + 1)]
    for part in pmap(_formula_check, cells, jobs):
        rep.entries.extend(part)
    for n in range(min(max_total, 10) + 1):
        for k in range(n + 1):
            lhs = rec_coeff("prime", n, n - k).subs(q=1)
            rep.add("q1", f"n={n},k={k}", lhs == q1_closed_form(n, k))
    return rep


def lattice(max_total: int = 8) -> Report:
    rep = Report()
    for t in range(max_total + 1):
        for n in range(t + 1):
            k = t - n
            tag = f"n={n},k={k}"
            rep.add("young.paths", tag, young.lattice_path_oracle(n, k) == young.coeff_tilde(n, k))
            rep.add("setpair.paths", tag, setpair.pos2_graph_oracle(n, k)
                    == setpair.coeff_setpair(n, k).subs(e2=0))
    return rep


def young_suite(max_total: int = 6) -> Report:
    rep = Report()
    for n in range(1, max_total + 1):
        for k in range(max_total - n + 1):
            young.verify_young_identities(n, k, rep)
    young.verify_mod(max_total + 2, rep)
    return rep


def _bijection_cell(nab) -> list[Entry]:
    n, a, b = nab
    tag = f"n={n},a={a},b={b}"
    return [Entry("psi", tag, setpair.check_psi(n, a, b)),
            Entry("swap", tag, setpair.swap_symmetry(n, a, b)),
            Entry("rank", tag, setpair.rank_stability(n, a, b))]


def _triples(max_total: int):
    for t in range(max_total + 1):
        for n in range(t + 1):
            for a in range(t - n + 1):
                yield n, a, t - n - a


def bijection(max_total: int = 8, simple_max: int = 10, jobs: int = 1) -> Report:
    rep = Report()
    B2, A2 = setpair.psi(1, 3, 4, (0, 2, 3), (2, 4, 5, 7))
    rep.add("psi.example", "n=1,a=3,b=4", (B2, A2) == ((0, 2, 3, 4), (2, 5, 7)))
    for part in pmap(_bijection_cell, list(_triples(max_total)), jobs):
        rep.entries.extend(part)
    for n, a, b in _triples(simple_max):
        rep.add("simple", f"n={n},a={a},b={b}", setpair.verify_simple_identity(n, a, b))
    return rep


def setpair_suite(max_total: int = 6, jobs: int = 1) -> Report:
    rep = Report()
    extracted = setpair.coeff_of_y(setpair.M_mu_xy((0, 0), 2, 2), (0, 1))
    rep.add("coeff.example", "mu=(0,0),n=2,b=2",
            extracted == setpair.coeff_extract_M((0, 0), 2, 2, (0, 1))
            and str(extracted) == "1 + q^3 + 2*q^4 + q^5 + q^8")
    setpair.verify_M_identities(max_total, rep)
    rep.extend(bijection(max_total, max_total, jobs))
    return rep


def minors_suite(max_total: int = 6, jobs: int = 1) -> Report:
    rep = Report()
    for n, a, b in _triples(max_total + 1):
        rep.add("two_step", f"n={n},a={a},b={b}", minors.verify_two_step(n, a, b)[1])
    minors.verify_M_inequalities(min(max_total, 5), rep)
    N = max_total + 1
    for r in minors.sweep_positivity(N, 3, minors.all_specs(), jobs):
        if r.nonvanishing:
            rep.add("minor", f"spec={r.spec},rows={list(r.rows)},cols={list(r.cols)}".replace(" ", ""),
                    r.nonneg)
    return rep


def pasep(max_total: int = 6, points: int = 20, seed: int = 0) -> Report:
    pts = random_points(points, seed)
    rep = moments.verify_moments(max_total + 2, pts)
    for t in range(max_total + 1):
        for n in range(t + 1):
            rep.add("bridge", f"n={n},k={t - n}", verify_classical_bridge(n, t - n, pts))
    return rep


SUITES = ("formulas", "lattice", "young", "setpair", "minors", "pasep")


def run_suite(name: str, max_total: int, points: int = 20, seed: int = 0,
              jobs: int = 1) -> Report:
    if name == "formulas":
        return formulas(max_total, jobs)
    if name == "lattice":
        return lattice(max_total)
    if name == "young":
        return young_suite(max_total)
    if name == "setpair":
        return setpair_suite(max_total, jobs)
    if name == "minors":
        return minors_suite(max_total, jobs)
    if name == "pasep":
        return pasep(max_total, points, seed)
    if name == "all":
        rep = Report()
        for s in SUITES:
            rep.extend(run_suite(s, max_total, points, seed, jobs))
        return rep
    raise ValueError(f"unknown suite {name!r}")
