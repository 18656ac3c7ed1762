"""Exhaustive and seeded brute-force checks of the extension calculus, code
sizes, encoder equivalence and the decoding radius.

Every check returns a `CheckReport`.  Failures are recorded as dicts of
plain inputs (``law`` plus the arguments) that replay through the public
functions.  The ``phi``/``encoder`` hooks exist so that deliberately broken
variants (`strict_phi`, `forward_sequential_encoder`) can be shown to fail.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Any, Callable, Iterable, Iterator, Sequence

from .codec import decode, encode_natural, encode_sequential, heads_from_message
from .dpgp import dpgp_enumerate, dpgp_size, dpgp_size_product
from .errors import ResourceError
from .orderstat import RankSelectSet
from .perm import (
    chebyshev,
    code_min_distance,
    headset_min_distance,
    phi_symbol,
)
from .rep import (
    RepSpec,
    c1_headset,
    kloeve_spec,
    optimal_rep_size,
    optimal_spec,
    rep_enumerate,
    rep_size,
)

MAX_FAILURES_PER_LAW = 20


@dataclass
class CheckReport:
    name: str
    params: dict[str, Any]
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_text(self, timing: bool = True) -> str:
        """``key=value`` lines; byte-stable when ``timing`` is off."""
        lines = [f"name={self.name}"]
        lines += [f"param.{k}={v}" for k, v in self.params.items()]
        lines.append(f"cases={self.cases}")
        lines.append(f"failures={len(self.failures)}")
        lines += [
            f"failure.{i}={json.dumps(f, sort_keys=True)}"
            for i, f in enumerate(self.failures)
        ]
        lines.append(f"passed={'true' if self.passed else 'false'}")
        if timing:
            lines.append(f"elapsed_ms={self.elapsed_ms:.3f}")
        return "\n".join(lines) + "\n"


class _Tally:
    def __init__(self, report: CheckReport) -> None:
        self.report = report
        self._per_law: dict[str, int] = {}
        self._start = time.perf_counter()

    def check(self, ok: bool, law: str, **inputs: Any) -> None:
        self.report.cases += 1
        if ok:
            return
        seen = self._per_law.get(law, 0)
        if seen < MAX_FAILURES_PER_LAW:
            self.report.failures.append({"law": law, **inputs})
        self._per_law[law] = seen + 1

    def done(self) -> CheckReport:
        self.report.elapsed_ms = (time.perf_counter() - self._start) * 1000
        return self.report


# mutants


def strict_phi(x: int, s: int, n: int | None = None) -> int:
    """The shift with ``x > s`` in place of ``x >= s``; collides at ``x == s``."""
    return x + 1 if x > s else x


def forward_sequential_encoder(spec: RepSpec, s: Sequence[int]) -> tuple[int, ...]:
    """Sequential encoder consuming heads first-to-last instead of last-to-first."""
    free = RankSelectSet(len(s))
    return tuple(free.pop(h) for h in s)


# helpers


def _subsets(m: int, *, nonempty: bool = True) -> Iterator[tuple[int, ...]]:
    for k in range(1 if nonempty else 0, m + 1):
        yield from combinations(range(m), k)


def _interval_set(p: Sequence[int], q: Sequence[int]) -> set[tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in zip(p, q) if a != b}


def _maximum(intervals: set[tuple[int, int]]) -> tuple[int, int] | None:
    if not intervals:
        return None
    w = max(intervals, key=lambda iv: iv[1] - iv[0])
    if all(w[0] <= lo and hi <= w[1] for lo, hi in intervals):
        return w
    return None


def check_extension_laws(n_max: int = 5, *, phi: Callable[..., int] = phi_symbol, seed: int = 0) -> CheckReport:
    """Sweep the single-extension laws.

    Permutation-level laws run over every ``S_n`` with ``n <= n_max``;
    symbol-level laws over ``[2*n_max + 2]``; head-set and subset laws over
    ``[n_max + 3]``; interval laws over ``[n_max + 1]``.  Extended-code
    distance bounds use seeded random codes.
    """
    report = CheckReport(
        "extension_laws", {"n_max": n_max, "seed": seed, "phi": getattr(phi, "__name__", "phi")}
    )
    t = _Tally(report)

    def ext(p: Sequence[int], s: int) -> tuple[int, ...]:
        return (s, *[phi(x, s) for x in p])

    sym_max = 2 * n_max + 2
    for m in range(1, sym_max + 1):
        for x, y in product(range(m), repeat=2):
            for s in range(m + 1):
                fx, fy = phi(x, s), phi(y, s)
                if x < y:
                    t.check(fx < fy, "lemma1_order", x=x, y=y, s=s)
                lo, hi = min(x, y), max(x, y)
                t.check(
                    abs(fx - fy) == abs(x - y) + (lo < s <= hi),
                    "lemma3_symbol_gap", x=x, y=y, s=s,
                )

    for n in range(0, n_max + 1):
        perms = list(permutations(range(n)))
        table = {p: [ext(p, s) for s in range(n + 1)] for p in perms}

        images = set()
        for p in perms:
            for s, w in enumerate(table[p]):
                t.check(sorted(w) == list(range(n + 1)), "lemma6_valid_image", p=list(p), s=s)
                images.add(w)
        t.check(len(images) == len(perms) * (n + 1), "lemma6_injective", n=n)

        for p in perms:
            for s, u in enumerate(table[p]):
                for tt in range(s, n + 1):
                    t.check(
                        chebyshev(u, table[p][tt]) == tt - s,
                        "lemma2_twin_distance", p=list(p), s=s, t=tt,
                    )
        for p, q in combinations_with_replacement(perms, 2):
            base = chebyshev(p, q)
            ivs = _interval_set(p, q)
            big = _maximum(ivs)
            if p != q:
                t.check(
                    max(hi - lo for lo, hi in ivs) == base,
                    "interval_max_length", p=list(p), q=list(q),
                )
            for s in range(n + 1):
                ps, qs = table[p][s], table[q][s]
                dist = chebyshev(ps, qs)
                if p != q:
                    t.check(base <= dist <= base + 1, "lemma4_sandwich", p=list(p), q=list(q), s=s)
                if big is not None:
                    shifted = (phi(big[0], s), phi(big[1], s))
                    inside = big[0] < s <= big[1]
                    t.check(
                        _maximum(_interval_set(ps, qs)) == shifted
                        and dist == base + inside,
                        "lemma10_maximum_interval", p=list(p), q=list(q), s=s,
                    )
                for tt in range(n + 1):
                    dd = chebyshev(ps, table[q][tt])
                    ok = dd >= abs(s - tt) and (p != q or dd == abs(s - tt))
                    t.check(ok, "lemma5_expansive", p=list(p), q=list(q), s=s, t=tt)

        for p in perms:
            for s, tt in combinations(range(n + 1), 2):
                ivs = _interval_set(table[p][s], table[p][tt])
                want = {(s, tt)} | {(k, k + 1) for k in range(s, tt)}
                ok = ivs == want and _maximum(ivs) == (s, tt)
                if tt - s >= 2:
                    ok = ok and len(ivs) == tt - s + 1
                t.check(ok, "lemma11_twin_intervals", p=list(p), s=s, t=tt)

    m_sets = n_max + 3
    for m in range(0, m_sets + 1):
        for S in _subsets(m + 1):
            gap = headset_min_distance(S)
            for d in range(1, m + 1):
                if gap >= d:
                    t.check(d * (len(S) - 1) <= m, "theorem1_packing", S=list(S), n=m, d=d)
        for d in range(1, m + 1):
            best = tuple(range(0, m + 1, d))
            t.check(
                len(best) == m // d + 1 and headset_min_distance(best) >= d,
                "theorem1_attained", n=m, d=d,
            )

    m_iv = n_max + 1
    ivs_all = [(lo, hi) for lo, hi in combinations(range(m_iv), 2)]
    for s in range(m_iv + 1):
        img = {iv: (phi(iv[0], s), phi(iv[1], s)) for iv in ivs_all}
        for I in ivs_all:
            lo, hi = img[I]
            t.check(hi - lo == I[1] - I[0] + (I[0] < s <= I[1]), "lemma7_length", I=list(I), s=s)
        for I, J in combinations(ivs_all, 2):
            Is, Js = img[I], img[J]
            if I[1] <= J[0] or J[1] <= I[0]:
                t.check(Is[1] <= Js[0] or Js[1] <= Is[0], "lemma8_disjoint", I=list(I), J=list(J), s=s)
            for A, B, As, Bs in ((I, J, Is, Js), (J, I, Js, Is)):
                if B[0] <= A[0] and A[1] <= B[1]:
                    t.check(Bs[0] <= As[0] and As[1] <= Bs[1], "lemma9_containment", I=list(A), J=list(B), s=s)

    m16 = n_max + 3
    for A in _subsets(m16):
        for s in range(m16 + 1):
            image = sorted(phi(a, s) for a in A)
            for r, a in enumerate(A):
                t.check(phi(a, s) == image[r], "lemma16_rank_commutes", A=list(A), s=s, r=r)

    m17 = n_max + 2
    for A in _subsets(m17, nonempty=False):
        rest = [b for b in range(m17) if b not in A]
        for s in range(m17):
            lhs = {phi(b, s) for b in rest}
            rhs = set(range(m17 + 1)) - ({phi(a, s) for a in A} | {s})
            t.check(lhs == rhs and len(lhs) == len(rest), "lemma17_complement", A=list(A), s=s)

    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        perms = list(permutations(range(n)))
        for _ in range(60):
            C = rng.sample(perms, rng.randint(1, min(len(perms), 8)))
            S = sorted(rng.sample(range(n + 1), rng.randint(1, n + 1)))
            CS = {ext(p, s) for p in C for s in S}
            dC, dS = code_min_distance(C), headset_min_distance(S)
            dCS = code_min_distance(CS)
            case = {"C": [list(p) for p in C], "S": S}
            t.check(len(CS) == len(C) * len(S), "theorem2_size", **case)
            t.check(dCS >= min(dS, dC), "theorem3_lower_bound", **case)
            t.check(dCS <= dS, "theorem5_upper_head", **case)
            t.check(dCS <= dC + 1, "theorem6_upper_code", **case)
    return t.done()


def check_headset_bounds(m_max: int = 9, d_max: int = 4) -> CheckReport:
    """Every ``S ⊆ [m]`` obeys ``d*(|S|-1) <= m - 1 + c1(S; d)``."""
    report = CheckReport("headset_bounds", {"m_max": m_max, "d_max": d_max})
    t = _Tally(report)
    for m in range(1, m_max + 1):
        for S in _subsets(m):
            for d in range(1, d_max + 1):
                c = c1_headset(S, d)
                t.check(d * (len(S) - 1) <= m - 1 + c, "lemma13", S=list(S), n=m, d=d)
                if len(S) == 1:
                    t.check(c == 0, "c1_singleton", S=list(S), d=d)
    return t.done()


def check_sizes(n_max: int = 7, closed_max: int = 40) -> CheckReport:
    """DPGP and optimal REP sizes: closed forms against enumeration counts."""
    report = CheckReport("sizes", {"n_max": n_max, "closed_max": closed_max})
    t = _Tally(report)
    for n in range(1, max(n_max, closed_max) + 1):
        for d in range(1, n + 1):
            try:
                fact = dpgp_size(n, d)
            except AssertionError:
                t.check(False, "dpgp_size_forms", n=n, d=d)
                continue
            prod = dpgp_size_product(n, d)
            opt = optimal_rep_size(n, d)
            ok = fact == prod == opt
            if n <= n_max:
                cap = fact + 1
                n_dpgp = sum(1 for _ in dpgp_enumerate(n, d, cap=cap))
                n_rep = sum(1 for _ in rep_enumerate(optimal_spec(n, d), cap=cap))
                ok = ok and n_dpgp == n_rep == fact
            t.check(ok, "size_identity", n=n, d=d)
    return t.done()


def random_spec(rng: random.Random, n: int) -> RepSpec:
    """Each ``S[j]`` a uniformly sized random non-empty subset of ``[j+1]``."""
    return RepSpec.from_lists(
        sorted(rng.sample(range(j + 1), rng.randint(1, j + 1))) for j in range(n)
    )


def spec_family(seed: int, n_max: int, random_per_length: int = 100) -> Iterator[RepSpec]:
    """All optimal and q-ary specs with ``n <= n_max`` plus seeded random ones."""
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            yield optimal_spec(n, d)
        for q in range(2, n + 1):
            for d in range(1, n):
                if (q - 1) * d < n:
                    yield kloeve_spec(n, d, q)
        for _ in range(random_per_length):
            yield random_spec(rng, n)


def check_encoder_equivalence(
    spec_family_seed: int = 0,
    n_max: int = 6,
    *,
    random_per_length: int = 100,
    encoder: Callable[[RepSpec, Sequence[int]], tuple[int, ...]] = encode_sequential,
    specs: Iterable[RepSpec] | None = None,
) -> CheckReport:
    """Natural vs. sequential encoder on every message of every family spec.

    ``specs`` replaces the generated family when given.
    """
    report = CheckReport(
        "encoder_equivalence",
        {
            "seed": spec_family_seed,
            "n_max": n_max,
            "random_per_length": random_per_length,
            "encoder": getattr(encoder, "__name__", "encoder"),
        },
    )
    t = _Tally(report)
    if specs is None:
        specs = spec_family(spec_family_seed, n_max, random_per_length)
    for spec in specs:
        for x in product(*(range(len(S)) for S in spec)):
            s = heads_from_message(spec, x)
            want = encode_natural(spec, s)
            try:
                got = encoder(spec, s)
            except (IndexError, ValueError) as exc:
                got = f"error: {exc}"
            t.check(got == want, "theorem11_equivalence", spec=spec.to_lists(), heads=list(s))
    return t.done()


def check_decoding_radius(
    n: int,
    d: int,
    *,
    cap: int = 10**6,
    decoder: Callable[[RepSpec, Sequence[int]], Any] = decode,
) -> CheckReport:
    """Every codeword of ``optimal_spec(n, d)`` under every noise vector with
    entries in ``[-(ceil(d/2)-1), ceil(d/2)-1]`` decodes to its message."""
    radius = math.ceil(d / 2) - 1
    spec = optimal_spec(n, d)
    cases = rep_size(spec) * (2 * radius + 1) ** n
    if cases > cap:
        raise ResourceError(f"{cases} decode cases exceed cap {cap}")
    report = CheckReport("decoding_radius", {"n": n, "d": d, "radius": radius})
    t = _Tally(report)
    noise = list(product(range(-radius, radius + 1), repeat=n))
    for x in product(*(range(len(S)) for S in spec)):
        s = heads_from_message(spec, x)
        c = encode_sequential(spec, s)
        for e in noise:
            r = [a + b for a, b in zip(c, e)]
            t.check(decoder(spec, r).heads == s, "theorem12_radius", heads=list(s), received=r)
    return t.done()


DEFAULT_RADIUS_CASES = ((4, 3), (5, 3), (6, 4))


def run_all(seed: int = 0, *, workers: int = 1) -> list[CheckReport]:
    """The default suite; report order is fixed regardless of ``workers``."""
    jobs: list[Callable[[], CheckReport]] = [
        lambda: check_extension_laws(5, seed=seed),
        lambda: check_headset_bounds(9, 4),
        lambda: check_sizes(7, 40),
        lambda: check_encoder_equivalence(seed, 6),
    ]
    jobs += [lambda n=n, d=d: check_decoding_radius(n, d) for n, d in DEFAULT_RADIUS_CASES]
    if workers <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: job(), jobs))


__all__ = [
    "CheckReport",
    "check_decoding_radius",
    "check_encoder_equivalence",
    "check_extension_laws",
    "check_headset_bounds",
    "check_sizes",
    "forward_sequential_encoder",
    "random_spec",
    "run_all",
    "spec_family",
    "strict_phi",
]
