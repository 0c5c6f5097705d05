"""Oracle-vs-pipeline reconciliations for the `selftest` subcommand.

Each check pits the trace pipeline against an independent brute-force
computation; any mismatch fails the run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .equidist import mass_check
from .oracle import (
    CURVE_11A,
    delta_expansion,
    dim_Sk_level1,
    ec_ap,
    hecke_eigenvalues_prime_power,
)
from .resolvent import verify_rtf
from .trace import TraceContext, trace_T

_PRIMES_50 = (2, 3, 5, 7, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _check_tau() -> tuple[str, bool, str]:
    tau = delta_expansion(30)
    ctx = TraceContext(12, 1)
    bad = [m for m in range(1, 31) if trace_T(m, ctx).total != tau[m]]
    return "tau(m) == tr T(m)|S_12(SL2) for m <= 30", not bad, f"mismatch at {bad[:3]}"

def _check_dims() -> tuple[str, bool, str]:
    bad = [
        k
        for k in range(4, 41, 2)
        if trace_T(1, TraceContext(k, 1)).total != dim_Sk_level1(k)
    ]
    return "tr T(1)|S_k == dim S_k for even k <= 40", not bad, f"mismatch at {bad[:3]}"

def _check_level11() -> tuple[str, bool, str]:
    ctx = TraceContext(2, 11)
    bad = [
        p
        for p in _PRIMES_50
        if p != 11 and trace_T(p, ctx).total != ec_ap(CURVE_11A, p)
    ]
    return "a_p(11a) == tr T(p)|S_2(Gamma0(11)) for p <= 50", not bad, f"mismatch at {bad[:3]}"

def _check_level11_powers() -> tuple[str, bool, str]:
    ctx = TraceContext(2, 11)
    a2 = ec_ap(CURVE_11A, 2)
    expected = hecke_eigenvalues_prime_power(a2, 2, 2, 6)
    got = [trace_T(2**nu, ctx).total for nu in range(7)]
    ok = got == expected
    return "a(2^nu)(11a) == tr T(2^nu)|S_2(Gamma0(11)), nu <= 6", ok, f"{got} != {expected}"

def _check_mass() -> tuple[str, bool, str]:
    ok, first_bad, _ = mass_check(200)
    return "Hurwitz mass identity for m <= 200", ok, f"first failure m={first_bad}"

def _check_rtf_small() -> tuple[str, bool, str]:
    r1 = verify_rtf(2, TraceContext(12, 1), 6)
    r2 = verify_rtf(2, TraceContext(2, 11), 6)
    ok = r1["first_fail"] is None and r2["first_fail"] is None
    return (
        "rtf identity at (q=2,k=12,N=1) and (q=2,k=2,N=11), order 6",
        ok,
        f"first fails: {r1['first_fail']}, {r2['first_fail']}",
    )


_CHECKS = (
    _check_tau,
    _check_dims,
    _check_level11,
    _check_level11_powers,
    _check_mass,
    _check_rtf_small,
)


def run_selftest(threads: int = 1) -> tuple[bool, list[str]]:
    """Run all reconciliations; returns overall status and report lines."""
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda f: f(), _CHECKS))
    else:
        results = [f() for f in _CHECKS]
    lines = []
    all_ok = True
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok else f"  [{detail}]"))
        all_ok &= ok
    return all_ok, lines
