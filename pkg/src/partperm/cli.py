"""Command-line interface: exact invariants of partial permutohedra.

Subcommands: vertices, facets, faces, fvector, hpoly, volume, ehrhart,
verify, table.  Output is deterministic JSON by default (sorted keys,
compact separators); --format csv/tex give flat rows and TeX tabulars.
All numbers are exact: integers or 'p/q' strings, never floats.

Exit codes: 0 success; 1 usage error (bad arguments or unsupported
parameter ranges); 2 a verification suite found a counterexample;
3 two internal engines disagreed (EngineDisagreement).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Optional

from . import ehrhart as EH
from . import faces as FA
from . import volume as VO
from .combinat import enumerate_chains
from .exactmath import EngineDisagreement, Polynomial
from .polytope import (
    KERNEL_NAME,
    VRep,
    count_points,
    hull_convert,
    pp_box,
    pp_facets,
    pp_vertices,
    antiblocking_vertices_edges,
    verify_antiblocking_identity,
)


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit 1
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _poly_json(p: Polynomial) -> List[str]:
    return p.to_strings()


# ---------------------------------------------------------------------------
# Subcommand implementations.


def _cmd_vertices(args) -> int:
    v = pp_vertices(args.m, args.n)
    if args.format == "json":
        print(_dump({"m": args.m, "n": args.n, "count": len(v.points),
                     "vertices": [list(p) for p in v.points]}))
    elif args.format == "csv":
        for p in v.points:
            print(",".join(str(x) for x in p))
    else:
        print(r"\begin{tabular}{" + "r" * args.m + "}")
        for p in v.points:
            print(" & ".join(str(x) for x in p) + r" \\")
        print(r"\end{tabular}")
    return 0


def _cmd_facets(args) -> int:
    h = pp_facets(args.m, args.n)
    if args.format == "json":
        print(_dump({"m": args.m, "n": args.n, "count": len(h.rows),
                     "rows": [{"coeffs": list(a), "rhs": b} for a, b in h.rows]}))
    elif args.format == "csv":
        for a, b in h.rows:
            print(",".join(str(x) for x in a) + "," + str(b))
    else:
        print(r"\begin{align*}")
        for a, b in h.rows:
            terms = []
            for i, c in enumerate(a, start=1):
                if c == 1:
                    terms.append(f"x_{{{i}}}")
                elif c == -1:
                    terms.append(f"-x_{{{i}}}")
                elif c:
                    terms.append(f"{c}x_{{{i}}}")
            print("  " + " + ".join(terms).replace("+ -", "- ") + rf" &\le {b} \\")
        print(r"\end{align*}")
    return 0


def _cmd_faces(args) -> int:
    chains = enumerate_chains(args.m, args.n, include_empty=False)
    for c in chains:
        rec = {
            "chain": [sorted(a) for a in c],
            "dimension": FA.missing_ranks(c) if c else -1,
            "vertex_count": len(FA.face_vertices(c, args.m, args.n)),
        }
        if args.format == "csv":
            chain_str = "<".join("{" + " ".join(map(str, sorted(a))) + "}" for a in c)
            print(f"{rec['dimension']},{rec['vertex_count']},{chain_str}")
        else:
            print(_dump(rec))
    return 0


def _cmd_fvector(args) -> int:
    fv = FA.f_vector(args.m, args.n)
    euler = sum((-1) ** i * f for i, f in enumerate(fv))
    out = {"m": args.m, "n": args.n, "f_vector": list(fv), "euler": euler}
    if args.format == "json":
        print(_dump(out))
    elif args.format == "csv":
        print(",".join(map(str, fv)))
    else:
        print("(" + ", ".join(map(str, fv)) + ")")
    return 0


def _hpoly_methods(m: int, n: int) -> List[str]:
    methods = ["from_f", "closed", "orientation", "recurrence"]
    if n >= m:
        methods.insert(2, "stellohedron")
    return methods


def _cmd_hpoly(args) -> int:
    m, n = args.m, args.n
    if args.all_methods:
        results = {meth: FA.h_poly(m, n, meth) for meth in _hpoly_methods(m, n)}
        polys = list(results.values())
        agree = all(p == polys[0] for p in polys)
        out = {
            "m": m,
            "n": n,
            "results": {k: _poly_json(p) for k, p in results.items()},
            "agree": agree,
            "palindromic": FA.is_palindromic(polys[0], m),
        }
        print(_dump(out))
        if not agree:
            raise EngineDisagreement("h-polynomial methods disagree")
        return 0
    p = FA.h_poly(m, n, args.method or "from_f")
    out = {
        "m": m,
        "n": n,
        "method": args.method or "from_f",
        "coefficients": _poly_json(p),
        "rendered": p.render(),
        "palindromic": FA.is_palindromic(p, m),
        "h_at_1": int(sum(p.coeffs)),
    }
    if args.format == "csv":
        print(",".join(_poly_json(p)))
    elif args.format == "tex":
        print(f"$h_{{P({m},{n})}}(t) = {p.render()}$")
    else:
        print(_dump(out))
    return 0


def _volume_methods(m: int, n: int) -> List[str]:
    methods = []
    if m <= 5 and n <= 6:
        methods.append("oracle")
    if n >= m - 1 and n >= 1:
        methods += ["recursive", "closed", "three_term"]
        if m <= 6:
            methods.append("draconian")
        if m <= 5:
            methods.append("lambda")
    if n <= 4:
        methods.append("small_n")
    return methods


def _volume_value(m: int, n: int, method: str) -> int:
    if method == "oracle":
        return VO.nvol_oracle(m, n)
    if method == "recursive":
        return VO.nvol_recursive(m, n)
    if method == "closed":
        return VO.nvol_closed(m, n)[0]
    if method == "three_term":
        return VO.nvol_three_term(m, n)
    if method == "draconian":
        return VO.nvol_draconian(m, n)
    if method == "lambda":
        val = VO.nvol_lambda(m, n)
        assert val.denominator == 1
        return int(val)
    if method == "small_n":
        return VO.nvol_small_n(m, n)
    raise UsageError(f"unknown volume method {method!r}")


def _cmd_volume(args) -> int:
    m, n = args.m, args.n
    methods = _volume_methods(m, n)
    if not methods:
        raise UsageError(
            f"no exact volume engine covers (m,n)=({m},{n}); "
            "available ranges need n <= 4 or n >= m-1"
        )
    if args.all_methods:
        values = {meth: _volume_value(m, n, meth) for meth in methods}
        agree = len(set(values.values())) == 1
        print(_dump({"m": m, "n": n, "values": values, "agree": agree}))
        if not agree:
            raise EngineDisagreement("volume engines disagree")
        return 0
    method = args.method or ("closed" if "closed" in methods else methods[-1])
    if method not in methods:
        raise UsageError(
            f"method {method!r} not applicable at (m,n)=({m},{n}); "
            f"applicable: {', '.join(methods)}"
        )
    value = _volume_value(m, n, method)
    if args.format == "csv":
        print(f"{m},{n},{value}")
    else:
        print(_dump({"m": m, "n": n, "method": method, "value": value}))
    return 0


def _ehrhart_methods(m: int, n: int) -> List[str]:
    methods = []
    if m <= 5 and n <= 6:
        methods.append("interpolate")
    if n <= 3:
        methods.append("small_n")
    if m <= 4 and n >= max(1, m - 1):
        methods.append("small_m")
    if m <= 5 and n >= m - 1:
        methods.append("draconian")
    return methods


def _ehrhart_value(m: int, n: int, method: str, parallel: int) -> Polynomial:
    if method == "interpolate":
        return EH.ehr_interpolate(m, n, parallel=parallel)
    if method == "small_n":
        return EH.ehr_closed_small_n(m, n)
    if method == "small_m":
        return EH.ehr_closed_small_m(m, n)
    if method == "draconian":
        return EH.ehr_draconian(m, n)
    raise UsageError(f"unknown ehrhart method {method!r}")


def _cmd_ehrhart(args) -> int:
    m, n = args.m, args.n
    methods = _ehrhart_methods(m, n)
    if not methods:
        raise UsageError(f"no exact Ehrhart engine covers (m,n)=({m},{n})")
    if args.all_methods:
        values = {meth: _ehrhart_value(m, n, meth, args.parallel) for meth in methods}
        polys = list(values.values())
        agree = all(p == polys[0] for p in polys)
        out = {"m": m, "n": n,
               "results": {k: _poly_json(p) for k, p in values.items()},
               "agree": agree}
        if args.eval is not None:
            out["value_at_t"] = str(polys[0](args.eval))
        print(_dump(out))
        if not agree:
            raise EngineDisagreement("Ehrhart engines disagree")
        return 0
    method = args.method or methods[0]
    if method not in methods:
        raise UsageError(
            f"method {method!r} not applicable at (m,n)=({m},{n}); "
            f"applicable: {', '.join(methods)}"
        )
    p = _ehrhart_value(m, n, method, args.parallel)
    out = {"m": m, "n": n, "method": method, "coefficients": _poly_json(p),
           "rendered": p.render()}
    if args.eval is not None:
        out["value_at_t"] = str(p(args.eval))
    if args.format == "csv":
        print(",".join(_poly_json(p)))
    elif args.format == "tex":
        print(f"$\\mathrm{{ehr}}_{{P({m},{n})}}(t) = {p.render()}$")
    else:
        print(_dump(out))
    return 0


def _cmd_table(args) -> int:
    which = args.which
    if which == "volume-n":
        max_m = args.max_m or 7
        rows = [(m, VO.nvol_poly(m, "n")) for m in range(1, max_m + 1)]
        var = "n"
    elif which == "volume-N":
        max_m = args.max_m or 6
        rows = [(m, VO.nvol_poly(m, "N")) for m in range(1, max_m + 1)]
        var = "N"
    else:
        raise UsageError(f"unknown table {which!r}")
    if args.format == "json":
        print(_dump({
            "table": f"normalized volume of P(m,n) as a polynomial in {var}"
                     + (" where N = n-m+1" if var == "N" else ""),
            "rows": [{"m": m, "coefficients": _poly_json(p),
                      "rendered": p.render(var)} for m, p in rows],
        }))
    elif args.format == "csv":
        for m, p in rows:
            print(f"{m}," + ",".join(_poly_json(p)))
    else:
        print(r"\begin{tabular}{rl}")
        print(rf"$m$ & $v(m,n)$ as a polynomial in ${var}$ \\ \hline")
        for m, p in rows:
            print(rf"{m} & ${p.render(var)}$ \\")
        print(r"\end{tabular}")
    return 0


# ---------------------------------------------------------------------------
# Verification suites.


def _check(name: str, params: dict, ok: bool, detail: Optional[str] = None) -> dict:
    rec = {"check": name, "params": params, "status": "pass" if ok else "fail"}
    if detail and not ok:
        rec["detail"] = detail
    return rec


def _suite_engines(max_m: int, max_n: int, parallel: int) -> Iterator[dict]:
    for m in range(1, min(max_m, 5) + 1):
        for n in range(max(1, m - 1), max_n + 1):
            vals = {}
            if m <= 5 and n <= 6:
                vals["oracle"] = VO.nvol_oracle(m, n)
            vals["recursive"] = VO.nvol_recursive(m, n)
            c1, c2, c3 = VO.nvol_closed(m, n)
            vals["closed-2n"] = c1
            vals["closed-2n1"] = c2
            vals["closed-series"] = c3
            vals["three_term"] = VO.nvol_three_term(m, n)
            if m <= 6:
                vals["draconian"] = VO.nvol_draconian(m, n)
            if m <= 5:
                vals["lambda-default"] = int(VO.nvol_lambda(m, n))
                primes = (2, 3, 5, 7, 11, 13)[: m + 1]
                vals["lambda-primes"] = int(VO.nvol_lambda(m, n, primes))
            if n <= 4:
                vals["small_n"] = VO.nvol_small_n(m, n)
            ok = len(set(vals.values())) == 1
            yield _check("volume-engines-agree", {"m": m, "n": n}, ok, repr(vals))
    for m in range(1, min(max_m, 5) + 1):
        for n in range(max(1, m - 1), min(max_n, 6) + 1):
            polys = {"interpolate": EH.ehr_interpolate(m, n, parallel=parallel)}
            if n <= 3:
                polys["small_n"] = EH.ehr_closed_small_n(m, n)
            if m <= 4:
                polys["small_m"] = EH.ehr_closed_small_m(m, n)
            polys["draconian"] = EH.ehr_draconian(m, n)
            ps = list(polys.values())
            ok = all(p == ps[0] for p in ps)
            yield _check("ehrhart-engines-agree", {"m": m, "n": n}, ok,
                         repr({k: v.to_strings() for k, v in polys.items()}))


def _suite_faces(max_m: int, max_n: int) -> Iterator[dict]:
    yield _check("f-vector-pentagon", {"m": 2, "n": 2},
                 FA.f_vector(2, 2) == (5, 5, 1))
    yield _check("f-vector-3-3", {"m": 3, "n": 3},
                 FA.f_vector(3, 3) == (16, 24, 10, 1))
    c1 = ({1, 2, 3}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6, 7})
    c2 = (frozenset(),) + c1
    yield _check("face-vertices-census-40", {"m": 10, "n": 6},
                 len(FA.face_vertices(c1, 10, 6)) == 40)
    yield _check("face-vertices-census-24", {"m": 10, "n": 6},
                 len(FA.face_vertices(c2, 10, 6)) == 24)
    for m in range(1, min(max_m, 4) + 1):
        for n in range(1, min(max_n, 4) + 1):
            h = pp_facets(m, n)
            ok = True
            for v in pp_vertices(m, n).points:
                tight = sum(
                    1 for a, b in h.rows
                    if sum(c * x for c, x in zip(a, v)) == b
                )
                if tight != m:
                    ok = False
                    break
            yield _check("simplicity", {"m": m, "n": n}, ok)
    for m in range(1, min(max_m, 4) + 1):
        yield _check("comb-equivalence-stable", {"m": m},
                     FA.comb_equiv_check(m, m, m + 2))
    yield _check("comb-equivalence-distinguishes", {"m": 2},
                 not FA.comb_equiv_check(2, 1, 2))
    for m in range(1, min(max_m, 4) + 1):
        for n in range(1, max_n + 1):
            polys = {meth: FA.h_poly(m, n, meth) for meth in _hpoly_methods(m, n)}
            ps = list(polys.values())
            ok = all(p == ps[0] for p in ps)
            ok = ok and FA.is_palindromic(ps[0], m)
            ok = ok and sum(ps[0].coeffs) == len(pp_vertices(m, n).points)
            yield _check("h-poly-methods-agree", {"m": m, "n": n}, ok,
                         repr({k: v.to_strings() for k, v in polys.items()}))
    for m in range(1, min(max_m, 3) + 1):
        for n in range(1, min(max_n, 3) + 1):
            ok = True
            try:
                for c in enumerate_chains(m, n):
                    FA.face_from_chain(c, m, n)
            except EngineDisagreement:
                ok = False
            yield _check("face-forms-equivalent", {"m": m, "n": n}, ok)
    for m in range(1, min(max_m, 5) + 1):
        for n in range(1, min(max_n, 5) + 1):
            yield _check("antiblocking-vertex-identity", {"m": m, "n": n},
                         verify_antiblocking_identity(m, n))
    av, edges = antiblocking_vertices_edges((1, 1, 0, 0))
    idx = {p: i for i, p in enumerate(av.points)}
    u = idx[(1, 1, 0, 0)]
    nbrs = {a ^ b ^ u for a, b in edges if u in (a, b)}
    expected = {idx[p] for p in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 1, 0),
                                 (0, 1, 0, 1), (1, 0, 1, 0), (1, 0, 0, 1)]}
    yield _check("antiblocking-6-neighbours", {"z": [1, 1, 0, 0]}, nbrs == expected)


def _suite_conjectures(max_m: int, max_n: int) -> Iterator[dict]:
    for m in range(1, min(max_m, 4) + 1):
        for n in range(max(1, m - 1), min(max_n, 6) + 1):
            truth = EH.ehr_interpolate(m, n)
            p1, p2, equal = EH.ehr_conjecture(m, n)
            rec = EH.ehr_recurrence(m, n)
            ok = equal and p1 == truth and rec == truth
            yield _check("ehrhart-conjectures-consistent", {"m": m, "n": n}, ok,
                         repr({"interp": truth.to_strings(),
                               "conj": p1.to_strings(),
                               "recur": rec.to_strings()}))
    for n in (3, 4):
        rep = VO.conj_vmn_fit(n)
        ok = rep["consistent"] and all(
            info["matches_stated_degree"] and info["leading_positive"]
            for info in rep["polynomials"].values()
        )
        yield _check("volume-expansion-fit", {"n": n}, ok, repr(rep))


def _suite_appendix(max_m: int, max_n: int) -> Iterator[dict]:
    for m in (3, 4):
        v = VO.aux1_vertices(m)
        yield _check("aux1-volume", {"m": m},
                     VO.nvol_of_vrep(v) == VO.formula_bank("aux1", m))
        v2 = VO.aux2_vertices(m)
        yield _check("aux2-volume", {"m": m},
                     VO.nvol_of_vrep(v2) == VO.formula_bank("aux2", m))
    for n in (4, 5):
        qpts, fpts = EH.aux3_points(n)
        hq = hull_convert(VRep(qpts, 4))
        lows = [min(p[j] for p in qpts) for j in range(4)]
        highs = [max(p[j] for p in qpts) for j in range(4)]
        box = tuple(zip(lows, highs))
        aa = (1, 1, 0, 0)
        bb = 2 * n - 1
        hf = hq.with_rows([(aa, bb), (tuple(-x for x in aa), -bb)])
        expect = EH.aux_lemma3(n)
        ok = True
        for t in (1, 2):
            got = count_points(hq, t, box=box) - count_points(hf, t, box=box)
            if got != expect(t):
                ok = False
        yield _check("aux3-count-difference", {"n": n}, ok)


def verify_suite(name: str, max_m: int = 4, max_n: int = 6,
                 parallel: int = 1) -> Iterator[dict]:
    """Yield check records for one named verification suite."""
    suites = {
        "engines": lambda: _suite_engines(max_m, max_n, parallel),
        "faces": lambda: _suite_faces(max_m, max_n),
        "conjectures": lambda: _suite_conjectures(max_m, max_n),
        "appendix": lambda: _suite_appendix(max_m, max_n),
    }
    if name == "all":
        for key in ("engines", "faces", "conjectures", "appendix"):
            yield from suites[key]()
        return
    if name not in suites:
        raise UsageError(f"unknown suite {name!r}")
    yield from suites[name]()


def _cmd_verify(args) -> int:
    count = 0
    for rec in verify_suite(args.suite, args.max_m, args.max_n, args.parallel):
        print(_dump(rec))
        count += 1
        if rec["status"] == "fail":
            print(_dump({"summary": "FAIL", "checks_run": count,
                         "counterexample": rec["params"]}))
            raise VerificationFailure(rec["check"])
    print(_dump({"summary": "PASS", "checks_run": count, "kernel": KERNEL_NAME}))
    return 0


# ---------------------------------------------------------------------------
# Parser and dispatch.


def _build_parser() -> _Parser:
    p = _Parser(prog="partperm",
                description="Exact invariants of partial permutohedra P(m,n).")
    sub = p.add_subparsers(dest="command", required=True)

    def add_mn(sp, n_required=True):
        sp.add_argument("--m", type=int, required=True, help="dimension m >= 1")
        sp.add_argument("--n", type=int, required=n_required, help="value bound n >= 1")
        sp.add_argument("--format", choices=("json", "csv", "tex"), default="json")

    sp = sub.add_parser("vertices", help="vertex list of P(m,n)")
    add_mn(sp)
    sp.set_defaults(func=_cmd_vertices)

    sp = sub.add_parser("facets", help="facet inequalities of P(m,n)")
    add_mn(sp)
    sp.set_defaults(func=_cmd_facets)

    sp = sub.add_parser("faces", help="all faces as chain records (JSON lines)")
    add_mn(sp)
    sp.set_defaults(func=_cmd_faces)

    sp = sub.add_parser("fvector", help="f-vector of P(m,n)")
    add_mn(sp)
    sp.set_defaults(func=_cmd_fvector)

    sp = sub.add_parser("hpoly", help="h-polynomial of P(m,n)")
    add_mn(sp)
    sp.add_argument("--method", choices=FA.H_POLY_METHODS)
    sp.add_argument("--all-methods", action="store_true")
    sp.set_defaults(func=_cmd_hpoly)

    sp = sub.add_parser("volume", help="normalized volume of P(m,n)")
    add_mn(sp)
    sp.add_argument("--method", choices=("oracle", "recursive", "closed",
                                         "three_term", "draconian", "lambda",
                                         "small_n"))
    sp.add_argument("--all-methods", action="store_true")
    sp.set_defaults(func=_cmd_volume)

    sp = sub.add_parser("ehrhart", help="Ehrhart polynomial of P(m,n)")
    add_mn(sp)
    sp.add_argument("--method", choices=("interpolate", "small_n", "small_m",
                                         "draconian"))
    sp.add_argument("--all-methods", action="store_true")
    sp.add_argument("--eval", type=int, default=None, metavar="T",
                    help="also evaluate at t=T")
    sp.add_argument("--parallel", type=int, default=1)
    sp.set_defaults(func=_cmd_ehrhart)

    sp = sub.add_parser("verify", help="run a cross-validation suite")
    sp.add_argument("--suite", choices=("engines", "faces", "conjectures",
                                        "appendix", "all"), default="all")
    sp.add_argument("--max-m", type=int, default=4)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--parallel", type=int, default=1)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("table", help="volume polynomial tables")
    sp.add_argument("--which", choices=("volume-n", "volume-N"), required=True)
    sp.add_argument("--max-m", type=int, default=None)
    sp.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    sp.set_defaults(func=_cmd_table)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except EngineDisagreement as exc:
        print(f"engine disagreement: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
