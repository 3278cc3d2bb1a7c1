"""Command-line surface: ``reflect <command>``.

Commands cover the irreducible census, filtration layers with the
symbolic oracle, the specialization diagram, residue classification,
branching, Mackey and projector reports, and the acceptance-suite driver.

Exit codes are a stable contract: 0 for success or an affirmative
verdict, 1 for a negative verdict or a violated invariant, 2 when a
resource bound is exceeded or an input shape is unsupported, 64 for
malformed input.  The environment variable ``REFLECT_BOUND`` overrides
the group-size bound.  JSON output is deterministic (sorted keys, stable
row orders), so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import sympy

from .acceptance import CRITERIA, run_all
from .exactalg import CycNum, Poly, delta_n
from .filtration import (canonical_content, canonical_content_oracle,
                         quotient_content)
from .groups import (BoundExceeded, GroupSpec, conjugacy_classes,
                     young_subgroup)
from .partitions import (check_partition, check_set_partition,
                         enumerate_partitions, strata_graph)
from .repr import (RegularModule, all_irreps, inner_product, invariant_dim,
                   mackey_check, mat_add, mat_eq, mat_identity, mat_mul,
                   mat_rank, mat_zero, orbit_span, projector_chi,
                   projector_unit, reynolds, young_irreps)
from .residues import (Certificate, NonConstantResidue, NotEtaleTrivial,
                       extract_log_part_univariate, logform_from_json,
                       poly_to_sympy, residue_divisor, INFINITY,
                       classify_etale_trivial, _parse_named_poly)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BOUND = 2
EXIT_USAGE = 64


class CLIError(Exception):
    """Input or usage error carrying its exit code."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# shared parsing and rendering helpers
# ---------------------------------------------------------------------------

def _env_bound() -> int | None:
    raw = os.environ.get("REFLECT_BOUND")
    if raw is None:
        return None
    try:
        bound = int(raw)
    except ValueError:
        raise CLIError(f"REFLECT_BOUND must be an integer, got {raw!r}")
    if bound < 1:
        raise CLIError("REFLECT_BOUND must be positive")
    return bound


def _group_spec(args) -> GroupSpec:
    """Group flags follow the G(m, e, n) notation: --d is the first
    argument m, which the divisor rank e must divide."""
    m, e, n = args.d, args.e, args.n
    if m < 1 or e < 1 or n < 1:
        raise CLIError("--d, --e and --n must be positive")
    if m % e:
        raise CLIError(f"--e {e} must divide --d {m}")
    return GroupSpec(m // e, e, n)


def _parse_partition(text: str) -> tuple:
    try:
        return check_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise CLIError(f"bad partition {text!r}: {exc}")


def _parse_blocks(text: str, n: int) -> tuple:
    """Subgroup argument: ``sK`` for the symmetric group on 1..K, or
    explicit blocks like ``1,2|3,4``; omitted points become singletons."""
    text = text.strip().lower()
    blocks: list = []
    if text.startswith("s") and text[1:].isdigit():
        k = int(text[1:])
        if not 1 <= k <= n:
            raise CLIError(f"s{k} does not fit inside 1..{n}")
        blocks = [list(range(1, k + 1))]
    else:
        try:
            blocks = [[int(x) for x in blk.split(",")]
                      for blk in text.split("|") if blk]
        except ValueError:
            raise CLIError(f"bad subgroup argument {text!r}")
    seen = {x for blk in blocks for x in blk}
    blocks.extend([x] for x in range(1, n + 1) if x not in seen)
    try:
        return check_set_partition(blocks, n)
    except ValueError as exc:
        raise CLIError(f"bad subgroup argument {text!r}: {exc}")


def _render_cyc(c: CycNum) -> str:
    return str(c.as_fraction()) if c.is_rational() else str(c)


def _render_poly(p: Poly, names=None) -> str:
    names = tuple(names) if names else tuple(f"x{i+1}" for i in range(p.n))
    try:
        expr = poly_to_sympy(p, tuple(sympy.Symbol(nm) for nm in names))
        return str(expr).replace("**", "^")
    except ArithmeticError:
        return str(p)


def _render_phi(phi: tuple, names=None) -> str:
    num, den = phi
    if den.equals(Poly.constant(1, den.n)):
        return _render_poly(num, names)
    return f"({_render_poly(num, names)})/({_render_poly(den, names)})"


def _emit(args, payload, table_lines):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in table_lines:
            print(line)


def _load_form_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path} is not valid JSON: {exc}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_irreps(args) -> int:
    spec = _group_spec(args)
    bound = _env_bound()
    irr = all_irreps(spec, bound)
    classes, _ = conjugacy_classes(spec, bound)
    rows = [{"dim": li.rep.dim, "label": str(li.label)} for li in irr]
    total = sum(r["dim"] ** 2 for r in rows)
    complete = total == spec.order() and len(irr) == len(classes)
    payload = {"group": spec.notation(), "order": spec.order(),
               "class_count": len(classes), "sum_dim_sq": total,
               "complete": complete, "irreps": rows}
    lines = [f"{spec.notation()}  order {spec.order()}  "
             f"{len(classes)} classes"]
    lines += [f"  dim {r['dim']:>3}  {r['label']}" for r in rows]
    lines.append(f"sum dim^2 = {total}; {len(irr)} irreps")
    _emit(args, payload, lines)
    return EXIT_OK if complete else EXIT_NEGATIVE


def cmd_filtration(args) -> int:
    n = args.n
    if not 1 <= n <= 12:
        raise CLIError("--n must be between 1 and 12 for the rule")
    mus = ([_parse_partition(args.mu)] if args.mu
           else enumerate_partitions(n))
    for mu in mus:
        if sum(mu) != n:
            raise CLIError(f"{mu} is not a partition of {n}")
    records = []
    lines = []
    all_match = True
    for mu in mus:
        layer = canonical_content(mu)
        content = sorted(layer.content)
        phi = sorted(quotient_content(mu))
        rec = {"mu": list(mu), "content": [list(t) for t in content],
               "phi": [list(t) for t in phi]}
        line = (f"mu={','.join(map(str, mu))}  content: "
                + (" ".join("(" + ",".join(map(str, t)) + ")"
                            for t in content) or "-")
                + "  phi: "
                + (" ".join("(" + ",".join(map(str, t)) + ")"
                            for t in phi) or "-"))
        if args.oracle:
            oracle = sorted(canonical_content_oracle(mu))
            match = oracle == content
            all_match = all_match and match
            rec["oracle"] = [list(t) for t in oracle]
            rec["match"] = match
            line += ("  rule == oracle: OK" if match
                     else f"  rule != oracle: {oracle}")
        records.append(rec)
        lines.append(line)
    payload = records[0] if args.mu else records
    _emit(args, payload, lines)
    return EXIT_OK if all_match else EXIT_NEGATIVE


def cmd_strata(args) -> int:
    if args.n < 1:
        raise CLIError("--n must be positive")
    graph = strata_graph(args.n)
    if args.dot:
        print(graph.to_dot())
        return EXIT_OK
    payload = {"n": args.n,
               "nodes": [list(p) for p in graph.nodes],
               "edges": [[list(a), list(b)] for a, b in graph.edges]}
    lines = [f"{len(graph.nodes)} strata, {len(graph.edges)} edges"]
    lines += [f"  {','.join(map(str, a))} -> {','.join(map(str, b))}"
              for a, b in graph.edges]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_residue(args) -> int:
    data = _load_form_file(args.path)
    names = data.get("vars")
    if args.action == "extract":
        if not isinstance(names, list) or len(names) != 1:
            raise CLIError("extract supports exactly one variable",
                           code=EXIT_BOUND)
        if "num" not in data or "den" not in data:
            raise CLIError("extract needs string fields 'num' and 'den'")
        try:
            num = _parse_named_poly(str(data["num"]), names, 1)
            den = _parse_named_poly(str(data["den"]), names, 1)
        except ValueError as exc:
            raise CLIError(f"bad polynomial: {exc}")
        try:
            form = extract_log_part_univariate(num, den)
        except NonConstantResidue as exc:
            # the witness strings use the internal variable x1
            factor = exc.factor.replace("x1", names[0]).replace("**", "^")
            res = exc.residue.replace("x1", names[0]).replace("**", "^")
            payload = {"ok": False, "reason": "non-constant residue",
                       "factor": factor, "residue": res}
            _emit(args, payload,
                  [f"non-constant residue along {factor}: {res}"])
            return EXIT_NEGATIVE
        except ValueError as exc:
            raise CLIError(str(exc))
        log = [{"c": _render_cyc(c), "p": _render_poly(p, names)}
               for c, p in form.log_part]
        payload = {"ok": True, "log": log}
        lines = [f"{row['c']} dlog({row['p']})" for row in log]
        if not form.exact_is_constant():
            payload["exact"] = _render_phi(form.exact_part, names)
            lines.append(f"exact part: d({payload['exact']})")
        _emit(args, payload, lines or ["0"])
        return EXIT_OK

    try:
        form = logform_from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise CLIError(f"bad form file: {exc}")
    if args.action == "divisor":
        div = residue_divisor(form)
        entries = [{"c": _render_cyc(c),
                    "p": "oo" if p is INFINITY else _render_poly(p, names)}
                   for c, p in div.entries]
        payload = {"entries": entries,
                   "degree_weighted_sum":
                       _render_cyc(div.degree_weighted_sum())}
        lines = [f"  {e['c']} . ({e['p']})" for e in entries] or ["  0"]
        lines.append(f"degree-weighted sum: "
                     f"{payload['degree_weighted_sum']}")
        _emit(args, payload, lines)
        return EXIT_OK
    # classify
    verdict = classify_etale_trivial(form)
    if isinstance(verdict, Certificate):
        payload = {"etale_trivial": True, "l": verdict.l,
                   "phi": _render_phi(verdict.phi, names)}
        _emit(args, payload,
              [f"etale-trivial: l = {verdict.l}, phi = {payload['phi']}"])
        return EXIT_OK
    payload = {"etale_trivial": False, "reason": verdict.reason}
    if verdict.reason == "exponential component":
        l, phi = verdict.witness
        payload["l"] = l
        payload["phi"] = _render_phi(phi, names)
    _emit(args, payload, [str(verdict)])
    return EXIT_NEGATIVE


def cmd_branch(args) -> int:
    n = args.n
    if n < 2:
        raise CLIError("--n must be at least 2")
    spec = GroupSpec(1, 1, n)
    bound = _env_bound()
    sub = young_subgroup([list(range(1, n)), [n]], spec)
    rows = []
    hits = []
    for li in all_irreps(spec, bound):
        chi = li.rep.character()
        trivial = all(v.is_rational() and v.as_fraction() == 1
                      for v in chi.values)
        dim = invariant_dim(chi, sub)
        rows.append({"label": str(li.label), "dim": li.rep.dim,
                     "invariant_dim": dim, "trivial": trivial})
        if not trivial and dim:
            hits.append((li.label, dim))
    ok = len(hits) == 1 and hits[0][1] == 1
    seed = delta_n(n)
    avg_zero = reynolds(spec, seed, bound).is_zero()
    span = orbit_span(spec, seed, bound)
    norm = inner_product(span.character(), span.character())
    irreducible = norm.is_rational() and norm.as_fraction() == 1
    ok = ok and avg_zero and span.dim == n - 1 and irreducible
    payload = {"group": spec.notation(), "rows": rows, "ok": ok,
               "delta": {"average_zero": avg_zero, "span_dim": span.dim,
                         "irreducible": irreducible}}
    lines = [f"  inv {r['invariant_dim']}  dim {r['dim']:>3}  {r['label']}"
             for r in rows]
    lines.append(f"nontrivial irreps with invariants: {len(hits)}; "
                 f"delta span dim {span.dim} "
                 f"({'irreducible' if irreducible else 'reducible'}); "
                 f"average {'zero' if avg_zero else 'nonzero'}")
    lines.append("OK" if ok else "FAIL")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_mackey(args) -> int:
    n = args.n
    if n < 1:
        raise CLIError("--n must be positive")
    spec = GroupSpec(1, 1, n)
    blocks1 = _parse_blocks(args.h1, n)
    blocks2 = _parse_blocks(args.h2, n)
    H1 = young_subgroup(blocks1, spec)
    H2, chars = young_irreps(blocks2, spec)
    cosets = None
    for _shapes, chi in chars:
        res = mackey_check(H1, H2, chi)
        cosets = res.num_double_cosets
        if not res.ok:
            payload = {"ok": False, "double_cosets": cosets}
            _emit(args, payload, [f"FAIL after {cosets} double cosets"])
            return EXIT_NEGATIVE
    payload = {"ok": True, "double_cosets": cosets,
               "characters_checked": len(chars)}
    _emit(args, payload, [f"OK, {cosets} double cosets"])
    return EXIT_OK


def cmd_projectors(args) -> int:
    spec = _group_spec(args)
    bound = _env_bound()
    module = RegularModule(spec, bound)
    irr = all_irreps(spec, bound)
    projs = [projector_chi(li.rep.character(), module) for li in irr]
    total = mat_zero(module.dim)
    for P in projs:
        total = mat_add(total, P)
    sum_id = mat_eq(total, mat_identity(module.dim))
    ok = sum_id
    rows = []
    for i, (li, P) in enumerate(zip(irr, projs)):
        idem = mat_eq(mat_mul(P, P), P)
        orth = all(mat_eq(mat_mul(P, projs[j]), mat_zero(module.dim))
                   for j in range(len(projs)) if j != i)
        dim = li.rep.dim
        units = [[projector_unit(li.rep, a, b, module) for b in range(dim)]
                 for a in range(dim)]
        diag = mat_zero(module.dim)
        for a in range(dim):
            diag = mat_add(diag, units[a][a])
        units_ok = mat_eq(diag, P)
        units_ok = units_ok and all(
            mat_rank(units[a][a]) == dim for a in range(dim))
        units_ok = units_ok and all(
            mat_eq(mat_mul(units[a][b], units[b][c]), units[a][c])
            for a in range(dim) for b in range(dim) for c in range(dim))
        rows.append({"label": str(li.label), "dim": dim,
                     "idempotent": idem, "orthogonal": orth,
                     "units_ok": units_ok})
        ok = ok and idem and orth and units_ok
    payload = {"group": spec.notation(), "module_dim": module.dim,
               "sum_to_identity": sum_id, "rows": rows, "ok": ok}
    lines = [f"regular module of {spec.notation()}, dim {module.dim}"]
    for r in rows:
        flags = ("idempotent" if r["idempotent"] else "NOT idempotent",
                 "orthogonal" if r["orthogonal"] else "NOT orthogonal",
                 "units OK" if r["units_ok"] else "units FAIL")
        lines.append(f"  dim {r['dim']:>2}  {'; '.join(flags)}  "
                     f"{r['label']}")
    lines.append(f"sum of projectors {'=' if sum_id else '!='} identity")
    lines.append("all OK" if ok else "FAIL")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    numbers = None
    if args.criteria:
        try:
            numbers = [int(x) for x in args.criteria.split(",")]
        except ValueError:
            raise CLIError(f"bad criteria list {args.criteria!r}")
        known = {num for num, _title, _fn in CRITERIA}
        unknown = sorted(set(numbers) - known)
        if unknown:
            raise CLIError("unknown criteria: "
                           + ",".join(map(str, unknown)))
    results = run_all(numbers)
    ok = all(r["ok"] for r in results)
    if args.format == "json":
        # timings vary run to run, so they are kept out of the JSON form
        stable = [{k: v for k, v in r.items() if k != "seconds"}
                  for r in results]
        print(json.dumps(stable, sort_keys=True, separators=(",", ":")))
    else:
        for r in results:
            mark = "PASS" if r["ok"] else "FAIL"
            print(f"criterion {r['criterion']:>2}: {mark}  {r['title']} "
                  f"({r['seconds']:.1f}s)")
            if not r["ok"]:
                print(f"    {r['detail']}")
        print(f"{sum(r['ok'] for r in results)}/{len(results)} criteria pass")
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_group_flags(p: _Parser):
    p.add_argument("--d", type=int, required=True,
                   help="first argument m of G(m, e, n)")
    p.add_argument("--e", type=int, default=1,
                   help="divisor rank e of G(m, e, n); must divide --d")
    p.add_argument("--n", type=int, required=True,
                   help="number of variables n")


def build_parser() -> _Parser:
    parser = _Parser(prog="reflect",
                     description="Exact decomposition data for invariants "
                                 "of the reflection groups G(m, e, n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser, fmt_default: str):
        p.add_argument("--format", choices=("json", "table"),
                       default=fmt_default, help="output format")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker cap (evaluation is currently serial)")

    p = sub.add_parser("irreps",
                       help="irreducible census of G(m, e, n)")
    _add_group_flags(p)
    common(p, "json")
    p.set_defaults(handler=cmd_irreps)

    p = sub.add_parser("filtration",
                       help="canonical filtration layers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", help="one stratum, e.g. 2,2,2")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the rule against the symbolic oracle")
    common(p, "json")
    p.set_defaults(handler=cmd_filtration)

    p = sub.add_parser("strata",
                       help="specialization diagram of the strata")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    common(p, "json")
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser("residue",
                       help="residue classification of logarithmic forms")
    p.add_argument("action", choices=("classify", "divisor", "extract"))
    p.add_argument("path", help="JSON form file")
    common(p, "json")
    p.set_defaults(handler=cmd_residue)

    p = sub.add_parser("branch",
                       help="branching to the point stabilizer")
    p.add_argument("--n", type=int, required=True)
    common(p, "table")
    p.set_defaults(handler=cmd_branch)

    p = sub.add_parser("mackey",
                       help="Mackey double-coset check for Young subgroups")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h1", required=True,
                   help="subgroup: sK or blocks like 1,2|3,4")
    p.add_argument("--h2", required=True,
                   help="subgroup: sK or blocks like 1,2|3,4")
    common(p, "table")
    p.set_defaults(handler=cmd_mackey)

    p = sub.add_parser("projectors",
                       help="projector identities on the regular module")
    _add_group_flags(p)
    p.add_argument("--regular", action="store_true",
                   help="use the regular module (the default and only "
                        "module surface)")
    common(p, "table")
    p.set_defaults(handler=cmd_projectors)

    p = sub.add_parser("verify",
                       help="run the acceptance suite")
    p.add_argument("--criteria", help="comma-separated criteria numbers")
    common(p, "table")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise CLIError("--jobs must be a positive integer")
        return args.handler(args)
    except CLIError as exc:
        print(f"reflect: error: {exc}", file=sys.stderr)
        return exc.code
    except BoundExceeded as exc:
        print(f"reflect: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
