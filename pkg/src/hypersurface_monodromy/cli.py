"""Command-line front end.

Every subcommand prints one JSON envelope (sorted keys) on stdout.  ``table``
can also emit CSV and ``classify`` a plain-text summary.  Exit codes: 0 on
success, 2 on usage or input errors, 1 when an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import classifier, hodge_theory, reflection_groups, vanishing_cycles
from .algebra_core import Cyclotomic, HermitianForm, Matrix
from .errors import InternalInconsistency
from .hodge_theory import CoverSpec, HodgeVector

SCHEMA_VERSION = "1.0"


class UsageError(Exception):
    pass


# -- (de)serialization ------------------------------------------------------

def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def encode(value: Any) -> Any:
    """Convert library values into JSON-ready structures."""
    if isinstance(value, Cyclotomic):
        m = value.minimal()
        return {"order": m.order, "coeffs": [_frac_str(c) for c in m.fractions()]}
    if isinstance(value, Fraction):
        return _frac_str(value)
    if isinstance(value, Matrix):
        return [[encode(x) for x in row] for row in value.to_rows()]
    if isinstance(value, HodgeVector):
        return {"weight": value.weight, "values": list(value.values),
                "hodge": {f"{p},{q}": v for p, q, v in value.items()}}
    if isinstance(value, classifier.LieType):
        return classifier._lie_dict(value)
    if isinstance(value, classifier.ClassificationRecord):
        return encode(value.to_dict())
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode_scalar(raw: Any) -> Cyclotomic:
    """int, "num/den", or {"order": k, "coeffs": [...]}."""
    if isinstance(raw, bool):
        raise UsageError(f"not a scalar: {raw!r}")
    if isinstance(raw, int):
        return Cyclotomic.coerce(raw)
    if isinstance(raw, str):
        try:
            return Cyclotomic.coerce(Fraction(raw))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {raw!r}") from exc
    if isinstance(raw, dict) and set(raw) == {"order", "coeffs"}:
        order = raw["order"]
        if not isinstance(order, int) or order < 1:
            raise UsageError(f"bad order {order!r}")
        coeffs = [decode_scalar(c).to_fraction() for c in raw["coeffs"]]
        return Cyclotomic(order, coeffs)
    raise UsageError(f"not a scalar: {raw!r}")


def decode_vector(raw: Any) -> list[Cyclotomic]:
    if not isinstance(raw, list) or not raw:
        raise UsageError("expected a non-empty list")
    return [decode_scalar(x) for x in raw]


def decode_matrix(raw: Any) -> Matrix:
    if not isinstance(raw, list) or not raw:
        raise UsageError("expected a non-empty list of rows")
    rows = [decode_vector(r) for r in raw]
    if len({len(r) for r in rows}) != 1:
        raise UsageError("ragged matrix")
    return Matrix.from_rows(rows)


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _require(data: dict, *keys: str) -> list:
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise UsageError(f"missing keys: {', '.join(missing)}")
    return [data[k] for k in keys]


def envelope(command: str, params: dict, result: Any, provenance: Sequence[str]) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": encode(params),
        "result": encode(result),
        "provenance": list(provenance),
    }
    return json.dumps(doc, sort_keys=True, indent=2)


# -- subcommands --------------------------------------------------------------
# each returns (result, provenance) or a ready string for non-JSON formats

def _betti(a):
    return hodge_theory.primitive_betti(a.d, a.n), ["betti:recursion", "betti:closed-form", "betti:hodge-sum"]


def _euler(a):
    return hodge_theory.euler_characteristic(a.d, a.n), ["euler:recursion"]


def _hodge(a):
    return hodge_theory.hodge_hypersurface(a.d, a.n), ["griffiths-residue", "jacobian-ring"]


def _hodge_cover(a):
    spec = CoverSpec(a.d, a.n, a.k, a.i)
    return hodge_theory.hodge_cyclic_eigenspace(spec), ["griffiths-residue:cyclic-cover"]


def _signature(a):
    return list(hodge_theory.signature_primitive(a.d, a.n)), ["hodge-index"]


def _eigensig(a):
    spec = CoverSpec(a.d, a.n, a.k, a.i)
    return list(hodge_theory.eigenspace_signature(spec)), ["hodge-index:eigenspace"]


def _rank(a):
    return ({"real": hodge_theory.rank_real(a.d, a.n), "complex": hodge_theory.rank_complex(a.d, a.n)},
            ["real-rank:signature"])


def _lattice_count(a):
    return hodge_theory.lattice_count(a.dmax, a.nvars, a.k), ["lattice-count:convolution"]


def _suspend_check(a):
    return ({"holds": hodge_theory.suspension_periodicity_check(a.two_d, a.n),
             "base": hodge_theory.hodge_hypersurface(a.two_d, a.n - 1),
             "suspension": hodge_theory.double_suspension_hodge(a.two_d, a.n)},
            ["suspension:weighted-jacobian"])


def _reflect(a):
    data = _load_json(a.input)
    gram, delta, lam, eps = _require(data, "form", "delta", "lambda", "epsilon")
    form = HermitianForm(decode_matrix(gram))
    r = vanishing_cycles.ComplexReflection(decode_scalar(lam), tuple(decode_vector(delta)), eps, form)
    t = vanishing_cycles.reflection_matrix(r)
    result = {"matrix": t, "unitary": vanishing_cycles.is_unitary(t, form)}
    if "vector" in data:
        result["image"] = t.apply(decode_vector(data["vector"]))
    return result, ["complex-reflection"]


def _nodal(a):
    nm = vanishing_cycles.nodal_monodromy(a.k, a.n)
    pairs = [{"lambda": p.lam, "vector": list(p.vector), "h": p.h_value, "normalized": p.normalized}
             for p in nm.eigenpairs]
    return ({"matrix": nm.matrix, "form": nm.form.gram, "order": nm.order, "eigenpairs": pairs},
            ["picard-lefschetz", "sebastiani-thom"])


def _join(a):
    left = vanishing_cycles.monodromy_cycle_shift(a.k1)
    right = vanishing_cycles.monodromy_cycle_shift(a.k2)
    t = vanishing_cycles.join_monodromy(left, right)
    return ({"matrix": t, "order": t.multiplicative_order(4 * a.k1 * a.k2),
             "factor_orders": [left.multiplicative_order(), right.multiplicative_order()]},
            ["sebastiani-thom"])


def _suspend_lattice(a):
    if a.input:
        data = _load_json(a.input)
        gram, = _require(data, "gram")
        m = decode_matrix(gram)
        fiber = data.get("fiber_dim", 0)
        labels = tuple(f"e{j + 1}" for j in range(m.rows))
        lat = vanishing_cycles.VanishingLattice(m, labels, fiber)
    elif a.k:
        lat = vanishing_cycles.a_lattice(a.k)
    else:
        raise UsageError("give --k or --input")
    steps = []
    for _ in range(a.times):
        lat = vanishing_cycles.suspend_lattice(lat)
        steps.append({"gram": lat.gram, "fiber_dim": lat.fiber_dim, "det": lat.gram.det()})
    return {"steps": steps}, ["suspension:intersection-matrix"]


def _group_closure(a):
    data = _load_json(a.input)
    gram, gens = _require(data, "form", "generators")
    if not isinstance(gens, list) or not gens:
        raise UsageError("generators must be a non-empty list")
    group = reflection_groups.GeneratedGroup(HermitianForm(decode_matrix(gram)),
                                             [decode_matrix(g) for g in gens], a.cap)
    res = reflection_groups.group_closure(group)
    return ({"finite": res.finite, "size": res.size, "order": res.order, "cap": a.cap},
            ["closure:bfs"])


def _parse_signature(text: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"signature must look like 1,1 (got {text!r})") from exc
    return p, q


def _dichotomy(a):
    lam = Cyclotomic.zeta(a.lambda_order, a.lambda_power)
    raw = json.loads(a.h12) if a.h12.lstrip().startswith("{") else a.h12
    out = reflection_groups.dichotomy_probe(lam, decode_scalar(raw), _parse_signature(a.signature), a.cap)
    if isinstance(out, reflection_groups.FiniteWitness):
        result = {"kind": "FiniteWitness", "order": out.order}
    else:
        result = {"kind": "GrowthEvidence", "count": out.count, "cap": a.cap}
    return result, ["closure:bfs", "rank-two-dichotomy"]


def _classify(a):
    rec = classifier.classify(a.d, a.n)
    if a.format == "text":
        lines = [f"(d,n) = ({rec.d},{rec.n})  B = {rec.betti}  verdict: {rec.verdict.value}",
                 f"G  = {rec.g_type}"]
        if rec.gprime_type:
            lines.append(f"G' = {rec.gprime_type}  (k={rec.chosen_k}, i={rec.eigen_index})")
        lines += [f"  - {r}" for r in rec.reasons]
        return "\n".join(lines)
    return rec, ["criterion:rank-density-nonisomorphism"]


def _table(a):
    rows = [classifier.table_row(r) for r in classifier.sweep(a.d_max, a.n_max)]
    if a.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=classifier.TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: "" if v is None else v for k, v in row.items()})
        return buf.getvalue().rstrip("\n")
    return {"columns": list(classifier.TABLE_COLUMNS), "rows": rows}, ["criterion:rank-density-nonisomorphism"]


def _product_obstruction(a):
    holds = classifier.product_obstruction(a.d, a.k)
    return ({"holds": holds, "max_order": 2 * a.k, "discriminant_degree": classifier.discriminant_degree(a.d, 2)},
            ["abelianization-bound"])


# -- parser -----------------------------------------------------------------

def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _dn(p):
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=_nonneg, required=True)


def _dnki(p):
    _dn(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypmono", description="Monodromy and Hodge invariants of projective hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    handlers: dict[str, Callable] = {}

    def add(name, fn, *configure, help=None):
        p = sub.add_parser(name, help=help)
        for c in configure:
            c(p)
        handlers[name] = fn
        return p

    add("betti", _betti, _dn, help="primitive middle Betti number")
    add("euler", _euler, _dn, help="Euler characteristic")
    add("hodge", _hodge, _dn, help="primitive Hodge numbers")
    add("hodge-cover", _hodge_cover, _dnki, help="Hodge numbers of a cyclic-cover eigenspace")
    add("signature", _signature, _dn, help="signature of the cup product, n even")
    add("eigensig", _eigensig, _dnki, help="signature of the hermitian form on an eigenspace")
    add("rank", _rank, _dn, help="real and complex rank of the monodromy group")
    p = add("lattice-count", _lattice_count, help="bounded compositions count")
    p.add_argument("--dmax", type=_nonneg, required=True)
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("suspend-check", _suspend_check, help="Hodge shift under double suspension")
    p.add_argument("--two-d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("reflect", _reflect, help="complex reflection from JSON {form, delta, lambda, epsilon, vector?}")
    p.add_argument("--input", required=True)
    p = add("nodal", _nodal, help="local monodromy of y^k + sum of n+1 squares")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p = add("join", _join, help="Sebastiani-Thom join of two A-type monodromies")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p = add("suspend-lattice", _suspend_lattice, help="suspend an intersection matrix")
    p.add_argument("--k", type=int, help="start from the A_{k-1} lattice")
    p.add_argument("--input", help="JSON {gram, fiber_dim}")
    p.add_argument("--times", type=_nonneg, default=1)
    p = add("group-closure", _group_closure, help="closure of a group given by JSON {form, generators}")
    p.add_argument("--input", required=True)
    p.add_argument("--cap", type=int, default=reflection_groups.DEFAULT_CAP)
    p = add("dichotomy", _dichotomy, help="rank-two reflection group probe")
    p.add_argument("--lambda-order", type=int, required=True)
    p.add_argument("--lambda-power", type=int, default=1)
    p.add_argument("--h12", default="0", help='integer, "num/den" or JSON {order, coeffs}')
    p.add_argument("--signature", default="1,1")
    p.add_argument("--cap", type=int, default=reflection_groups.DEFAULT_CAP)
    p = add("classify", _classify, _dn, help="kernel largeness verdict")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p = add("table", _table, help="classification sweep")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p = add("product-obstruction", _product_obstruction, help="abelianization obstruction for surfaces")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    parser.set_defaults(_handlers=handlers)
    return parser


def _params(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "_handlers")}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args._handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=stderr)
        return 1
    except (ValueError, ArithmeticError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if isinstance(out, str):
        print(out, file=stdout)
    else:
        result, provenance = out
        print(envelope(args.command, _params(args), result, provenance), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
