"""Batch JSON command line.

    etalgebra <verb> [--algebra FILE|-] [--input FILE|-] [--rho 1,1]
                     [--budget N] [--output FILE] [--timing]

Exit codes: 0 success, 1 malformed input, 2 domain error (not in U,
transversality, boundary, ...), 3 budget exceeded.  Output is JSON with
sorted keys, so identical input gives byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Partition, RightIdeal, load_algebra, min_poly
from .errors import AlgebraError, BudgetExceededError, DomainError, InvalidInputError
from .etale import EtaleSubalgebra, is_subfield, minimal_idempotents, type_of
from .fields import QQ, load_field
from .linalg import Subspace
from .moduli import (IdealSystem, PsiConfig, ideal_system_from_subalgebra, lagrange_idempotents,
                     phi, psi, subalgebra_from_ideal_system)
from .oracle import DEFAULT_BUDGET, enum_etale_subalgebras, verify_moduli_count
from .plucker import (PluckerPoint, PointPairOnQuadric, QuadraticSpace, line_quadric_intersect,
                      pair_to_line, plucker_embed, plucker_inverse)
from .poly import splitting_extension

VERBS = ("minpoly", "idempotents", "psi", "phi", "type", "is-subfield", "ideal-system",
         "from-ideal-system", "plucker", "plucker-inv", "intersect", "pair-to-line",
         "enumerate", "verify-moduli")


def _read_json(path):
    if path is None:
        return None
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _need(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInputError(f"input needs a {key!r} entry")
    return obj[key]


def _rows(F, data, width=None):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InvalidInputError("expected a list of vectors")
    rows = [tuple(F.load(c) for c in r) for r in data]
    if width is not None and any(len(r) != width for r in rows):
        raise InvalidInputError(f"vectors must have length {width}")
    return rows


def _dump_rows(F, rows):
    return [[F.dump(c) for c in r] for r in rows]


def _dump_field(F):
    return F.describe()


class _Context:
    def __init__(self, args):
        self.args = args
        self.data = _read_json(args.input) or {}
        desc = _read_json(args.algebra)
        self._algebra = load_algebra(desc) if desc is not None else None

    @property
    def algebra(self):
        if self._algebra is None:
            raise InvalidInputError("this verb needs --algebra")
        return self._algebra

    @property
    def field(self):
        if isinstance(self.data, dict) and "field" in self.data:
            return load_field(self.data["field"])
        return self._algebra.field if self._algebra is not None else QQ

    def element(self, key="element"):
        A = self.algebra
        return A.load_element(_need(self.data, key))

    def subalgebra(self, key="subalgebra"):
        A = self.algebra
        return EtaleSubalgebra(A, Subspace(A.field, A.dim, _rows(A.field, _need(self.data, key), A.dim)))

    def rho(self):
        if self.args.rho is None:
            raise InvalidInputError("this verb needs --rho")
        return Partition.parse(self.args.rho)


def _subalgebra_json(E):
    F = E.field
    return {"field": _dump_field(F), "dim": E.dim, "basis": _dump_rows(F, E.subspace.rows)}


def _system_json(S: IdealSystem):
    K = S.field
    return {"field": _dump_field(K), "ranks": list(S.ranks),
            "ideals": [_dump_rows(K, I.subspace.rows) for I in S.ideals],
            "idempotents": [[K.dump(c) for c in e.coords] for e in S.idempotents]}


def _pair_json(pp: PointPairOnQuadric):
    out = pp.dump()
    if pp.kind != "contained":
        K, pts = pp.points()
        out["points_field"] = _dump_field(K)
        out["points"] = _dump_rows(K, pts)
    return out


def cmd_minpoly(ctx):
    a = ctx.element()
    f = min_poly(a)
    return {"min_poly": f.dump(), "degree": f.degree}


def cmd_idempotents(ctx):
    a = ctx.element()
    K, roots = splitting_extension(min_poly(a))
    idems = lagrange_idempotents(a, roots, K)
    return {"field": _dump_field(K), "roots": [K.dump(r) for r in roots],
            "idempotents": [[K.dump(c) for c in e.coords] for e in idems]}


def cmd_psi(ctx):
    return _subalgebra_json(psi(ctx.element()))


def cmd_phi(ctx):
    A = ctx.algebra
    a = ctx.element("generator")
    E = psi(a)
    if "complement" in ctx.data:
        L = Subspace(A.field, A.dim, _rows(A.field, ctx.data["complement"], A.dim))
        cfg = PsiConfig(E, a, L)
    else:
        cfg = PsiConfig.default(E, a)
    b = phi(ctx.subalgebra("subalgebra"), cfg)
    return {"element": b.dump()}


def cmd_type(ctx):
    E = ctx.subalgebra()
    K, _ = minimal_idempotents(E)
    return {"type": list(type_of(E)), "splitting_field": _dump_field(K)}


def cmd_is_subfield(ctx):
    return {"is_subfield": is_subfield(ctx.subalgebra())}


def cmd_ideal_system(ctx):
    return _system_json(ideal_system_from_subalgebra(ctx.subalgebra()))


def cmd_from_ideal_system(ctx):
    A = ctx.algebra
    K = ctx.field
    AK = A.over(K)
    ideals = [RightIdeal(AK, Subspace(K, A.dim, _rows(K, I, A.dim)))
              for I in _need(ctx.data, "ideals")]
    E = subalgebra_from_ideal_system(IdealSystem(ideals))
    down = E.descend(A.field)
    return _subalgebra_json(down if down is not None else E)


def cmd_plucker(ctx):
    F = ctx.field
    W = Subspace(F, 4, _rows(F, _need(ctx.data, "plane"), 4))
    return {"plucker": plucker_embed(W).dump()}


def cmd_plucker_inv(ctx):
    F = ctx.field
    p = _need(ctx.data, "point")
    if not isinstance(p, list):
        raise InvalidInputError("'point' must be a list of six coordinates")
    W = plucker_inverse(PluckerPoint([F.load(c) for c in p], F))
    return {"plane": _dump_rows(F, W.rows)}


def _quadric(ctx):
    F = ctx.field
    G = _rows(F, _need(ctx.data, "gram"))
    return QuadraticSpace(F, G)


def cmd_intersect(ctx):
    qs = _quadric(ctx)
    W = Subspace(qs.field, qs.dim, _rows(qs.field, _need(ctx.data, "plane"), qs.dim))
    return _pair_json(line_quadric_intersect(W, qs))


def cmd_pair_to_line(ctx):
    qs = _quadric(ctx)
    F = qs.field
    if "points" in ctx.data:
        K = load_field(ctx.data["points_field"]) if "points_field" in ctx.data else F
        pp = PointPairOnQuadric.from_points(qs, _rows(K, ctx.data["points"], qs.dim), K)
    else:
        W = Subspace(F, qs.dim, _rows(F, _need(ctx.data, "plane"), qs.dim))
        pp = line_quadric_intersect(W, qs)
        if "form" in ctx.data and list(pp.form) != [F.load(c) for c in ctx.data["form"]]:
            raise InvalidInputError("binary form does not match the plane")
    return {"plane": _dump_rows(F, pair_to_line(pp).rows)}


def cmd_enumerate(ctx):
    A = ctx.algebra
    budget = ctx.args.budget
    if ctx.args.rho is not None:
        rho = ctx.rho()
        subs = [E for E in enum_etale_subalgebras(A, rho.length, budget) if type_of(E) == rho]
    else:
        m = _need(ctx.data, "dim")
        if not isinstance(m, int) or isinstance(m, bool):
            raise InvalidInputError("'dim' must be an integer")
        subs = enum_etale_subalgebras(A, m, budget)
    F = A.field
    return {"count": len(subs),
            "subalgebras": [{"basis": _dump_rows(F, E.subspace.rows), "type": list(type_of(E))}
                            for E in subs]}


def cmd_verify_moduli(ctx):
    report = verify_moduli_count(ctx.algebra, ctx.rho(), ctx.args.budget)
    return report.to_json(timing=ctx.args.timing)


COMMANDS = {
    "minpoly": cmd_minpoly, "idempotents": cmd_idempotents, "psi": cmd_psi, "phi": cmd_phi,
    "type": cmd_type, "is-subfield": cmd_is_subfield, "ideal-system": cmd_ideal_system,
    "from-ideal-system": cmd_from_ideal_system, "plucker": cmd_plucker,
    "plucker-inv": cmd_plucker_inv, "intersect": cmd_intersect, "pair-to-line": cmd_pair_to_line,
    "enumerate": cmd_enumerate, "verify-moduli": cmd_verify_moduli,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with 2, which is reserved for domain errors here
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def build_parser():
    p = _Parser(prog="etalgebra", description="Etale subalgebras of central simple algebras.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--algebra", help="algebra descriptor JSON file, or - for stdin")
    p.add_argument("--input", help="operand JSON file, or - for stdin")
    p.add_argument("--rho", help="partition such as 1,1")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate budget for enumeration")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds in reports")
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.algebra == "-" and args.input == "-":
        print("error: --algebra and --input cannot both read stdin", file=sys.stderr)
        return 1
    try:
        result = COMMANDS[args.verb](_Context(args))
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (TypeError, ValueError, KeyError, IndexError, ZeroDivisionError) as exc:
        # loaders reject most bad operands; anything else that slips through is still bad input
        print(f"error: malformed input ({type(exc).__name__}: {exc})", file=sys.stderr)
        return 1
    text = json.dumps(result, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
