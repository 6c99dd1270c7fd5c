"""Command-line entry point: `codensity <verb> [options]`.

Exit status: 0 when the check passes, 1 when a counterexample is found,
2 on parse errors, missing files or resource-guard hits.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .util import ResourceLimitError, parse_window

SCHEMA = "codensity-report/1"


class UsageError(ValueError):
    pass


# ---- report assembly ---------------------------------------------------------

def make_report(verb: str, window, verdict: str, claim: str, data: dict, counterexamples=None) -> dict:
    """verdict is pass | fail | resource; window stamps every number in data."""
    return {"schema": SCHEMA, "verb": verb, "window": window, "verdict": verdict, "claim": claim,
            "data": data, "counterexamples": list(counterexamples or [])}


def _plain(v):
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [_plain(x) for x in v]
        return sorted(items, key=repr) if isinstance(v, (set, frozenset)) else items
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return repr(v)


def render_json(rep: dict) -> str:
    return json.dumps(_plain(rep), indent=1, sort_keys=True) + "\n"


def render_text(rep: dict) -> str:
    lines = [f"{rep['verb']}: {rep['verdict'].upper()}", f"claim: {rep['claim']}", f"window: {_flat(rep['window'])}"]
    for key in sorted(rep["data"]):
        val = rep["data"][key]
        if isinstance(val, dict) and val:
            lines.append(f"{key}:")
            for k in sorted(val, key=str):
                lines.append(f"  {k}: {_flat(val[k])}")
        elif isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            lines.append(f"{key}:")
            lines.extend(f"  {_flat(x)}" for x in val)
        else:
            lines.append(f"{key}: {_flat(val)}")
    if rep["counterexamples"]:
        lines.append("counterexamples:")
        lines.extend(f"  {_flat(c)}" for c in rep["counterexamples"])
    return "\n".join(lines) + "\n"


def _flat(v) -> str:
    return json.dumps(_plain(v), sort_keys=True) if not isinstance(v, str) else v


def exit_code(verdict: str) -> int:
    return {"pass": 0, "fail": 1}.get(verdict, 2)


# ---- argument helpers --------------------------------------------------------

def _window(args, default: str) -> list[int]:
    text = args.window or default
    try:
        w = parse_window(text)
    except ValueError as exc:
        raise UsageError(f"bad --window {text!r}: {exc}") from None
    if not w or min(w) < 0:
        raise UsageError(f"--window {text!r} must list non-negative sizes")
    return w


def _subcat(args, required: bool = True) -> list[str]:
    if not args.subcat:
        if required:
            raise UsageError("--subcat is required")
        return []
    return [s.strip() for s in args.subcat.split(",") if s.strip()]


def _monad(spec: str):
    from .bkshadow.builtins import make_monad
    from .monadkit.explicit import load_monad
    if spec.startswith("builtin:"):
        parts = spec.split(":")
        name = parts[1]
        params = {}
        if name == "affine" and len(parts) > 2:
            params["ring"] = ":".join(parts[2:])
        elif name == "writer" and len(parts) > 2:
            params["n"] = int(parts[2])
        try:
            return make_monad(name, params)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"monad file {spec!r} not found")
    try:
        return load_monad(path)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse monad file {spec!r}: {exc}") from None


def _category(spec: str):
    """A category file, or chain:a,b,c / group:Z/n / delta:n / delta-plus:n / delta-max:n."""
    from .fincat.category import FinCategory
    from .fincat.io import load_category
    from .fincat.ordinals import delta, delta_max, delta_plus
    kind, _, rest = spec.partition(":")
    try:
        if kind == "chain" and rest:
            return FinCategory.chain(rest.split(","), f"chain({rest})")
        if kind == "group" and rest.startswith("Z/"):
            n = int(rest[2:])
            return FinCategory.from_group(list(range(n)), lambda a, b: (a + b) % n, 0, name=rest)
        if kind == "delta":
            return delta(int(rest))
        if kind == "delta-plus":
            return delta_plus(int(rest))
        if kind == "delta-max":
            return delta_max(int(rest))
    except ValueError as exc:
        raise UsageError(f"bad category spec {spec!r}: {exc}") from None
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"category file {spec!r} not found")
    try:
        return load_category(path)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse category file {spec!r}: {exc}") from None


def _need(args, name: str):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return v


def _positive(v: int, flag: str) -> int:
    if v is None or v < 0:
        raise UsageError(f"{flag} must be a non-negative integer")
    return v


# ---- verbs ----------------------------------------------------------------------

def cmd_monad_check(args):
    from .monadkit.laws import monad_law_check
    M = _monad(_need(args, "monad"))
    w = _window(args, "0..3")
    rep = monad_law_check(M, w, args.morphisms)
    s = rep.summary()
    verdict = "fail" if any(c.status == "fail" for c in rep.checks) else (
        "pass" if rep.ok else "resource")
    cex = [f"{c['name']}: {v}" for c in s["checks"] for v in c["violations"]]
    return make_report("monad-check", w, verdict, "unit, associativity and naturality laws on the window",
                       {"monad": M.name, "morphisms": s["morphisms"],
                        "checks": {c["name"]: f"{c['status']} ({c['checked']} checked){' ' + c['detail'] if c['detail'] else ''}"
                                   for c in s["checks"]}}, cex)


def cmd_algebras(args):
    from .monadkit.algebras import algebra_search
    M = _monad(_need(args, "monad"))
    w = _window(args, "0..3")
    counts, unresolved = {}, {}
    for n in w:
        try:
            counts[n] = len(algebra_search(M, n, limit=args.limit))
        except ResourceLimitError as exc:
            unresolved[n] = str(exc)
    verdict = "resource" if unresolved else "pass"
    return make_report("algebras", w, verdict, "algebra structures on each window size (exhaustive search)",
                       {"monad": M.name, "structures": counts, "admitting": [n for n in w if counts.get(n)],
                        "limit": args.limit, "unresolved": unresolved})


def cmd_isar(args):
    from .monadkit.algebras import isar_chain_check
    M = _monad(_need(args, "monad"))
    w = _window(args, "0..4")
    rep = isar_chain_check(M, w, args.depth)
    return make_report("isar", w, rep.status, "image objects, algebras, split resolutions and retracts nest",
                       rep.summary(), rep.violations + [f"lemma retraction fails at {n}" for n in rep.lemma_failures])


def cmd_fakir(args):
    from .monadkit.fakir import fakir_report
    M = _monad(_need(args, "monad"))
    w = _window(args, "0..4")
    rep = fakir_report(M, w)
    verdict = "resource" if rep.resource else ("pass" if rep.ok else "fail")
    return make_report("fakir", w, verdict, "the equalizer of T(eta) and eta_T, computed elementwise",
                       {"monad": M.name, "sizes": rep.sizes, "unit_image_only": rep.unit_image_only,
                        "resource": rep.resource}, rep.problems)


def cmd_fakir_vs_codensity(args):
    from .monadkit.comparison import fakir_vs_codensity
    M = _monad(_need(args, "monad"))
    c = _positive(_need(args, "object_size"), "--object-size")
    w = _window(args, "0..4")
    rep = fakir_vs_codensity(M, c, w)
    verdict = "resource" if rep.resource else ("pass" if rep.ok else "fail")
    return make_report("fakir-vs-codensity", w, verdict,
                       "codensity of algebra carriers up to n, compared with the Fakir completion", rep.summary())


def cmd_walking(args):
    from .monadkit.algebras import algebra_search
    from .monadkit.walking import chain_lattice_algebra, walking_functoriality
    M = _monad(_need(args, "monad"))
    n = _positive(args.carrier, "--carrier")
    if M.name == "powerset":
        alg = chain_lattice_algebra(M, n)
    else:
        found = algebra_search(M, n, limit=1)
        if not found:
            return make_report("walking", [n], "fail", "the walking action needs an algebra", {"carrier": n},
                               [f"no algebra structure on a {n}-element set"])
        alg = found[0]
    rep = walking_functoriality(M, alg, args.maxdim)
    return make_report("walking", list(range(1, args.maxdim + 1)), rep.status,
                       "psi preserves identities and composites of max-preserving maps",
                       {"monad": M.name, "carrier": n, "pairs": rep.pairs, "identities": rep.identities,
                        "skipped": len(rep.skipped), "first_skipped": rep.skipped[:3]}, rep.violations)


def cmd_codensity(args):
    from .fincat.concrete import FinSetCategory, FinVectF2, TableConcreteCategory
    from .kan.codensity import codensity_value
    from .kan.localization import codensity_by_limit
    spec = args.category or "finset"
    if spec in ("finset", "vect-f2"):
        amb = FinSetCategory() if spec == "finset" else FinVectF2()
        D = [int(d) for d in _subcat(args)]
        w = _window(args, "0..3")
        sizes, bij = {}, {}
        cache: dict = {}
        for c in w:
            val = codensity_value(amb, D, c, cache)
            sizes[c] = len(val)
            bij[c] = val.unit().is_bijective()
        return make_report("codensity", w, "pass", "T_D(c) as the end of naturality families",
                           {"ambient": amb.name, "D": D, "size": sizes, "unit_bijective": bij})
    C = _category(spec)
    D = _subcat(args)
    if isinstance(C, TableConcreteCategory):
        objs = args.objects.split(",") if args.objects else list(C.objects)
        out = {}
        for c in objs:
            val = codensity_value(C, D, c)
            out[c] = {"size": len(val), "unit_bijective": val.unit().is_bijective()}
        return make_report("codensity", objs, "pass", "T_D(c) as the end of naturality families",
                           {"category": C.name, "D": D, "values": out})
    objs = args.objects.split(",") if args.objects else list(C.objects)
    lims, missing = {}, []
    for c in objs:
        lim = codensity_by_limit(C, D, c)
        lims[c] = lim[0] if lim else None
        if lim is None:
            missing.append(f"no limit for T_D({c}) in the category")
    return make_report("codensity", objs, "fail" if missing else "pass", "T_D(c) as the limit over D_{c/}",
                       {"category": C.name, "D": D, "limit": lims}, missing)


def cmd_terminality(args):
    from .bkshadow.builtins import IdentityMonad
    from .kan.codensity import CodensityMonad, terminality_count
    from .monadkit.fakir import FakirFunctor
    D = [int(d) for d in _subcat(args)]
    w = _window(args, "0..3")
    T = CodensityMonad(D)
    sources = {"T_D": T, "identity": IdentityMonad()}
    if args.monad:
        M = _monad(args.monad)
        sources[f"Fakir({M.name})"] = FakirFunctor(M)
    counts = {k: terminality_count(F, T, w) for k, F in sources.items()}
    bad = [f"{k}: {n} maps into T_D" for k, n in counts.items() if n != 1]
    return make_report("terminality", w, "fail" if bad else "pass",
                       "unit-compatible natural maps into T_D are unique", {"D": D, "counts": counts}, bad)


def cmd_retract_closure(args):
    from .fincat.concrete import FinSetCategory
    from .kan.codensity import retract_closure
    D = [int(d) for d in _subcat(args)]
    w = _window(args, "0..4")
    closure = retract_closure(FinSetCategory(), D, w)
    return make_report("retract-closure", w, "pass", "window sets that are retracts of a set in D",
                       {"D": D, "retracts": closure})


def cmd_localize(args):
    from .kan.localization import reflector_and_localization
    C = _category(_need(args, "category"))
    D = _subcat(args)
    loc = reflector_and_localization(C, D)
    if loc is None:
        return make_report("localize", list(C.objects), "fail", "a reflector onto D with initial units",
                           {"category": C.name, "D": D}, ["the inclusion of D has no left adjoint"])
    return make_report("localize", list(C.objects), "pass" if loc.ok else "fail",
                       "a reflector onto D with initial units",
                       {"category": C.name, "D": D, "L": {x: loc.L.on_obj(x) for x in C.objects},
                        "checks": loc.checks}, [k for k, v in loc.checks.items() if not v])


def cmd_initial_check(args):
    from .fincat.category import FinFunctor
    from .fincat.constructions import is_initial_functor
    from .fincat.ordinals import delta
    if args.category:
        C = _category(args.category)
        objs = _subcat(args)
        sub = C.full_subcategory(objs)
    else:
        C, sub = delta(args.maxdim), delta(_positive(args.depth, "--depth"))
    rep = is_initial_functor(FinFunctor.inclusion(sub, C))
    return make_report("initial-check", list(C.objects), "pass" if rep.ok else "fail",
                       "every comma category of the inclusion is nonempty and connected",
                       {"sub": list(sub.objects), "rows": rep.data["rows"], "verdict": rep.data["verdict"]},
                       rep.problems)


def cmd_cofinal(args):
    from .kan.cofinal import bk_sketch_witness, cofinality_witness_check
    M = _monad(_need(args, "monad"))
    c = _positive(_need(args, "object_size"), "--object-size")
    w = bk_sketch_witness(M, c, args.maxdim)
    rep = cofinality_witness_check(w)
    return make_report("cofinal", list(range(1, args.maxdim + 1)), "pass" if rep.ok else "fail",
                       "the cobar functor out of the ordinal window is initial, with the witness data checked",
                       {"monad": M.name, "object": c, **_plain(rep.data)}, rep.problems)


def cmd_nerve(args):
    from .simplex.sset import ez_uniqueness, nerve, simplicial_identities
    C = _category(_need(args, "category"))
    X = nerve(C, args.maxdim)
    ids = simplicial_identities(X)
    ez = ez_uniqueness(X)
    if args.sset_out:
        Path(args.sset_out).write_text(json.dumps(X.to_dict(), indent=1, sort_keys=True) + "\n")
    ok = ids.ok and ez.ok
    return make_report("nerve", list(range(args.maxdim + 1)), "pass" if ok else "fail",
                       "nerve levels with simplicial identities and unique degeneracy presentations",
                       {"category": C.name, "level_sizes": [len(L) for L in X.levels],
                        "nondegenerate": [len(X.nondegenerate(n)) for n in range(X.N + 1)]},
                       ids.problems + ez.problems)


def cmd_basis_check(args):
    from .simplex.ndelta import verify_basis_delta_inj, verify_basis_ndelta_plus
    k, B = _positive(args.k, "--k"), _positive(args.B, "--B")
    if args.injective:
        rep = verify_basis_delta_inj(k, B)
        return make_report("basis-check", {"levels": k, "B": B}, "pass" if rep.ok else "fail",
                           "injective chains factor uniquely over the f_(k,n) basis",
                           {"basis_per_level": rep.basis_per_level}, rep.problems)
    rep = verify_basis_ndelta_plus(k, B)
    return make_report("basis-check", {"levels": k, "B": B}, "pass" if rep.ok else "fail",
                       "chains factor uniquely as joins of chains ending at [0]",
                       {"chains": rep.chains, "basis_per_level": rep.basis_per_level}, rep.problems)


def cmd_horn_generators(args):
    from .simplex.ndelta import verify_horn_generators_ndelta_plus
    k, B = _positive(args.k, "--k"), _positive(args.B, "--B")
    rep = verify_horn_generators_ndelta_plus(k, B)
    return make_report("horn-generators", {"levels": k, "B": B}, "pass" if rep.ok else "fail",
                       "d_0 pairs H_(n+1) with the nondegenerate basis outside H_n",
                       {"levels": rep.levels, "indices": sorted(rep.indices), "verdict": rep.verdict}, rep.problems)


def cmd_filtration(args):
    from .simplex.free import (constant_presentation, delta_inj_presentation, free_map_filtration,
                               ndelta_plus_presentation, validate_presentation)
    N = _positive(args.maxdim, "--maxdim")
    if args.presentation == "ndelta":
        P = ndelta_plus_presentation(N, _positive(args.B, "--B"))
    elif args.presentation == "inj":
        P = delta_inj_presentation(N)
    else:
        P = constant_presentation(["x"], N)
    val = validate_presentation(P, word_length=args.word_length)
    rep = free_map_filtration(P, N, args.word_length, anodyne=args.anodyne)
    ok = val.ok and rep.ok
    return make_report("filtration", P.window | {"word_length": args.word_length}, "pass" if ok else "fail",
                       "skeletal filtration: each stage attaches the nondegenerate generators of its level",
                       {"presentation": P.name, "stabilized_at": rep.stabilized_at,
                        "stages": [{"k": s.k, "new": s.new_by_level, "predicted": s.predicted} for s in rep.stages],
                        "horn_stages": rep.anodyne}, val.problems + rep.problems)


def cmd_lifting_check(args):
    from .simplex.sset import load_sset, nerve, terminal_map, horn_lifting_check
    if args.sset:
        path = Path(args.sset)
        if not path.exists():
            raise UsageError(f"simplicial set file {args.sset!r} not found")
        try:
            E = load_sset(path)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot parse simplicial set file: {exc}") from None
    else:
        E = nerve(_category(_need(args, "category")), args.maxdim)
    rep = horn_lifting_check(terminal_map(E), args.klass, args.maxdim)
    return make_report("lifting-check", list(range(1, args.maxdim + 1)), "pass" if rep.ok else "fail",
                       f"{args.klass} horns lift against the map to the point",
                       {"instances": rep.instances, "per_horn": rep.per_horn}, rep.failures)


def cmd_bk_shadow(args):
    from .bkshadow.shadow import kR_shadow
    w = _window(args, "0..4")
    try:
        rep = kR_shadow(args.ring, w)
    except ValueError as exc:
        raise UsageError(f"bad --ring {args.ring!r}: {exc}") from None
    verdict = "resource" if rep.unresolved else ("pass" if rep.sandwich else "fail")
    return make_report("bk-shadow", w, verdict, "shadow: sizes admitting an R_a-algebra, between I and R",
                       rep.summary())


def cmd_suite(args):
    from .acceptance import run_suite
    try:
        results = run_suite(args.name, echo=(lambda s: print(s, file=sys.stderr)) if args.progress else None)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    statuses = [r.status for r in results]
    verdict = "fail" if "fail" in statuses else ("resource" if "resource" in statuses else "pass")
    data = {"criteria": [{"criterion": r.number, "title": r.title, "status": r.status, "detail": r.detail}
                         for r in results],
            "passed": sum(r.ok for r in results), "total": len(results)}
    cex = [f"{r.number}: {p}" for r in results for p in r.problems]
    return make_report("suite", args.name, verdict, "acceptance criteria", data, cex)


VERBS = {
    "monad-check": cmd_monad_check, "algebras": cmd_algebras, "isar": cmd_isar, "fakir": cmd_fakir,
    "fakir-vs-codensity": cmd_fakir_vs_codensity, "walking": cmd_walking, "codensity": cmd_codensity,
    "terminality": cmd_terminality, "retract-closure": cmd_retract_closure, "localize": cmd_localize,
    "initial-check": cmd_initial_check, "cofinal": cmd_cofinal, "nerve": cmd_nerve, "basis-check": cmd_basis_check,
    "horn-generators": cmd_horn_generators, "filtration": cmd_filtration, "lifting-check": cmd_lifting_check,
    "bk-shadow": cmd_bk_shadow, "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", help="sizes as a..b or a,b,c")
    common.add_argument("--subcat", help="comma-separated objects of D")
    common.add_argument("--depth", type=int, default=2)
    common.add_argument("--maxdim", type=int, default=2)
    common.add_argument("--B", type=int, default=3)
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--out", help="also write the report here, plus the other format alongside")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--monad", help="builtin:NAME[:PARAM] or a monad definition file")
    common.add_argument("--category", help="category file or chain:a,b / group:Z/n / delta:n / finset / vect-f2")
    common.add_argument("--objects", help="comma-separated objects to evaluate at")
    common.add_argument("--object-size", type=int)
    common.add_argument("--carrier", type=int, default=3)
    common.add_argument("--limit", type=int, default=None, help="stop algebra search after this many")
    common.add_argument("--morphisms", choices=("auto", "all", "generators"), default="auto")
    common.add_argument("--class", dest="klass", choices=("kan", "inner", "left", "right"), default="kan")
    common.add_argument("--sset", help="truncated simplicial set file")
    common.add_argument("--sset-out", help="write the nerve as a simplicial set file")
    common.add_argument("--injective", action="store_true")
    common.add_argument("--presentation", choices=("ndelta", "inj", "constant"), default="ndelta")
    common.add_argument("--anodyne", action="store_true")
    common.add_argument("--word-length", type=int, default=2)
    common.add_argument("--ring", default="Z/2")
    p = argparse.ArgumentParser(prog="codensity", description="Exact finite checks around codensity monads.")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        sp = sub.add_parser(verb, parents=[common])
        if verb == "suite":
            sp.add_argument("name")
            sp.add_argument("--progress", action="store_true", help="print one line per criterion to stderr")
    return p


def _write_out(rep: dict, path: str, fmt: str) -> None:
    out = Path(path)
    primary = render_json(rep) if fmt == "json" else render_text(rep)
    out.write_text(primary)
    other = out.with_suffix(".txt" if fmt == "json" else ".json")
    if other != out:
        other.write_text(render_text(rep) if fmt == "json" else render_json(rep))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        rep = VERBS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        rep = make_report(args.verb, args.window, "resource", "resource guard", {"reason": str(exc)})
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render_json(rep) if args.format == "json" else render_text(rep)
    sys.stdout.write(text)
    if args.out:
        _write_out(rep, args.out, args.format)
    return exit_code(rep["verdict"])


if __name__ == "__main__":
    sys.exit(main())
