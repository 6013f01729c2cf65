"""Command-line entry point.  JSON in, JSON (or display text) out."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alphabet import (
    ARRAY_CLASSES,
    AlphabetParams,
    CapExceeded,
    InfeasibleError,
    OspError,
    TwoLineArray,
    check_letter,
    enumerate_arrays,
    parse_letter,
)
from .characters import DIRECT, VERIFIERS, spo_character
from .correspondences import (
    DualSpoTriple,
    SpoTriple,
    WordPair,
    burge_forward,
    burge_inverse,
    dual_burge_forward,
    dual_burge_inverse,
    dual_spo_forward,
    dual_spo_inverse,
    spo_forward,
    spo_inverse,
    updown_to_word,
    word_to_updown,
)
from .insertion import Effect, spo_insert, spo_uninsert
from .tableaux import KINDS, SPO, Caps, Tableau, enumerate_tableaux, enumerate_updown, validate_tableau

VERBS = ("insert", "correspond", "burge", "dual-correspond", "dual-burge", "word", "enumerate", "character", "verify", "render")


class InputError(Exception):
    pass


def _load(arg: str | None):
    if arg is None:
        raise InputError("--input is required for this verb")
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif not arg.lstrip().startswith(("{", "[")):
        path = Path(arg)
        if not path.exists():
            raise InputError(f"input file not found: {arg}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def _params(args) -> AlphabetParams:
    return AlphabetParams(args.m, args.n, args.q)


def _caps(args) -> Caps:
    return Caps(max_cells=args.max_cells) if args.max_cells else Caps()


def _trace_json(steps) -> list:
    return [s.to_json() for s in steps]


# ------------------------------------------------------------------ verbs

def cmd_insert(args, doc):
    params = _params(args)
    t = Tableau.from_json(doc["tableau"])
    bad = validate_tableau(t, SPO, params)
    if bad is not None:
        raise InputError(f"input tableau is not an spo-tableau: {bad.reason}")
    if args.inverse:
        eff = doc["effect"]
        before, x = spo_uninsert(t, Effect(eff["kind"], tuple(eff["cell"])), params)
        return {"tableau": before.to_json(), "letter": str(x)}, 0
    x = parse_letter(doc["letter"])
    check_letter(x, params)
    out = spo_insert(t, x, params)
    res = {"result": out.result.to_json(), "effect": out.effect.to_json()}
    if args.trace:
        res["trace"] = [e.to_json() for e in out.trace]
    return res, 0


def _correspond(args, doc, forward, inverse, triple_cls):
    params = _params(args)
    if args.inverse:
        got = inverse(triple_cls.from_json(doc), params, trace=args.trace)
        pi, steps = got if args.trace else (got, None)
        res = {"array": pi.to_json()}
    else:
        got = forward(TwoLineArray.from_json(doc), params, trace=args.trace)
        triple, steps = got if args.trace else (got, None)
        res = triple.to_json()
    if steps is not None:
        res["trace"] = _trace_json(steps)
    return res, 0


def cmd_correspond(args, doc):
    return _correspond(args, doc, spo_forward, spo_inverse, SpoTriple)


def cmd_dual_correspond(args, doc):
    return _correspond(args, doc, dual_spo_forward, dual_spo_inverse, DualSpoTriple)


def _burge(args, doc, forward, inverse):
    if args.inverse:
        return {"array": inverse(Tableau.from_json(doc)).to_json()}, 0
    got = forward(TwoLineArray.from_json(doc, letters=False), trace=args.trace)
    if args.trace:
        q, steps = got
        return {"tableau": q.to_json(), "trace": [s.to_json() for s in steps]}, 0
    return {"tableau": got.to_json()}, 0


def cmd_burge(args, doc):
    return _burge(args, doc, burge_forward, burge_inverse)


def cmd_dual_burge(args, doc):
    return _burge(args, doc, dual_burge_forward, dual_burge_inverse)


def cmd_word(args, doc):
    params = _params(args)
    if args.inverse:
        w = updown_to_word(WordPair.from_json(doc), params)
        return {"word": [str(x) for x in w]}, 0
    letters = doc["word"] if isinstance(doc, dict) else doc
    got = word_to_updown([parse_letter(x) for x in letters], params, trace=args.trace)
    if args.trace:
        pair, tabs = got
        res = pair.to_json()
        res["trace"] = [t.to_json() for t in tabs]
        return res, 0
    return got.to_json(), 0


def cmd_enumerate(args, doc):
    params, caps = _params(args), _caps(args)
    kind = doc.get("kind")
    if kind in KINDS:
        objs = [t.to_json() for t in enumerate_tableaux(doc["shape"], kind, params, caps=caps)]
    elif kind == "UpDown":
        objs = [ud.to_json() for ud in enumerate_updown(doc["shape"], _need_k(args), params)]
    elif kind in ARRAY_CLASSES:
        objs = [pi.to_json() for pi in enumerate_arrays(kind, params, _need_k(args))]
    else:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS + ('UpDown',) + ARRAY_CLASSES)}")
    return {"kind": kind, "count": len(objs), "items": objs}, 0


def cmd_character(args, doc):
    poly = spo_character(doc["shape"], _params(args), doc.get("method", DIRECT), _caps(args))
    return {"shape": list(doc["shape"]), "polynomial": poly.to_json(), "text": str(poly)}, 0


def _need_k(args) -> int:
    if args.k is None:
        raise InputError("--k is required")
    return args.k


def cmd_verify(args, doc):
    if args.identity not in VERIFIERS:
        raise InputError(f"unknown identity {args.identity!r}; expected one of {', '.join(VERIFIERS)}")
    report = VERIFIERS[args.identity](_params(args), _need_k(args), _caps(args))
    res = report.to_json()
    res.pop("wall_time")
    return res, 0 if report.ok else 1


def cmd_render(args, doc):
    return doc, 0


HANDLERS = {
    "insert": cmd_insert,
    "correspond": cmd_correspond,
    "burge": cmd_burge,
    "dual-correspond": cmd_dual_correspond,
    "dual-burge": cmd_dual_burge,
    "word": cmd_word,
    "enumerate": cmd_enumerate,
    "character": cmd_character,
    "verify": cmd_verify,
    "render": cmd_render,
}


# ---------------------------------------------------------------- text view

def _text(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        if "rows" in obj and "shape" in obj:
            rows = [" ".join("." if e is None else str(e) for e in r) for r in obj["rows"]]
            return "\n".join(indent + r for r in rows) if rows else indent + "(empty)"
        if set(obj) == {"top", "bottom"}:
            return f"{indent}{' '.join(map(str, obj['top']))}\n{indent}{' '.join(map(str, obj['bottom']))}"
        lines = []
        for key, val in obj.items():
            flat = isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val)
            if flat:
                lines.append(f"{indent}{key}: {' '.join(map(str, val)) or '(empty)'}")
            elif isinstance(val, (dict, list)) and val:
                lines.append(f"{indent}{key}:")
                lines.append(_text(val, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {val}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return indent + " ".join(map(str, obj))
        return "\n".join(_text(v, indent) + ("\n" if isinstance(v, dict) else "") for v in obj).rstrip("\n")
    return indent + str(obj)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ospkit", description="Orthosymplectic insertion and Cauchy-identity bijections.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("identity", nargs="?", help="identity name for the verify verb")
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--q", type=int, default=1)
    ap.add_argument("--k", type=int)
    ap.add_argument("--input", help="path, '-' for stdin, or inline JSON")
    ap.add_argument("--inverse", action="store_true")
    ap.add_argument("--trace", action="store_true")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--max-cells", type=int, dest="max_cells")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.verb != "verify" and args.identity is not None:
            raise InputError(f"unexpected argument {args.identity!r}")
        if min(args.m, args.n, args.q) < 0:
            raise InputError("--m, --n and --q must be nonnegative")
        doc = None if args.verb == "verify" else _load(args.input)
        if args.verb == "enumerate" and not isinstance(doc, dict):
            raise InputError("enumerate expects an object with a 'kind' field")
        result, status = HANDLERS[args.verb](args, doc)
    except InfeasibleError as exc:
        print(f"ospkit: infeasible: {exc}", file=sys.stderr)
        return 1
    except (InputError, OspError, CapExceeded) as exc:
        print(f"ospkit: {exc}", file=sys.stderr)
        return 2
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        print(f"ospkit: bad input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.format == "text" or args.verb == "render":
        print(_text(result))
    else:
        print(json.dumps(result, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
