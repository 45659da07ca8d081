"""Command-line interface: ``chevk1 <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (non-unimodular input,
non-invertible corner, ...) and 2 on usage errors.  Errors are reported on
stderr as ``{"error": {"kind": ..., "detail": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .congruence import identity_suite
from .decomposition import DecompositionError, NonInvertibleCorner, chevalley_matsumoto
from .group import GroupElement, W, apply_word, realize, representation, word_from_json, word_to_json
from .reduction import InternalPostconditionFailure, minimize_word, reduce_dl, reduce_e6
from .rings import RingError, ZZ, parse_ring
from .roots import (
    NoSuchElement, NotARoot, find_weyl_conjugator, named_subsystem, root_system,
)
from .sampling import random_element, random_vector
from .weights import diagram, parse_rep_label

DOMAIN_ERRORS = (RingError, NonInvertibleCorner, DecompositionError, NoSuchElement,
                 NotARoot, InternalPostconditionFailure)


class UsageError(Exception):
    pass


def _dump(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    _write(text, path)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _ring(args, data=None):
    text = args.ring or (data.get("ring") if isinstance(data, dict) else None)
    if text is None:
        raise UsageError("no ring given (use --ring or a 'ring' field in the input)")
    return parse_ring(text)


def _rep_label(args, data=None):
    label = args.rep or (data.get("rep") if isinstance(data, dict) else None)
    if label is None:
        raise UsageError("no representation given (use --rep)")
    parse_rep_label(label)
    return label


def _root(text):
    try:
        return tuple(int(c) for c in text.strip("[]() ").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad root {text!r}, expected e.g. 1,0,0,0,0,0,0") from None


def default_rep(system_label):
    """The minuscule representation used for a bare root system label."""
    return {"E6": "E6:w1", "E7": "E7:w7"}.get(system_label, f"{system_label}:w1")


# ---------------------------------------------------------------------------
# subcommands

def cmd_roots(args):
    if "@" in args.system:
        sub = named_subsystem(args.system)
        out = {"subsystem": sub.label, "ambient": sub.ambient.label,
               "generators": [list(g) for g in sub.generators],
               "roots": [list(r) for r in sub.ambient.roots if r in sub],
               "complement": [list(r) for r in sub.complement]}
    else:
        phi = root_system(args.system)
        roots = phi.positive if args.positive else phi.roots
        out = {"system": phi.label, "rank": phi.rank,
               "cartan": phi.cartan.tolist(),
               "highest_root": list(phi.highest_root),
               "roots": [list(r) for r in roots]}
    _dump(out, args.out)


def cmd_diagram(args):
    diag = diagram(args.rep)
    if args.format == "dot":
        _write(diag.to_dot(), args.out)
    else:
        _dump(diag.to_json(), args.out)


def _word_input(args):
    data = _load(args.input)
    payload = data.get(args.key) if isinstance(data, dict) else data
    if payload is None:
        raise UsageError(f"input has no {args.key!r} field")
    return data, payload


def cmd_elem(args):
    data, payload = _word_input(args)
    ring = _ring(args, data)
    label = _rep_label(args, data)
    word = word_from_json(payload, ring)
    g = realize(representation(label), word, ring)
    out = {"rep": label, "ring": str(ring), "letters": len(word), "matrix": g.to_json()}
    if args.vector:
        v = _vector(_load(args.vector), ring)
        out["vector"] = [ring.format(x) for x in apply_word(label, word, v)]
    _dump(out, args.out)


def _vector(data, ring):
    values = data.get("vector") if isinstance(data, dict) else data
    if not isinstance(values, list):
        raise UsageError("vector input must be a list or an object with a 'vector' field")
    return [ring.parse(x) if isinstance(x, (str, dict)) else ring(x) for x in values]


def cmd_decompose(args):
    if args.random:
        ring = _ring(args)
        label = _rep_label(args)
        _, g = random_element(random.Random(args.seed), label, ring, unit_corner=True)
    else:
        if args.input is None:
            raise UsageError("decompose needs --in or --random")
        data = _load(args.input)
        ring = _ring(args, data)
        label = _rep_label(args, data)
        rep = representation(label)
        if "matrix" in data:
            g = GroupElement.from_dense(rep, ring, [[ring.parse(x) for x in row] for row in data["matrix"]])
        elif "word" in data:
            g = realize(rep, word_from_json(data["word"], ring), ring)
        else:
            raise UsageError("decompose input needs a 'matrix' or a 'word' field")
    split = chevalley_matsumoto(g, args.pivot)
    _dump({"rep": label, "ring": str(ring), "pivot": split.pivot,
           "v_word": word_to_json(split.v.word), "u_word": word_to_json(split.u.word),
           "v": split.v.to_json(), "g1": split.g1.to_json(), "u": split.u.to_json()},
          args.out)


def cmd_reduce(args):
    label = _rep_label(args)
    name, k = parse_rep_label(label)
    if args.random:
        ring = _ring(args)
        n = len(diagram(label))
        v = random_vector(random.Random(args.seed), ring, n)
    else:
        if args.input is None:
            raise UsageError("reduce needs --in or --random")
        data = _load(args.input)
        ring = _ring(args, data)
        v = _vector(data, ring)
    if len(v) != len(diagram(label)):
        raise UsageError(f"{label} needs {len(diagram(label))} coordinates, got {len(v)}")
    trace = [] if args.trace else None
    if label == "E6:w1":
        word = reduce_e6(v, trace)
    elif name.startswith("D") and k == 1:
        word = reduce_dl(v, label)
    else:
        raise UsageError(f"reduction is implemented for E6:w1 and D_l:w1, not {label}")
    if args.minimize:
        word = minimize_word(label, word, v)
    out = {"rep": label, "ring": str(ring), "input": [ring.format(x) for x in v],
           "word": word_to_json(word)}
    if trace is not None:
        out["trace"] = trace
    _dump(out, args.out)


def cmd_verify(args):
    reports = identity_suite(args.jobs)
    _dump(reports, args.out)
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def cmd_conjugate(args):
    sub = named_subsystem(args.sub)
    word = find_weyl_conjugator(sub, args.source, args.target)
    letters = tuple(W(b, ZZ.one) for b in word)
    _dump({"subsystem": sub.label, "rep": default_rep(sub.ambient.label), "ring": "Z",
           "source": list(args.source), "target": list(args.target),
           "reflections": [list(b) for b in word], "word": word_to_json(letters)},
          args.out)


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="chevk1", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for --random inputs (default 0)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch work")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, rep=True, ring=True, io=True):
        if rep:
            sp.add_argument("--rep", help="representation label, e.g. E6:w1")
        if ring:
            sp.add_argument("--ring", help="ring descriptor, e.g. Z/360 or Z[1/2]")
        if io:
            sp.add_argument("--in", dest="input", help="input JSON file ('-' for stdin)")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("roots", help="list the roots of a system or a named subsystem")
    sp.add_argument("--system", required=True, help="E6, D5, ... or a subsystem label like A1+D6@E7")
    sp.add_argument("--positive", action="store_true")
    common(sp, rep=False, ring=False, io=False)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("diagram", help="weight diagram as JSON or DOT")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_diagram)

    sp = sub.add_parser("elem", help="replay a word to its matrix")
    common(sp)
    sp.add_argument("--key", default="word", help="field holding the word when the input is an object")
    sp.add_argument("--vector", help="also apply the word to this vector JSON")
    sp.set_defaults(func=cmd_elem)

    sp = sub.add_parser("decompose", help="Chevalley-Matsumoto split g = v g1 u")
    common(sp)
    sp.add_argument("--pivot", type=int, help="pivot simple root index (default: the one below mu)")
    sp.add_argument("--random", action="store_true", help="decompose a seeded random element")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("reduce", help="elementary word bringing a unimodular vector to 1 on top")
    common(sp)
    sp.add_argument("--trace", action="store_true", help="record per-step vectors and certificates")
    sp.add_argument("--minimize", action="store_true", help="greedily drop unnecessary letters")
    sp.add_argument("--random", action="store_true", help="reduce a seeded random unimodular vector")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="run an identity suite and print a JSON report")
    sp.add_argument("--suite", choices=("paper",), default="paper")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("conjugate", help="Weyl word of a subsystem carrying one root to another")
    sp.add_argument("--sub", default="A1+D6@E7", help="subsystem label (default A1+D6@E7)")
    sp.add_argument("--source", type=_root, required=True)
    sp.add_argument("--target", type=_root, default=_root("1,0,0,0,0,0,0"))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_conjugate)
    return p


def _error(kind, detail, code):
    sys.stderr.write(json.dumps({"error": {"kind": kind, "detail": detail}}) + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args)
    except DOMAIN_ERRORS as exc:
        return _error(type(exc).__name__, str(exc), 1)
    except UsageError as exc:
        return _error("UsageError", str(exc), 2)
    except ValueError as exc:
        # unparsable ring descriptors, labels and unsupported types
        return _error(type(exc).__name__, str(exc), 2)
    return status or 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
