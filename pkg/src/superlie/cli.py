"""Command-line front end.

Subcommands: ls-words, bracket, expand, reduce, gsb-check, hnn-verify,
hnn-basis.  Exit status 0 when every requested check passes, 1 on a check
failure, 2 on an input error.  Output is plain text or JSON (--format).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bracketing import expand, parse_monomial, standard_bracket
from .hnn import (
    build_relations,
    enumerate_h_basis,
    enumerate_uh_basis,
    free_generators_W,
    load_presentation,
    validate,
    verify_hnn_gsb,
    verify_structure_theorem,
)
from .poly import parse_poly
from .rewrite import (
    LARGEST_LEFTMOST,
    STRATEGIES,
    RewriteSystem,
    is_gsb,
    reduce,
)
from .words import Alphabet, enumerate_super_ls


def _parse_alphabet(spec: str) -> Alphabet:
    """Comma-separated "name[:odd]" tokens in increasing order."""
    names: list[str] = []
    odd: set[str] = set()
    for token in spec.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty alphabet token")
        if ":" in token:
            name, tag = token.split(":", 1)
            if tag != "odd":
                raise ValueError(f"bad alphabet token {token!r}; use name or name:odd")
            odd.add(name)
        else:
            name = token
        names.append(name)
    return Alphabet.from_names(names, odd)


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"{path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return data


def _load_system(path: str) -> tuple[RewriteSystem, object]:
    """A rewrite system from either a presentation or a rules file.

    Rules files look like {"generators": [{"name", "parity"}...],
    "rules": ["xy - v", ...]}; presentations are detected by their
    subalgebra_size key.  Returns (system, presentation or None).
    """
    data = _load_json(path)
    if "subalgebra_size" in data:
        pres = load_presentation(data)
        return build_relations(pres), pres
    if "rules" in data:
        gens = data.get("generators")
        if not isinstance(gens, list) or not gens:
            raise ValueError(f"{path}: generators: expected a non-empty list")
        names, odd = [], set()
        for i, g in enumerate(gens):
            if not isinstance(g, dict) or "name" not in g:
                raise ValueError(f"{path}: generators[{i}]: expected {{name, parity}}")
            names.append(g["name"])
            if g.get("parity", 0) == 1:
                odd.add(g["name"])
        alphabet = Alphabet.from_names(names, odd)
        rules = data["rules"]
        if not isinstance(rules, list):
            raise ValueError(f"{path}: rules: expected a list of polynomial strings")
        polys = []
        for i, text in enumerate(rules):
            try:
                polys.append(parse_poly(alphabet, text))
            except ValueError as exc:
                raise ValueError(f"{path}: rules[{i}]: {exc}") from None
        return RewriteSystem.from_polys(alphabet, polys), None
    raise ValueError(f"{path}: expected a presentation or a rules file")


def _cmd_ls_words(args) -> tuple[int, dict, list[str]]:
    alphabet = _parse_alphabet(args.alphabet)
    words = enumerate_super_ls(alphabet, args.max_len)
    texts = [str(w) for w in words]
    payload = {
        "command": "ls-words",
        "max_len": args.max_len,
        "count": len(texts),
        "words": texts,
    }
    return 0, payload, texts


def _cmd_bracket(args) -> tuple[int, dict, list[str]]:
    alphabet = _parse_alphabet(args.alphabet)
    word = alphabet.word(args.word)
    monomial = standard_bracket(word)
    expansion = expand(monomial)
    payload = {
        "command": "bracket",
        "word": str(word),
        "bracket": str(monomial),
        "expansion": str(expansion),
    }
    return 0, payload, [str(monomial), str(expansion)]


def _cmd_expand(args) -> tuple[int, dict, list[str]]:
    alphabet = _parse_alphabet(args.alphabet)
    monomial = parse_monomial(alphabet, args.monomial)
    expansion = expand(monomial)
    payload = {
        "command": "expand",
        "monomial": str(monomial),
        "expansion": str(expansion),
    }
    return 0, payload, [str(expansion)]


def _cmd_reduce(args) -> tuple[int, dict, list[str]]:
    system, _ = _load_system(args.input)
    poly = parse_poly(system.alphabet, args.poly)
    normal_form, trace = reduce(poly, system, strategy=args.strategy)
    steps = [
        {
            "word": str(s.word),
            "rule": str(system.rules[s.rule_index].leading_word),
            "position": s.position,
        }
        for s in trace.steps
    ]
    payload = {
        "command": "reduce",
        "input": str(poly),
        "normal_form": str(normal_form),
        "steps": steps,
    }
    lines = [f"normal form: {normal_form}"]
    for s in steps:
        lines.append(f"  rewrote {s['word']} at {s['position']} by {s['rule']}")
    return 0, payload, lines


def _cmd_gsb_check(args) -> tuple[int, dict, list[str]]:
    system, _ = _load_system(args.input)
    report = is_gsb(system)
    payload = {"command": "gsb-check", **report.to_dict()}
    return (0 if report.passed else 1), payload, [str(report)]


def _cmd_hnn_verify(args) -> tuple[int, dict, list[str]]:
    pres = load_presentation(_load_json(args.input))
    validation = validate(pres.constants)
    if not validation.passed:
        payload = {
            "command": "hnn-verify",
            "passed": False,
            "validation": validation.to_dict(),
        }
        return 1, payload, [str(validation)]
    gsb = verify_hnn_gsb(pres)
    structure = verify_structure_theorem(pres, args.max_len)
    passed = gsb.passed and structure.passed
    payload = {
        "command": "hnn-verify",
        "passed": passed,
        "validation": validation.to_dict(),
        "gsb": gsb.to_dict(),
        "structure": structure.to_dict(),
    }
    lines = [str(validation), str(gsb), str(structure)]
    return (0 if passed else 1), payload, lines


def _cmd_hnn_basis(args) -> tuple[int, dict, list[str]]:
    pres = load_presentation(_load_json(args.input))
    h_basis = enumerate_h_basis(pres, args.max_len)
    uh_basis = enumerate_uh_basis(pres, args.max_len)
    generators = free_generators_W(pres, args.max_len)
    payload = {
        "command": "hnn-basis",
        "max_len": args.max_len,
        "algebra_basis": [str(m) for m in h_basis],
        "enveloping_basis": [str(w) if len(w) else "1" for w in uh_basis],
        "free_generators": [str(m) for m in generators],
    }
    lines = ["algebra basis:"]
    lines.extend(f"  {m}" for m in h_basis)
    lines.append("enveloping algebra basis:")
    lines.extend(f"  {str(w) if len(w) else '1'}" for w in uh_basis)
    lines.append("free generators of the complement:")
    lines.extend(f"  {m}" for m in generators)
    return 0, payload, lines


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlie",
        description="Exact computations with free Lie superalgebras and "
        "stable-letter extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.set_defaults(handler=handler)
        return p

    p = add("ls-words", _cmd_ls_words, "enumerate super-Lyndon-Shirshov words")
    p.add_argument("--alphabet", required=True, help="comma-separated name[:odd]")
    p.add_argument("--max-len", type=_positive_int, required=True)

    p = add("bracket", _cmd_bracket, "standard bracketing of a word, with expansion")
    p.add_argument("word")
    p.add_argument("--alphabet", required=True)

    p = add("expand", _cmd_expand, "expand a bracketed monomial")
    p.add_argument("monomial")
    p.add_argument("--alphabet", required=True)

    p = add("reduce", _cmd_reduce, "normal form of a polynomial modulo a system")
    p.add_argument("poly")
    p.add_argument("--input", required=True, help="presentation or rules file")
    p.add_argument("--strategy", choices=STRATEGIES, default=LARGEST_LEFTMOST)

    p = add("gsb-check", _cmd_gsb_check, "check closure under composition")
    p.add_argument("--input", required=True, help="presentation or rules file")

    p = add("hnn-verify", _cmd_hnn_verify, "validate, check closure, verify structure")
    p.add_argument("--input", required=True, help="presentation file")
    p.add_argument("--max-len", type=_positive_int, default=4)

    p = add("hnn-basis", _cmd_hnn_basis, "bases and free generators up to a length")
    p.add_argument("--input", required=True, help="presentation file")
    p.add_argument("--max-len", type=_positive_int, default=4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, lines = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
