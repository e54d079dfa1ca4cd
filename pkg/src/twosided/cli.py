"""Command-line front end.

Exit codes: 0 success (all claims hold), 1 claim mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import symmetry
from .analysis import analyze
from .connection import ConnectionPair, build_graph, check_derangement_conditions, check_property
from .groups import FiniteGroup, extend_homomorphism, inner_automorphism
from .iso import NotAnAutomorphism, iso_group_automorphism, iso_swap, iso_translate
from .notation import NotationError, format_elements, parse_elements, parse_group
from .reproduce import run_examples
from .search import DEFAULT_CENSUS_ORDER_CAP, census_groups, census_rows, petersen_search

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

COMMANDS = ("check", "build", "analyze", "iso", "examples", "petersen-search", "census")

NOTATION_HELP = """\
groups (-g):
  C<n>     cyclic of order n, elements e, a, a^2, ...
  D<n>     dihedral of order 2n: a^n = b^2 = e, bab = a^-1 (D6 has order 12)
  S<n>     symmetric group on n points, elements in cycle notation
  Q8       quaternion group, elements a^i b^j with a^4 = e, b^2 = a^2
  products join factors with x, e.g. S3xS3 or C2xD4

elements (-L, -R): comma separated
  words in generators:  a, a^2, a^-1, a^3*b, a^3b
  cycles for S<n>:      (12), (1 2 3), (12)(34); e is the identity
  product elements:     ((12),e), (e,(123))   commas inside brackets do not split

templates:
  twosided check -g D6 -L "a,a^2" -R "b,a^3*b"
  twosided analyze -g D5 -L "b" -R "a,a^-1" --json
  twosided build -g S3 -L "e,(12)" -R "(123),(132)" --dot -o k6.dot
  twosided iso -g D6 -L "a,a^2" -R "b,a^3b" --translate a b
  twosided census --max-order 8 --inverse-closed
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class JobSpec:
    command: str
    group_spec: str | None = None
    left_spec: str | None = None
    right_spec: str | None = None
    output_format: str = "text"
    output_path: str | None = None
    options: dict = field(default_factory=dict)
    group: FiniteGroup | None = None
    pair: ConnectionPair | None = None


def _pair_args(p):
    p.add_argument("-g", "--group", required=True, help="group spec, e.g. D6, S3, S3xS3")
    p.add_argument("-L", "--left", required=True, help="comma-separated elements of L")
    p.add_argument("-R", "--right", required=True, help="comma-separated elements of R")
    p.add_argument("-o", "--output", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="twosided",
        description="Two-sided Cayley graphs 2SCay(G; L, R): arcs g -> l^-1 g r.",
        epilog=NOTATION_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = top.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", help="test the 2S-Cayley property (exit 1 if it fails)",
                       epilog=NOTATION_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _pair_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("build", help="export the graph as DOT or JSON")
    _pair_args(p)
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="connectivity, Cayley, transitivity and prime-valency verdicts")
    _pair_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=symmetry.DEFAULT_VERTEX_CAP, help="vertex cap for Aut searches")

    p = sub.add_parser("iso", help="verify a generic isomorphism and print the bijection")
    _pair_args(p)
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--swap", action="store_true", help="g -> g^-1 onto 2SCay(G; R, L)")
    how.add_argument("--translate", nargs=2, metavar=("X", "Y"), help="g -> X^-1 g Y onto (L^X, R^Y)")
    how.add_argument("--sigma", metavar="SPEC",
                     help="group automorphism: inner:<x>, or gens=<g1;g2>:<img1;img2> (images of generators)")

    sub.add_parser("examples", help="reproduce the worked examples and check each claim")

    p = sub.add_parser("petersen-search", help="search order-10 groups for a Petersen graph")
    p.add_argument("--valency", type=int, default=3)
    p.add_argument("--only", action="append", metavar="GROUP", help="restrict to these groups (default C10, D5)")
    p.add_argument("-o", "--output")

    p = sub.add_parser("census", help="tabulate valid pairs as JSON lines")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--inverse-closed", action="store_true")
    p.add_argument("--max-valency", type=int, default=4)
    p.add_argument("--only", action="append", metavar="GROUP", help="restrict to these groups")
    p.add_argument("--cap", type=int, default=symmetry.DEFAULT_VERTEX_CAP)
    p.add_argument("--force", action="store_true", help=f"allow --max-order above {DEFAULT_CENSUS_ORDER_CAP}")
    p.add_argument("-o", "--output")
    return top


def _parse_sigma(G: FiniteGroup, spec: str) -> tuple[int, ...]:
    if spec.startswith("inner:"):
        return inner_automorphism(G, G.parse_element(spec[len("inner:"):]))
    if spec.startswith("gens="):
        gens, _, imgs = spec[len("gens="):].partition(":")
        src = [G.parse_element(t) for t in gens.split(";")]
        dst = [G.parse_element(t) for t in imgs.split(";")]
        if len(src) != len(dst):
            raise UsageError("--sigma: generator and image lists differ in length")
        perm = extend_homomorphism(G, src, dst)
        if perm is None:
            raise UsageError(f"--sigma: {spec!r} does not extend to a bijective homomorphism")
        return perm
    raise UsageError(f"--sigma: expected inner:<x> or gens=...:..., got {spec!r}")


def parse_job(argv: list[str]) -> JobSpec:
    """Parse argv into a JobSpec; group and element specs are parsed here too."""
    ns = build_parser().parse_args(argv)
    cmd = ns.command
    job = JobSpec(cmd, output_path=getattr(ns, "output", None))
    if getattr(ns, "dot", False):
        job.output_format = "dot"
    elif getattr(ns, "json", False):
        job.output_format = "json"
    if hasattr(ns, "group") and cmd not in ("petersen-search", "census"):
        job.group_spec, job.left_spec, job.right_spec = ns.group, ns.left, ns.right
        try:
            G = parse_group(ns.group)
            L = parse_elements(G, ns.left)
            R = parse_elements(G, ns.right)
        except NotationError as exc:
            raise UsageError(str(exc)) from None
        job.group, job.pair = G, ConnectionPair(L, R)
        if cmd == "iso":
            try:
                if ns.translate:
                    job.options["translate"] = tuple(G.parse_element(t) for t in ns.translate)
                elif ns.sigma:
                    job.options["sigma"] = _parse_sigma(G, ns.sigma)
                else:
                    job.options["swap"] = True
            except (ValueError, KeyError) as exc:
                raise UsageError(f"iso: {exc}") from None
        if cmd == "analyze":
            job.options["cap"] = ns.cap
    elif cmd in ("petersen-search", "census"):
        only = []
        for spec in ns.only or ():
            try:
                only.append(parse_group(spec))
            except NotationError as exc:
                raise UsageError(str(exc)) from None
        job.options["only"] = only
        if cmd == "petersen-search":
            job.options["valency"] = ns.valency
        else:
            job.options.update(max_order=ns.max_order, inverse_closed=ns.inverse_closed,
                               max_valency=ns.max_valency, cap=ns.cap, force=ns.force)
            if ns.max_order > DEFAULT_CENSUS_ORDER_CAP and not ns.force:
                raise UsageError(f"census: --max-order {ns.max_order} exceeds {DEFAULT_CENSUS_ORDER_CAP}; add --force")
    return job


def _check(job, out):
    pair = job.pair
    v = check_property(pair)
    d = check_derangement_conditions(pair)
    G = pair.group
    if job.output_format == "json":
        body = {"group": G.label, "L": pair.left.names(), "R": pair.right.names(),
                "property": v.as_dict(G), "derangement": d.as_dict(G)}
        out.write(json.dumps(body) + "\n")
    else:
        out.write(f"group {G.label}  L={{{format_elements(pair.left)}}}  R={{{format_elements(pair.right)}}}\n")
        for c in (v.cond1, v.cond2, v.cond3):
            line = "pass" if c.passed else f"FAIL at g={G.name(c.g)} " + " ".join(G.name(i) for i in c.detail)
            out.write(f"  {c.name}: {line}\n")
        out.write(f"  2S-Cayley property: {'yes' if v.overall else 'no'}\n")
        if v.overall:
            out.write(f"  valency {len(pair.left) * len(pair.right)}\n")
        out.write(f"  derangement conditions: {'all pass' if d.overall else 'some fail'}\n")
    return EXIT_OK if v.overall else EXIT_MISMATCH


def _build(job, out):
    gamma = build_graph(job.pair)
    text = gamma.to_dot() if job.output_format == "dot" else gamma.to_json()
    out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def _analyze(job, out):
    rep = analyze(job.pair, job.options.get("cap"))
    d = rep.as_dict()
    if job.output_format == "json":
        out.write(json.dumps(d) + "\n")
    else:
        for k, v in d.items():
            out.write(f"{k}: {json.dumps(v)}\n")
    return EXIT_OK


def _iso(job, out):
    pair = job.pair
    try:
        if "translate" in job.options:
            res = iso_translate(pair, *job.options["translate"])
        elif "sigma" in job.options:
            res = iso_group_automorphism(pair, job.options["sigma"])
        else:
            res = iso_swap(pair)
    except NotAnAutomorphism as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_MISMATCH
    tgt = res.target.pair
    body = res.bijection.to_json_obj()
    body["target"] = {"L": tgt.left.names(), "R": tgt.right.names()}
    out.write(json.dumps(body) + "\n")
    return EXIT_OK


def _examples(job, out):
    claims = run_examples()
    for c in claims:
        out.write(c.line() + "\n")
    bad = sum(not c.ok for c in claims)
    out.write(f"{len(claims) - bad}/{len(claims)} claims reproduced\n")
    return EXIT_OK if bad == 0 else EXIT_MISMATCH


def _petersen(job, out):
    rep = petersen_search(job.options["only"] or None, job.options["valency"])
    out.write(json.dumps(rep.as_dict()) + "\n")
    return EXIT_OK if not rep.hits else EXIT_MISMATCH


def _census(job, out):
    o = job.options
    groups = o["only"] or census_groups(o["max_order"], o["force"])
    groups = [G for G in groups if G.order <= o["max_order"]]
    for row in census_rows(groups, o["max_valency"], o["inverse_closed"], o["cap"]):
        out.write(json.dumps(row) + "\n")
        out.flush()
    return EXIT_OK


_RUNNERS = {
    "check": _check,
    "build": _build,
    "analyze": _analyze,
    "iso": _iso,
    "examples": _examples,
    "petersen-search": _petersen,
    "census": _census,
}


def run(job: JobSpec, out=None) -> int:
    if job.output_path:
        with open(job.output_path, "w") as fh:
            return _RUNNERS[job.command](job, fh)
    return _RUNNERS[job.command](job, out or sys.stdout)


def main(argv: list[str] | None = None) -> int:
    try:
        job = parse_job(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
