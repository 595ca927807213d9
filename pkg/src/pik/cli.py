"""Command-line front end.

Exit status: 0 for equal / passed, 1 for not equal / failed, 2 for any error.
The precision level comes from ``--k``, else the ``PIK_K`` environment
variable, else defaults to 2.
"""

import argparse
import json
import os
import sys

from .catalytic import phi
from .channels import chan_eq, chan_of_unitary
from .decide import decide_approx, eq, eq_up_to_phase
from .errors import PikError
from .linalg import ExactMatrix
from .qft import build_qft, qft_stats
from .ring import check_precision
from .semantics import eval_term
from .suites import SUITES, run_suite
from .synth2 import synth
from .syntax import parse, pretty
from .tensor import sigma_tensor
from .term import term_conj, term_dagger

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _session_k(args):
    k = getattr(args, "k", None)
    if k is None:
        env = os.environ.get("PIK_K")
        if env is not None:
            try:
                k = int(env)
            except ValueError:
                raise PikError(f"PIK_K must be an integer, got {env!r}") from None
    if k is None:
        k = 2
    return check_precision(k)


def _read_term(path, k):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), k)


def _print_matrix(m, fmt):
    if fmt == "json":
        print(json.dumps(m.to_json()))
        return
    print(f"# approximate floating-point view of an exact {m.rows}x{m.cols} matrix (k={m.k})")
    for row in m.to_complex():
        print("  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))


def cmd_eval(args, k):
    _print_matrix(eval_term(_read_term(args.file, k), k), args.format)
    return EXIT_OK


def cmd_eq(args, k):
    a, b = _read_term(args.file1, k), _read_term(args.file2, k)
    if args.phase:
        w = eq_up_to_phase(a, b, k)
        if w is None:
            print("not equal up to phase")
            return EXIT_FAIL
        print(f"equal up to phase: first = zeta^{w.j} * second")
        return EXIT_OK
    same = decide_approx(a, b, k) if args.approx else eq(a, b, k)
    print("equal" if same else "not equal")
    return EXIT_OK if same else EXIT_FAIL


def cmd_embed(args, k):
    from_k = args.from_k if args.from_k is not None else k
    print(pretty(phi(_read_term(args.file, from_k), from_k)))
    return EXIT_OK


def cmd_conj(args, k):
    print(pretty(term_conj(_read_term(args.file, k), k)))
    return EXIT_OK


def cmd_dagger(args, k):
    print(pretty(term_dagger(_read_term(args.file, k))))
    return EXIT_OK


def cmd_sigma(args, k):
    print(pretty(sigma_tensor(args.m, args.n)))
    return EXIT_OK


def cmd_synth(args, k):
    with open(args.file, encoding="utf-8") as fh:
        u = ExactMatrix.from_json(json.load(fh))
    result = synth(u)
    print(pretty(result.term))
    if args.stats:
        stats = {"gate_count": result.gate_count, "max_den_exp_seen": result.max_den_exp_seen}
        print("# " + json.dumps(stats))
    return EXIT_OK


def cmd_qft(args, k):
    if args.stats:
        print(json.dumps(qft_stats(args.n, k).to_json()))
    else:
        print(pretty(build_qft(args.n, k)))
    return EXIT_OK


def cmd_channel(args, k):
    if args.channel_cmd == "eq":
        f, g = _read_term(args.file1, k), _read_term(args.file2, k)
        same = chan_eq(chan_of_unitary(f, k), chan_of_unitary(g, k))
        print("equal" if same else "not equal")
        return EXIT_OK if same else EXIT_FAIL
    rep = run_suite("staton", k, args.trials, args.seed)
    print(json.dumps(rep.to_json(), indent=2))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_suite(args, k):
    rep = run_suite(args.name, k, args.trials, args.seed)
    print(json.dumps(rep.to_json(), indent=2))
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", "--k", type=int, default=argparse.SUPPRESS, help="precision level (>= 2)")
    randomised = argparse.ArgumentParser(add_help=False)
    randomised.add_argument("--trials", type=int, default=None)
    randomised.add_argument("--seed", type=int, default=0, help="random seed (default 0)")

    parser = argparse.ArgumentParser(prog="pik", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("eval", parents=[common], help="print the exact matrix of a term")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eq", parents=[common], help="decide equality of two terms")
    p.add_argument("file1")
    p.add_argument("file2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--phase", action="store_true", help="equality up to a global phase")
    mode.add_argument("--approx", action="store_true", help="equality up to auxiliary summands")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("embed", parents=[common], help="lower a term by one precision level")
    p.add_argument("file")
    p.add_argument("--from-k", type=int, dest="from_k", default=None)
    p.set_defaults(func=cmd_embed)

    for name, func in (("conj", cmd_conj), ("dagger", cmd_dagger)):
        p = sub.add_parser(name, parents=[common], help=f"print the {name} of a term")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("sigma", parents=[common], help="print the tensor symmetry m (x) n -> n (x) m")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("synth", parents=[common], help="synthesise a k=2 term from a JSON matrix")
    p.add_argument("file")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("qft", parents=[common], help="emit the QFT circuit or its gate counts")
    p.add_argument("-n", type=int, required=True)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--stats", action="store_true")
    out.add_argument("--emit", action="store_true")
    p.set_defaults(func=cmd_qft)

    p = sub.add_parser("channel", parents=[common], help="channel-level commands")
    csub = p.add_subparsers(dest="channel_cmd", required=True)
    c = csub.add_parser("eq", parents=[common])
    c.add_argument("file1")
    c.add_argument("file2")
    c = csub.add_parser("staton", parents=[common, randomised])
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("suite", parents=[common, randomised], help="run a named check suite")
    p.add_argument("name", choices=SUITES)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        k = _session_k(args)
        return args.func(args, k)
    except (PikError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"pik: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
