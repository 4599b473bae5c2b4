"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
A ``--config FILE`` of ``key=value`` lines supplies flag defaults; explicit
flags win.
"""

from __future__ import annotations

import argparse
import socket
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __doc__ as package_doc
from .algebra import Element, decode_element, encode_element, params_new
from .errors import EntropoidError
from .field import PrimeModulus, default_rng
from .generators import gen, gen_q
from .kex import kex_derive, kex_keygen, suite_new
from .powindex import PowerIndex, pow_fast
from .presets import GENERATORS, PRESETS, preset
from .sig import (Scheme, SigKeyPair, decode_key, encode_key, encode_signature, sig_keygen,
                  sig_params_from, sig_params_new, sign, verify_bytes)

EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2

SCHEMES = {"cderp": Scheme.CDERP, "conservative": Scheme.CDERP_TO_DELP}
SCHEME_NAMES = {v: k for k, v in SCHEMES.items()}


class UsageError(Exception):
    pass


def read_config(path: str) -> list[tuple[str, str]]:
    entries = []
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{n}: expected key=value")
        entries.append((key.strip(), value.strip()))
    return entries


def _hex(E, x) -> str:
    return encode_element(E, x).hex()


def _load_params(path: str):
    cfg = dict(read_config(path))
    try:
        scheme = SCHEMES[cfg["scheme"]]
        E = params_new(PrimeModulus.of(int(cfg["p"])), int(cfg["a3"]), int(cfg["a8"]),
                       int(cfg["b2"]), int(cfg["b7"]))
        base = int(cfg.get("base", 257))
    except KeyError as exc:
        raise UsageError(f"{path}: missing {exc.args[0]}") from None
    return sig_params_from(E, scheme, base)


def _entropoid_from_args(args):
    if args.params:
        return _load_params(args.params).params
    return preset(args.which)


def cmd_params(args) -> int:
    rng = default_rng(args.seed)
    P = sig_params_new(args.bits, SCHEMES[args.scheme], rng, args.base)
    E = P.params
    text = "\n".join([
        f"scheme={args.scheme}",
        f"lambda={E.modulus.bits}",
        f"p={E.p}",
        f"a3={E.a3}", f"a8={E.a8}", f"b2={E.b2}", f"b7={E.b7}",
        f"base={P.base}",
        f"hash={P.hash_name}",
        f"B={P.B.format()}",
    ]) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    E = _entropoid_from_args(args)
    rng = default_rng(args.seed)
    cert = gen_q(E, rng) if args.command == "genq" else gen(E, rng)
    print(f"g={cert.g.x1},{cert.g.x2}")
    print(f"g_hex={_hex(E, cert.g)}")
    print(f"checks={','.join(str(int(c)) for c in cert.checks_passed)}")
    print(f"claimed_order={cert.claimed_order}")
    return EXIT_OK


def _recv_exact(sock: socket.socket, n: int) -> bytes:
    buf = b""
    while len(buf) < n:
        chunk = sock.recv(n - len(buf))
        if not chunk:
            raise UsageError("peer closed early")
        buf += chunk
    return buf


def cmd_kex_demo(args) -> int:
    rng = default_rng(args.seed)
    suite = suite_new(args.bits, rng, args.base)
    E = suite.params
    alice = kex_keygen(suite, rng)
    bob = kex_keygen(suite, rng)
    width = suite.message_bytes
    wire = 0
    a_sock, b_sock = socket.socketpair()
    with a_sock, b_sock:
        a_sock.sendall(encode_element(E, alice.public))
        msg_for_bob = _recv_exact(b_sock, width)
        b_sock.sendall(encode_element(E, bob.public))
        msg_for_alice = _recv_exact(a_sock, width)
        wire = len(msg_for_bob) + len(msg_for_alice)
    k_alice = kex_derive(suite, alice, decode_element(E, msg_for_alice))
    k_bob = kex_derive(suite, bob, decode_element(E, msg_for_bob))
    print(f"p={E.p}")
    print(f"g_q={_hex(E, suite.g_q)}")
    print(f"alice_public={msg_for_bob.hex()}")
    print(f"bob_public={msg_for_alice.hex()}")
    print(f"alice_shared={_hex(E, k_alice)}")
    print(f"bob_shared={_hex(E, k_bob)}")
    print(f"bytes_on_wire={wire}")
    match = k_alice == k_bob
    print(f"match={'true' if match else 'false'}")
    return EXIT_OK if match else EXIT_REJECT


def cmd_keygen(args) -> int:
    P = _load_params(args.params)
    kp = sig_keygen(P, default_rng(args.seed))
    prefix = Path(args.out)
    Path(f"{prefix}.key").write_bytes(encode_key(P, kp.private_x))
    Path(f"{prefix}.pub").write_bytes(encode_key(P, kp.public_y))
    print(f"public={_hex(P.params, kp.public_y)}")
    return EXIT_OK


def cmd_sign(args) -> int:
    P = _load_params(args.params)
    x = decode_key(P, Path(args.key).read_bytes())
    y = pow_fast(P.params, x, P.B)
    sig = sign(P, SigKeyPair(x, y), Path(args.message).read_bytes(), default_rng(args.seed))
    data = encode_signature(P, sig)
    if args.out:
        Path(args.out).write_bytes(data)
    print(f"signature={data.hex()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _load_params(args.params)
    y = decode_key(P, Path(args.pub).read_bytes())
    ok = verify_bytes(P, y, Path(args.message).read_bytes(), Path(args.sig).read_bytes())
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_REJECT


def cmd_delp(args) -> int:
    from .analysis.delp import delp_brute, delp_random

    E = preset(args.which)
    g = GENERATORS.get(args.which) or gen(E, default_rng(args.seed)).g
    if args.target_index:
        y = pow_fast(E, g, PowerIndex.parse(args.target_index))
    elif args.target:
        y = Element(*(int(v) for v in args.target.split(",")))
    else:
        raise UsageError("give --target-index or --target")
    if args.solver == "brute":
        idx = delp_brute(E, g, y, args.base)
    else:
        idx = delp_random(E, g, y, args.budget, default_rng(args.seed))
    print(f"g={g.x1},{g.x2}")
    print(f"y={y.x1},{y.x2}")
    if idx is None:
        print("index=none")
        return EXIT_REJECT
    print(f"index={idx.format()}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    from .analysis.shapes import (collision_entropy_experiment, partition_xi, random_entropoid,
                                  write_csv)

    rng = default_rng(args.seed)
    if args.bits:
        E, g = random_entropoid(args.bits, rng)
    else:
        E, g = preset("e49223"), GENERATORS["e49223"]
    reports = [partition_xi(E, g, args.base, i) for i in range(2, args.level + 1)]
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(reports, fh)
    else:
        write_csv(reports, sys.stdout)
    if args.trials:
        est = collision_entropy_experiment(E, g, args.base, rng, args.trials)
        out = sys.stdout if args.out else sys.stderr
        print(f"collision_entropy={est.mean:.4f} trials={args.trials} p={E.p}", file=out)
        print(f"estimator={est.estimator}", file=out)
    return EXIT_OK


def cmd_tables(args) -> int:
    from .analysis.tables import size_grid

    kinds = ("span2", "span") if args.kind == "both" else (args.kind,)
    for kind in kinds:
        print(size_grid(args.which, kind).to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="entropoid", description=package_doc)
    parser.add_argument("--config", help="key=value file of flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    def seed(p):
        p.add_argument("--seed", type=int, help="PRNG seed; omit for OS entropy")

    p = sub.add_parser("params", help="generate signature parameters")
    p.add_argument("--lambda", dest="bits", type=int, default=128)
    p.add_argument("--scheme", choices=sorted(SCHEMES), default="cderp")
    p.add_argument("--base", type=int, default=257)
    p.add_argument("--out")
    seed(p)
    p.set_defaults(func=cmd_params)

    for name in ("gen", "genq"):
        p = sub.add_parser(name, help="find a generator" if name == "gen"
                           else "find a Sylow generator")
        p.add_argument("--which", choices=sorted(PRESETS), default="e11")
        p.add_argument("--params", help="parameter file instead of a preset")
        seed(p)
        p.set_defaults(func=cmd_gen)

    p = sub.add_parser("kex-demo", help="run both key-exchange roles over a socket pair")
    p.add_argument("--lambda", dest="bits", type=int, default=128)
    p.add_argument("--base", type=int, default=3)
    seed(p)
    p.set_defaults(func=cmd_kex_demo)

    p = sub.add_parser("keygen", help="write PREFIX.key and PREFIX.pub")
    p.add_argument("--params", required=True)
    p.add_argument("--out", required=True, help="output prefix")
    seed(p)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a message file")
    p.add_argument("--params", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--out")
    seed(p)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature file")
    p.add_argument("--params", required=True)
    p.add_argument("--pub", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("delp", help="solve a toy discrete entropoid logarithm")
    p.add_argument("--which", choices=sorted(PRESETS), default="e7")
    p.add_argument("--target-index", help="index text b:<base>;a:<int>;p:<digits>")
    p.add_argument("--target", help="element as x1,x2")
    p.add_argument("--solver", choices=("brute", "random"), default="brute")
    p.add_argument("--base", type=int, help="odd base for the brute-force solver")
    p.add_argument("--budget", type=int, default=100_000)
    seed(p)
    p.set_defaults(func=cmd_delp)

    p = sub.add_parser("analyze", help="pattern-class census as CSV")
    p.add_argument("--base", type=int, default=4)
    p.add_argument("--level", type=int, default=5)
    p.add_argument("--lambda", dest="bits", type=int,
                   help="use a random entropoid of this size instead of the 16-bit preset")
    p.add_argument("--trials", type=int, default=0, help="collision-entropy trials")
    p.add_argument("--out")
    seed(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tables", help="generated-set size grids")
    p.add_argument("--which", choices=("e7", "e11", "e13", "e19", "e23"), default="e7")
    p.add_argument("--kind", choices=("span", "span2", "both"), default="both")
    p.set_defaults(func=cmd_tables)
    return parser


def _expand_config(argv: list[str]) -> list[str]:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if not known.config:
        return rest
    # config flags go right after the subcommand so explicit flags override them
    cmd_pos = next((i for i, a in enumerate(rest) if not a.startswith("-")), None)
    if cmd_pos is None:
        raise UsageError("missing subcommand")
    extra = []
    for key, value in read_config(known.config):
        extra += [f"--{key.replace('_', '-')}", value]
    return rest[:cmd_pos + 1] + extra + rest[cmd_pos + 1:]


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_expand_config(argv))
    except UsageError as exc:
        print(f"entropoid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, EntropoidError, ValueError, KeyError, OSError) as exc:
        print(f"entropoid: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main
