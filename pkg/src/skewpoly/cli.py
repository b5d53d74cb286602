"""Thin command-line client for the skewpoly service.

All computation happens behind the HTTP API: by default requests are
routed in-process through an ASGI transport; --server points the same
client at a remote instance.  Exit codes: 0 ok, 1 verification failure
or computation error, 2 parse error, 3 unsupported-field operation.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx


def _common_flags(ap, suppress):
    d = argparse.SUPPRESS if suppress else None
    ap.add_argument("--ring", default=d, help="ring literal, e.g. "
                    "\"GF(2^8; modulus=x^8+x^4+x^3+x^2+1; var=a); "
                    "frobenius=2\"")
    ap.add_argument("--seed", type=int,
                    default=argparse.SUPPRESS if suppress else 0,
                    help="64-bit seed")
    ap.add_argument("--json", action="store_true", dest="as_json",
                    default=argparse.SUPPRESS if suppress else False,
                    help="print the raw JSON response")
    ap.add_argument("--verify", action="store_true",
                    default=argparse.SUPPRESS if suppress else False,
                    help="attach a verification certificate; failures exit 1")
    ap.add_argument("--jobs", type=int,
                    default=argparse.SUPPRESS if suppress else 1,
                    help="parallel workers for factor branches and bench")
    ap.add_argument("--server",
                    default=argparse.SUPPRESS if suppress else None,
                    help="base URL of a running service "
                    "(default: in-process)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="skewpoly",
        description="Bounds, irreducibility and factorization of skew "
                    "polynomials; exact arithmetic over finite fields and "
                    "F_q(t).")
    _common_flags(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common_flags(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[common], **kw))

    p = sub.add_parser("parse", help="parse and reprint a polynomial")
    p.add_argument("poly")

    for op in ("mul", "ldiv", "rgcd", "llcm"):
        p = sub.add_parser(op, help=f"{op} of two polynomials")
        p.add_argument("f")
        p.add_argument("g")

    p = sub.add_parser("bound", help="least-degree twosided left multiple")
    p.add_argument("poly")
    p.add_argument("--algorithm", choices=("v1", "v2"), default="v2")

    p = sub.add_parser("oracle-bound",
                       help="central part via the linear-algebra oracle")
    p.add_argument("poly")

    p = sub.add_parser("irreducible", help="irreducibility test")
    p.add_argument("poly")
    p.add_argument("--algorithm", choices=("v1", "v2"), default="v2")

    p = sub.add_parser("factor", help="complete factorization")
    p.add_argument("poly")
    p.add_argument("--central-factor", action="append", dest="central",
                   metavar="ZPOLY",
                   help="supply the central peeling sequence (repeatable)")

    p = sub.add_parser("split", help="split off rgcd(f, lift(pi))")
    p.add_argument("poly")
    p.add_argument("--pi", required=True, help="monic central factor in z")

    p = sub.add_parser("bench", help="timing table and log-log slope")
    p.add_argument("--op", choices=("bound", "factor"), required=True)
    p.add_argument("--degrees", required=True,
                   help="comma-separated degree list")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--algorithm", choices=("v1", "v2"), default="v2")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return ap


def _request(args, path, payload):
    if args.server:
        with httpx.Client(base_url=args.server, timeout=None) as client:
            return client.post(path, json=payload)
    import asyncio

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://skewpoly.local",
                                     timeout=None) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _need_ring(args):
    if not args.ring:
        print("error: --ring is required for this command", file=sys.stderr)
        raise SystemExit(2)
    return args.ring


def _emit(args, resp) -> int:
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", {})
        except ValueError:
            detail = {}
        code = detail.get("code", "error")
        msg = detail.get("message", resp.text)
        if "position" in detail and detail["position"] is not None:
            msg += f" (at position {detail['position']})"
        print(f"error [{code}]: {msg}", file=sys.stderr)
        if code == "parse_error" or code == "invalid_ring":
            return 2
        if code == "unsupported_field":
            return 3
        return 1
    body = resp.json()
    if args.as_json:
        print(json.dumps(body, sort_keys=True, separators=(",", ": "),
                         indent=1))
    else:
        _print_text(args.command, body)
    if body.get("verified") is False:
        print("verification: FAILED", file=sys.stderr)
        return 1
    return 0


def _print_text(command, body):
    if command == "parse":
        print(body["canonical"])
    elif command in ("mul", "rgcd", "llcm"):
        print(body["result"][0])
    elif command == "ldiv":
        print(f"quotient: {body['quotient']}")
        print(f"remainder: {body['remainder']}")
    elif command in ("bound", "oracle-bound"):
        print(body["result"][0])
        c = body["central"]
        print(f"central: m={c['m']} fhat={c['fhat']}")
    elif command == "irreducible":
        print("true" if body["irreducible"] else "false")
    elif command == "factor":
        print(f"unit: {body['unit']}")
        print(f"factors: {body['count']}")
        for i, s in enumerate(body["result"], 1):
            print(f"{i}: {s}")
        for i, c in enumerate(body["certificates"], 1):
            print(f"certificate {i}: m={c['m']} fhat={c['fhat']}")
    elif command == "split":
        print(f"left: {body['left']}")
        print(f"right: {body['right']}")
    elif command == "bench":
        print("degree median_s trials")
        for row in body["rows"]:
            print(f"{row['degree']} {row['median_s']:.6f} {row['trials']}")
        slope = body.get("slope")
        print(f"slope: {'undefined' if slope is None else f'{slope:.4f}'}")
    if body.get("verified") is not None:
        print(f"verified: {'true' if body['verified'] else 'false'}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    ring = _need_ring(args)
    if cmd == "parse":
        resp = _request(args, "/v1/parse", {"ring": ring, "poly": args.poly})
    elif cmd in ("mul", "ldiv", "rgcd", "llcm"):
        resp = _request(args, f"/v1/{cmd}",
                        {"ring": ring, "f": args.f, "g": args.g,
                         "verify": args.verify})
    elif cmd == "bound":
        resp = _request(args, "/v1/bound",
                        {"ring": ring, "poly": args.poly, "seed": args.seed,
                         "verify": args.verify, "algorithm": args.algorithm})
    elif cmd == "oracle-bound":
        resp = _request(args, "/v1/oracle-bound",
                        {"ring": ring, "poly": args.poly, "seed": args.seed,
                         "verify": args.verify})
    elif cmd == "irreducible":
        resp = _request(args, "/v1/irreducible",
                        {"ring": ring, "poly": args.poly, "seed": args.seed,
                         "verify": args.verify, "algorithm": args.algorithm})
    elif cmd == "factor":
        resp = _request(args, "/v1/factor",
                        {"ring": ring, "poly": args.poly, "seed": args.seed,
                         "verify": args.verify,
                         "central_factors": args.central,
                         "jobs": args.jobs})
    elif cmd == "split":
        resp = _request(args, "/v1/split",
                        {"ring": ring, "poly": args.poly, "pi": args.pi,
                         "seed": args.seed, "verify": args.verify})
    elif cmd == "bench":
        degrees = [int(d) for d in args.degrees.split(",") if d]
        resp = _request(args, "/v1/bench",
                        {"ring": ring, "op": args.op, "degrees": degrees,
                         "trials": args.trials, "seed": args.seed,
                         "jobs": args.jobs, "algorithm": args.algorithm})
    else:  # pragma: no cover
        raise SystemExit(f"unknown command {cmd}")
    return _emit(args, resp)


if __name__ == "__main__":
    sys.exit(main())
