"""Command-line front end.

Subcommands: expand-browkin, expand-schneider, digits, bound, head, verify,
sweep.  Rationals cross the boundary as strings "num" or "num/den" (put
negative values after --).  Exit codes: 0 success, 1 verification failure,
2 usage error.  Every computed expansion is re-verified against the exact
reconstruction oracle before anything is printed.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from math import gcd

from .browkin import browkin_bound, browkin_convergents, browkin_expand, cf_evaluate, theta_sequence
from .digits import digit_period, fractional_part, padic_digits
from .exactarith import is_odd_prime, vp
from .schneider import head_analysis, schneider_convergents, schneider_evaluate, schneider_expand

_RATIONAL_RE = re.compile(r"^-?\d+(?:/(\d+))?$")

SWEEP_COLUMNS = [
    "p",
    "a",
    "b",
    "browkin_len",
    "bound_N",
    "beta0_abs",
    "beta1_abs",
    "slack",
    "schneider_steps_to_stationary",
]


def parse_rational(text: str) -> Fraction:
    """Parse 'num' or 'num/den' into a normalized fraction."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"malformed rational {text!r}")
    if match.group(1) is not None and int(match.group(1)) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def _rat_str(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _f6(value: float) -> float:
    # floats are advisory; pin them to 6 significant digits for stable output
    return float(f"{value:.6g}")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _fail(message: str) -> int:
    print(f"FAIL: {message}", file=sys.stderr)
    return 1


def _expansion_betas(expansion) -> tuple[int, int]:
    beta1 = abs(expansion.steps[1].beta) if len(expansion.steps) > 1 else 0
    return expansion.beta0, beta1


def _cmd_expand_browkin(args: argparse.Namespace) -> int:
    r = args.rational
    expansion = browkin_expand(r, args.prime, args.max_steps)
    reconstructed = cf_evaluate(expansion.quotients) == r
    if not reconstructed:
        return _fail(f"browkin reconstruction mismatch for {_rat_str(r)}")
    beta0, beta1 = _expansion_betas(expansion)
    report = browkin_bound(beta0, beta1, args.prime)
    if args.json:
        _emit_json(
            {
                "p": args.prime,
                "input": _rat_str(r),
                "quotients": [
                    {"num": a.numerator, "den": a.denominator}
                    for a in expansion.quotients
                ],
                "k": expansion.k_trace,
                "beta": expansion.beta_trace,
                "bound_N": report.n_bound,
                "reconstructed": reconstructed,
            }
        )
    else:
        print(f"input: {_rat_str(r)} (p={args.prime})")
        print("quotients: " + ", ".join(_rat_str(a) for a in expansion.quotients))
        print("k: " + ", ".join(str(k) for k in expansion.k_trace))
        print("beta: " + ", ".join(str(b) for b in expansion.beta_trace))
        print(f"bound N: {report.n_bound} (length {len(expansion.steps)} <= N+1)")
        print("reconstructed: true")
    return 0


def _cmd_expand_schneider(args: argparse.Namespace) -> int:
    a, b = args.rational.numerator, args.rational.denominator
    expansion = schneider_expand(a, b, args.prime, args.max_steps)
    value = schneider_evaluate(expansion.head, expansion.tail_value, args.prime)
    if value != args.rational:
        return _fail(f"schneider reconstruction mismatch for {_rat_str(args.rational)}")
    if args.json:
        _emit_json(
            {
                "p": args.prime,
                "a": a,
                "b": b,
                "head": [{"b": d, "alpha": e} for d, e in expansion.head],
                "stationary_from": expansion.stationary_from,
                "finite_end": expansion.finite_end,
            }
        )
    else:
        print(f"input: {_rat_str(args.rational)} (p={args.prime})")
        print("head: " + ", ".join(f"({d},{e})" for d, e in expansion.head))
        print("y trace: " + ", ".join(str(y) for y in expansion.y_trace))
        if expansion.stationary_from is not None:
            print(
                f"stationary from index {expansion.stationary_from}"
                f" (tail digit {args.prime - 1}, exponent 1, tail value -1)"
            )
        else:
            print(f"finite end with tail value {_rat_str(expansion.tail_value)}")
        print("reconstructed: true")
    return 0


def _digit_terms(p: int, start: int, digits) -> str:
    terms = []
    for offset, digit in enumerate(digits):
        if digit == 0:
            continue
        exponent = start + offset
        if exponent == 0:
            mag = str(abs(digit))
        elif exponent == 1:
            mag = f"{abs(digit)}*{p}"
        else:
            mag = f"{abs(digit)}*{p}^{exponent}"
        sign = "-" if digit < 0 else "+"
        if not terms and digit > 0:
            terms.append(mag)
        else:
            terms.append(f"{sign}{mag}")
    return " ".join(terms) if terms else "0"


def _cmd_digits(args: argparse.Namespace) -> int:
    r = args.rational
    window = padic_digits(r, args.prime, args.count)
    prefix = window.prefix_value()
    if r != prefix:  # equality means the window captured r exactly
        drift = vp(r - prefix, args.prime)
        if drift < window.start_exponent + window.count:
            return _fail(f"digit truncation identity violated for {_rat_str(r)}")
    if args.json:
        start, preperiod, period = digit_period(r, args.prime)
        _emit_json(
            {
                "p": args.prime,
                "input": _rat_str(r),
                "start_exponent": window.start_exponent,
                "digits": list(window.digits),
                "count": window.count,
                "preperiod_len": len(preperiod),
                "period": list(period),
            }
        )
    else:
        print(_digit_terms(args.prime, window.start_exponent, window.digits))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.rational is not None:
        expansion = browkin_expand(args.rational, args.prime)
        beta0, beta1 = _expansion_betas(expansion)
    else:
        beta0, beta1 = args.beta0, args.beta1
    report = browkin_bound(beta0, beta1, args.prime)
    if args.json:
        _emit_json(
            {
                "p": args.prime,
                "beta0_abs": beta0,
                "beta1_abs": beta1,
                "lambda1_float": _f6(report.lambda1_float),
                "lambda2_float": _f6(report.lambda2_float),
                "n_bound": report.n_bound,
                "exact_certificate": report.exact_certificate,
            }
        )
    else:
        print(f"beta magnitudes: {beta0}, {beta1} (p={args.prime})")
        print(f"lambda1 = {report.lambda1} (~{_f6(report.lambda1_float)})")
        print(f"lambda2 = {report.lambda2} (~{_f6(report.lambda2_float)})")
        print(f"N = {report.n_bound}")
        print(f"exact certificate: {'true' if report.exact_certificate else 'false'}")
    return 0


def _cmd_head(args: argparse.Namespace) -> int:
    a, b = args.rational.numerator, args.rational.denominator
    digit, exponent = args.digit, args.exponent
    if digit is None or exponent is None:
        expansion = schneider_expand(a, b, args.prime)
        if not expansion.steps:
            raise ValueError("input has no head step to analyze")
        first = expansion.steps[0]
        digit = first.b if digit is None else digit
        exponent = first.alpha if exponent is None else exponent
    report = head_analysis(a, b, digit, exponent, args.prime)
    if args.json:
        _emit_json(
            {
                "T1_float": _f6(report.t1_float),
                "T2_float": _f6(report.t2_float),
                "theta_float": _f6(report.theta_float),
                "exact_exponent": report.exact_exponent,
                "head_len": report.head_len,
                "exact_identity": report.exact_identity,
            }
        )
    else:
        print(f"head pair: ({digit},{exponent}) (p={args.prime})")
        print(f"T1 ~ {_f6(report.t1_float)}, T2 ~ {_f6(report.t2_float)}")
        print(f"theta = {report.theta} (~{_f6(report.theta_float)})")
        if report.exact_identity:
            print(f"exact exponent: {report.exact_exponent}")
        print(f"head length: {report.head_len}")
        print(f"exact identity: {'true' if report.exact_identity else 'false'}")
    return 0


def _verify_checks(r: Fraction, p: int):
    """Yield (name, ok) pairs for the full oracle battery on one input."""
    expansion = browkin_expand(r, p)
    yield "browkin reconstruction", cf_evaluate(expansion.quotients) == r
    beta0, beta1 = _expansion_betas(expansion)
    report = browkin_bound(beta0, beta1, p)
    yield "browkin length bound", len(expansion.steps) <= report.n_bound + 1
    thetas = theta_sequence(beta0, beta1, p, max(2, len(expansion.steps)))
    yield "majorant", all(
        abs(s.beta) <= thetas[i] for i, s in enumerate(expansion.steps)
    )
    convergents = browkin_convergents(expansion)
    det_ok = True
    prev = None
    for n, conv in enumerate(convergents):
        if prev is not None:
            det_ok &= conv.pn * prev.qn - prev.pn * conv.qn == (-1) ** (n + 1)
        prev = conv
    yield "determinant identity", det_ok and convergents[-1].value == r
    window = padic_digits(r, p, 12)
    yield "digit truncation identity", all(
        vp(r - window.prefix_value(i), p) >= window.start_exponent + i
        for i in range(1, 13)
        if r != window.prefix_value(i)
    )
    a, b = r.numerator, r.denominator
    if a % p != 0 and b % p != 0:
        sexp = schneider_expand(a, b, p)
        yield "schneider reconstruction", schneider_evaluate(
            sexp.head, sexp.tail_value, p
        ) == r
        if sexp.steps:
            laws_ok = True
            total_alpha = 0
            for m, (matrix, value) in enumerate(schneider_convergents(sexp)):
                total_alpha += sexp.steps[m].alpha
                laws_ok &= matrix.det() == (-1) ** (m + 1) * p**total_alpha
                laws_ok &= vp(r - value, p) == total_alpha
            yield "schneider matrix laws", laws_ok


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for name, ok in _verify_checks(args.rational, args.prime):
        if ok:
            print(f"ok: {name}")
        else:
            print(f"FAIL: {name}")
            failures += 1
    return 1 if failures else 0


def _sweep_rows(primes, max_num, max_den):
    for p in primes:
        for b in range(1, max_den + 1):
            for a in range(-max_num, max_num + 1):
                if a == 0 or gcd(abs(a), b) != 1:
                    continue
                yield p, a, b


def _cmd_sweep(args: argparse.Namespace) -> int:
    out = sys.stdout
    close_out = False
    if args.out is not None:
        try:
            out = open(args.out, "w", newline="")
        except OSError as exc:
            return _fail(f"cannot open {args.out}: {exc}")
        close_out = True
    try:
        writer = csv.writer(out)
        writer.writerow(SWEEP_COLUMNS)
        max_len = 0
        min_slack = None
        max_stationary = None
        for p, a, b in _sweep_rows(args.primes, args.max_num, args.max_den):
            r = Fraction(a, b)
            expansion = browkin_expand(r, p)
            if cf_evaluate(expansion.quotients) != r:
                return _fail(f"browkin reconstruction mismatch at p={p}, {a}/{b}")
            beta0, beta1 = _expansion_betas(expansion)
            report = browkin_bound(beta0, beta1, p)
            browkin_len = len(expansion.steps)
            slack = report.n_bound + 1 - browkin_len
            if slack < 0:
                return _fail(f"length bound violated at p={p}, {a}/{b} (slack {slack})")
            stationary = ""
            if a % p != 0 and b % p != 0:
                sexp = schneider_expand(a, b, p)
                if schneider_evaluate(sexp.head, sexp.tail_value, p) != r:
                    return _fail(f"schneider reconstruction mismatch at p={p}, {a}/{b}")
                if sexp.stationary_from is not None:
                    stationary = sexp.stationary_from
                    if max_stationary is None or stationary > max_stationary:
                        max_stationary = stationary
            writer.writerow([p, a, b, browkin_len, report.n_bound, beta0, beta1, slack, stationary])
            max_len = max(max_len, browkin_len)
            min_slack = slack if min_slack is None else min(min_slack, slack)
        print(
            f"sweep ok: max browkin_len {max_len}, min slack {min_slack},"
            f" max steps to stationarity {max_stationary}",
            file=sys.stderr,
        )
    finally:
        if close_out:
            out.close()
    return 0


def _add_prime_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-p", "--prime", type=int, required=True, help="odd prime base")


def _add_rational_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "rational", help="rational input, 'num' or 'num/den' (negatives after --)"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-cf",
        description="Exact Browkin and Schneider p-adic continued fractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eb = sub.add_parser("expand-browkin", help="Browkin expansion with length bound")
    _add_prime_option(eb)
    eb.add_argument("--max-steps", type=int, default=None)
    eb.add_argument("--json", action="store_true")
    _add_rational_argument(eb)

    es = sub.add_parser("expand-schneider", help="Schneider expansion to stationarity")
    _add_prime_option(es)
    es.add_argument("--max-steps", type=int, default=10_000)
    es.add_argument("--json", action="store_true")
    _add_rational_argument(es)

    dg = sub.add_parser("digits", help="symmetric base-p digits")
    _add_prime_option(dg)
    dg.add_argument("-n", "--count", type=int, required=True, help="number of digits")
    dg.add_argument("--json", action="store_true")
    _add_rational_argument(dg)

    bd = sub.add_parser("bound", help="certified expansion-length bound")
    _add_prime_option(bd)
    bd.add_argument("--beta0", type=int, default=None, help="|beta_0| (with --beta1)")
    bd.add_argument("--beta1", type=int, default=None, help="|beta_1| (with --beta0)")
    bd.add_argument("--json", action="store_true")
    bd.add_argument("rational", nargs="?", default=None)

    hd = sub.add_parser("head", help="constant-head length certificate")
    _add_prime_option(hd)
    hd.add_argument("--digit", type=int, default=None, help="head digit (default: from expansion)")
    hd.add_argument("--exponent", type=int, default=None, help="head exponent (default: from expansion)")
    hd.add_argument("--json", action="store_true")
    _add_rational_argument(hd)

    vf = sub.add_parser("verify", help="run the full oracle battery on one input")
    _add_prime_option(vf)
    _add_rational_argument(vf)

    sw = sub.add_parser("sweep", help="CSV bound-tightness sweep over coprime pairs")
    sw.add_argument("--primes", required=True, help="comma-separated odd primes")
    sw.add_argument("--max-num", type=int, required=True)
    sw.add_argument("--max-den", type=int, required=True)
    sw.add_argument("--out", default=None, help="CSV output path (default stdout)")
    return parser


_COMMANDS = {
    "expand-browkin": _cmd_expand_browkin,
    "expand-schneider": _cmd_expand_schneider,
    "digits": _cmd_digits,
    "bound": _cmd_bound,
    "head": _cmd_head,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command == "sweep":
        try:
            primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
        except ValueError:
            parser.error(f"malformed prime list {args.primes!r}")
        if not primes:
            parser.error("empty prime list")
        for p in primes:
            if not is_odd_prime(p):
                parser.error(f"p must be an odd prime >= 3, got {p}")
        if args.max_num < 1 or args.max_den < 1:
            parser.error("sweep ranges must be positive")
        args.primes = sorted(set(primes))
        return
    if not is_odd_prime(args.prime):
        parser.error(f"p must be an odd prime >= 3, got {args.prime}")
    if getattr(args, "rational", None) is not None:
        try:
            args.rational = parse_rational(args.rational)
        except ValueError as exc:
            parser.error(str(exc))
    if args.command == "bound":
        have_betas = args.beta0 is not None and args.beta1 is not None
        if args.rational is None and not have_betas:
            parser.error("bound needs a rational or both --beta0 and --beta1")
        if have_betas and (args.beta0 < 1 or args.beta1 < 0):
            parser.error("--beta0 must be >= 1 and --beta1 >= 0")
    if args.command == "digits" and args.count < 1:
        parser.error("count must be positive")
    rational = getattr(args, "rational", None)
    if rational is not None and rational == 0 and args.command != "digits":
        parser.error("input must be nonzero")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        parser.error(str(exc))
    except ArithmeticError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
