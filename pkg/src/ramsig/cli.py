"""Command-line frontend for sequence generation and spectral analysis.

Verbs:
    gen    write an arithmetical series (one value per line)
    rft    Ramanujan-Fourier transform of a series file
    psd    Welch power spectral density of a series file
    fit    log-log power-law slope of a series file's PSD
    table  exact values of the arithmetic functions
    acf    autocorrelation of b(n) against the pair-correlation model

Output is TSV with a '#'-prefixed comment header that echoes the
resolved configuration, so runs are self-describing and byte-for-byte
reproducible.  Floats are printed with 17 significant digits and
round-trip exactly.  Exit codes: 0 success, 1 usage error,
2 computation or I/O error; every failure writes one diagnostic line
to stderr.
"""

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import sequences, spectra, transforms
from .arith import (
    build_sieve,
    mangoldt,
    mobius,
    ramanujan_sum_period,
    sigma,
    totient,
    totient2,
)

GEN_KINDS = ("mobius", "psi_error", "b", "b_error", "sigma_ratio", "phi_ratio")
TABLE_FUNCTIONS = ("mobius", "totient", "totient2", "mangoldt", "sigma", "cq")
_WINDOW_NAMES = {"rect": "rectangular", "hann": "hann"}


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


@dataclass(frozen=True)
class SeriesFile:
    """A parsed input series plus where and how it was read."""

    path: str
    format: str
    values: np.ndarray


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _emit(out_path, command, config, columns, rows):
    lines = [f"# ramsig {command}"]
    for key, value in config.items():
        lines.append(f"# {key} = {value}")
    column_names = "\t".join(columns)
    lines.append(f"# columns = {column_names}")
    for row in rows:
        if isinstance(row, tuple):
            lines.append("\t".join(_fmt(v) for v in row))
        else:
            lines.append(_fmt(row))
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(text)


def _parse_float(token):
    try:
        return float(token)
    except ValueError:
        return None


def load_series_file(path, fmt=None):
    """Read a series file: plain (one value per line) or CSV.

    Blank lines and '#' comments are skipped.  CSV rows contribute
    their last numeric column; a leading non-numeric row is treated as
    a header.  Any other non-numeric content is an error reported with
    its line number.
    """
    if fmt is None:
        fmt = "csv" if str(path).lower().endswith(".csv") else "plain"
    if fmt not in ("plain", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    values = []
    first_content_row = True
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            if fmt == "plain":
                value = _parse_float(text)
                if value is None:
                    raise ValueError(f"{path}:{lineno}: not a number: {text!r}")
                values.append(value)
            else:
                fields = [f.strip() for f in text.split(",")]
                numeric = [v for v in (_parse_float(f) for f in fields) if v is not None]
                if not numeric:
                    if first_content_row:
                        first_content_row = False
                        continue
                    raise ValueError(f"{path}:{lineno}: no numeric column: {text!r}")
                values.append(numeric[-1])
            first_content_row = False
    if not values:
        raise ValueError(f"{path}: no samples found")
    arr = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{path}: non-finite sample in input")
    return SeriesFile(path=str(path), format=fmt, values=arr)


def _sieve_for(needed, flag_limit):
    """One sieve per invocation, at the largest size any step needs."""
    if flag_limit is not None and flag_limit < needed:
        raise ValueError(f"--limit {flag_limit} is below the required {needed}")
    return build_sieve(max(needed, flag_limit or 0, 2))


def _parse_band(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"band must be fmin:fmax, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"band must be numeric, got {text!r}") from None
    return lo, hi


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must be like 1..100, got {text!r}")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"range must be integral, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise ValueError(f"need 1 <= lo <= hi in range, got {text!r}")
    return lo_i, hi_i


def _cmd_gen(args):
    sieve = _sieve_for(args.t, args.limit)
    generators = {
        "mobius": lambda: sequences.gen_mobius_summatory(args.t, sieve).values,
        "psi_error": lambda: sequences.gen_psi_error(args.t, sieve).values,
        "b": lambda: sequences.gen_b(args.t, sieve),
        "b_error": lambda: sequences.gen_b_error(args.t, sieve).values,
        "sigma_ratio": lambda: sequences.gen_sigma_ratio(args.t, sieve),
        "phi_ratio": lambda: sequences.gen_phi_ratio(args.t, sieve),
    }
    values = generators[args.kind]()
    config = {"kind": args.kind, "t": args.t, "limit": sieve.limit}
    _emit(args.out, "gen", config, ("value",), [float(v) for v in values])
    return 0


def _cmd_rft(args):
    series = load_series_file(args.input, args.format)
    t = len(series.values)
    q_cap = max(1, math.isqrt(t))
    q_max = args.q_max if args.q_max is not None else q_cap
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got {q_max}")
    if q_max > q_cap and not args.force:
        raise ValueError(
            f"q_max={q_max} exceeds sqrt(t)={q_cap}; pass --force to override"
        )
    sieve = _sieve_for(q_max, args.limit)
    spectrum = transforms.rft_forward(series.values, q_max, sieve)
    config = {
        "input": series.path,
        "format": series.format,
        "t": t,
        "q_max": q_max,
        "limit": sieve.limit,
    }
    rows = [(q, float(spectrum.coefficients[q - 1])) for q in range(1, q_max + 1)]
    _emit(args.out, "rft", config, ("q", "x_q"), rows)
    return 0


def _psd_of(args, series):
    segment_length = spectra.segment_length_for(len(series.values), args.segments)
    window = _WINDOW_NAMES[args.window]
    return spectra.psd(series.values, segment_length, window=window), segment_length


def _cmd_psd(args):
    series = load_series_file(args.input, args.format)
    estimate, segment_length = _psd_of(args, series)
    config = {
        "input": series.path,
        "format": series.format,
        "t": len(series.values),
        "segments": args.segments,
        "segment_length": segment_length,
        "window": estimate.window,
    }
    rows = list(zip(estimate.frequencies.tolist(), estimate.power.tolist()))
    _emit(args.out, "psd", config, ("f", "power"), rows)
    return 0


def _cmd_fit(args):
    series = load_series_file(args.input, args.format)
    estimate, segment_length = _psd_of(args, series)
    f_min, f_max = args.band if args.band else (None, None)
    fit = spectra.fit_power_law(estimate, f_min, f_max)
    config = {
        "input": series.path,
        "format": series.format,
        "t": len(series.values),
        "segments": args.segments,
        "segment_length": segment_length,
        "window": estimate.window,
    }
    rows = [
        (
            fit.slope,
            fit.intercept,
            fit.rms_residual,
            fit.f_min,
            fit.f_max,
            fit.point_count,
        )
    ]
    columns = ("slope", "intercept", "rms_residual", "f_min", "f_max", "point_count")
    _emit(args.out, "fit", config, columns, rows)
    return 0


def _cmd_table(args):
    if args.function == "cq":
        if args.q is None:
            raise ValueError("table cq requires --q")
        sieve = _sieve_for(args.q, args.limit)
        values = [int(v) for v in ramanujan_sum_period(args.q, sieve)]
        config = {"function": "cq", "q": args.q, "limit": sieve.limit}
        _emit(args.out, "table", config, ("c_q(n)",), values)
        return 0
    if args.range is None:
        raise ValueError(f"table {args.function} requires a range like 1..100")
    lo, hi = _parse_range(args.range)
    sieve = _sieve_for(hi, args.limit)
    functions = {
        "mobius": mobius,
        "totient": totient,
        "totient2": totient2,
        "mangoldt": mangoldt,
        "sigma": sigma,
    }
    func = functions[args.function]
    values = [func(n, sieve) for n in range(lo, hi + 1)]
    config = {"function": args.function, "range": f"{lo}..{hi}", "limit": sieve.limit}
    _emit(args.out, "table", config, (args.function,), values)
    return 0


def _cmd_acf(args):
    sieve = _sieve_for(args.n + args.h_max, args.limit)
    correlation = sequences.pair_correlation(args.h_max, args.n, args.parity, sieve)
    config = {
        "h_max": args.h_max,
        "n": args.n,
        "parity": args.parity,
        "limit": sieve.limit,
        "twin_prime_constant": _fmt(correlation.twin_prime_constant),
    }
    rows = [
        (int(h), float(e), float(m))
        for h, e, m in zip(
            correlation.lags, correlation.empirical, correlation.model
        )
    ]
    _emit(args.out, "acf", config, ("h", "empirical", "model"), rows)
    return 0


def build_parser():
    parser = _Parser(
        prog="ramsig",
        description="Ramanujan-sum signal processing: generators, transforms, spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p, with_input=False):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--limit", type=int, help="sieve limit override")
        if with_input:
            p.add_argument(
                "--format", choices=("plain", "csv"), help="input format (default: by extension)"
            )

    p_gen = sub.add_parser("gen", help="generate an arithmetical series")
    p_gen.add_argument("kind", choices=GEN_KINDS)
    p_gen.add_argument("t", type=int, help="number of samples T")
    add_common(p_gen)
    p_gen.set_defaults(func=_cmd_gen)

    p_rft = sub.add_parser("rft", help="Ramanujan-Fourier transform of a file")
    p_rft.add_argument("input")
    p_rft.add_argument("--q-max", type=int, dest="q_max")
    p_rft.add_argument("--force", action="store_true", help="allow q_max > sqrt(t)")
    add_common(p_rft, with_input=True)
    p_rft.set_defaults(func=_cmd_rft)

    p_psd = sub.add_parser("psd", help="Welch PSD of a file")
    p_psd.add_argument("input")
    p_psd.add_argument("--segments", type=int, default=8)
    p_psd.add_argument("--window", choices=("rect", "hann"), default="hann")
    add_common(p_psd, with_input=True)
    p_psd.set_defaults(func=_cmd_psd)

    p_fit = sub.add_parser("fit", help="power-law slope of a file's PSD")
    p_fit.add_argument("input")
    p_fit.add_argument("--segments", type=int, default=8)
    p_fit.add_argument("--window", choices=("rect", "hann"), default="hann")
    p_fit.add_argument("--band", type=_parse_band, help="fit band as fmin:fmax")
    add_common(p_fit, with_input=True)
    p_fit.set_defaults(func=_cmd_fit)

    p_table = sub.add_parser("table", help="exact arithmetic function values")
    p_table.add_argument("function", choices=TABLE_FUNCTIONS)
    p_table.add_argument("range", nargs="?", help="index range like 1..100")
    p_table.add_argument("--q", type=int, help="order q for the cq table")
    add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_acf = sub.add_parser("acf", help="b(n) autocorrelation vs the model")
    p_acf.add_argument("--h-max", type=int, required=True, dest="h_max")
    p_acf.add_argument("--n", type=int, required=True)
    p_acf.add_argument(
        "--parity", choices=sequences.PARITY_CONVENTIONS, default="paper"
    )
    add_common(p_acf)
    p_acf.set_defaults(func=_cmd_acf)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"ramsig: usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"ramsig: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
