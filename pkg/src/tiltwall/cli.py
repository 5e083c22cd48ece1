"""Command line front end.

Usage examples::

    tiltwall charge --kind zst --line-bundle 1 --s 1/6 --t 1/2
    tiltwall slope --kind nu --class '{"r":"1","c":"1","d2":"1/2","d3":"1/6"}' --alpha 1
    tiltwall walls enumerate --class '{"r":"1","c":"0","d2":"-1","d3":"1"}' \
        --beta-lo -2 --beta-hi -1/2 --t-lo 1/100 --t-hi 3
    tiltwall verify

Exit codes: 0 success, 2 precondition error, 3 parse error, 4 verify failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import acceptance, charges, inequalities, polycharge, scenarios, walls
from . import serialize as ser
from .errors import ParseError, TiltwallError
from .numlattice import P3, QUADRIC, VarietyModel, hypersurface, is_lattice_point, line_bundle
from .rational import format_rational as fmt
from .rational import parse_rational, rational_sqrt, to_decimal_string

EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_VERIFY = 4


class IrrationalAlpha(TiltwallError):
    code = "irrational-alpha"


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a value, not an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise ParseError(message)


def _rational(text):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(exc.detail) from None


def parse_model(text: str) -> VarietyModel:
    if text == "p3":
        return P3
    if text == "quadric":
        return QUADRIC
    kind, _, rest = text.partition(":")
    try:
        if kind == "hypersurface" and rest:
            return hypersurface(int(rest))
        if kind == "custom" and rest:
            d, lam2, lam3 = (int(x) for x in rest.split(","))
            return VarietyModel(text, d, lam2, lam3)
    except ValueError:
        raise ParseError(f"malformed model {text!r}") from None
    return ser.load_model_file(text)


def _add_model(p):
    p.add_argument("--model", default="p3", help="p3 | quadric | hypersurface:D | custom:d,lam2,lam3 | name on TILTWALL_MODEL_PATH")


def _add_class(p, suffix="", required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument(f"--class{suffix}", dest=f"cls{suffix}", help="NumClass JSON")
    g.add_argument(f"--line-bundle{suffix}", dest=f"lb{suffix}", type=_rational, help="use ch(O(k))")


def _add_ample(p, beta=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--alpha", type=_rational)
    g.add_argument("--t-squared", dest="t_squared", type=_rational, help="t = alpha^2")
    if beta:
        p.add_argument("--beta", type=_rational, default=0)


def _class(args, suffix=""):
    raw = getattr(args, f"cls{suffix}", None)
    if raw is not None:
        return ser.numclass_from_json(raw)
    return line_bundle(getattr(args, f"lb{suffix}"))


def _need_ample(args):
    if args.alpha is None and args.t_squared is None:
        raise ParseError("one of --alpha or --t-squared is required")


def _alpha(args):
    """alpha itself, for quantities with odd powers of alpha."""
    _need_ample(args)
    if args.alpha is not None:
        return args.alpha
    root = rational_sqrt(args.t_squared)
    if root is None:
        raise IrrationalAlpha(f"t = {args.t_squared} is not a rational square; this quantity needs alpha itself")
    return root


def _ample_kw(args):
    _need_ample(args)
    return {"t": args.t_squared} if args.alpha is None else {"alpha": args.alpha}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tiltwall", description="Exact tilt-stability numerics on Picard rank one threefolds")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("charge", help="central charges")
    p.add_argument("--kind", required=True, choices=["z", "zbar", "zst", "zp", "zb", "zinf"])
    _add_class(p)
    _add_ample(p)
    _add_model(p)
    p.add_argument("--s", type=_rational)
    p.add_argument("--t", type=_rational)

    p = sub.add_parser("slope", help="slope functions")
    p.add_argument("--kind", required=True, choices=["mu", "nu", "muhat", "minch1"])
    _add_class(p, required=False)
    _add_ample(p)
    _add_model(p)

    p = sub.add_parser("poly-compare", help="large volume phase order of two polynomial charges")
    p.add_argument("--kind", default="zinf", choices=["zinf", "zp", "zb"])
    p.add_argument("--p", help="PolyCharge JSON (instead of a class)")
    p.add_argument("--q", help="PolyCharge JSON (instead of a class)")
    _add_class(p, required=False)
    _add_class(p, "2", required=False)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--shift2", type=int, default=0)
    _add_ample(p)
    _add_model(p)

    p = sub.add_parser("check", help="Bogomolov-Gieseker type checks")
    p.add_argument("--kind", required=True, help="bg:a,b | strong | con14 | identity74 | discriminants | smin | lattice")
    _add_class(p, required=False)
    _add_ample(p)
    _add_model(p)

    p = sub.add_parser("walls", help="numerical walls in (beta, t = alpha^2)")
    p.add_argument("action", choices=["enumerate", "curve", "sample", "intersect"])
    _add_class(p, required=False)
    _add_class(p, "2", required=False)
    p.add_argument("--conic", help="WallConic JSON (instead of two classes)")
    for flag in ("--beta-lo", "--beta-hi", "--t-lo", "--t-hi"):
        p.add_argument(flag, type=_rational)
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--precision", type=int, default=12)
    _add_model(p)

    p = sub.add_parser("region", help="explicit stability regions")
    p.add_argument("which", choices=["p3", "p3-lemma", "quadric", "p3-intro"])
    p.add_argument("--s", type=_rational)
    p.add_argument("--t", type=_rational)
    _add_ample(p, beta=False)

    p = sub.add_parser("scenario", help="worked examples")
    p.add_argument("which", choices=["divisor", "curve", "castelnuovo"])
    p.add_argument("--scenario", help="scenario JSON")
    p.add_argument("--r", type=_rational)
    p.add_argument("--m", type=int)
    p.add_argument("--s", type=_rational)
    p.add_argument("--D", dest="D", type=int)
    p.add_argument("--d", dest="dcurve", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--D-lo", dest="D_lo", type=int)
    p.add_argument("--D-hi", dest="D_hi", type=int)
    p.add_argument("--threads", type=int, default=1)
    _add_ample(p, beta=False)
    _add_model(p)

    sub.add_parser("verify", help="run the acceptance suite")
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ParseError("missing required flags: " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_charge(args, out):
    v = _class(args)
    model = parse_model(args.model)
    if args.kind == "zst":
        _require(args, "s", "t")
        return ser.complex_to_json(charges.z_st(v, args.s, args.t, model))
    alpha = _alpha(args)
    fn = {
        "z": charges.z,
        "zbar": charges.z_bar,
        "zp": polycharge.zp,
        "zb": polycharge.zb_poly,
        "zinf": polycharge.z_inf,
    }[args.kind]
    val = fn(v, alpha, args.beta, model)
    if isinstance(val, polycharge.PolyCharge):
        return ser.polycharge_to_json(val)
    return ser.complex_to_json(val)


def cmd_slope(args, out):
    model = parse_model(args.model)
    alpha = _alpha(args)
    if args.kind == "minch1":
        return {"value": fmt(charges.minimal_ch1(alpha, args.beta, model))}
    if args.cls is None and args.lb is None:
        raise ParseError("a class is required (--class or --line-bundle)")
    fn = {"mu": charges.mu, "nu": charges.nu, "muhat": charges.mu_hat}[args.kind]
    return ser.slope_to_json(fn(_class(args), alpha, args.beta, model))


def cmd_poly_compare(args, out):
    kinds = {"zinf": polycharge.z_inf, "zp": polycharge.zp, "zb": polycharge.zb_poly}

    def side(raw, suffix, shift):
        if raw is not None:
            return ser.polycharge_from_json(raw)
        if getattr(args, f"cls{suffix}") is None and getattr(args, f"lb{suffix}") is None:
            raise ParseError(f"need --class{suffix}/--line-bundle{suffix} or a PolyCharge")
        model = parse_model(args.model)
        return kinds[args.kind](_class(args, suffix).shift(shift), _alpha(args), args.beta, model)

    p = side(args.p, "", args.shift)
    q = side(args.q, "2", args.shift2)
    return {"ordering": polycharge.compare_limit_phase(p, q).value}


def cmd_check(args, out):
    model = parse_model(args.model)
    kind = args.kind
    if kind == "smin":
        return {"value": fmt(inequalities.support_smin(_alpha(args), model))}
    if args.cls is None and args.lb is None:
        raise ParseError("a class is required (--class or --line-bundle)")
    v = _class(args)
    if kind == "lattice":
        return {"holds": is_lattice_point(v, model)}
    kw = dict(beta=args.beta, model=model, **_ample_kw(args))
    if kind.startswith("bg:"):
        try:
            a, b = (parse_rational(x) for x in kind[3:].split(","))
        except (ValueError, ParseError):
            raise ParseError(f"malformed check kind {kind!r}; expected bg:a,b") from None
        holds, margin = inequalities.check_bg_general(v, a=a, b=b, **kw)
        return ser.verdict_to_json(holds, margin)
    if kind == "strong":
        margin = inequalities.strong_bg_margin(v, **kw)
        return ser.verdict_to_json(margin >= 0, margin)
    if kind == "con14":
        margin = inequalities.con14_margin(v, **kw)
        return ser.verdict_to_json(margin > 0, margin)
    if kind == "identity74":
        return {"holds": inequalities.identity_7_4(v, **kw)}
    if kind == "discriminants":
        return ser.discriminants_to_json(inequalities.discriminants(v, **kw))
    raise ParseError(f"unknown check kind {kind!r}")


def _conic(args):
    if args.conic is not None:
        return ser.conic_from_json(args.conic)
    if (args.cls is None and args.lb is None) or (args.cls2 is None and args.lb2 is None):
        raise ParseError("need two classes (--class/--line-bundle and --class2/--line-bundle2) or --conic")
    return walls.wall_curve(_class(args), _class(args, "2"))


def _window(args):
    _require(args, "beta_lo", "beta_hi", "t_lo", "t_hi")
    return walls.Window(args.beta_lo, args.beta_hi, args.t_lo, args.t_hi)


def cmd_walls(args, out):
    if args.action == "enumerate":
        if args.cls is None and args.lb is None:
            raise ParseError("a class is required (--class or --line-bundle)")
        model = parse_model(args.model)
        win = _window(args)
        found = walls.enumerate_pseudo_walls(_class(args), win, args.max_rank, model, threads=args.threads)
        return {
            "metadata": {
                "max_rank": args.max_rank,
                "model": ser.model_to_json(model),
                "window": {k: fmt(getattr(win, k)) for k in ("beta_lo", "beta_hi", "t_lo", "t_hi")},
                "kind": "pseudo-walls",
            },
            "walls": ser.walls_to_json(found),
        }
    wc = _conic(args)
    if args.action == "curve":
        return ser.conic_to_json(wc)
    if args.action == "intersect":
        win = _window(args)
        meets, witness = walls._intersection(wc, win)
        res = {"holds": meets}
        if witness is not None:
            res["witness"] = {"beta": fmt(witness[0]), "t": fmt(witness[1])}
        return res
    _require(args, "beta_lo", "beta_hi")
    pts = walls.sample_conic(wc, args.beta_lo, args.beta_hi, args.samples)
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["beta", "t"])
        for b, t in pts:
            writer.writerow([to_decimal_string(b, args.precision), to_decimal_string(t, args.precision)])
        return None
    return [{"beta": fmt(b), "t": fmt(t)} for b, t in pts]


def cmd_region(args, out):
    if args.which in ("p3", "p3-lemma"):
        _require(args, "s", "t")
        fn = walls.region_p3_theorem if args.which == "p3" else walls.region_p3_lemma
        return {"holds": fn(args.s, args.t)}
    fn = walls.region_quadric if args.which == "quadric" else walls.region_p3_intro
    return {"holds": fn(**_ample_kw(args))}


def _scenario_args(args):
    if args.scenario is None:
        return args
    data = json.loads(args.scenario) if args.scenario.strip().startswith("{") else None
    if not isinstance(data, dict):
        raise ParseError("--scenario must be a JSON object")
    ns = argparse.Namespace(**vars(args))
    for key, val in data.items():
        if key in ("r", "s", "alpha", "t_squared"):
            setattr(ns, key, parse_rational(val))
        elif key in ("m", "D", "g", "D_lo", "D_hi", "d"):
            if isinstance(val, bool) or not isinstance(val, int):
                raise ParseError(f"scenario field {key!r} must be an integer, got {val!r}")
            setattr(ns, "dcurve" if key == "d" else key, val)
        elif key == "model":
            setattr(ns, "model", val if isinstance(val, str) else None)
            if not isinstance(val, str):
                ns.model_obj = ser.model_from_json(val)
        else:
            raise ParseError(f"unknown scenario field {key!r}")
    return ns


def cmd_scenario(args, out):
    args = _scenario_args(args)
    if args.which == "divisor":
        _require(args, "r", "m", "s")
        model = getattr(args, "model_obj", None) or parse_model(args.model)
        sc = scenarios.DivisorScenario(args.r, args.m, args.s, model, **_ample_kw(args))
        rep = scenarios.prop61_verify(sc)
        return {
            "bog1": fmt(scenarios.bog1_bound(sc)),
            "bog2": fmt(scenarios.bog2_bound(sc)),
            "rez_lower_bound": fmt(scenarios.rez_lower_bound(sc)),
            "holds": rep.holds,
            "active_case": rep.active_case,
            "margin": fmt(rep.margin),
            "class": ser.numclass_to_json(rep.pushforward),
        }
    if args.which == "curve":
        _require(args, "D", "dcurve", "g")
        cs = scenarios.CurveScenario(args.D, args.dcurve, args.g)
        v = scenarios.curve_ideal_class(cs)
        margin = inequalities.strong_bg_margin(v, beta=0, model=cs.model, t=cs.t_scale_sq())
        return {
            "class": ser.numclass_to_json(v),
            "ch3_curve": fmt(cs.ch3_curve()),
            "t_scale_sq": fmt(cs.t_scale_sq()),
            "strong_margin": fmt(margin),
        }
    _require(args, "D_lo", "D_hi")
    rows = scenarios.castelnuovo_verify(args.D_lo, args.D_hi, threads=args.threads)
    return [
        {
            "D": row.D,
            "d": row.d,
            "castelnuovo": fmt(row.castelnuovo),
            "bg_bound": fmt(row.bg_bound),
            "holds": row.holds,
            "t_scale_sq": fmt(row.t_scale_sq),
            "margin": fmt(row.margin),
        }
        for row in rows
    ]


COMMANDS = {
    "charge": cmd_charge,
    "slope": cmd_slope,
    "poly-compare": cmd_poly_compare,
    "check": cmd_check,
    "walls": cmd_walls,
    "region": cmd_region,
    "scenario": cmd_scenario,
}


def _fail(err, code, stderr):
    print(json.dumps({"error": err.code, "detail": err.detail}), file=stderr)
    return code


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            results = acceptance.run_all()
            for res in results:
                print(res.line(), file=stdout)
            return 0 if all(r.passed for r in results) else EXIT_VERIFY
        result = COMMANDS[args.command](args, stdout)
    except ParseError as err:
        return _fail(err, EXIT_PARSE, stderr)
    except TiltwallError as err:
        return _fail(err, EXIT_PRECONDITION, stderr)
    except json.JSONDecodeError as err:
        return _fail(ParseError(str(err)), EXIT_PARSE, stderr)
    if result is not None:
        print(json.dumps(result), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
