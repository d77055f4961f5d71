"""Command-line front end.

Subcommands:
  verify                      run the full invariant suite, emit a JSON report
  rep {validate|decompose}    diagnostics / block decomposition of a stored
                              representation
  point {check|factorize|involute}
                              membership, factorization coordinates, and the
                              real-structure involutions on stored points
  pw {coeffs|expand}          matrix-coefficient sections and exact expansion

All input and output is JSON.  Exit codes: 0 success, 1 mathematical
failure, 2 I/O or parse failure.  Reports are rendered with sorted keys and
a trailing newline, so identical configuration and inputs give byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .grassmann import GeneratorSet, GrassmannElement, element_from_json
from .harmonic import (
    ODD_COORDS,
    Section,
    expand,
    matrix_coefficients,
    reconstruct,
    section_from_json,
)
from .liealg import (
    LieSuperAlgebra,
    builtin_algebra,
    find_even_intertwiners,
    representation_from_json,
    validate_representation,
)
from .reps import (
    decompose_s11,
    decompose_su11,
    make_adjoint_su11,
    make_pi_m,
    make_V_m,
    random_direct_sum,
    scramble,
)
from .scalars import FloatScalar, GaussianRational
from .supergroup import (
    GL11Point,
    c11x_ring,
    defactorize,
    factorization_triple_ring,
    factorize,
    membership,
    point_from_json,
    rho_s11,
    s11_chart_ring,
    sigma_su,
    sl11_generic_ring,
    su11_chart_ring,
)
from .supermatrix import SuperMatrix, berezinian, supercommutator

GR = GaussianRational

GROUP_TAGS = {"sl11": "sl11", "su11": "su11", "su11-minus": "su11_minus"}


class InputError(Exception):
    """File or format problem; maps to exit code 2."""


class RunConfig:
    __slots__ = ("scalar", "tol", "weights", "seed", "out")

    def __init__(self, scalar: str = "exact", tol: Optional[float] = None,
                 weights: int = 10, seed: int = 0, out: Optional[str] = None):
        if scalar not in ("exact", "float"):
            raise ValueError("scalar mode must be exact or float")
        if scalar == "float" and tol is None:
            raise ValueError("float mode requires an explicit --tol")
        if scalar == "exact":
            tol = None
        if weights < 1:
            raise ValueError("--weights must be at least 1")
        self.scalar = scalar
        self.tol = tol
        self.weights = weights
        self.seed = seed
        self.out = out

    def to_json(self) -> dict:
        # the output path is deliberately left out so reports compare equal
        # no matter where they were written
        return {"scalar": self.scalar, "tol": self.tol,
                "weights": self.weights, "seed": self.seed}


def _one(config: RunConfig):
    if config.scalar == "float":
        return FloatScalar(1.0, 0.0, tol=config.tol)
    return GR(1)


# --- file plumbing ---------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror or exc))
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %s: %s" % (path, exc))


def _canonical_gens(group: str, decoded: GeneratorSet) -> Optional[GeneratorSet]:
    """The package-defined chart ring matching the file's generator names.

    Star images are not serialized, so symbolic points are re-attached to
    the ring that carries the group's constraints.  Returns None when the
    file uses its own generator names; star-free operations still work then.
    """
    if group == "sl11":
        candidates = [sl11_generic_ring()[0]]
    elif group in ("su11", "su11_minus"):
        candidates = [su11_chart_ring(group)[0]]
    else:
        candidates = [c11x_ring()[0], s11_chart_ring()[0]]
    for gens in candidates:
        if gens.signature() == decoded.signature():
            return gens
    return None


def _parse_point(obj, group: str) -> GL11Point:
    try:
        raw = point_from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc))
    gens = _canonical_gens(group, raw.a.gens)
    if gens is None:
        return raw
    return point_from_json(obj, gens)


def _parse_pair(obj) -> Tuple[GrassmannElement, GrassmannElement]:
    """An invertible 1|1 coordinate pair {w, eta} for the circle involution."""
    if not isinstance(obj, dict) or "w" not in obj or "eta" not in obj:
        raise InputError("expected an object with entries 'w' and 'eta'")
    try:
        w = element_from_json(obj["w"])
        eta = element_from_json(obj["eta"], w.gens)
    except ValueError as exc:
        raise InputError(str(exc))
    gens = _canonical_gens("s11", w.gens)
    if gens is not None:
        w = element_from_json(obj["w"], gens)
        eta = element_from_json(obj["eta"], gens)
    return w, eta


# --- verify checks ---------------------------------------------------------


def _check_structure_constants(config: RunConfig, corrupt: bool):
    if corrupt:
        try:
            LieSuperAlgebra(("C", "Z"), (0, 1),
                            {(1, 1): (-2, 0), (0, 1): (0, 1)})
        except ValueError as exc:
            return "fail", {"error": str(exc), "note": "fault injection hook"}
        return "fail", {"error": "corrupted bracket table was accepted"}
    for tag in ("s11", "su11"):
        builtin_algebra(tag)  # constructor re-validates the table
    su = builtin_algebra("su11")
    mats = [su.defining[name] for name in su.names]
    for i in range(len(mats)):
        for j in range(len(mats)):
            expected = None
            for k, c in enumerate(su.bracket(i, j)):
                term = c * mats[k]
                expected = term if expected is None else expected + term
            if supercommutator(mats[i], mats[j]) != expected:
                return "fail", {"error": "defining matrices disagree with the "
                                         "bracket table at (%d, %d)" % (i, j)}
    return "pass", {"tables": ["s11", "su11"],
                    "defining_matrices": "realize the su11 bracket table "
                                         "under the supercommutator"}


def _check_representation_identities(config: RunConfig, corrupt: bool):
    count = 0
    for m in range(1, config.weights + 1):
        for mm in (m, -m):
            reps = [
                make_V_m(mm, mode=config.scalar, tol=config.tol),
                make_pi_m(mm, "+", mode=config.scalar, tol=config.tol),
                make_pi_m(mm, "-", mode=config.scalar, tol=config.tol),
            ]
            for rep in reps:
                problems = validate_representation(rep)
                if problems:
                    return "fail", {"error": problems[0],
                                    "weight": mm}
                count += 1
    return "pass", {"weight_bound": config.weights, "representations": count}


def _check_intertwiners(config: RunConfig, corrupt: bool):
    pairs = 0
    for m in range(1, config.weights + 1):
        for mm in (m, -m):
            plus = make_pi_m(mm, "+", mode=config.scalar, tol=config.tol)
            minus = make_pi_m(mm, "-", mode=config.scalar, tol=config.tol)
            cross = find_even_intertwiners(plus, minus)
            if cross:
                return "fail", {"error": "unexpected intertwiner between "
                                         "opposite signs", "weight": mm}
            selfdim = len(find_even_intertwiners(plus, plus))
            if selfdim != 1:
                return "fail", {"error": "self-intertwiner space has "
                                         "dimension %d" % selfdim,
                                "weight": mm}
            pairs += 1
    return "pass", {"weight_bound": config.weights,
                    "cross_dimension": 0, "self_dimension": 1,
                    "weights_checked": 2 * config.weights}


def _check_decomposition_oracle(config: RunConfig, corrupt: bool):
    rng = random.Random(config.seed)
    trials = 0
    for algebra in ("s11", "su11"):
        decomp = decompose_s11 if algebra == "s11" else decompose_su11
        for _ in range(3):
            model = random_direct_sum(algebra, rng)
            want = decomp(model).labels()
            rep = scramble(model, rng)
            report = decomp(rep)
            if report.labels() != want:
                return "fail", {"error": "label multiset not recovered",
                                "algebra": algebra}
            if not report.verify(rep):
                return "fail", {"error": "change of basis fails to "
                                         "reproduce the block model",
                                "algebra": algebra}
            trials += 1
    return "pass", {"trials": trials, "max_blocks": 8, "mode": "exact",
                    "seed": config.seed}


def _check_involution_rho(config: RunConfig, corrupt: bool):
    gens, w, eta = c11x_ring()
    w1, eta1 = rho_s11(w, eta)
    w2, eta2 = rho_s11(w1, eta1)
    if w2 != w or eta2 != eta:
        return "fail", {"error": "applying the circle involution twice is "
                                 "not the identity on the generic point"}
    cgens, cw, ceta = s11_chart_ring()
    fw, feta = rho_s11(cw, ceta)
    if fw != cw or feta != ceta:
        return "fail", {"error": "the constrained chart point is not fixed"}
    if cw * cw.star() != cgens.one():
        return "fail", {"error": "w * star(w) != 1 on the constrained chart"}
    return "pass", {"involutive": "generic invertible 1|1 point",
                    "fixed_locus": "constrained chart point, with "
                                   "w * star(w) = 1"}


def _check_involution_sigma(config: RunConfig, corrupt: bool):
    gens, p = sl11_generic_ring()
    if sigma_su(sigma_su(p)) != p:
        return "fail", {"error": "applying sigma twice is not the identity "
                                 "on the generic unimodular point"}
    detail: Dict[str, object] = {"involutive": "generic unimodular point"}
    sgens, pts = su11_chart_ring("su11")
    q = pts[0]
    if sigma_su(q) != q:
        return "fail", {"error": "the su11 chart point is not sigma-fixed"}
    ok, diag = membership(q, "su11")
    if not ok:
        return "fail", {"error": "sigma-fixed point fails membership: "
                                 + diag}
    mgens, mpts = su11_chart_ring("su11_minus")
    qm = mpts[0]
    if sigma_su(qm) == qm:
        return "fail", {"error": "the isomer chart point is unexpectedly "
                                 "sigma-fixed"}
    if not membership(qm, "su11_minus")[0] or membership(qm, "su11")[0]:
        return "fail", {"error": "isomer membership relations mixed up"}
    detail["fixed_locus"] = "su11 chart point, satisfying the membership " \
                            "relations"
    detail["isomer_separation"] = "the su11-minus chart point is moved by " \
                                  "sigma and is not an su11 member"
    return "pass", detail


def _check_factorization(config: RunConfig, corrupt: bool):
    for group in ("su11", "su11_minus"):
        gens, pts = su11_chart_ring(group)
        p = pts[0]
        triple = factorize(p, group)
        if defactorize(triple.t, triple.theta, triple.eta) != p:
            return "fail", {"error": "defactorize(factorize(p)) != p",
                            "group": group}
        tgens, generic = factorization_triple_ring(group)
        q = defactorize(generic.t, generic.theta, generic.eta)
        if factorize(q, group) != generic:
            return "fail", {"error": "factorize(defactorize(c)) != c",
                            "group": group}
    return "pass", {"groups": ["su11", "su11-minus"],
                    "round_trips": ["factorize then defactorize",
                                    "defactorize then factorize"]}


def _check_isomer_convention(config: RunConfig, corrupt: bool):
    # A single literal formula triple cannot serve both isomers: writing
    # beta for the upper-right entry, the shared candidate below matches the
    # shipped factorization only componentwise, differently per group.  Each
    # group therefore ships its own triple, pinned by the round-trip checks.
    expected = {
        "su11": {"t": False, "theta": True, "eta": False},
        "su11-minus": {"t": True, "theta": False, "eta": False},
    }
    matches: Dict[str, Dict[str, bool]] = {}
    for group, label in (("su11", "su11"), ("su11_minus", "su11-minus")):
        gens, pts = su11_chart_ring(group)
        p = pts[0]
        a, b = p.a, p.beta
        abar, bbar = a.star(), b.star()
        half = gens.scalar(GR(Fraction(1, 2), 0))
        ihalf = gens.scalar(GR(0, Fraction(1, 2)))
        t_lit = a * (gens.one() - ihalf * b * bbar)
        theta_lit = half * (bbar * a + b * abar)
        eta_lit = half * (bbar * a - b * abar)
        got = factorize(p, group)
        matches[label] = {
            "t": got.t == t_lit,
            "theta": got.theta == theta_lit,
            "eta": got.eta == eta_lit,
        }
    status = "pass" if matches == expected else "fail"
    detail = {
        "shared_candidate": {
            "t": "a*(1 - (i/2)*beta*star(beta))",
            "theta": "(star(beta)*a + beta*star(a))/2",
            "eta": "(star(beta)*a - beta*star(a))/2",
        },
        "componentwise_match": matches,
        "resolution": "no single candidate triple factors both isomers; "
                      "each group uses formulas derived from its own "
                      "constraint, verified by the round-trip check",
    }
    return status, detail


def _span_monomials(group: str, bound: int):
    nmask = 1 << len(ODD_COORDS[group])
    for m in range(-bound, bound + 1):
        for mask in range(nmask):
            if group == "su11" and m == 0 and mask == 0b11:
                continue
            yield m, mask


def _check_pw_span(group: str):
    def run(config: RunConfig, corrupt: bool):
        one = _one(config)
        count = 0
        for m, mask in _span_monomials(group, config.weights):
            f = Section(group, {(m, mask): one})
            res = expand(f)
            if not res.residual.is_zero():
                return "fail", {"error": "nonzero residual", "m": m,
                                "mask": mask}
            if reconstruct(res.coefficients, group) != f:
                return "fail", {"error": "reconstruction mismatch", "m": m,
                                "mask": mask}
            count += 1
        return "pass", {"group": group, "weight_bound": config.weights,
                        "monomials": count}
    return run


def _check_pw_residual(config: RunConfig, corrupt: bool):
    f = Section("su11", {(0, 0b11): _one(config)})
    res = expand(f)
    if res.coefficients or res.residual != f:
        return "fail", {"error": "the weight-zero theta*eta monomial no "
                                 "longer reproduces the documented residual"}
    return "expected-discrepancy", {
        "monomial": "theta*eta at weight 0",
        "residual": "the monomial itself, exactly",
        "note": "outside listed span; reported as a finding, not a failure",
    }


def _random_even_invertible(gens: GeneratorSet, rng: random.Random) -> SuperMatrix:
    masks_even = [m for m in range(16) if bin(m).count("1") % 2 == 0]
    masks_odd = [m for m in range(16) if bin(m).count("1") % 2 == 1]

    def entry(odd_entry):
        masks = masks_odd if odd_entry else masks_even
        terms = {}
        for mask in rng.sample(masks, rng.randint(1, 4)):
            c = GR(rng.randint(-3, 3), rng.randint(-3, 3))
            if not c.is_zero():
                terms[((), mask)] = c
        return gens.element(terms)

    rows = [[entry(False), entry(True)], [entry(True), entry(False)]]
    for i in (0, 1):
        if rows[i][i].body().is_zero():
            rows[i][i] = rows[i][i] + gens.scalar(GR(rng.randint(1, 3), 0))
    return SuperMatrix(1, 1, rows)


def _check_berezinian(config: RunConfig, corrupt: bool):
    gens = GeneratorSet(["x0", "x1", "x2", "x3"])
    rng = random.Random(config.seed + 1)
    for _ in range(200):
        a = _random_even_invertible(gens, rng)
        b = _random_even_invertible(gens, rng)
        if berezinian(a * b) != berezinian(a) * berezinian(b):
            return "fail", {"error": "multiplicativity failed on a random "
                                     "pair"}
    for group, label in (("su11", "su11"), ("su11_minus", "su11-minus")):
        cgens, pts = su11_chart_ring(group)
        if berezinian(pts[0].matrix()) != cgens.one():
            return "fail", {"error": "constrained point has berezinian != 1",
                            "group": label}
    return "pass", {"random_pairs": 200, "odd_generators": 4,
                    "constrained_points": ["su11", "su11-minus"],
                    "seed": config.seed + 1}


_VERIFY_CHECKS = [
    ("structure-constants", _check_structure_constants),
    ("representation-identities", _check_representation_identities),
    ("intertwiner-spaces", _check_intertwiners),
    ("decomposition-oracle", _check_decomposition_oracle),
    ("involution-rho", _check_involution_rho),
    ("involution-sigma", _check_involution_sigma),
    ("factorization-round-trip", _check_factorization),
    ("isomer-convention", _check_isomer_convention),
    ("peter-weyl-span-s11", _check_pw_span("s11")),
    ("peter-weyl-span-su11", _check_pw_span("su11")),
    ("peter-weyl-weight-zero-residual", _check_pw_residual),
    ("berezinian", _check_berezinian),
]


def cmd_verify(config: RunConfig, corrupt: bool = False) -> Tuple[dict, int]:
    checks = []
    for name, fn in _VERIFY_CHECKS:
        try:
            status, detail = fn(config, corrupt)
        except Exception as exc:  # a crashed check is a failed check
            status = "fail"
            detail = {"error": "%s: %s" % (type(exc).__name__, exc)}
        checks.append({"name": name, "status": status, "detail": detail})
    failures = sorted(c["name"] for c in checks if c["status"] == "fail")
    report = {
        "command": "verify",
        "config": config.to_json(),
        "checks": checks,
        "failing": failures,
        "status": "fail" if failures else "pass",
    }
    return report, (1 if failures else 0)


# --- rep / point / pw commands ---------------------------------------------


def cmd_rep(action: str, path: str, config: RunConfig) -> Tuple[dict, int]:
    obj = _load_json(path)
    try:
        rep = representation_from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc))
    if action == "validate":
        problems = validate_representation(rep)
        report = {
            "command": "rep-validate",
            "algebra": rep.algebra,
            "dim": rep.dim,
            "valid": not problems,
            "problems": problems,
        }
        return report, (0 if not problems else 1)
    decomp = decompose_s11 if rep.algebra == "s11" else decompose_su11
    report_obj = decomp(rep)
    return report_obj.to_json(), 0


def cmd_point(action: str, path: str, group_flag: str, config: RunConfig,
              ) -> Tuple[dict, int]:
    obj = _load_json(path)
    if action == "involute":
        if group_flag == "s11":
            w, eta = _parse_pair(obj)
            w2, eta2 = rho_s11(w, eta)
            return {"w": w2.to_json(), "eta": eta2.to_json()}, 0
        p = _parse_point(obj, GROUP_TAGS[group_flag])
        return sigma_su(p).to_json(), 0
    if group_flag == "s11":
        raise InputError("--group s11 only makes sense for involute")
    group = GROUP_TAGS[group_flag]
    p = _parse_point(obj, group)
    if action == "check":
        member, diag = membership(p, group)
        report = {
            "command": "point-check",
            "group": group_flag,
            "member": member,
            "diagnostic": diag,
        }
        return report, 0
    # factorize; membership is a precondition and failures exit with code 1
    triple = factorize(p, group)
    return triple.to_json(), 0


def cmd_pw(args, config: RunConfig) -> Tuple[dict, int]:
    if args.pw_action == "expand":
        obj = _load_json(args.file)
        try:
            section = section_from_json(obj)
        except ValueError as exc:
            raise InputError(str(exc))
        res = expand(section)
        report = res.to_json()
        if not res.residual.is_zero():
            report["note"] = "outside listed span"
        return report, 0
    # coeffs
    if args.adjoint:
        if args.m is not None or args.sign is not None:
            raise InputError("--adjoint excludes --m and --sign")
        rep = make_adjoint_su11()
        desc = {"type": "adjoint"}
    else:
        if args.m is None or args.sign is None:
            raise InputError("coeffs needs either --adjoint or both --m "
                             "and --sign")
        if args.m == 0:
            raise ValueError("weight 0 with a sign is degenerate; the "
                             "weight-0 coefficients come from --adjoint")
        rep = make_pi_m(args.m, args.sign, mode=config.scalar, tol=config.tol)
        desc = {"type": "pi", "m": args.m, "sign": args.sign}
    sections = matrix_coefficients(rep)
    entries = []
    for i in range(rep.dim):
        for j in range(rep.dim):
            sec = sections[(i, j)]
            if sec.is_zero():
                continue
            entries.append({"i": i, "j": j, "section": sec.to_json()})
    report = {
        "command": "pw-coeffs",
        "group": "su11",
        "rep": desc,
        "entries": entries,
    }
    return report, 0


# --- argument parsing -------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scalar", choices=["exact", "float"],
                        default="exact", help="scalar mode (default exact)")
    parser.add_argument("--tol", type=float, default=None,
                        help="comparison tolerance; required in float mode")
    parser.add_argument("--weights", type=int, default=10, metavar="N",
                        help="weight bound for suite checks (default 10)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")
    parser.add_argument("--out", default=None, metavar="FILE",
                        help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercircle",
        description="Exact computations with the compact 1|1 supergroups "
                    "and their representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    _add_common(p_verify)
    p_verify.add_argument("--self-test-corrupt", action="store_true",
                          help=argparse.SUPPRESS)

    p_rep = sub.add_parser("rep", help="representation tools")
    rep_sub = p_rep.add_subparsers(dest="rep_action", required=True)
    for name, blurb in (("validate", "report defining-relation diagnostics"),
                        ("decompose", "split into irreducible and "
                                      "indecomposable blocks")):
        p = rep_sub.add_parser(name, help=blurb)
        p.add_argument("file", help="representation JSON file")
        _add_common(p)

    p_point = sub.add_parser("point", help="group point tools")
    point_sub = p_point.add_subparsers(dest="point_action", required=True)
    for name, blurb in (("check", "membership test with diagnostic"),
                        ("factorize", "factorization coordinates (t, theta, "
                                      "eta)"),
                        ("involute", "apply the real-structure involution")):
        p = point_sub.add_parser(name, help=blurb)
        p.add_argument("file", help="point JSON file")
        groups = ["sl11", "su11", "su11-minus"]
        if name == "involute":
            groups.append("s11")
        p.add_argument("--group", choices=groups, required=True)
        _add_common(p)

    p_pw = sub.add_parser("pw", help="matrix coefficients and expansion")
    pw_sub = p_pw.add_subparsers(dest="pw_action", required=True)
    p_coeffs = pw_sub.add_parser("coeffs", help="entry sections of a "
                                                "coefficient block")
    p_coeffs.add_argument("--m", type=int, default=None,
                          help="weight of the block")
    p_coeffs.add_argument("--sign", choices=["+", "-"], default=None,
                          help="sign of the block")
    p_coeffs.add_argument("--adjoint", action="store_true",
                          help="the weight-zero 1|2 block instead")
    _add_common(p_coeffs)
    p_expand = pw_sub.add_parser("expand", help="expand a section file "
                                                "exactly")
    p_expand.add_argument("file", help="section JSON file")
    _add_common(p_expand)

    return parser


def _dispatch(args: argparse.Namespace, config: RunConfig) -> Tuple[dict, int]:
    if args.command == "verify":
        return cmd_verify(config, corrupt=args.self_test_corrupt)
    if args.command == "rep":
        return cmd_rep(args.rep_action, args.file, config)
    if args.command == "point":
        return cmd_point(args.point_action, args.file, args.group, config)
    return cmd_pw(args, config)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig(scalar=args.scalar, tol=args.tol,
                           weights=args.weights, seed=args.seed, out=args.out)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    try:
        report, code = _dispatch(args, config)
    except InputError as exc:
        report, code = {"error": str(exc)}, 2
    except ValueError as exc:
        report, code = {"error": str(exc)}, 1
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print("error: cannot write %s: %s" % (config.out, exc),
                  file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
